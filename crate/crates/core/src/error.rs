use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("relation is not antisymmetric: {0} and {1} are mutually below each other")]
    Cycle(String, String),

    #[error("poset is not connected: {0} cannot be reached from {1}")]
    Disconnected(String, String),

    #[error("poset has no elements")]
    Empty,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched operands: {0}")]
    Mismatch(String),

    #[error("not a multiplicative cocycle at {0}")]
    Cocycle(String),

    #[error("element is not invertible: zero diagonal entry at {0}")]
    NotInvertible(String),

    #[error("not a proper decomposition: {0}")]
    NotProperWitness(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("|B| = {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("class map is not well defined: {0}")]
    WellDefinedness(String),

    #[error("support map extraction failed: {0}")]
    Extraction(String),

    #[error("set is not closed under composition: elements {0} and {1}")]
    NotClosed(usize, usize),

    #[error("set is not a group: {0}")]
    NotAGroup(String),

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
}
