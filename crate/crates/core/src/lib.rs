//! Edge bijections of finite posets and Lie automorphisms of their incidence
//! algebras.
//!
//! For a finite connected poset `X` the crate computes the groups `M(X)` of
//! monotone, `AM(X)` of admissible monotone and `P(X)` of proper bijections
//! of `B = {e_xy : x < y}`. It decides whether every Lie automorphism of
//! `I(X, K)` is proper by comparing `AM(X)` with `P(X)`, and it checks the
//! surrounding algebra over exact rationals or a prime field.
//!
//! ## Examples
//!
//! ```text
//! examples/
//! ├── poset_basics.rs        parsing, extremal elements, chains, weak crowns
//! ├── incidence_algebra.rs   convolution, inverses, [I, I] and the center
//! ├── lie_automorphisms.rs   induced maps and the proper decomposition check
//! ├── admissibility.rs       the counting identity on a closed semiwalk
//! ├── crown_groups.rs        M, AM and P on crowns, dihedral and parity structure
//! ├── chain_classes.rs       linked chain classes and support maps
//! └── decide_proper.rs       the all-proper decision across families
//! ```
//!
//! ```bash
//! cargo run --release --example crown_groups
//! ```
//!
//! ```
//! use incidence_lie::{families, Analyzer, EnumerationOptions};
//!
//! let p = families::crown(3).unwrap();
//! let verdict = Analyzer::new(&p).decide_all_proper(&EnumerationOptions::default()).unwrap();
//! assert!(!verdict.all_proper);
//! assert_eq!((verdict.am_order, verdict.p_order), (72, 12));
//! ```

pub mod bijection;
pub mod classes;
pub mod cli;
pub mod error;
pub mod families;
pub mod field;
pub mod groups;
pub mod incidence;
pub mod linalg;
pub mod poset;
pub mod verify;

pub use bijection::{Analyzer, CountStats, Direction, EdgeBijection, EnumerationOptions, SignMap};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use incidence::{IncidenceAlgebra, IncidenceElement, LinearMap};
pub use poset::{MapKind, MaximalChain, Poset, PosetMap, Semiwalk, WeakCrown};
