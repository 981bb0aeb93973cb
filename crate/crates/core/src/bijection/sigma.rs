use super::{Analyzer, Direction, EdgeBijection};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poset::Poset;

/// A map `σ` from strict pairs to nonzero scalars, in `Poset::strict_pairs` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMap {
    values: Vec<Scalar>,
}

impl SignMap {
    pub fn new(values: Vec<Scalar>) -> Result<SignMap> {
        if values.iter().any(Scalar::is_zero) {
            return Err(Error::InvalidParameter(
                "sign map takes the value zero".into(),
            ));
        }
        Ok(SignMap { values })
    }

    pub fn constant(field: Field, size: usize) -> SignMap {
        SignMap {
            values: vec![field.one(); size],
        }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn get(&self, poset: &Poset, x: usize, y: usize) -> &Scalar {
        &self.values[poset.pair_index(x, y).expect("strict pair")]
    }
}

/// `e_ab e_cd` as a pair, if nonzero.
fn product((a, b): (usize, usize), (c, d): (usize, usize)) -> Option<(usize, usize)> {
    (b == c).then_some((a, d))
}

impl Analyzer<'_> {
    /// `σ(x, y) = 1` for minimal `x`; otherwise the sign of the direction of
    /// `θ` on any maximal chain through `x` and `y`.
    pub fn build_compatible_sigma(&self, theta: &EdgeBijection, field: Field) -> Result<SignMap> {
        self.check_size(theta);
        let p = self.poset;
        let directions = self.directions(theta);
        if let Some(i) = directions.iter().position(|&d| d == Direction::None) {
            return Err(Error::Precondition(format!(
                "bijection is not monotone on {}",
                self.chains[i].labels(p).join("<")
            )));
        }
        let values = p
            .strict_pairs()
            .iter()
            .map(|&(x, y)| {
                if p.is_min(x) {
                    return Ok(field.one());
                }
                // x is not minimal, so every chain through x and y has at least three elements
                let i = self
                    .chains
                    .iter()
                    .position(|c| c.contains(x) && c.contains(y))
                    .expect("every strict pair lies on a maximal chain");
                match directions[i] {
                    Direction::Increasing => Ok(field.one()),
                    Direction::Decreasing => Ok(-field.one()),
                    other => Err(Error::Precondition(format!(
                        "direction {other} on a chain with a non-minimal lower element"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SignMap { values })
    }

    /// Checks both product rules over all `x < y < z`.
    pub fn is_compatible(&self, sigma: &SignMap, theta: &EdgeBijection) -> bool {
        self.check_size(theta);
        let p = self.poset;
        let n = p.len();
        for x in 0..n {
            for y in (0..n).filter(|&y| p.lt(x, y)) {
                for z in (0..n).filter(|&z| p.lt(y, z)) {
                    let (xy, yz, xz) = (
                        self.img(theta, x, y),
                        self.img(theta, y, z),
                        self.img(theta, x, z),
                    );
                    let prod = sigma.get(p, x, y) * sigma.get(p, y, z);
                    let s_xz = sigma.get(p, x, z);
                    if product(xy, yz) == Some(xz) && *s_xz != prod {
                        return false;
                    }
                    if product(yz, xy) == Some(xz) && *s_xz != -&prod {
                        return false;
                    }
                }
            }
        }
        true
    }
}
