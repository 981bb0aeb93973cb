//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field of an incidence algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`. Rejects composites and `p > 2^32` (products must fit in `u64`).
    pub fn prime(p: u64) -> Result<Field> {
        if p > u32::MAX as u64 {
            return Err(Error::InvalidParameter(format!("prime {p} is too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses `num/den` or a bare integer into this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("invalid scalar {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |v: BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((v % &m) + &m) % &m;
                    r.try_into().expect("residue fits in u64")
                };
                let n = Scalar::Prime {
                    value: reduce(num),
                    modulus: p,
                };
                let d = Scalar::Prime {
                    value: reduce(den),
                    modulus: p,
                };
                n.checked_div(&d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "q" | "Q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`].
///
/// Arithmetic between scalars of different fields is a logic error and panics;
/// containers check field agreement before combining values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    /// `num/den` for rationals, `value/1` for residues.
    pub fn to_fraction_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Prime { value, .. } => format!("{value}/1"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "arithmetic across different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: m,
                },
                Scalar::Prime {
                    value: b,
                    modulus: n,
                },
            ) => {
                let m = same_modulus(*m, *n);
                Scalar::Prime {
                    value: (a + b) % m,
                    modulus: m,
                }
            }
            _ => panic!("arithmetic across different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: m,
                },
                Scalar::Prime {
                    value: b,
                    modulus: n,
                },
            ) => {
                let m = same_modulus(*m, *n);
                Scalar::Prime {
                    value: mul_mod(*a, *b, m),
                    modulus: m,
                }
            }
            _ => panic!("arithmetic across different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let a = f.from_int(v);
            assert!((&a * &a.inverse().unwrap()).is_one());
        }
        assert_eq!(f.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!("fp:4".parse::<Field>().is_err());
        assert_eq!("fp:5".parse::<Field>().unwrap(), Field::Prime(5));
    }

    #[test]
    fn parse_fraction() {
        let q = Field::Rational;
        let half = q.parse_scalar("1/2").unwrap();
        assert_eq!(half.to_fraction_string(), "1/2");
        assert_eq!(q.parse_scalar("-6/4").unwrap().to_fraction_string(), "-3/2");
        assert_eq!(q.parse_scalar("1/0"), Err(Error::DivisionByZero));
        let f5 = Field::Prime(5);
        // 1/2 = 3 mod 5
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_int(3));
        assert_eq!(f5.parse_scalar("-1").unwrap(), f5.from_int(4));
    }

    #[test]
    fn negation_mod_p() {
        let f = Field::Prime(3);
        assert_eq!(-f.zero(), f.zero());
        assert_eq!(-f.one(), f.from_int(2));
        assert_eq!(&f.one() - &f.one(), f.zero());
    }
}
