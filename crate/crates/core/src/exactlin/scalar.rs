//! Exact scalars: rationals in lowest terms, or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
#[derive(Default)]
pub enum Field {
    #[serde(rename = "Q")]
    #[default]
    Rational,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime { p } => write!(f, "F{p}"),
        }
    }
}

/// Largest modulus accepted; keeps products of residues inside `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime { p } => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(n.into())),
            Field::Prime { p } => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Input("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Prime { p } => {
                let pm = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pm) + &pm) % &pm;
                    r.to_u64().unwrap_or(0)
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::Input(format!("denominator divisible by {p}")));
                }
                let n = Scalar::Fp {
                    v: reduce(num),
                    p: *p,
                };
                Ok(&n * &Scalar::Fp { v: d, p: *p }.inv())
            }
        }
    }

    /// Parses `"n"`, `"-n"` or `"n/d"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Input(format!("malformed scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                BigInt::from_str(a.trim()).map_err(|_| bad())?,
                BigInt::from_str(b.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        self.from_ratio(&num, &den)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime { p: *p },
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                        debug_assert_eq!(p, p2, "mixed moduli");
                        Scalar::Fp {
                            v: $fp(*a, *b, *p),
                            p: *p,
                        }
                    }
                    _ => panic!("arithmetic across different fields"),
                }
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a, b, p| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a, b, p| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a, b, p| a * b % p
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

impl Scalar {
    /// Sign for rationals (0 for residues); used only for display ordering.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rational;
        let a = q.parse("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!((&a * &a.inv()).to_string(), "1");
    }

    #[test]
    fn residues_stay_in_range() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Fp { v: 6, p: 7 });
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Fp { v: 4, p: 7 });
        assert!(f.parse("1/7").is_err());
        assert!(Field::prime(9).is_err());
    }
}
