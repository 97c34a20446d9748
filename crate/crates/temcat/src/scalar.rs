//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Everything downstream assumes exact equality, so there is no floating
//! point anywhere in this crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// An exact scalar field: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    pub fn fp(p: u64) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(Field::Fp(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, v: 1 },
        }
    }

    pub fn from_i64(field: Field, n: i64) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v }
            }
        }
    }

    /// Parses "p/q" rationals, plain integers, or residues mod p.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match field {
            Field::Q => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad integer {num:?}")))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad integer {den:?}")))?;
                if d.is_zero() {
                    return Err(Error::Schema(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            Field::Fp(p) => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad residue {s:?}")))?;
                Ok(Scalar::from_i64(Field::Fp(p), n))
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: (a + b) % p,
            },
            _ => panic!("scalar field mismatch in add"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: (p - v) % p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero scalar".into()));
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: pow_mod(*v, p - 2, *p),
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// Canonical text form: integers as-is, non-integral rationals as "p/q"
    /// with gcd(p,q)=1 and q>0, prime-field residues as 0..p-1.
    pub fn canonical_string(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else if r.denom().is_negative() {
                    // BigRational normalizes to positive denominators, but be safe.
                    format!("{}/{}", -r.numer(), -r.denom())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Scalar::parse(Field::Q, "1/3").unwrap();
        let b = Scalar::parse(Field::Q, "1/6").unwrap();
        assert_eq!(a.add(&b), Scalar::parse(Field::Q, "1/2").unwrap());
        assert_eq!(a.add(&b).canonical_string(), "1/2");
        assert_eq!(a.mul(&b).canonical_string(), "1/18");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::fp(7).unwrap();
        let x = Scalar::from_i64(f, 3);
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert!(Field::fp(6).is_err());
    }

    #[test]
    fn negative_parse_in_fp() {
        let f = Field::fp(5).unwrap();
        assert_eq!(Scalar::parse(f, "-1").unwrap(), Scalar::from_i64(f, 4));
    }
}
