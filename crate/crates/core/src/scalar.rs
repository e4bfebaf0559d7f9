//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient field of a polynomial ring: the rationals or a prime field
/// with modulus `2 <= p < 2^31`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Checks the modulus of a prime field; `Rational` is always valid.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Field::Rational => Ok(()),
            Field::Prime(p) => {
                if *p < 2 || *p >= (1 << 31) {
                    return Err(format!("modulus {p} out of range [2, 2^31)"));
                }
                if !is_prime(*p) {
                    return Err(format!("modulus {p} is not prime"));
                }
                Ok(())
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                let val = digits.first().copied().unwrap_or(0) as u32;
                Scalar::Mod { p: *p, val }
            }
        }
    }

    /// The fraction a/b mapped into the field. Fails when b maps to zero.
    pub fn from_fraction(&self, a: &BigInt, b: &BigInt) -> Result<Scalar, String> {
        let den = self.from_bigint(b);
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(self.from_bigint(a).div(&den))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the coefficient field. Rationals are kept in lowest terms
/// with positive denominator; prime-field residues are reduced to `[0, p)`.
///
/// Mixing elements of different fields is an internal error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { p: u32, val: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { val, .. } => *val == 1,
        }
    }

    /// True for rationals strictly below zero; prime-field residues have no sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { p, val: a }, Scalar::Mod { p: q, val: b }) => {
                assert_eq!(p, q, "scalar moduli differ");
                Scalar::Mod {
                    p: *p,
                    val: (((*a as u64) + (*b as u64)) % (*p as u64)) as u32,
                }
            }
            _ => panic!("scalar field modes differ"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { p, val } => Scalar::Mod {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { p, val: a }, Scalar::Mod { p: q, val: b }) => {
                assert_eq!(p, q, "scalar moduli differ");
                Scalar::Mod {
                    p: *p,
                    val: (((*a as u64) * (*b as u64)) % (*p as u64)) as u32,
                }
            }
            _ => panic!("scalar field modes differ"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { p, val } => Scalar::Mod {
                p: *p,
                // Fermat: val^(p-2) mod p. p < 2^31 keeps products in u64.
                val: mod_pow(*val as u64, (*p as u64) - 2, *p as u64) as u32,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Exact evaluation as a rational, available only in `Rational` mode.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { val, .. } => write!(f, "{val}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalization() {
        let f = Field::Rational;
        let half = f.from_fraction(&BigInt::from(2), &BigInt::from(4)).unwrap();
        let other = f.from_fraction(&BigInt::from(-1), &BigInt::from(-2)).unwrap();
        assert_eq!(half, other);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn prime_field_reduction() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.from_i64(10).to_string(), "3");
        let x = f.from_i64(3);
        assert!(x.mul(&x.inv()).is_one());
    }

    #[test]
    fn modulus_validation() {
        assert!(Field::Prime(6).validate().is_err());
        assert!(Field::Prime(1).validate().is_err());
        assert!(Field::Prime(2147483647).validate().is_ok()); // 2^31 - 1 is prime
        assert!(Field::Prime(7).validate().is_ok());
    }

    #[test]
    fn field_arithmetic_matches_rationals_mod_p() {
        let p = 101u32;
        let q = Field::Rational;
        let g = Field::Prime(p);
        for a in -10i64..10 {
            for b in -10i64..10 {
                let sum_q = q.from_i64(a).add(&q.from_i64(b));
                let prod_q = q.from_i64(a).mul(&q.from_i64(b));
                let reduce = |s: &Scalar| {
                    let r = s.as_rational().unwrap();
                    assert!(r.is_integer());
                    g.from_bigint(r.numer())
                };
                assert_eq!(reduce(&sum_q), g.from_i64(a).add(&g.from_i64(b)));
                assert_eq!(reduce(&prod_q), g.from_i64(a).mul(&g.from_i64(b)));
            }
        }
    }
}
