//! Coefficient fields: `Q` and `GF(p)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactAlgError;
use crate::rat::{format_rat, Rat};

/// The coefficient field of a computation. Characteristic `0` means `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// An element of a [`Field`]. Residues are stored reduced in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rat),
    Mod(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `GF(p)`; `p` must be a prime below `2^31`.
    pub fn prime(p: u32) -> Result<Self, ExactAlgError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(ExactAlgError::BadCharacteristic(p));
        }
        Ok(Field::Prime(p))
    }

    /// `0` gives `Q`, a prime `p` gives `GF(p)`.
    pub fn from_characteristic(c: u32) -> Result<Self, ExactAlgError> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::from_integer(v.into())),
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u32),
        }
    }

    fn reduce_bigint(p: u32, v: &BigInt) -> u32 {
        v.mod_floor(&BigInt::from(p))
            .to_u32()
            .expect("residue fits")
    }

    /// Image of a rational; fails if the denominator vanishes mod `p`.
    pub fn from_rat(&self, r: &Rat) -> Result<Scalar, ExactAlgError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(r.clone())),
            Field::Prime(p) => {
                let num = Self::reduce_bigint(*p, r.numer());
                let den = Self::reduce_bigint(*p, r.denom());
                if den == 0 {
                    return Err(ExactAlgError::DenominatorVanishes(format_rat(r), *p));
                }
                Ok(Scalar::Mod(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    /// Maps a scalar from another field into this one (`Q -> GF(p)`, or identity).
    pub fn convert(&self, s: &Scalar) -> Result<Scalar, ExactAlgError> {
        match (self, s) {
            (_, Scalar::Rational(r)) => self.from_rat(r),
            (Field::Prime(p), Scalar::Mod(v)) => Ok(Scalar::Mod(v % p)),
            (Field::Rational, Scalar::Mod(_)) => Err(ExactAlgError::FieldMismatch),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, *p)),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(inv_mod(*x, *p)),
            _ => panic!("scalar does not belong to {self:?}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Signed integer representative for display (`p - 1` shows as `-1`).
    pub fn format(&self, a: &Scalar) -> String {
        a.to_string_in(*self)
    }
}

impl Scalar {
    pub(crate) fn to_string_in(&self, field: Field) -> String {
        match (self, field) {
            (Scalar::Rational(r), _) => format_rat(r),
            (Scalar::Mod(v), Field::Prime(p)) => {
                if *v as u64 * 2 > p as u64 {
                    format!("-{}", p - v)
                } else {
                    v.to_string()
                }
            }
            (Scalar::Mod(v), Field::Rational) => v.to_string(),
        }
    }

    /// Sign for rationals, residue class test for primes.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&format_rat(r)),
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn characteristics() {
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_characteristic(2).unwrap(), Field::Prime(2));
        assert!(Field::from_characteristic(4).is_err());
        assert!(Field::from_characteristic(1).is_err());
        assert_eq!(Field::Prime(7).characteristic(), 7);
    }

    #[test]
    fn prime_field_axioms() {
        let f = Field::prime(11).unwrap();
        for a in 0..11 {
            let x = f.from_i64(a);
            assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
            if a != 0 {
                assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
            }
        }
        assert_eq!(f.format(&f.from_i64(-1)), "-1");
        assert_eq!(f.from_rat(&ratio(1, 2)).unwrap(), Scalar::Mod(6));
        assert!(Field::Prime(2).from_rat(&ratio(1, 2)).is_err());
    }

    #[test]
    fn rational_ops() {
        let q = Field::Rational;
        let a = q.from_rat(&ratio(2, 3)).unwrap();
        assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
        assert_eq!(q.format(&q.sub(&q.zero(), &a)), "-2/3");
        assert!(q.inv(&q.zero()).is_none());
    }
}
