//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Elements are carried as [`Scalar`] values and every operation goes through
//! the [`FieldSpec`] that owns them, so a modulus never has to be stored per
//! element.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// Descriptor of the base field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// An element of some [`FieldSpec`].
///
/// `Modular` values are always reduced into `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(u32),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field `F_p`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Modular(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Modular(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Modular(r.to_u32().expect("residue below modulus"))
            }
        }
    }

    /// `num / den`, failing when the denominator vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::NotInField(format!("{num}/{den}"), *self));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| AlgebraError::NotInField(format!("{num}/{den}"), *self))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
        }
    }

    /// Whether `s` is a canonical element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Modular(v)) => v < p,
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        s.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldSpec::Prime(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Modular(x)) => Scalar::Modular(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldSpec::Prime(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Some(Scalar::Rational(x.recip())),
            (FieldSpec::Prime(p), Scalar::Modular(x)) => {
                // Fermat: x^(p-2)
                Some(Scalar::Modular(pow_mod(*x as u64, *p as u64 - 2, *p as u64) as u32))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn pow(&self, a: &Scalar, e: u32) -> Scalar {
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// The integer `n` as a field element (used for exponents in derivatives).
    pub fn from_u64(&self, n: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Modular((n % *p as u64) as u32),
        }
    }
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Modular(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Modular(x) => *x == 1,
        }
    }

    /// Sign used when printing: modular values use the symmetric residue.
    pub(crate) fn display_parts(&self, field: &FieldSpec) -> (bool, String) {
        match (self, field) {
            (Scalar::Rational(x), _) => (x.is_negative(), x.abs().to_string()),
            (Scalar::Modular(x), FieldSpec::Prime(p)) => {
                if *p > 2 && *x > p / 2 {
                    (true, (p - x).to_string())
                } else {
                    (false, x.to_string())
                }
            }
            (Scalar::Modular(x), FieldSpec::Rationals) => (false, x.to_string()),
        }
    }

    /// Canonical text form in `field` (symmetric residue for `F_p`).
    pub fn to_string_in(&self, field: &FieldSpec) -> String {
        let (neg, abs) = self.display_parts(field);
        if neg {
            format!("-{abs}")
        } else {
            abs
        }
    }
}
