//! Exact coefficient fields.
//!
//! Two fields are provided: prime fields `F_p` with word-sized elements and
//! the rationals backed by arbitrary precision integers. All algorithms in the
//! crate are generic over [`Field`].

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u32 = 32003;

/// An exact field. Elements are plain values; all operations go through the
/// field object so that prime fields can carry their modulus.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// The class of `num/den`; `None` when `den` is not invertible.
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem> {
        let d = self.from_bigint(den);
        let di = self.inv(&d)?;
        Some(self.mul(&self.from_bigint(num), &di))
    }

    /// Characteristic, 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// Canonical text form. For prime fields the symmetric representative is
    /// used so that printed polynomials read naturally.
    fn format(&self, a: &Self::Elem) -> String;

    /// Whether the canonical text form starts with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn name(&self) -> String;
}

/// The prime field `F_p` with `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Option<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return None;
        }
        Some(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u32 {
        v.rem_euclid(self.p as i128) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if *a >= *b {
            *a - *b
        } else {
            *a + self.p - *b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i128(v as i128)
    }
    fn from_bigint(&self, v: &BigInt) -> u32 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("reduced residue fits in u32")
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn format(&self, a: &u32) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - *a)
        } else {
            a.to_string()
        }
    }
    fn is_negative(&self, a: &u32) -> bool {
        *a > self.p / 2
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-100..=100))
    }
    fn name(&self) -> String {
        "QQ".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let k = PrimeField::default();
        for a in [1u32, 2, 3, 1000, 32002] {
            let ai = k.inv(&a).unwrap();
            assert_eq!(k.mul(&a, &ai), 1);
        }
        assert_eq!(k.inv(&0), None);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(32004).is_none());
        assert!(PrimeField::new(7).is_some());
    }

    #[test]
    fn symmetric_printing() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.format(&6), "-1");
        assert_eq!(k.format(&3), "3");
        assert_eq!(k.from_i64(-1), 6);
    }

    #[test]
    fn fraction_with_zero_denominator() {
        let k = PrimeField::new(7).unwrap();
        assert!(k.from_fraction(&BigInt::from(1), &BigInt::from(14)).is_none());
        assert_eq!(k.from_fraction(&BigInt::from(1), &BigInt::from(2)), Some(4));
        assert!(Rationals.from_fraction(&BigInt::from(1), &BigInt::from(0)).is_none());
    }
}
