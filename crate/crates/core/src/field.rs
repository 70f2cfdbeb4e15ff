//! Arithmetic in prime fields `F_p` with word-sized moduli.
//!
//! Polynomials and matrices store coefficients as bare `u32` residues and
//! carry a single [`FieldPrime`] alongside them; the raw helpers on
//! `FieldPrime` (`add`, `mul`, `inv`, ...) are what the hot loops use.
//! [`FieldElement`] is the checked value type for callers that want the
//! modulus attached to every element.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted modulus (exclusive).
pub const MAX_MODULUS: u32 = 1 << 31;

/// Default prime for experiments.
pub const DEFAULT_PRIME: u32 = 101;

/// Larger prime for runs where genericity failures are suspected.
pub const LARGE_PRIME: u32 = 65521;

/// A verified prime modulus `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldPrime(u32);

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let p = p as u64;
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidModulus(p, "modulus must be below 2^31"));
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p, "modulus is not prime"));
        }
        Ok(FieldPrime(p))
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary signed integer to its canonical residue.
    #[inline]
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// `a * b + c`, one reduction.
    #[inline]
    pub fn mul_add(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 * b as u64 + c as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by extended Euclid. Returns `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        let (mut r0, mut r1) = (self.0 as i64, (a % self.0) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(t0))
    }

    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % self.0 as u64) as u32,
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// Uniform residue in `[0, p)`.
    pub fn random_raw<R: Rng + ?Sized>(self, rng: &mut R) -> u32 {
        rng.random_range(0..self.0)
    }

    /// Uniform residue in `[1, p)`.
    pub fn random_nonzero_raw<R: Rng + ?Sized>(self, rng: &mut R) -> u32 {
        rng.random_range(1..self.0)
    }

    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> FieldElement {
        FieldElement {
            value: self.random_raw(rng),
            modulus: self,
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> FieldElement {
        FieldElement {
            value: self.random_nonzero_raw(rng),
            modulus: self,
        }
    }
}

impl TryFrom<u32> for FieldPrime {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        FieldPrime::new(p)
    }
}

impl From<FieldPrime> for u32 {
    fn from(p: FieldPrime) -> u32 {
        p.0
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

/// An element of `F_p` with its modulus attached. Always canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: FieldPrime,
}

#[allow(clippy::should_implement_trait)]
impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> FieldPrime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: FieldElement) -> Result<FieldPrime> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.value(),
                other.modulus.value(),
            ));
        }
        Ok(self.modulus)
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.check(other)?;
        Ok(FieldElement {
            value: p.add(self.value, other.value),
            modulus: p,
        })
    }

    pub fn sub(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.check(other)?;
        Ok(FieldElement {
            value: p.sub(self.value, other.value),
            modulus: p,
        })
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.check(other)?;
        Ok(FieldElement {
            value: p.mul(self.value, other.value),
            modulus: p,
        })
    }

    pub fn neg(self) -> FieldElement {
        FieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<FieldElement> {
        let value = self.modulus.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement {
            value,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn el(p: u32, v: u64) -> FieldElement {
        FieldPrime::new(p).unwrap().element(v)
    }

    #[test]
    fn rejects_composites_and_huge_moduli() {
        assert!(FieldPrime::new(0).is_err());
        assert!(FieldPrime::new(1).is_err());
        assert!(FieldPrime::new(91).is_err());
        assert!(FieldPrime::new(65521).is_ok());
        assert!(FieldPrime::new(2_147_483_647).is_ok());
        assert!(FieldPrime::new(2_147_483_659).is_err());
        assert!(FieldPrime::new(2_147_483_629).is_ok());
        assert!(FieldPrime::new(2_147_483_631).is_err());
    }

    #[test]
    fn add_examples() {
        assert_eq!(el(101, 50).add(el(101, 60)).unwrap().value(), 9);
        assert_eq!(el(101, 37).add(el(101, 0)).unwrap(), el(101, 37));
        assert_eq!(el(2, 1).add(el(2, 1)).unwrap().value(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(el(101, 50).mul(el(101, 60)).unwrap().value(), 71);
        assert_eq!(el(101, 42).mul(el(101, 1)).unwrap(), el(101, 42));
        assert_eq!(el(7, 3).mul(el(7, 5)).unwrap().value(), 1);
        // no overflow near the top of the range
        let p = FieldPrime::new(2_147_483_629).unwrap();
        let a = p.value() - 1;
        assert_eq!(p.mul(a, a), 1);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(el(7, 3).inv().unwrap().value(), 5);
        assert_eq!(el(101, 1).inv().unwrap().value(), 1);
        for x in 1..101 {
            assert_eq!(el(101, x).inv().unwrap().inv().unwrap(), el(101, x));
        }
        assert!(matches!(el(101, 0).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        assert!(matches!(
            el(7, 1).add(el(11, 1)),
            Err(Error::ModulusMismatch(7, 11))
        ));
        assert!(el(7, 1).mul(el(11, 1)).is_err());
    }

    #[test]
    fn random_nonzero_in_f2_is_one() {
        let p = FieldPrime::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert_eq!(p.random_nonzero(&mut rng).value(), 1);
        }
    }

    #[test]
    fn random_is_uniform_chi_square() {
        let p = FieldPrime::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let draws = 100_000usize;
        let mut counts = [0usize; 101];
        for _ in 0..draws {
            counts[p.random(&mut rng).value() as usize] += 1;
        }
        let expected = draws as f64 / 101.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 100 degrees of freedom; 99.9th percentile is about 149.4
        assert!(chi2 < 149.4, "chi2 = {chi2}");
    }

    #[test]
    fn random_nonzero_never_zero() {
        let p = FieldPrime::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100_000 {
            assert_ne!(p.random_nonzero(&mut rng).value(), 0);
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..65521, b in 0u64..65521, c in 0u64..65521) {
            let p = 65521;
            let (a, b, c) = (el(p, a), el(p, b), el(p, c));
            prop_assert_eq!(a.add(b)?.add(c)?, a.add(b.add(c)?)?);
            prop_assert_eq!(a.mul(b)?.mul(c)?, a.mul(b.mul(c)?)?);
            prop_assert_eq!(a.add(b)?, b.add(a)?);
            prop_assert_eq!(a.mul(b)?, b.mul(a)?);
            prop_assert_eq!(a.mul(b.add(c)?)?, a.mul(b)?.add(a.mul(c)?)?);
            prop_assert!(a.add(a.neg())?.is_zero());
            prop_assert!(a.sub(b)?.value() < p);
            if !a.is_zero() {
                prop_assert_eq!(a.mul(a.inv()?)?.value(), 1);
            }
        }
    }
}
