//! Exponent vectors.

use std::fmt;

use smallvec::SmallVec;

use crate::error::RingError;

/// Storage type for a single exponent.
pub type Exponent = u16;

/// Exponents at or above this bound are rejected by the Gröbner engine, so
/// the product of any two admissible monomials still fits in [`Exponent`].
pub const EXPONENT_GUARD: u32 = 1 << 15;

/// A monomial `x0^e0 * x1^e1 * ...` over a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 16]>,
    degree: u32,
}

impl Monomial {
    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn new(exps: &[u32]) -> Result<Self, RingError> {
        let mut v = SmallVec::with_capacity(exps.len());
        for &e in exps {
            if e > Exponent::MAX as u32 {
                return Err(RingError::ExponentOverflow(Exponent::MAX as u32 + 1));
            }
            v.push(e as Exponent);
        }
        Ok(Self::from_raw(v))
    }

    fn from_raw(exps: SmallVec<[Exponent; 16]>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// `x_i^e` in `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e as Exponent;
        m.degree = e;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0) as u32
    }

    /// Bit `i` (mod 64) is set when `x_i` occurs; used to reject divisibility fast.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Does `self` divide `other`?
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product; panics on exponent overflow (see [`Monomial::try_mul`]).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, RingError> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(
                a.checked_add(*b)
                    .ok_or(RingError::ExponentOverflow(Exponent::MAX as u32 + 1))?,
            );
        }
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_raw(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self::from_raw(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Copy with exponents permuted/embedded: output variable `j` takes the
    /// exponent of input variable `map[j]`, or 0 when `map[j]` is `None`.
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        Self::from_raw(map.iter().map(|src| src.map_or(0, |i| self.exps[i])).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!a.is_coprime(&b));
        assert!(m(&[0, 2, 0]).is_coprime(&a));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn overflow_is_reported() {
        let a = m(&[Exponent::MAX as u32]);
        assert!(a.try_mul(&m(&[1])).is_err());
        assert!(Monomial::new(&[70_000]).is_err());
    }
}
