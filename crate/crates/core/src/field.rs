//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Rationals use a two-tier representation. Values whose numerator and
//! denominator fit in an `i64` are stored inline; anything larger spills
//! into a boxed [`BigRational`]. The tier is a function of the value, so the
//! representation stays canonical and structural equality is value equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RingError;

/// Default prime for the modular backend.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    /// Residues modulo a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    /// Prime field, validating primality.
    pub fn prime(p: u32) -> Result<Self, RingError> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(RingError::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(Rational::zero()),
            Field::Prime(_) => FieldElement::Residue(0),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement::Rational(Rational::from_integer(n)),
            Field::Prime(p) => FieldElement::Residue(n.rem_euclid(p as i64) as u32),
        }
    }

    /// Embed an integer fraction `num/den`; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement, RingError> {
        match *self {
            Field::Rationals => {
                if den.is_zero() {
                    return Err(RingError::InvalidCoefficient("zero denominator".into()));
                }
                Ok(FieldElement::Rational(Rational::from_big(BigRational::new(
                    num.clone(),
                    den.clone(),
                ))))
            }
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u32().unwrap_or(0);
                let d = den.mod_floor(&pb).to_u32().unwrap_or(0);
                if d == 0 {
                    return Err(RingError::InvalidCoefficient(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                Ok(FieldElement::Residue(mul_mod(n, inv_mod(d, p), p)))
            }
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x.add(y))
            }
            (Field::Prime(p), FieldElement::Residue(x), FieldElement::Residue(y)) => {
                let s = *x as u64 + *y as u64;
                FieldElement::Residue((s % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (Field::Rationals, FieldElement::Rational(x)) => FieldElement::Rational(x.neg()),
            (Field::Prime(p), FieldElement::Residue(x)) => {
                FieldElement::Residue(if *x == 0 { 0 } else { p - x })
            }
            _ => mixed(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x.mul(y))
            }
            (Field::Prime(p), FieldElement::Residue(x), FieldElement::Residue(y)) => {
                FieldElement::Residue(mul_mod(*x, *y, *p))
            }
            _ => mixed(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (Field::Rationals, FieldElement::Rational(x)) => FieldElement::Rational(x.inv()),
            (Field::Prime(p), FieldElement::Residue(x)) => FieldElement::Residue(inv_mod(*x, *p)),
            _ => mixed(),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.mul(a, &self.inv(b))
    }

    /// Whether `e` is a valid element of this field.
    pub fn contains(&self, e: &FieldElement) -> bool {
        match (self, e) {
            (Field::Rationals, FieldElement::Rational(_)) => true,
            (Field::Prime(p), FieldElement::Residue(v)) => v < p,
            _ => false,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "FP:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("QQ") {
            return Ok(Field::Rationals);
        }
        let Some(rest) = s.strip_prefix("FP:").or_else(|| s.strip_prefix("fp:")) else {
            return Err(RingError::InvalidField(format!("unknown field `{s}` (expected QQ or FP:<p>)")));
        };
        let p: u32 = rest
            .parse()
            .map_err(|_| RingError::InvalidField(format!("bad prime `{rest}`")))?;
        Field::prime(p)
    }
}

#[cold]
fn mixed() -> ! {
    panic!("field element does not belong to the field it is combined in")
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i64) as u32
}

/// Coefficient value. Which variant is valid is decided by the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    Residue(u32),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Residue(v) => *v == 1,
        }
    }

    /// Renders the value; residues use the symmetric representative so that
    /// `p - 1` prints as `-1`.
    pub fn render(&self, field: &Field) -> String {
        match (self, field) {
            (FieldElement::Rational(r), _) => r.to_string(),
            (FieldElement::Residue(v), Field::Prime(p)) => {
                if *v > p / 2 {
                    format!("-{}", p - v)
                } else {
                    v.to_string()
                }
            }
            (FieldElement::Residue(v), Field::Rationals) => v.to_string(),
        }
    }

    /// True when the rendered value starts with a minus sign.
    pub fn is_negative(&self, field: &Field) -> bool {
        match (self, field) {
            (FieldElement::Rational(r), _) => r.is_negative(),
            (FieldElement::Residue(v), Field::Prime(p)) => *v > p / 2,
            _ => false,
        }
    }
}

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// Numerator and denominator fit in `i64`; numerator is never `i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rational::Small(n as i64, d as i64)
        } else {
            Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Self::from_i128(*a as i128 + *c as i128, 1);
                }
                let num = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                Self::from_i128(num, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            Rational::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_big_tiers_agree() {
        let big = Rational::from_integer(i64::MAX).mul(&Rational::from_integer(4));
        assert!(matches!(big, Rational::Big(_)));
        let back = big.mul(&Rational::from_integer(1).mul(&Rational::from_i128(1, 4)));
        assert_eq!(back, Rational::from_integer(i64::MAX));
        assert!(matches!(back, Rational::Small(..)));
    }

    #[test]
    fn rational_field_arithmetic() {
        let q = Field::Rationals;
        let half = q.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        let third = q.from_fraction(&BigInt::from(-2), &BigInt::from(-6)).unwrap();
        let s = q.add(&half, &third);
        assert_eq!(s.render(&q), "5/6");
        assert!(q.mul(&s, &q.inv(&s)).is_one());
        assert!(q.sub(&s, &s).is_zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(f.inv(&three), f.from_i64(5));
        assert_eq!(f.from_i64(-1).render(&f), "-1");
        let half = f.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&half, &f.from_i64(2)), f.one());
        assert!(f.from_fraction(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("QQ".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("FP:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("FP:32004".parse::<Field>().is_err());
        assert!("ZZ".parse::<Field>().is_err());
    }
}
