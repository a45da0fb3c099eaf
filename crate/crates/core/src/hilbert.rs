//! Hilbert series of graded quotients `R/I`.
//!
//! The numerator of `R/M` for a monomial ideal `M` comes from the pivot
//! recursion `N(M) = N(M + (x)) + u·N(M : x)` on the variable occurring in
//! most generators. Ideals with polynomial generators go through their
//! initial ideal under a degree-compatible order.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// Dense integer polynomial in `u`, lowest degree first.
pub type UPoly = Vec<i64>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn upoly_add(a: &[i64], b: &[i64]) -> UPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].checked_add(*c).expect("Hilbert numerator overflow");
    }
    trim(out)
}

pub fn upoly_mul(a: &[i64], b: &[i64]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let prod = x.checked_mul(*y).expect("Hilbert numerator overflow");
            out[i + j] = out[i + j].checked_add(prod).expect("Hilbert numerator overflow");
        }
    }
    trim(out)
}

pub fn upoly_pow(a: &[i64], e: u32) -> UPoly {
    (0..e).fold(vec![1], |acc, _| upoly_mul(&acc, a))
}

/// `u^k * p`.
fn shift(p: &[i64], k: usize) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(p);
    out
}

/// `C(n, k)` for `n` possibly negative (zero when `k > n >= 0` or `n < 0`).
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Length of a graded quotient: finite, or infinite when the dimension is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// `N(u) / (1-u)^k` with as many `(1-u)` factors cancelled as possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: UPoly,
    denominator_exp: u32,
}

impl HilbertSeries {
    /// Build from any numerator and denominator exponent, then cancel.
    pub fn new(numerator: UPoly, denominator_exp: u32) -> Self {
        let mut numerator = trim(numerator);
        let mut k = denominator_exp;
        // Divide by (1 - u) while N(1) = 0.
        while k > 0 && !numerator.is_empty() && numerator.iter().sum::<i64>() == 0 {
            let mut q = Vec::with_capacity(numerator.len() - 1);
            let mut acc = 0i64;
            for c in &numerator[..numerator.len() - 1] {
                acc += c;
                q.push(acc);
            }
            numerator = trim(q);
            k -= 1;
        }
        HilbertSeries { numerator, denominator_exp: k }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_exp(&self) -> u32 {
        self.denominator_exp
    }

    /// Krull dimension of the quotient (zero for the zero module as well).
    pub fn dimension(&self) -> u32 {
        if self.numerator.is_empty() {
            0
        } else {
            self.denominator_exp
        }
    }

    /// `N(1)`: the multiplicity, or the length in dimension zero.
    pub fn degree(&self) -> i64 {
        self.numerator.iter().sum()
    }

    pub fn length(&self) -> Length {
        if self.dimension() == 0 {
            Length::Finite(self.degree() as u64)
        } else {
            Length::Infinite
        }
    }

    /// Coefficient of `u^t` in the power-series expansion.
    pub fn coefficient(&self, t: u32) -> u64 {
        let k = self.denominator_exp as i64;
        let t = t as i64;
        let mut acc: i128 = 0;
        for (j, c) in self.numerator.iter().enumerate() {
            let j = j as i64;
            if j > t {
                break;
            }
            let b = if k == 0 { i128::from(j == t) } else { binomial(t - j + k - 1, k - 1) };
            acc += *c as i128 * b;
        }
        u64::try_from(acc).expect("Hilbert series coefficients are non-negative")
    }

    /// Product of series (tensor product of quotients in disjoint variables).
    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        HilbertSeries::new(
            upoly_mul(&self.numerator, &other.numerator),
            self.denominator_exp + other.denominator_exp,
        )
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = format_upoly(&self.numerator);
        if self.numerator.iter().filter(|c| **c != 0).count() > 1 {
            write!(f, "({n}) / (1-u)^{}", self.denominator_exp)
        } else {
            write!(f, "{n} / (1-u)^{}", self.denominator_exp)
        }
    }
}

/// `1 + 2u + u^2` style rendering; the zero polynomial prints as `0`.
pub fn format_upoly(p: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let body = match (i, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "u".into(),
            (1, m) => format!("{m}u"),
            (e, 1) => format!("u^{e}"),
            (e, m) => format!("{m}u^{e}"),
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Numerator of `R/M` over `(1-u)^nvars`, unreduced.
fn monomial_numerator(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, UPoly>) -> UPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    // Pairwise coprime generators form a regular sequence.
    let nvars = gens[0].nvars();
    let mut seen = vec![false; nvars];
    let coprime = gens.iter().all(|g| {
        g.exps().iter().enumerate().filter(|(_, &e)| e > 0).all(|(i, _)| !std::mem::replace(&mut seen[i], true))
    });
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] = -1;
            upoly_mul(&acc, &f)
        });
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let x = Monomial::var(nvars, pivot, 1);
    let m = MonomialIdeal::new(nvars, gens.iter().cloned());
    let plus = m.add(&x);
    let colon = m.colon(&x);
    let a = monomial_numerator(plus.gens(), memo);
    let b = monomial_numerator(colon.gens(), memo);
    let result = upoly_add(&a, &shift(&b, 1));
    memo.insert(gens.to_vec(), result.clone());
    result
}

/// Hilbert series of `R/M` in `nvars` variables.
pub fn hilbert_series_monomial(m: &MonomialIdeal) -> HilbertSeries {
    let mut memo = HashMap::new();
    let n = monomial_numerator(m.gens(), &mut memo);
    HilbertSeries::new(n, m.nvars() as u32)
}

fn degree_order(order: &MonomialOrder) -> MonomialOrder {
    match order {
        MonomialOrder::Grevlex | MonomialOrder::Grlex => order.clone(),
        _ => MonomialOrder::Grevlex,
    }
}

/// Hilbert series of `R/I` for a homogeneous ideal.
pub fn hilbert_series(i: &Ideal) -> Result<HilbertSeries> {
    let i = i.homogenized()?;
    let lt = i.initial_ideal(&degree_order(i.ring().order()))?;
    Ok(hilbert_series_monomial(&lt))
}

/// Hilbert series of `R/I` correct in degrees up to `d` (uses a truncated basis).
pub(crate) fn hilbert_series_upto(i: &Ideal, d: u32) -> Result<HilbertSeries> {
    let i = i.homogenized()?;
    let gb = if *i.ring().order() == degree_order(i.ring().order()) {
        i.gb_truncated(d)?
    } else {
        i.gb_for(&MonomialOrder::Grevlex)?
    };
    Ok(hilbert_series_monomial(&gb.initial_ideal()))
}

/// `dim_k (R/I)_d`.
pub fn hilbert_function(i: &Ideal, d: u32) -> Result<u64> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous(i.to_string()));
    }
    Ok(hilbert_series_upto(i, d)?.coefficient(d))
}

/// Krull dimension of `R/I`.
pub fn dimension(i: &Ideal) -> Result<u32> {
    Ok(hilbert_series(i)?.dimension())
}

pub fn length_of_quotient(i: &Ideal) -> Result<Length> {
    Ok(hilbert_series(i)?.length())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn small_monomial_ideal() {
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1])]);
        let hs = hilbert_series_monomial(&i);
        // 1 - 2u^2 + u^3 over (1-u)^2 cancels one factor: (1 + u - u^2) / (1-u).
        assert_eq!(hs, HilbertSeries::new(vec![1, 0, -2, 1], 2));
        assert_eq!(hs.numerator(), &[1, 1, -1]);
        assert_eq!(hs.dimension(), 1);
    }

    #[test]
    fn free_ring_and_zero_dimensional() {
        let hs = hilbert_series_monomial(&MonomialIdeal::zero(4));
        assert_eq!(hs.numerator(), &[1]);
        assert_eq!(hs.coefficient(3), 20);
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 3])]);
        assert_eq!(hilbert_series_monomial(&i).length(), Length::Finite(9));
    }

    #[test]
    fn complete_intersection_numerator() {
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[0, 3, 0])]);
        let hs = hilbert_series_monomial(&i);
        let expected = upoly_mul(&[1, 0, -1], &[1, 0, 0, -1]);
        assert_eq!(hs, HilbertSeries::new(expected, 3));
    }

    #[test]
    fn display_and_coefficients() {
        let hs = HilbertSeries::new(vec![1, 2, 1], 4);
        assert_eq!(hs.to_string(), "(1 + 2u + u^2) / (1-u)^4");
        for t in 0..6 {
            let t = t as i64;
            let expected = binomial(t + 3, 3) + 2 * binomial(t + 2, 3) + binomial(t + 1, 3);
            assert_eq!(hs.coefficient(t as u32) as i128, expected);
        }
    }
}
