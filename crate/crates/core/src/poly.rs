//! Sparse multivariate polynomials.
//!
//! Terms are kept in a vector sorted strictly descending under the ring's
//! active order with no zero coefficients, so the representation of a
//! polynomial is unique and equality is structural.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::RingError;
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub mono: Monomial,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    /// The variable `x_i`.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i, 1))
    }

    pub fn monomial(ring: &Arc<Ring>, coeff: FieldElement, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ring.nvars(), "monomial length does not match ring");
        let terms = if coeff.is_zero() { Vec::new() } else { vec![Term { coeff, mono }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Canonicalize an arbitrary term list: combine duplicates, drop zeros, sort.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (FieldElement, Monomial)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from terms already sorted descending with distinct monomials and nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.weighted_degree(weights)).max()
    }

    /// All terms share one total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_wrt(&vec![1; self.ring.nvars()])
    }

    pub fn is_homogeneous_wrt(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous components in increasing degree.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut by_deg: Vec<(u32, Vec<Term>)> = Vec::new();
        for t in &self.terms {
            let d = t.mono.degree();
            match by_deg.iter_mut().find(|(e, _)| *e == d) {
                Some((_, v)) => v.push(t.clone()),
                None => by_deg.push((d, vec![t.clone()])),
            }
        }
        by_deg.sort_by_key(|(d, _)| *d);
        by_deg.into_iter().map(|(_, terms)| Polynomial::from_sorted_terms(&self.ring, terms)).collect()
    }

    /// Largest exponent of any variable in any term.
    pub fn max_exponent(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.max_exponent()).max().unwrap_or(0)
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.mono.exp(i)).max().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(RingError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let terms = merge_add(&self.ring, &self.terms, other.terms.iter().cloned());
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &short.terms {
            acc = acc.add_unchecked(&long.mul_term(&t.coeff, &t.mono));
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|t| Term { coeff: field.neg(&t.coeff), mono: t.mono.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|t| Term { coeff: field.mul(&t.coeff, c), mono: t.mono.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(&t.coeff, c), mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    /// Re-sort the terms under another ring with the same variables and field.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial, RingError> {
        if !self.ring.compatible(ring) {
            return Err(RingError::ContextMismatch);
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Move into `ring`, where variable `j` of the target is variable
    /// `map[j]` of the source (or absent). Panics when a source variable that
    /// occurs in `self` has no image.
    pub fn remap(&self, ring: &Arc<Ring>, map: &[Option<usize>]) -> Polynomial {
        assert_eq!(map.len(), ring.nvars());
        let mut covered = vec![false; self.ring.nvars()];
        for src in map.iter().flatten() {
            covered[*src] = true;
        }
        for t in &self.terms {
            for (i, &e) in t.mono.exps().iter().enumerate() {
                assert!(e == 0 || covered[i], "variable {} has no image", self.ring.vars()[i]);
            }
        }
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (t.coeff.clone(), t.mono.remap(map))))
    }

    /// Set the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| vars.iter().all(|&i| t.mono.exp(i) == 0))
            .cloned()
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lead = divisor.leading_term()?;
        let field = self.ring.field();
        let inv = field.inv(&lead.coeff);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.leading_term() {
            let m = t.mono.div(&lead.mono)?;
            let c = field.mul(&t.coeff, &inv);
            rest = rest.add_unchecked(&divisor.mul_term(&field.neg(&c), &m));
            quotient.push(Term { coeff: c, mono: m });
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Degree of each term in the selected variables (e.g. the Rees `u`-degree).
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.iter().map(|t| vars.iter().map(|&i| t.mono.exp(i)).sum()).max()
    }

    pub fn uses_only(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|t| {
            t.mono.exps().iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }
}

/// Merge a descending term list with another descending term iterator, adding coefficients.
pub(crate) fn merge_add(ring: &Ring, a: &[Term], b: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut ia = a.iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ia.next().unwrap().clone()),
            (None, Some(_)) => out.push(ib.next().unwrap()),
            (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ia.next().unwrap().clone()),
                Ordering::Less => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let x = ia.next().unwrap();
                    let y = ib.next().unwrap();
                    let c = field.add(&x.coeff, &y.coeff);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: y.mono });
                    }
                }
            },
        }
    }
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring context mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring context mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::print_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
