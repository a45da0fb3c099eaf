//! Polynomial reduction with geobuckets.

use std::cmp::Ordering;

use crate::field::{Field, FieldElement};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Term;

/// A sum of polynomials kept in buckets of geometrically growing size.
/// Each bucket is sorted ascending so the leading term is popped from the end.
pub(crate) struct GeoBucket<'a> {
    field: Field,
    order: &'a MonomialOrder,
    buckets: Vec<Vec<Term>>,
}

fn capacity(level: usize) -> usize {
    4usize << (2 * level)
}

impl<'a> GeoBucket<'a> {
    pub fn new(field: Field, order: &'a MonomialOrder) -> Self {
        GeoBucket { field, order, buckets: Vec::new() }
    }

    /// Add a term list given in ascending order.
    pub fn add_ascending(&mut self, mut terms: Vec<Term>) {
        let mut level = 0;
        while capacity(level) < terms.len() {
            level += 1;
        }
        loop {
            if self.buckets.len() <= level {
                self.buckets.resize_with(level + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[level]);
            let merged = if existing.is_empty() { terms } else { self.merge(existing, terms) };
            if merged.len() <= capacity(level) {
                self.buckets[level] = merged;
                return;
            }
            terms = merged;
            level += 1;
        }
    }

    /// Add `c * m * terms[skip..]` where `terms` is descending.
    pub fn add_scaled(&mut self, terms: &[Term], skip: usize, c: &FieldElement, m: &Monomial) {
        let field = self.field;
        let scaled: Vec<Term> = terms[skip..]
            .iter()
            .rev()
            .map(|t| Term { coeff: field.mul(&t.coeff, c), mono: t.mono.mul(m) })
            .collect();
        if !scaled.is_empty() {
            self.add_ascending(scaled);
        }
    }

    fn merge(&self, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = a.into_iter().peekable();
        let mut ib = b.into_iter().peekable();
        loop {
            let ord = match (ia.peek(), ib.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => self.order.cmp(&x.mono, &y.mono),
            };
            match ord {
                Ordering::Less => out.push(ia.next().unwrap()),
                Ordering::Greater => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let x = ia.next().unwrap();
                    let y = ib.next().unwrap();
                    let c = self.field.add(&x.coeff, &y.coeff);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: x.mono });
                    }
                }
            }
        }
        out
    }

    /// Remove and return the leading term of the sum, or `None` when it is zero.
    pub fn pop_leading(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<usize> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                if let Some(t) = b.last() {
                    best = match best {
                        Some(j) if self.order.cmp(&t.mono, &self.buckets[j].last().unwrap().mono) != Ordering::Greater => Some(j),
                        _ => Some(i),
                    };
                }
            }
            let j = best?;
            let mut lead = self.buckets[j].pop().unwrap();
            for i in 0..self.buckets.len() {
                if i != j && self.buckets[i].last().is_some_and(|t| t.mono == lead.mono) {
                    let t = self.buckets[i].pop().unwrap();
                    lead.coeff = self.field.add(&lead.coeff, &t.coeff);
                }
            }
            if !lead.coeff.is_zero() {
                return Some(lead);
            }
        }
    }

    /// Drain everything into a descending term list.
    pub fn into_descending(mut self) -> Vec<Term> {
        let mut out = Vec::new();
        while let Some(t) = self.pop_leading() {
            out.push(t);
        }
        out
    }
}

/// Leading data of a reducer, cached for fast divisibility tests.
pub(crate) struct Reducer<'a> {
    pub mask: u64,
    pub terms: &'a [Term],
}

impl<'a> Reducer<'a> {
    pub fn new(terms: &'a [Term]) -> Self {
        Reducer { mask: terms[0].mono.support_mask(), terms }
    }
}

pub(crate) fn find_reducer(reducers: &[Reducer<'_>], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    reducers.iter().position(|r| r.mask & !mask == 0 && r.terms[0].mono.divides(m))
}

/// Reduce `terms` (descending) by monic reducers. With `full` every term is
/// reduced, otherwise only leading terms.
pub(crate) fn reduce_terms(
    field: Field,
    order: &MonomialOrder,
    terms: Vec<Term>,
    reducers: &[Reducer<'_>],
    full: bool,
) -> Vec<Term> {
    let mut bucket = GeoBucket::new(field, order);
    let mut rest = terms;
    rest.reverse();
    bucket.add_ascending(rest);
    let mut out = Vec::new();
    while let Some(t) = bucket.pop_leading() {
        match find_reducer(reducers, &t.mono) {
            Some(k) => {
                let r = reducers[k].terms;
                debug_assert!(r[0].coeff.is_one());
                let q = t.mono.div(&r[0].mono).expect("reducer divides");
                bucket.add_scaled(r, 1, &field.neg(&t.coeff), &q);
            }
            None => {
                out.push(t);
                if !full {
                    out.extend(bucket.into_descending());
                    break;
                }
            }
        }
    }
    out
}
