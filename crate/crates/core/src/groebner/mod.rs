//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are processed by the normal strategy with sugar degrees; useless
//! pairs are discarded with the coprime and Gebauer–Möller criteria. Newly
//! found elements are fully reduced against the current basis and the final
//! basis is interreduced, made monic and sorted by leading monomial.

mod monomial_ideal;
mod reduce;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

pub use monomial_ideal::MonomialIdeal;

use crate::error::RingError;
use crate::monomial::{Monomial, EXPONENT_GUARD};
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;
use reduce::{reduce_terms, Reducer};

/// Tuning knobs for [`buchberger_with`].
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Only process pairs of sugar degree at most this bound. For input that
    /// is homogeneous for the ring grading, the result agrees with the full
    /// basis in every degree up to the bound.
    pub degree_bound: Option<u32>,
    /// Record a line per processed pair.
    pub trace: bool,
}

/// Counters and optional trace of one run.
#[derive(Clone, Debug, Default)]
pub struct GbStats {
    pub pairs_created: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub trace: Vec<String>,
}

/// A reduced Gröbner basis: monic, no leading monomial divides another,
/// and no term is divisible by another element's leading monomial.
#[derive(Clone, Debug)]
pub struct ReducedGb {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
    degree_bound: Option<u32>,
}

impl ReducedGb {
    /// The ring whose active order this basis is reduced for.
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Elements sorted by increasing leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `Some(d)` when only degrees up to `d` were computed.
    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    fn check(&self, f: &Polynomial) -> Result<(), RingError> {
        if !f.ring().compatible(&self.ring) {
            Err(RingError::ContextMismatch)
        } else if f.ring().order() != self.ring.order() {
            Err(RingError::OrderMismatch)
        } else {
            Ok(())
        }
    }

    /// Remainder of `f` on division by the basis; zero exactly when `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, RingError> {
        self.check(f)?;
        let reducers: Vec<Reducer<'_>> = self.polys.iter().map(|p| Reducer::new(p.terms())).collect();
        let terms = reduce_terms(self.ring.field(), self.ring.order(), f.terms().to_vec(), &reducers, true);
        Ok(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    /// Normal form after moving `f` into this basis' order.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, RingError> {
        self.normal_form(&f.with_ring(&self.ring)?)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, RingError> {
        if let (Some(bound), Some(deg)) = (self.degree_bound, f.degree()) {
            assert!(deg <= bound, "membership of degree {deg} asked of a basis truncated at {bound}");
        }
        Ok(self.reduce(f)?.is_zero())
    }

    /// Check the Buchberger criterion directly: every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let reducers: Vec<Reducer<'_>> = self.polys.iter().map(|p| Reducer::new(p.terms())).collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (a, b) = (self.polys[i].terms(), self.polys[j].terms());
                if a[0].mono.is_coprime(&b[0].mono) {
                    continue;
                }
                if let Some(bound) = self.degree_bound {
                    if a[0].mono.lcm(&b[0].mono).weighted_degree(self.ring.grading()) > bound {
                        continue;
                    }
                }
                let s = s_polynomial(&self.ring, a, b);
                if !reduce_terms(self.ring.field(), self.ring.order(), s, &reducers, true).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Check the shape conditions of a reduced basis.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.polys.iter().enumerate().all(|(i, p)| {
            p.leading_coeff().is_some_and(|c| c.is_one())
                && p.terms().iter().enumerate().all(|(k, t)| {
                    lms.iter().enumerate().all(|(j, lm)| (k == 0 && i == j) || !lm.divides(&t.mono))
                })
        })
    }
}

/// S-polynomial of two monic term lists.
fn s_polynomial(ring: &Ring, a: &[Term], b: &[Term]) -> Vec<Term> {
    let field = ring.field();
    let lcm = a[0].mono.lcm(&b[0].mono);
    let ma = lcm.div(&a[0].mono).unwrap();
    let mb = lcm.div(&b[0].mono).unwrap();
    let left: Vec<Term> = a[1..].iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(&ma) }).collect();
    let right = b[1..].iter().map(|t| Term { coeff: field.neg(&t.coeff), mono: t.mono.mul(&mb) });
    crate::poly::merge_add(ring, &left, right)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Key ordering the pair queue: sugar, then lcm degree, then indices.
type PairKey = (u32, u32, usize, usize);

struct Engine<'r> {
    ring: &'r Arc<Ring>,
    basis: Vec<Vec<Term>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: BTreeMap<PairKey, Pair>,
    stats: GbStats,
    trace: bool,
}

impl<'r> Engine<'r> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.basis[i][0].mono
    }

    fn monic(&self, mut terms: Vec<Term>) -> Vec<Term> {
        let field = self.ring.field();
        if !terms[0].coeff.is_one() {
            let inv = field.inv(&terms[0].coeff);
            for t in &mut terms {
                t.coeff = field.mul(&t.coeff, &inv);
            }
        }
        terms
    }

    fn reduce(&self, terms: Vec<Term>) -> Vec<Term> {
        let reducers: Vec<Reducer<'_>> = (0..self.basis.len())
            .filter(|&k| self.active[k])
            .map(|k| Reducer::new(&self.basis[k]))
            .collect();
        reduce_terms(self.ring.field(), self.ring.order(), terms, &reducers, true)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let w = self.ring.grading();
        let si = self.sugar[i] + lcm.weighted_degree(w) - self.lm(i).weighted_degree(w);
        let sj = self.sugar[j] + lcm.weighted_degree(w) - self.lm(j).weighted_degree(w);
        si.max(sj)
    }

    /// Insert a new monic, reduced element and update pairs (Gebauer–Möller).
    fn insert(&mut self, terms: Vec<Term>, sugar: u32) -> Result<(), RingError> {
        let guard = terms.iter().map(|t| t.mono.max_exponent()).max().unwrap_or(0);
        if guard >= EXPONENT_GUARD {
            return Err(RingError::ExponentOverflow(EXPONENT_GUARD));
        }
        let h = self.basis.len();
        self.basis.push(terms);
        self.sugar.push(sugar);
        self.active.push(true);
        let lm_h = self.lm(h).clone();

        // Candidate new pairs (g, h) for active g.
        let mut cands: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lcm = self.lm(g).lcm(&lm_h);
                let coprime = self.lm(g).is_coprime(&lm_h);
                (g, lcm, coprime)
            })
            .collect();
        // Chain criterion among the new pairs: drop (g, h) when another new pair's
        // lcm properly divides its lcm; among equal lcms keep one, preferring a coprime one.
        cands.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then_with(|| b.2.cmp(&a.2)).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for c in cands {
            if kept.iter().any(|k| k.1.divides(&c.1)) {
                continue;
            }
            kept.push(c);
        }
        // Prune old pairs whose lcm is divisible by lm(h) strictly.
        self.pairs.retain(|_, p| {
            !(lm_h.divides(&p.lcm)
                && self.basis[p.i][0].mono.lcm(&lm_h) != p.lcm
                && self.basis[p.j][0].mono.lcm(&lm_h) != p.lcm)
        });
        for (g, lcm, coprime) in kept {
            self.stats.pairs_created += 1;
            if coprime {
                continue;
            }
            let sugar = self.pair_sugar(g, h, &lcm);
            self.pairs.insert((sugar, lcm.degree(), h, g), Pair { i: g, j: h, lcm });
        }
        for g in 0..h {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the order of `ring`.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<ReducedGb, RingError> {
    buchberger_with(ring, gens, &GbOptions::default()).map(|(gb, _)| gb)
}

pub fn buchberger_with(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    opts: &GbOptions,
) -> Result<(ReducedGb, GbStats), RingError> {
    let mut engine = Engine {
        ring,
        basis: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: BTreeMap::new(),
        stats: GbStats::default(),
        trace: opts.trace,
    };
    let w = ring.grading();
    let mut input: Vec<(u32, Polynomial)> = Vec::new();
    for g in gens {
        if !g.ring().compatible(ring) {
            return Err(RingError::ContextMismatch);
        }
        if g.is_zero() {
            continue;
        }
        if g.max_exponent() >= EXPONENT_GUARD {
            return Err(RingError::ExponentOverflow(EXPONENT_GUARD));
        }
        let g = g.with_ring(ring)?;
        input.push((g.weighted_degree(w).unwrap(), g));
    }
    // Feed generators by increasing sugar so low-degree elements reduce the rest.
    input.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| ring.order().cmp(a.1.leading_monomial().unwrap(), b.1.leading_monomial().unwrap())));

    let mut queue: BTreeMap<(u32, usize), Vec<Term>> = BTreeMap::new();
    for (k, (s, g)) in input.into_iter().enumerate() {
        queue.insert((s, k), g.into_terms());
    }
    loop {
        // Next item: the lowest-sugar pending generator or pair.
        let next_gen = queue.keys().next().map(|k| k.0);
        let next_pair = engine.pairs.keys().next().map(|k| k.0);
        let (sugar, terms, label) = match (next_gen, next_pair) {
            (None, None) => break,
            (Some(sg), sp) if sp.is_none_or(|sp| sg <= sp) => {
                let ((s, k), t) = queue.pop_first().unwrap();
                (s, t, format!("gen {k}"))
            }
            _ => {
                let (key, p) = engine.pairs.pop_first().unwrap();
                let s = s_polynomial(ring, &engine.basis[p.i], &engine.basis[p.j]);
                (key.0, s, format!("pair ({}, {})", p.i, p.j))
            }
        };
        if opts.degree_bound.is_some_and(|d| sugar > d) {
            break;
        }
        engine.stats.pairs_reduced += 1;
        let reduced = engine.reduce(terms);
        if reduced.is_empty() {
            engine.stats.zero_reductions += 1;
            if engine.trace {
                engine.stats.trace.push(format!("sugar {sugar}: {label} -> 0"));
            }
            continue;
        }
        let reduced = engine.monic(reduced);
        if engine.trace {
            let mut line = format!("sugar {sugar}: {label} -> new element {} with leading monomial ", engine.basis.len());
            let _ = write!(line, "{}", crate::parse::print_monomial(&reduced[0].mono, ring.vars()));
            engine.stats.trace.push(line);
        }
        engine.insert(reduced, sugar)?;
        if engine.basis.last().is_some_and(|t| t[0].mono.is_one()) {
            break;
        }
    }

    // Final interreduction of the minimal leading set.
    let mut minimal: Vec<Vec<Term>> = (0..engine.basis.len())
        .filter(|&k| engine.active[k])
        .map(|k| engine.basis[k].clone())
        .collect();
    if minimal.iter().any(|t| t[0].mono.is_one()) {
        minimal = vec![vec![Term { coeff: ring.field().one(), mono: Monomial::one(ring.nvars()) }]];
    }
    let mut polys = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Reducer<'_>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, t)| Reducer::new(t)).collect();
        let head = minimal[k][0].clone();
        let tail = reduce_terms(ring.field(), ring.order(), minimal[k][1..].to_vec(), &others, true);
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(head);
        terms.extend(tail);
        polys.push(Polynomial::from_sorted_terms(ring, terms));
    }
    polys.sort_by(|a, b| ring.order().cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let stats = engine.stats;
    Ok((ReducedGb { ring: ring.clone(), polys, degree_bound: opts.degree_bound }, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<Ring> {
        Ring::with_vars(names, Field::Rationals).unwrap().with_order(order).unwrap()
    }

    fn polys(r: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()
    }

    #[test]
    fn principal_ideal_is_made_monic() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let gb = buchberger(&r, &polys(&r, &["2*x^2 - 4*y"])).unwrap();
        assert_eq!(gb.polys(), polys(&r, &["x^2 - 2*y"]).as_slice());
    }

    #[test]
    fn small_lex_example() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gb = buchberger(&r, &polys(&r, &["x^2 - y", "x*y - 1"])).unwrap();
        assert_eq!(gb.polys(), polys(&r, &["y^3 - 1", "x - y^2"]).as_slice());
        assert!(gb.verify_s_pairs());
        assert!(gb.is_reduced());
    }

    #[test]
    fn one_step_division() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let gb = buchberger(&r, &polys(&r, &["x^2 - y"])).unwrap();
        let nf = gb.normal_form(&parse_polynomial("x^2", &r).unwrap()).unwrap();
        assert_eq!(nf, parse_polynomial("y", &r).unwrap());
        assert!(gb.normal_form(&gb.polys()[0]).unwrap().is_zero());
    }

    #[test]
    fn twisted_cubic() {
        let r = Ring::standard(4, Field::Rationals);
        let gens = polys(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.verify_s_pairs());
        let again = buchberger(&r, gb.polys()).unwrap();
        assert_eq!(again.polys(), gb.polys());
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let gb = buchberger(&r, &polys(&r, &["x*y - 1", "x"])).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn order_mismatch_is_reported() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let lex = r.with_order(MonomialOrder::Lex).unwrap();
        let gb = buchberger(&r, &polys(&r, &["x - y"])).unwrap();
        let f = parse_polynomial("x", &lex).unwrap();
        assert_eq!(gb.normal_form(&f), Err(RingError::OrderMismatch));
        assert!(gb.reduce(&f).is_ok());
    }

    #[test]
    fn truncated_basis_agrees_below_bound() {
        let r = Ring::standard(4, Field::Rationals);
        let gens = polys(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let opts = GbOptions { degree_bound: Some(2), trace: true };
        let (gb, stats) = buchberger_with(&r, &gens, &opts).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(!stats.trace.is_empty());
    }
}
