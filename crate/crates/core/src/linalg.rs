//! Row echelon forms over the coefficient field, for degree-by-degree
//! linear algebra on polynomials of one degree.

use std::collections::{BTreeMap, HashMap};

use crate::field::{Field, FieldElement};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Incrementally built echelon basis of a span of sparse vectors.
/// Columns are monomials; pivots are leading monomials under `order`.
pub struct Echelon<'a> {
    field: Field,
    order: &'a MonomialOrder,
    /// Pivot monomial -> monic row (descending terms).
    rows: HashMap<Monomial, Vec<(Monomial, FieldElement)>>,
}

impl<'a> Echelon<'a> {
    pub fn new(field: Field, order: &'a MonomialOrder) -> Self {
        Echelon { field, order, rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `f` against the current rows; returns the reduced vector.
    fn reduce(&self, f: &Polynomial) -> BTreeMap<MonoKey<'a>, FieldElement> {
        let mut acc: BTreeMap<MonoKey<'a>, FieldElement> = f
            .terms()
            .iter()
            .map(|t| (MonoKey { order: self.order, mono: t.mono.clone() }, t.coeff.clone()))
            .collect();
        let mut cursor: Option<MonoKey<'a>> = None;
        loop {
            let next = match &cursor {
                None => acc.iter().next_back(),
                Some(c) => acc.range(..c.clone()).next_back(),
            };
            let Some((key, c)) = next.map(|(k, c)| (k.clone(), c.clone())) else { break };
            if let Some(row) = self.rows.get(&key.mono) {
                let scale = self.field.neg(&c);
                for (m, v) in row {
                    let k = MonoKey { order: self.order, mono: m.clone() };
                    let add = self.field.mul(v, &scale);
                    let sum = match acc.get(&k) {
                        Some(old) => self.field.add(old, &add),
                        None => add,
                    };
                    if sum.is_zero() {
                        acc.remove(&k);
                    } else {
                        acc.insert(k, sum);
                    }
                }
            }
            cursor = Some(key);
        }
        acc
    }

    /// Add `f` to the span; returns whether the rank grew.
    pub fn insert(&mut self, f: &Polynomial) -> bool {
        let reduced = self.reduce(f);
        let Some((lead, lc)) = reduced.iter().next_back() else { return false };
        let inv = self.field.inv(lc);
        let row: Vec<(Monomial, FieldElement)> =
            reduced.iter().rev().map(|(k, v)| (k.mono.clone(), self.field.mul(v, &inv))).collect();
        self.rows.insert(lead.mono.clone(), row);
        true
    }

    /// Is `f` in the span?
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_empty()
    }
}

/// Monomial ordered by a monomial order, for use as a map key.
#[derive(Clone)]
struct MonoKey<'a> {
    order: &'a MonomialOrder,
    mono: Monomial,
}

impl PartialEq for MonoKey<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono
    }
}

impl Eq for MonoKey<'_> {}

impl PartialOrd for MonoKey<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonoKey<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order.cmp(&self.mono, &other.mono)
    }
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::new(exps).expect("small exponents"));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(field: Field, m: &mut [Vec<FieldElement>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = field.inv(&m[row][col]);
        for v in m[row].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Coefficients `c` with `Σ c_j basis_j = target`, if `target` is in the span.
pub fn solve_in_span(field: Field, basis: &[Polynomial], target: &Polynomial) -> Option<Vec<FieldElement>> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for f in basis.iter().chain(std::iter::once(target)) {
        for t in f.terms() {
            let next = index.len();
            index.entry(t.mono.clone()).or_insert(next);
        }
    }
    let r = basis.len();
    // One row per monomial: [coefficients in basis_j | coefficient in target].
    let mut m = vec![vec![field.zero(); r + 1]; index.len()];
    for (j, f) in basis.iter().enumerate() {
        for t in f.terms() {
            m[index[&t.mono]][j] = t.coeff.clone();
        }
    }
    for t in target.terms() {
        m[index[&t.mono]][r] = t.coeff.clone();
    }
    let pivots = rref(field, &mut m);
    if pivots.contains(&r) {
        return None;
    }
    let mut x = vec![field.zero(); r];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][r].clone();
    }
    Some(x)
}

/// Indices of a maximal set of linearly independent rows, chosen greedily.
pub fn independent_rows(field: Field, rows: &[Vec<FieldElement>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<FieldElement>> = chosen.iter().map(|&k| rows[k].clone()).collect();
        trial.push(rows[i].clone());
        if rref(field, &mut trial).len() == trial.len() {
            chosen.push(i);
        }
    }
    chosen
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn invert(field: Field, m: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
    let n = m.len();
    let mut aug: Vec<Vec<FieldElement>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
