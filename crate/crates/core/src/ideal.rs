//! Ideals with cached Gröbner bases and the usual ideal operations.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result, RingError};
use crate::field::FieldElement;
use crate::groebner::{buchberger_with, GbOptions, MonomialIdeal, ReducedGb};
use crate::linalg::{monomials_of_degree, Echelon};
use crate::monomial::Monomial;
use crate::order::{BaseOrder, Block, MonomialOrder};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

type GbKey = (MonomialOrder, Option<u32>);

/// An ideal given by generators in a fixed ring. Reduced Gröbner bases are
/// computed on demand and cached per monomial order.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<GbKey, Arc<ReducedGb>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: RwLock::new(self.cache.read().unwrap().clone()) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().compatible(ring) {
                return Err(RingError::ContextMismatch.into());
            }
            if !g.is_zero() {
                kept.push(g.with_ring(ring)?);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept, cache: RwLock::new(HashMap::new()) })
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    /// The homogeneous maximal ideal `(x0, ..., xn)`.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).expect("variables")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(RingError::ContextMismatch.into())
        }
    }

    /// Every generator is homogeneous in the standard grading.
    pub fn has_homogeneous_generators(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Homogeneous generators of the same ideal: the given ones if they are
    /// homogeneous, else their homogeneous components provided those lie in
    /// the ideal.
    pub fn homogeneous_generators(&self) -> Result<Vec<Polynomial>> {
        if self.has_homogeneous_generators() {
            return Ok(self.gens.clone());
        }
        let mut seen = HashSet::new();
        let parts: Vec<Polynomial> = self
            .gens
            .iter()
            .flat_map(|g| g.homogeneous_components())
            .filter(|p| seen.insert(p.monic()))
            .collect();
        let gb = self.gb()?;
        for p in &parts {
            if !gb.contains(p)? {
                return Err(Error::NotHomogeneous(format!("component {p} is not in the ideal")));
            }
        }
        Ok(parts)
    }

    /// The same ideal presented by homogeneous generators.
    pub fn homogenized(&self) -> Result<Ideal> {
        if self.has_homogeneous_generators() {
            return Ok(self.clone());
        }
        Ideal::new(&self.ring, self.homogeneous_generators()?)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_generators().is_ok()
    }

    /// Largest generator degree (0 for the zero ideal).
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Reduced Gröbner basis for the ring's own order.
    pub fn gb(&self) -> Result<Arc<ReducedGb>> {
        self.gb_for(self.ring.order())
    }

    pub fn gb_for(&self, order: &MonomialOrder) -> Result<Arc<ReducedGb>> {
        self.cached_gb(order, None)
    }

    /// A basis valid up to degree `d`; falls back to the full basis for
    /// generators that are not homogeneous.
    pub fn gb_truncated(&self, d: u32) -> Result<Arc<ReducedGb>> {
        if !self.has_homogeneous_generators() || self.ring.grading().iter().any(|&w| w != 1) {
            return self.gb();
        }
        self.cached_gb(self.ring.order(), Some(d))
    }

    fn cached_gb(&self, order: &MonomialOrder, bound: Option<u32>) -> Result<Arc<ReducedGb>> {
        {
            let cache = self.cache.read().unwrap();
            if let Some(gb) = cache.get(&(order.clone(), None)) {
                return Ok(gb.clone());
            }
            if let Some(d) = bound {
                if let Some(gb) = cache
                    .iter()
                    .filter(|((o, b), _)| o == order && b.is_some_and(|b| b >= d))
                    .map(|(_, gb)| gb)
                    .next()
                {
                    return Ok(gb.clone());
                }
            }
        }
        let ring = if self.ring.order() == order { self.ring.clone() } else { self.ring.with_order(order.clone())? };
        let opts = GbOptions { degree_bound: bound, trace: false };
        let (gb, _) = buchberger_with(&ring, &self.gens, &opts)?;
        let gb = Arc::new(gb);
        self.cache.write().unwrap().entry((order.clone(), bound)).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        Ok(self.gb_for(order)?.initial_ideal())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if f.is_homogeneous() {
            let d = f.degree().unwrap();
            return Ok(self.gb_truncated(d)?.contains(f)?);
        }
        Ok(self.gb()?.contains(f)?)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        if other.has_homogeneous_generators() && self.has_homogeneous_generators() {
            let gb = self.gb_truncated(other.max_degree())?;
            for g in &other.gens {
                if !gb.contains(g)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let gb = self.gb()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same ideal. Homogeneous generators are compared by mutual containment
    /// with degree-truncated bases, everything else by reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        if self.has_homogeneous_generators() && other.has_homogeneous_generators() {
            return Ok(self.contains_ideal(other)? && other.contains_ideal(self)?);
        }
        let a = self.gb()?;
        let b = other.gb_for(self.ring.order())?;
        Ok(a.polys() == b.polys())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut seen = HashSet::new();
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let h = f * &g.with_ring(&self.ring)?;
                if seen.insert(h.clone()) {
                    gens.push(h);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^t` generated by all products of `t` generators (as multisets); `I^0 = (1)`.
    pub fn power(&self, t: u32) -> Ideal {
        let mut level: Vec<(usize, Polynomial)> = vec![(0, Polynomial::one(&self.ring))];
        for _ in 0..t {
            let mut next = Vec::new();
            for (start, p) in &level {
                for (k, g) in self.gens.iter().enumerate().skip(*start) {
                    next.push((k, p * g));
                }
            }
            level = next;
        }
        let mut seen = HashSet::new();
        let gens = level.into_iter().map(|(_, p)| p).filter(|p| seen.insert(p.clone())).collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// `self + (f)`.
    pub fn with_generator(&self, f: Polynomial) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating a tag variable `y` from `y·I + (1 − y)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let tag = fresh_name(&self.ring, "y");
        let mut vars = vec![tag];
        vars.extend(self.ring.vars().iter().cloned());
        let mut blocks = vec![Block::weighted(BaseOrder::Lex, vec![0])];
        blocks.extend(as_blocks(self.ring.order(), n));
        let big = Ring::new(vars, self.ring.field(), MonomialOrder::Block(blocks))?;
        let embed: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let y = Polynomial::var(&big, 0);
        let one_minus_y = &Polynomial::one(&big) - &y;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&y * &f.remap(&big, &embed));
        }
        for g in &other.gens {
            gens.push(&one_minus_y * &g.remap(&big, &embed));
        }
        let (gb, _) = buchberger_with(&big, &gens, &GbOptions::default())?;
        let back: Vec<Option<usize>> = (1..=n).map(Some).collect();
        let result = gb.polys().iter().filter(|p| p.degree_in(0) == 0).map(|p| p.remap(&self.ring, &back)).collect();
        Ideal::new(&self.ring, result)
    }

    /// `I : (f)` as `(I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisorIdeal);
        }
        let f = f.with_ring(&self.ring)?;
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.div_exact(&f).ok_or_else(|| Error::InvalidArgument("intersection element not divisible".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I : J = ∩_j (I : f_j)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisorIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let part = self.colon_poly(f)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersection(&part)?,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// `I : J^∞` by iterated colons until the ideal stops growing.
    pub fn saturation(&self, other: &Ideal, cap: usize) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..cap {
            let next = current.colon(other)?;
            if current.contains_ideal(&next)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::SaturationCap(cap))
    }

    /// `I ∩ k[variables not in front]`, returned in the same ring.
    pub fn eliminate(&self, front: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let back = n - front.len();
        self.eliminate_with(front, Block::new(front.len(), BaseOrder::Grevlex), Block::new(back, BaseOrder::Grevlex))
    }

    /// Elimination with explicit block orders for the eliminated variables
    /// (`front`, in the given order) and the remaining ones (in ring order).
    pub fn eliminate_with(&self, front: &[usize], front_block: Block, back_block: Block) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for &i in front {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!("bad elimination variable index {i}")));
            }
            seen[i] = true;
        }
        let back: Vec<usize> = (0..n).filter(|i| !seen[*i]).collect();
        if front_block.len != front.len() || back_block.len != back.len() {
            return Err(RingError::InvalidOrder("block sizes do not match the variable split".into()).into());
        }
        let perm: Vec<usize> = front.iter().chain(&back).copied().collect();
        let vars = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let big = Ring::new(vars, self.ring.field(), MonomialOrder::Block(vec![front_block, back_block]))?;
        let to_big: Vec<Option<usize>> = perm.iter().map(|&i| Some(i)).collect();
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.remap(&big, &to_big)).collect();
        let (gb, _) = buchberger_with(&big, &gens, &GbOptions::default())?;
        let mut from_big = vec![None; n];
        for (j, &i) in perm.iter().enumerate() {
            from_big[i] = Some(j);
        }
        let k = front.len();
        let result = gb
            .polys()
            .iter()
            .filter(|p| (0..k).all(|v| p.degree_in(v) == 0))
            .map(|p| p.remap(&self.ring, &from_big))
            .collect();
        Ideal::new(&self.ring, result)
    }

    /// Minimal homogeneous generators chosen greedily by degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let mut gens = self.homogeneous_generators()?;
        gens.sort_by_key(|g| g.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            let sub = Ideal::new(&self.ring, kept.clone())?;
            if kept.is_empty() || !sub.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(kept)
    }

    /// Membership of a homogeneous `f` by linear algebra in degree `deg f`:
    /// is `f` in the span of `m·g` over homogeneous generators `g`?
    pub fn contains_by_linear_algebra(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        let d = f.degree().unwrap();
        let span = self.degree_span(d)?;
        Ok(span.contains(&f.with_ring(&self.ring)?))
    }

    /// Echelon basis of the degree-`d` piece of the ideal (homogeneous generators only).
    pub(crate) fn degree_span(&self, d: u32) -> Result<Echelon<'_>> {
        if !self.has_homogeneous_generators() {
            return Err(Error::NotHomogeneous(self.to_string()));
        }
        let mut span = Echelon::new(self.ring.field(), self.ring.order());
        let one: FieldElement = self.ring.field().one();
        for g in &self.gens {
            let e = g.degree().unwrap();
            if e > d {
                continue;
            }
            for m in monomials_of_degree(self.ring.nvars(), d - e) {
                span.insert(&g.mul_term(&one, &m));
            }
        }
        Ok(span)
    }

    /// Map generators into `ring` via a variable map (see [`Polynomial::remap`]).
    pub fn remap(&self, ring: &Arc<Ring>, map: &[Option<usize>]) -> Result<Ideal> {
        Ideal::new(ring, self.gens.iter().map(|g| g.remap(ring, map)).collect())
    }

    /// Substitute zero for the listed variables.
    pub fn set_zero(&self, vars: &[usize]) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().map(|g| g.set_zero(vars)).collect()).expect("same ring")
    }
}

/// A name not used in `ring`, based on `base`.
pub(crate) fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = format!("{base}_");
    let mut k = 0;
    while ring.var_index(&name).is_some() {
        k += 1;
        name = format!("{base}_{k}");
    }
    name
}

/// Express an order on `n` variables as a list of blocks (for nesting).
pub(crate) fn as_blocks(order: &MonomialOrder, n: usize) -> Vec<Block> {
    match order {
        MonomialOrder::Grevlex => vec![Block::new(n, BaseOrder::Grevlex)],
        MonomialOrder::Lex => vec![Block::new(n, BaseOrder::Lex)],
        MonomialOrder::Grlex => vec![Block::new(n, BaseOrder::Grlex)],
        MonomialOrder::Block(b) => b.clone(),
    }
}

/// A monomial as a polynomial with coefficient one.
pub fn monomial_poly(ring: &Arc<Ring>, m: Monomial) -> Polynomial {
    Polynomial::monomial(ring, ring.field().one(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn xy() -> Arc<Ring> {
        Ring::with_vars(&["x", "y"], Field::Rationals).unwrap()
    }

    #[test]
    fn power_of_maximal_ideal() {
        let r = xy();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let sq = m.power(2);
        assert_eq!(sq.gens().len(), 3);
        assert!(sq.equals(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap());
        assert!(m.power(0).equals(&Ideal::unit(&r)).unwrap());
    }

    #[test]
    fn intersections() {
        let r = xy();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        assert!(i.intersection(&j).unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
        assert!(i.intersection(&i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn colon_and_saturation() {
        let r = xy();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        let c = i.colon(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        assert!(i.colon(&Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        assert!(matches!(i.colon(&Ideal::zero(&r)), Err(Error::ZeroDivisorIdeal)));
        let k = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let sat = k.saturation(&Ideal::maximal(&r), 10).unwrap();
        assert!(sat.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
    }

    #[test]
    fn elimination() {
        let r = xy();
        let graph = Ideal::parse(&r, &["y - x^2"]).unwrap();
        assert!(graph.eliminate(&[0]).unwrap().is_zero());
        let r = Ring::with_vars(&["t", "x", "y", "u1", "u2"], Field::Rationals).unwrap();
        let rees = Ideal::parse(&r, &["u1 - t*x", "u2 - t*y"]).unwrap();
        let e = rees.eliminate(&[0]).unwrap();
        assert!(e.equals(&Ideal::parse(&r, &["y*u1 - x*u2"]).unwrap()).unwrap());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = xy();
        let i = Ideal::parse(&r, &["x^2", "x*y", "x^3"]).unwrap();
        assert_eq!(i.minimal_generators().unwrap().len(), 2);
    }

    #[test]
    fn linear_algebra_membership_agrees() {
        let r = Ring::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]).unwrap();
        let f = parse_polynomial("x0*x2^2 - x0*x1*x3", &r).unwrap();
        assert!(i.contains_by_linear_algebra(&f).unwrap());
        assert!(i.contains(&f).unwrap());
        let g = parse_polynomial("x0*x3^2", &r).unwrap();
        assert!(!i.contains_by_linear_algebra(&g).unwrap());
        assert!(!i.contains(&g).unwrap());
    }

    #[test]
    fn homogeneous_generators_from_components() {
        let r = Ring::standard(5, Field::Rationals);
        let i = Ideal::parse(&r, &["x2^2 - x1*x3 + x2*x3^3 - x0^3*x4", "x2*x3^3 - x0^3*x4"]).unwrap();
        assert!(!i.has_homogeneous_generators());
        assert_eq!(i.homogeneous_generators().unwrap().len(), 2);
        let j = Ideal::parse(&r, &["x0 + x1^2"]).unwrap();
        assert!(j.homogeneous_generators().is_err());
    }
}
