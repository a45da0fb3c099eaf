use std::fmt;

use serde::Serialize;

use crate::monomial::Monomial;
use crate::parse::print_monomial;

/// An ideal generated by monomials, stored by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `gens`: drop duplicates and every generator divisible by another.
    /// Generators are sorted by degree, then exponent vector.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        assert!(all.iter().all(|m| m.nvars() == nvars), "monomial length does not match");
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps())));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// `self + (m)`.
    pub fn add(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain(std::iter::once(m.clone())))
    }

    /// `self : (m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let lcm = g.lcm(m);
                lcm.div(m).expect("m divides lcm")
            }),
        )
    }

    /// Render with the given variable names.
    pub fn display(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|m| print_monomial(m, vars)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[u16]> = self.gens.iter().map(|m| m.exps()).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[3, 0]), m(&[2, 0])]);
        assert_eq!(i.gens(), &[m(&[2, 0]), m(&[1, 1])]);
        assert!(i.contains(&m(&[5, 2])));
        assert!(!i.contains(&m(&[0, 7])));
    }

    #[test]
    fn colon_by_monomial() {
        let i = MonomialIdeal::new(2, [m(&[2, 0])]);
        assert_eq!(i.colon(&m(&[1, 1])), MonomialIdeal::new(2, [m(&[1, 0])]));
        assert!(i.colon(&m(&[2, 0])).is_unit());
    }
}
