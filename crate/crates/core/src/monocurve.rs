//! Defining ideals of projective monomial curves.
//!
//! The curve of degrees `a1 < ... < an` is the image of `P^1` under
//! `x_i = s^(d - a_i) w^(a_i)` with `a_0 = 0` and `d = a_n`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::{BaseOrder, Block};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    degrees: Vec<u32>,
}

impl CurveSpec {
    /// Degrees must be positive, strictly increasing and coprime as a set.
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidCurve("at least one degree is required".into()));
        }
        if degrees[0] == 0 {
            return Err(Error::InvalidCurve("degrees must be positive".into()));
        }
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCurve("degrees must be strictly increasing".into()));
        }
        let g = degrees.iter().fold(0u32, |g, &a| g.gcd(&a));
        if g != 1 {
            return Err(Error::InvalidCurve(format!("degrees have common divisor {g}")));
        }
        Ok(CurveSpec { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `d = a_n`, the degree of the curve.
    pub fn degree(&self) -> u32 {
        *self.degrees.last().unwrap()
    }

    /// Number of projective coordinates `n + 1`.
    pub fn nvars(&self) -> usize {
        self.degrees.len() + 1
    }

    /// `(s, w)` exponents of the image of `x_i`.
    pub fn image(&self, i: usize) -> (u32, u32) {
        let a = if i == 0 { 0 } else { self.degrees[i - 1] };
        (self.degree() - a, a)
    }

    /// `k[x0, ..., xn]` under grevlex.
    pub fn ring(&self, field: Field) -> Arc<Ring> {
        Ring::standard(self.nvars(), field)
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidCurve(format!("bad degree `{}`", p.trim()))))
            .collect::<Result<Vec<_>>>()?;
        CurveSpec::new(degrees)
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "C({})", parts.join(","))
    }
}

/// Kernel of `x_i -> s^(d - a_i) w^(a_i)`, by eliminating `s, w`. Returned
/// with a minimal homogeneous generating set.
pub fn curve_ideal(spec: &CurveSpec, field: Field) -> Result<Ideal> {
    let n = spec.nvars();
    let mut names = vec!["s".to_string(), "w".to_string()];
    names.extend((0..n).map(|i| format!("x{i}")));
    let big = Ring::new(names, field, crate::order::MonomialOrder::Grevlex)?;
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let (es, ew) = spec.image(i);
        let mut exps = vec![0u32; n + 2];
        exps[0] = es;
        exps[1] = ew;
        let param = Polynomial::monomial(&big, field.one(), Monomial::new(&exps)?);
        gens.push(&Polynomial::var(&big, i + 2) - &param);
    }
    let graph = Ideal::new(&big, gens)?;
    // x_i has weight d, so the graph ideal is homogeneous and sugar is exact.
    let kernel = graph.eliminate_with(
        &[0, 1],
        Block::new(2, BaseOrder::Grevlex),
        Block::weighted(BaseOrder::Grevlex, vec![spec.degree(); n]),
    )?;
    let ring = spec.ring(field);
    let back: Vec<Option<usize>> = (0..n).map(|i| Some(i + 2)).collect();
    let ideal = kernel.remap(&ring, &back)?;
    Ideal::new(&ring, ideal.minimal_generators()?)
}

/// Does every generator of `ideal` vanish under the parametrization?
pub fn parametrization_check(ideal: &Ideal, spec: &CurveSpec) -> Result<bool> {
    if ideal.ring().nvars() != spec.nvars() {
        return Err(Error::InvalidArgument(format!(
            "ring has {} variables, curve needs {}",
            ideal.ring().nvars(),
            spec.nvars()
        )));
    }
    let sw = Ring::with_vars(&["s", "w"], ideal.ring().field())?;
    let images: Vec<(u32, u32)> = (0..spec.nvars()).map(|i| spec.image(i)).collect();
    for g in ideal.gens() {
        let mut terms = Vec::with_capacity(g.len());
        for t in g.terms() {
            let (mut es, mut ew) = (0u32, 0u32);
            for (i, &e) in t.mono.exps().iter().enumerate() {
                es += e as u32 * images[i].0;
                ew += e as u32 * images[i].1;
            }
            terms.push((t.coeff.clone(), Monomial::new(&[es, ew])?));
        }
        if !Polynomial::from_terms(&sw, terms).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_specs() {
        assert!(CurveSpec::new(vec![2, 1]).is_err());
        assert!(CurveSpec::new(vec![0, 1]).is_err());
        assert!(CurveSpec::new(vec![2, 4]).is_err());
        assert!("1,x".parse::<CurveSpec>().is_err());
        assert_eq!("1, 2,3".parse::<CurveSpec>().unwrap().degrees(), &[1, 2, 3]);
    }

    #[test]
    fn twisted_cubic() {
        let spec: CurveSpec = "1,2,3".parse().unwrap();
        let i = curve_ideal(&spec, Field::Rationals).unwrap();
        let expected = Ideal::parse(i.ring(), &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert!(i.equals(&expected).unwrap());
        assert!(parametrization_check(&i, &spec).unwrap());
    }

    #[test]
    fn perturbed_generator_fails_check() {
        let spec: CurveSpec = "1,2,3,9".parse().unwrap();
        let r = spec.ring(Field::Rationals);
        let good = Ideal::parse(&r, &["x3^3 - x0^2*x4"]).unwrap();
        assert!(parametrization_check(&good, &spec).unwrap());
        let bad = Ideal::parse(&r, &["x3^3 - x0^2*x4 + x4^2"]).unwrap();
        assert!(!parametrization_check(&bad, &spec).unwrap());
    }
}
