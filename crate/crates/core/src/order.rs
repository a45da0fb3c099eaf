//! Monomial orders: grevlex, lex, grlex and block (product) orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::RingError;
use crate::monomial::Monomial;

/// Order used inside a block, or globally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseOrder {
    Grevlex,
    Lex,
    Grlex,
}

/// A contiguous run of variables compared with its own order.
///
/// `weights` define the degree used by graded block orders and the sugar
/// grading of the Gröbner engine. Graded blocks need positive weights; a lex
/// block may carry weight 0 (useful for tag variables).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub len: usize,
    pub order: BaseOrder,
    pub weights: Vec<u32>,
}

impl Block {
    pub fn new(len: usize, order: BaseOrder) -> Self {
        Block { len, order, weights: vec![1; len] }
    }

    pub fn weighted(order: BaseOrder, weights: Vec<u32>) -> Self {
        Block { len: weights.len(), order, weights }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Grlex,
    /// Product order; the first block dominates. A block order with the
    /// eliminated variables in front is an elimination order for them.
    Block(Vec<Block>),
}

impl MonomialOrder {
    /// Two-block elimination order with `front` variables first; both blocks grevlex.
    pub fn elimination(front: usize, back: usize) -> Self {
        MonomialOrder::Block(vec![
            Block::new(front, BaseOrder::Grevlex),
            Block::new(back, BaseOrder::Grevlex),
        ])
    }

    pub fn validate(&self, nvars: usize) -> Result<(), RingError> {
        if let MonomialOrder::Block(blocks) = self {
            let total: usize = blocks.iter().map(|b| b.len).sum();
            if total != nvars {
                return Err(RingError::InvalidOrder(format!(
                    "blocks cover {total} variables, ring has {nvars}"
                )));
            }
            for b in blocks {
                if b.weights.len() != b.len {
                    return Err(RingError::InvalidOrder("block weight count mismatch".into()));
                }
                if b.order != BaseOrder::Lex && b.weights.contains(&0) {
                    return Err(RingError::InvalidOrder(
                        "graded blocks need positive weights".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Per-variable grading used for sugar degrees.
    pub fn grading(&self, nvars: usize) -> Vec<u32> {
        match self {
            MonomialOrder::Block(blocks) => blocks.iter().flat_map(|b| b.weights.iter().copied()).collect(),
            _ => vec![1; nvars],
        }
    }

    /// Compare two monomials of equal length; `Greater` means `a > b`.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| revlex(ea, eb)),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for blk in blocks {
                    let end = start + blk.len;
                    let (sa, sb) = (&ea[start..end], &eb[start..end]);
                    let ord = match blk.order {
                        BaseOrder::Lex => sa.cmp(sb),
                        BaseOrder::Grevlex => {
                            wdeg(sa, &blk.weights).cmp(&wdeg(sb, &blk.weights)).then_with(|| revlex(sa, sb))
                        }
                        BaseOrder::Grlex => {
                            wdeg(sa, &blk.weights).cmp(&wdeg(sb, &blk.weights)).then_with(|| sa.cmp(sb))
                        }
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, RingError> {
        if a.nvars() != b.nvars() {
            return Err(RingError::LengthMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    /// Short name as used in ideal files and on the command line.
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grlex => "grlex".into(),
            MonomialOrder::Block(blocks) => {
                let parts: Vec<String> =
                    blocks.iter().map(|b| format!("{:?}{}", b.order, b.len).to_lowercase()).collect();
                format!("block({})", parts.join(","))
            }
        }
    }
}

#[inline]
fn wdeg(e: &[u16], w: &[u32]) -> u32 {
    e.iter().zip(w).map(|(&x, &w)| x as u32 * w).sum()
}

/// Reverse-lexicographic tie break: the monomial with the smaller exponent in
/// the last differing variable is larger.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            other => Err(RingError::InvalidOrder(format!("unknown order `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x0*x3 < x1*x2 in k[x0..x4]
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1, 0]), &m(&[0, 1, 1, 0, 0])), Ordering::Less);
        // x^3 > x^2 y
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[2, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn grevlex_differs_from_grlex() {
        // x*z^2 vs y^3: grlex prefers x, grevlex penalises the last variable.
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::Grlex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_front() {
        let o = MonomialOrder::elimination(1, 2);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert!(o.validate(3).is_ok());
        assert!(o.validate(4).is_err());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(MonomialOrder::Lex.try_cmp(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
