//! Polynomial ring contexts.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::RingError;
use crate::field::Field;
use crate::order::MonomialOrder;

/// `k[vars]` with a coefficient field and the active monomial order used to
/// sort polynomial terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
    grading: Vec<u32>,
}

impl Ring {
    pub fn new(vars: Vec<String>, field: Field, order: MonomialOrder) -> Result<Arc<Ring>, RingError> {
        if vars.is_empty() {
            return Err(RingError::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(RingError::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v.as_str()) {
                return Err(RingError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        let grading = order.grading(vars.len());
        Ok(Arc::new(Ring { vars, field, order, grading }))
    }

    /// `k[x0, ..., x{n-1}]` under grevlex.
    pub fn standard(nvars: usize, field: Field) -> Arc<Ring> {
        Self::new((0..nvars).map(|i| format!("x{i}")).collect(), field, MonomialOrder::Grevlex)
            .expect("standard ring is valid")
    }

    /// Ring with the given variable names under grevlex over `field`.
    pub fn with_vars(names: &[&str], field: Field) -> Result<Arc<Ring>, RingError> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), field, MonomialOrder::Grevlex)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Variable weights used for sugar degrees (all 1 unless a weighted block order is active).
    pub fn grading(&self) -> &[u32] {
        &self.grading
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>, RingError> {
        Ring::new(self.vars.clone(), self.field, order)
    }

    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring { field, ..self.clone() })
    }

    /// Same variables and field (orders may differ).
    pub fn compatible(&self, other: &Ring) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_contexts() {
        assert!(Ring::with_vars(&[], Field::Rationals).is_err());
        assert!(Ring::with_vars(&["x", "x"], Field::Rationals).is_err());
        assert!(Ring::with_vars(&["1x"], Field::Rationals).is_err());
        let r = Ring::standard(5, Field::Rationals);
        assert_eq!(r.var_index("x3"), Some(3));
        assert_eq!(r.nvars(), 5);
    }
}
