//! Standard graded polynomial rings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::poly::Polynomial;

/// Default bound on the monomial degree of S-pairs in any Groebner run.
pub const DEFAULT_DEGREE_CAP: u32 = 40;

/// `K[x_0, ..., x_n]` with every variable in degree one.
#[derive(Clone)]
pub struct PolyRing<K: Field> {
    field: K,
    var_names: Vec<String>,
    order: MonomialOrder,
    degree_cap: u32,
}

/// Rings are shared between every object built over them.
pub type Ring<K> = Arc<PolyRing<K>>;

impl<K: Field> PolyRing<K> {
    pub fn new(field: K, var_names: Vec<String>, order: MonomialOrder) -> Result<Ring<K>> {
        if var_names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if var_names.len() > MAX_VARS {
            return Err(Error::VariableCapExceeded {
                cap: MAX_VARS,
                needed: var_names.len(),
            });
        }
        for (i, a) in var_names.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::InvalidRing(format!("`{a}` is not a valid variable name")));
            }
            if var_names[..i].contains(a) {
                return Err(Error::InvalidRing(format!("duplicate variable `{a}`")));
            }
        }
        Ok(Arc::new(Self {
            field,
            var_names,
            order,
            degree_cap: DEFAULT_DEGREE_CAP,
        }))
    }

    /// `K[prefix0, ..., prefix{n-1}]` with grevlex.
    pub fn with_vars(field: K, prefix: &str, nvars: usize) -> Result<Ring<K>> {
        Self::new(
            field,
            (0..nvars).map(|i| format!("{prefix}{i}")).collect(),
            MonomialOrder::GRevLex,
        )
    }

    /// Same ring with a different degree cap for Groebner runs.
    pub fn with_degree_cap(&self, cap: u32) -> Ring<K> {
        let mut r = self.clone();
        r.degree_cap = cap;
        Arc::new(r)
    }

    #[inline]
    pub fn field(&self) -> &K {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    /// Krull dimension `n + 1`.
    #[inline]
    pub fn dim(&self) -> i64 {
        self.var_names.len() as i64
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn var(&self, i: usize) -> Polynomial<K> {
        Polynomial::from_terms(self, vec![(Monomial::var(i), self.field.one())])
    }

    pub fn vars(&self) -> Vec<Polynomial<K>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Same field, variables and order; the degree cap is a run setting.
    pub fn same_ring(&self, other: &PolyRing<K>) -> bool {
        self.field == other.field && self.var_names == other.var_names && self.order == other.order
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, v) in self.var_names.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(v.clone()),
                e => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl<K: Field> PartialEq for PolyRing<K> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl<K: Field> fmt::Debug for PolyRing<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.field.name(),
            self.var_names.join(","),
            self.order.name()
        )
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rejects_duplicates_and_overflow() {
        let k = PrimeField::default();
        assert!(PolyRing::new(k, vec!["x".into(), "x".into()], MonomialOrder::GRevLex).is_err());
        assert!(PolyRing::with_vars(k, "x", 17).is_err());
        assert!(PolyRing::with_vars(k, "x", 16).is_ok());
        assert!(PolyRing::new(k, vec!["1x".into()], MonomialOrder::GRevLex).is_err());
    }
}
