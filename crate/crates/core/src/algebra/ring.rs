use std::fmt;
use std::sync::Arc;

use crate::algebra::field::PrimeField;
use crate::algebra::monomial::MonomialOrder;
use crate::error::{Error, Result};

/// Default characteristic of the coefficient field.
pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    variables: Vec<String>,
    field: PrimeField,
    order: MonomialOrder,
}

/// The ambient polynomial ring `F_p[x_0, ..., x_{r-1}]` with a monomial
/// order. Cheap to clone; all polynomials keep a handle to their ring.
#[derive(Clone)]
pub struct RingContext(Arc<RingInner>);

impl RingContext {
    pub fn new<S: AsRef<str>>(
        variables: &[S],
        characteristic: u64,
        order: MonomialOrder,
    ) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > variables.len() {
                return Err(Error::InvalidRing(format!(
                    "cannot eliminate {k} of {} variables",
                    variables.len()
                )));
            }
        }
        if variables.len() > u16::MAX as usize {
            return Err(Error::InvalidRing("too many variables".into()));
        }
        let field = PrimeField::new(characteristic)?;
        Ok(RingContext(Arc::new(RingInner {
            variables,
            field,
            order,
        })))
    }

    /// Grevlex ring over `F_32003`.
    pub fn grevlex<S: AsRef<str>>(variables: &[S]) -> Result<Self> {
        Self::new(variables, DEFAULT_CHARACTERISTIC, MonomialOrder::Grevlex)
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(&self.0.variables, self.characteristic() as u64, order)
    }

    /// Ring with a fresh variable prepended and an order eliminating it.
    pub(crate) fn with_elimination_variable(&self) -> RingContext {
        let mut name = String::from("t");
        while self.variable_index(&name).is_some() {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.nvars() + 1);
        vars.push(name);
        vars.extend(self.0.variables.iter().cloned());
        Self::new(
            &vars,
            self.characteristic() as u64,
            MonomialOrder::Elimination(1),
        )
        .expect("extending a valid ring")
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({:?})",
            self.characteristic(),
            self.0.variables.join(","),
            self.0.order
        )
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        assert!(RingContext::grevlex::<&str>(&[]).is_err());
        assert!(RingContext::grevlex(&["x", "x"]).is_err());
        assert!(RingContext::grevlex(&["2x"]).is_err());
        assert!(RingContext::new(&["x"], 9, MonomialOrder::Grevlex).is_err());
        assert!(RingContext::new(&["x"], 3, MonomialOrder::Elimination(2)).is_err());
    }

    #[test]
    fn elimination_variable_is_fresh() {
        let r = RingContext::grevlex(&["t", "x"]).unwrap();
        let e = r.with_elimination_variable();
        assert_eq!(e.variables(), &["t_", "t", "x"]);
        assert_eq!(e.order(), MonomialOrder::Elimination(1));
    }

    #[test]
    fn equality_is_structural() {
        let a = RingContext::grevlex(&["x", "y"]).unwrap();
        let b = RingContext::grevlex(&["x", "y"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, a.with_order(MonomialOrder::Lex).unwrap());
    }
}
