use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::field::Scalar;
use crate::algebra::monomial::Monomial;
use crate::algebra::ring::RingContext;
use crate::error::{Error, Result};

/// A polynomial over `F_p`, stored as a list of terms sorted strictly
/// descending under the ring's monomial order. Coefficients are never zero.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingContext,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &RingContext) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingContext, c: i64) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), ring.field().from_i64(c))
    }

    pub fn variable(ring: &RingContext, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Self::term(ring, Monomial::variable(ring.nvars(), index), 1)
    }

    pub fn term(ring: &RingContext, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let c = c % ring.characteristic();
        Polynomial {
            ring: ring.clone(),
            terms: if c == 0 { Vec::new() } else { vec![(m, c)] },
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms(ring: &RingContext, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        let order = ring.order();
        let field = *ring.field();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let c = c % field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<Scalar> {
        self.terms.first().map(|t| t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.compare(m, &t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn scale(&self, c: Scalar) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: Scalar) -> Polynomial {
        let field = self.ring.field();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(*a, c)))
                .collect(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, self.ring.field().neg(1), None))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                terms.push((a.mul(b), field.mul(*ca, *cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, 1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self + c * m * other` (with `m = 1` when `shift` is `None`), computed
    /// by a single merge.
    pub(crate) fn combine(
        &self,
        other: &Polynomial,
        c: Scalar,
        shift: Option<&Monomial>,
    ) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_terms(&self.ring, &self.terms, &other.terms, c, shift),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &RingContext, terms: Vec<(Monomial, Scalar)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Re-expresses the polynomial in a ring with the same variables but a
    /// possibly different order.
    pub fn to_ring(&self, ring: &RingContext) -> Result<Polynomial> {
        if ring.variables() != self.ring.variables()
            || ring.characteristic() != self.ring.characteristic()
        {
            return Err(Error::ContextMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    pub(crate) fn map_monomials(
        &self,
        ring: &RingContext,
        f: impl Fn(&Monomial) -> Monomial,
    ) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), *c)).collect())
    }

    /// Applies a linear substitution `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        if images.iter().any(|p| p.ring != target) {
            return Err(Error::ContextMismatch);
        }
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, *c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

/// Merges the sorted term lists `lhs + c * shift * rhs`.
pub(crate) fn merge_terms(
    ring: &RingContext,
    lhs: &[(Monomial, Scalar)],
    rhs: &[(Monomial, Scalar)],
    c: Scalar,
    shift: Option<&Monomial>,
) -> Vec<(Monomial, Scalar)> {
    let order = ring.order();
    let field = ring.field();
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let mut i = 0;
    for (m, a) in rhs {
        let m = match shift {
            Some(s) => m.mul(s),
            None => m.clone(),
        };
        let a = field.mul(*a, c);
        while i < lhs.len() && order.compare(&lhs[i].0, &m) == Ordering::Greater {
            out.push(lhs[i].clone());
            i += 1;
        }
        if i < lhs.len() && lhs[i].0 == m {
            let s = field.add(lhs[i].1, a);
            if s != 0 {
                out.push((m, s));
            }
            i += 1;
        } else if a != 0 {
            out.push((m, a));
        }
    }
    out.extend_from_slice(&lhs[i..]);
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let c = field.to_signed(*c);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                let name = &self.ring.variables()[i];
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Checked product; fails when the factors live in different rings.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.try_mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::poly_parse;

    fn ring() -> RingContext {
        RingContext::grevlex(&["x", "y", "z", "w"]).unwrap()
    }

    #[test]
    fn products() {
        let r = ring();
        let p = |s| poly_parse(s, &r).unwrap();
        assert_eq!(poly_mul(&p("x"), &p("z")).unwrap(), p("x*z"));
        assert!(poly_mul(&p("x+y"), &Polynomial::zero(&r))
            .unwrap()
            .is_zero());
        assert_eq!(p("x+z").pow(2), p("x^2 + 2*x*z + z^2"));
        assert_eq!((&p("x+z") * &p("x+z")).degree(), Some(2));
    }

    #[test]
    fn mismatched_rings() {
        let a = Polynomial::variable(&ring(), 0);
        let b = Polynomial::variable(&RingContext::grevlex(&["x", "y"]).unwrap(), 0);
        assert_eq!(poly_mul(&a, &b), Err(Error::ContextMismatch));
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn combine_cancels() {
        let r = ring();
        let f = poly_parse("x^2 + x*y", &r).unwrap();
        let g = poly_parse("x + y", &r).unwrap();
        let x = Monomial::variable(4, 0);
        let h = f.combine(&g, r.field().neg(1), Some(&x));
        assert!(h.is_zero());
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let r = ring();
        let f = poly_parse("x^2 - 2*x*y + 5", &r).unwrap();
        assert_eq!(f.to_string(), "x^2 - 2*x*y + 5");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(poly_parse("-x", &r).unwrap().to_string(), "-x");
    }

    #[test]
    fn homogeneity_and_degree() {
        let r = ring();
        assert!(poly_parse("x*y - z^2", &r).unwrap().is_homogeneous());
        assert!(!poly_parse("x^2 - y", &r).unwrap().is_homogeneous());
        assert_eq!(Polynomial::zero(&r).degree(), None);
    }
}
