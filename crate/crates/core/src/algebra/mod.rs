//! Exact arithmetic: prime fields, monomials and orders, polynomials, the
//! polynomial parser, and big-integer binomials.

pub mod binomial;
pub mod field;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use binomial::binomial;
pub use field::{PrimeField, Scalar};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::poly_parse;
pub use polynomial::{poly_mul, Polynomial};
pub use ring::{RingContext, DEFAULT_CHARACTERISTIC};
