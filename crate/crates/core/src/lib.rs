//! Exact computation of Hilbert-Samuel functions and Hilbert coefficients of
//! parameter ideals in rings `R = S / (I_1 ∩ ... ∩ I_g)`, where `S` is a
//! standard graded polynomial ring over a prime field.
//!
//! The engine is layered:
//!
//! * [`algebra`]: prime-field scalars, monomial orders, polynomials, parser.
//! * [`groebner`]: reduced Gröbner bases and normal forms.
//! * [`ideal`]: ideal arithmetic, Krull dimension, Hilbert series, lengths.
//! * [`graded_module`]: the finite-length cokernel `L = (⊕ S/I_i) / R`.
//! * [`hilbert`]: Hilbert-Samuel values and exact coefficient fitting.
//! * [`resolution`]: Koszul and Eagon-Northcott data, two routes to
//!   `λ(Tor_1(L, S/J^n))`.
//! * [`verify`]: end-to-end checks of the closed-form Hilbert polynomial.
//! * [`cli`]: problem files and the `chernlab` command implementations.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod graded_module;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
mod json;
pub mod linalg;
pub mod resolution;
pub mod verify;

pub use algebra::{binomial, poly_parse, Monomial, MonomialOrder, Polynomial, RingContext};
pub use error::{Error, Result};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use ideal::{HilbertSeries, Ideal};
