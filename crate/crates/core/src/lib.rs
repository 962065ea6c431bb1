//! Exact symbolic kernel for the universal nonassociative enveloping
//! algebra of the one-parameter family of 5-dimensional solvable Malcev
//! algebras, over `Q[g]`.
//!
//! The same product is implemented three independent ways — closed-form
//! structure constants, differential-operator calculus, and recursive
//! straightening — and cross-validated exactly. On top of the kernel sit
//! the center computation, the universal alternative quotient with its
//! explicit multiplication table, the small alternative envelope, an
//! expression parser/evaluator, and JSON serialization.

pub mod alternative;
pub mod bracket;
pub mod center;
pub mod comb;
pub mod doc;
pub mod element;
pub mod engine;
pub mod envelope;
pub mod expr;
pub mod gamma;
pub mod monomial;
pub mod operators;
pub mod oracle;
pub mod verify;

pub use element::Element;
pub use gamma::{GammaCoeff, GammaError, GammaMode, Rational};
pub use monomial::{Gen, Monomial};
