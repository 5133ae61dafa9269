//! Free graded-commutative algebras `ΛV` over ℚ.
//!
//! Generators carry a positive degree; odd generators are exterior, even ones
//! polynomial. Elements are sparse maps from canonical monomials to rational
//! coefficients.

mod algebra;
mod element;
mod filter;
mod monomial;
mod parse;

pub use algebra::{Generator, GradedAlgebra};
pub use element::AlgebraElement;
pub(crate) use element::same_algebra;
pub use filter::{GeneratorSet, WordlengthBound, WordlengthFilter};
pub use monomial::Monomial;
pub use parse::parse_element;
