//! Exact computations on Koszul-Sullivan complexes and semifree DG modules
//! over ℚ.
//!
//! The crate is organised bottom-up:
//!
//! * [`graded`]: the free graded-commutative algebra `ΛV`, monomials,
//!   wordlength filters, a text format for elements.
//! * [`linalg`]: fraction-free sparse elimination, cohomology windows and
//!   induced maps.
//! * [`sullivan`]: KS complexes, Λ-extensions, fiber differentials, quotient
//!   complexes and the interpolating filtrations `I_k`.
//! * [`invariants`]: truncated Toomer invariants with witnesses, cup length
//!   and the verifier for the fibration estimate of `e`.
//! * [`dg_modules`]: semifree modules, homotopies, mapping cylinders,
//!   lifting and surjective resolutions.
//! * [`corpus`]: JSON input documents, the built-in examples, a seeded
//!   random generator and report assembly for the `koszul` binary.
//!
//! ```
//! use koszul::corpus::builtin;
//! use koszul::invariants::toomer;
//!
//! let spec = builtin("example3").unwrap();
//! let complex = spec.complex().unwrap();
//! let report = toomer(&complex.full(), &complex.algebra().all(), 8, 6).unwrap();
//! assert_eq!(report.candidate, Some(3));
//! assert_eq!(report.certified_lower, 3);
//! ```

pub mod corpus;
pub mod dg_modules;
pub mod error;
pub mod graded;
pub mod invariants;
pub mod linalg;
pub mod sullivan;

pub use error::{Error, Result};

/// Coefficient field.
pub type Rational = num::BigRational;
