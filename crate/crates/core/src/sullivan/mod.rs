//! KS complexes, Λ-extensions and the complexes derived from them.

mod complex;
mod extension;
mod filtration;
mod quotient;

pub use complex::{DSquaredReport, KsComplex, MinimalityReport, SullivanFiltration};
pub use extension::{ExtensionFiltration, LambdaExtension};
pub use filtration::{ClosureCertificate, InterpolatingFiltration, LevelCheck};
pub use quotient::{DegreeBasis, QuotientComplex, Region, Staircase};
