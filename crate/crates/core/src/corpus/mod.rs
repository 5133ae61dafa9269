//! Input documents, built-in examples, the seeded corpus generator and the
//! report pipelines behind the `koszul` binary.

mod builtin;
mod generate;
mod pipeline;
mod report;
mod spec;

pub use builtin::{builtin, builtin_names, example3, BUILTIN_NAMES};
pub use generate::{corpus_generate, GeneratorParams};
pub use pipeline::{
    cohomology_report, corpus_run, cylinder_demo, fiber_report, instance_seed, toomer_report, validate,
    verify_bound_report, Document, Subset, CORPUS_FILTRATION_DEGREE,
};
pub use report::{sha256_hex, Outcome, RunReport};
pub use spec::{AlgebraSpec, Expected, GeneratorSpec, Metadata, Role};
