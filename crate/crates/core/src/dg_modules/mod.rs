//! Finite-rank DG modules over a KS complex: morphisms, homotopies, the
//! mapping cylinder, lifts through surjective quasi-isomorphisms and windowed
//! semifree resolutions.

mod cylinder;
mod lift;
mod module;
mod morphism;
pub mod random;
mod resolution;

pub use cylinder::{mapping_cylinder, strictify, Cylinder, CylinderCheck};
pub use lift::{homotopy_between_lifts, lift_through_surjection};
pub use module::{DGModule, ModuleBasis, ModuleElement, ModuleGenerator};
pub use morphism::{check_homotopy, Homotopy, ModuleMorphism};
pub use resolution::{surjective_resolution, Resolution, ResolutionCertificate};
