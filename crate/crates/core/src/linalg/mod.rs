//! Exact linear algebra over ℚ and cohomology of finite cochain windows.

mod cohomology;
mod echelon;
mod matrix;
mod vector;

pub use cohomology::{
    cocycle_from_class, cohomology, induced_map, ChainMap, Cochains, CohomologyWindow, DegreeCohomology,
    DegreeMap, InducedMap,
};
pub use echelon::{EchelonBasis, Insertion, Reduction};
pub use matrix::{PivotOrder, Preimage, RationalMatrix};
pub use vector::SparseVector;
