//! Exact computational homological algebra over finite-dimensional algebras
//! over prime fields: modules, resolutions, Gorenstein approximations,
//! recollements of module categories and the lifting checks for them.

pub mod algebra;
pub mod error;
pub mod homological;
pub mod linalg;
pub mod modrep;
pub mod recollement;
pub mod report;

pub use algebra::{
    Algebra, AlgebraData, AlgebraMap, Bimodule, MornAlgebra, QuiverPresentation, Relation,
};
pub use error::{Error, Result};
pub use linalg::{Field, Mat, Scalar};
pub use modrep::{Module, ModuleHom, MorSeq, Ses};
pub use homological::{Dim, Gorenstein, GorensteinProfile};
pub use recollement::{FunctorName, RecollementInstance, SampleConfig, SampleSuite};
pub use report::{CheckRecord, Side, Verdict, Witness};
