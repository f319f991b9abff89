//! Exact computations with BiHom-type algebraic structures given by
//! structure constants over ℚ or a prime field.

pub mod bundle;
pub mod check;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod infinitesimal;
pub mod io;
pub mod linalg;
pub mod quasitriangular;
pub mod registry;
pub mod scalar;
pub mod search;
pub mod tensor;

pub use bundle::{Kind, Provenance, StructureBundle};
pub use check::{CheckReport, Side, Value, Violation};
pub use error::{Error, Result};
pub use linalg::{LinearMap, Vector};
pub use scalar::{Field, Scalar};
pub use tensor::{Coproduct, Product, Tensor};
