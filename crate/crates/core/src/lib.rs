//! Exact computations with N-homogeneous algebras: graded components,
//! duals, Koszul and Hochschild complexes sliced by internal degree.

pub mod checks;
pub mod complexes;
pub mod error;
pub mod exactla;
pub mod families;
pub mod homalg;
pub mod tensorspace;

pub use error::{Error, Result};
