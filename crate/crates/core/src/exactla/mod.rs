//! Exact scalars, sparse vectors and the matrix kernel.

mod echelon;
mod field;
mod mat;
mod rational;
pub mod sparse;

pub use echelon::{rank_of, rref_of, Echelon};
pub use field::{
    is_prime, rat_to_i64, Coeff, Field, FieldSpec, Gaussian, GaussianRationals, PrimeField, Rationals, DEFAULT_PRIME,
};
pub use mat::{Mat, Rref};
pub use rational::{ParseRatError, Rat};
pub use sparse::SparseVec;
