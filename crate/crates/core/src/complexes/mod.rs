//! Koszul-type complexes of free modules over `A`, sliced by internal
//! degree: the N-complex `K(A)`, its contractions (the Koszul complex among
//! them), the dual cochain complex `L(A, K)`, the bimodule resolution and
//! the small Hochschild complexes.
//!
//! Every space is `M_m ⊗ W_ν` (or its dual) with `W_ν = (A^!*)_ν`, and
//! every map peels letters off the basis vectors of `W_ν`.

mod bimodule;
mod chains;
mod dual_bases;
mod maps;
mod slice;
mod yang_mills;

pub use bimodule::{bimodule_slices, BimoduleIdentities, BimoduleSlice, BimoduleSpace};
pub use chains::{
    contraction_nu, contraction_slices, hochschild_cochain_slices, hochschild_with_bases, koszul_nu, koszul_slices,
    l_cochain_slices, left_power, n_complex_slices, small_hochschild_slices, Coefficients,
};
pub use dual_bases::{DualBases, Piece};
pub(crate) use maps::{chain_map, Term};
pub use slice::{ComplexSlice, Direction};
pub use yang_mills::{ym_dual_bases, ym_resolution_differentials, ym_small_differentials, Reading};
