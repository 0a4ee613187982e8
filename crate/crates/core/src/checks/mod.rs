//! Verdicts on structural claims about an algebra, each checked exactly
//! through a degree cap.

mod crossval;
mod homological;
mod structure;
mod verdict;

pub use crossval::{
    bimodule_check, complex_identities, expected_matrix_check, ym_resolution_check, ym_small_complex_check,
};
pub use homological::{euler_poincare, gorenstein, koszulity, poincare_duality, DualityTable};
pub use structure::{centrality, frobenius, hilbert, quadratic_element, quotient_map, FrobeniusReport, PairingRank};
pub use verdict::{kernel_image, HomologyRow, HomologyTable, Status, Verdict, Witness};

#[cfg(test)]
mod tests;
