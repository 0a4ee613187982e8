//! Slices of the complexes of free modules built on the dual components.

use super::dual_bases::DualBases;
use super::maps::{adim, chain_map, cochain_map, Term};
use super::slice::{ComplexSlice, Direction};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::homalg::GradedAlgebra;

/// `ν` in homological degree `k` of the contraction `C_{p,r}`:
/// `r, N−p+r, N+r, 2N−p+r, …`.
pub fn contraction_nu(big_n: usize, arrows: usize, offset: usize, k: usize) -> usize {
    let t = k / 2;
    if k.is_multiple_of(2) {
        big_n * t + offset
    } else {
        big_n * t + big_n - arrows + offset
    }
}

/// `ν` of the Koszul complex (`C_{N−1,0}`): `0, 1, N, N+1, 2N, …`.
pub fn koszul_nu(big_n: usize, k: usize) -> usize {
    contraction_nu(big_n, big_n - 1, 0, k)
}

/// All `ν(k) ≤ cap` with `W_ν ≠ 0`.
fn nonzero_nus(w: &DualBases<impl Field>, cap: usize, nu: impl Fn(usize) -> usize) -> Vec<usize> {
    (0..).map(nu).take_while(|&v| v <= cap && w.dim(v) > 0).collect()
}

fn prepare<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<DualBases<F>> {
    a.ensure(cap)?;
    DualBases::reduced(a, cap)
}

/// Chain slice at internal degree `n` with spaces `A_{n−ν_k} ⊗ W_{ν_k}`
/// and `d^{ν_{k+1}−ν_k}` between neighbours.
pub(crate) fn left_slice<F: Field>(
    a: &mut GradedAlgebra<F>,
    w: &DualBases<F>,
    n: usize,
    nus: &[usize],
    nilpotency: usize,
) -> Result<ComplexSlice<F>> {
    let n = n as i64;
    let dims = nus
        .iter()
        .map(|&v| Ok(adim(a, n - v as i64)? * w.dim(v)))
        .collect::<Result<Vec<_>>>()?;
    let maps = nus
        .windows(2)
        .map(|p| chain_map(a, w, n - p[1] as i64, p[1], &[Term::new(p[1] - p[0], 0, 1)]))
        .collect::<Result<Vec<_>>>()?;
    ComplexSlice::new(n, Direction::Chain, nus.to_vec(), dims, maps, nilpotency)
}

/// The contraction `C_{p,r}(K(A))` sliced at internal degrees `0..=cap`.
pub fn contraction_slices<F: Field>(
    a: &mut GradedAlgebra<F>,
    arrows: usize,
    offset: usize,
    cap: usize,
) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = a.presentation().degree();
    if !(offset < arrows && arrows < big_n) {
        return Err(Error::InvalidParameter(format!(
            "contraction needs 0 ≤ r < p ≤ N−1, got p = {arrows}, r = {offset}, N = {big_n}"
        )));
    }
    let w = prepare(a, cap)?;
    let nus = nonzero_nus(&w, cap, |k| contraction_nu(big_n, arrows, offset, k));
    (0..=cap).map(|n| left_slice(a, &w, n, &nus, 2)).collect()
}

/// The Koszul complex `K(A, K)` sliced at internal degrees `0..=cap`.
pub fn koszul_slices<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = a.presentation().degree();
    contraction_slices(a, big_n - 1, 0, cap)
}

/// The N-complex `K(A)` itself: every `ν`, single `d` between neighbours,
/// checked for `d^N = 0`.
pub fn n_complex_slices<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = a.presentation().degree();
    let w = prepare(a, cap)?;
    let nus = nonzero_nus(&w, cap, |k| k);
    (0..=cap).map(|n| left_slice(a, &w, n, &nus, big_n)).collect()
}

/// `d^j : A_m ⊗ W_ν → A_{m+j} ⊗ W_{ν−j}` as one map.
pub fn left_power<F: Field>(a: &mut GradedAlgebra<F>, m: usize, nu: usize, j: usize) -> Result<Mat<F>> {
    let w = prepare(a, m + nu)?;
    a.ensure(m + j)?;
    chain_map(a, &w, m as i64, nu, &[Term::new(j, 0, 1)])
}

/// `L(A, K) = Hom_A(K(A, K), A)` in homological degrees `0..=D`, sliced by
/// `t = deg(value) − ν`, for `t` from `−ν_D` to `cap − ν_D`.
pub fn l_cochain_slices<F: Field>(
    a: &mut GradedAlgebra<F>,
    global_dim: usize,
    cap: usize,
) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = a.presentation().degree();
    let nus: Vec<usize> = (0..=global_dim).map(|k| koszul_nu(big_n, k)).collect();
    let top = nus[global_dim];
    if top > cap {
        return Err(Error::DegreeOutOfRange {
            requested: top,
            available: cap,
        });
    }
    let w = prepare(a, cap)?;
    (-(top as i64)..=(cap - top) as i64)
        .map(|t| {
            let dims = nus
                .iter()
                .map(|&v| Ok(w.dim(v) * adim(a, t + v as i64)?))
                .collect::<Result<Vec<_>>>()?;
            let maps = nus
                .windows(2)
                .map(|p| cochain_map(a, &w, t + p[0] as i64, p[0], &[Term::new(p[1] - p[0], 0, 1)]))
                .collect::<Result<Vec<_>>>()?;
            ComplexSlice::new(t, Direction::Cochain, nus.clone(), dims, maps, 2)
        })
        .collect()
}

/// Coefficient bimodule of the small Hochschild complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// `M = A`
    Algebra,
    /// `M = K` through the augmentation
    Trivial,
}

/// The terms of `δ` leaving homological degree `k ≥ 1`: `d_L − d_R` from odd
/// degrees, `Σ_p d_L^p d_R^{N−1−p}` from even ones.
fn hochschild_terms(big_n: usize, k: usize) -> Vec<Term> {
    if k % 2 == 1 {
        vec![Term::new(1, 0, 1), Term::new(0, 1, -1)]
    } else {
        (0..big_n).map(|p| Term::new(p, big_n - 1 - p, 1)).collect()
    }
}

fn check_hochschild_degree<F: Field>(a: &GradedAlgebra<F>) -> Result<usize> {
    let big_n = a.presentation().degree();
    if big_n == 2 || big_n == 3 {
        Ok(big_n)
    } else {
        Err(Error::Unsupported(format!(
            "small Hochschild complex for relation degree {big_n}"
        )))
    }
}

/// The small Hochschild complex `S(A, M)`: spaces `M_{n−ν_k} ⊗ W_{ν_k}`
/// at internal degrees `0..=cap`.
pub fn small_hochschild_slices<F: Field>(
    a: &mut GradedAlgebra<F>,
    coefficients: Coefficients,
    cap: usize,
) -> Result<Vec<ComplexSlice<F>>> {
    let w = prepare(a, cap)?;
    hochschild_with_bases(a, &w, coefficients, cap)
}

/// As [`small_hochschild_slices`] with caller-chosen bases of the `W_ν`.
pub fn hochschild_with_bases<F: Field>(
    a: &mut GradedAlgebra<F>,
    w: &DualBases<F>,
    coefficients: Coefficients,
    cap: usize,
) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = check_hochschild_degree(a)?;
    a.ensure(cap)?;
    let nus = nonzero_nus(w, cap, |k| koszul_nu(big_n, k));
    let f = a.field().clone();
    (0..=cap as i64)
        .map(|n| {
            let mdim = |a: &GradedAlgebra<F>, d: i64| -> Result<usize> {
                match coefficients {
                    Coefficients::Algebra => adim(a, d),
                    Coefficients::Trivial => Ok((d == 0) as usize),
                }
            };
            let dims = nus
                .iter()
                .map(|&v| Ok(mdim(a, n - v as i64)? * w.dim(v)))
                .collect::<Result<Vec<_>>>()?;
            let maps = (1..nus.len())
                .map(|k| match coefficients {
                    Coefficients::Algebra => chain_map(a, w, n - nus[k] as i64, nus[k], &hochschild_terms(big_n, k)),
                    // every term moves at least one letter onto a module where letters act by zero
                    Coefficients::Trivial => Ok(Mat::zeros(f.clone(), dims[k - 1], dims[k])),
                })
                .collect::<Result<Vec<_>>>()?;
            ComplexSlice::new(n, Direction::Chain, nus.clone(), dims, maps, 2)
        })
        .collect()
}

/// The dual small complex `Hom(W_ν, A)` computing Hochschild cohomology,
/// sliced by `t = deg(value) − ν` for `t` from `−ν_top` to `cap − ν_top`.
pub fn hochschild_cochain_slices<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Vec<ComplexSlice<F>>> {
    let big_n = check_hochschild_degree(a)?;
    let w = prepare(a, cap)?;
    let nus = nonzero_nus(&w, cap, |k| koszul_nu(big_n, k));
    let top = *nus.last().expect("W_0 is never zero");
    (-(top as i64)..=(cap - top) as i64)
        .map(|t| {
            let dims = nus
                .iter()
                .map(|&v| Ok(w.dim(v) * adim(a, t + v as i64)?))
                .collect::<Result<Vec<_>>>()?;
            let maps = (1..nus.len())
                .map(|k| cochain_map(a, &w, t + nus[k - 1] as i64, nus[k - 1], &hochschild_terms(big_n, k)))
                .collect::<Result<Vec<_>>>()?;
            ComplexSlice::new(t, Direction::Cochain, nus.clone(), dims, maps, 2)
        })
        .collect()
}
