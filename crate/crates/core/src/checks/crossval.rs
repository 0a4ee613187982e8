use super::verdict::{Verdict, Witness};
use crate::complexes::{
    bimodule_slices, chain_map, hochschild_cochain_slices, hochschild_with_bases, koszul_nu, koszul_slices,
    l_cochain_slices, n_complex_slices, small_hochschild_slices, ym_dual_bases, ym_resolution_differentials,
    ym_small_differentials, BimoduleSlice, Coefficients, DualBases, Reading, Term,
};
use crate::error::{Error, Result};
use crate::exactla::{sparse, Field, Mat};
use crate::families::{expected_matrices, FamilyKind, FamilySpec};
use crate::homalg::GradedAlgebra;

/// The Koszul differential `A ⊗ W_N → A ⊗ W_1` in the basis of `W_N` given
/// by the rows of each structure matrix, against right multiplication by
/// that matrix, for internal degrees `N..=cap`.
pub fn expected_matrix_check<F: Field>(a: &mut GradedAlgebra<F>, spec: &FamilySpec, cap: usize) -> Result<Verdict> {
    let f = a.field().clone();
    let g = a.generators();
    let big_n = a.presentation().degree();
    let matrices = expected_matrices(&f, spec)?;
    let mut witnesses = Vec::new();
    a.ensure(cap)?;
    for x in &matrices {
        if x.degree + 1 != big_n || x.ncols() != g {
            return Err(Error::Shape(format!("matrix {} does not fit the presentation", x.name)));
        }
        let rows: Vec<_> = (0..x.nrows()).map(|mu| x.row_tensor(&f, mu)).collect();
        let ambient = g.pow(big_n as u32);
        let w = match DualBases::reduced(a, cap)?.with_basis(big_n, Mat::from_sparse_rows(f.clone(), ambient, rows)?) {
            Ok(w) => w,
            Err(Error::NotInSubspace(_)) => {
                witnesses.push(Witness::note(format!("rows of {} do not form a basis of R", x.name)));
                continue;
            }
            Err(e) => return Err(e),
        };
        let entries = x
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| a.reduce_tensor(x.degree, t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for n in big_n..=cap {
            let m = n - big_n;
            let generic = chain_map(a, &w, m as i64, big_n, &[Term::new(big_n - 1, 0, 1)])?;
            let mut cols = Vec::with_capacity(generic.ncols());
            for pos in 0..a.dim(m)? {
                let e = a.basis_element(m, pos);
                for row in &entries {
                    let mut col = Vec::new();
                    for (nu, entry) in row.iter().enumerate() {
                        let prod = a.mul(&e, entry)?;
                        col.extend(prod.coords.into_iter().map(|(p, c)| (p * g + nu, c)));
                    }
                    cols.push(sparse::collect(&f, col));
                }
            }
            let direct = Mat::from_columns(f.clone(), generic.nrows(), &cols);
            if direct != generic {
                witnesses.push(Witness {
                    homological_degree: Some(2),
                    internal_degree: Some(n as i64),
                    detail: format!("Koszul differential differs from right multiplication by {}", x.name),
                    ..Witness::default()
                });
            }
        }
    }
    let names: Vec<_> = matrices.iter().map(|x| x.name.clone()).collect();
    Ok(Verdict::up_to_cap(
        format!("structure matrices {}", names.join(",")),
        cap,
        witnesses,
    ))
}

fn require_ym(spec: &FamilySpec) -> Result<()> {
    if spec.kind != FamilyKind::YangMills {
        return Err(Error::InvalidParameter(format!(
            "closed forms exist only for yang-mills, not {}",
            spec.kind
        )));
    }
    Ok(())
}

/// The generic small complex against the commutator formulas.
pub fn ym_small_complex_check<F: Field>(a: &mut GradedAlgebra<F>, spec: &FamilySpec, cap: usize) -> Result<Verdict> {
    require_ym(spec)?;
    let w = ym_dual_bases(a, spec)?;
    let generic = hochschild_with_bases(a, &w, Coefficients::Algebra, cap)?;
    let mut witnesses = Vec::new();
    for (n, slice) in generic.iter().enumerate() {
        let explicit = ym_small_differentials(a, spec, n)?;
        for (k, m) in explicit.iter().enumerate() {
            if slice.maps().get(k).is_some_and(|g| g != m) {
                witnesses.push(Witness {
                    homological_degree: Some(k + 1),
                    internal_degree: Some(n as i64),
                    detail: format!("δ_{} differs from its commutator formula", k + 1),
                    ..Witness::default()
                });
            }
        }
    }
    Ok(Verdict::up_to_cap("small complex closed form", cap, witnesses))
}

/// The generic bimodule resolution against its closed form.
pub fn ym_resolution_check<F: Field>(
    a: &mut GradedAlgebra<F>,
    spec: &FamilySpec,
    cap: usize,
    reading: Reading,
) -> Result<Verdict> {
    require_ym(spec)?;
    let w = ym_dual_bases(a, spec)?;
    let mut witnesses = Vec::new();
    for n in 0..=cap {
        let slice = BimoduleSlice::build(a, &w, n)?;
        let generic = slice.resolution(3)?;
        let explicit = ym_resolution_differentials(a, spec, &slice, reading)?;
        for (k, m) in explicit.iter().enumerate() {
            if generic.maps().get(k).is_some_and(|g| g != m) {
                witnesses.push(Witness {
                    homological_degree: Some(k + 1),
                    internal_degree: Some(n as i64),
                    detail: format!("δ′_{} differs from its closed form", k + 1),
                    ..Witness::default()
                });
            }
        }
    }
    Ok(Verdict::up_to_cap(
        format!("resolution closed form ({reading:?})"),
        cap,
        witnesses,
    ))
}

/// Commutation, nilpotency and factorization of `d_L`, `d_R`, and exactness
/// of the resolution they build.
pub fn bimodule_check<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Verdict> {
    let big_n = a.presentation().degree();
    let mut witnesses = Vec::new();
    for slice in bimodule_slices(a, cap)? {
        let n = slice.internal_degree();
        let ids = slice.identities(big_n)?;
        for (ok, what) in [
            (ids.commute, "d_L d_R ≠ d_R d_L"),
            (ids.left_nilpotent, "d_L^N ≠ 0"),
            (ids.right_nilpotent, "d_R^N ≠ 0"),
            (ids.factorization, "d_L^N − d_R^N does not factor through d_L − d_R"),
        ] {
            if !ok {
                witnesses.push(Witness {
                    internal_degree: Some(n as i64),
                    detail: what.into(),
                    ..Witness::default()
                });
            }
        }
        let res = slice.resolution(big_n)?;
        let h = res.homology()?;
        if h[0] != a.dim(n)? || h[1..].iter().any(|&x| x != 0) {
            witnesses.push(Witness {
                internal_degree: Some(n as i64),
                detail: format!("resolution homology {h:?} is not A_{n} in degree 0"),
                ..Witness::default()
            });
        }
    }
    Ok(Verdict::up_to_cap("bimodule identities", cap, witnesses))
}

/// Builds every complex on `a` through `cap`; construction verifies that
/// the relevant composites vanish, so a violation surfaces as a witness.
pub fn complex_identities<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Verdict> {
    let big_n = a.presentation().degree();
    let mut witnesses = Vec::new();
    let mut record = |what: &str, r: Result<usize>| -> Result<()> {
        match r {
            Ok(_) => Ok(()),
            Err(Error::ComplexInvariant(msg)) => {
                witnesses.push(Witness::note(format!("{what}: {msg}")));
                Ok(())
            }
            Err(e) => Err(e),
        }
    };
    record("koszul", koszul_slices(a, cap).map(|s| s.len()))?;
    record("N-complex", n_complex_slices(a, cap).map(|s| s.len()))?;
    let d = (0..).take_while(|&k| koszul_nu(big_n, k) <= cap).count() - 1;
    if d > 0 {
        record("L(A,K)", l_cochain_slices(a, d, cap).map(|s| s.len()))?;
    }
    if big_n <= 3 {
        record(
            "hochschild",
            small_hochschild_slices(a, Coefficients::Algebra, cap).map(|s| s.len()),
        )?;
        record("hochschild cochain", hochschild_cochain_slices(a, cap).map(|s| s.len()))?;
    }
    Ok(Verdict::up_to_cap("complex identities", cap, witnesses))
}
