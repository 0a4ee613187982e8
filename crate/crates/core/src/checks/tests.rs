use super::*;
use crate::complexes::Reading;
use crate::error::Error;
use crate::exactla::{Coeff, Field, GaussianRationals, Rationals};
use crate::families::{make, FamilyKind, FamilySpec};
use crate::homalg::GradedAlgebra;

fn algebra(kind: FamilyKind, s: usize) -> GradedAlgebra<Rationals> {
    GradedAlgebra::new(make(&Rationals, &FamilySpec::new(kind, s)).unwrap())
}

fn complex_algebra(spec: &FamilySpec) -> GradedAlgebra<GaussianRationals> {
    GradedAlgebra::new(make(&GaussianRationals, spec).unwrap())
}

fn dual_of(kind: FamilyKind, s: usize) -> GradedAlgebra<Rationals> {
    GradedAlgebra::new(make(&Rationals, &FamilySpec::new(kind, s)).unwrap().dual())
}

#[test]
fn ym2_koszul_verdict() {
    let (v, table) = koszulity(&mut algebra(FamilyKind::YangMills, 2), 6).unwrap();
    assert_eq!(v.status, Status::PassUpToCap);
    assert_eq!(v.cap, Some(6));
    assert!(v.witnesses.is_empty());
    assert_eq!(table.rows.len(), 7);
    assert_eq!(table.get(0, 0), 1);
}

#[test]
fn parafermionic_has_a_witness() {
    let (v, _) = koszulity(&mut algebra(FamilyKind::Parafermionic, 2), 8).unwrap();
    assert_eq!(v.status, Status::Fail);
    let w = &v.witnesses[0];
    assert!(w.homological_degree.unwrap() >= 1);
    assert!(w.internal_degree.unwrap() <= 8);
    assert!(w.homology_dim.unwrap() > 0);
    assert_eq!(w.kernel_dim.unwrap() - w.image_dim.unwrap(), w.homology_dim.unwrap());
}

#[test]
fn gorenstein_verdicts() {
    let (v, _) = gorenstein(&mut algebra(FamilyKind::YangMills, 2), 3, 6).unwrap();
    assert_eq!(v.status, Status::PassUpToCap, "{v:?}");
    let spec = FamilySpec::new(FamilyKind::SuperSelfDuality, 3);
    let (v, _) = gorenstein(&mut complex_algebra(&spec), 2, 5).unwrap();
    assert_eq!(v.status, Status::Fail);
    let first = &v.witnesses[0];
    assert_eq!(
        (first.homological_degree, first.internal_degree, first.homology_dim),
        (Some(2), Some(-2), Some(3))
    );
}

#[test]
fn gorenstein_beyond_cap_is_indeterminate() {
    let (v, table) = gorenstein(&mut algebra(FamilyKind::YangMills, 2), 3, 3).unwrap();
    assert_eq!(v.status, Status::Indeterminate);
    assert!(table.rows.is_empty());
}

#[test]
fn euler_poincare_ym2() {
    let (v, table) = euler_poincare(&mut algebra(FamilyKind::YangMills, 2), 6).unwrap();
    assert_eq!(v.status, Status::PassUpToCap, "{v:?}");
    assert!(v.notes.iter().any(|n| n == "cubic identities checked"));
    assert!(v.notes.iter().any(|n| n == "dim HH_2^(3) = 3"));
    assert_eq!(table.get(0, 3) + 3, table.get(1, 3));
}

#[test]
fn euler_poincare_without_koszulity() {
    let (v, _) = euler_poincare(&mut algebra(FamilyKind::Parabosonic, 2), 6).unwrap();
    assert_eq!(v.status, Status::PassUpToCap, "{v:?}");
}

#[test]
fn frobenius_duals() {
    let (v, r) = frobenius(&mut dual_of(FamilyKind::YangMills, 2), 4).unwrap();
    assert_eq!(v.status, Status::Pass);
    assert_eq!(r.dims, vec![1, 3, 9, 3, 1, 0]);
    assert_eq!(r.nakayama_scalar.as_deref(), Some("1"));
    let (v, r) = frobenius(&mut dual_of(FamilyKind::SuperYangMills, 2), 4).unwrap();
    assert_eq!(v.status, Status::Pass);
    assert_eq!(r.nakayama_scalar.as_deref(), Some("-1"));
    assert!(r.pairings.iter().all(|p| p.rank == p.rows && p.rows == p.cols));
}

#[test]
fn frobenius_needs_a_one_dimensional_top() {
    let spec = FamilySpec::new(FamilyKind::SuperSelfDuality, 3);
    let mut dual = GradedAlgebra::new(make(&GaussianRationals, &spec).unwrap().dual());
    assert!(matches!(frobenius(&mut dual, 2), Err(Error::NotFrobenius(_))));
}

#[test]
fn quotients() {
    let src = make(&Rationals, &FamilySpec::new(FamilyKind::YangMills, 3)).unwrap();
    let mut same = GradedAlgebra::new(src.clone());
    assert_eq!(
        quotient_map(&src, &mut same, &[0, 1, 2, 3]).unwrap().status,
        Status::Pass
    );
    let mut plus = algebra(FamilyKind::SelfDuality, 3);
    assert_eq!(
        quotient_map(&src, &mut plus, &[0, 1, 2, 3]).unwrap().status,
        Status::Pass
    );
    // the quadratic quotient does not map back
    let quad = plus.presentation().clone();
    assert!(matches!(
        quotient_map(&quad, &mut same, &[0, 1, 2, 3]),
        Err(Error::InvalidParameter(_))
    ));
    // A(+) is not a quotient of A(−)
    let minus = make(&Rationals, &FamilySpec::new(FamilyKind::SelfDuality, 3).with_eps(-1)).unwrap();
    assert_eq!(
        quotient_map(&minus, &mut plus, &[0, 1, 2, 3]).unwrap().status,
        Status::Fail
    );
}

#[test]
fn duality_shift_ym2() {
    let (v, t) = poincare_duality(&mut algebra(FamilyKind::YangMills, 2), 6).unwrap();
    assert_eq!(v.status, Status::PassUpToCap, "{v:?}");
    assert_eq!(t.shift, Some(4));
}

#[test]
fn centrality_of_the_metric() {
    let mut dual = dual_of(FamilyKind::YangMills, 2);
    let f = Rationals;
    let id: Vec<Vec<_>> = (0..3)
        .map(|i| (0..3).map(|j| f.from_int((i == j) as i64)).collect())
        .collect();
    let c = quadratic_element(&mut dual, &id).unwrap();
    assert!(!c.is_zero());
    assert_eq!(
        centrality(&mut dual, "g", &c, 1, 4).unwrap().status,
        Status::PassUpToCap
    );
    let mut a = algebra(FamilyKind::YangMills, 2);
    let c = quadratic_element(&mut a, &id).unwrap();
    assert_eq!(centrality(&mut a, "g", &c, 1, 4).unwrap().status, Status::Fail);
}

#[test]
fn hilbert_verdict() {
    use crate::homalg::RationalSeries;
    // 1/((1−t²)(1−2t+t²))
    let series = RationalSeries::inverse_product(&[(vec![1, 0, -1], 1), (vec![1, -2, 1], 1)]).unwrap();
    let (v, cmp) = hilbert(&mut algebra(FamilyKind::YangMills, 1), &series, 8).unwrap();
    assert_eq!(v.status, Status::PassUpToCap);
    assert!(cmp.matches());
    let (v, _) = hilbert(&mut algebra(FamilyKind::YangMills, 2), &series, 4).unwrap();
    assert_eq!(v.witnesses[0].internal_degree, Some(1));
}

#[test]
fn structure_matrices_match() {
    for spec in [
        FamilySpec::new(FamilyKind::SuperYangMills, 2),
        FamilySpec::new(FamilyKind::DeformedYm, 2).with_zeta(vec![Coeff::int(1), Coeff::int(3)]),
        FamilySpec::new(FamilyKind::BEpsilon, 2),
    ] {
        let mut a = GradedAlgebra::new(make(&Rationals, &spec).unwrap());
        let v = expected_matrix_check(&mut a, &spec, 5).unwrap();
        assert_eq!(v.status, Status::PassUpToCap, "{spec:?}: {v:?}");
    }
    let spec = FamilySpec::new(FamilyKind::SuperSelfDuality, 3);
    let v = expected_matrix_check(&mut complex_algebra(&spec), &spec, 5).unwrap();
    assert_eq!(v.status, Status::PassUpToCap, "{v:?}");
}

#[test]
fn closed_forms() {
    let spec = FamilySpec::new(FamilyKind::YangMills, 2);
    let mut a = algebra(FamilyKind::YangMills, 2);
    assert_eq!(
        ym_small_complex_check(&mut a, &spec, 5).unwrap().status,
        Status::PassUpToCap
    );
    assert_eq!(
        ym_resolution_check(&mut a, &spec, 4, Reading::Corrected)
            .unwrap()
            .status,
        Status::PassUpToCap
    );
    assert_eq!(
        ym_resolution_check(&mut a, &spec, 4, Reading::Printed).unwrap().status,
        Status::Fail
    );
}

#[test]
fn identities_hold() {
    let mut a = algebra(FamilyKind::YangMills, 2);
    assert_eq!(bimodule_check(&mut a, 4).unwrap().status, Status::PassUpToCap);
    assert_eq!(complex_identities(&mut a, 6).unwrap().status, Status::PassUpToCap);
}
