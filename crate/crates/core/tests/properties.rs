use koszul::checks::{complex_identities, euler_poincare, koszulity, quotient_map, Status};
use koszul::complexes::koszul_slices;
use koszul::exactla::{Field, PrimeField, Rationals};
use koszul::homalg::{dual_by_intersection, ideal_by_sum, GradedAlgebra, Presentation};
use proptest::prelude::*;

/// Relations as `(word, coefficient)` lists on `g` letters in degree `n`.
#[derive(Clone, Debug)]
struct Relations {
    g: usize,
    n: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl Relations {
    fn presentation<F: Field>(&self, f: &F) -> Presentation<F> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut v: Vec<(usize, F::Elem)> = Vec::new();
                for &(w, c) in r {
                    match v.iter_mut().find(|(i, _)| *i == w) {
                        Some(e) => e.1 = f.add(&e.1, &f.from_int(c)),
                        None => v.push((w, f.from_int(c))),
                    }
                }
                v.retain(|(_, c)| !f.is_zero(c));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Presentation::from_relations("random", f.clone(), self.g, self.n, rows).unwrap()
    }
}

fn relations(
    generators: std::ops::RangeInclusive<usize>,
    degree: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Relations> {
    (generators, degree).prop_flat_map(|(g, n)| {
        let words = g.pow(n as u32);
        let row = prop::collection::vec((0..words, -2i64..=2), 1..4);
        prop::collection::vec(row, 0..=g + 1).prop_map(move |rows| Relations { g, n, rows })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dims_match_the_ideal_spanned_by_shifts(r in relations(2..=3, 2..=3)) {
        let p = r.presentation(&Rationals);
        let dims = GradedAlgebra::new(p.clone()).graded_dims(5).unwrap();
        for (n, d) in dims.iter().enumerate() {
            let ideal = ideal_by_sum(&p, n).unwrap();
            prop_assert_eq!(*d, ideal.ambient_dim() - ideal.dim());
        }
    }

    #[test]
    fn dual_components_match_the_intersection(r in relations(2..=3, 2..=3)) {
        let p = r.presentation(&Rationals);
        let mut a = GradedAlgebra::new(p.clone());
        let dual_dims = GradedAlgebra::new(p.dual()).graded_dims(5).unwrap();
        for (n, d) in dual_dims.iter().enumerate() {
            let w = a.dual_component(n).unwrap().dim();
            prop_assert_eq!(w, dual_by_intersection(&p, n).unwrap().dim());
            prop_assert_eq!(w, *d);
        }
    }

    #[test]
    fn reduction_mod_p_never_lowers_dimensions(r in relations(2..=3, 2..=3)) {
        let q = GradedAlgebra::new(r.presentation(&Rationals)).graded_dims(5).unwrap();
        let fp = PrimeField::new(3).unwrap();
        let m = GradedAlgebra::new(r.presentation(&fp)).graded_dims(5).unwrap();
        prop_assert!(q.iter().zip(&m).all(|(a, b)| a <= b), "{:?} vs {:?}", q, m);
    }

    #[test]
    fn larger_caps_extend_smaller_ones(r in relations(2..=3, 2..=3), cap in 2usize..5) {
        let p = r.presentation(&Rationals);
        let small = GradedAlgebra::new(p.clone()).graded_dims(cap).unwrap();
        let large = GradedAlgebra::new(p.clone()).graded_dims(cap + 1).unwrap();
        prop_assert_eq!(&large[..=cap], &small[..]);
        let (_, t_small) = koszulity(&mut GradedAlgebra::new(p.clone()), cap).unwrap();
        let (_, t_large) = koszulity(&mut GradedAlgebra::new(p), cap + 1).unwrap();
        // slices list homological degrees up to the cap, so compare without trailing zeros
        let trim = |v: &[usize]| v[..v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)].to_vec();
        for (a, b) in t_small.rows.iter().zip(&t_large.rows) {
            prop_assert_eq!(a.internal_degree, b.internal_degree);
            prop_assert_eq!(trim(&a.dims), trim(&b.dims));
            prop_assert_eq!(trim(&a.homology), trim(&b.homology));
        }
    }

    #[test]
    fn every_presentation_is_its_own_quotient(r in relations(2..=3, 2..=3)) {
        let p = r.presentation(&Rationals);
        let ids: Vec<usize> = (0..r.g).collect();
        let v = quotient_map(&p, &mut GradedAlgebra::new(p.clone()), &ids).unwrap();
        prop_assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn koszul_euler_characteristic(r in relations(2..=3, 2..=3)) {
        let mut a = GradedAlgebra::new(r.presentation(&Rationals));
        for slice in koszul_slices(&mut a, 5).unwrap() {
            let h = slice.homology().unwrap();
            let alt: i64 = h.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            prop_assert_eq!(alt, slice.euler_characteristic());
        }
    }

    #[test]
    fn complexes_close_up(r in relations(2..=3, 2..=3)) {
        let mut a = GradedAlgebra::new(r.presentation(&Rationals));
        let v = complex_identities(&mut a, 5).unwrap();
        prop_assert_eq!(v.status, Status::PassUpToCap, "{:?}", v.witnesses);
    }

    #[test]
    fn hochschild_alternating_sums(r in relations(2..=3, 3..=3)) {
        let mut a = GradedAlgebra::new(r.presentation(&Rationals));
        let (v, _) = euler_poincare(&mut a, 5).unwrap();
        prop_assert_eq!(v.status, Status::PassUpToCap, "{:?}", v.witnesses);
    }
}
