use super::{raised, FamilyKind, FamilySpec, CYCLIC};
use crate::error::{Error, Result};
use crate::exactla::{sparse, Field, SparseVec};

/// A matrix with entries in `E^{⊗degree}` (word basis). Row `μ` read as
/// `Σ_ν X^{μν} ⊗ e_ν` is an element of `E^{⊗(degree+1)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedMatrix<F: Field> {
    pub name: String,
    pub degree: usize,
    pub entries: Vec<Vec<SparseVec<F::Elem>>>,
}

impl<F: Field> ExpectedMatrix<F> {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Row `μ` as the tensor `Σ_ν X^{μν} ⊗ e_ν`.
    pub fn row_tensor(&self, field: &F, mu: usize) -> SparseVec<F::Elem> {
        let g = self.ncols();
        let mut e = Vec::new();
        for (nu, x) in self.entries[mu].iter().enumerate() {
            e.extend(x.iter().map(|(w, c)| (w * g + nu, c.clone())));
        }
        sparse::collect(field, e)
    }
}

/// Quadratic entries `Σ_{αβ} c(μ,ν,α,β) x_α x_β`.
fn quadratic<F: Field>(
    field: &F,
    g: usize,
    coef: impl Fn(usize, usize, usize, usize) -> F::Elem,
) -> Vec<Vec<SparseVec<F::Elem>>> {
    (0..g)
        .map(|mu| {
            (0..g)
                .map(|nu| {
                    let mut e = Vec::new();
                    for a in 0..g {
                        for b in 0..g {
                            let c = coef(mu, nu, a, b);
                            if !field.is_zero(&c) {
                                e.push((a * g + b, c));
                            }
                        }
                    }
                    sparse::collect(field, e)
                })
                .collect()
        })
        .collect()
}

/// The explicit middle matrices of the Koszul complexes: `N` for
/// super-yang-mills, `M` for deformed-ym, `L` for b-epsilon, `D` for
/// super-self-duality.
pub fn expected_matrices<F: Field>(field: &F, spec: &FamilySpec) -> Result<Vec<ExpectedMatrix<F>>> {
    spec.validate()?;
    let f = field.clone();
    let g = spec.generators();
    let m = match spec.kind {
        FamilyKind::SuperYangMills => {
            let gu = raised(&f, &spec.metric_lower())?;
            ExpectedMatrix {
                name: "N".into(),
                degree: 2,
                entries: quadratic(&f, g, |mu, nu, a, b| {
                    f.sub(&f.mul(&gu[mu][nu], &gu[a][b]), &f.mul(&gu[mu][a], &gu[nu][b]))
                }),
            }
        }
        FamilyKind::DeformedYm => {
            let gu = raised(&f, &spec.metric_lower())?;
            let z0 = f.from_coeff(&spec.zeta[0])?;
            let z1 = f.from_coeff(&spec.zeta[1])?;
            let denom = f.sub(&f.mul(&f.from_int(spec.s as i64 + 2), &z1), &f.mul(&f.from_int(2), &z0));
            let scale = f
                .inv(&denom)
                .ok_or_else(|| Error::Singular("ζ lies on the singular locus".into()))?;
            let two_z0 = f.mul(&f.from_int(2), &z0);
            ExpectedMatrix {
                name: "M".into(),
                degree: 2,
                entries: quadratic(&f, g, |mu, nu, a, b| {
                    let sym = f.add(&f.mul(&gu[mu][nu], &gu[a][b]), &f.mul(&gu[mu][a], &gu[nu][b]));
                    let c = f.sub(&f.mul(&z1, &sym), &f.mul(&two_z0, &f.mul(&gu[mu][b], &gu[nu][a])));
                    f.mul(&scale, &c)
                }),
            }
        }
        FamilyKind::BEpsilon => {
            let bu = raised(&f, &spec.b_lower())?;
            let eps = f.from_int(spec.eps as i64);
            ExpectedMatrix {
                name: "L".into(),
                degree: 2,
                entries: quadratic(&f, g, |mu, nu, a, b| {
                    f.add(
                        &f.mul(&bu[mu][a], &bu[b][nu]),
                        &f.mul(&eps, &f.mul(&bu[nu][mu], &bu[a][b])),
                    )
                }),
            }
        }
        FamilyKind::SuperSelfDuality => {
            let i = f.sqrt_minus_one()?;
            let eps = f.from_int(spec.eps as i64);
            let mut entries = vec![vec![Vec::new(); g]; 3];
            // row k: i{S0,Sk} − ε[Sl,Sm] = Σ_ν D^{kν} ⊗ S_ν
            for (row, &(k, l, m)) in CYCLIC.iter().enumerate() {
                entries[row][0] = vec![(k, i.clone())];
                entries[row][k] = vec![(0, i.clone())];
                entries[row][m] = vec![(l, f.neg(&eps))];
                entries[row][l] = vec![(m, eps.clone())];
            }
            ExpectedMatrix {
                name: "D".into(),
                degree: 1,
                entries,
            }
        }
        other => return Err(Error::Unsupported(format!("no explicit matrix is known for {other}"))),
    };
    Ok(vec![m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Coeff, GaussianRationals, Rationals};
    use crate::families::make;

    #[test]
    fn d_first_row() {
        let f = GaussianRationals;
        let d = &expected_matrices(&f, &FamilySpec::new(FamilyKind::SuperSelfDuality, 3)).unwrap()[0];
        let i = Coeff::i();
        let row: Vec<SparseVec<Coeff>> = d.entries[0].clone();
        assert_eq!(row[0], vec![(1, i.clone())]);
        assert_eq!(row[1], vec![(0, i)]);
        assert_eq!(row[2], vec![(3, Coeff::int(1))]);
        assert_eq!(row[3], vec![(2, Coeff::int(-1))]);
    }

    #[test]
    fn rows_lie_in_relations() {
        let specs = [
            FamilySpec::new(FamilyKind::SuperYangMills, 2),
            FamilySpec::new(FamilyKind::DeformedYm, 2).with_zeta(vec![Coeff::int(3), Coeff::int(1)]),
            FamilySpec::new(FamilyKind::BEpsilon, 2).with_eps(-1),
        ];
        for spec in &specs {
            let p = make(&Rationals, spec).unwrap();
            let m = &expected_matrices(&Rationals, spec).unwrap()[0];
            for mu in 0..m.nrows() {
                assert!(p.relations().contains_vector(&m.row_tensor(&Rationals, mu)), "{spec}");
            }
        }
    }

    #[test]
    fn l_is_minus_n_for_symmetric_b() {
        let metric = vec![
            vec![Coeff::int(1), Coeff::int(1), Coeff::int(0)],
            vec![Coeff::int(1), Coeff::int(3), Coeff::int(0)],
            vec![Coeff::int(0), Coeff::int(0), Coeff::int(-2)],
        ];
        let f = Rationals;
        let l = &expected_matrices(
            &f,
            &FamilySpec::new(FamilyKind::BEpsilon, 2)
                .with_b(metric.clone())
                .with_eps(-1),
        )
        .unwrap()[0];
        let n = &expected_matrices(&f, &FamilySpec::new(FamilyKind::SuperYangMills, 2).with_metric(metric)).unwrap()[0];
        for mu in 0..3 {
            for nu in 0..3 {
                assert_eq!(
                    l.entries[mu][nu],
                    sparse::scale(&f, &f.from_int(-1), &n.entries[mu][nu])
                );
            }
        }
    }

    #[test]
    fn singular_zeta_is_rejected() {
        let spec = FamilySpec::new(FamilyKind::DeformedYm, 2).with_zeta(vec![Coeff::int(2), Coeff::int(1)]);
        assert!(matches!(expected_matrices(&Rationals, &spec), Err(Error::Singular(_))));
        assert!(expected_matrices(&Rationals, &FamilySpec::new(FamilyKind::YangMills, 2)).is_err());
    }
}
