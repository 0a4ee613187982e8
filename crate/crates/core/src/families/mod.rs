//! Constructors for the Yang-Mills family of algebras and its relatives,
//! with the structure matrices of their Koszul complexes.

mod expected;
mod params;

pub use expected::{expected_matrices, ExpectedMatrix};
pub use params::{parse_matrix, FamilyKind, FamilySpec};

use crate::error::{Error, Result};
use crate::exactla::{sparse, Coeff, Field, GaussianRationals, Mat, SparseVec};
use crate::homalg::{Presentation, RationalSeries};

/// Upper-index form (matrix inverse) of a lower-index square matrix.
pub(crate) fn raised<F: Field>(field: &F, lower: &[Vec<Coeff>]) -> Result<Vec<Vec<F::Elem>>> {
    let n = lower.len();
    let rows: Vec<Vec<F::Elem>> = lower
        .iter()
        .map(|r| r.iter().map(|c| field.from_coeff(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let m = Mat::from_dense(field.clone(), n, &rows)?;
    let inv = m
        .inverse()
        .map_err(|_| Error::Singular("matrix is singular in the chosen field".into()))?;
    Ok(inv.to_dense())
}

fn word3(g: usize, a: usize, b: usize, c: usize) -> usize {
    (a * g + b) * g + c
}

fn word2(g: usize, a: usize, b: usize) -> usize {
    a * g + b
}

/// The relation family of a cubic kind indexed by ρ, with coefficient
/// `coef(ρ, λ, μ, ν)` of `x_λ x_μ x_ν`.
fn cubic_rows<F: Field>(
    field: &F,
    g: usize,
    coef: impl Fn(usize, usize, usize, usize) -> F::Elem,
) -> Vec<SparseVec<F::Elem>> {
    (0..g)
        .map(|rho| {
            let mut entries = Vec::new();
            for l in 0..g {
                for m in 0..g {
                    for n in 0..g {
                        let c = coef(rho, l, m, n);
                        if !field.is_zero(&c) {
                            entries.push((word3(g, l, m, n), c));
                        }
                    }
                }
            }
            sparse::collect(field, entries)
        })
        .collect()
}

/// `{a, b}` (sign +1) or `[a, b]` (sign −1) as a degree-2 tensor, scaled.
fn bracket<F: Field>(field: &F, g: usize, a: usize, b: usize, sign: i64, scale: &F::Elem) -> Vec<(usize, F::Elem)> {
    vec![
        (word2(g, a, b), scale.clone()),
        (word2(g, b, a), field.mul(&field.from_int(sign), scale)),
    ]
}

const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// The presentation of a family member over `field`.
pub fn make<F: Field>(field: &F, spec: &FamilySpec) -> Result<Presentation<F>> {
    spec.validate()?;
    let f = field.clone();
    let g = spec.generators();
    let name = spec.to_string();
    let zeta = |k: usize| f.from_coeff(&spec.zeta[k]);
    let rows: Vec<SparseVec<F::Elem>> = match spec.kind {
        FamilyKind::YangMills | FamilyKind::DeformedYm | FamilyKind::ThreeParameterYm => {
            let gu = raised(&f, &spec.metric_lower())?;
            let (z0, z1, z2) = match spec.kind {
                FamilyKind::YangMills => (f.one(), f.one(), f.one()),
                FamilyKind::DeformedYm => (zeta(0)?, zeta(1)?, zeta(1)?),
                _ => (zeta(0)?, zeta(1)?, zeta(2)?),
            };
            let two = f.from_int(2);
            cubic_rows(&f, g, |r, l, m, n| {
                let a = f.mul(&z1, &f.mul(&gu[r][l], &gu[m][n]));
                let b = f.mul(&z2, &f.mul(&gu[n][r], &gu[l][m]));
                let c = f.mul(&f.mul(&two, &z0), &f.mul(&gu[r][m], &gu[l][n]));
                f.sub(&f.add(&a, &b), &c)
            })
        }
        FamilyKind::SuperYangMills => {
            let gu = raised(&f, &spec.metric_lower())?;
            cubic_rows(&f, g, |r, l, m, n| {
                f.sub(&f.mul(&gu[r][l], &gu[m][n]), &f.mul(&gu[n][r], &gu[l][m]))
            })
        }
        FamilyKind::BEpsilon => {
            let bu = raised(&f, &spec.b_lower())?;
            let eps = f.from_int(spec.eps as i64);
            cubic_rows(&f, g, |r, l, m, n| {
                f.add(&f.mul(&bu[r][l], &bu[m][n]), &f.mul(&eps, &f.mul(&bu[l][m], &bu[n][r])))
            })
        }
        FamilyKind::Parafermionic | FamilyKind::Parabosonic => {
            // [x_l, [x_m, x_n]] or [x_l, {x_m, x_n}]
            let inner: i64 = if spec.kind == FamilyKind::Parafermionic { -1 } else { 1 };
            let mut rows = Vec::new();
            for l in 0..g {
                for m in 0..g {
                    for n in 0..g {
                        let one = f.one();
                        let c = f.from_int(inner);
                        let entries = vec![
                            (word3(g, l, m, n), one.clone()),
                            (word3(g, l, n, m), c.clone()),
                            (word3(g, m, n, l), f.neg(&one)),
                            (word3(g, n, m, l), f.neg(&c)),
                        ];
                        let v = sparse::collect(&f, entries);
                        if !v.is_empty() {
                            rows.push(v);
                        }
                    }
                }
            }
            rows
        }
        FamilyKind::SelfDuality => {
            // [x0, xk] − ε[xl, xm]
            let eps = f.from_int(spec.eps as i64);
            CYCLIC
                .iter()
                .map(|&(k, l, m)| {
                    let mut e = bracket(&f, g, 0, k, -1, &f.one());
                    e.extend(bracket(&f, g, l, m, -1, &f.neg(&eps)));
                    sparse::collect(&f, e)
                })
                .collect()
        }
        FamilyKind::SuperSelfDuality | FamilyKind::Sklyanin => {
            let i = f.sqrt_minus_one()?;
            let eps = if spec.kind == FamilyKind::Sklyanin {
                f.one()
            } else {
                f.from_int(spec.eps as i64)
            };
            // i{x0, xk} − ε[xl, xm]
            let mut rows: Vec<SparseVec<F::Elem>> = CYCLIC
                .iter()
                .map(|&(k, l, m)| {
                    let mut e = bracket(&f, g, 0, k, 1, &i);
                    e.extend(bracket(&f, g, l, m, -1, &f.neg(&eps)));
                    sparse::collect(&f, e)
                })
                .collect();
            if spec.kind == FamilyKind::Sklyanin {
                // [x0, xk] − i (α_l − α_m)/α_k {xl, xm}
                let alpha: Vec<F::Elem> = spec.alpha.iter().map(|a| f.from_coeff(a)).collect::<Result<_>>()?;
                for &(k, l, m) in &CYCLIC {
                    let ak = f
                        .inv(&alpha[k - 1])
                        .ok_or_else(|| Error::InvalidParameter("Sklyanin parameter vanishes in this field".into()))?;
                    let c = f.mul(&i, &f.mul(&f.sub(&alpha[l - 1], &alpha[m - 1]), &ak));
                    let mut e = bracket(&f, g, 0, k, -1, &f.one());
                    e.extend(bracket(&f, g, l, m, 1, &f.neg(&c)));
                    rows.push(sparse::collect(&f, e));
                }
            }
            rows
        }
    };
    Presentation::from_relations(name, f, g, spec.kind.relation_degree(), rows)
}

/// The scalar whose vanishing marks the excluded parameters:
/// `(s+2)ζ₁ − 2ζ₀` for deformed-ym, `1 + ε B^{ρλ}B^{μν}B_{μλ}B_{ρν}` for b-epsilon.
pub fn singular_locus(spec: &FamilySpec) -> Result<Coeff> {
    spec.validate()?;
    let f = GaussianRationals;
    match spec.kind {
        FamilyKind::DeformedYm => {
            let s2 = Coeff::int(spec.s as i64 + 2);
            Ok(s2.mul(&spec.zeta[1]).sub(&Coeff::int(2).mul(&spec.zeta[0])))
        }
        FamilyKind::BEpsilon => {
            let lower = spec.b_lower();
            let upper = raised(&f, &lower)?;
            let g = spec.generators();
            let mut acc = Coeff::default();
            for r in 0..g {
                for l in 0..g {
                    for m in 0..g {
                        for n in 0..g {
                            let t = upper[r][l].mul(&upper[m][n]).mul(&lower[m][l]).mul(&lower[r][n]);
                            acc = acc.add(&t);
                        }
                    }
                }
            }
            Ok(Coeff::int(1).add(&Coeff::int(spec.eps as i64).mul(&acc)))
        }
        _ => Err(Error::Unsupported(format!("{} has no singular locus", spec.kind))),
    }
}

/// The Poincaré series the family is known to have, where there is one:
/// `1/((1−t²)(1−(s+1)t+t²))` for the cubic Koszul families off their
/// singular loci, `(1−t)^{−(s+1)}(1−t²)^{−s(s+1)/2}` for the parastatistics
/// algebras, `1/((1−t)(1−3t))` for the self-duality algebras and `(1−t)^{−4}`
/// for Sklyanin.
pub fn poincare_series(spec: &FamilySpec) -> Result<Option<RationalSeries>> {
    spec.validate()?;
    let g = spec.generators() as i64;
    let cubic = || RationalSeries::inverse_product(&[(vec![1, 0, -1], 1), (vec![1, -g, 1], 1)]);
    let series = match spec.kind {
        FamilyKind::YangMills | FamilyKind::SuperYangMills => cubic()?,
        FamilyKind::DeformedYm | FamilyKind::BEpsilon => {
            if singular_locus(spec)?.is_zero() {
                return Ok(None);
            }
            cubic()?
        }
        FamilyKind::Parafermionic | FamilyKind::Parabosonic => {
            let pairs = spec.s * (spec.s + 1) / 2;
            RationalSeries::inverse_product(&[(vec![1, -1], spec.s + 1), (vec![1, 0, -1], pairs)])?
        }
        FamilyKind::SelfDuality | FamilyKind::SuperSelfDuality => {
            RationalSeries::inverse_product(&[(vec![1, -1], 1), (vec![1, -3], 1)])?
        }
        FamilyKind::Sklyanin => RationalSeries::inverse_product(&[(vec![1, -1], 4)])?,
        FamilyKind::ThreeParameterYm => return Ok(None),
    };
    Ok(Some(series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use crate::homalg::graded_dims;

    #[test]
    fn relation_counts() {
        let ym = make(&Rationals, &FamilySpec::new(FamilyKind::YangMills, 3)).unwrap();
        assert_eq!(ym.relations().dim(), 4);
        let sk = make(&GaussianRationals, &FamilySpec::new(FamilyKind::Sklyanin, 3)).unwrap();
        assert_eq!(sk.relations().dim(), 6);
        let ssd = make(&GaussianRationals, &FamilySpec::new(FamilyKind::SuperSelfDuality, 3)).unwrap();
        assert_eq!(ssd.relations().dim(), 3);
        assert!(make(&Rationals, &FamilySpec::new(FamilyKind::SuperSelfDuality, 3)).is_err());
        // p = 13 has a square root of −1
        let p13 = PrimeField::new(13).unwrap();
        assert_eq!(
            make(&p13, &FamilySpec::new(FamilyKind::SuperSelfDuality, 3))
                .unwrap()
                .relations()
                .dim(),
            3
        );
    }

    #[test]
    fn ym_s1_relation_kernel() {
        let ym = make(&Rationals, &FamilySpec::new(FamilyKind::YangMills, 1)).unwrap();
        assert_eq!(ym.relations().dim(), 2);
        assert_eq!(ym.relations().basis().nullspace().nrows(), 6);
    }

    #[test]
    fn coincidences_between_families() {
        let metric = vec![
            vec![Coeff::int(2), Coeff::int(1), Coeff::int(0)],
            vec![Coeff::int(1), Coeff::int(-1), Coeff::int(0)],
            vec![Coeff::int(0), Coeff::int(0), Coeff::int(3)],
        ];
        let ym = FamilySpec::new(FamilyKind::YangMills, 2).with_metric(metric.clone());
        let def = FamilySpec::new(FamilyKind::DeformedYm, 2)
            .with_metric(metric.clone())
            .with_zeta(vec![Coeff::int(5), Coeff::int(5)]);
        assert!(make(&Rationals, &ym)
            .unwrap()
            .same_relations(&make(&Rationals, &def).unwrap()));
        let def0 = FamilySpec::new(FamilyKind::DeformedYm, 2)
            .with_metric(metric.clone())
            .with_zeta(vec![Coeff::int(0), Coeff::int(1)]);
        let bplus = FamilySpec::new(FamilyKind::BEpsilon, 2)
            .with_b(metric.clone())
            .with_eps(1);
        assert!(make(&Rationals, &def0)
            .unwrap()
            .same_relations(&make(&Rationals, &bplus).unwrap()));
        let sym = FamilySpec::new(FamilyKind::SuperYangMills, 2).with_metric(metric.clone());
        let bminus = FamilySpec::new(FamilyKind::BEpsilon, 2).with_b(metric).with_eps(-1);
        assert!(make(&Rationals, &sym)
            .unwrap()
            .same_relations(&make(&Rationals, &bminus).unwrap()));
    }

    #[test]
    fn singular_values() {
        let d = FamilySpec::new(FamilyKind::DeformedYm, 3).with_zeta(vec![Coeff::int(1), Coeff::int(1)]);
        assert_eq!(singular_locus(&d).unwrap(), Coeff::int(3));
        let d = FamilySpec::new(FamilyKind::DeformedYm, 3).with_zeta(vec![Coeff::int(5), Coeff::int(2)]);
        assert_eq!(singular_locus(&d).unwrap(), Coeff::int(0));
        let b = FamilySpec::new(FamilyKind::BEpsilon, 3).with_eps(-1);
        assert_eq!(singular_locus(&b).unwrap(), Coeff::int(-3));
        assert!(singular_locus(&FamilySpec::new(FamilyKind::YangMills, 3)).is_err());
    }

    #[test]
    fn invalid_parameters() {
        let sing = vec![vec![Coeff::int(1), Coeff::int(1)], vec![Coeff::int(1), Coeff::int(1)]];
        assert!(make(
            &Rationals,
            &FamilySpec::new(FamilyKind::YangMills, 1).with_metric(sing.clone())
        )
        .is_err());
        assert!(make(&Rationals, &FamilySpec::new(FamilyKind::BEpsilon, 1).with_b(sing)).is_err());
        let asym = vec![vec![Coeff::int(1), Coeff::int(2)], vec![Coeff::int(0), Coeff::int(1)]];
        assert!(make(&Rationals, &FamilySpec::new(FamilyKind::YangMills, 1).with_metric(asym)).is_err());
        let zero_alpha =
            FamilySpec::new(FamilyKind::Sklyanin, 3).with_alpha(vec![Coeff::int(0), Coeff::int(1), Coeff::int(2)]);
        assert!(make(&GaussianRationals, &zero_alpha).is_err());
        let z = FamilySpec::new(FamilyKind::DeformedYm, 2).with_zeta(vec![Coeff::int(0), Coeff::int(0)]);
        assert!(make(&Rationals, &z).is_err());
        assert!(make(&Rationals, &FamilySpec::new(FamilyKind::SelfDuality, 2)).is_err());
    }

    #[test]
    fn quadratic_series() {
        let sd = make(&Rationals, &FamilySpec::new(FamilyKind::SelfDuality, 3)).unwrap();
        assert_eq!(graded_dims(&sd, 4).unwrap(), vec![1, 4, 13, 40, 121]);
        let ssd = make(&GaussianRationals, &FamilySpec::new(FamilyKind::SuperSelfDuality, 3)).unwrap();
        assert_eq!(graded_dims(&ssd, 4).unwrap(), vec![1, 4, 13, 40, 121]);
        assert_eq!(graded_dims(&ssd.dual(), 4).unwrap(), vec![1, 4, 3, 0, 0]);
        let sk = make(&GaussianRationals, &FamilySpec::new(FamilyKind::Sklyanin, 3)).unwrap();
        assert_eq!(graded_dims(&sk, 4).unwrap(), vec![1, 4, 10, 20, 35]);
    }

    #[test]
    fn known_series() {
        let ints = |spec: &FamilySpec, cap| -> Vec<String> {
            poincare_series(spec)
                .unwrap()
                .unwrap()
                .expand(cap)
                .iter()
                .map(|r| r.to_string())
                .collect()
        };
        let s = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            ints(&FamilySpec::new(FamilyKind::YangMills, 2), 6),
            s(&[1, 3, 9, 24, 64, 168, 441])
        );
        assert_eq!(
            ints(&FamilySpec::new(FamilyKind::Parabosonic, 2), 6),
            s(&[1, 3, 9, 19, 39, 69, 119])
        );
        assert_eq!(
            ints(&FamilySpec::new(FamilyKind::SelfDuality, 3), 4),
            s(&[1, 4, 13, 40, 121])
        );
        assert_eq!(
            ints(&FamilySpec::new(FamilyKind::Sklyanin, 3), 4),
            s(&[1, 4, 10, 20, 35])
        );
        let sing = FamilySpec::new(FamilyKind::DeformedYm, 2).with_zeta(vec![Coeff::int(2), Coeff::int(1)]);
        assert!(poincare_series(&sing).unwrap().is_none());
    }
}
