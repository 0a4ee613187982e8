use serde::Serialize;

use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::homalg::{is_central, AlgebraElement, GradedAlgebra, Presentation, RationalSeries, SeriesComparison};
use crate::tensorspace::{index_word, word_index, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingRank {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub dims: Vec<usize>,
    pub pairings: Vec<PairingRank>,
    /// The Nakayama automorphism on degree 1, `nakayama[k][i]` = coefficient
    /// of `x_k` in `ν(x_i)`.
    pub nakayama: Vec<Vec<String>>,
    /// `c` when the Nakayama matrix is `c · id`.
    pub nakayama_scalar: Option<String>,
}

/// `⟨x, y⟩` = coefficient of `xy` in the one-dimensional top component.
fn pairing<F: Field>(a: &mut GradedAlgebra<F>, k: usize, top: usize) -> Result<Mat<F>> {
    let f = a.field().clone();
    let (rows, cols) = (a.dim(k)?, a.dim(top - k)?);
    let mut dense = vec![vec![f.zero(); cols]; rows];
    for (i, row) in dense.iter_mut().enumerate() {
        let x = a.basis_element(k, i);
        for (j, cell) in row.iter_mut().enumerate() {
            let p = a.mul(&x, &a.basis_element(top - k, j))?;
            if let Some((_, c)) = p.coords.first() {
                *cell = c.clone();
            }
        }
    }
    Mat::from_dense(f, cols, &dense)
}

fn top_coefficient<F: Field>(e: &AlgebraElement<F>, f: &F) -> F::Elem {
    e.coords.first().map_or_else(|| f.zero(), |(_, c)| c.clone())
}

/// Frobenius structure of a finite-dimensional graded algebra whose top
/// component `A_top` is one-dimensional and `A_{top+1} = 0`.
pub fn frobenius<F: Field>(dual: &mut GradedAlgebra<F>, top: usize) -> Result<(Verdict, FrobeniusReport)> {
    let f = dual.field().clone();
    dual.ensure(top + 1)?;
    let dims: Vec<usize> = (0..=top + 1).map(|n| dual.dim(n)).collect::<Result<_>>()?;
    if dims[top] != 1 {
        return Err(Error::NotFrobenius(format!(
            "top component has dimension {}",
            dims[top]
        )));
    }
    if dims[top + 1] != 0 {
        return Err(Error::NotFrobenius(format!("degree {} is not zero", top + 1)));
    }
    if top < 2 {
        return Err(Error::NotFrobenius(format!("top degree {top} is too small")));
    }
    let mut witnesses = Vec::new();
    let mut pairings = Vec::new();
    for k in 0..=top {
        let p = pairing(dual, k, top)?;
        let rank = p.rank();
        if rank != p.nrows() || rank != p.ncols() {
            witnesses.push(Witness {
                internal_degree: Some(k as i64),
                detail: format!("pairing of degrees {k} and {} is degenerate", top - k),
                ..Witness::default()
            });
        }
        pairings.push(PairingRank {
            degree: k,
            rows: p.nrows(),
            cols: p.ncols(),
            rank,
        });
    }
    let first = pairing(dual, 1, top)?;
    let last = pairing(dual, top - 1, top)?;
    // ⟨x_i, y⟩ = ⟨y, ν(x_i)⟩ for all y of degree top − 1
    let nakayama = last
        .inverse()
        .map_err(|_| Error::NotFrobenius("pairing of degrees top−1 and 1 is singular".into()))?
        .mul(&first.transpose())?;
    let g = dims[1];
    let image = |i: usize| AlgebraElement {
        degree: 1,
        coords: (0..g)
            .filter_map(|k| {
                let c = nakayama.get(k, i);
                (!f.is_zero(&c)).then_some((k, c))
            })
            .collect(),
    };
    // multiplicativity: ⟨x_a x_b, v⟩ = ⟨v, ν(x_a) ν(x_b)⟩ on degree 2
    'mult: for i in 0..g {
        for j in 0..g {
            let xy = dual.mul(&dual.basis_element(1, i), &dual.basis_element(1, j))?;
            let twisted = dual.mul(&image(i), &image(j))?;
            for m in 0..dims[top - 2] {
                let v = dual.basis_element(top - 2, m);
                let lhs = top_coefficient(&dual.mul(&xy, &v)?, &f);
                let rhs = top_coefficient(&dual.mul(&v, &twisted)?, &f);
                if lhs != rhs {
                    witnesses.push(Witness {
                        internal_degree: Some(2),
                        detail: format!("Nakayama map is not multiplicative on x_{i} x_{j}"),
                        ..Witness::default()
                    });
                    break 'mult;
                }
            }
        }
    }
    let dense = nakayama.to_dense();
    let c = dense[0][0].clone();
    let scalar = Mat::identity(f.clone(), g).scale(&c) == nakayama;
    let report = FrobeniusReport {
        dims,
        pairings,
        nakayama: dense.iter().map(|r| r.iter().map(|x| f.format(x)).collect()).collect(),
        nakayama_scalar: scalar.then(|| f.format(&c)),
    };
    let mut v = Verdict::exact("frobenius", witnesses);
    if let Some(s) = &report.nakayama_scalar {
        v.notes.push(format!("Nakayama = {s} · id on degree 1"));
    }
    Ok((v, report))
}

/// Images under a relabelling of generators of the source relations lie in
/// the ideal of the target.
pub fn quotient_map<F: Field>(
    source: &Presentation<F>,
    target: &mut GradedAlgebra<F>,
    gen_map: &[usize],
) -> Result<Verdict> {
    let (sf, tf) = (source.field().spec(), target.field().spec());
    if sf != tf {
        return Err(Error::FieldMismatch { left: sf, right: tf });
    }
    let (g_src, g_tgt) = (source.generators(), target.generators());
    if gen_map.len() != g_src {
        return Err(Error::GeneratorMismatch(gen_map.len(), g_src));
    }
    if let Some(&bad) = gen_map.iter().find(|&&x| x >= g_tgt) {
        return Err(Error::LetterOutOfRange {
            letter: bad,
            generators: g_tgt,
        });
    }
    let n = source.degree();
    let n_tgt = target.presentation().degree();
    if n < n_tgt {
        return Err(Error::InvalidParameter(format!(
            "source relations of degree {n} cannot lie in an ideal generated in degree {n_tgt}"
        )));
    }
    let mut witnesses = Vec::new();
    for (r, row) in source.relations().basis().rows().iter().enumerate() {
        let mapped = row
            .iter()
            .map(|(w, c)| {
                let word = index_word(*w, n, g_src)?;
                let image = Word::new(word.letters().iter().map(|&l| gen_map[l]).collect::<Vec<_>>());
                Ok((word_index(&image, g_tgt)?, c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        if !target.reduce_tensor(n, &mapped)?.is_zero() {
            witnesses.push(Witness {
                internal_degree: Some(n as i64),
                detail: format!("relation {r} maps outside the target ideal"),
                ..Witness::default()
            });
        }
    }
    Ok(Verdict::exact(
        format!("quotient {} -> {}", source.name(), target.presentation().name()),
        witnesses,
    ))
}

/// `Σ_{αβ} c_{αβ} x_α x_β` in `A_2`.
pub fn quadratic_element<F: Field>(
    a: &mut GradedAlgebra<F>,
    coefficients: &[Vec<F::Elem>],
) -> Result<AlgebraElement<F>> {
    let g = a.generators();
    if coefficients.len() != g || coefficients.iter().any(|r| r.len() != g) {
        return Err(Error::Shape(format!("quadratic form must be {g}×{g}")));
    }
    let f = a.field().clone();
    let tensor: Vec<_> = coefficients
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, c)| (i * g + j, c.clone())))
        .filter(|(_, c)| !f.is_zero(c))
        .collect();
    a.reduce_tensor(2, &tensor)
}

/// `c x = sign^{deg x} x c` through degree `cap`.
pub fn centrality<F: Field>(
    a: &mut GradedAlgebra<F>,
    name: impl Into<String>,
    c: &AlgebraElement<F>,
    sign: i32,
    cap: usize,
) -> Result<Verdict> {
    let result = is_central(a, c, sign, cap)?;
    let witnesses = result
        .first_failure
        .map(|(n, w)| Witness {
            internal_degree: Some(n as i64),
            detail: format!("fails against normal word {w} of degree {n}"),
            ..Witness::default()
        })
        .into_iter()
        .collect();
    let kind = if sign == 1 { "central" } else { "sign-central" };
    Ok(Verdict::up_to_cap(format!("{} {kind}", name.into()), cap, witnesses))
}

/// Graded dimensions against the expansion of `series`.
pub fn hilbert<F: Field>(
    a: &mut GradedAlgebra<F>,
    series: &RationalSeries,
    cap: usize,
) -> Result<(Verdict, SeriesComparison)> {
    let cmp = SeriesComparison::new(series, a.graded_dims(cap)?);
    let witnesses = cmp
        .first_mismatch
        .map(|n| Witness {
            internal_degree: Some(n as i64),
            detail: format!("dim {} but the series gives {}", cmp.actual[n], cmp.expected[n]),
            ..Witness::default()
        })
        .into_iter()
        .collect();
    Ok((Verdict::up_to_cap("hilbert series", cap, witnesses), cmp))
}
