//! The closed-form differentials of the Yang-Mills small complex and
//! bimodule resolution, written out independently of the generic
//! construction so the two can be compared entry by entry.
//!
//! Bases: `W_1 = E` with the generators `∇_λ`; `W_3 = R` with
//! `r_κ = g_{κρ} C^ρ` where `C^ρ` is the relation indexed by ρ;
//! `W_4` spanned by `Σ_ρ ∇_ρ ⊗ C^ρ`.

use super::bimodule::{BimoduleSlice, BimoduleSpace};
use super::dual_bases::DualBases;
use super::maps::{act, adim};
use crate::error::{Error, Result};
use crate::exactla::{sparse, Field, Mat, SparseVec};
use crate::families::{raised, FamilyKind, FamilySpec};
use crate::homalg::GradedAlgebra;

/// How to read the middle resolution differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// the three terms as printed, all carrying the output index `γ`
    Printed,
    /// the output index follows the letter order `α β γ` of each term
    Corrected,
}

struct Metric<F: Field> {
    upper: Vec<Vec<F::Elem>>,
    lower: Vec<Vec<F::Elem>>,
}

fn metric<F: Field>(field: &F, spec: &FamilySpec) -> Result<Metric<F>> {
    if spec.kind != FamilyKind::YangMills {
        return Err(Error::Unsupported(format!(
            "closed-form differentials for {}",
            spec.kind
        )));
    }
    spec.validate()?;
    let lower_c = spec.metric_lower();
    let lower = lower_c
        .iter()
        .map(|r| r.iter().map(|c| field.from_coeff(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(Metric {
        upper: raised(field, &lower_c)?,
        lower,
    })
}

/// `C^ρ_{λμν} = g^{ρλ}g^{μν} + g^{νρ}g^{λμ} − 2g^{ρμ}g^{λν}`.
fn relation_coef<F: Field>(f: &F, gu: &[Vec<F::Elem>], rho: usize, l: usize, m: usize, n: usize) -> F::Elem {
    let t1 = f.mul(&gu[rho][l], &gu[m][n]);
    let t2 = f.mul(&gu[n][rho], &gu[l][m]);
    let t3 = f.mul(&f.from_int(2), &f.mul(&gu[rho][m], &gu[l][n]));
    f.sub(&f.add(&t1, &t2), &t3)
}

fn relation<F: Field>(f: &F, gu: &[Vec<F::Elem>], rho: usize) -> SparseVec<F::Elem> {
    let g = gu.len();
    let mut e = Vec::new();
    for l in 0..g {
        for m in 0..g {
            for n in 0..g {
                e.push(((l * g + m) * g + n, relation_coef(f, gu, rho, l, m, n)));
            }
        }
    }
    sparse::collect(f, e)
}

/// The bases of `W_1`, `W_3`, `W_4` described in the module docs, in place
/// of the reduced ones.
pub fn ym_dual_bases<F: Field>(a: &mut GradedAlgebra<F>, spec: &FamilySpec) -> Result<DualBases<F>> {
    let f = a.field().clone();
    let m = metric(&f, spec)?;
    let g = spec.generators();
    let upper: Vec<SparseVec<F::Elem>> = (0..g).map(|rho| relation(&f, &m.upper, rho)).collect();
    let lowered: Vec<SparseVec<F::Elem>> = (0..g)
        .map(|k| {
            let mut acc = Vec::new();
            for (rho, c) in upper.iter().enumerate() {
                acc = sparse::axpy(&f, &acc, &m.lower[k][rho], c);
            }
            acc
        })
        .collect();
    let mut top = Vec::new();
    for (rho, c) in upper.iter().enumerate() {
        top.extend(c.iter().map(|(w, x)| (rho * g * g * g + w, x.clone())));
    }
    let top = sparse::collect(&f, top);
    a.ensure(4)?;
    let w = DualBases::reduced(a, 5)?;
    if w.dim(4) != 1 || w.dim(5) != 0 {
        return Err(Error::InvalidParameter(
            "dual components do not have the Yang-Mills shape".into(),
        ));
    }
    w.with_basis(3, Mat::from_sparse_rows(f.clone(), g * g * g, lowered)?)?
        .with_basis(4, Mat::from_sparse_rows(f, g.pow(4), vec![top])?)
}

fn generator<F: Field>(f: &F, l: usize) -> SparseVec<F::Elem> {
    vec![(l, f.one())]
}

fn times<F: Field>(
    a: &mut GradedAlgebra<F>,
    x: &[(usize, F::Elem)],
    dx: usize,
    y: &[(usize, F::Elem)],
    dy: usize,
) -> Result<SparseVec<F::Elem>> {
    use crate::homalg::AlgebraElement;
    let p = a.mul(
        &AlgebraElement {
            degree: dx,
            coords: x.to_vec(),
        },
        &AlgebraElement {
            degree: dy,
            coords: y.to_vec(),
        },
    )?;
    Ok(p.coords)
}

/// `[x, y]`.
fn commutator<F: Field>(
    a: &mut GradedAlgebra<F>,
    x: &[(usize, F::Elem)],
    dx: usize,
    y: &[(usize, F::Elem)],
    dy: usize,
) -> Result<SparseVec<F::Elem>> {
    let f = a.field().clone();
    let xy = times(a, x, dx, y, dy)?;
    let yx = times(a, y, dy, x, dx)?;
    Ok(sparse::axpy(&f, &xy, &f.neg(&f.one()), &yx))
}

fn place<F: Field>(
    f: &F,
    out: &mut Vec<(usize, F::Elem)>,
    v: &[(usize, F::Elem)],
    w_dim: usize,
    w: usize,
    c: &F::Elem,
) {
    out.extend(v.iter().map(|(p, x)| (p * w_dim + w, f.mul(c, x))));
}

/// `δ_1, δ_2, δ_3` of the small complex with coefficients in `A` at
/// internal degree `n`, from the commutator formulas:
///
/// - `δ_1(m ⊗ e_λ) = [m, ∇_λ]`
/// - `δ_2(m ⊗ e_κ) = Σ_λ ([∇_μ, [∇^μ, m]]δ_κ^λ + [∇_κ, [m, ∇^λ]] + [m, [∇_κ, ∇^λ]]) ⊗ e_λ`
/// - `δ_3(m) = Σ_λ [m, ∇^λ] ⊗ e_λ`
pub fn ym_small_differentials<F: Field>(a: &mut GradedAlgebra<F>, spec: &FamilySpec, n: usize) -> Result<[Mat<F>; 3]> {
    let f = a.field().clone();
    let gm = metric(&f, spec)?;
    let g = spec.generators();
    let n = n as i64;
    if n > 0 {
        a.ensure(n as usize)?;
    }
    let raised_gen: Vec<SparseVec<F::Elem>> = (0..g)
        .map(|l| sparse::collect(&f, (0..g).map(|m| (m, gm.upper[l][m].clone())).collect()))
        .collect();
    let dims = [adim(a, n)?, adim(a, n - 1)? * g, adim(a, n - 3)? * g, adim(a, n - 4)?];

    let mut d1 = Vec::new();
    for m in 0..adim(a, n - 1)? {
        let mv = generator(&f, m);
        for l in 0..g {
            d1.push(commutator(a, &mv, (n - 1) as usize, &generator(&f, l), 1)?);
        }
    }

    let mut d2 = Vec::new();
    for m in 0..adim(a, n - 3)? {
        let d = (n - 3) as usize;
        let mv = generator(&f, m);
        // Σ_μ [∇_μ, [∇^μ, m]]
        let mut laplace = Vec::new();
        for mu in 0..g {
            let inner = commutator(a, &raised_gen[mu], 1, &mv, d)?;
            let outer = commutator(a, &generator(&f, mu), 1, &inner, d + 1)?;
            laplace = sparse::axpy(&f, &laplace, &f.one(), &outer);
        }
        for k in 0..g {
            let mut col = Vec::new();
            place(&f, &mut col, &laplace, g, k, &f.one());
            for l in 0..g {
                let inner = commutator(a, &mv, d, &raised_gen[l], 1)?;
                let t1 = commutator(a, &generator(&f, k), 1, &inner, d + 1)?;
                let inner = commutator(a, &generator(&f, k), 1, &raised_gen[l], 1)?;
                let t2 = commutator(a, &mv, d, &inner, 2)?;
                place(&f, &mut col, &sparse::axpy(&f, &t1, &f.one(), &t2), g, l, &f.one());
            }
            d2.push(sparse::collect(&f, col));
        }
    }

    let mut d3 = Vec::new();
    for m in 0..adim(a, n - 4)? {
        let mv = generator(&f, m);
        let mut col = Vec::new();
        for l in 0..g {
            let c = commutator(a, &mv, (n - 4) as usize, &raised_gen[l], 1)?;
            place(&f, &mut col, &c, g, l, &f.one());
        }
        d3.push(sparse::collect(&f, col));
    }
    Ok([
        Mat::from_columns(f.clone(), dims[0], &d1),
        Mat::from_columns(f.clone(), dims[1], &d2),
        Mat::from_columns(f, dims[2], &d3),
    ])
}

/// One term `c · a x ⊗ e_w ⊗ y b` of a bimodule map.
struct Term<'a> {
    x: &'a [usize],
    w: usize,
    y: &'a [usize],
}

fn word_of(letters: &[usize], g: usize) -> (usize, usize) {
    (letters.iter().fold(0, |acc, l| acc * g + l), letters.len())
}

#[allow(clippy::too_many_arguments)]
fn push_term<F: Field>(
    a: &mut GradedAlgebra<F>,
    out: &mut Vec<(usize, F::Elem)>,
    dst: &BimoduleSpace,
    (i, pa): (usize, usize),
    (j, pb): (usize, usize),
    t: Term<'_>,
    c: &F::Elem,
) -> Result<()> {
    if a.field().is_zero(c) {
        return Ok(());
    }
    let f = a.field().clone();
    let g = a.generators();
    let left = act(a, i, &generator(&f, pa), (0, 0), word_of(t.x, g))?;
    let right = act(a, j, &generator(&f, pb), word_of(t.y, g), (0, 0))?;
    for (qa, ca) in &left {
        for (qb, cb) in &right {
            out.push((dst.index(i + t.x.len(), *qa, t.w, *qb), f.mul(c, &f.mul(ca, cb))));
        }
    }
    Ok(())
}

/// `δ′_1, δ′_2, δ′_3` of the bimodule resolution on the spaces of `slice`
/// (which must be built on [`ym_dual_bases`]):
///
/// - `δ′_1(a ⊗ e_λ ⊗ b) = a∇_λ ⊗ b − a ⊗ ∇_λ b`
/// - `δ′_2(a ⊗ e_λ ⊗ b) = T_λ^{αβγ}(a∇_α∇_β ⊗ e_γ ⊗ b + a∇_α ⊗ e_• ⊗ ∇_• b + a ⊗ e_• ⊗ ∇_•∇_• b)`
///   with `T_λ^{αβγ} = g^{αβ}δ_λ^γ + g^{βγ}δ_λ^α − 2g^{γα}δ_λ^β` and the
///   dotted indices placed according to `reading`
/// - `δ′_3(a ⊗ b) = g^{λμ}(a∇_μ ⊗ e_λ ⊗ b − a ⊗ e_λ ⊗ ∇_μ b)`
pub fn ym_resolution_differentials<F: Field>(
    a: &mut GradedAlgebra<F>,
    spec: &FamilySpec,
    slice: &BimoduleSlice<F>,
    reading: Reading,
) -> Result<Vec<Mat<F>>> {
    let f = a.field().clone();
    let gm = metric(&f, spec)?;
    let g = spec.generators();
    let sp = slice.spaces();
    let one = f.one();
    let minus = f.neg(&one);
    let delta = |x: usize, y: usize| if x == y { f.one() } else { f.zero() };
    let mut out = Vec::new();
    for (src_nu, dst_nu) in [(1usize, 0usize), (3, 1), (4, 3)] {
        let (Some(src), Some(dst)) = (sp.get(src_nu), sp.get(dst_nu)) else {
            break;
        };
        let mut cols = Vec::with_capacity(src.dim);
        let nb = src.blocks.len();
        for (i, &(l, r, _)) in src.blocks.iter().enumerate() {
            let j = nb - 1 - i;
            for pa in 0..l {
                for wi in 0..src.w_dim {
                    for pb in 0..r {
                        let mut col = Vec::new();
                        let at = ((i, pa), (j, pb));
                        match src_nu {
                            1 => {
                                push_term(a, &mut col, dst, at.0, at.1, Term { x: &[wi], w: 0, y: &[] }, &one)?;
                                push_term(a, &mut col, dst, at.0, at.1, Term { x: &[], w: 0, y: &[wi] }, &minus)?;
                            }
                            3 => {
                                let lam = wi;
                                for al in 0..g {
                                    for be in 0..g {
                                        for ga in 0..g {
                                            let t = f.sub(
                                                &f.add(
                                                    &f.mul(&gm.upper[al][be], &delta(lam, ga)),
                                                    &f.mul(&gm.upper[be][ga], &delta(lam, al)),
                                                ),
                                                &f.mul(&f.from_int(2), &f.mul(&gm.upper[ga][al], &delta(lam, be))),
                                            );
                                            if f.is_zero(&t) {
                                                continue;
                                            }
                                            let terms: [(&[usize], usize, &[usize]); 3] = match reading {
                                                Reading::Printed => {
                                                    [(&[al, be], ga, &[]), (&[al], ga, &[be]), (&[], ga, &[al, be])]
                                                }
                                                Reading::Corrected => {
                                                    [(&[al, be], ga, &[]), (&[al], be, &[ga]), (&[], al, &[be, ga])]
                                                }
                                            };
                                            for (x, w, y) in terms {
                                                push_term(a, &mut col, dst, at.0, at.1, Term { x, w, y }, &t)?;
                                            }
                                        }
                                    }
                                }
                            }
                            _ => {
                                for lam in 0..g {
                                    for mu in 0..g {
                                        let c = gm.upper[lam][mu].clone();
                                        push_term(
                                            a,
                                            &mut col,
                                            dst,
                                            at.0,
                                            at.1,
                                            Term {
                                                x: &[mu],
                                                w: lam,
                                                y: &[],
                                            },
                                            &c,
                                        )?;
                                        push_term(
                                            a,
                                            &mut col,
                                            dst,
                                            at.0,
                                            at.1,
                                            Term {
                                                x: &[],
                                                w: lam,
                                                y: &[mu],
                                            },
                                            &f.neg(&c),
                                        )?;
                                    }
                                }
                            }
                        }
                        cols.push(sparse::collect(&f, col));
                    }
                }
            }
        }
        out.push(Mat::from_columns(f.clone(), dst.dim, &cols));
    }
    Ok(out)
}
