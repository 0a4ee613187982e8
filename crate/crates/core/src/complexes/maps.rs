//! Maps between free modules `M_m ⊗ W_ν` (chains) and `W_ν^* ⊗ M_m`
//! (cochains) obtained by peeling letters off the dual components.
//! Both are indexed `pos(m) · dim W_ν + i`.

use std::collections::HashMap;

use super::dual_bases::DualBases;
use crate::error::Result;
use crate::exactla::{sparse, Field, Mat, SparseVec};
use crate::homalg::GradedAlgebra;

/// Take `left` letters off the front and `right` off the back of each
/// basis vector, with an overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub left: usize,
    pub right: usize,
    pub sign: i64,
}

impl Term {
    pub fn new(left: usize, right: usize, sign: i64) -> Self {
        Term { left, right, sign }
    }
}

/// `dim A_d`, zero in negative degrees.
pub(crate) fn adim<F: Field>(a: &GradedAlgebra<F>, d: i64) -> Result<usize> {
    if d < 0 {
        Ok(0)
    } else {
        a.dim(d as usize)
    }
}

/// Letters of a word index of length `len`, leftmost first.
pub(crate) fn letters(w: usize, len: usize, g: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    let mut w = w;
    for slot in out.iter_mut().rev() {
        *slot = w % g;
        w /= g;
    }
    out
}

/// `y · v · x` for `v ∈ A_deg`, with the words given as (index, length).
pub(crate) fn act<F: Field>(
    a: &mut GradedAlgebra<F>,
    deg: usize,
    v: &[(usize, F::Elem)],
    y: (usize, usize),
    x: (usize, usize),
) -> Result<SparseVec<F::Elem>> {
    let g = a.generators();
    let mut v = v.to_vec();
    let mut d = deg;
    for l in letters(x.0, x.1, g) {
        if v.is_empty() {
            break;
        }
        v = a.right_mul_coords(d, &v, l);
        d += 1;
    }
    for l in letters(y.0, y.1, g).into_iter().rev() {
        if v.is_empty() {
            break;
        }
        v = a.left_mul_coords(d, &v, l)?;
        d += 1;
    }
    Ok(v)
}

fn one<F: Field>(a: &GradedAlgebra<F>, pos: usize) -> SparseVec<F::Elem> {
    vec![(pos, a.field().one())]
}

/// Chain map `M_deg ⊗ W_ν → M_{deg+j} ⊗ W_{ν−j}`,
/// `m ⊗ w ↦ Σ_terms sign Σ y·m·x ⊗ w_{x,y}` where `w = Σ x ⊗ w_{x,y} ⊗ y`.
pub(crate) fn chain_map<F: Field>(
    a: &mut GradedAlgebra<F>,
    w: &DualBases<F>,
    deg: i64,
    nu: usize,
    terms: &[Term],
) -> Result<Mat<F>> {
    let f = a.field().clone();
    let j = terms[0].left + terms[0].right;
    debug_assert!(terms.iter().all(|t| t.left + t.right == j));
    let src_w = w.dim(nu);
    let dst_w = if nu >= j { w.dim(nu - j) } else { 0 };
    let cols = adim(a, deg)? * src_w;
    let rows = adim(a, deg + j as i64)? * dst_w;
    if rows == 0 || cols == 0 {
        return Ok(Mat::zeros(f, rows, cols));
    }
    a.budget()
        .check(|| format!("map out of M_{deg} ⊗ W_{nu}"), rows, cols)?;
    let deg = deg as usize;
    let splits: Vec<_> = terms
        .iter()
        .map(|t| w.split(nu, t.left, t.right))
        .collect::<Result<_>>()?;
    let signs: Vec<F::Elem> = terms.iter().map(|t| f.from_int(t.sign)).collect();
    let mut columns = Vec::with_capacity(cols);
    for m in 0..adim(a, deg as i64)? {
        let mut cache: HashMap<(usize, usize, usize), SparseVec<F::Elem>> = HashMap::new();
        for i in 0..src_w {
            let mut entries = Vec::new();
            for (t, term) in terms.iter().enumerate() {
                for piece in &splits[t][i] {
                    let key = (t, piece.left, piece.right);
                    if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                        let v = act(a, deg, &one(a, m), (piece.right, term.right), (piece.left, term.left))?;
                        e.insert(v);
                    }
                    for (mp, c1) in &cache[&key] {
                        let c1 = f.mul(&signs[t], c1);
                        for (ip, c2) in &piece.coords {
                            entries.push((mp * dst_w + ip, f.mul(&c1, c2)));
                        }
                    }
                }
            }
            columns.push(sparse::collect(&f, entries));
        }
    }
    Ok(Mat::from_columns(f, rows, &columns))
}

/// Cochain map `W_ν^* ⊗ M_deg → W_{ν+j}^* ⊗ M_{deg+j}`, dual to
/// [`chain_map`] with the actions swapped: `(δφ)(w') = Σ sign x·φ(w_{x,y})·y`.
pub(crate) fn cochain_map<F: Field>(
    a: &mut GradedAlgebra<F>,
    w: &DualBases<F>,
    deg: i64,
    nu: usize,
    terms: &[Term],
) -> Result<Mat<F>> {
    let f = a.field().clone();
    let j = terms[0].left + terms[0].right;
    debug_assert!(terms.iter().all(|t| t.left + t.right == j));
    let src_w = w.dim(nu);
    let dst_w = w.dim(nu + j);
    let cols = adim(a, deg)? * src_w;
    let rows = adim(a, deg + j as i64)? * dst_w;
    if rows == 0 || cols == 0 {
        return Ok(Mat::zeros(f, rows, cols));
    }
    a.budget()
        .check(|| format!("map out of W_{nu}^* ⊗ M_{deg}"), rows, cols)?;
    let deg = deg as usize;
    // for each source index i: (term, target index, x, y, coefficient)
    let mut uses: Vec<Vec<(usize, usize, usize, usize, F::Elem)>> = vec![Vec::new(); src_w];
    for (t, term) in terms.iter().enumerate() {
        let sign = f.from_int(term.sign);
        for (ip, pieces) in w.split(nu + j, term.left, term.right)?.into_iter().enumerate() {
            for piece in pieces {
                for (i, c) in piece.coords {
                    uses[i].push((t, ip, piece.left, piece.right, f.mul(&sign, &c)));
                }
            }
        }
    }
    let mut columns = Vec::with_capacity(cols);
    for m in 0..adim(a, deg as i64)? {
        let mut cache: HashMap<(usize, usize, usize), SparseVec<F::Elem>> = HashMap::new();
        for row in &uses {
            let mut entries = Vec::new();
            for (t, ip, x, y, c) in row {
                let term = terms[*t];
                let key = (*t, *x, *y);
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                    let v = act(a, deg, &one(a, m), (*x, term.left), (*y, term.right))?;
                    e.insert(v);
                }
                for (mp, c1) in &cache[&key] {
                    entries.push((mp * dst_w + ip, f.mul(c, c1)));
                }
            }
            columns.push(sparse::collect(&f, entries));
        }
    }
    Ok(Mat::from_columns(f, rows, &columns))
}
