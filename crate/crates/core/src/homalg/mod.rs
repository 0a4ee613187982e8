//! Graded components, normal forms, duals and centrality.

mod algebra;
mod presentation;
mod series;

pub use algebra::{
    dual_by_intersection, ideal_by_recursion, ideal_by_sum, AlgebraElement, Budget, GradedAlgebra, Side,
};
pub use presentation::Presentation;
pub use series::{poly_mul, poly_pow, Poly, RationalSeries, SeriesComparison};

use crate::error::{Error, Result};
use crate::exactla::{sparse, Field, SparseVec};
use crate::tensorspace::word_count;

/// `[dim A_0, …, dim A_cap]`.
pub fn graded_dims<F: Field>(p: &Presentation<F>, cap: usize) -> Result<Vec<usize>> {
    GradedAlgebra::new(p.clone()).graded_dims(cap)
}

pub fn dual_presentation<F: Field>(p: &Presentation<F>) -> Presentation<F> {
    p.dual()
}

pub fn hilbert_compare<F: Field>(p: &Presentation<F>, series: &RationalSeries, cap: usize) -> Result<SeriesComparison> {
    Ok(SeriesComparison::new(series, graded_dims(p, cap)?))
}

/// Outcome of a (sign-)centrality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centrality {
    pub holds: bool,
    /// Highest degree of `x` for which `c·x = ±x·c` was checked.
    pub checked_through: usize,
    /// Degree and word index of the first basis element that fails.
    pub first_failure: Option<(usize, usize)>,
}

/// Checks `c·x = sign^{deg x} x·c` for every normal word `x` with
/// `deg c + deg x ≤ cap`.
pub fn is_central<F: Field>(
    a: &mut GradedAlgebra<F>,
    c: &AlgebraElement<F>,
    sign: i32,
    cap: usize,
) -> Result<Centrality> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter(format!("sign must be ±1, got {sign}")));
    }
    if c.degree + 1 > cap {
        return Err(Error::DegreeOutOfRange {
            requested: c.degree + 1,
            available: cap,
        });
    }
    let f = a.field().clone();
    let g = a.generators();
    let d = c.degree;
    let top = cap - d;
    a.ensure(cap)?;
    // c·x and x·c for all normal x of the current degree
    let mut cx: Vec<SparseVec<F::Elem>> = vec![c.coords.clone()];
    let mut xc: Vec<SparseVec<F::Elem>> = vec![c.coords.clone()];
    for n in 1..=top {
        let words = a.normal_words(n)?.to_vec();
        let block = word_count(g, n - 1)?;
        let mut next_cx = Vec::with_capacity(words.len());
        let mut next_xc = Vec::with_capacity(words.len());
        for &w in &words {
            let pre = a.position(n - 1, w / g)?.expect("prefix of a normal word is normal");
            next_cx.push(a.right_mul_coords(d + n - 1, &cx[pre], w % g));
            let suf = a
                .position(n - 1, w % block)?
                .expect("suffix of a normal word is normal");
            next_xc.push(a.left_mul_coords(d + n - 1, &xc[suf], w / block)?);
        }
        let flip = sign == -1 && n % 2 == 1;
        for (k, &w) in words.iter().enumerate() {
            let rhs = if flip {
                sparse::scale(&f, &f.neg(&f.one()), &next_xc[k])
            } else {
                next_xc[k].clone()
            };
            if next_cx[k] != rhs {
                return Ok(Centrality {
                    holds: false,
                    checked_through: n,
                    first_failure: Some((n, w)),
                });
            }
        }
        cx = next_cx;
        xc = next_xc;
    }
    Ok(Centrality {
        holds: true,
        checked_through: top,
        first_failure: None,
    })
}
