//! The bimodule N-complexes `(A ⊗ W_ν ⊗ A, d_L)` and `(…, d_R)` at a fixed
//! internal degree, and the resolution `K(A, A)` assembled from them.

use std::collections::HashMap;

use super::chains::koszul_nu;
use super::dual_bases::DualBases;
use super::maps::act;
use super::slice::{ComplexSlice, Direction};
use crate::error::{Error, Result};
use crate::exactla::{sparse, Field, Mat, SparseVec};
use crate::homalg::GradedAlgebra;

/// Index bookkeeping for `B_ν = ⊕_{i+j = n−ν} A_i ⊗ W_ν ⊗ A_j`: blocks by
/// `i`, and `(a·dim W + w)·dim A_j + b` inside a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleSpace {
    pub nu: usize,
    pub w_dim: usize,
    /// `(dim A_i, dim A_j, offset)` for `i = 0..=n−ν`
    pub blocks: Vec<(usize, usize, usize)>,
    pub dim: usize,
}

impl BimoduleSpace {
    fn new<F: Field>(a: &GradedAlgebra<F>, n: usize, nu: usize, w_dim: usize) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut off = 0;
        if nu <= n {
            for i in 0..=n - nu {
                let (l, r) = (a.dim(i)?, a.dim(n - nu - i)?);
                blocks.push((l, r, off));
                off += l * w_dim * r;
            }
        }
        Ok(BimoduleSpace {
            nu,
            w_dim,
            blocks,
            dim: off,
        })
    }

    /// Index of `e_a ⊗ w ⊗ e_b` with `a ∈ A_i`.
    pub fn index(&self, i: usize, a: usize, w: usize, b: usize) -> usize {
        let (_, r, off) = self.blocks[i];
        off + (a * self.w_dim + w) * r + b
    }
}

/// `d_L` and `d_R` between consecutive `B_ν` at internal degree `n`.
#[derive(Clone, Debug)]
pub struct BimoduleSlice<F: Field> {
    field: F,
    internal_degree: usize,
    spaces: Vec<BimoduleSpace>,
    /// `left[k], right[k] : B_{k+1} → B_k`
    left: Vec<Mat<F>>,
    right: Vec<Mat<F>>,
}

/// Outcome of the commutation and nilpotency identities on one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleIdentities {
    pub internal_degree: usize,
    /// `d_L d_R = d_R d_L` from every `B_ν`, `ν ≥ 2`
    pub commute: bool,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    /// `d_L^N − d_R^N = (d_L − d_R)S = S(d_L − d_R)`, `S = Σ_p d_L^p d_R^{N−1−p}`
    pub factorization: bool,
}

impl BimoduleIdentities {
    pub fn all_hold(&self) -> bool {
        self.commute && self.left_nilpotent && self.right_nilpotent && self.factorization
    }
}

fn build_side<F: Field>(
    a: &mut GradedAlgebra<F>,
    w: &DualBases<F>,
    src: &BimoduleSpace,
    dst: &BimoduleSpace,
    left_side: bool,
) -> Result<Mat<F>> {
    let f = a.field().clone();
    let n_src = src.blocks.len();
    a.budget()
        .check(|| format!("bimodule map out of B_{}", src.nu), dst.dim, src.dim)?;
    let pieces = if left_side {
        w.split(src.nu, 1, 0)?
    } else {
        w.split(src.nu, 0, 1)?
    };
    let mut columns: Vec<SparseVec<F::Elem>> = Vec::with_capacity(src.dim);
    for i in 0..n_src {
        let (l, r, _) = src.blocks[i];
        let j = n_src - 1 - i;
        let mut cache: HashMap<(usize, usize), SparseVec<F::Elem>> = HashMap::new();
        for pa in 0..l {
            for wi in 0..src.w_dim {
                for pb in 0..r {
                    let mut entries = Vec::new();
                    for piece in &pieces[wi] {
                        // the letter moves onto a (left side) or b (right side)
                        let (letter, pos, deg) = if left_side {
                            (piece.left, pa, i)
                        } else {
                            (piece.right, pb, j)
                        };
                        let key = (letter, pos);
                        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                            let unit = vec![(pos, f.one())];
                            let v = if left_side {
                                act(a, deg, &unit, (0, 0), (letter, 1))?
                            } else {
                                act(a, deg, &unit, (letter, 1), (0, 0))?
                            };
                            e.insert(v);
                        }
                        for (q, c1) in &cache[&key] {
                            for (wq, c2) in &piece.coords {
                                let idx = if left_side {
                                    dst.index(i + 1, *q, *wq, pb)
                                } else {
                                    dst.index(i, pa, *wq, *q)
                                };
                                entries.push((idx, f.mul(c1, c2)));
                            }
                        }
                    }
                    columns.push(sparse::collect(&f, entries));
                }
            }
        }
    }
    Ok(Mat::from_columns(f, dst.dim, &columns))
}

impl<F: Field> BimoduleSlice<F> {
    /// Spaces `B_0 … B_top` at internal degree `n`, where `top` is the last
    /// `ν ≤ n` with `W_ν ≠ 0`.
    pub fn build(a: &mut GradedAlgebra<F>, w: &DualBases<F>, n: usize) -> Result<Self> {
        a.ensure(n)?;
        let mut spaces = Vec::new();
        for nu in 0..=n {
            let d = w.dim(nu);
            if d == 0 {
                break;
            }
            spaces.push(BimoduleSpace::new(a, n, nu, d)?);
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for k in 1..spaces.len() {
            left.push(build_side(a, w, &spaces[k], &spaces[k - 1], true)?);
            right.push(build_side(a, w, &spaces[k], &spaces[k - 1], false)?);
        }
        Ok(BimoduleSlice {
            field: a.field().clone(),
            internal_degree: n,
            spaces,
            left,
            right,
        })
    }

    pub fn internal_degree(&self) -> usize {
        self.internal_degree
    }

    pub fn spaces(&self) -> &[BimoduleSpace] {
        &self.spaces
    }

    /// `d_L : B_ν → B_{ν−1}`.
    pub fn d_left(&self, nu: usize) -> &Mat<F> {
        &self.left[nu - 1]
    }

    pub fn d_right(&self, nu: usize) -> &Mat<F> {
        &self.right[nu - 1]
    }

    /// `d_L^p d_R^q` out of `B_ν`.
    pub fn mixed_power(&self, nu: usize, p: usize, q: usize) -> Result<Mat<F>> {
        if p + q > nu || nu >= self.spaces.len() {
            return Err(Error::InvalidParameter(format!("d_L^{p} d_R^{q} out of B_{nu}")));
        }
        let mut m = Mat::identity(self.field.clone(), self.spaces[nu].dim);
        let mut at = nu;
        for _ in 0..q {
            m = self.d_right(at).mul(&m)?;
            at -= 1;
        }
        for _ in 0..p {
            m = self.d_left(at).mul(&m)?;
            at -= 1;
        }
        Ok(m)
    }

    /// `Σ_{p=0}^{N−1} d_L^p d_R^{N−1−p}` out of `B_ν`.
    pub fn symmetric_sum(&self, nu: usize, big_n: usize) -> Result<Mat<F>> {
        let mut s = self.mixed_power(nu, 0, big_n - 1)?;
        for p in 1..big_n {
            s = s.add(&self.mixed_power(nu, p, big_n - 1 - p)?)?;
        }
        Ok(s)
    }

    /// `d_L − d_R` out of `B_ν`.
    pub fn difference(&self, nu: usize) -> Result<Mat<F>> {
        self.d_left(nu).sub(self.d_right(nu))
    }

    pub fn identities(&self, big_n: usize) -> Result<BimoduleIdentities> {
        let mut out = BimoduleIdentities {
            internal_degree: self.internal_degree,
            commute: true,
            left_nilpotent: true,
            right_nilpotent: true,
            factorization: true,
        };
        for nu in 2..self.spaces.len() {
            out.commute &= self.mixed_power(nu, 1, 1)? == self.d_right(nu - 1).mul(self.d_left(nu))?;
        }
        for nu in big_n..self.spaces.len() {
            let ln = self.mixed_power(nu, big_n, 0)?;
            let rn = self.mixed_power(nu, 0, big_n)?;
            out.left_nilpotent &= ln.is_zero();
            out.right_nilpotent &= rn.is_zero();
            let lhs = ln.sub(&rn)?;
            let after = self.difference(nu - big_n + 1)?.mul(&self.symmetric_sum(nu, big_n)?)?;
            let before = self.symmetric_sum(nu - 1, big_n)?.mul(&self.difference(nu)?)?;
            out.factorization &= lhs == after && lhs == before;
        }
        Ok(out)
    }

    /// The resolution `K(A, A)` at this internal degree: `B_{ν_k}` with
    /// `ν_k = 0, 1, N, N+1, …` and `δ′ = d_L − d_R` out of odd degrees,
    /// `Σ_p d_L^p d_R^{N−1−p}` out of even ones.
    pub fn resolution(&self, big_n: usize) -> Result<ComplexSlice<F>> {
        let nus: Vec<usize> = (0..)
            .map(|k| koszul_nu(big_n, k))
            .take_while(|&v| v < self.spaces.len())
            .collect();
        let dims = nus.iter().map(|&v| self.spaces[v].dim).collect();
        let maps = (1..nus.len())
            .map(|k| {
                if k % 2 == 1 {
                    self.difference(nus[k])
                } else {
                    self.symmetric_sum(nus[k], big_n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ComplexSlice::new(self.internal_degree as i64, Direction::Chain, nus, dims, maps, 2)
    }
}

/// Bimodule slices at internal degrees `0..=cap` in reduced bases.
pub fn bimodule_slices<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<Vec<BimoduleSlice<F>>> {
    a.ensure(cap)?;
    let w = DualBases::reduced(a, cap)?;
    (0..=cap).map(|n| BimoduleSlice::build(a, &w, n)).collect()
}
