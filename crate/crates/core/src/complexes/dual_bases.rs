use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, SparseVec};
use crate::homalg::GradedAlgebra;
use crate::tensorspace::{word_count, Basis};

/// One summand of `w = Σ e_x ⊗ w_{x,y} ⊗ e_y`: the outer words and the
/// coordinates of the middle factor.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece<E> {
    pub left: usize,
    pub right: usize,
    pub coords: SparseVec<E>,
}

/// Chosen bases of the dual components `W_ν = (A^!*)_ν ⊂ E^{⊗ν}`,
/// reduced by default. Free-module bases of every complex are built from
/// these, so replacing one replaces the basis of every space that uses it.
#[derive(Clone, Debug)]
pub struct DualBases<F: Field> {
    generators: usize,
    bases: Vec<Basis<F>>,
}

impl<F: Field> DualBases<F> {
    /// Reduced bases of `W_0 … W_top`, stopping early at the first zero
    /// component since all later ones vanish too.
    pub fn reduced(a: &mut GradedAlgebra<F>, top: usize) -> Result<Self> {
        let mut bases = Vec::with_capacity(top + 1);
        for nu in 0..=top {
            let b = Basis::new(a.dual_component(nu)?.basis().clone())?;
            let zero = b.is_empty();
            bases.push(b);
            if zero {
                break;
            }
        }
        Ok(DualBases {
            generators: a.generators(),
            bases,
        })
    }

    /// Replaces the basis of `W_ν`; the new vectors must span the same space.
    pub fn with_basis(mut self, nu: usize, vectors: Mat<F>) -> Result<Self> {
        let old = self
            .bases
            .get(nu)
            .ok_or(Error::DegreeOutOfRange {
                requested: nu,
                available: self.top(),
            })?
            .reduced();
        let b = Basis::new(vectors)?;
        if b.reduced() != old {
            return Err(Error::NotInSubspace(format!("replacement basis does not span W_{nu}")));
        }
        self.bases[nu] = b;
        Ok(self)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    /// `dim W_ν`; zero above the stored range only if the top is already zero.
    pub fn dim(&self, nu: usize) -> usize {
        match self.bases.get(nu) {
            Some(b) => b.len(),
            None => {
                debug_assert!(self.bases.last().is_some_and(Basis::is_empty), "W_{nu} not loaded");
                0
            }
        }
    }

    pub fn basis(&self, nu: usize) -> &Basis<F> {
        &self.bases[nu]
    }

    /// Each basis vector of `W_ν` as `Σ e_x ⊗ w ⊗ e_y` with `|x| = p`,
    /// `|y| = q` and `w ∈ W_{ν−p−q}` in coordinates.
    pub fn split(&self, nu: usize, p: usize, q: usize) -> Result<Vec<Vec<Piece<F::Elem>>>> {
        if nu >= self.bases.len() {
            return Ok(Vec::new());
        }
        let mid = nu
            .checked_sub(p + q)
            .ok_or_else(|| Error::InvalidParameter(format!("cannot take {p}+{q} letters off W_{nu}")))?;
        let g = self.generators;
        let tail = word_count(g, nu - p)?;
        let post = word_count(g, q)?;
        let target = &self.bases[mid];
        self.bases[nu]
            .vectors()
            .rows()
            .iter()
            .map(|row| {
                let mut groups: BTreeMap<(usize, usize), SparseVec<F::Elem>> = BTreeMap::new();
                for (u, c) in row {
                    let rest = u % tail;
                    groups
                        .entry((u / tail, rest % post))
                        .or_default()
                        .push((rest / post, c.clone()));
                }
                groups
                    .into_iter()
                    .map(|((left, right), w)| {
                        Ok(Piece {
                            left,
                            right,
                            coords: target.coords(&w)?,
                        })
                    })
                    .collect()
            })
            .collect()
    }
}
