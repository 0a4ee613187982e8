use super::word_count;
use crate::error::{Error, Result};
use crate::exactla::{Echelon, Field, Mat, SparseVec};

/// A subspace of `E^{⊗n}`, held as its reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    degree: usize,
    generators: usize,
    basis: Mat<F>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators && self.basis == other.basis
    }
}

impl<F: Field> Subspace<F> {
    /// Span of the given vectors (any spanning set).
    pub fn span(field: F, generators: usize, degree: usize, vectors: Vec<SparseVec<F::Elem>>) -> Result<Self> {
        let dim = word_count(generators, degree)?;
        let m = Mat::from_sparse_rows(field, dim, vectors)?;
        Ok(Subspace {
            degree,
            generators,
            basis: m.rref().reduced,
        })
    }

    /// Wraps a matrix that is already in reduced row-echelon form.
    pub fn from_rref(generators: usize, degree: usize, basis: Mat<F>) -> Result<Self> {
        if basis.ncols() != word_count(generators, degree)? {
            return Err(Error::Shape(format!(
                "{} columns for E^{degree} over {generators} generators",
                basis.ncols()
            )));
        }
        if !basis.is_rref() && basis.nrows() > 0 {
            return Err(Error::Shape("basis is not in reduced echelon form".into()));
        }
        Ok(Subspace {
            degree,
            generators,
            basis,
        })
    }

    pub fn zero(field: F, generators: usize, degree: usize) -> Result<Self> {
        let dim = word_count(generators, degree)?;
        Ok(Subspace {
            degree,
            generators,
            basis: Mat::zeros(field, 0, dim),
        })
    }

    pub fn full(field: F, generators: usize, degree: usize) -> Result<Self> {
        let dim = word_count(generators, degree)?;
        Ok(Subspace {
            degree,
            generators,
            basis: Mat::identity(field, dim),
        })
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.rows().iter().map(|r| r[0].0).collect()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.generators != other.generators {
            return Err(Error::GeneratorMismatch(self.generators, other.generators));
        }
        if self.degree != other.degree {
            return Err(Error::Shape(format!(
                "subspaces of E^{} and E^{}",
                self.degree, other.degree
            )));
        }
        self.field().same_field(other.field())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Subspace {
            basis: self.basis.rowspace_sum(&other.basis)?,
            ..self.clone()
        })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Subspace {
            basis: self.basis.rowspace_intersect(&other.basis)?,
            ..self.clone()
        })
    }

    pub fn contains_vector(&self, v: &[(usize, F::Elem)]) -> bool {
        let mut e = Echelon::new(self.field().clone(), self.ambient_dim());
        for r in self.basis.rows() {
            e.insert(r);
        }
        e.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(other.sum(self)?.dim() == other.dim())
    }
}

/// Rows of `E^{⊗k} ⊗ U ⊗ E^{⊗m}`, generated lazily in pivot order.
pub fn shifted_rows<'a, F: Field>(
    u: &'a Subspace<F>,
    k: usize,
    m: usize,
) -> Result<impl Iterator<Item = SparseVec<F::Elem>> + 'a> {
    let g = u.generators;
    let pre = word_count(g, k)?;
    let post = word_count(g, m)?;
    let block = u
        .ambient_dim()
        .checked_mul(post)
        .ok_or_else(|| Error::Shape("embedding too large".into()))?;
    pre.checked_mul(block)
        .ok_or_else(|| Error::Shape("embedding too large".into()))?;
    Ok((0..pre).flat_map(move |p| {
        u.basis.rows().iter().flat_map(move |r| {
            (0..post).map(move |q| r.iter().map(|(j, x)| (p * block + j * post + q, x.clone())).collect())
        })
    }))
}

/// `E^{⊗k} ⊗ U ⊗ E^{⊗m}` inside `E^{⊗(k+n+m)}`.
pub fn shifted_embedding<F: Field>(u: &Subspace<F>, k: usize, m: usize) -> Result<Subspace<F>> {
    let degree = k + u.degree + m;
    let ncols = word_count(u.generators, degree)?;
    let mut rows: Vec<SparseVec<F::Elem>> = shifted_rows(u, k, m)?.collect();
    // rows of a reduced basis shifted this way stay reduced; only the order changes
    rows.sort_by_key(|r| r[0].0);
    Subspace::from_rref(
        u.generators,
        degree,
        Mat::from_sparse_rows(u.field().clone(), ncols, rows)?,
    )
}

/// Annihilator under the pairing that makes the word basis self-dual.
pub fn annihilator<F: Field>(r: &Subspace<F>) -> Subspace<F> {
    Subspace {
        degree: r.degree,
        generators: r.generators,
        basis: r.basis.nullspace(),
    }
}
