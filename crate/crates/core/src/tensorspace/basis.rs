use crate::error::{Error, Result};
use crate::exactla::{rref_of, Field, Mat, SparseVec};

/// A chosen (not necessarily reduced) basis of a subspace, with coordinates.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    vectors: Mat<F>,
    // reduced rows, their pivots, and the transform T with T·vectors = reduced
    reduced: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
    transform: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> Basis<F> {
    /// Fails unless the rows of `vectors` are linearly independent.
    pub fn new(vectors: Mat<F>) -> Result<Self> {
        let f = vectors.field().clone();
        let n = vectors.ncols();
        let k = vectors.nrows();
        let rows: Vec<SparseVec<F::Elem>> = vectors
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.push((n + i, f.one()));
                v
            })
            .collect();
        let (red, pivots) = rref_of(&f, n + k, &rows);
        if pivots.iter().filter(|&&p| p < n).count() < k {
            return Err(Error::Singular("basis vectors are linearly dependent".into()));
        }
        let mut reduced = Vec::with_capacity(k);
        let mut transform = Vec::with_capacity(k);
        for r in red {
            let split = r.partition_point(|(j, _)| *j < n);
            transform.push(r[split..].iter().map(|(j, x)| (j - n, x.clone())).collect());
            let mut left = r;
            left.truncate(split);
            reduced.push(left);
        }
        Ok(Basis {
            vectors,
            reduced,
            pivots: pivots[..k].to_vec(),
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vectors(&self) -> &Mat<F> {
        &self.vectors
    }

    /// Coordinates of `v` in this basis, or an error if `v` is outside the span.
    pub fn coords(&self, v: &[(usize, F::Elem)]) -> Result<SparseVec<F::Elem>> {
        let f = self.vectors.field();
        let mut acc = crate::exactla::sparse::Accumulator::new(f, self.len());
        for (i, p) in self.pivots.iter().enumerate() {
            if let Some(c) = crate::exactla::sparse::get(v, *p) {
                acc.add_scaled(f, c, &self.transform[i]);
            }
        }
        let c = acc.take(f);
        // reconstruct and compare
        let mut back = crate::exactla::sparse::Accumulator::new(f, self.vectors.ncols());
        for (i, x) in &c {
            back.add_scaled(f, x, self.vectors.row(*i));
        }
        if back.take(f) != v {
            return Err(Error::NotInSubspace(format!(
                "vector with {} nonzeros is outside a {}-dimensional span",
                v.len(),
                self.len()
            )));
        }
        Ok(c)
    }

    /// The reduced basis of the same span.
    pub fn reduced(&self) -> Mat<F> {
        Mat::from_sparse_rows(self.vectors.field().clone(), self.vectors.ncols(), self.reduced.clone())
            .expect("reduced rows are well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Rat, Rationals};

    #[test]
    fn coordinates() {
        let m = Mat::from_ints(Rationals, 3, &[vec![1, 1, 0], vec![0, 2, 1]]).unwrap();
        let b = Basis::new(m).unwrap();
        // 2·(1,1,0) − (0,2,1) = (2,0,−1)
        let v = vec![(0, Rat::int(2)), (2, Rat::int(-1))];
        assert_eq!(b.coords(&v).unwrap(), vec![(0, Rat::int(2)), (1, Rat::int(-1))]);
        assert!(b.coords(&[(2, Rat::ONE)]).is_err());
        let dep = Mat::from_ints(Rationals, 2, &[vec![1, 1], vec![2, 2]]).unwrap();
        assert!(Basis::new(dep).is_err());
    }
}
