use std::fmt;

use super::echelon::{rank_of, rref_of, Echelon};
use super::field::Field;
use super::sparse::{self, Accumulator, SparseVec};
use crate::error::{Error, Result};

/// Sparse row-major matrix over a field. Stored rows never contain zeros.
#[derive(Clone)]
pub struct Mat<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: Mat<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: F, nrows: usize, ncols: usize) -> Self {
        Mat {
            field,
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let one = field.one();
        let rows = (0..n).map(|i| vec![(i, one.clone())]).collect();
        Mat {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    /// Builds from sparse rows, validating indices, order and entries.
    pub fn from_sparse_rows(field: F, ncols: usize, rows: Vec<SparseVec<F::Elem>>) -> Result<Self> {
        for row in &rows {
            for w in row.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::Shape("sparse row not strictly sorted".into()));
                }
            }
            for (j, x) in row {
                if *j >= ncols {
                    return Err(Error::Shape(format!("column {j} out of range {ncols}")));
                }
                if !field.contains(x) {
                    return Err(Error::ForeignEntry {
                        field: field.spec(),
                        value: format!("{x:?}"),
                    });
                }
                if field.is_zero(x) {
                    return Err(Error::Shape("explicit zero stored".into()));
                }
            }
        }
        Ok(Self::from_rows_unchecked(field, ncols, rows))
    }

    pub(crate) fn from_rows_unchecked(field: F, ncols: usize, rows: Vec<SparseVec<F::Elem>>) -> Self {
        Mat {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds from dense rows; zeros are dropped.
    pub fn from_dense(field: F, ncols: usize, dense: &[Vec<F::Elem>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(dense.len());
        for r in dense {
            if r.len() != ncols {
                return Err(Error::Shape(format!(
                    "row of length {} in {ncols}-column matrix",
                    r.len()
                )));
            }
            for x in r {
                if !field.contains(x) {
                    return Err(Error::ForeignEntry {
                        field: field.spec(),
                        value: format!("{x:?}"),
                    });
                }
            }
            rows.push(
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !field.is_zero(x))
                    .map(|(j, x)| (j, x.clone()))
                    .collect(),
            );
        }
        Ok(Self::from_rows_unchecked(field, ncols, rows))
    }

    pub fn from_ints(field: F, ncols: usize, dense: &[Vec<i64>]) -> Result<Self> {
        let conv: Vec<Vec<F::Elem>> = dense
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_dense(field, ncols, &conv)
    }

    /// Builds a matrix whose columns are the given sparse vectors.
    pub fn from_columns(field: F, nrows: usize, cols: &[SparseVec<F::Elem>]) -> Self {
        let t = Self::from_rows_unchecked(field, nrows, cols.to_vec());
        t.transpose()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[(usize, F::Elem)] {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<SparseVec<F::Elem>> {
        self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        sparse::get(&self.rows[i], j)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![self.field.zero(); self.ncols];
                for (j, x) in r {
                    d[*j] = x.clone();
                }
                d
            })
            .collect()
    }

    /// Re-checks the storage invariants.
    pub fn validate(&self) -> Result<()> {
        if self.rows.len() != self.nrows {
            return Err(Error::Shape("row count".into()));
        }
        Self::from_sparse_rows(self.field.clone(), self.ncols, self.rows.clone()).map(|_| ())
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                cols[*j].push((i, x.clone()));
            }
        }
        Mat {
            field: self.field.clone(),
            nrows: self.ncols,
            ncols: self.nrows,
            rows: cols,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        self.field.same_field(&other.field)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.ncols != other.nrows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let f = &self.field;
        let mut acc = Accumulator::new(f, other.ncols);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (k, x) in r {
                    acc.add_scaled(f, x, &other.rows[*k]);
                }
                acc.take(f)
            })
            .collect();
        Ok(Self::from_rows_unchecked(f.clone(), other.ncols, rows))
    }

    /// `self · v` for a sparse column vector `v`.
    pub fn apply(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut s = f.zero();
            let (mut a, mut b) = (0, 0);
            while a < r.len() && b < v.len() {
                match r[a].0.cmp(&v[b].0) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        f.add_mul_assign(&mut s, &r[a].1, &v[b].1);
                        a += 1;
                        b += 1;
                    }
                }
            }
            if !f.is_zero(&s) {
                out.push((i, s));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.check_same(other)?;
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        let f = &self.field;
        let c = if negate { f.neg(&f.one()) } else { f.one() };
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| sparse::axpy(f, a, &c, b))
            .collect();
        Ok(Self::from_rows_unchecked(f.clone(), self.ncols, rows))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let rows = self.rows.iter().map(|r| sparse::scale(&self.field, c, r)).collect();
        Self::from_rows_unchecked(self.field.clone(), self.ncols, rows)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.ncols != other.ncols {
            return Err(Error::Shape(format!(
                "stacking {} and {} columns",
                self.ncols, other.ncols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self::from_rows_unchecked(self.field.clone(), self.ncols, rows))
    }

    pub fn rank(&self) -> usize {
        if self.nrows <= self.ncols {
            rank_of(&self.field, self.ncols, &self.rows)
        } else {
            let t = self.transpose();
            rank_of(&self.field, t.ncols, &t.rows)
        }
    }

    pub fn rref(&self) -> Rref<F> {
        let (rows, pivots) = rref_of(&self.field, self.ncols, &self.rows);
        Rref {
            rank: rows.len(),
            reduced: Self::from_rows_unchecked(self.field.clone(), self.ncols, rows),
            pivots,
        }
    }

    /// Whether the rows are already in reduced row-echelon form.
    pub fn is_rref(&self) -> bool {
        let mut pivots = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let Some((p, x)) = r.first() else {
                return false;
            };
            if !self.field.is_one(x) || pivots.last().is_some_and(|q| q >= p) {
                return false;
            }
            pivots.push(*p);
        }
        self.rows.iter().enumerate().all(|(i, r)| {
            pivots
                .iter()
                .enumerate()
                .all(|(k, p)| k == i || sparse::get(r, *p).is_none())
        })
    }

    /// Reduced basis of `{v : self · v = 0}`, one vector per row.
    pub fn nullspace(&self) -> Self {
        let Rref { reduced, pivots, .. } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // column view of the non-pivot part: free col -> [(row, entry)]
        let mut by_free: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); self.ncols];
        for (i, r) in reduced.rows.iter().enumerate() {
            for (j, x) in &r[1..] {
                by_free[*j].push((i, x.clone()));
            }
        }
        let mut basis = Vec::with_capacity(self.ncols - pivots.len());
        for fcol in (0..self.ncols).filter(|&j| !is_pivot[j]) {
            let mut entries: Vec<(usize, F::Elem)> =
                by_free[fcol].iter().map(|(i, x)| (pivots[*i], f.neg(x))).collect();
            entries.push((fcol, f.one()));
            basis.push(sparse::collect(f, entries));
        }
        let m = Self::from_rows_unchecked(f.clone(), self.ncols, basis);
        m.rref().reduced
    }

    /// Reduced basis of the sum of the row spaces.
    pub fn rowspace_sum(&self, other: &Self) -> Result<Self> {
        Ok(self.stack(other)?.rref().reduced)
    }

    /// Reduced basis of the intersection of the row spaces (Zassenhaus).
    pub fn rowspace_intersect(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.ncols != other.ncols {
            return Err(Error::Shape(format!(
                "intersecting {} and {} columns",
                self.ncols, other.ncols
            )));
        }
        let n = self.ncols;
        let f = &self.field;
        let mut e = Echelon::new(f.clone(), 2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().map(|(j, x)| (j + n, x.clone())));
            e.insert(&v);
        }
        for r in &other.rows {
            e.insert(r);
        }
        let (rows, _) = e.finish();
        let inter: Vec<SparseVec<F::Elem>> = rows
            .into_iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.into_iter().map(|(j, x)| (j - n, x)).collect())
            .collect();
        Ok(Self::from_rows_unchecked(f.clone(), n, inter).rref().reduced)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        if self.nrows != self.ncols {
            return Err(Error::Shape("inverse of non-square matrix".into()));
        }
        let n = self.ncols;
        let f = &self.field;
        let rows: Vec<SparseVec<F::Elem>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.push((n + i, f.one()));
                v
            })
            .collect();
        let (red, pivots) = rref_of(f, 2 * n, &rows);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank below {n}")));
        }
        let inv = red
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .filter(|(j, _)| *j >= n)
                    .map(|(j, x)| (j - n, x))
                    .collect()
            })
            .collect();
        Ok(Self::from_rows_unchecked(f.clone(), n, inv))
    }

    /// Determinant by elimination (small matrices only).
    pub fn determinant(&self) -> Result<F::Elem> {
        if self.nrows != self.ncols {
            return Err(Error::Shape("determinant of non-square matrix".into()));
        }
        let f = &self.field;
        let mut d = self.to_dense();
        let n = self.nrows;
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(&d[r][c])) else {
                return Ok(f.zero());
            };
            if p != c {
                d.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &d[c][c]);
            let inv = f.inv(&d[c][c]).expect("nonzero pivot");
            for r in c + 1..n {
                if f.is_zero(&d[r][c]) {
                    continue;
                }
                let factor = f.mul(&d[r][c], &inv);
                for k in c..n {
                    let t = f.mul(&factor, &d[c][k]);
                    d[r][k] = f.sub(&d[r][k], &t);
                }
            }
        }
        Ok(det)
    }
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec()
            && self.nrows == other.nrows
            && self.ncols == other.ncols
            && self.rows == other.rows
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.nrows, self.ncols, self.field.spec())?;
        if self.nrows * self.ncols <= 400 {
            for r in self.to_dense() {
                let cells: Vec<String> = r.iter().map(|x| self.field.format(x)).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q(rows: &[Vec<i64>]) -> Mat<Rationals> {
        let n = rows.first().map_or(0, Vec::len);
        Mat::from_ints(Rationals, n, rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(Rationals, 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        let z = Mat::zeros(Rationals, 2, 3);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
        assert_eq!(r.reduced.nrows(), 0);
        assert_eq!(q(&[vec![1, 2, 3], vec![2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn rref_is_reduced() {
        let m = q(&[vec![0, 2, 4, 1], vec![1, 1, 1, 1], vec![1, 3, 5, 2]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert!(r.reduced.is_rref());
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn nullspace_examples() {
        let k = q(&[vec![1, 1]]).nullspace();
        assert_eq!(k, q(&[vec![1, -1]]));
        assert_eq!(Mat::identity(Rationals, 4).nullspace().nrows(), 0);
        let m = q(&[vec![1, 2, 3]]);
        let k = m.nullspace();
        assert_eq!(k.nrows(), 2);
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn sum_and_intersection() {
        let a = q(&[vec![1, 0]]);
        let b = q(&[vec![0, 1]]);
        assert_eq!(a.rowspace_sum(&b).unwrap().nrows(), 2);
        assert_eq!(a.rowspace_intersect(&b).unwrap().nrows(), 0);
        let u = q(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let v = q(&[vec![1, 0, -1]]);
        assert_eq!(u.rowspace_intersect(&v).unwrap(), v.rref().reduced);
        assert_eq!(u.rowspace_sum(&u).unwrap(), u.rref().reduced);
        assert_eq!(u.rowspace_intersect(&u).unwrap(), u.rref().reduced);
        assert!(a.rowspace_sum(&u).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = q(&[vec![2, 1], vec![7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Mat::identity(Rationals, 2));
        assert_eq!(m.determinant().unwrap(), crate::exactla::Rat::ONE);
        assert!(q(&[vec![1, 2], vec![2, 4]]).inverse().is_err());
    }

    #[test]
    fn validation() {
        let f = PrimeField::new(7).unwrap();
        assert!(Mat::from_sparse_rows(f, 3, vec![vec![(1, 9)]]).is_err());
        assert!(Mat::from_sparse_rows(f, 3, vec![vec![(1, 0)]]).is_err());
        assert!(Mat::from_sparse_rows(f, 3, vec![vec![(2, 1), (1, 1)]]).is_err());
        assert!(Mat::from_sparse_rows(f, 3, vec![vec![(3, 1)]]).is_err());
        let a = Mat::identity(f, 2);
        let b = Mat::identity(PrimeField::new(5).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let m = q(&m);
            let k = m.nullspace();
            prop_assert_eq!(m.rank() + k.nrows(), m.ncols());
            prop_assert!(m.mul(&k.transpose()).unwrap().is_zero());
            prop_assert!(k.is_rref() || k.nrows() == 0);
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let r = q(&m).rref().reduced;
            prop_assert_eq!(r.rref().reduced, r.clone());
            prop_assert_eq!(r.rank(), q(&m).transpose().rank());
        }

        #[test]
        fn inclusion_exclusion(a in small_matrix(), b in small_matrix()) {
            let w = a[0].len().min(b[0].len());
            let cut = |m: &Vec<Vec<i64>>| q(&m.iter().map(|r| r[..w].to_vec()).collect::<Vec<_>>());
            let (a, b) = (cut(&a), cut(&b));
            let s = a.rowspace_sum(&b).unwrap().nrows();
            let i = a.rowspace_intersect(&b).unwrap();
            prop_assert_eq!(s + i.nrows(), a.rank() + b.rank());
            // the intersection lies in both
            prop_assert_eq!(a.rowspace_sum(&i).unwrap().nrows(), a.rank());
            prop_assert_eq!(b.rowspace_sum(&i).unwrap().nrows(), b.rank());
        }

        #[test]
        fn prime_rank_agrees(m in small_matrix()) {
            let p = PrimeField::default();
            let mp = Mat::from_ints(p, m[0].len(), &m).unwrap();
            prop_assert_eq!(mp.rank(), q(&m).rank());
        }
    }
}
