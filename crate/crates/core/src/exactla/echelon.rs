//! Incremental sparse Gaussian elimination.
//!
//! Rows are inserted one at a time and top-reduced against the current
//! pivots; [`Echelon::finish`] back-substitutes to the unique reduced
//! row-echelon form. The pivot of a row is its first nonzero column.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::Field;
use super::sparse::SparseVec;

const NONE: u32 = u32::MAX;

pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<u32>,
    vals: Vec<F::Elem>,
    live: Vec<bool>,
    touched: Vec<usize>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        let zero = field.zero();
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NONE; ncols],
            vals: vec![zero; ncols],
            live: vec![false; ncols],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NONE
    }

    #[inline]
    fn touch(&mut self, i: usize) {
        if !self.live[i] {
            self.live[i] = true;
            self.touched.push(i);
            self.heap.push(Reverse(i));
        }
    }

    fn load(&mut self, v: &[(usize, F::Elem)]) {
        for (i, x) in v {
            debug_assert!(*i < self.ncols);
            self.touch(*i);
            self.vals[*i] = self.field.add(&self.vals[*i], x);
        }
    }

    fn drain(&mut self) -> SparseVec<F::Elem> {
        self.heap.clear();
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.live[i] = false;
            let v = std::mem::replace(&mut self.vals[i], self.field.zero());
            if !self.field.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }

    /// Eliminates pivot columns in increasing order. With `full`, every
    /// pivot column is cleared; otherwise stops at the first surviving
    /// non-pivot column. Returns that column if any.
    fn eliminate(&mut self, full: bool) -> Option<usize> {
        let f = self.field.clone();
        let mut lead = None;
        while let Some(Reverse(c)) = self.heap.pop() {
            if f.is_zero(&self.vals[c]) {
                continue;
            }
            let r = self.pivot_row[c];
            if r == NONE {
                if lead.is_none() {
                    lead = Some(c);
                }
                if !full {
                    break;
                }
                continue;
            }
            let factor = f.neg(&self.vals[c]);
            let row = std::mem::take(&mut self.rows[r as usize]);
            for (j, x) in &row {
                self.touch(*j);
                f.add_mul_assign(&mut self.vals[*j], &factor, x);
            }
            self.rows[r as usize] = row;
            self.vals[c] = f.zero();
        }
        lead
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        if v.is_empty() {
            return false;
        }
        self.load(v);
        let lead = self.eliminate(false);
        let mut rest = self.drain();
        let Some(lead) = lead else {
            return false;
        };
        let inv = self.field.inv(&rest[0].1).expect("nonzero leading entry is invertible");
        debug_assert_eq!(rest[0].0, lead);
        for e in rest.iter_mut() {
            e.1 = self.field.mul(&inv, &e.1);
        }
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(rest);
        true
    }

    /// Reduces `v` against the current rows. If the echelon has been
    /// finished, the result has no entries at pivot columns and is zero
    /// iff `v` lies in the row space.
    pub fn reduce(&mut self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.load(v);
        self.eliminate(true);
        self.drain()
    }

    pub fn contains(&mut self, v: &[(usize, F::Elem)]) -> bool {
        if v.is_empty() {
            return true;
        }
        self.load(v);
        let lead = self.eliminate(false);
        self.drain();
        lead.is_none()
    }

    /// Back-substitutes in place so that every row is zero at every other
    /// row's pivot, then orders rows by pivot.
    pub fn back_substitute(&mut self) {
        let f = self.field.clone();
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        let mut scratch = super::sparse::Accumulator::new(&f, self.ncols);
        for &r in &order {
            let row = std::mem::take(&mut self.rows[r]);
            let needs = row[1..].iter().any(|(c, _)| self.pivot_row[*c] != NONE);
            if !needs {
                self.rows[r] = row;
                continue;
            }
            scratch.add_scaled(&f, &f.one(), &row);
            for (c, x) in &row[1..] {
                let p = self.pivot_row[*c];
                if p != NONE {
                    scratch.add_scaled(&f, &f.neg(x), &self.rows[p as usize]);
                }
            }
            self.rows[r] = scratch.take(&f);
        }
        order.reverse();
        let mut sorted = Vec::with_capacity(self.rows.len());
        for (k, &r) in order.iter().enumerate() {
            let row = std::mem::take(&mut self.rows[r]);
            self.pivot_row[row[0].0] = k as u32;
            sorted.push(row);
        }
        self.rows = sorted;
    }

    /// Rows of the reduced row-echelon form, in pivot order.
    pub fn finish(mut self) -> (Vec<SparseVec<F::Elem>>, Vec<usize>) {
        self.back_substitute();
        let pivots = self.rows.iter().map(|r| r[0].0).collect();
        (self.rows, pivots)
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn field(&self) -> &F {
        &self.field
    }
}

/// Rank of a list of sparse rows of the given width.
pub fn rank_of<F: Field>(field: &F, ncols: usize, rows: &[SparseVec<F::Elem>]) -> usize {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    order.sort_by_key(|&i| rows[i].len());
    let mut e = Echelon::new(field.clone(), ncols);
    for i in order {
        e.insert(&rows[i]);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Reduced row-echelon form of a list of sparse rows.
pub fn rref_of<F: Field>(
    field: &F,
    ncols: usize,
    rows: &[SparseVec<F::Elem>],
) -> (Vec<SparseVec<F::Elem>>, Vec<usize>) {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    order.sort_by_key(|&i| rows[i].len());
    let mut e = Echelon::new(field.clone(), ncols);
    for i in order {
        e.insert(&rows[i]);
    }
    e.finish()
}
