//! Sparse vectors: `(index, value)` pairs sorted by index, never storing zeros.

use super::field::Field;

pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c·b`, merged.
pub fn axpy<F: Field>(f: &F, a: &[(usize, F::Elem)], c: &F::Elem, b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            f.add_mul_assign(&mut v, c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, f.mul(c, x))).collect()
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn collect<F: Field>(f: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = f.add(acc, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !f.is_zero(v));
    out
}

pub fn get<E>(v: &[(usize, E)], idx: usize) -> Option<&E> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|k| &v[k].1)
}

/// Dense scratch accumulator with touched-index tracking, reused across
/// many sparse combinations of the same length.
pub struct Accumulator<F: Field> {
    vals: Vec<F::Elem>,
    live: Vec<bool>,
    touched: Vec<usize>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(f: &F, len: usize) -> Self {
        Accumulator {
            vals: vec![f.zero(); len],
            live: vec![false; len],
            touched: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    #[inline]
    pub fn add_scaled(&mut self, f: &F, c: &F::Elem, v: &[(usize, F::Elem)]) {
        for (i, x) in v {
            if !self.live[*i] {
                self.live[*i] = true;
                self.touched.push(*i);
            }
            f.add_mul_assign(&mut self.vals[*i], c, x);
        }
    }

    #[inline]
    pub fn add_one(&mut self, f: &F, i: usize, x: &F::Elem) {
        if !self.live[i] {
            self.live[i] = true;
            self.touched.push(i);
        }
        self.vals[i] = f.add(&self.vals[i], x);
    }

    /// Drains the accumulated vector, resetting the scratch space.
    pub fn take(&mut self, f: &F) -> SparseVec<F::Elem> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.live[i] = false;
            let v = std::mem::replace(&mut self.vals[i], f.zero());
            if !f.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}
