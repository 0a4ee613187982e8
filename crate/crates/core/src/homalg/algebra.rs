//! Graded components of `A = T(E)/(R)` by normal words.
//!
//! Degree `n ≥ N` is built from degree `n−1`: `A_n` is the quotient of
//! `A_{n−1} ⊗ E` by the image of `A_{n−N} ⊗ R`, which is the ideal
//! recursion `I_n = I_{n−1}⊗E + E^{⊗(n−N)}⊗R` with `I_{n−1}⊗E` already
//! divided out. The quotient matrix has one column per pair (normal word
//! of degree `n−1`, letter), ordered like the words themselves, so its
//! pivots are exactly the leading words of `I_n`. What is kept per degree:
//! the normal words and the right multiplication table
//! `(normal word c, letter λ) ↦ NF(cλ)`. Left multiplications, normal forms
//! and the ideal itself are derived from these on demand.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::sparse::{self, Accumulator};
use crate::exactla::{Echelon, Field, Mat, SparseVec};
use crate::tensorspace::{index_word, shifted_embedding, word_count, Subspace, Word};

use super::presentation::Presentation;

const NONE: u32 = u32::MAX;

/// Upper bound on the dense-equivalent size of any matrix or word table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_cells: 1 << 32 }
    }
}

impl Budget {
    pub fn check(&self, what: impl FnOnce() -> String, rows: usize, cols: usize) -> Result<()> {
        let cells = rows as u128 * cols as u128;
        if cells > self.max_cells {
            return Err(Error::BudgetExceeded {
                what: what(),
                requested: cells,
                limit: self.max_cells,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A homogeneous element, in coordinates over the normal words of its degree.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<F: Field> {
    pub degree: usize,
    pub coords: SparseVec<F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            coords: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

struct Degree<F: Field> {
    normal: Vec<usize>,
    position: Vec<u32>,
    // indexed by (position in degree n−1) · g + letter; empty for n = 0
    right: Vec<SparseVec<F::Elem>>,
}

pub struct GradedAlgebra<F: Field> {
    pres: Presentation<F>,
    budget: Budget,
    degrees: Vec<Degree<F>>,
    left: HashMap<(usize, usize), Vec<SparseVec<F::Elem>>>,
    dual: Vec<Subspace<F>>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(pres: Presentation<F>) -> Self {
        Self::with_budget(pres, Budget::default())
    }

    pub fn with_budget(pres: Presentation<F>, budget: Budget) -> Self {
        let unit = Degree {
            normal: vec![0],
            position: vec![0],
            right: Vec::new(),
        };
        GradedAlgebra {
            pres,
            budget,
            degrees: vec![unit],
            left: HashMap::new(),
            dual: Vec::new(),
        }
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.pres
    }

    pub fn field(&self) -> &F {
        self.pres.field()
    }

    pub fn generators(&self) -> usize {
        self.pres.generators()
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Highest degree whose tables are built.
    pub fn computed_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    fn available(&self, n: usize) -> Result<&Degree<F>> {
        self.degrees.get(n).ok_or(Error::DegreeOutOfRange {
            requested: n,
            available: self.computed_degree(),
        })
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        Ok(self.available(n)?.normal.len())
    }

    /// Normal words of degree `n` (word indices, ascending): a basis of `A_n`.
    pub fn normal_words(&self, n: usize) -> Result<&[usize]> {
        Ok(&self.available(n)?.normal)
    }

    /// Position of a word among the normal words of its degree.
    pub fn position(&self, n: usize, word: usize) -> Result<Option<usize>> {
        let d = self.available(n)?;
        Ok(d.position.get(word).and_then(|&p| (p != NONE).then_some(p as usize)))
    }

    /// Builds the tables through degree `n`.
    pub fn ensure(&mut self, n: usize) -> Result<()> {
        while self.computed_degree() < n {
            let next = self.computed_degree() + 1;
            let d = self.build(next)?;
            self.degrees.push(d);
        }
        Ok(())
    }

    /// `[dim A_0, …, dim A_cap]`. The top degree is reduced for rank only
    /// unless its tables are already present.
    pub fn graded_dims(&mut self, cap: usize) -> Result<Vec<usize>> {
        if cap > 0 {
            self.ensure(cap - 1)?;
        }
        let mut dims: Vec<usize> = (0..cap.min(self.degrees.len()))
            .map(|n| self.degrees[n].normal.len())
            .collect();
        if cap < self.degrees.len() {
            dims.push(self.degrees[cap].normal.len());
        } else {
            dims.push(self.top_dim(cap)?);
        }
        Ok(dims)
    }

    fn top_dim(&self, n: usize) -> Result<usize> {
        let cols = self.degrees[n - 1].normal.len() * self.generators();
        if n < self.pres.degree() {
            return Ok(cols);
        }
        let gens = self.quotient_generators(n)?;
        let mut e = Echelon::new(self.field().clone(), cols);
        for v in &gens {
            e.insert(v);
        }
        Ok(cols - e.rank())
    }

    /// Images of `A_{n−N} ⊗ R` in `A_{n−1} ⊗ E`, one per (normal word, basis
    /// relation), sorted sparsest first.
    fn quotient_generators(&self, n: usize) -> Result<Vec<SparseVec<F::Elem>>> {
        let f = self.field().clone();
        let g = self.generators();
        let big_n = self.pres.degree();
        let base = n - big_n;
        let cols = self.degrees[n - 1].normal.len() * g;
        let rels = self.pres.relations().basis();
        self.budget.check(
            || format!("degree {n} quotient"),
            self.degrees[base].normal.len() * rels.nrows(),
            cols,
        )?;
        let mut acc = Accumulator::new(&f, cols);
        let mut out = Vec::new();
        let prefixes = word_count(g, big_n - 1)?;
        for p in 0..self.degrees[base].normal.len() {
            // NF(c·u) in A_{n−1} for every word u of length N−1
            let mut layer: Vec<SparseVec<F::Elem>> = vec![vec![(p, f.one())]];
            for t in 1..big_n {
                let mut next = Vec::with_capacity(layer.len() * g);
                for v in &layer {
                    for x in 0..g {
                        next.push(self.right_mul_coords(base + t - 1, v, x));
                    }
                }
                layer = next;
            }
            debug_assert_eq!(layer.len(), prefixes);
            for r in rels.rows() {
                for (w, c) in r {
                    let (u, last) = (w / g, w % g);
                    for (q, x) in &layer[u] {
                        acc.add_one(&f, q * g + last, &f.mul(c, x));
                    }
                }
                let v = acc.take(&f);
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
        out.sort_by_key(Vec::len);
        Ok(out)
    }

    fn build(&self, n: usize) -> Result<Degree<F>> {
        let f = self.field().clone();
        let g = self.generators();
        let ambient = word_count(g, n)?;
        self.budget.check(|| format!("word table of degree {n}"), ambient, 1)?;
        let prev = &self.degrees[n - 1];
        let cols = prev.normal.len() * g;
        let col_word = |j: usize| prev.normal[j / g] * g + j % g;
        if n < self.pres.degree() {
            let normal: Vec<usize> = (0..cols).map(col_word).collect();
            let mut position = vec![NONE; ambient];
            for (k, w) in normal.iter().enumerate() {
                position[*w] = k as u32;
            }
            let right = (0..cols).map(|j| vec![(j, f.one())]).collect();
            return Ok(Degree {
                normal,
                position,
                right,
            });
        }
        let gens = self.quotient_generators(n)?;
        let mut e = Echelon::new(f.clone(), cols);
        for v in &gens {
            e.insert(v);
        }
        drop(gens);
        let (rows, pivots) = e.finish();
        let mut pivot_row = vec![NONE; cols];
        for (i, p) in pivots.iter().enumerate() {
            pivot_row[*p] = i as u32;
        }
        let mut normal = Vec::with_capacity(cols - pivots.len());
        let mut pos_of_col = vec![NONE; cols];
        let mut position = vec![NONE; ambient];
        for j in 0..cols {
            if pivot_row[j] == NONE {
                pos_of_col[j] = normal.len() as u32;
                position[col_word(j)] = normal.len() as u32;
                normal.push(col_word(j));
            }
        }
        let mut rows: Vec<Option<SparseVec<F::Elem>>> = rows.into_iter().map(Some).collect();
        let right = (0..cols)
            .map(|j| match pivot_row[j] {
                NONE => vec![(pos_of_col[j] as usize, f.one())],
                r => {
                    let row = rows[r as usize].take().expect("each pivot row used once");
                    row[1..]
                        .iter()
                        .map(|(c, x)| (pos_of_col[*c] as usize, f.neg(x)))
                        .collect()
                }
            })
            .collect();
        Ok(Degree {
            normal,
            position,
            right,
        })
    }

    /// `v·x` for `v ∈ A_n` in coordinates; needs degree `n+1`.
    pub fn right_mul_coords(&self, n: usize, v: &[(usize, F::Elem)], x: usize) -> SparseVec<F::Elem> {
        let f = self.field();
        let g = self.generators();
        let table = &self.degrees[n + 1].right;
        if let [(p, c)] = v {
            return sparse::scale(f, c, &table[p * g + x]);
        }
        let mut entries = Vec::new();
        for (p, c) in v {
            entries.extend(table[p * g + x].iter().map(|(q, y)| (*q, f.mul(c, y))));
        }
        sparse::collect(f, entries)
    }

    fn left_table(&mut self, x: usize, n: usize) -> Result<&Vec<SparseVec<F::Elem>>> {
        self.ensure(n + 1)?;
        if !self.left.contains_key(&(x, n)) {
            let cols = if n == 0 {
                vec![vec![(x, self.field().one())]]
            } else {
                self.left_table(x, n - 1)?;
                let g = self.generators();
                let prevt = &self.left[&(x, n - 1)];
                let d = &self.degrees[n];
                d.normal
                    .iter()
                    .map(|w| {
                        let pre = self.degrees[n - 1].position[w / g] as usize;
                        self.right_mul_coords(n, &prevt[pre], w % g)
                    })
                    .collect()
            };
            self.left.insert((x, n), cols);
        }
        Ok(&self.left[&(x, n)])
    }

    /// `x·v` for `v ∈ A_n` in coordinates.
    pub fn left_mul_coords(&mut self, n: usize, v: &[(usize, F::Elem)], x: usize) -> Result<SparseVec<F::Elem>> {
        let f = self.field().clone();
        let t = self.left_table(x, n)?;
        let mut entries = Vec::new();
        for (p, c) in v {
            entries.extend(t[*p].iter().map(|(q, y)| (*q, f.mul(c, y))));
        }
        Ok(sparse::collect(&f, entries))
    }

    /// Matrix of multiplication by generator `x` from `A_n` to `A_{n+1}`
    /// (columns are images of the normal words).
    pub fn mult_matrix(&mut self, x: usize, side: Side, n: usize) -> Result<Mat<F>> {
        if x >= self.generators() {
            return Err(Error::LetterOutOfRange {
                letter: x,
                generators: self.generators(),
            });
        }
        self.ensure(n + 1)?;
        let g = self.generators();
        let rows_dim = self.degrees[n + 1].normal.len();
        let cols: Vec<SparseVec<F::Elem>> = match side {
            Side::Right => (0..self.degrees[n].normal.len())
                .map(|p| self.degrees[n + 1].right[p * g + x].clone())
                .collect(),
            Side::Left => self.left_table(x, n)?.clone(),
        };
        Ok(Mat::from_columns(self.field().clone(), rows_dim, &cols))
    }

    /// Normal form of a word, in coordinates over the normal words.
    pub fn normal_form(&mut self, w: &Word) -> Result<AlgebraElement<F>> {
        let g = self.generators();
        for &l in w.letters() {
            if l >= g {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    generators: g,
                });
            }
        }
        self.ensure(w.degree())?;
        let mut v = vec![(0, self.field().one())];
        for (t, &l) in w.letters().iter().enumerate() {
            v = self.right_mul_coords(t, &v, l);
        }
        Ok(AlgebraElement {
            degree: w.degree(),
            coords: v,
        })
    }

    /// Image in `A_n` of a tensor in the word basis of `E^{⊗n}`.
    pub fn reduce_tensor(&mut self, n: usize, v: &[(usize, F::Elem)]) -> Result<AlgebraElement<F>> {
        self.ensure(n)?;
        let f = self.field().clone();
        let g = self.generators();
        let mut acc = Accumulator::new(&f, self.degrees[n].normal.len());
        for (w, c) in v {
            if let Some(&p) = self.degrees[n].position.get(*w) {
                if p != NONE {
                    acc.add_one(&f, p as usize, c);
                    continue;
                }
            }
            let word = index_word(*w, n, g)?;
            let nf = self.normal_form(&word)?;
            acc.add_scaled(&f, c, &nf.coords);
        }
        Ok(AlgebraElement {
            degree: n,
            coords: acc.take(&f),
        })
    }

    /// The element given by a normal word.
    pub fn basis_element(&self, n: usize, pos: usize) -> AlgebraElement<F> {
        AlgebraElement {
            degree: n,
            coords: vec![(pos, self.field().one())],
        }
    }

    pub fn mul(&mut self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        let f = self.field().clone();
        let g = self.generators();
        let total = a.degree + b.degree;
        self.ensure(total)?;
        let mut acc = Accumulator::new(&f, self.degrees[total].normal.len());
        for (p, c) in &b.coords {
            let word = index_word(self.degrees[b.degree].normal[*p], b.degree, g)?;
            let mut v = a.coords.clone();
            for (t, &l) in word.letters().iter().enumerate() {
                if v.is_empty() {
                    break;
                }
                v = self.right_mul_coords(a.degree + t, &v, l);
            }
            acc.add_scaled(&f, c, &v);
        }
        Ok(AlgebraElement {
            degree: total,
            coords: acc.take(&f),
        })
    }

    /// `I_n ⊂ E^{⊗n}` in reduced form: one row `w − NF(w)` per non-normal word.
    pub fn ideal_component(&mut self, n: usize) -> Result<Subspace<F>> {
        self.ensure(n)?;
        let f = self.field().clone();
        let g = self.generators();
        let ambient = word_count(g, n)?;
        let mut rows = Vec::new();
        for w in 0..ambient {
            if self.degrees[n].position[w] != NONE {
                continue;
            }
            let nf = self.normal_form(&index_word(w, n, g)?)?;
            let mut row = vec![(w, f.one())];
            let normal = &self.degrees[n].normal;
            row.extend(nf.coords.iter().map(|(p, x)| (normal[*p], f.neg(x))));
            rows.push(row);
        }
        Subspace::from_rref(g, n, Mat::from_sparse_rows(f, ambient, rows)?)
    }

    /// `(A^!*)_n = ∩_{i+N+j=n} E^{⊗i} ⊗ R ⊗ E^{⊗j}`, via
    /// `W_n = (E ⊗ W_{n−1}) ∩ (W_{n−1} ⊗ E)`.
    pub fn dual_component(&mut self, n: usize) -> Result<&Subspace<F>> {
        let f = self.field().clone();
        let g = self.generators();
        let big_n = self.pres.degree();
        while self.dual.len() <= n {
            let k = self.dual.len();
            let w = if k < big_n {
                self.budget.check(|| format!("E^{k}"), word_count(g, k)?, 1)?;
                Subspace::full(f.clone(), g, k)?
            } else if k == big_n {
                self.pres.relations().clone()
            } else {
                let prev = &self.dual[k - 1];
                if prev.dim() == 0 {
                    Subspace::zero(f.clone(), g, k)?
                } else {
                    self.budget.check(
                        || format!("dual component {k}"),
                        2 * g * prev.dim(),
                        2 * word_count(g, k)?,
                    )?;
                    shifted_embedding(prev, 1, 0)?.intersect(&shifted_embedding(prev, 0, 1)?)?
                }
            };
            self.dual.push(w);
        }
        Ok(&self.dual[n])
    }
}

/// `I_n` by the literal recursion `I_n = I_{n−1}⊗E + E^{⊗(n−N)}⊗R`.
pub fn ideal_by_recursion<F: Field>(p: &Presentation<F>, n: usize) -> Result<Subspace<F>> {
    let big_n = p.degree();
    if n < big_n {
        return Subspace::zero(p.field().clone(), p.generators(), n);
    }
    if n == big_n {
        return Ok(p.relations().clone());
    }
    let prev = ideal_by_recursion(p, n - 1)?;
    shifted_embedding(&prev, 0, 1)?.sum(&shifted_embedding(p.relations(), n - big_n, 0)?)
}

/// `I_n = Σ_i E^{⊗i} ⊗ R ⊗ E^{⊗(n−N−i)}` summed directly.
pub fn ideal_by_sum<F: Field>(p: &Presentation<F>, n: usize) -> Result<Subspace<F>> {
    let big_n = p.degree();
    let mut acc = Subspace::zero(p.field().clone(), p.generators(), n)?;
    if n < big_n {
        return Ok(acc);
    }
    for i in 0..=n - big_n {
        acc = acc.sum(&shifted_embedding(p.relations(), i, n - big_n - i)?)?;
    }
    Ok(acc)
}

/// `∩_i E^{⊗i} ⊗ R ⊗ E^{⊗(n−N−i)}` intersected directly.
pub fn dual_by_intersection<F: Field>(p: &Presentation<F>, n: usize) -> Result<Subspace<F>> {
    let big_n = p.degree();
    if n < big_n {
        return Subspace::full(p.field().clone(), p.generators(), n);
    }
    let mut acc = shifted_embedding(p.relations(), 0, n - big_n)?;
    for i in 1..=n - big_n {
        acc = acc.intersect(&shifted_embedding(p.relations(), i, n - big_n - i)?)?;
    }
    Ok(acc)
}
