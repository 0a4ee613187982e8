use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// maps lower the homological degree
    Chain,
    /// maps raise it
    Cochain,
}

/// One internal-degree piece of a complex: finite spaces indexed by
/// homological degree `0..len` and the maps between neighbours.
///
/// `maps[k]` joins spaces `k` and `k+1`: it is `d_{k+1}` for a chain
/// complex and `δ^k` for a cochain complex. For an N-complex the
/// `nilpotency` is N and only N-fold composites are required to vanish.
#[derive(Clone, Debug)]
pub struct ComplexSlice<F: Field> {
    internal_degree: i64,
    direction: Direction,
    nus: Vec<usize>,
    dims: Vec<usize>,
    maps: Vec<Mat<F>>,
    nilpotency: usize,
    ranks: OnceLock<Vec<usize>>,
}

impl<F: Field> ComplexSlice<F> {
    /// Checks shapes and that every `nilpotency`-fold composite is zero.
    pub fn new(
        internal_degree: i64,
        direction: Direction,
        nus: Vec<usize>,
        dims: Vec<usize>,
        maps: Vec<Mat<F>>,
        nilpotency: usize,
    ) -> Result<Self> {
        if nilpotency < 2 {
            return Err(Error::InvalidParameter(format!("nilpotency {nilpotency} < 2")));
        }
        if nus.len() != dims.len() || maps.len() + 1 != dims.len().max(1) {
            return Err(Error::Shape(format!(
                "{} spaces, {} labels and {} maps",
                dims.len(),
                nus.len(),
                maps.len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            let (rows, cols) = match direction {
                Direction::Chain => (dims[k], dims[k + 1]),
                Direction::Cochain => (dims[k + 1], dims[k]),
            };
            if m.nrows() != rows || m.ncols() != cols {
                return Err(Error::Shape(format!(
                    "map {k} is {}x{}, expected {rows}x{cols}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let slice = ComplexSlice {
            internal_degree,
            direction,
            nus,
            dims,
            maps,
            nilpotency,
            ranks: OnceLock::new(),
        };
        slice.verify()?;
        Ok(slice)
    }

    fn verify(&self) -> Result<()> {
        let n = self.nilpotency;
        for start in 0..self.maps.len().saturating_sub(n - 1) {
            let run = &self.maps[start..start + n];
            // the composite in application order
            let composite = match self.direction {
                Direction::Chain => run.iter().try_fold(None::<Mat<F>>, |acc, m| match acc {
                    None => Ok(Some(m.clone())),
                    Some(a) => a.mul(m).map(Some),
                })?,
                Direction::Cochain => run.iter().try_fold(None::<Mat<F>>, |acc, m| match acc {
                    None => Ok(Some(m.clone())),
                    Some(a) => m.mul(&a).map(Some),
                })?,
            };
            if composite.is_some_and(|c| !c.is_zero()) {
                return Err(Error::ComplexInvariant(format!(
                    "{n}-fold composite starting at map {start} is nonzero (internal degree {})",
                    self.internal_degree
                )));
            }
        }
        Ok(())
    }

    pub fn internal_degree(&self) -> i64 {
        self.internal_degree
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// The degree of the dual component sitting in each homological degree.
    pub fn nus(&self) -> &[usize] {
        &self.nus
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn maps(&self) -> &[Mat<F>] {
        &self.maps
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// `d_k` (chain) or `δ^k` (cochain), if it exists.
    pub fn differential(&self, k: usize) -> Option<&Mat<F>> {
        match self.direction {
            Direction::Chain => k.checked_sub(1).and_then(|j| self.maps.get(j)),
            Direction::Cochain => self.maps.get(k),
        }
    }

    pub fn ranks(&self) -> &[usize] {
        self.ranks.get_or_init(|| self.maps.iter().map(Mat::rank).collect())
    }

    /// `dim H_k` for each homological degree. Only defined for ordinary complexes.
    pub fn homology(&self) -> Result<Vec<usize>> {
        if self.nilpotency != 2 {
            return Err(Error::Unsupported(format!(
                "ordinary homology of a {}-complex",
                self.nilpotency
            )));
        }
        let r = self.ranks();
        Ok((0..self.dims.len())
            .map(|k| {
                let below = if k > 0 { r[k - 1] } else { 0 };
                let above = r.get(k).copied().unwrap_or(0);
                self.dims[k] - below - above
            })
            .collect())
    }

    /// `Σ (−1)^k dim C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

impl<F: Field> PartialEq for ComplexSlice<F> {
    fn eq(&self, other: &Self) -> bool {
        self.internal_degree == other.internal_degree
            && self.direction == other.direction
            && self.nus == other.nus
            && self.dims == other.dims
            && self.maps == other.maps
            && self.nilpotency == other.nilpotency
    }
}
