use serde::Serialize;

use crate::complexes::{ComplexSlice, Direction};
use crate::error::Result;
use crate::exactla::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Exact and complete: nothing beyond the computed range is involved.
    Pass,
    /// Every computed degree agrees; the claim itself concerns all degrees.
    PassUpToCap,
    Fail,
    /// The cap ran out before the claim could be decided either way.
    Indeterminate,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(self, Status::Pass | Status::PassUpToCap)
    }
}

/// One cell that decided (or illustrates) a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homological_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub internal_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_dim: Option<usize>,
    pub detail: String,
}

impl Witness {
    pub fn note(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            ..Witness::default()
        }
    }

    /// The homology cell `(k, slice degree)` with its kernel and image.
    pub fn homology<F: Field>(slice: &ComplexSlice<F>, k: usize, detail: impl Into<String>) -> Self {
        let (kernel, image) = kernel_image(slice, k);
        Witness {
            homological_degree: Some(k),
            internal_degree: Some(slice.internal_degree()),
            kernel_dim: Some(kernel),
            image_dim: Some(image),
            homology_dim: Some(kernel - image),
            detail: detail.into(),
        }
    }
}

/// `(dim ker, dim im)` at homological degree `k` of an ordinary complex.
pub fn kernel_image<F: Field>(slice: &ComplexSlice<F>, k: usize) -> (usize, usize) {
    let r = slice.ranks();
    let (out, inc) = match slice.direction() {
        Direction::Chain => (k.checked_sub(1).map(|j| r[j]), r.get(k).copied()),
        Direction::Cochain => (r.get(k).copied(), k.checked_sub(1).map(|j| r[j])),
    };
    (slice.dims()[k] - out.unwrap_or(0), inc.unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, status: Status, cap: Option<usize>) -> Self {
        Verdict {
            name: name.into(),
            status,
            witnesses: Vec::new(),
            cap,
            notes: Vec::new(),
        }
    }

    /// `PassUpToCap` when `witnesses` is empty, `Fail` otherwise.
    pub fn up_to_cap(name: impl Into<String>, cap: usize, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::PassUpToCap
        } else {
            Status::Fail
        };
        Verdict {
            witnesses,
            ..Verdict::new(name, status, Some(cap))
        }
    }

    /// `Pass` when `witnesses` is empty, `Fail` otherwise.
    pub fn exact(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Verdict {
            witnesses,
            ..Verdict::new(name, status, None)
        }
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRow {
    pub internal_degree: i64,
    pub nus: Vec<usize>,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
}

/// Homology dimensions indexed by internal degree (rows) and homological
/// degree (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub complex: String,
    pub direction: Direction,
    pub rows: Vec<HomologyRow>,
}

impl HomologyTable {
    pub fn from_slices<F: Field>(
        complex: impl Into<String>,
        direction: Direction,
        slices: &[ComplexSlice<F>],
    ) -> Result<Self> {
        let rows = slices
            .iter()
            .map(|s| {
                Ok(HomologyRow {
                    internal_degree: s.internal_degree(),
                    nus: s.nus().to_vec(),
                    dims: s.dims().to_vec(),
                    ranks: s.ranks().to_vec(),
                    homology: s.homology()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomologyTable {
            complex: complex.into(),
            direction,
            rows,
        })
    }

    /// `dim H_k` at internal degree `t`, zero outside the table.
    pub fn get(&self, k: usize, t: i64) -> usize {
        self.rows
            .iter()
            .find(|r| r.internal_degree == t)
            .and_then(|r| r.homology.get(k).copied())
            .unwrap_or(0)
    }
}
