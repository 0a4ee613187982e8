//! Word bases of tensor powers, Kronecker embeddings and annihilators.
//!
//! A word `w = w₀w₁…w_{n−1}` over `g` letters is indexed base `g` with the
//! leftmost letter most significant. Every matrix in the crate uses this
//! convention for `E^{⊗n}`.

mod basis;
mod subspace;

pub use basis::Basis;
pub use subspace::{annihilator, shifted_embedding, shifted_rows, Subspace};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `g^n`, or an error if it does not fit in a `usize`.
pub fn word_count(g: usize, n: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|n| g.checked_pow(n))
        .ok_or_else(|| Error::BudgetExceeded {
            what: format!("E^{n} with {g} generators"),
            requested: u128::MAX,
            limit: usize::MAX as u128,
        })
}

pub fn word_index(w: &Word, g: usize) -> Result<usize> {
    let mut idx = 0usize;
    for &l in &w.0 {
        if l >= g {
            return Err(Error::LetterOutOfRange {
                letter: l,
                generators: g,
            });
        }
        idx = idx
            .checked_mul(g)
            .and_then(|x| x.checked_add(l))
            .ok_or_else(|| Error::IndexOutOfRange {
                index: usize::MAX,
                degree: w.degree(),
                generators: g,
            })?;
    }
    Ok(idx)
}

pub fn index_word(idx: usize, n: usize, g: usize) -> Result<Word> {
    let total = word_count(g, n)?;
    if idx >= total {
        return Err(Error::IndexOutOfRange {
            index: idx,
            degree: n,
            generators: g,
        });
    }
    let mut letters = vec![0; n];
    let mut rest = idx;
    for slot in letters.iter_mut().rev() {
        *slot = rest % g;
        rest /= g;
    }
    Ok(Word(letters))
}
