use crate::error::{Error, Result};
use crate::exactla::{Field, SparseVec};
use crate::tensorspace::{annihilator, Subspace};

/// A finitely presented N-homogeneous algebra `T(E)/(R)` with `R ⊂ E^{⊗N}`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    name: String,
    relations: Subspace<F>,
}

impl<F: Field> Presentation<F> {
    pub fn new(name: impl Into<String>, relations: Subspace<F>) -> Result<Self> {
        if relations.degree() < 2 {
            return Err(Error::InvalidParameter(format!(
                "relation degree must be at least 2, got {}",
                relations.degree()
            )));
        }
        if relations.generators() == 0 {
            return Err(Error::InvalidParameter("no generators".into()));
        }
        Ok(Presentation {
            name: name.into(),
            relations,
        })
    }

    /// Relations given as vectors in the word basis of `E^{⊗N}`.
    pub fn from_relations(
        name: impl Into<String>,
        field: F,
        generators: usize,
        degree: usize,
        relations: Vec<SparseVec<F::Elem>>,
    ) -> Result<Self> {
        Self::new(name, Subspace::span(field, generators, degree, relations)?)
    }

    pub fn free(name: impl Into<String>, field: F, generators: usize, degree: usize) -> Result<Self> {
        Self::new(name, Subspace::zero(field, generators, degree)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &F {
        self.relations.field()
    }

    pub fn generators(&self) -> usize {
        self.relations.generators()
    }

    /// The relation degree N.
    pub fn degree(&self) -> usize {
        self.relations.degree()
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// `A(E*, R⊥)`, with `E*` identified with `E` through the dual word basis.
    pub fn dual(&self) -> Presentation<F> {
        Presentation {
            name: format!("{}!", self.name),
            relations: annihilator(&self.relations),
        }
    }

    pub fn same_relations(&self, other: &Self) -> bool {
        self.generators() == other.generators() && self.degree() == other.degree() && self.relations == other.relations
    }
}
