//! Named residuals: an identity `lhs = rhs` (exactly or modulo the Levi
//! subalgebra) is stored as `lhs - rhs` together with how it must vanish.

use crate::uqalg::{render_term, UqElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Exact,
    ModLevi,
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub id: String,
    pub relation: Relation,
    pub residual: UqElement,
}

impl Identity {
    pub fn exact(id: impl Into<String>, residual: UqElement) -> Self {
        Self {
            id: id.into(),
            relation: Relation::Exact,
            residual,
        }
    }

    pub fn mod_levi(id: impl Into<String>, residual: UqElement) -> Self {
        Self {
            id: id.into(),
            relation: Relation::ModLevi,
            residual,
        }
    }

    pub fn holds(&self, rank: usize) -> bool {
        self.witness(rank).is_none()
    }

    /// A rendered offending monomial with its coefficient, if the identity fails.
    pub fn witness(&self, rank: usize) -> Option<String> {
        match self.relation {
            Relation::Exact => self
                .residual
                .terms()
                .next_back()
                .map(|(m, c)| render_term(m, c, rank)),
            Relation::ModLevi => self
                .residual
                .non_levi_witness(rank)
                .map(|(m, c)| render_term(m, c, rank)),
        }
    }
}

/// Result of a single named check; `witness` is set exactly when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: String,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            witness: Some(witness.into()),
        }
    }

    pub fn from_witness(id: impl Into<String>, witness: Option<String>) -> Self {
        Self {
            id: id.into(),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl Identity {
    pub fn outcome(&self, rank: usize) -> Outcome {
        Outcome::from_witness(self.id.clone(), self.witness(rank))
    }
}
