//! Satisfiability engines: a bounded model-search oracle and a tableau for
//! logics whose classification stays within reflexivity and symmetry.

mod hintikka;
mod oracle;
mod tableau;

use serde::Serialize;
use thiserror::Error;

use crate::classification::ClassifyError;
use crate::frames::KripkeModel;

pub use oracle::{sat_oracle, sat_oracle_trusted, sat_oracle_with, OracleConfig};
pub use tableau::{sat_tableau, verify_cons, Annotation, TableauConfig, TableauMode, TableauSolver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Sat { model: KripkeModel, world: usize },
    UnsatWithinBound { bound: usize },
    Unsat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Oracle,
    Tableau,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatResult {
    #[serde(flatten)]
    pub status: Status,
    pub engine: Engine,
    pub stats: Stats,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self.status, Status::Sat { .. })
    }

    pub fn model(&self) -> Option<(&KripkeModel, usize)> {
        match &self.status {
            Status::Sat { model, world } => Some((model, *world)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("resource limit of {limit} search steps exhausted")]
    ResourceExhausted { limit: u64 },
    #[error("unsupported logic: {0}")]
    UnsupportedLogic(String),
    #[error("classification failed: {0}")]
    Classification(#[from] ClassifyError),
    #[error("internal error: constructed model failed verification ({0})")]
    VerificationFailed(String),
}

/// Re-check a candidate model before it is reported.
pub(crate) fn verified(
    model: KripkeModel,
    world: usize,
    psi: &crate::logic::HornFormula,
    phi: &crate::logic::ModalFormula,
) -> Result<Status, SolverError> {
    if !crate::frames::eval_modal(&model, world, phi) {
        return Err(SolverError::VerificationFailed("formula false at the root".into()));
    }
    if !crate::frames::horn_holds(&model.graph, psi) {
        return Err(SolverError::VerificationFailed("frame violates the logic".into()));
    }
    Ok(Status::Sat { model, world })
}
