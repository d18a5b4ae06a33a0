//! Formula languages: modal formulas and universal Horn frame conditions.

mod formula;
mod horn;
mod modal_parser;
pub mod zoo;

use thiserror::Error;

pub use formula::{modal_depth, subformulas, ModalFormula, Node, SubformulaTable};
pub use horn::{parse_horn, Conclusion, ConclusionShape, HornClause, HornFormula};
pub use modal_parser::parse_modal;
pub(crate) use modal_parser::parse_prefixed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown token `{found}` at byte {offset}")]
    UnknownToken { offset: usize, found: String },
    #[error("clause head at byte {offset} has more than one atom")]
    MultipleHeadAtoms { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownToken { offset, .. }
            | ParseError::MultipleHeadAtoms { offset } => *offset,
        }
    }
}
