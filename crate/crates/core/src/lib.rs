//! Decision procedures for modal logics whose frames are defined by
//! universal Horn formulas.

pub mod classification;
pub mod frames;
pub mod logic;
pub mod reductions;
pub mod solvers;

pub use frames::{eval_modal, horn_holds, Graph, KripkeModel, TypesList};
pub use logic::{parse_horn, parse_modal, HornClause, HornFormula, ModalFormula};
