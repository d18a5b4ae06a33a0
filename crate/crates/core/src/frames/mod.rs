//! Frames and models: graphs, Kripke semantics, Horn satisfaction,
//! closures, trees, unraveling, saturation and shrinking.

mod closure;
mod graph;
mod hom;
mod model;
mod saturate;
mod shrink;
mod trees;
mod unravel;

use thiserror::Error;

pub use closure::{closure, k_transitive, TypesList};
pub use graph::Graph;
pub use hom::{clause_holds, find_violation, fo_eval, for_each_hom, horn_closure, horn_holds, HomSearch};
pub use model::{eval_modal, KripkeModel};
pub use saturate::saturate;
pub use shrink::shrink;
pub use trees::{enum_trees, enum_typeslist_trees, strict_line, strict_tree, typeslist_line, TreeCatalogue};
pub use unravel::{unravel, BoundedMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed parent array: {0}")]
    MalformedTree(String),
    #[error("formula is false at world {world}")]
    FormulaFalse { world: usize },
    #[error("target model does not satisfy the frame condition")]
    TargetViolatesLogic,
    #[error("clause {clause} has an applicable instance that saturation cannot repair")]
    ApplicableFalseClause { clause: usize },
    #[error("target lacks edge ({0}, {1}) required by the morphism")]
    MissingTargetEdge(usize, usize),
}
