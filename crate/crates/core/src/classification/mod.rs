//! The Horn classification procedure: NP-complete versus PSPACE-hard.

mod classify;
mod scan;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frames::{Graph, TypesList};
use crate::logic::HornClause;

pub use classify::{case_kind, classify, np_case, violated_on_some_tree, CaseKind, NpCondition};

/// Search limits. `None` means "derive from the clause": trees get
/// `|vars| * (K + 1) + 1` nodes and lines `|vars| * (K + 1) + 2` edges, where
/// `K` is the largest transitivity in the current types-list (at least 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub tree_nodes: Option<usize>,
    pub line_len: Option<usize>,
    pub trans_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { tree_nodes: None, line_len: None, trans_cap: 64 }
    }
}

impl Bounds {
    fn k_max(t: &TypesList) -> usize {
        t.max_trans().unwrap_or(2).max(2)
    }

    pub fn tree_nodes_for(&self, c: &HornClause, t: &TypesList) -> usize {
        self.tree_nodes.unwrap_or(c.var_count().max(1) * (Self::k_max(t) + 1) + 1)
    }

    pub fn line_len_for(&self, c: &HornClause, t: &TypesList) -> usize {
        self.line_len.unwrap_or(c.var_count().max(1) * (Self::k_max(t) + 1) + 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("bounds exhausted: {0}")]
    BoundsExhausted(String),
    #[error("clause {clause} matches none of the reflexive, transitive or symmetric cases: {detail}")]
    WellDefinednessViolation { clause: usize, detail: String },
}

/// A graph together with a map from clause variables to its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph: Graph,
    pub map: BTreeMap<String, usize>,
}

impl Witness {
    pub(crate) fn new(graph: &Graph, c: &HornClause, alpha: &[usize]) -> Self {
        let map = c.vars().iter().cloned().zip(alpha.iter().copied()).collect();
        Witness { graph: graph.clone(), map }
    }

    pub fn image(&self, var: &str) -> Option<usize> {
        self.map.get(var).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "NP-complete")]
    NpComplete,
    #[serde(rename = "PSPACE-hard")]
    PspaceHard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "np1")]
    Np1,
    #[serde(rename = "np2")]
    Np2,
    #[serde(rename = "np3")]
    Np3,
    #[serde(rename = "np4")]
    Np4,
    #[serde(rename = "refl")]
    Refl,
    #[serde(rename = "trans")]
    Trans,
    #[serde(rename = "symm")]
    Symm,
    #[serde(rename = "symm+trans-shortcut")]
    SymmTransShortcut,
    #[serde(rename = "all-satisfied")]
    AllSatisfied,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<usize>,
    pub case: Case,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness2: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationOutcome {
    pub verdict: Verdict,
    pub types_list: TypesList,
    pub trace: Vec<Step>,
}

impl ClassificationOutcome {
    pub fn is_np(&self) -> bool {
        self.verdict == Verdict::NpComplete
    }

    pub fn last_case(&self) -> Option<Case> {
        self.trace.last().map(|s| s.case)
    }
}

/// Whether the transitivities in `s` already force `k`-transitivity: the
/// closure of `s` under `(k1, k2) -> k2 + l * (k1 - 1)`, restricted to values
/// up to `cap`, contains `k`.
pub fn implied_transitivity(s: &BTreeSet<usize>, k: usize, cap: usize) -> bool {
    let mut have: BTreeSet<usize> = s.iter().copied().filter(|&v| v >= 2 && v <= cap).collect();
    loop {
        let current: Vec<usize> = have.iter().copied().collect();
        let mut grew = false;
        for &k1 in &current {
            for &k2 in &current {
                let mut v = k2 + (k1 - 1);
                while v <= cap {
                    grew |= have.insert(v);
                    v += k1 - 1;
                }
            }
        }
        if !grew {
            break;
        }
    }
    have.contains(&k)
}
