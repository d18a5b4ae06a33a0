use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Closure conditions maintained by the classifier: reflexivity, symmetry
/// and a set of `k`-transitivities with `k >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypesList {
    pub refl: bool,
    pub symm: bool,
    pub trans: BTreeSet<usize>,
}

impl TypesList {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn with_refl(mut self) -> Self {
        self.refl = true;
        self
    }

    pub fn with_symm(mut self) -> Self {
        self.symm = true;
        self
    }

    /// Adds `trans^k`. Values below 2 are tautological and ignored.
    pub fn with_trans(mut self, k: usize) -> Self {
        if k >= 2 {
            self.trans.insert(k);
        }
        self
    }

    pub fn is_empty(&self) -> bool {
        !self.refl && !self.symm && self.trans.is_empty()
    }

    /// Largest transitivity exponent, or `None`.
    pub fn max_trans(&self) -> Option<usize> {
        self.trans.iter().next_back().copied()
    }
}

impl fmt::Display for TypesList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.refl {
            parts.push("refl".to_string());
        }
        if self.symm {
            parts.push("symm".to_string());
        }
        parts.extend(self.trans.iter().map(|k| format!("trans{k}")));
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown closure condition `{0}` (expected refl, symm, trans or transK)")]
pub struct TypesListParseError(pub String);

impl FromStr for TypesList {
    type Err = TypesListParseError;

    /// Comma separated: `refl`, `symm`, `trans` (meaning `trans2`), `transK`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = TypesList::empty();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let lower = item.to_ascii_lowercase();
            match lower.as_str() {
                "refl" => t.refl = true,
                "symm" => t.symm = true,
                "trans" => {
                    t.trans.insert(2);
                }
                other => {
                    let k = other
                        .strip_prefix("trans")
                        .map(|r| r.trim_start_matches(['^', ':']))
                        .and_then(|r| r.parse::<usize>().ok())
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| TypesListParseError(item.to_string()))?;
                    t = t.with_trans(k);
                }
            }
        }
        Ok(t)
    }
}

/// Least supergraph of `g` satisfying every condition of `t`.
pub fn closure(g: &Graph, t: &TypesList) -> Graph {
    let mut h = g.clone();
    if t.refl {
        for u in 0..h.n() {
            h.add_edge(u, u);
        }
    }
    loop {
        let mut changed = false;
        if t.symm {
            let edges: Vec<_> = h.edges().collect();
            for (u, v) in edges {
                changed |= h.add_edge(v, u);
            }
        }
        if t.trans.contains(&2) {
            changed |= transitive_close(&mut h);
        }
        for &k in t.trans.iter().filter(|&&k| k > 2) {
            let p = h.power(k);
            changed |= h.union_with(&p);
        }
        if !changed {
            return h;
        }
    }
}

/// Warshall in place; returns whether any edge was added.
fn transitive_close(h: &mut Graph) -> bool {
    let n = h.n();
    let before = h.edge_count();
    for k in 0..n {
        let row_k: Vec<u64> = h.row(k).to_vec();
        for i in 0..n {
            if h.has_edge(i, k) {
                h.or_row(i, &row_k);
            }
        }
    }
    h.edge_count() != before
}

/// Every pair joined by a `k`-step walk is joined by an edge.
pub fn k_transitive(g: &Graph, k: usize) -> bool {
    k <= 1 || g.power(k).is_subgraph_of(g)
}
