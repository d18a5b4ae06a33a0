use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{FrameError, Graph};
use crate::logic::{ModalFormula, Node, SubformulaTable};

/// A graph with a valuation. Variables missing from `valuation` are false
/// everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    pub graph: Graph,
    pub valuation: BTreeMap<String, BTreeSet<usize>>,
    pub root: Option<usize>,
}

impl KripkeModel {
    pub fn new(graph: Graph) -> Self {
        KripkeModel { graph, valuation: BTreeMap::new(), root: None }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn holds(&self, var: &str, w: usize) -> bool {
        self.valuation.get(var).is_some_and(|s| s.contains(&w))
    }

    pub fn set(&mut self, var: &str, w: usize, value: bool) {
        let entry = self.valuation.entry(var.to_string()).or_default();
        if value {
            entry.insert(w);
        } else {
            entry.remove(&w);
        }
    }

    /// Restriction to `keep`, renumbered in the given order.
    pub fn restrict(&self, keep: &[usize]) -> KripkeModel {
        let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let valuation = self
            .valuation
            .iter()
            .map(|(k, s)| (k.clone(), s.iter().filter_map(|w| index.get(w).copied()).collect()))
            .collect();
        KripkeModel { graph: self.graph.induced(keep), valuation, root: self.root.and_then(|r| index.get(&r).copied()) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize, Deserialize)]
struct ModelRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    valuation: BTreeMap<String, BTreeSet<usize>>,
    #[serde(default)]
    root: Option<usize>,
}

impl Serialize for KripkeModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ModelRepr {
            n: self.n(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
            valuation: self.valuation.clone(),
            root: self.root,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KripkeModel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = ModelRepr::deserialize(d)?;
        let graph = Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v))).map_err(D::Error::custom)?;
        let bad = r.valuation.values().flatten().chain(r.root.iter()).find(|&&w| w >= r.n);
        if let Some(&w) = bad {
            return Err(D::Error::custom(FrameError::VertexOutOfRange { vertex: w, n: r.n }));
        }
        Ok(KripkeModel { graph, valuation: r.valuation, root: r.root })
    }
}

/// Truth of every subformula at every world, indexed `[subformula][world]`.
pub(crate) fn truth_table(m: &KripkeModel, table: &SubformulaTable) -> Vec<Vec<bool>> {
    let n = m.n();
    let mut out: Vec<Vec<bool>> = Vec::with_capacity(table.len());
    for node in table.nodes() {
        let row = match node {
            Node::Var(v) => (0..n).map(|w| m.holds(v, w)).collect(),
            Node::Not(a) => out[*a].iter().map(|b| !b).collect(),
            Node::And(a, b) => (0..n).map(|w| out[*a][w] && out[*b][w]).collect(),
            Node::Or(a, b) => (0..n).map(|w| out[*a][w] || out[*b][w]).collect(),
            Node::Diamond(a) => (0..n).map(|w| m.graph.successors(w).any(|v| out[*a][v])).collect(),
        };
        out.push(row);
    }
    out
}

/// Kripke semantics: `M, w |= phi`.
pub fn eval_modal(m: &KripkeModel, w: usize, phi: &ModalFormula) -> bool {
    let table = SubformulaTable::new(phi);
    truth_table(m, &table)[table.root()][w]
}
