use std::collections::BTreeSet;

use serde::Serialize;

use super::{Graph, KripkeModel};

/// A map between worlds of two models, with checkers for the three
/// bounded-morphism conditions. `frontier` lists source worlds at which the
/// back condition is not claimed (leaves of a truncated unraveling).
#[derive(Clone, Debug, Serialize)]
pub struct BoundedMorphism {
    pub source: KripkeModel,
    pub target: KripkeModel,
    pub map: Vec<usize>,
    pub frontier: BTreeSet<usize>,
}

impl BoundedMorphism {
    /// (i) `u` and `map[u]` agree on every variable.
    pub fn preserves_valuation(&self) -> bool {
        let vars: BTreeSet<&String> = self.source.valuation.keys().chain(self.target.valuation.keys()).collect();
        (0..self.source.n()).all(|u| vars.iter().all(|v| self.source.holds(v, u) == self.target.holds(v, self.map[u])))
    }

    /// (ii) edges are mapped to edges.
    pub fn is_homomorphism(&self) -> bool {
        self.source.graph.edges().all(|(u, v)| self.target.graph.has_edge(self.map[u], self.map[v]))
    }

    /// (iii) at `u`: every successor of `map[u]` is the image of a successor of `u`.
    pub fn back_at(&self, u: usize) -> bool {
        let images: BTreeSet<usize> = self.source.graph.successors(u).map(|v| self.map[v]).collect();
        self.target.graph.successors(self.map[u]).all(|t| images.contains(&t))
    }

    /// (iii) at every world outside the frontier.
    pub fn back_condition(&self) -> bool {
        (0..self.source.n()).filter(|u| !self.frontier.contains(u)).all(|u| self.back_at(u))
    }

    pub fn is_valid(&self) -> bool {
        self.map.len() == self.source.n()
            && self.map.iter().all(|&t| t < self.target.n())
            && self.preserves_valuation()
            && self.is_homomorphism()
            && self.back_condition()
    }
}

/// Tree of all paths from `w` with at most `depth` edges, each path mapped
/// to its endpoint. Nodes are numbered in breadth-first order; the back
/// condition holds at every node of tree depth below `depth`.
pub fn unravel(m: &KripkeModel, w: usize, depth: usize) -> (KripkeModel, BoundedMorphism) {
    let mut map = vec![w];
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut frontier = BTreeSet::new();
    let mut lvl = 0;
    while lvl < depth && !level.is_empty() {
        let mut next = Vec::new();
        for &node in &level {
            for v in m.graph.successors(map[node]) {
                let id = map.len();
                map.push(v);
                edges.push((node, id));
                next.push(id);
            }
        }
        level = next;
        lvl += 1;
    }
    if lvl == depth {
        frontier.extend(level);
    }
    let graph = Graph::from_edges(map.len(), edges).expect("tree edges are in range");
    let mut tree = KripkeModel::new(graph);
    for (var, worlds) in &m.valuation {
        let pulled = (0..map.len()).filter(|&u| worlds.contains(&map[u])).collect();
        tree.valuation.insert(var.clone(), pulled);
    }
    tree.root = Some(0);
    let f = BoundedMorphism { source: tree.clone(), target: m.clone(), map, frontier };
    (tree, f)
}
