use std::fmt;

use serde::{Deserialize, Serialize};

use super::FrameError;

/// Finite directed graph on vertices `0..n`, stored as bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, FrameError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(FrameError::VertexOutOfRange { vertex: u.max(v), n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph with all loops.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in 0..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `(u, v)`; returns whether it was new.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        let w = &mut self.rows[u * self.words + v / 64];
        let bit = 1u64 << (v % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.successors(u).map(move |v| (u, v)))
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[u * self.words..(u + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn or_row(&mut self, u: usize, bits: &[u64]) {
        let base = u * self.words;
        for (i, w) in bits.iter().enumerate() {
            self.rows[base + i] |= w;
        }
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// OR the edges of `other` into `self`; returns whether anything changed.
    pub fn union_with(&mut self, other: &Graph) -> bool {
        assert_eq!(self.n, other.n);
        let mut changed = false;
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            let next = *a | b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }

    /// Graph of walks of exactly `k` steps: `(u, v)` iff some `k`-step path
    /// leads from `u` to `v`. `k = 0` gives the identity relation.
    pub fn power(&self, k: usize) -> Graph {
        let mut result = Graph::new(self.n);
        for u in 0..self.n {
            result.add_edge(u, u);
        }
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base);
            }
        }
        result
    }

    /// Relational composition: `(u, w)` iff `(u, v)` in self and `(v, w)` in other.
    pub fn compose(&self, other: &Graph) -> Graph {
        let mut out = Graph::new(self.n);
        for u in 0..self.n {
            let base = u * self.words;
            for v in self.successors(u) {
                let src = &other.rows[v * other.words..(v + 1) * other.words];
                for (i, w) in src.iter().enumerate() {
                    out.rows[base + i] |= w;
                }
            }
        }
        out
    }

    /// Subgraph induced by `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices reachable from `u` by a path with at least one edge.
    pub fn reachable_from(&self, u: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack: Vec<usize> = self.successors(u).collect();
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            stack.extend(self.successors(v).filter(|&w| !seen[w]));
        }
        seen
    }

    /// Undirected distance from `u` to every vertex (`usize::MAX` if unreachable).
    pub fn undirected_distances(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            for w in 0..self.n {
                if dist[w] == usize::MAX && (self.has_edge(v, w) || self.has_edge(w, v)) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges().map(|(u, v)| [u, v]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}
