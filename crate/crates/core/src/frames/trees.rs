use super::{closure, FrameError, Graph, TypesList};

/// Tree with edges parent -> child. `parents[0]` must be `None` and every
/// other entry must point to an earlier node.
pub fn strict_tree(parents: &[Option<usize>]) -> Result<Graph, FrameError> {
    if parents.first() != Some(&None) {
        return Err(FrameError::MalformedTree("node 0 must be the root".into()));
    }
    let mut g = Graph::new(parents.len());
    for (i, p) in parents.iter().enumerate().skip(1) {
        match *p {
            Some(p) if p < i => {
                g.add_edge(p, i);
            }
            Some(p) => {
                return Err(FrameError::MalformedTree(format!("node {i} has parent {p}, expected an earlier node")))
            }
            None => return Err(FrameError::MalformedTree(format!("node {i} has no parent"))),
        }
    }
    Ok(g)
}

/// `0 -> 1 -> ... -> n` (n edges, n + 1 vertices).
pub fn strict_line(n: usize) -> Graph {
    Graph::from_edges(n + 1, (0..n).map(|i| (i, i + 1))).expect("line edges are in range")
}

pub fn typeslist_line(n: usize, t: &TypesList) -> Graph {
    closure(&strict_line(n), t)
}

/// Catalogue of rooted unlabeled trees, one per isomorphism class. A tree
/// is stored as the sorted multiset of its root's subtrees; entries are
/// ordered by size, so subtrees always precede their parents.
#[derive(Clone, Debug)]
pub struct TreeCatalogue {
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    leaves: Vec<usize>,
}

impl TreeCatalogue {
    /// All trees with at most `max_nodes` vertices and, if given, at most
    /// `max_leaves` leaves. The leaf bound keeps the catalogue closed
    /// under subtrees.
    pub fn new(max_nodes: usize, max_leaves: Option<usize>) -> Self {
        let mut cat = TreeCatalogue { children: Vec::new(), size: Vec::new(), leaves: Vec::new() };
        let leaf_cap = max_leaves.unwrap_or(usize::MAX);
        if max_nodes == 0 || leaf_cap == 0 {
            return cat;
        }
        cat.push(Vec::new());
        for s in 2..=max_nodes {
            let existing = cat.size.len();
            let mut found = Vec::new();
            let mut stack = Vec::new();
            cat.multisets(0, existing, s - 1, leaf_cap, &mut stack, &mut found);
            for kids in found {
                cat.push(kids);
            }
        }
        cat
    }

    fn push(&mut self, kids: Vec<usize>) {
        let size = 1 + kids.iter().map(|&k| self.size[k]).sum::<usize>();
        let leaves = if kids.is_empty() { 1 } else { kids.iter().map(|&k| self.leaves[k]).sum() };
        self.size.push(size);
        self.leaves.push(leaves);
        self.children.push(kids);
    }

    fn multisets(
        &self,
        from: usize,
        limit: usize,
        budget: usize,
        leaf_budget: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if budget == 0 {
            out.push(stack.clone());
            return;
        }
        for id in from..limit {
            if self.size[id] > budget {
                // sizes are non-decreasing along the catalogue
                break;
            }
            if self.leaves[id] > leaf_budget {
                continue;
            }
            stack.push(id);
            self.multisets(id, limit, budget - self.size[id], leaf_budget - self.leaves[id], stack, out);
            stack.pop();
        }
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn size(&self, id: usize) -> usize {
        self.size[id]
    }

    /// Parent array in depth-first preorder.
    pub fn parents(&self, id: usize) -> Vec<Option<usize>> {
        let mut out = vec![None];
        self.emit(id, 0, &mut out);
        out
    }

    fn emit(&self, id: usize, me: usize, out: &mut Vec<Option<usize>>) {
        for &k in &self.children[id] {
            let child = out.len();
            out.push(Some(me));
            self.emit(k, child, out);
        }
    }

    pub fn graph(&self, id: usize) -> Graph {
        strict_tree(&self.parents(id)).expect("catalogue trees are well formed")
    }
}

/// Parent arrays of all rooted trees up to `max_nodes` vertices (and up to
/// `max_leaves` leaves), by increasing size.
pub fn enum_trees(max_nodes: usize, max_leaves: Option<usize>) -> Vec<Vec<Option<usize>>> {
    let cat = TreeCatalogue::new(max_nodes, max_leaves);
    (0..cat.len()).map(|i| cat.parents(i)).collect()
}

/// `closure(T, t)` for every rooted tree `T` with at most `max_nodes` vertices.
pub fn enum_typeslist_trees(max_nodes: usize, t: &TypesList) -> impl Iterator<Item = Graph> + '_ {
    let cat = TreeCatalogue::new(max_nodes, None);
    (0..cat.len()).map(move |i| closure(&cat.graph(i), t))
}
