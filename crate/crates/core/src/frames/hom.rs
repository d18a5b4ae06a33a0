use super::Graph;
use crate::logic::{Conclusion, HornClause, HornFormula};

/// Backtracking homomorphism search from a small pattern graph into a
/// target graph. Variables are picked most-constrained first.
///
/// A pattern vertex that occurs in no edge ranges over every target vertex.
#[derive(Clone, Debug)]
pub struct HomSearch<'a> {
    nv: usize,
    edges: &'a [(usize, usize)],
    target: &'a Graph,
    fixed: Vec<Option<usize>>,
    forbid: Option<(usize, usize)>,
}

const FREE: usize = usize::MAX;

struct Ctx<'a> {
    target: &'a Graph,
    words: usize,
    /// Column bits: `pred[v]` has bit `u` iff `(u, v)` is an edge.
    pred: Vec<u64>,
    loops: Vec<u64>,
    has_out: Vec<u64>,
    has_in: Vec<u64>,
    full: Vec<u64>,
}

impl<'a> Ctx<'a> {
    fn new(target: &'a Graph) -> Self {
        let n = target.n();
        let words = target.words();
        let mut pred = vec![0u64; n * words];
        let mut loops = vec![0u64; words];
        let mut has_out = vec![0u64; words];
        let mut has_in = vec![0u64; words];
        for (u, v) in target.edges() {
            pred[v * words + u / 64] |= 1 << (u % 64);
            has_out[u / 64] |= 1 << (u % 64);
            has_in[v / 64] |= 1 << (v % 64);
            if u == v {
                loops[u / 64] |= 1 << (u % 64);
            }
        }
        let mut full = vec![0u64; words];
        for u in 0..n {
            full[u / 64] |= 1 << (u % 64);
        }
        Ctx { target, words, pred, loops, has_out, has_in, full }
    }

    fn pred_row(&self, v: usize) -> &[u64] {
        &self.pred[v * self.words..(v + 1) * self.words]
    }
}

fn and_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a &= b;
    }
}

impl<'a> HomSearch<'a> {
    pub fn new(nv: usize, edges: &'a [(usize, usize)], target: &'a Graph) -> Self {
        HomSearch { nv, edges, target, fixed: vec![None; nv], forbid: None }
    }

    /// Only consider maps sending `var` to `vertex`.
    pub fn fix(mut self, var: usize, vertex: usize) -> Self {
        self.fixed[var] = Some(vertex);
        self
    }

    /// Only consider maps under which `(x, y)` is NOT sent to an edge.
    pub fn forbid_edge(mut self, x: usize, y: usize) -> Self {
        self.forbid = Some((x, y));
        self
    }

    /// Calls `f` on every homomorphism until it returns `false`. Returns
    /// `false` iff the enumeration was stopped early.
    pub fn for_each(&self, mut f: impl FnMut(&[usize]) -> bool) -> bool {
        if self.target.n() == 0 {
            return self.nv != 0 || f(&[]);
        }
        let ctx = Ctx::new(self.target);
        let mut assign = vec![FREE; self.nv];
        for (v, fx) in self.fixed.iter().enumerate() {
            if let Some(t) = *fx {
                if t >= self.target.n() {
                    return true;
                }
                assign[v] = t;
            }
        }
        if !self.consistent_fixed(&assign) {
            return true;
        }
        let remaining = assign.iter().filter(|&&a| a == FREE).count();
        self.rec(&ctx, &mut assign, remaining, &mut f)
    }

    pub fn first(&self) -> Option<Vec<usize>> {
        let mut out = None;
        self.for_each(|a| {
            out = Some(a.to_vec());
            false
        });
        out
    }

    pub fn exists(&self) -> bool {
        !self.for_each(|_| false)
    }

    pub fn count(&self) -> usize {
        let mut k = 0;
        self.for_each(|_| {
            k += 1;
            true
        });
        k
    }

    fn consistent_fixed(&self, assign: &[usize]) -> bool {
        let g = self.target;
        let edges_ok =
            self.edges.iter().all(|&(a, b)| assign[a] == FREE || assign[b] == FREE || g.has_edge(assign[a], assign[b]));
        edges_ok && self.forbid_ok(assign)
    }

    fn forbid_ok(&self, assign: &[usize]) -> bool {
        match self.forbid {
            Some((x, y)) if assign[x] != FREE && assign[y] != FREE => !self.target.has_edge(assign[x], assign[y]),
            _ => true,
        }
    }

    fn candidates(&self, ctx: &Ctx, assign: &[usize], v: usize, buf: &mut Vec<u64>) {
        buf.clear();
        buf.extend_from_slice(&ctx.full);
        for &(a, b) in self.edges {
            if a == v && b == v {
                and_into(buf, &ctx.loops);
            } else if a == v {
                if assign[b] != FREE {
                    and_into(buf, ctx.pred_row(assign[b]));
                } else {
                    and_into(buf, &ctx.has_out);
                }
            } else if b == v {
                if assign[a] != FREE {
                    and_into(buf, ctx.target.row(assign[a]));
                } else {
                    and_into(buf, &ctx.has_in);
                }
            }
        }
        if let Some((x, y)) = self.forbid {
            if x == v && y == v {
                for (a, l) in buf.iter_mut().zip(&ctx.loops) {
                    *a &= !l;
                }
            } else if x == v && assign[y] != FREE {
                for (a, p) in buf.iter_mut().zip(ctx.pred_row(assign[y])) {
                    *a &= !p;
                }
            } else if y == v && assign[x] != FREE {
                for (a, s) in buf.iter_mut().zip(ctx.target.row(assign[x])) {
                    *a &= !s;
                }
            }
        }
    }

    fn rec(&self, ctx: &Ctx, assign: &mut Vec<usize>, remaining: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if remaining == 0 {
            return f(assign);
        }
        let mut best: Option<(usize, Vec<u64>, u32)> = None;
        let mut buf = Vec::with_capacity(ctx.words);
        for v in 0..self.nv {
            if assign[v] != FREE {
                continue;
            }
            self.candidates(ctx, assign, v, &mut buf);
            let count: u32 = buf.iter().map(|w| w.count_ones()).sum();
            if count == 0 {
                return true;
            }
            if best.as_ref().is_none_or(|b| count < b.2) {
                best = Some((v, buf.clone(), count));
            }
        }
        let (v, cands, _) = best.expect("an unassigned variable exists");
        for (wi, &word) in cands.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let t = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                assign[v] = t;
                if !self.rec(ctx, assign, remaining - 1, f) {
                    assign[v] = FREE;
                    return false;
                }
            }
        }
        assign[v] = FREE;
        true
    }
}

/// Enumerate homomorphisms of `(nv, edges)` into `target`.
pub fn for_each_hom(nv: usize, edges: &[(usize, usize)], target: &Graph, f: impl FnMut(&[usize]) -> bool) -> bool {
    HomSearch::new(nv, edges, target).for_each(f)
}

/// First assignment of the clause variables under which `c` fails in `g`.
pub fn find_violation(g: &Graph, c: &HornClause) -> Option<Vec<usize>> {
    let search = HomSearch::new(c.var_count(), c.preq(), g);
    match c.conclusion() {
        Conclusion::Edge(x, y) => search.forbid_edge(x, y).first(),
        Conclusion::False => search.first(),
    }
}

/// Whether `g` satisfies the universal closure of `c`.
pub fn clause_holds(g: &Graph, c: &HornClause) -> bool {
    find_violation(g, c).is_none()
}

pub fn horn_holds(g: &Graph, psi: &HornFormula) -> bool {
    psi.iter().all(|c| clause_holds(g, c))
}

/// Least supergraph of `g` satisfying every edge-headed clause of `psi`.
/// Fails with the index of a `FALSE` clause that becomes applicable.
pub fn horn_closure(g: &Graph, psi: &HornFormula) -> Result<Graph, usize> {
    let mut h = g.clone();
    loop {
        let mut added = Vec::new();
        for (i, c) in psi.iter().enumerate() {
            let search = HomSearch::new(c.var_count(), c.preq(), &h);
            match c.conclusion() {
                Conclusion::False => {
                    if search.exists() {
                        return Err(i);
                    }
                }
                Conclusion::Edge(x, y) => {
                    search.forbid_edge(x, y).for_each(|a| {
                        added.push((a[x], a[y]));
                        true
                    });
                }
            }
        }
        if added.is_empty() {
            return Ok(h);
        }
        for (u, v) in added {
            h.add_edge(u, v);
        }
    }
}

/// Direct first-order evaluation over all `n^|vars|` assignments.
pub fn fo_eval(g: &Graph, c: &HornClause) -> bool {
    let n = g.n();
    let k = c.var_count();
    if n == 0 {
        return true;
    }
    let mut a = vec![0usize; k];
    loop {
        let body = c.preq().iter().all(|&(x, y)| g.has_edge(a[x], a[y]));
        let head = match c.conclusion() {
            Conclusion::Edge(x, y) => g.has_edge(a[x], a[y]),
            Conclusion::False => false,
        };
        if body && !head {
            return false;
        }
        let mut i = 0;
        loop {
            if i == k {
                return true;
            }
            a[i] += 1;
            if a[i] < n {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}
