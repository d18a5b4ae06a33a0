//! One pass over all bounded types-list trees (or lines) for a clause.

use super::Witness;
use crate::frames::{closure, strict_tree, typeslist_line, Graph, HomSearch, TreeCatalogue, TypesList};
use crate::logic::{Conclusion, HornClause};

/// Everything the classifier needs to know about the violating maps of a
/// clause over the bounded types-list trees.
#[derive(Debug, Default)]
pub(crate) struct TreeScan {
    /// Some homomorphism of the prerequisite graph.
    pub first_hom: Option<Witness>,
    /// Some map under which the clause fails.
    pub violator: Option<Witness>,
    /// A violator whose conclusion endpoints are distinct and unjoined by a
    /// directed path in either direction.
    pub np1: Option<Witness>,
    pub all_equal: bool,
    /// Every violator has `alpha(x) = alpha(y)` or a path `alpha(x) -> alpha(y)`.
    pub all_path: bool,
    /// Every violator has the reverse edge `(alpha(y), alpha(x))`.
    pub all_reverse: bool,
    /// Smallest level gap `k >= 2` of a violator, with that violator.
    pub min_gap: Option<(usize, Witness)>,
}

/// Directed reachability (paths with at least one edge).
fn reach_matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| g.reachable_from(u)).collect()
}

fn depths(parents: &[Option<usize>]) -> Vec<usize> {
    let mut d = vec![0; parents.len()];
    for i in 1..parents.len() {
        d[i] = d[parents[i].expect("non-root has a parent")] + 1;
    }
    d
}

/// Scan every tree of the catalogue. With `stop_at_np1`, returns as soon as
/// an NP-condition 1 witness appears.
pub(crate) fn scan_trees(c: &HornClause, t: &TypesList, cat: &TreeCatalogue, stop_at_np1: bool) -> TreeScan {
    let mut out = TreeScan { all_equal: true, all_path: true, all_reverse: true, ..TreeScan::default() };
    let np1_possible = match c.conclusion() {
        Conclusion::Edge(x, y) => x != y && c.in_preq(x) && c.in_preq(y),
        Conclusion::False => false,
    };
    for id in 0..cat.len() {
        let parents = cat.parents(id);
        let tree = strict_tree(&parents).expect("catalogue trees are well formed");
        let g = closure(&tree, t);
        let depth = depths(&parents);
        let mut reach: Option<Vec<Vec<bool>>> = None;
        let search = HomSearch::new(c.var_count(), c.preq(), &g);
        if out.first_hom.is_none() {
            out.first_hom = search.first().map(|a| Witness::new(&g, c, &a));
            if out.first_hom.is_none() {
                continue;
            }
        }
        let (x, y) = match c.conclusion() {
            Conclusion::False => {
                if let Some(a) = search.first() {
                    out.violator = Some(Witness::new(&g, c, &a));
                    return out;
                }
                continue;
            }
            Conclusion::Edge(x, y) => (x, y),
        };
        let mut stop = false;
        search.forbid_edge(x, y).for_each(|a| {
            let (ax, ay) = (a[x], a[y]);
            if out.violator.is_none() {
                out.violator = Some(Witness::new(&g, c, a));
            }
            let r = reach.get_or_insert_with(|| reach_matrix(&g));
            let forward = ax == ay || r[ax][ay];
            if np1_possible && out.np1.is_none() && ax != ay && !r[ax][ay] && !r[ay][ax] {
                out.np1 = Some(Witness::new(&g, c, a));
                if stop_at_np1 {
                    stop = true;
                    return false;
                }
            }
            out.all_equal &= ax == ay;
            out.all_path &= forward;
            out.all_reverse &= g.has_edge(ay, ax);
            if depth[ay] >= depth[ax] + 2 {
                let k = depth[ay] - depth[ax];
                if out.min_gap.as_ref().is_none_or(|(best, _)| k < *best) {
                    out.min_gap = Some((k, Witness::new(&g, c, a)));
                }
            }
            true
        });
        if stop {
            return out;
        }
    }
    out
}

/// NP-condition 3: a map into a types-list line sending the conclusion at
/// least two steps backwards.
pub(crate) fn line_backward_jump(c: &HornClause, t: &TypesList, max_len: usize) -> Option<Witness> {
    let Conclusion::Edge(x, y) = c.conclusion() else { return None };
    if !(c.in_preq(x) && c.in_preq(y)) {
        return None;
    }
    for n in 1..=max_len {
        let line = typeslist_line(n, t);
        let mut found = None;
        HomSearch::new(c.var_count(), c.preq(), &line).for_each(|a| {
            if a[y] + 2 <= a[x] {
                found = Some(Witness::new(&line, c, a));
                return false;
            }
            true
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// NP-condition 4: one line map with the conclusion one step backwards and
/// one with it at least two steps forwards.
pub(crate) fn line_back_and_forward(c: &HornClause, t: &TypesList, max_len: usize) -> Option<(Witness, Witness)> {
    let Conclusion::Edge(x, y) = c.conclusion() else { return None };
    if !(c.in_preq(x) && c.in_preq(y)) {
        return None;
    }
    let mut back = None;
    let mut forward = None;
    for n in 1..=max_len {
        let line = typeslist_line(n, t);
        HomSearch::new(c.var_count(), c.preq(), &line).for_each(|a| {
            if back.is_none() && a[y] + 1 == a[x] {
                back = Some(Witness::new(&line, c, a));
            }
            if forward.is_none() && a[y] >= a[x] + 2 {
                forward = Some(Witness::new(&line, c, a));
            }
            back.is_none() || forward.is_none()
        });
        if back.is_some() && forward.is_some() {
            break;
        }
    }
    back.zip(forward)
}
