//! Propositionally consistent truth assignments to subformulas.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::logic::{ModalFormula, Node, SubformulaTable};

/// A set of subformulas closed under boolean children, with its atoms
/// (variables and diamonds) and `(diamond, body)` pairs.
#[derive(Clone, Debug)]
struct Slice {
    members: FixedBitSet,
    nodes: Vec<usize>,
    atoms: Vec<usize>,
    diamonds: Vec<(usize, usize)>,
}

/// Subformula table plus a family of slices. Assignments are always taken
/// relative to one slice; bits outside it are unset.
#[derive(Clone, Debug)]
pub(crate) struct Space {
    pub table: SubformulaTable,
    pub md: usize,
    slices: Vec<Slice>,
}

const F: u8 = 0;
const T: u8 = 1;
const U: u8 = 2;

impl Space {
    /// Slice `b` holds every subformula of modal depth at most `b`.
    pub fn new(phi: &ModalFormula) -> Self {
        let table = SubformulaTable::new(phi);
        let md = table.depth(table.root());
        let sets = (0..=md).map(|b| (0..table.len()).filter(|&i| table.depth(i) <= b).collect()).collect();
        Self::from_sets(table, md, sets)
    }

    /// Slice `i` holds what a tree node at distance `i` from the root has to
    /// decide: the formulas occurring at nesting level `i`, closed under
    /// diamond bodies when the node may see itself (`refl`) and pulled back
    /// one level when the node may see its parent (`back`).
    pub fn levels(phi: &ModalFormula, refl: bool, back: bool) -> Self {
        let table = SubformulaTable::new(phi);
        let md = table.depth(table.root());
        let mut sets = vec![BTreeSet::new(); md + 1];
        let mut work = vec![(0, table.root())];
        while let Some((i, id)) = work.pop() {
            if !sets[i].insert(id) {
                continue;
            }
            match *table.node(id) {
                Node::Var(_) => {}
                Node::Not(a) => work.push((i, a)),
                Node::And(a, b) | Node::Or(a, b) => work.extend([(i, a), (i, b)]),
                Node::Diamond(b) => {
                    work.push((i + 1, b));
                    if refl {
                        work.push((i, b));
                    }
                    if back && i > 0 {
                        work.push((i - 1, b));
                    }
                }
            }
        }
        Self::from_sets(table, md, sets)
    }

    fn from_sets(table: SubformulaTable, md: usize, sets: Vec<BTreeSet<usize>>) -> Self {
        let slices = sets
            .into_iter()
            .map(|set| {
                let mut members = FixedBitSet::with_capacity(table.len());
                set.iter().for_each(|&i| members.insert(i));
                let nodes: Vec<usize> = set.into_iter().collect();
                let atoms = nodes
                    .iter()
                    .copied()
                    .filter(|&i| matches!(table.node(i), Node::Var(_) | Node::Diamond(_)))
                    .collect();
                let diamonds = nodes
                    .iter()
                    .filter_map(|&i| match *table.node(i) {
                        Node::Diamond(b) => Some((i, b)),
                        _ => None,
                    })
                    .collect();
                Slice { members, nodes, atoms, diamonds }
            })
            .collect();
        Space { table, md, slices }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn contains(&self, s: usize, id: usize) -> bool {
        self.slices[s].members.contains(id)
    }

    pub fn diamonds(&self, s: usize) -> &[(usize, usize)] {
        &self.slices[s].diamonds
    }

    fn eval3(&self, s: usize, vals: &mut [u8]) {
        for &i in &self.slices[s].nodes {
            vals[i] = match *self.table.node(i) {
                Node::Var(_) | Node::Diamond(_) => vals[i],
                Node::Not(a) => match vals[a] {
                    T => F,
                    F => T,
                    _ => U,
                },
                Node::And(a, b) => match (vals[a], vals[b]) {
                    (F, _) | (_, F) => F,
                    (T, T) => T,
                    _ => U,
                },
                Node::Or(a, b) => match (vals[a], vals[b]) {
                    (T, _) | (_, T) => T,
                    (F, F) => F,
                    _ => U,
                },
            };
        }
    }

    /// Calls `f` with every consistent assignment to slice `s` that agrees
    /// with `required`, atoms tried in id order with `true` first. Stops
    /// when `f` returns `false`; returns `false` iff stopped. A required
    /// literal outside the slice admits no assignment.
    pub fn enumerate(&self, s: usize, required: &[(usize, bool)], mut f: impl FnMut(&FixedBitSet) -> bool) -> bool {
        if required.iter().any(|&(i, _)| !self.contains(s, i)) {
            return true;
        }
        let mut vals = vec![U; self.len()];
        let mut bits = FixedBitSet::with_capacity(self.len());
        self.rec(s, 0, required, &mut vals, &mut bits, &mut f)
    }

    fn rec(
        &self,
        s: usize,
        k: usize,
        required: &[(usize, bool)],
        vals: &mut Vec<u8>,
        bits: &mut FixedBitSet,
        f: &mut impl FnMut(&FixedBitSet) -> bool,
    ) -> bool {
        self.eval3(s, vals);
        if required.iter().any(|&(i, want)| vals[i] != U && (vals[i] == T) != want) {
            return true;
        }
        let atoms = &self.slices[s].atoms;
        if k == atoms.len() {
            bits.clear();
            for &i in &self.slices[s].nodes {
                bits.set(i, vals[i] == T);
            }
            return f(bits);
        }
        let a = atoms[k];
        let saved = vals.clone();
        for v in [T, F] {
            vals[a] = v;
            if !self.rec(s, k + 1, required, vals, bits, f) {
                return false;
            }
            vals.copy_from_slice(&saved);
        }
        true
    }

    /// Propositional consistency of `truth` on slice `s`.
    #[cfg(test)]
    pub fn consistent(&self, s: usize, truth: &FixedBitSet) -> bool {
        self.slices[s].nodes.iter().all(|&i| match *self.table.node(i) {
            Node::Var(_) | Node::Diamond(_) => true,
            Node::Not(a) => truth[i] != truth[a],
            Node::And(a, b) => truth[i] == (truth[a] && truth[b]),
            Node::Or(a, b) => truth[i] == (truth[a] || truth[b]),
        })
    }

    /// Variables true in `truth`.
    pub fn true_vars<'a>(&'a self, truth: &'a FixedBitSet) -> impl Iterator<Item = &'a str> + 'a {
        truth.ones().filter_map(move |i| match self.table.node(i) {
            Node::Var(v) => Some(v.as_str()),
            _ => None,
        })
    }

    /// `v` may be a successor of `u` (an assignment to slice `s`): every
    /// diamond false at `u` has its body false at `v`.
    pub fn allowed(&self, s: usize, u: &FixedBitSet, v: &FixedBitSet) -> bool {
        self.diamonds(s).iter().all(|&(d, body)| u[d] || !v[body])
    }

    /// Literals a successor of `u` must contain.
    pub fn successor_requirements(&self, s: usize, u: &FixedBitSet) -> Vec<(usize, bool)> {
        self.diamonds(s).iter().filter(|&&(d, _)| !u[d]).map(|&(_, body)| (body, false)).collect()
    }
}
