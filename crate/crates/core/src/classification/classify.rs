use std::collections::HashMap;

use super::scan::{line_back_and_forward, line_backward_jump, scan_trees, TreeScan};
use super::{implied_transitivity, Bounds, Case, ClassificationOutcome, ClassifyError, Step, Verdict, Witness};
use crate::frames::{TreeCatalogue, TypesList};
use crate::logic::{Conclusion, HornClause, HornFormula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NpCondition {
    One(Witness),
    Two(Witness),
    Three(Witness),
    Four(Witness, Witness),
}

impl NpCondition {
    pub fn number(&self) -> u8 {
        match self {
            NpCondition::One(_) => 1,
            NpCondition::Two(_) => 2,
            NpCondition::Three(_) => 3,
            NpCondition::Four(..) => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseKind {
    Reflexive,
    Transitive(usize, Witness),
    Symmetric,
}

#[derive(Default)]
struct Catalogues(HashMap<(usize, usize), TreeCatalogue>);

impl Catalogues {
    fn get(&mut self, c: &HornClause, t: &TypesList, b: &Bounds) -> &TreeCatalogue {
        let nodes = b.tree_nodes_for(c, t);
        let leaves = c.var_count().max(1);
        self.0.entry((nodes, leaves)).or_insert_with(|| TreeCatalogue::new(nodes, Some(leaves)))
    }
}

/// Witness that `c` fails on some bounded types-list tree.
pub fn violated_on_some_tree(c: &HornClause, t: &TypesList, b: &Bounds) -> Option<Witness> {
    let mut cats = Catalogues::default();
    scan_trees(c, t, cats.get(c, t, b), true).violator
}

fn np_from_scan(c: &HornClause, t: &TypesList, b: &Bounds, scan: &TreeScan) -> Option<NpCondition> {
    if let Some(w) = &scan.np1 {
        return Some(NpCondition::One(w.clone()));
    }
    if let Some(w) = &scan.first_hom {
        let np2 = match c.conclusion() {
            Conclusion::False => true,
            Conclusion::Edge(x, y) => x != y && !c.connected_in_preq(x, y),
        };
        if np2 {
            return Some(NpCondition::Two(w.clone()));
        }
    }
    let len = b.line_len_for(c, t);
    if let Some(w) = line_backward_jump(c, t, len) {
        return Some(NpCondition::Three(w));
    }
    line_back_and_forward(c, t, len).map(|(a, b)| NpCondition::Four(a, b))
}

/// The first NP-condition (in order 1 to 4) that `(c, t)` satisfies.
pub fn np_case(c: &HornClause, t: &TypesList, b: &Bounds) -> Option<NpCondition> {
    let mut cats = Catalogues::default();
    let scan = scan_trees(c, t, cats.get(c, t, b), true);
    np_from_scan(c, t, b, &scan)
}

fn kind_from_scan(c: &HornClause, scan: &TreeScan) -> Option<CaseKind> {
    let Conclusion::Edge(x, y) = c.conclusion() else { return None };
    if x == y || scan.all_equal {
        return Some(CaseKind::Reflexive);
    }
    if scan.all_path {
        if let Some((k, w)) = &scan.min_gap {
            return Some(CaseKind::Transitive(*k, w.clone()));
        }
    }
    scan.all_reverse.then_some(CaseKind::Symmetric)
}

/// Which of the reflexive, transitive and symmetric cases `(c, t)` falls in.
pub fn case_kind(c: &HornClause, t: &TypesList, b: &Bounds) -> Result<CaseKind, ClassifyError> {
    let mut cats = Catalogues::default();
    let scan = scan_trees(c, t, cats.get(c, t, b), false);
    kind_from_scan(c, &scan)
        .ok_or_else(|| ClassifyError::WellDefinednessViolation { clause: 0, detail: format!("`{c}` under {t}") })
}

fn step(clause: usize, case: Case) -> Step {
    Step { clause: Some(clause), case, k: None, witness: None, witness2: None }
}

/// Run the classification loop on `psi`.
pub fn classify(psi: &HornFormula, b: &Bounds) -> Result<ClassificationOutcome, ClassifyError> {
    let mut t = TypesList::empty();
    let mut trace = Vec::new();
    let mut cats = Catalogues::default();
    loop {
        let mut chosen = None;
        for (i, c) in psi.iter().enumerate() {
            let scan = scan_trees(c, &t, cats.get(c, &t, b), false);
            if scan.violator.is_some() {
                chosen = Some((i, c, scan));
                break;
            }
        }
        let Some((i, c, scan)) = chosen else {
            trace.push(Step { clause: None, case: Case::AllSatisfied, k: None, witness: None, witness2: None });
            return Ok(ClassificationOutcome { verdict: Verdict::PspaceHard, types_list: t, trace });
        };
        if let Some(np) = np_from_scan(c, &t, b, &scan) {
            let mut s = step(i, Case::Np1);
            match np {
                NpCondition::One(w) => s.witness = Some(w),
                NpCondition::Two(w) => {
                    s.case = Case::Np2;
                    s.witness = Some(w);
                }
                NpCondition::Three(w) => {
                    s.case = Case::Np3;
                    s.witness = Some(w);
                }
                NpCondition::Four(w1, w2) => {
                    s.case = Case::Np4;
                    s.witness = Some(w1);
                    s.witness2 = Some(w2);
                }
            }
            trace.push(s);
            return Ok(ClassificationOutcome { verdict: Verdict::NpComplete, types_list: t, trace });
        }
        let stuck = |detail: String| ClassifyError::WellDefinednessViolation { clause: i, detail };
        match kind_from_scan(c, &scan) {
            Some(CaseKind::Reflexive) => {
                if t.refl {
                    return Err(stuck(format!("`{c}` is still violated after adding refl")));
                }
                t.refl = true;
                let mut s = step(i, Case::Refl);
                s.witness = scan.violator;
                trace.push(s);
            }
            Some(CaseKind::Transitive(k, w)) => {
                if k > b.trans_cap {
                    return Err(ClassifyError::BoundsExhausted(format!(
                        "clause {i} requires trans{k}, above the cap {}",
                        b.trans_cap
                    )));
                }
                if implied_transitivity(&t.trans, k, b.trans_cap) {
                    return Err(stuck(format!("trans{k} is already implied by {t}")));
                }
                t.trans.insert(k);
                let mut s = step(i, Case::Trans);
                s.k = Some(k);
                s.witness = Some(w);
                trace.push(s);
            }
            Some(CaseKind::Symmetric) => {
                if t.symm {
                    return Err(stuck(format!("`{c}` is still violated after adding symm")));
                }
                t.symm = true;
                let mut s = step(i, Case::Symm);
                s.witness = scan.violator;
                trace.push(s);
            }
            None => return Err(stuck(format!("`{c}` under {t}"))),
        }
        if t.symm && !t.trans.is_empty() {
            let mut s = step(i, Case::SymmTransShortcut);
            s.k = t.trans.iter().next().copied();
            trace.push(s);
            return Ok(ClassificationOutcome { verdict: Verdict::NpComplete, types_list: t, trace });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_horn, zoo};

    fn run(text: &str) -> ClassificationOutcome {
        classify(&parse_horn(text).unwrap(), &Bounds::default()).unwrap()
    }

    #[test]
    fn k4_is_pspace_hard() {
        let out = run("x R y, y R z -> x R z");
        assert_eq!(out.verdict, Verdict::PspaceHard);
        assert_eq!(out.types_list, TypesList::empty().with_trans(2));
        assert_eq!(out.trace[0].case, Case::Trans);
        assert_eq!(out.trace[0].k, Some(2));
        assert_eq!(out.last_case(), Some(Case::AllSatisfied));
    }

    #[test]
    fn empty_is_pspace_hard() {
        let out = run("");
        assert_eq!(out.verdict, Verdict::PspaceHard);
        assert_eq!(out.trace.len(), 1);
    }

    #[test]
    fn euclidean_is_np1() {
        let out = run("w R x, w R y -> x R y");
        assert_eq!(out.verdict, Verdict::NpComplete);
        assert_eq!(out.last_case(), Some(Case::Np1));
        let w = out.trace[0].witness.as_ref().unwrap();
        let (x, y) = (w.image("x").unwrap(), w.image("y").unwrap());
        assert!(x != y && !w.graph.has_edge(x, y));
    }

    #[test]
    fn false_head_is_np2() {
        assert_eq!(run("x R y -> false").last_case(), Some(Case::Np2));
        assert_eq!(run("u R v -> x R y").last_case(), Some(Case::Np2));
    }

    #[test]
    fn phi_2_0_is_np3() {
        let c = zoo::phi_k_l(2, 0);
        let out = classify(&HornFormula::new(vec![c]), &Bounds::default()).unwrap();
        assert_eq!(out.last_case(), Some(Case::Np3));
    }

    #[test]
    fn converging_edges_collapse_to_clusters() {
        // x = z forces loops, then the clause turns into symmetry
        let out = run("x R z, y R z -> x R y");
        let cases: Vec<Case> = out.trace.iter().map(|s| s.case).collect();
        assert_eq!(cases, vec![Case::Refl, Case::Symm, Case::Np3]);
    }

    #[test]
    fn case_kinds() {
        let b = Bounds::default();
        let t = TypesList::empty();
        assert_eq!(case_kind(&zoo::reflexivity(), &t, &b).unwrap(), CaseKind::Reflexive);
        assert!(matches!(case_kind(&zoo::transitivity(), &t, &b).unwrap(), CaseKind::Transitive(2, _)));
        assert_eq!(case_kind(&zoo::symmetry(), &t, &b).unwrap(), CaseKind::Symmetric);
    }

    #[test]
    fn violations() {
        let b = Bounds::default();
        let w = violated_on_some_tree(&zoo::transitivity(), &TypesList::empty(), &b).unwrap();
        assert_eq!(w.graph.n(), 3);
        assert!(violated_on_some_tree(&zoo::transitivity(), &TypesList::empty().with_trans(2), &b).is_none());
        assert!(violated_on_some_tree(&zoo::symmetry(), &TypesList::empty(), &b).is_some());
    }

    #[test]
    fn trans_cap_is_reported() {
        let psi = HornFormula::new(vec![zoo::phi_k_l(0, 3)]);
        let b = Bounds { trans_cap: 2, ..Bounds::default() };
        assert!(matches!(classify(&psi, &b), Err(ClassifyError::BoundsExhausted(_))));
        let out = classify(&psi, &Bounds::default()).unwrap();
        assert_eq!(out.types_list, TypesList::empty().with_trans(3));
    }
}
