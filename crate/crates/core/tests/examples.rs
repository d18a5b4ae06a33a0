//! Worked examples for each module, checked end to end through the public API.

use hornmodal::classification::{
    case_kind, classify, implied_transitivity, np_case, violated_on_some_tree, Bounds, CaseKind,
};
use hornmodal::frames::{
    clause_holds, closure, enum_typeslist_trees, k_transitive, saturate, shrink, strict_line, strict_tree,
    typeslist_line, unravel, TypesList,
};
use hornmodal::logic::{modal_depth, parse_horn, subformulas, zoo, Conclusion, ParseError};
use hornmodal::reductions::{parse_qbf, qbf_eval, qbf_to_modal};
use hornmodal::solvers::{sat_oracle, sat_tableau, Status};
use hornmodal::{eval_modal, horn_holds, parse_modal, Graph, HornFormula, KripkeModel, ModalFormula};

fn f(s: &str) -> ModalFormula {
    parse_modal(s).unwrap()
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

fn set(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut e = edges.to_vec();
    e.sort();
    e
}

#[test]
fn parsing() {
    assert_eq!(f("<>p"), ModalFormula::diamond(ModalFormula::var("p")));
    assert_eq!(f("[]p"), ModalFormula::not(ModalFormula::diamond(ModalFormula::not(ModalFormula::var("p")))));
    let err = parse_modal("(p").unwrap_err();
    assert!(matches!(err, ParseError::Syntax { .. }));
    assert_eq!(err.offset(), 2);

    let trans = parse_horn("x R y, y R z -> x R z").unwrap().clauses.remove(0);
    assert_eq!(trans.preq_names(), vec![("x", "y"), ("y", "z")]);
    assert_eq!(trans.conclusion_names(), Some(("x", "z")));
    let refl = parse_horn("-> x R x").unwrap().clauses.remove(0);
    assert!(refl.preq().is_empty());
    assert_eq!(refl.conclusion_names(), Some(("x", "x")));
    let bottom = parse_horn("x R y -> false").unwrap().clauses.remove(0);
    assert_eq!(bottom.conclusion(), Conclusion::False);
}

#[test]
fn subformulas_and_depth() {
    assert_eq!(subformulas(&f("<>p")), [f("<>p"), f("p")].into_iter().collect());
    assert_eq!(subformulas(&f("p & ~p")), [f("p & ~p"), f("~p"), f("p")].into_iter().collect());
    assert_eq!(subformulas(&f("p")), [f("p")].into_iter().collect());
    assert_eq!(modal_depth(&f("p")), 0);
    assert_eq!(modal_depth(&f("<><>p")), 2);
    assert_eq!(modal_depth(&f("<>p & <><>q")), 2);
}

#[test]
fn modal_evaluation() {
    let mut m = KripkeModel::new(g(1, &[(0, 0)]));
    m.set("p", 0, true);
    assert!(eval_modal(&m, 0, &f("<>p")));
    assert!(!eval_modal(&KripkeModel::new(Graph::new(1)), 0, &f("<>(p | ~p)")));
    let mut chain = KripkeModel::new(g(2, &[(0, 1)]));
    chain.set("p", 1, true);
    assert!(eval_modal(&chain, 0, &f("<>p")));
    assert!(!eval_modal(&chain, 1, &f("<>p")));
}

#[test]
fn clause_semantics() {
    assert!(!clause_holds(&g(3, &[(0, 1), (1, 2)]), &zoo::transitivity()));
    assert!(clause_holds(&g(3, &[(0, 1), (1, 2), (0, 2)]), &zoo::transitivity()));
    assert!(!clause_holds(&g(2, &[(0, 0)]), &zoo::reflexivity()));
    assert!(clause_holds(&g(2, &[(0, 0), (1, 1)]), &zoo::reflexivity()));
    assert!(clause_holds(&Graph::new(3), &parse_horn("x R y -> false").unwrap().clauses[0]));

    let s5 = zoo::logic("S5").unwrap();
    let two_clusters =
        g(5, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)]);
    assert!(horn_holds(&two_clusters, &s5));
    assert!(!horn_holds(&g(3, &[(0, 1), (1, 2), (2, 0)]), &zoo::transitivity().into()));
    assert!(horn_holds(&g(3, &[(0, 1)]), &HornFormula::empty()));
}

#[test]
fn closures_and_lines() {
    let symm = TypesList::empty().with_symm();
    assert_eq!(set(&closure(&g(2, &[(0, 1)]), &symm).edges().collect::<Vec<_>>()), vec![(0, 1), (1, 0)]);
    let trans = TypesList::empty().with_trans(2);
    assert!(closure(&strict_line(2), &trans).has_edge(0, 2));
    let eq = TypesList::empty().with_refl().with_symm().with_trans(2);
    assert_eq!(closure(&g(3, &[(0, 1), (2, 1)]), &eq), Graph::complete(3));

    let transitive = g(3, &[(0, 1), (1, 2), (0, 2)]);
    for k in 2..6 {
        assert!(k_transitive(&transitive, k));
    }
    assert!(!k_transitive(&strict_line(3), 3));
    assert!(k_transitive(&g(3, &[(0, 1), (1, 2)]), 1));

    assert_eq!(set(&strict_line(2).edges().collect::<Vec<_>>()), vec![(0, 1), (1, 2)]);
    assert_eq!(
        set(&typeslist_line(3, &trans).edges().collect::<Vec<_>>()),
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    );
    assert_eq!(typeslist_line(1, &TypesList::empty().with_refl().with_symm()), Graph::complete(2));
}

#[test]
fn tree_enumeration() {
    let two: Vec<Graph> = enum_typeslist_trees(2, &TypesList::empty()).collect();
    assert_eq!(two.len(), 2);
    assert_eq!(enum_typeslist_trees(3, &TypesList::empty()).count(), 4);
    let one: Vec<Graph> = enum_typeslist_trees(1, &TypesList::empty().with_refl()).collect();
    assert_eq!(one, vec![g(1, &[(0, 0)])]);
}

#[test]
fn unravelling() {
    let (t, f) = unravel(&KripkeModel::new(g(1, &[(0, 0)])), 0, 2);
    assert_eq!(t.graph, strict_line(2));
    assert_eq!(f.map, vec![0, 0, 0]);
    let (t, f) = unravel(&KripkeModel::new(g(2, &[(0, 1), (1, 0)])), 0, 3);
    assert_eq!(t.graph, strict_line(3));
    assert_eq!(f.map, vec![0, 1, 0, 1]);
}

#[test]
fn saturation() {
    let refl = zoo::logic("T").unwrap();
    let (line, f) = unravel(&KripkeModel::new(g(1, &[(0, 0)])), 0, 2);
    let (s, f2) = saturate(&line, &f, &refl).unwrap();
    assert!((0..3).all(|u| s.graph.has_edge(u, u)));
    assert_eq!(f2.map, f.map);

    let mut target = KripkeModel::new(g(3, &[(0, 1), (1, 0), (0, 2), (2, 0)]));
    target.set("p", 1, true);
    let (tree, f) = unravel(&target, 0, 1);
    let (s, f2) = saturate(&tree, &f, &zoo::logic("B").unwrap()).unwrap();
    assert_eq!(s.graph.edge_count(), 4);
    assert!(f2.is_homomorphism());
    assert_eq!(strict_tree(&[None, Some(0), Some(0)]).unwrap(), tree.graph);
}

#[test]
fn shrinking() {
    // root 0 with ten branches; only branch 1 carries p
    let mut edges = Vec::new();
    for b in 1..=10 {
        edges.push((0, b));
        edges.push((b, b + 10));
    }
    let mut m = KripkeModel::new(g(21, &edges));
    m.set("p", 1, true);
    let s = shrink(&m, 0, &f("<>p")).unwrap();
    assert!(s.n() <= 3);
    assert!(eval_modal(&s, s.root.unwrap(), &f("<>p")));

    let mut minimal = KripkeModel::new(g(2, &[(0, 1)]));
    minimal.set("p", 1, true);
    let s = shrink(&minimal, 0, &f("<>p")).unwrap();
    assert_eq!(s.graph, minimal.graph);
    assert_eq!(s.valuation, minimal.valuation);
}

#[test]
fn classification() {
    let b = Bounds::default();
    let k4 = classify(&zoo::transitivity().into(), &b).unwrap();
    assert!(!k4.is_np());
    assert_eq!(k4.types_list, TypesList::empty().with_trans(2));
    assert!(classify(&zoo::logic("S5").unwrap(), &b).unwrap().is_np());
    assert!(classify(&zoo::logic("K4B").unwrap(), &b).unwrap().is_np());
    assert!(classify(&zoo::euclidean().into(), &b).unwrap().is_np());
    assert!(!classify(&HornFormula::empty(), &b).unwrap().is_np());
    assert!(classify(&parse_horn("x R y -> false").unwrap(), &b).unwrap().is_np());

    let t0 = TypesList::empty();
    let w = violated_on_some_tree(&zoo::transitivity(), &t0, &b).unwrap();
    assert_eq!(w.graph, strict_line(2));
    assert_eq!((w.map["x"], w.map["y"], w.map["z"]), (0, 1, 2));
    assert!(violated_on_some_tree(&zoo::transitivity(), &TypesList::empty().with_trans(2), &b).is_none());
    assert_eq!(violated_on_some_tree(&zoo::symmetry(), &t0, &b).unwrap().graph, strict_line(1));

    assert_eq!(np_case(&zoo::euclidean(), &t0, &b).unwrap().number(), 1);
    let disjoint = parse_horn("u R v -> x R y").unwrap().clauses.remove(0);
    assert_eq!(np_case(&disjoint, &t0, &b).unwrap().number(), 2);
    assert_eq!(np_case(&zoo::phi_k_l(2, 0), &t0, &b).unwrap().number(), 3);

    assert_eq!(case_kind(&zoo::reflexivity(), &t0, &b).unwrap(), CaseKind::Reflexive);
    assert!(matches!(case_kind(&zoo::transitivity(), &t0, &b).unwrap(), CaseKind::Transitive(2, _)));
    assert_eq!(case_kind(&zoo::symmetry(), &t0, &b).unwrap(), CaseKind::Symmetric);

    let s = |v: &[usize]| v.iter().copied().collect();
    assert!(implied_transitivity(&s(&[2]), 7, 100));
    assert!(implied_transitivity(&s(&[5]), 9, 100));
    assert!(!implied_transitivity(&s(&[5, 7]), 4, 100));
    assert!(implied_transitivity(&s(&[5, 7]), 11, 100));
    let t5 = TypesList::empty().with_trans(5);
    assert!((1..=12).all(|n| k_transitive(&closure(&strict_line(n), &t5), 9)));
}

#[test]
fn solver_examples() {
    let k = HornFormula::empty();
    let t = zoo::logic("T").unwrap();
    let b = zoo::logic("B").unwrap();
    for n in 1..=4 {
        assert_eq!(sat_oracle(&k, &f("p & ~p"), n).unwrap().status, Status::UnsatWithinBound { bound: n });
    }
    assert_eq!(sat_oracle(&t, &f("p & []~p"), 3).unwrap().status, Status::UnsatWithinBound { bound: 3 });
    let single = sat_oracle(&k, &f("p & []~p"), 3).unwrap();
    assert_eq!(single.model().unwrap().0.n(), 1);
    assert!(!sat_oracle(&zoo::transitivity().into(), &f("<><>p & ~<>p"), 3).unwrap().is_sat());
    assert!(sat_oracle(&k, &f("<><>p & ~<>p"), 3).unwrap().is_sat());

    let r = sat_tableau(&k, &f("<>p & <>~p")).unwrap();
    assert_eq!(r.model().unwrap().0.n(), 3);
    assert_eq!(sat_tableau(&b, &f("p & <>[]~p")).unwrap().status, Status::Unsat);
    assert!(!sat_oracle(&b, &f("p & <>[]~p"), 3).unwrap().is_sat());
    assert!(sat_tableau(&k, &f("p & <>[]~p")).unwrap().is_sat());
}

#[test]
fn qbf_examples() {
    assert!(qbf_eval(&parse_qbf("Ep : p").unwrap()).unwrap());
    assert!(!qbf_eval(&parse_qbf("Ap : p").unwrap()).unwrap());
    assert!(qbf_eval(&parse_qbf("Ap Eq : (p & q) | (~p & ~q)").unwrap()).unwrap());

    let k = HornFormula::empty();
    let yes = qbf_to_modal(&parse_qbf("Ep : p").unwrap());
    assert!(sat_tableau(&k, &yes).unwrap().is_sat());
    assert!(sat_oracle(&k, &yes, 3).unwrap().is_sat());
    let no = qbf_to_modal(&parse_qbf("Ap : p").unwrap());
    assert_eq!(sat_tableau(&k, &no).unwrap().status, Status::Unsat);
}
