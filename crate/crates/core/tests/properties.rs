//! Property tests for the frame machinery.

mod common;

use hornmodal::frames::{closure, horn_closure, k_transitive, shrink, unravel, TypesList};
use hornmodal::logic::Conclusion;
use hornmodal::{eval_modal, horn_holds, parse_horn, parse_modal, Graph, HornFormula, KripkeModel};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n * n).prop_map(move |e| Graph::from_edges(n, e).unwrap())
    })
}

fn types_strategy() -> impl Strategy<Value = TypesList> {
    (any::<bool>(), any::<bool>(), prop::collection::btree_set(2usize..5, 0..=2)).prop_map(|(r, s, ts)| {
        let mut t = TypesList::empty();
        if r {
            t = t.with_refl();
        }
        if s {
            t = t.with_symm();
        }
        ts.into_iter().fold(t, |t, k| t.with_trans(k))
    })
}

fn satisfies(g: &Graph, t: &TypesList) -> bool {
    let n = g.n();
    (!t.refl || (0..n).all(|u| g.has_edge(u, u)))
        && (!t.symm || g.edges().all(|(u, v)| g.has_edge(v, u)))
        && t.trans.iter().all(|&k| k_transitive(g, k))
}

fn edge_logic(seed: u64) -> HornFormula {
    let mut rng = common::rng(seed);
    let clauses = (0..1 + seed % 2).map(|_| common::clause(&mut rng, 3, 3, 0.0)).collect();
    HornFormula::new(clauses)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_a_least_fixpoint(g in graph_strategy(5), t in types_strategy()) {
        let c = closure(&g, &t);
        prop_assert!(g.is_subgraph_of(&c));
        prop_assert!(satisfies(&c, &t));
        prop_assert_eq!(closure(&c, &t), c.clone());
        for (u, v) in c.edges().filter(|&(u, v)| !g.has_edge(u, v)) {
            let mut smaller = c.clone();
            smaller.remove_edge(u, v);
            prop_assert!(!satisfies(&smaller, &t), "edge ({}, {}) is not needed", u, v);
        }
    }

    #[test]
    fn closure_is_monotone(g in graph_strategy(5), extra in prop::collection::vec((0usize..5, 0usize..5), 0..6), t in types_strategy()) {
        let mut h = g.clone();
        for (u, v) in extra {
            if u < g.n() && v < g.n() {
                h.add_edge(u, v);
            }
        }
        prop_assert!(closure(&g, &t).is_subgraph_of(&closure(&h, &t)));
    }

    #[test]
    fn horn_closure_is_least(g in graph_strategy(5), seed in any::<u64>()) {
        let psi = edge_logic(seed);
        let h = horn_closure(&g, &psi).unwrap();
        prop_assert!(g.is_subgraph_of(&h));
        prop_assert!(horn_holds(&h, &psi));
        for (u, v) in h.edges().filter(|&(u, v)| !g.has_edge(u, v)) {
            let mut smaller = h.clone();
            smaller.remove_edge(u, v);
            prop_assert!(!horn_holds(&smaller, &psi));
        }
    }

    #[test]
    fn induced_subgraphs_keep_horn_formulas(g in graph_strategy(6), seed in any::<u64>(), mask in any::<u8>()) {
        let mut rng = common::rng(seed);
        let psi = HornFormula::new(vec![common::clause(&mut rng, 3, 3, 0.3)]);
        if let Ok(h) = horn_closure(&g, &psi) {
            let keep: Vec<usize> = (0..h.n()).filter(|i| mask >> i & 1 == 1).collect();
            prop_assert!(horn_holds(&h.induced(&keep), &psi));
        }
    }

    #[test]
    fn unravelling_preserves_bounded_formulas(g in graph_strategy(4), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::model(&mut rng, g, &["p", "q"]);
        let phi = common::formula(&mut rng, &["p", "q"], 12, 3);
        let depth = phi.modal_depth();
        for w in 0..m.n() {
            let (t, f) = unravel(&m, w, depth);
            prop_assert!(f.is_valid());
            prop_assert_eq!(eval_modal(&t, 0, &phi), eval_modal(&m, w, &phi));
        }
    }

    #[test]
    fn shrinking_keeps_the_formula(g in graph_strategy(6), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::model(&mut rng, g, &["p", "q", "r"]);
        let phi = common::formula(&mut rng, &["p", "q", "r"], 12, 3);
        for w in (0..m.n()).filter(|&w| eval_modal(&m, w, &phi)) {
            let s = shrink(&m, w, &phi).unwrap();
            prop_assert!(s.n() <= m.n());
            prop_assert!(eval_modal(&s, s.root.unwrap(), &phi));
        }
    }

    #[test]
    fn formulas_print_and_parse_back(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let phi = common::formula(&mut rng, &["p", "q", "r"], 20, 4);
        prop_assert_eq!(parse_modal(&phi.to_string()).unwrap(), phi);
    }

    #[test]
    fn clauses_print_and_parse_back(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let psi = HornFormula::new((0..3).map(|_| common::clause(&mut rng, 4, 4, 0.2)).collect());
        let back = parse_horn(&psi.to_string()).unwrap();
        prop_assert_eq!(back.len(), psi.len());
        for (a, b) in psi.iter().zip(back.iter()) {
            prop_assert_eq!(a.preq_names(), b.preq_names());
            prop_assert_eq!(a.conclusion_names(), b.conclusion_names());
            prop_assert_eq!(a.conclusion() == Conclusion::False, b.conclusion() == Conclusion::False);
        }
    }

    #[test]
    fn models_survive_json(g in graph_strategy(5), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let mut m = common::model(&mut rng, g, &["p", "q"]);
        m.root = Some(0);
        let text = m.to_json().to_string();
        prop_assert_eq!(KripkeModel::from_json(&text).unwrap(), m.clone());
        let gtext = serde_json::to_string(&m.graph).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&gtext).unwrap(), m.graph);
    }
}
