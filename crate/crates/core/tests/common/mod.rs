//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use hornmodal::{Graph, HornClause, KripkeModel, ModalFormula};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random formula with at most `max_size` nodes (box counting as three)
/// and modal depth at most `max_depth`.
pub fn formula(rng: &mut impl Rng, vars: &[&str], max_size: usize, max_depth: usize) -> ModalFormula {
    loop {
        let target = rng.gen_range(1..=max_size);
        let f = grow(rng, vars, target, max_depth);
        if f.size() <= max_size && f.modal_depth() <= max_depth {
            return f;
        }
    }
}

fn grow(rng: &mut impl Rng, vars: &[&str], budget: usize, depth: usize) -> ModalFormula {
    let var = |rng: &mut dyn rand::RngCore| ModalFormula::var(*vars.choose(rng).expect("vars"));
    if budget <= 1 {
        return var(rng);
    }
    match rng.gen_range(0..6) {
        0 => ModalFormula::not(grow(rng, vars, budget - 1, depth)),
        1 | 2 if budget >= 3 => {
            let left = rng.gen_range(1..budget - 1);
            let a = grow(rng, vars, left, depth);
            let b = grow(rng, vars, budget - 1 - left, depth);
            if rng.gen() {
                ModalFormula::and(a, b)
            } else {
                ModalFormula::or(a, b)
            }
        }
        3 | 4 if depth > 0 => ModalFormula::diamond(grow(rng, vars, budget - 1, depth - 1)),
        5 if depth > 0 && budget >= 4 => ModalFormula::boxed(grow(rng, vars, budget - 3, depth - 1)),
        _ => grow(rng, vars, budget, depth),
    }
}

pub fn graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn model(rng: &mut impl Rng, g: Graph, vars: &[&str]) -> KripkeModel {
    let n = g.n();
    let mut m = KripkeModel::new(g);
    for v in vars {
        for w in 0..n {
            m.set(v, w, rng.gen());
        }
    }
    m
}

/// Random clause over at most `max_vars` variables; `false_head` is the
/// probability of a `FALSE` conclusion.
pub fn clause(rng: &mut impl Rng, max_vars: usize, max_atoms: usize, false_head: f64) -> HornClause {
    let names = ["x", "y", "z", "w", "u", "v"];
    let k = rng.gen_range(1..=max_vars.min(names.len()));
    let atoms = rng.gen_range(0..=max_atoms);
    let preq: Vec<(&str, &str)> =
        (0..atoms).map(|_| (names[rng.gen_range(0..k)], names[rng.gen_range(0..k)])).collect();
    let head = (!rng.gen_bool(false_head)).then(|| (names[rng.gen_range(0..k)], names[rng.gen_range(0..k)]));
    HornClause::new(&preq, head)
}
