//! Seeded instances for the benchmarks.

use hornmodal::{Graph, ModalFormula};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, edges.into_iter().filter(|_| rng.gen_bool(density))).expect("edges in range")
}

/// `<>(p1 & <>(p2 & ... <>pk))`, of modal depth `k`.
pub fn chain(k: usize) -> ModalFormula {
    let mut f = ModalFormula::var(format!("p{k}"));
    for i in (1..k).rev() {
        f = ModalFormula::diamond(ModalFormula::and(ModalFormula::var(format!("p{i}")), f));
    }
    ModalFormula::diamond(f)
}
