//! Bounded model search.
//!
//! Worlds carry full truth assignments to the subformulas of the input.
//! Starting from a root world where the formula holds, the first unmet
//! diamond is witnessed either by an edge to an existing world or by a
//! fresh world. After every step the frame is closed under the Horn clauses
//! and rejected if a closure edge clashes with a box or a `FALSE` clause
//! applies. Every model with at most `max_worlds` worlds is reachable this
//! way, so the search is complete up to the bound.

use fixedbitset::FixedBitSet;

use super::hintikka::Space;
use super::{verified, Engine, SatResult, SolverError, Stats, Status};
use crate::classification::{classify, Bounds};
use crate::frames::{horn_closure, Graph, KripkeModel};
use crate::logic::{HornFormula, ModalFormula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_worlds: usize,
    pub max_steps: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_worlds: 5, max_steps: 20_000_000 }
    }
}

struct Search<'a> {
    space: Space,
    psi: &'a HornFormula,
    cfg: OracleConfig,
    stats: Stats,
}

type Found = Option<(Vec<FixedBitSet>, Graph)>;

impl Search<'_> {
    fn admissible(&self, types: &[FixedBitSet], g: &Graph) -> Option<Graph> {
        let h = horn_closure(g, self.psi).ok()?;
        let md = self.space.md;
        let ok = h.edges().all(|(u, v)| self.space.allowed(md, &types[u], &types[v]));
        ok.then_some(h)
    }

    fn tick(&mut self, depth: usize) -> Result<(), SolverError> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if self.stats.nodes > self.cfg.max_steps {
            return Err(SolverError::ResourceExhausted { limit: self.cfg.max_steps });
        }
        Ok(())
    }

    fn unmet(&self, types: &[FixedBitSet], g: &Graph) -> Option<(usize, usize)> {
        let md = self.space.md;
        (0..g.n()).find_map(|u| {
            self.space
                .diamonds(md)
                .iter()
                .find(|&&(d, body)| types[u][d] && !g.successors(u).any(|v| types[v][body]))
                .map(|&(_, body)| (u, body))
        })
    }

    fn run(&mut self, types: &mut Vec<FixedBitSet>, g: &Graph, depth: usize) -> Result<Found, SolverError> {
        self.tick(depth)?;
        let Some((u, body)) = self.unmet(types, g) else {
            return Ok(Some((types.clone(), g.clone())));
        };
        let md = self.space.md;
        let n = g.n();
        for v in 0..n {
            if types[v][body] && self.space.allowed(md, &types[u], &types[v]) {
                let mut g2 = g.clone();
                g2.add_edge(u, v);
                if let Some(h) = self.admissible(types, &g2) {
                    if let Some(found) = self.run(types, &h, depth + 1)? {
                        return Ok(Some(found));
                    }
                }
            }
        }
        if n >= self.cfg.max_worlds {
            return Ok(None);
        }
        let mut required = self.space.successor_requirements(md, &types[u]);
        required.push((body, true));
        let mut candidates = Vec::new();
        self.space.enumerate(md, &required, |t| {
            candidates.push(t.clone());
            true
        });
        let grown = Graph::from_edges(n + 1, g.edges().chain([(u, n)])).expect("edges in range");
        for t in candidates {
            types.push(t);
            if let Some(h) = self.admissible(types, &grown) {
                if let Some(found) = self.run(types, &h, depth + 1)? {
                    return Ok(Some(found));
                }
            }
            types.pop();
        }
        Ok(None)
    }
}

/// Search for a model of `phi` over a frame of `psi` with at most
/// `max_worlds` worlds.
pub fn sat_oracle(psi: &HornFormula, phi: &ModalFormula, max_worlds: usize) -> Result<SatResult, SolverError> {
    sat_oracle_with(psi, phi, OracleConfig { max_worlds, ..OracleConfig::default() })
}

pub fn sat_oracle_with(psi: &HornFormula, phi: &ModalFormula, cfg: OracleConfig) -> Result<SatResult, SolverError> {
    let mut s = Search { space: Space::new(phi), psi, cfg, stats: Stats::default() };
    let unsat = SatResult {
        status: Status::UnsatWithinBound { bound: cfg.max_worlds },
        engine: Engine::Oracle,
        stats: s.stats,
    };
    if cfg.max_worlds == 0 {
        return Ok(unsat);
    }
    let root = s.space.table.root();
    let mut roots = Vec::new();
    s.space.enumerate(s.space.md, &[(root, true)], |t| {
        roots.push(t.clone());
        true
    });
    for t in roots {
        let mut types = vec![t];
        let Some(g) = s.admissible(&types, &Graph::new(1)) else { continue };
        if let Some((types, g)) = s.run(&mut types, &g, 0)? {
            let mut model = KripkeModel::new(g);
            for (w, t) in types.iter().enumerate() {
                for v in s.space.true_vars(t) {
                    model.set(v, w, true);
                }
            }
            model.root = Some(0);
            let status = verified(model, 0, psi, phi)?;
            return Ok(SatResult { status, engine: Engine::Oracle, stats: s.stats });
        }
    }
    Ok(SatResult { stats: s.stats, ..unsat })
}

/// Oracle run whose bound is trusted as complete: only allowed when the
/// logic classifies as NP-complete (polynomial-size model property), in
/// which case a failed search is reported as `Unsat`.
pub fn sat_oracle_trusted(
    psi: &HornFormula,
    phi: &ModalFormula,
    bound: usize,
    bounds: &Bounds,
) -> Result<SatResult, SolverError> {
    if !classify(psi, bounds)?.is_np() {
        return Err(SolverError::UnsupportedLogic("a trusted bound needs a logic classified NP-complete".into()));
    }
    let mut r = sat_oracle(psi, phi, bound)?;
    if matches!(r.status, Status::UnsatWithinBound { .. }) {
        r.status = Status::Unsat;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_horn, parse_modal, zoo};

    fn run(psi: &str, phi: &str, n: usize) -> SatResult {
        sat_oracle(&parse_horn(psi).unwrap(), &parse_modal(phi).unwrap(), n).unwrap()
    }

    #[test]
    fn contradiction() {
        assert_eq!(run("", "p & ~p", 4).status, Status::UnsatWithinBound { bound: 4 });
    }

    #[test]
    fn reflexive_box() {
        assert!(!run("-> x R x", "p & []~p", 3).is_sat());
        let r = run("", "p & []~p", 3);
        assert_eq!(r.model().unwrap().0.n(), 1);
    }

    #[test]
    fn transitivity_forces_diamond() {
        let k4 = zoo::logic("K4").unwrap().to_string();
        assert!(!run(&k4, "<><>p & ~<>p", 3).is_sat());
        // the witness may loop back to the root, which carries p
        let r = run("", "<><>p & ~<>p", 3);
        assert_eq!(r.model().unwrap().0.n(), 2);
        assert!(!run("", "~p & <><>p & ~<>p & []~<>p", 3).is_sat());
    }

    #[test]
    fn symmetric_back_edge() {
        assert!(!run("x R y -> y R x", "p & <>[]~p", 3).is_sat());
        assert!(run("", "p & <>[]~p", 3).is_sat());
    }

    #[test]
    fn euclidean_models() {
        let r = run("w R x, w R y -> x R y", "<>p & <>~p & []<>q", 4);
        let (m, w) = r.model().unwrap();
        assert!(crate::frames::eval_modal(m, w, &parse_modal("<>p & <>~p").unwrap()));
    }

    #[test]
    fn trusted_bound() {
        let s5 = zoo::logic("S5").unwrap();
        let phi = parse_modal("p & []~p").unwrap();
        let r = sat_oracle_trusted(&s5, &phi, 3, &Bounds::default()).unwrap();
        assert_eq!(r.status, Status::Unsat);
        let k4 = zoo::logic("K4").unwrap();
        assert!(matches!(sat_oracle_trusted(&k4, &phi, 3, &Bounds::default()), Err(SolverError::UnsupportedLogic(_))));
    }

    #[test]
    fn step_cap() {
        let cfg = OracleConfig { max_worlds: 5, max_steps: 1 };
        let phi = parse_modal("<>p & <>q & <>r").unwrap();
        assert!(matches!(
            sat_oracle_with(&HornFormula::empty(), &phi, cfg),
            Err(SolverError::ResourceExhausted { .. })
        ));
    }
}
