use super::model::truth_table;
use super::{FrameError, KripkeModel};
use crate::logic::{ModalFormula, SubformulaTable};

/// Restriction of `m` to the worlds needed to keep `phi` true at `w`: each
/// retained world at distance `i` from `w` (inside the restriction) keeps
/// the smallest-index witness of every true diamond of depth at most
/// `md - i`. Retaining a witness can shorten distances, so this runs to a
/// fixpoint.
pub fn shrink(m: &KripkeModel, w: usize, phi: &ModalFormula) -> Result<KripkeModel, FrameError> {
    if w >= m.n() {
        return Err(FrameError::VertexOutOfRange { vertex: w, n: m.n() });
    }
    let table = SubformulaTable::new(phi);
    let truth = truth_table(m, &table);
    if !truth[table.root()][w] {
        return Err(FrameError::FormulaFalse { world: w });
    }
    let md = table.depth(table.root());
    let diamonds: Vec<(usize, usize)> = table.diamonds().collect();
    let mut kept = vec![false; m.n()];
    kept[w] = true;
    loop {
        let mut dist = vec![usize::MAX; m.n()];
        dist[w] = 0;
        let mut queue = std::collections::VecDeque::from([w]);
        let mut grew = false;
        while let Some(u) = queue.pop_front() {
            let i = dist[u];
            for &(d, body) in &diamonds {
                if i + table.depth(d) > md || !truth[d][u] {
                    continue;
                }
                let v = m.graph.successors(u).find(|&v| truth[body][v]).expect("a true diamond has a witness");
                if !kept[v] {
                    kept[v] = true;
                    grew = true;
                }
            }
            for v in m.graph.successors(u) {
                if kept[v] && dist[v] == usize::MAX {
                    dist[v] = i + 1;
                    queue.push_back(v);
                }
            }
        }
        if !grew {
            break;
        }
    }
    let keep: Vec<usize> = (0..m.n()).filter(|&u| kept[u]).collect();
    let mut out = m.restrict(&keep);
    out.root = keep.iter().position(|&u| u == w);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{eval_modal, Graph};
    use crate::logic::parse_modal;

    #[test]
    fn drops_irrelevant_branches() {
        let edges: Vec<(usize, usize)> = (1..=10).map(|i| (0, i)).chain([(10, 11)]).collect();
        let mut m = KripkeModel::new(Graph::from_edges(12, edges).unwrap());
        m.set("p", 7, true);
        let phi = parse_modal("<>p").unwrap();
        let s = shrink(&m, 0, &phi).unwrap();
        assert_eq!(s.n(), 2);
        assert!(eval_modal(&s, s.root.unwrap(), &phi));
    }

    #[test]
    fn minimal_model_is_fixed() {
        let mut m = KripkeModel::new(Graph::from_edges(2, [(0, 1)]).unwrap());
        m.set("p", 1, true);
        let s = shrink(&m, 0, &parse_modal("<>p").unwrap()).unwrap();
        assert_eq!(s.graph, m.graph);
        assert_eq!(s.valuation, m.valuation);
    }

    #[test]
    fn box_successor_reached_late() {
        // 2 is a successor of the root but only retained as a witness for 0
        let m = KripkeModel::new(Graph::from_edges(4, [(1, 0), (1, 2), (0, 2), (2, 3)]).unwrap());
        let phi = parse_modal("[]<>~<>p").unwrap();
        assert!(eval_modal(&m, 1, &phi));
        let s = shrink(&m, 1, &phi).unwrap();
        assert!(eval_modal(&s, s.root.unwrap(), &phi));
    }

    #[test]
    fn precondition() {
        let m = KripkeModel::new(Graph::new(1));
        assert_eq!(shrink(&m, 0, &parse_modal("p").unwrap()).unwrap_err(), FrameError::FormulaFalse { world: 0 });
    }
}
