use super::{horn_holds, BoundedMorphism, FrameError, HomSearch, KripkeModel};
use crate::logic::{Conclusion, HornFormula};

/// Close `t` under the Horn clauses of `psi`, one least violation at a time,
/// keeping `f` a homomorphism into its target.
pub fn saturate(
    t: &KripkeModel,
    f: &BoundedMorphism,
    psi: &HornFormula,
) -> Result<(KripkeModel, BoundedMorphism), FrameError> {
    if !horn_holds(&f.target.graph, psi) {
        return Err(FrameError::TargetViolatesLogic);
    }
    let mut model = t.clone();
    'outer: loop {
        for (ci, c) in psi.iter().enumerate() {
            let search = HomSearch::new(c.var_count(), c.preq(), &model.graph);
            let (x, y) = match c.conclusion() {
                Conclusion::False => {
                    if search.exists() {
                        return Err(FrameError::ApplicableFalseClause { clause: ci });
                    }
                    continue;
                }
                Conclusion::Edge(x, y) => (x, y),
            };
            let mut least: Option<Vec<usize>> = None;
            search.forbid_edge(x, y).for_each(|a| {
                if least.as_deref().is_none_or(|l| a < l) {
                    least = Some(a.to_vec());
                }
                true
            });
            let Some(alpha) = least else { continue };
            if x != y && !(c.in_preq(x) && c.in_preq(y)) {
                return Err(FrameError::ApplicableFalseClause { clause: ci });
            }
            let (u, v) = (alpha[x], alpha[y]);
            let (fu, fv) = (f.map[u], f.map[v]);
            if !f.target.graph.has_edge(fu, fv) {
                return Err(FrameError::MissingTargetEdge(fu, fv));
            }
            model.graph.add_edge(u, v);
            continue 'outer;
        }
        break;
    }
    let g = BoundedMorphism {
        source: model.clone(),
        target: f.target.clone(),
        map: f.map.clone(),
        frontier: f.frontier.clone(),
    };
    Ok((model, g))
}
