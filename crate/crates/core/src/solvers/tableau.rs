//! Tableau for logics whose frames are trees with optional loops and
//! optional back edges to the parent.
//!
//! The frame conditions are handled in two parts. Clauses whose conclusion
//! lies inside one prerequisite component are checked locally whenever a
//! node is created: every homomorphism touching the new node must see the
//! conclusion edge. Everything global (`FALSE` heads, heads spanning
//! several components, free loops, and the side components of local
//! clauses) goes through a guess of which prerequisite components occur
//! in the final model at all. Guesses of absence are checked at every node;
//! guesses of presence only add constraints, so they need no check.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use fixedbitset::FixedBitSet;

use super::hintikka::Space;
use super::{verified, Engine, SatResult, SolverError, Stats, Status};
use crate::classification::{classify, Bounds};
use crate::frames::{Graph, HomSearch, KripkeModel};
use crate::logic::{Conclusion, ConclusionShape, HornClause, HornFormula, ModalFormula};

/// Signed subformulas at a tableau node together with its flags.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Annotation {
    pub literals: Vec<(ModalFormula, bool)>,
    /// The node has a loop.
    pub refl: bool,
    /// The node has an edge back to its parent.
    pub back: bool,
}

impl Annotation {
    pub fn new(literals: impl IntoIterator<Item = (ModalFormula, bool)>) -> Self {
        Annotation { literals: literals.into_iter().collect(), ..Annotation::default() }
    }
}

/// Local consistency of an annotation: no formula with both signs, every
/// signed formula decomposed inside the set, and the modal checks implied
/// by the loop and back-edge flags.
pub fn verify_cons(a: &Annotation, parent: Option<&Annotation>) -> bool {
    let Some(sign) = signs(a) else { return false };
    let parent_sign = match parent.map(signs) {
        Some(None) => return false,
        Some(Some(p)) => Some(p),
        None => None,
    };
    sign.iter().all(|(&f, &s)| {
        let has = |g: &ModalFormula, want: bool| sign.get(g) == Some(&want);
        match (f, s) {
            (ModalFormula::Var(_), _) => true,
            (ModalFormula::Not(g), s) => has(g, !s),
            (ModalFormula::And(x, y), true) | (ModalFormula::Or(x, y), false) => has(x, s) && has(y, s),
            (ModalFormula::And(x, y), false) | (ModalFormula::Or(x, y), true) => has(x, s) || has(y, s),
            (ModalFormula::Diamond(_), true) => true,
            (ModalFormula::Diamond(g), false) => {
                let looped = a.refl && has(g, true);
                let back = a.back && parent_sign.as_ref().is_some_and(|p| p.get(&**g) == Some(&true));
                !looped && !back
            }
        }
    })
}

fn signs(a: &Annotation) -> Option<BTreeMap<&ModalFormula, bool>> {
    let mut out = BTreeMap::new();
    for (f, s) in &a.literals {
        if *out.entry(f).or_insert(*s) != *s {
            return None;
        }
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableauMode {
    /// `Independent` when every prerequisite component has at most two
    /// vertices, `Agenda` otherwise.
    #[default]
    Auto,
    /// Each diamond gets its own witness subtree, searched separately and
    /// memoised. Only valid when homomorphisms never span siblings.
    Independent,
    /// Depth-first construction of the whole tree with full backtracking.
    Agenda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauConfig {
    /// In agenda mode, drop finished nodes that are out of reach of any
    /// future node from the homomorphism checks.
    pub window: bool,
    pub mode: TableauMode,
    pub max_steps: u64,
}

impl Default for TableauConfig {
    fn default() -> Self {
        TableauConfig { window: false, mode: TableauMode::Auto, max_steps: 5_000_000 }
    }
}

/// Connected pattern with variables renumbered from zero.
#[derive(Clone, Debug)]
struct Pattern {
    nv: usize,
    edges: Vec<(usize, usize)>,
}

impl Pattern {
    fn of(c: &HornClause, members: &[usize]) -> Self {
        let at = |v: usize| members.iter().position(|&m| m == v).expect("member");
        let edges = c.component_edges(members).into_iter().map(|(a, b)| (at(a), at(b))).collect();
        Pattern { nv: members.len(), edges }
    }

    /// Some homomorphism into `g` sends a variable to `c`.
    fn touches(&self, g: &Graph, c: usize, forbid: Option<(usize, usize)>) -> bool {
        (0..self.nv).any(|v| {
            let s = HomSearch::new(self.nv, &self.edges, g).fix(v, c);
            match forbid {
                Some((x, y)) => s.forbid_edge(x, y).exists(),
                None => s.exists(),
            }
        })
    }
}

#[derive(Clone, Debug)]
struct Local {
    pattern: Pattern,
    x: usize,
    y: usize,
}

#[derive(Clone, Debug)]
struct ClauseParts {
    shape: ConclusionShape,
    /// Indices into the guessed components.
    guessed: Vec<usize>,
    local: Option<Local>,
}

/// Constraints derived from one guess of component occurrence.
#[derive(Clone, Debug, Default)]
struct Plan {
    absent: Vec<Pattern>,
    enforce: Vec<Local>,
    force_refl: bool,
}

impl Plan {
    /// Frame conditions for the newest node `c` of `g`.
    fn horn_ok(&self, g: &Graph, c: usize) -> bool {
        self.absent.iter().all(|p| !p.touches(g, c, None))
            && self.enforce.iter().all(|l| !l.pattern.touches(g, c, Some((l.x, l.y))))
    }
}

/// A tableau for one logic, reusable across formulas.
#[derive(Clone, Debug)]
pub struct TableauSolver {
    psi: HornFormula,
    cfg: TableauConfig,
    independent: bool,
    refl: bool,
    back: bool,
    radius: usize,
    items: Vec<Pattern>,
    parts: Vec<ClauseParts>,
}

impl TableauSolver {
    /// Accepts `psi` when its clauses with edge conclusions classify as
    /// PSPACE-hard with a types-list inside `{refl, symm}`. Loops are then
    /// only allowed if `refl` is listed and back edges only if `symm` is.
    pub fn new(psi: &HornFormula, bounds: &Bounds, cfg: TableauConfig) -> Result<Self, SolverError> {
        let edge_part = HornFormula::new(psi.iter().filter(|c| c.conclusion() != Conclusion::False).cloned().collect());
        let outcome = classify(&edge_part, bounds)?;
        if outcome.is_np() {
            return Err(SolverError::UnsupportedLogic(
                "the logic is NP-complete, so tree-like models are not guaranteed".into(),
            ));
        }
        let types = outcome.types_list;
        if !types.trans.is_empty() {
            return Err(SolverError::UnsupportedLogic(format!("types-list {types} contains transitivity")));
        }
        let mut items = Vec::new();
        let mut parts = Vec::new();
        let mut widest = 0;
        for c in psi.iter() {
            let shape = c.shape();
            let anchor = match c.conclusion() {
                Conclusion::Edge(x, _) if shape == ConclusionShape::Local => Some(x),
                _ => None,
            };
            let mut guessed = Vec::new();
            let mut local = None;
            for comp in c.components() {
                widest = widest.max(comp.len());
                let pattern = Pattern::of(c, &comp);
                match (anchor, c.conclusion()) {
                    (Some(a), Conclusion::Edge(x, y)) if comp.contains(&a) => {
                        let at = |v: usize| comp.iter().position(|&m| m == v).expect("member");
                        local = Some(Local { pattern, x: at(x), y: at(y) });
                    }
                    _ => {
                        guessed.push(items.len());
                        items.push(pattern);
                    }
                }
            }
            parts.push(ClauseParts { shape, guessed, local });
        }
        if items.len() > 20 {
            return Err(SolverError::UnsupportedLogic(format!("{} components to guess", items.len())));
        }
        let independent = match cfg.mode {
            TableauMode::Auto => widest <= 2,
            TableauMode::Independent if widest > 2 => {
                return Err(SolverError::UnsupportedLogic(
                    "independent mode needs prerequisite components of at most two vertices".into(),
                ))
            }
            TableauMode::Independent => true,
            TableauMode::Agenda => false,
        };
        Ok(TableauSolver {
            psi: psi.clone(),
            cfg,
            independent,
            refl: types.refl,
            back: types.symm,
            radius: psi.locality_radius(),
            items,
            parts,
        })
    }

    fn plan(&self, mask: u32) -> Option<Plan> {
        let present = |i: usize| mask & (1 << i) != 0;
        let mut plan = Plan {
            absent: (0..self.items.len()).filter(|&i| !present(i)).map(|i| self.items[i].clone()).collect(),
            ..Plan::default()
        };
        for p in &self.parts {
            if !p.guessed.iter().all(|&i| present(i)) {
                continue;
            }
            match p.shape {
                ConclusionShape::False | ConclusionShape::Disconnected => return None,
                ConclusionShape::FreeLoop => plan.force_refl = true,
                ConclusionShape::Local => plan.enforce.push(p.local.clone().expect("local part")),
            }
        }
        Some(plan)
    }

    fn refl_options(&self, plan: &Plan) -> Vec<bool> {
        match (plan.force_refl, self.refl) {
            (true, true) => vec![true],
            (true, false) => vec![],
            (false, true) => vec![false, true],
            (false, false) => vec![false],
        }
    }

    pub fn solve(&self, phi: &ModalFormula) -> Result<SatResult, SolverError> {
        let space = Space::levels(phi, self.refl, self.back);
        let mut stats = Stats::default();
        for mask in 0..1u32 << self.items.len() {
            let Some(plan) = self.plan(mask) else { continue };
            let found = if self.independent {
                let mut s = Independent::new(self, &space, &plan, &mut stats);
                s.run()?
            } else {
                let mut s = Agenda::new(self, &space, &plan, &mut stats);
                s.run()?
            };
            if let Some(tree) = found {
                let status = verified(tree.model(&space), 0, &self.psi, phi)?;
                return Ok(SatResult { status, engine: Engine::Tableau, stats });
            }
        }
        Ok(SatResult { status: Status::Unsat, engine: Engine::Tableau, stats })
    }
}

/// Decide `phi` over the frames of `psi` with default bounds and settings.
pub fn sat_tableau(psi: &HornFormula, phi: &ModalFormula) -> Result<SatResult, SolverError> {
    TableauSolver::new(psi, &Bounds::default(), TableauConfig::default())?.solve(phi)
}

fn tick(stats: &mut Stats, level: usize, limit: u64) -> Result<(), SolverError> {
    stats.nodes += 1;
    stats.max_depth = stats.max_depth.max(level);
    if stats.nodes > limit {
        return Err(SolverError::ResourceExhausted { limit });
    }
    Ok(())
}

#[derive(Clone, Debug)]
struct TreeNode {
    level: usize,
    ann: FixedBitSet,
    refl: bool,
    back: bool,
    parent: Option<usize>,
    live: bool,
}

/// Nodes in creation order; node 0 is the root.
#[derive(Clone, Debug, Default)]
struct Tree {
    nodes: Vec<TreeNode>,
}

impl Tree {
    /// Frame induced on the nodes selected by `keep`, with the index of
    /// each original node in it (`usize::MAX` when dropped).
    fn graph(&self, keep: impl Fn(usize) -> bool) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.nodes.len()];
        let mut k = 0;
        for (i, slot) in pos.iter_mut().enumerate() {
            if keep(i) {
                *slot = k;
                k += 1;
            }
        }
        let mut g = Graph::new(k);
        for (i, n) in self.nodes.iter().enumerate() {
            let u = pos[i];
            if u == usize::MAX {
                continue;
            }
            if n.refl {
                g.add_edge(u, u);
            }
            if let Some(p) = n.parent.map(|p| pos[p]).filter(|&p| p != usize::MAX) {
                g.add_edge(p, u);
                if n.back {
                    g.add_edge(u, p);
                }
            }
        }
        (g, pos)
    }

    fn model(&self, space: &Space) -> KripkeModel {
        let mut m = KripkeModel::new(self.graph(|_| true).0);
        for (w, n) in self.nodes.iter().enumerate() {
            for v in space.true_vars(&n.ann) {
                m.set(v, w, true);
            }
        }
        m.root = Some(0);
        m
    }
}

/// Graph of a node with an optional loop, or of a parent-child pair.
fn pair_graph(refl_p: bool, child: Option<(bool, bool)>) -> Graph {
    let mut g = Graph::new(1 + child.is_some() as usize);
    if refl_p {
        g.add_edge(0, 0);
    }
    if let Some((refl, back)) = child {
        g.add_edge(0, 1);
        if refl {
            g.add_edge(1, 1);
        }
        if back {
            g.add_edge(1, 0);
        }
    }
    g
}

#[derive(Debug)]
struct PlanNode {
    ann: FixedBitSet,
    level: usize,
    refl: bool,
    back: bool,
    children: Rc<[Rc<PlanNode>]>,
}

type Children = Option<Rc<[Rc<PlanNode>]>>;

/// Memoised search where every diamond gets a witness subtree of its own.
/// With components of at most two vertices every homomorphism touching a
/// new node lies on the edge to its parent, so the frame checks reduce to
/// a table over the flags.
struct Independent<'s> {
    space: &'s Space,
    refl_opts: Vec<bool>,
    back_opts: Vec<bool>,
    root_ok: [bool; 2],
    child_ok: [[[bool; 2]; 2]; 2],
    memo: HashMap<(usize, FixedBitSet, bool, Option<FixedBitSet>), Children>,
    stats: &'s mut Stats,
    limit: u64,
}

impl<'s> Independent<'s> {
    fn new(solver: &TableauSolver, space: &'s Space, plan: &Plan, stats: &'s mut Stats) -> Self {
        let mut root_ok = [false; 2];
        let mut child_ok = [[[false; 2]; 2]; 2];
        for rp in [false, true] {
            root_ok[rp as usize] = plan.horn_ok(&pair_graph(rp, None), 0);
            for rc in [false, true] {
                for bc in [false, true] {
                    child_ok[rp as usize][rc as usize][bc as usize] = plan.horn_ok(&pair_graph(rp, Some((rc, bc))), 1);
                }
            }
        }
        Independent {
            space,
            refl_opts: solver.refl_options(plan),
            back_opts: if solver.back { vec![false, true] } else { vec![false] },
            root_ok,
            child_ok,
            memo: HashMap::new(),
            stats,
            limit: solver.cfg.max_steps,
        }
    }

    fn run(&mut self) -> Result<Option<Tree>, SolverError> {
        let root = self.space.table.root();
        let mut cands = Vec::new();
        self.space.enumerate(0, &[(root, true)], |t| {
            cands.push(t.clone());
            true
        });
        for t in cands {
            for r in self.refl_opts.clone() {
                if !self.root_ok[r as usize] || (r && !self.space.allowed(0, &t, &t)) {
                    continue;
                }
                if let Some(children) = self.expand(0, &t, r, None)? {
                    let node = PlanNode { ann: t, level: 0, refl: r, back: false, children };
                    let mut tree = Tree::default();
                    flatten(&node, None, &mut tree);
                    return Ok(Some(tree));
                }
            }
        }
        Ok(None)
    }

    /// Witnesses for every diamond of a node, given the parent annotation
    /// when the node has a back edge.
    fn expand(
        &mut self,
        level: usize,
        ann: &FixedBitSet,
        refl: bool,
        up: Option<&FixedBitSet>,
    ) -> Result<Children, SolverError> {
        let key = (level, ann.clone(), refl, up.cloned());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        tick(self.stats, level, self.limit)?;
        let mut children = Vec::new();
        let mut ok = true;
        for &(d, body) in self.space.diamonds(level) {
            if !ann[d] || (refl && ann[body]) || up.is_some_and(|p| p[body]) {
                continue;
            }
            match self.witness(level, ann, refl, body)? {
                Some(c) => children.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        let out: Children = ok.then(|| children.into());
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn witness(
        &mut self,
        level: usize,
        ann: &FixedBitSet,
        refl_p: bool,
        body: usize,
    ) -> Result<Option<Rc<PlanNode>>, SolverError> {
        let mut required = self.space.successor_requirements(level, ann);
        required.push((body, true));
        let mut cands = Vec::new();
        self.space.enumerate(level + 1, &required, |t| {
            cands.push(t.clone());
            true
        });
        let l = level + 1;
        for t in cands {
            for rc in self.refl_opts.clone() {
                if rc && !self.space.allowed(l, &t, &t) {
                    continue;
                }
                for bc in self.back_opts.clone() {
                    if !self.child_ok[refl_p as usize][rc as usize][bc as usize] {
                        continue;
                    }
                    if bc && !self.space.allowed(l, &t, ann) {
                        continue;
                    }
                    if let Some(children) = self.expand(l, &t, rc, bc.then_some(ann))? {
                        return Ok(Some(Rc::new(PlanNode { ann: t, level: l, refl: rc, back: bc, children })));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn flatten(node: &PlanNode, parent: Option<usize>, tree: &mut Tree) {
    let id = tree.nodes.len();
    tree.nodes.push(TreeNode {
        level: node.level,
        ann: node.ann.clone(),
        refl: node.refl,
        back: node.back,
        parent,
        live: true,
    });
    for c in node.children.iter() {
        flatten(c, Some(id), tree);
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    /// Witness the diamond with this body at the node.
    Discharge(usize, usize),
    /// The subtree rooted at the node is complete.
    Finish(usize),
}

/// Depth-first construction of one tree, backtracking over every choice.
struct Agenda<'s> {
    space: &'s Space,
    plan: &'s Plan,
    window: Option<usize>,
    refl_opts: Vec<bool>,
    back_opts: Vec<bool>,
    tree: Tree,
    tasks: Vec<Task>,
    stats: &'s mut Stats,
    limit: u64,
}

impl<'s> Agenda<'s> {
    fn new(solver: &TableauSolver, space: &'s Space, plan: &'s Plan, stats: &'s mut Stats) -> Self {
        Agenda {
            space,
            plan,
            window: solver.cfg.window.then_some(solver.radius),
            refl_opts: solver.refl_options(plan),
            back_opts: if solver.back { vec![false, true] } else { vec![false] },
            tree: Tree::default(),
            tasks: Vec::new(),
            stats,
            limit: solver.cfg.max_steps,
        }
    }

    fn run(&mut self) -> Result<Option<Tree>, SolverError> {
        let root = self.space.table.root();
        let mut cands = Vec::new();
        self.space.enumerate(0, &[(root, true)], |t| {
            cands.push(t.clone());
            true
        });
        for t in cands {
            for r in self.refl_opts.clone() {
                if r && !self.space.allowed(0, &t, &t) {
                    continue;
                }
                self.tree.nodes =
                    vec![TreeNode { level: 0, ann: t.clone(), refl: r, back: false, parent: None, live: true }];
                self.tasks.clear();
                if self.horn_ok(0) {
                    self.push_obligations(0);
                    if self.step()? {
                        return Ok(Some(std::mem::take(&mut self.tree)));
                    }
                }
            }
        }
        Ok(None)
    }

    fn horn_ok(&self, c: usize) -> bool {
        let windowed = self.window.is_some();
        let (g, pos) = self.tree.graph(|i| !windowed || self.tree.nodes[i].live);
        self.plan.horn_ok(&g, pos[c])
    }

    fn push_obligations(&mut self, v: usize) {
        let n = &self.tree.nodes[v];
        let ds = self.space.diamonds(n.level);
        for &(d, body) in ds.iter().rev() {
            if n.ann[d] {
                self.tasks.push(Task::Discharge(v, body));
            }
        }
    }

    fn step(&mut self) -> Result<bool, SolverError> {
        let Some(task) = self.tasks.pop() else { return Ok(true) };
        let ok = match task {
            Task::Finish(c) => {
                let evicted = self.evict(c);
                let ok = self.step()?;
                if !ok {
                    for w in evicted {
                        self.tree.nodes[w].live = true;
                    }
                }
                ok
            }
            Task::Discharge(v, body) => {
                let n = &self.tree.nodes[v];
                tick(self.stats, n.level, self.limit)?;
                let looped = n.refl && n.ann[body];
                let back = n.back && n.parent.is_some_and(|p| self.tree.nodes[p].ann[body]);
                if looped || back {
                    self.step()?
                } else {
                    self.extend(v, body)?
                }
            }
        };
        if !ok {
            self.tasks.push(task);
        }
        Ok(ok)
    }

    /// Nodes of the finished subtree at `c` that are more than the
    /// locality radius below its parent can never share a homomorphism
    /// with a later node.
    fn evict(&mut self, c: usize) -> Vec<usize> {
        let Some(radius) = self.window else { return Vec::new() };
        let base = self.tree.nodes[c].level - 1;
        let mut out = Vec::new();
        for w in c..self.tree.nodes.len() {
            let n = &mut self.tree.nodes[w];
            if n.live && n.level - base > radius {
                n.live = false;
                out.push(w);
            }
        }
        out
    }

    fn extend(&mut self, v: usize, body: usize) -> Result<bool, SolverError> {
        let level = self.tree.nodes[v].level;
        let ann = self.tree.nodes[v].ann.clone();
        let mut required = self.space.successor_requirements(level, &ann);
        required.push((body, true));
        let mut cands = Vec::new();
        self.space.enumerate(level + 1, &required, |t| {
            cands.push(t.clone());
            true
        });
        let l = level + 1;
        let c = self.tree.nodes.len();
        let depth = self.tasks.len();
        for t in cands {
            for rc in self.refl_opts.clone() {
                if rc && !self.space.allowed(l, &t, &t) {
                    continue;
                }
                for bc in self.back_opts.clone() {
                    if bc && !self.space.allowed(l, &t, &ann) {
                        continue;
                    }
                    self.tree.nodes.push(TreeNode {
                        level: l,
                        ann: t.clone(),
                        refl: rc,
                        back: bc,
                        parent: Some(v),
                        live: true,
                    });
                    if self.horn_ok(c) {
                        self.tasks.push(Task::Finish(c));
                        self.push_obligations(c);
                        if self.step()? {
                            return Ok(true);
                        }
                        self.tasks.truncate(depth);
                    }
                    self.tree.nodes.pop();
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_horn, parse_modal, zoo};
    use crate::solvers::sat_oracle;

    fn tab(psi: &str, phi: &str) -> SatResult {
        sat_tableau(&parse_horn(psi).unwrap(), &parse_modal(phi).unwrap()).unwrap()
    }

    fn lit(f: &str, s: bool) -> (ModalFormula, bool) {
        (parse_modal(f).unwrap(), s)
    }

    #[test]
    fn consistency_examples() {
        assert!(verify_cons(&Annotation::new([lit("p & q", true), lit("p", true), lit("q", true)]), None));
        assert!(!verify_cons(&Annotation::new([lit("p | q", true), lit("p", false), lit("q", false)]), None));
        assert!(!verify_cons(&Annotation::new([lit("p", true), lit("p", false)]), None));
        let mut a = Annotation::new([lit("p", true), lit("<>p", false)]);
        assert!(verify_cons(&a, None));
        a.refl = true;
        assert!(!verify_cons(&a, None));
        let mut child = Annotation::new([lit("<>q", false)]);
        child.back = true;
        let parent = Annotation::new([lit("q", true)]);
        assert!(!verify_cons(&child, Some(&parent)));
        assert!(verify_cons(&child, Some(&Annotation::new([lit("q", false)]))));
    }

    #[test]
    fn solver_examples() {
        let r = tab("", "<>p & <>~p");
        assert_eq!(r.model().unwrap().0.n(), 3);
        assert_eq!(tab("x R y -> y R x", "p & <>[]~p").status, Status::Unsat);
        assert!(tab("", "p & <>[]~p").is_sat());
        assert_eq!(tab("-> x R x", "p & []~p").status, Status::Unsat);
        assert!(tab("-> x R x", "p & <>~p & []<>p").is_sat());
    }

    #[test]
    fn frame_checks_on_pairs() {
        let symm = TableauSolver::new(&zoo::symmetry().into(), &Bounds::default(), TableauConfig::default()).unwrap();
        let plan = symm.plan(0).unwrap();
        assert!(!plan.horn_ok(&pair_graph(false, Some((false, false))), 1));
        assert!(plan.horn_ok(&pair_graph(false, Some((false, true))), 1));
        let refl =
            TableauSolver::new(&zoo::reflexivity().into(), &Bounds::default(), TableauConfig::default()).unwrap();
        assert_eq!(refl.refl_options(&refl.plan(0).unwrap()), vec![true]);
    }

    #[test]
    fn unembeddable_component_is_vacuous() {
        // a directed triangle never appears in a tree with loops
        let psi = parse_horn("x R y, y R z, z R x -> false").unwrap();
        let s = TableauSolver::new(&psi, &Bounds::default(), TableauConfig::default()).unwrap();
        assert!(!s.independent);
        assert!(s.solve(&parse_modal("<>(p & <>p)").unwrap()).unwrap().is_sat());
    }

    #[test]
    fn false_clauses_prune() {
        assert_eq!(tab("x R y -> false", "<>p").status, Status::Unsat);
        assert!(tab("x R y -> false", "p & []~p").is_sat());
        assert_eq!(tab("x R y, y R z -> false", "<><>p").status, Status::Unsat);
        assert!(tab("x R y, y R z -> false", "<>p & <>~p").is_sat());
    }

    #[test]
    fn rejects_outside_fragment() {
        for name in ["K4", "S4", "S5", "K5"] {
            let e = sat_tableau(&zoo::logic(name).unwrap(), &parse_modal("p").unwrap());
            assert!(matches!(e, Err(SolverError::UnsupportedLogic(_))), "{name}");
        }
    }

    #[test]
    fn agenda_and_window_agree_with_oracle() {
        let logics = ["", "-> x R x", "x R y -> y R x", "x R y, y R z -> false", "x R y, y R z -> y R y"];
        let formulas = ["<>p & <>~p", "p & <>[]~p", "<><>p & []~p", "<>(p & []~p) & []<>p", "[]<>~p & <>p & p"];
        for psi in logics {
            let psi = parse_horn(psi).unwrap();
            let solver = |mode, window| {
                TableauSolver::new(&psi, &Bounds::default(), TableauConfig { mode, window, ..TableauConfig::default() })
            };
            for phi in formulas {
                let phi = parse_modal(phi).unwrap();
                let oracle = sat_oracle(&psi, &phi, 4).unwrap().is_sat();
                let agenda = solver(TableauMode::Agenda, false).unwrap().solve(&phi).unwrap();
                let windowed = solver(TableauMode::Agenda, true).unwrap().solve(&phi).unwrap();
                assert_eq!(agenda.is_sat(), oracle, "{psi} / {phi}");
                assert_eq!(windowed.is_sat(), oracle, "{psi} / {phi}");
                if let Ok(s) = solver(TableauMode::Independent, false) {
                    assert_eq!(s.solve(&phi).unwrap().is_sat(), oracle, "{psi} / {phi}");
                }
            }
        }
    }

    #[test]
    fn step_limit() {
        let psi = HornFormula::empty();
        let cfg = TableauConfig { max_steps: 1, ..TableauConfig::default() };
        let s = TableauSolver::new(&psi, &Bounds::default(), cfg).unwrap();
        let r = s.solve(&parse_modal("<>p & <>q & <><>r").unwrap());
        assert!(matches!(r, Err(SolverError::ResourceExhausted { limit: 1 })));
    }
}
