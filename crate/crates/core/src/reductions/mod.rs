//! Quantified boolean formulas and their encoding as modal formulas whose
//! satisfiability follows the truth of the QBF.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::frames::{Graph, KripkeModel};
use crate::logic::{parse_prefixed, ModalFormula, ParseError};

/// Largest prefix [`qbf_eval`] accepts.
pub const EVAL_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    fn letter(self) -> char {
        match self {
            Quantifier::Forall => 'A',
            Quantifier::Exists => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QbfError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("`{token}` at byte {offset} is not a quantifier (expected `A` or `E` followed by a name)")]
    BadQuantifier { offset: usize, token: String },
    #[error("variable `{0}` is quantified twice")]
    DuplicateVariable(String),
    #[error("variable `{0}` is not quantified")]
    FreeVariable(String),
    #[error("the matrix must be propositional")]
    ModalMatrix,
    #[error("{m} quantifiers exceed the evaluation cap of {cap}")]
    TooManyVariables { m: usize, cap: usize },
}

/// Closed prenex QBF `Q1 p1 ... Qm pm : matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qbf {
    prefix: Vec<(Quantifier, String)>,
    matrix: ModalFormula,
}

impl Qbf {
    pub fn new(prefix: Vec<(Quantifier, String)>, matrix: ModalFormula) -> Result<Self, QbfError> {
        let mut seen = BTreeSet::new();
        for (_, v) in &prefix {
            if !seen.insert(v.as_str()) {
                return Err(QbfError::DuplicateVariable(v.clone()));
            }
        }
        if matrix.modal_depth() > 0 {
            return Err(QbfError::ModalMatrix);
        }
        if let Some(v) = matrix.variables().into_iter().find(|v| !seen.contains(v.as_str())) {
            return Err(QbfError::FreeVariable(v));
        }
        Ok(Qbf { prefix, matrix })
    }

    pub fn prefix(&self) -> &[(Quantifier, String)] {
        &self.prefix
    }

    pub fn matrix(&self) -> &ModalFormula {
        &self.matrix
    }

    /// Number of quantifiers.
    pub fn m(&self) -> usize {
        self.prefix.len()
    }
}

impl fmt::Display for Qbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, v) in &self.prefix {
            write!(f, "{}{} ", q.letter(), v)?;
        }
        write!(f, ": {}", self.matrix)
    }
}

/// Parse `Ap Eq : (p & q) | (~p & ~q)`. A lone `A` or `E` token takes the
/// following token as its variable.
pub fn parse_qbf(text: &str) -> Result<Qbf, QbfError> {
    let (tokens, matrix) = parse_prefixed(text)?;
    let mut prefix = Vec::new();
    let mut it = tokens.into_iter();
    while let Some((offset, tok)) = it.next() {
        let q = match tok.chars().next() {
            Some('A') => Quantifier::Forall,
            Some('E') => Quantifier::Exists,
            _ => return Err(QbfError::BadQuantifier { offset, token: tok }),
        };
        let name = if tok.len() > 1 {
            tok[1..].to_string()
        } else {
            match it.next() {
                Some((_, v)) => v,
                None => return Err(QbfError::BadQuantifier { offset, token: tok }),
            }
        };
        prefix.push((q, name));
    }
    Qbf::new(prefix, matrix)
}

fn eval_prop(f: &ModalFormula, val: &BTreeMap<&str, bool>) -> bool {
    match f {
        ModalFormula::Var(v) => val[v.as_str()],
        ModalFormula::Not(a) => !eval_prop(a, val),
        ModalFormula::And(a, b) => eval_prop(a, val) && eval_prop(b, val),
        ModalFormula::Or(a, b) => eval_prop(a, val) || eval_prop(b, val),
        ModalFormula::Diamond(_) => unreachable!("matrix is propositional"),
    }
}

fn eval_from<'a>(chi: &'a Qbf, i: usize, val: &mut BTreeMap<&'a str, bool>) -> bool {
    let Some((q, v)) = chi.prefix.get(i) else {
        return eval_prop(&chi.matrix, val);
    };
    let mut branch = |b: bool| {
        val.insert(v.as_str(), b);
        eval_from(chi, i + 1, val)
    };
    match q {
        Quantifier::Forall => branch(true) && branch(false),
        Quantifier::Exists => branch(true) || branch(false),
    }
}

/// Truth of a closed QBF by recursion over the prefix.
pub fn qbf_eval(chi: &Qbf) -> Result<bool, QbfError> {
    if chi.m() > EVAL_CAP {
        return Err(QbfError::TooManyVariables { m: chi.m(), cap: EVAL_CAP });
    }
    Ok(eval_from(chi, 0, &mut BTreeMap::new()))
}

/// Level variables `q0..qm`, underscored until they avoid the QBF names.
fn level_names(chi: &Qbf) -> Vec<String> {
    let taken: BTreeSet<&str> = chi.prefix.iter().map(|(_, v)| v.as_str()).collect();
    let mut stem = String::from("q");
    loop {
        let names: Vec<String> = (0..=chi.m()).map(|i| format!("{stem}{i}")).collect();
        if names.iter().all(|n| !taken.contains(n.as_str())) {
            return names;
        }
        stem.insert(0, '_');
    }
}

fn boxes(f: ModalFormula, k: usize) -> ModalFormula {
    (0..k).fold(f, |acc, _| ModalFormula::boxed(acc))
}

/// `f & []f & ... & []^m f`.
fn up_to(f: &ModalFormula, m: usize) -> ModalFormula {
    ModalFormula::conjunction((0..=m).map(|k| boxes(f.clone(), k))).expect("m + 1 conjuncts")
}

/// Modal formula satisfiable in K iff `chi` is true. Its models are trees
/// whose level `i` worlds carry `q_i`; the worlds below a universal
/// quantifier split on its variable, and variable values persist downward.
pub fn qbf_to_modal(chi: &Qbf) -> ModalFormula {
    use ModalFormula as M;
    let m = chi.m();
    let q: Vec<M> = level_names(chi).into_iter().map(M::var).collect();
    // p[i] is the variable of the i-th quantifier, 1-based.
    let p: Vec<M> = std::iter::once(M::var("")).chain(chi.prefix.iter().map(|(_, v)| M::var(v.clone()))).collect();
    let mut parts = vec![q[0].clone()];
    for i in 0..=m {
        let others = M::conjunction((0..=m).filter(|&j| j != i).map(|j| M::not(q[j].clone())));
        if let Some(others) = others {
            parts.push(up_to(&M::implies(q[i].clone(), others), m));
        }
    }
    for i in 0..m {
        parts.push(up_to(&M::implies(q[i].clone(), M::diamond(q[i + 1].clone())), m));
    }
    for (j, (quant, _)) in chi.prefix.iter().enumerate() {
        if *quant == Quantifier::Forall {
            let split = M::and(
                M::diamond(M::and(q[j + 1].clone(), p[j + 1].clone())),
                M::diamond(M::and(q[j + 1].clone(), M::not(p[j + 1].clone()))),
            );
            parts.push(boxes(M::implies(q[j].clone(), split), j));
        }
    }
    for i in 1..m {
        let below = M::disjunction(q[i + 1..].iter().cloned()).expect("i < m");
        let keep = |lit: M| M::implies(lit.clone(), M::boxed(M::implies(below.clone(), lit)));
        let s = M::and(keep(p[i].clone()), keep(M::not(p[i].clone())));
        parts.push(up_to(&s, m));
    }
    parts.push(boxes(M::implies(q[m].clone(), chi.matrix.clone()), m));
    M::conjunction(parts).expect("q0 is present")
}

/// The intended model of [`qbf_to_modal`] for a true QBF: a strict tree of
/// depth `m` branching on universal variables and following a winning
/// choice on existential ones. `None` when the QBF is false.
pub fn quantifier_tree(chi: &Qbf) -> Result<Option<KripkeModel>, QbfError> {
    if !qbf_eval(chi)? {
        return Ok(None);
    }
    let levels = level_names(chi);
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, Vec<(String, bool)>)> = vec![(0, Vec::new())];
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        let (i, assigned) = labels[u].clone();
        let Some((quant, v)) = chi.prefix.get(i) else { continue };
        let values: Vec<bool> = match quant {
            Quantifier::Forall => vec![true, false],
            Quantifier::Exists => {
                let mut val: BTreeMap<&str, bool> = assigned.iter().map(|(k, b)| (k.as_str(), *b)).collect();
                val.insert(v.as_str(), true);
                vec![eval_from(chi, i + 1, &mut val)]
            }
        };
        for b in values {
            let mut next = assigned.clone();
            next.push((v.clone(), b));
            let w = labels.len();
            labels.push((i + 1, next));
            edges.push((u, w));
            stack.push(w);
        }
    }
    let mut model = KripkeModel::new(Graph::from_edges(labels.len(), edges).expect("tree edges"));
    for (w, (i, assigned)) in labels.iter().enumerate() {
        model.set(&levels[*i], w, true);
        for (v, b) in assigned {
            model.set(v, w, *b);
        }
    }
    model.root = Some(0);
    Ok(Some(model))
}
