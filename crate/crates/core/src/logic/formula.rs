use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Modal formula over propositional variables. Box and implication are
/// not variants: the parser and the helper constructors desugar them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModalFormula {
    Var(String),
    Not(Box<ModalFormula>),
    And(Box<ModalFormula>, Box<ModalFormula>),
    Or(Box<ModalFormula>, Box<ModalFormula>),
    Diamond(Box<ModalFormula>),
}

use ModalFormula::*;

impl ModalFormula {
    pub fn var(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: ModalFormula) -> Self {
        Not(Box::new(f))
    }

    pub fn and(a: ModalFormula, b: ModalFormula) -> Self {
        And(Box::new(a), Box::new(b))
    }

    pub fn or(a: ModalFormula, b: ModalFormula) -> Self {
        Or(Box::new(a), Box::new(b))
    }

    pub fn diamond(f: ModalFormula) -> Self {
        Diamond(Box::new(f))
    }

    /// `[]f`, i.e. `~<>~f`.
    pub fn boxed(f: ModalFormula) -> Self {
        Self::not(Self::diamond(Self::not(f)))
    }

    /// `a -> b`, i.e. `~a | b`.
    pub fn implies(a: ModalFormula, b: ModalFormula) -> Self {
        Self::or(Self::not(a), b)
    }

    /// Left-nested conjunction; `None` for an empty iterator.
    pub fn conjunction(items: impl IntoIterator<Item = ModalFormula>) -> Option<Self> {
        items.into_iter().reduce(Self::and)
    }

    /// Left-nested disjunction; `None` for an empty iterator.
    pub fn disjunction(items: impl IntoIterator<Item = ModalFormula>) -> Option<Self> {
        items.into_iter().reduce(Self::or)
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Var(_) => 1,
            Not(a) | Diamond(a) => 1 + a.size(),
            And(a, b) | Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn modal_depth(&self) -> usize {
        modal_depth(self)
    }

    /// Variable names occurring in the formula.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Var(v) => {
                out.insert(v.clone());
            }
            Not(a) | Diamond(a) => a.collect_vars(out),
            And(a, b) | Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Rename variables through `f`.
    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Self {
        match self {
            Var(v) => Var(f(v)),
            Not(a) => Self::not(a.rename(f)),
            Diamond(a) => Self::diamond(a.rename(f)),
            And(a, b) => Self::and(a.rename(f), b.rename(f)),
            Or(a, b) => Self::or(a.rename(f), b.rename(f)),
        }
    }
}

/// All subformulas, including `phi` itself.
pub fn subformulas(phi: &ModalFormula) -> BTreeSet<ModalFormula> {
    let mut out = BTreeSet::new();
    fn walk(f: &ModalFormula, out: &mut BTreeSet<ModalFormula>) {
        if !out.insert(f.clone()) {
            return;
        }
        match f {
            Var(_) => {}
            Not(a) | Diamond(a) => walk(a, out),
            And(a, b) | Or(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    walk(phi, &mut out);
    out
}

pub fn modal_depth(phi: &ModalFormula) -> usize {
    match phi {
        Var(_) => 0,
        Not(a) => modal_depth(a),
        Diamond(a) => 1 + modal_depth(a),
        And(a, b) | Or(a, b) => modal_depth(a).max(modal_depth(b)),
    }
}

fn binding(f: &ModalFormula) -> u8 {
    match f {
        Or(..) => 1,
        And(..) => 2,
        _ => 3,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &ModalFormula, min: u8) -> fmt::Result {
    if binding(child) < min {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for ModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var(v) => write!(f, "{v}"),
            Not(inner) => {
                if let Diamond(d) = inner.as_ref() {
                    if let Not(body) = d.as_ref() {
                        write!(f, "[]")?;
                        return write_operand(f, body, 3);
                    }
                }
                write!(f, "~")?;
                write_operand(f, inner, 3)
            }
            Diamond(inner) => {
                write!(f, "<>")?;
                write_operand(f, inner, 3)
            }
            And(a, b) => {
                write_operand(f, a, 2)?;
                write!(f, " & ")?;
                write_operand(f, b, 3)
            }
            Or(a, b) => {
                write_operand(f, a, 1)?;
                write!(f, " | ")?;
                write_operand(f, b, 2)
            }
        }
    }
}

/// Node of a [`SubformulaTable`]; children refer to smaller ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Var(String),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Diamond(usize),
}

/// Hash-consed subformulas of a formula, numbered in post-order so that
/// every child id is smaller than its parent id.
#[derive(Clone, Debug)]
pub struct SubformulaTable {
    nodes: Vec<Node>,
    depth: Vec<usize>,
    root: usize,
}

impl SubformulaTable {
    pub fn new(phi: &ModalFormula) -> Self {
        let mut nodes = Vec::new();
        let mut depth = Vec::new();
        let mut index: HashMap<Node, usize> = HashMap::new();
        fn intern(
            f: &ModalFormula,
            nodes: &mut Vec<Node>,
            depth: &mut Vec<usize>,
            index: &mut HashMap<Node, usize>,
        ) -> usize {
            let (node, d) = match f {
                Var(v) => (Node::Var(v.clone()), 0),
                Not(a) => {
                    let a = intern(a, nodes, depth, index);
                    (Node::Not(a), depth[a])
                }
                Diamond(a) => {
                    let a = intern(a, nodes, depth, index);
                    (Node::Diamond(a), depth[a] + 1)
                }
                And(a, b) => {
                    let a = intern(a, nodes, depth, index);
                    let b = intern(b, nodes, depth, index);
                    (Node::And(a, b), depth[a].max(depth[b]))
                }
                Or(a, b) => {
                    let a = intern(a, nodes, depth, index);
                    let b = intern(b, nodes, depth, index);
                    (Node::Or(a, b), depth[a].max(depth[b]))
                }
            };
            if let Some(&id) = index.get(&node) {
                return id;
            }
            let id = nodes.len();
            nodes.push(node.clone());
            depth.push(d);
            index.insert(node, id);
            id
        }
        let root = intern(phi, &mut nodes, &mut depth, &mut index);
        SubformulaTable { nodes, depth, root }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn depth(&self, id: usize) -> usize {
        self.depth[id]
    }

    /// Ids of variables and diamonds: the subformulas whose truth is not
    /// determined propositionally by their children.
    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().enumerate().filter(|(_, n)| matches!(n, Node::Var(_) | Node::Diamond(_))).map(|(i, _)| i)
    }

    /// `(diamond id, body id)` pairs.
    pub fn diamonds(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().enumerate().filter_map(|(i, n)| match n {
            Node::Diamond(b) => Some((i, *b)),
            _ => None,
        })
    }

    /// Rebuild the formula for node `id`.
    pub fn formula(&self, id: usize) -> ModalFormula {
        match &self.nodes[id] {
            Node::Var(v) => Var(v.clone()),
            Node::Not(a) => ModalFormula::not(self.formula(*a)),
            Node::Diamond(a) => ModalFormula::diamond(self.formula(*a)),
            Node::And(a, b) => ModalFormula::and(self.formula(*a), self.formula(*b)),
            Node::Or(a, b) => ModalFormula::or(self.formula(*a), self.formula(*b)),
        }
    }
}
