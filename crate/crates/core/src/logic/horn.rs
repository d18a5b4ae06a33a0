use std::fmt;

use serde::{Deserialize, Serialize};

use super::ParseError;

/// Head of a Horn clause, over variable indices of the clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conclusion {
    Edge(usize, usize),
    False,
}

/// A universal Horn clause `preq -> conclusion` over clause-local variables.
///
/// Variables are kept in order of first appearance; `preq` keeps its
/// edges in order of first appearance with duplicates removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HornClause {
    vars: Vec<String>,
    preq: Vec<(usize, usize)>,
    conclusion: Conclusion,
}

/// How the conclusion relates to the prerequisite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConclusionShape {
    /// `FALSE`.
    False,
    /// `(x, x)` with `x` absent from the prerequisite graph.
    FreeLoop,
    /// `(x, y)` with `x = y` or both endpoints in one connected component.
    Local,
    /// Endpoints in different components, or an endpoint (with `x != y`)
    /// absent from the prerequisite graph.
    Disconnected,
}

impl HornClause {
    /// Build a clause from named atoms. Conclusion `None` means `FALSE`.
    pub fn new<S: AsRef<str>>(preq: &[(S, S)], conclusion: Option<(S, S)>) -> Self {
        let mut c = HornClause { vars: Vec::new(), preq: Vec::new(), conclusion: Conclusion::False };
        for (a, b) in preq {
            let a = c.intern(a.as_ref());
            let b = c.intern(b.as_ref());
            if !c.preq.contains(&(a, b)) {
                c.preq.push((a, b));
            }
        }
        if let Some((x, y)) = conclusion {
            let x = c.intern(x.as_ref());
            let y = c.intern(y.as_ref());
            c.conclusion = Conclusion::Edge(x, y);
        }
        c
    }

    fn intern(&mut self, name: &str) -> usize {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return i;
        }
        self.vars.push(name.to_string());
        self.vars.len() - 1
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn preq(&self) -> &[(usize, usize)] {
        &self.preq
    }

    pub fn preq_names(&self) -> Vec<(&str, &str)> {
        self.preq.iter().map(|&(a, b)| (self.vars[a].as_str(), self.vars[b].as_str())).collect()
    }

    pub fn conclusion(&self) -> Conclusion {
        self.conclusion
    }

    pub fn conclusion_names(&self) -> Option<(&str, &str)> {
        match self.conclusion {
            Conclusion::Edge(x, y) => Some((&self.vars[x], &self.vars[y])),
            Conclusion::False => None,
        }
    }

    /// Whether variable `v` occurs in some prerequisite atom.
    pub fn in_preq(&self, v: usize) -> bool {
        self.preq.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Variables occurring in the prerequisite graph, ascending.
    pub fn preq_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&v| self.in_preq(v)).collect()
    }

    /// Connected components (undirected) of the prerequisite graph, each a
    /// sorted list of variables; components are ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vars.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in self.preq_vars() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &(a, b) in &self.preq {
                    let other = if a == u {
                        b
                    } else if b == u {
                        a
                    } else {
                        continue;
                    };
                    if comp[other] == usize::MAX {
                        comp[other] = id;
                        members.push(other);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Prerequisite edges restricted to `members`.
    pub fn component_edges(&self, members: &[usize]) -> Vec<(usize, usize)> {
        self.preq.iter().copied().filter(|(a, b)| members.contains(a) && members.contains(b)).collect()
    }

    /// Whether `x` and `y` are joined by an undirected path in the
    /// prerequisite graph (a variable is joined to itself only if present).
    pub fn connected_in_preq(&self, x: usize, y: usize) -> bool {
        self.components().iter().any(|c| c.contains(&x) && c.contains(&y))
    }

    pub fn shape(&self) -> ConclusionShape {
        match self.conclusion {
            Conclusion::False => ConclusionShape::False,
            Conclusion::Edge(x, y) if x == y && !self.in_preq(x) => ConclusionShape::FreeLoop,
            Conclusion::Edge(x, y) if x == y || self.connected_in_preq(x, y) => ConclusionShape::Local,
            Conclusion::Edge(..) => ConclusionShape::Disconnected,
        }
    }
}

impl fmt::Display for HornClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> =
            self.preq.iter().map(|&(a, b)| format!("{} R {}", self.vars[a], self.vars[b])).collect();
        if !body.is_empty() {
            write!(f, "{} ", body.join(", "))?;
        }
        match self.conclusion {
            Conclusion::Edge(x, y) => write!(f, "-> {} R {}", self.vars[x], self.vars[y]),
            Conclusion::False => write!(f, "-> false"),
        }
    }
}

/// Conjunction of Horn clauses, in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HornFormula {
    pub clauses: Vec<HornClause>,
}

impl HornFormula {
    pub fn new(clauses: Vec<HornClause>) -> Self {
        HornFormula { clauses }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &HornClause> {
        self.clauses.iter()
    }

    /// Concatenate the clauses of both formulas.
    pub fn and(mut self, other: &HornFormula) -> Self {
        self.clauses.extend(other.clauses.iter().cloned());
        self
    }

    /// Size of the largest connected component over all prerequisite graphs.
    pub fn locality_radius(&self) -> usize {
        self.clauses.iter().flat_map(|c| c.components()).map(|c| c.len()).max().unwrap_or(0)
    }
}

impl From<HornClause> for HornFormula {
    fn from(c: HornClause) -> Self {
        HornFormula::new(vec![c])
    }
}

impl fmt::Display for HornFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

#[derive(Debug, PartialEq)]
enum HTok<'a> {
    Name(&'a str),
    Comma,
    Arrow,
}

fn lex_clause(text: &str, base: usize) -> Result<Vec<(usize, HTok<'_>)>, ParseError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b',' {
            out.push((base + i, HTok::Comma));
            i += 1;
        } else if c == b'-' && b.get(i + 1) == Some(&b'>') {
            out.push((base + i, HTok::Arrow));
            i += 2;
        } else if is_ident_start(c) {
            let s = i;
            while i < b.len() && is_ident(b[i]) {
                i += 1;
            }
            out.push((base + s, HTok::Name(&text[s..i])));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(ParseError::UnknownToken { offset: base + i, found: ch.to_string() });
        }
    }
    Ok(out)
}

type Atom = (String, String);

fn parse_atoms(toks: &[(usize, HTok<'_>)], end: usize) -> Result<Vec<Atom>, ParseError> {
    let mut atoms = Vec::new();
    let mut i = 0;
    let err = |i: usize, what: &str| {
        let offset = toks.get(i).map(|t| t.0).unwrap_or(end);
        ParseError::Syntax { offset, message: format!("expected {what}") }
    };
    loop {
        let (Some((_, HTok::Name(a))), Some((_, HTok::Name("R"))), Some((_, HTok::Name(b)))) =
            (toks.get(i), toks.get(i + 1), toks.get(i + 2))
        else {
            return Err(err(i, "an atom `x R y`"));
        };
        atoms.push((a.to_string(), b.to_string()));
        i += 3;
        match toks.get(i) {
            None => return Ok(atoms),
            Some((_, HTok::Comma)) => i += 1,
            Some(_) => return Err(err(i, "`,`")),
        }
    }
}

fn parse_clause(text: &str, base: usize) -> Result<Option<HornClause>, ParseError> {
    let toks = lex_clause(text, base)?;
    if toks.is_empty() {
        return Ok(None);
    }
    let end = base + text.len();
    let arrows: Vec<usize> = toks.iter().enumerate().filter(|(_, t)| t.1 == HTok::Arrow).map(|(i, _)| i).collect();
    let arrow = match arrows.as_slice() {
        [a] => *a,
        [] => return Err(ParseError::Syntax { offset: end, message: "expected `->`".into() }),
        [_, b, ..] => return Err(ParseError::Syntax { offset: toks[*b].0, message: "unexpected second `->`".into() }),
    };
    let body = if arrow == 0 { Vec::new() } else { parse_atoms(&toks[..arrow], toks[arrow].0)? };
    let head = &toks[arrow + 1..];
    let conclusion = match head {
        [(_, HTok::Name("false"))] => None,
        [] => return Err(ParseError::Syntax { offset: end, message: "expected a head after `->`".into() }),
        _ => {
            let atoms = parse_atoms(head, end)?;
            if atoms.len() > 1 {
                return Err(ParseError::MultipleHeadAtoms { offset: head[0].0 });
            }
            atoms.into_iter().next()
        }
    };
    Ok(Some(HornClause::new(&body, conclusion)))
}

/// Parse a Horn formula: clauses separated by `;` or newlines, `#` starts a
/// comment running to the end of the line.
pub fn parse_horn(text: &str) -> Result<HornFormula, ParseError> {
    let mut clauses = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut local = 0;
        for piece in content.split(';') {
            if let Some(c) = parse_clause(piece, offset + local)? {
                clauses.push(c);
            }
            local += piece.len() + 1;
        }
        offset += line.len();
    }
    Ok(HornFormula { clauses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitivity() {
        let f = parse_horn("x R y, y R z -> x R z").unwrap();
        assert_eq!(f.len(), 1);
        let c = &f.clauses[0];
        assert_eq!(c.preq_names(), vec![("x", "y"), ("y", "z")]);
        assert_eq!(c.conclusion_names(), Some(("x", "z")));
        assert_eq!(c.shape(), ConclusionShape::Local);
    }

    #[test]
    fn reflexivity_and_false() {
        let f = parse_horn("-> x R x\nx R y -> false").unwrap();
        assert!(f.clauses[0].preq().is_empty());
        assert_eq!(f.clauses[0].conclusion_names(), Some(("x", "x")));
        assert_eq!(f.clauses[0].shape(), ConclusionShape::FreeLoop);
        assert_eq!(f.clauses[1].conclusion(), Conclusion::False);
        assert_eq!(f.clauses[1].shape(), ConclusionShape::False);
    }

    #[test]
    fn duplicates_collapse() {
        let f = parse_horn("x R y, x R y -> y R x").unwrap();
        assert_eq!(f.clauses[0].preq().len(), 1);
    }

    #[test]
    fn separators_and_comments() {
        let f = parse_horn("# symmetric\nx R y -> y R x; -> x R x\n\n  \n").unwrap();
        assert_eq!(f.len(), 2);
        assert!(parse_horn("").unwrap().is_empty());
    }

    #[test]
    fn head_with_two_atoms() {
        assert!(matches!(parse_horn("x R y -> y R x, x R x"), Err(ParseError::MultipleHeadAtoms { .. })));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_horn("x R y -> y R x;\nx y -> x R x") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 16),
            other => panic!("{other:?}"),
        }
        assert!(parse_horn("x R y").is_err());
        assert!(parse_horn("x R y ->").is_err());
        assert!(parse_horn("x R y -> -> x R y").is_err());
        assert!(matches!(parse_horn("x R y -> y % x"), Err(ParseError::UnknownToken { .. })));
    }

    #[test]
    fn disconnected_shapes() {
        let f = parse_horn("u R v -> x R y\nx R y, z R w -> x R w\nx R y -> x R z").unwrap();
        for c in &f.clauses {
            assert_eq!(c.shape(), ConclusionShape::Disconnected, "{c}");
        }
        assert_eq!(f.clauses[1].components().len(), 2);
        assert_eq!(f.locality_radius(), 2);
    }

    #[test]
    fn display_round_trip() {
        let text = "a R b, c R d, a R d -> d R c\n-> x R x\nx R y -> false";
        let f = parse_horn(text).unwrap();
        assert_eq!(f.to_string(), text);
        assert_eq!(parse_horn(&f.to_string()).unwrap(), f);
    }
}
