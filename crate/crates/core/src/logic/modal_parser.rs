use super::formula::ModalFormula;
use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Diamond,
    Box,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Colon,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Tilde => "`~`".into(),
            Tok::Diamond => "`<>`".into(),
            Tok::Box => "`[]`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = bytes.get(i..i + 2);
        let tok = match c {
            b'~' => Tok::Tilde,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b':' => Tok::Colon,
            b'<' if two == Some(b"<>") => Tok::Diamond,
            b'[' if two == Some(b"[]") => Tok::Box,
            b'-' if two == Some(b"->") => Tok::Arrow,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::UnknownToken { offset: i, found: ch.to_string() });
            }
        };
        let width = match tok {
            Tok::Diamond | Tok::Box | Tok::Arrow => 2,
            _ => 1,
        };
        out.push((i, tok));
        i += width;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::Syntax {
                offset: self.offset(),
                message: format!("expected {expected}, found {}", t.describe()),
            },
            None => {
                ParseError::Syntax { offset: self.end, message: format!("expected {expected}, found end of input") }
            }
        }
    }

    fn implication(&mut self) -> Result<ModalFormula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(ModalFormula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<ModalFormula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            acc = ModalFormula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<ModalFormula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            acc = ModalFormula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ModalFormula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(ModalFormula::not(self.unary()?))
            }
            Some(Tok::Diamond) => {
                self.pos += 1;
                Ok(ModalFormula::diamond(self.unary()?))
            }
            Some(Tok::Box) => {
                self.pos += 1;
                Ok(ModalFormula::boxed(self.unary()?))
            }
            Some(Tok::Ident(name)) => {
                let f = ModalFormula::var(name.clone());
                self.pos += 1;
                Ok(f)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.implication()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parse a modal formula. `[]` and `->` are desugared on the fly.
pub fn parse_modal(text: &str) -> Result<ModalFormula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0, end: text.len() };
    let f = p.implication()?;
    if p.pos != toks.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

/// Parse a prefix of quantifier tokens (`Ap`, `Eq`, ...) followed by `:` and
/// a formula. Returns the raw prefix tokens and the matrix.
pub(crate) fn parse_prefixed(text: &str) -> Result<(Vec<(usize, String)>, ModalFormula), ParseError> {
    let toks = lex(text)?;
    let colon = toks
        .iter()
        .position(|(_, t)| *t == Tok::Colon)
        .ok_or(ParseError::Syntax { offset: text.len(), message: "expected `:` after the quantifier prefix".into() })?;
    let mut prefix = Vec::new();
    for (off, tok) in &toks[..colon] {
        match tok {
            Tok::Ident(s) => prefix.push((*off, s.clone())),
            other => {
                return Err(ParseError::Syntax {
                    offset: *off,
                    message: format!("expected a quantifier token, found {}", other.describe()),
                })
            }
        }
    }
    let rest = &toks[colon + 1..];
    let mut p = Parser { toks: rest, pos: 0, end: text.len() };
    let f = p.implication()?;
    if p.pos != rest.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok((prefix, f))
}
