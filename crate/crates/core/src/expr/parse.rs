//! Concrete s-expression syntax for both calculi.
//!
//! ```text
//! cw:  E ::= v(INT) | oplus(E,E) | eta(INT,INT,E) | rho(INT,INT,E)
//! nlc: E ::= v(INT) | times(PAIRS,E,E) | ren(MAP,E)
//!      PAIRS ::= { [ (INT,INT) { ; (INT,INT) } ] }
//!      MAP   ::= { INT:INT { ; INT:INT } }
//! ```
//!
//! A file may start with a header line `k <int>` declaring the alphabet size;
//! otherwise `k` is the largest label mentioned. Whitespace is insignificant.

use std::collections::HashMap;
use std::fmt;

use super::{CwExpr, CwNode, JoinRelation, NlcExpr, NlcNode, Relabeling, WidthExpr};
use super::Calculus;
use crate::error::{Error, Result};
use crate::graph::Label;

/// Parses `text` in the given calculus.
pub fn parse_expr(text: &str, calculus: Calculus) -> Result<WidthExpr> {
    match calculus {
        Calculus::CliqueWidth => parse_cw(text).map(WidthExpr::Cw),
        Calculus::Nlc => parse_nlc(text).map(WidthExpr::Nlc),
    }
}

pub fn parse_cw(text: &str) -> Result<CwExpr> {
    let mut p = Parser::new(text);
    let declared = p.header()?;
    let root = p.cw()?;
    p.end()?;
    CwExpr::new(root, declared)
}

pub fn parse_nlc(text: &str) -> Result<NlcExpr> {
    let mut p = Parser::new(text);
    let declared = p.header()?;
    let raw = p.nlc()?;
    p.end()?;
    let max = raw.max_label();
    let k = match declared {
        Some(k) if k < max => {
            return Err(Error::input(format!("label {max} exceeds declared k = {k}")));
        }
        Some(k) => k,
        None => max,
    };
    if k == 0 || k > super::MAX_LABELS {
        return Err(Error::input(format!("label alphabet size {k} outside 1..={}", super::MAX_LABELS)));
    }
    NlcExpr::new(raw.build(k)?, k)
}

impl WidthExpr {
    /// Parses either calculus, deciding by the operation keywords present.
    /// A bare `v(a)` is read as a clique-width expression.
    pub fn parse(text: &str) -> Result<WidthExpr> {
        parse_expr(text, detect_calculus(text)?)
    }

    /// Header line plus expression; [`WidthExpr::parse`] inverts it.
    pub fn to_text(&self) -> String {
        match self {
            WidthExpr::Cw(x) => x.to_text(),
            WidthExpr::Nlc(x) => x.to_text(),
        }
    }
}

/// Calculus of an expression text, from its keywords.
pub fn detect_calculus(text: &str) -> Result<Calculus> {
    let mut cw = false;
    let mut nlc = false;
    for word in text.split(|c: char| !c.is_ascii_alphanumeric()) {
        match word {
            "oplus" | "eta" | "rho" => cw = true,
            "times" | "ren" => nlc = true,
            _ => {}
        }
    }
    match (cw, nlc) {
        (true, true) => Err(Error::input("expression mixes clique-width and NLC operations")),
        (false, true) => Ok(Calculus::Nlc),
        _ => Ok(Calculus::CliqueWidth),
    }
}

impl CwExpr {
    pub fn to_text(&self) -> String {
        format!("k {}\n{}\n", self.k, self.root)
    }
}

impl NlcExpr {
    pub fn to_text(&self) -> String {
        format!("k {}\n{}\n", self.k, self.root)
    }
}

impl fmt::Display for CwNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwNode::Leaf(a) => write!(f, "v({a})"),
            CwNode::Union(l, r) => write!(f, "oplus({l},{r})"),
            CwNode::AddEdges(a, b, c) => write!(f, "eta({a},{b},{c})"),
            CwNode::Relabel(a, b, c) => write!(f, "rho({a},{b},{c})"),
        }
    }
}

impl fmt::Display for NlcNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NlcNode::Leaf(a) => write!(f, "v({a})"),
            NlcNode::Join(s, l, r) => write!(f, "times({},{l},{r})", pairs_to_string(s)),
            NlcNode::Relabel(m, c) => write!(f, "ren({},{c})", map_to_string(m)),
        }
    }
}

impl fmt::Display for CwExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

impl fmt::Display for NlcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

impl fmt::Display for WidthExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WidthExpr::Cw(x) => x.fmt(f),
            WidthExpr::Nlc(x) => x.fmt(f),
        }
    }
}

pub(crate) fn pairs_to_string(s: &JoinRelation) -> String {
    let inner: Vec<String> = s.pairs().map(|(a, b)| format!("({a},{b})")).collect();
    format!("{{{}}}", inner.join(";"))
}

pub(crate) fn map_to_string(m: &Relabeling) -> String {
    let mut inner: Vec<String> = m.moved().map(|(a, b)| format!("{a}:{b}")).collect();
    if inner.is_empty() {
        inner.push("1:1".into());
    }
    format!("{{{}}}", inner.join(";"))
}

/// NLC syntax tree before `k` is known.
enum RawNlc {
    Leaf(Label),
    Join(Vec<(Label, Label)>, Box<RawNlc>, Box<RawNlc>),
    Relabel(Vec<(Label, Label)>, Box<RawNlc>),
}

impl RawNlc {
    fn max_label(&self) -> Label {
        match self {
            RawNlc::Leaf(a) => *a,
            RawNlc::Join(s, l, r) => s
                .iter()
                .map(|&(a, b)| a.max(b))
                .chain([l.max_label(), r.max_label()])
                .max()
                .unwrap_or(0),
            RawNlc::Relabel(m, c) => m
                .iter()
                .map(|&(a, b)| a.max(b))
                .chain([c.max_label()])
                .max()
                .unwrap_or(0),
        }
    }

    fn build(self, k: usize) -> Result<NlcNode> {
        Ok(match self {
            RawNlc::Leaf(a) => NlcNode::Leaf(a),
            RawNlc::Join(s, l, r) => {
                NlcNode::join(JoinRelation::from_pairs(k, s)?, l.build(k)?, r.build(k)?)
            }
            RawNlc::Relabel(m, c) => NlcNode::relabel(Relabeling::from_entries(k, m)?, c.build(k)?),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::syntax(self.line, self.column, msg))
    }

    fn bump(&mut self) {
        if self.src[self.pos] == b'\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.bump();
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.bump();
                Ok(())
            }
            Some(got) => self.error(format!("expected `{}`, found `{}`", c as char, got as char)),
            None => self.error(format!("expected `{}`, found end of input", c as char)),
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.bump();
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&c) => self.error(format!("expected an operation, found `{}`", c as char)),
                None => self.error("expected an operation, found end of input"),
            };
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.bump();
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::syntax(line, column, "integer out of range"))
    }

    fn label(&mut self) -> Result<Label> {
        let (line, column) = (self.line, self.column);
        let a = self.int()?;
        if a == 0 {
            return Err(Error::syntax(line, column, "labels start at 1"));
        }
        Ok(a)
    }

    /// Optional `k <int>` header.
    fn header(&mut self) -> Result<Option<usize>> {
        if self.peek() == Some(b'k') {
            let save = (self.pos, self.line, self.column);
            self.bump();
            match self.src.get(self.pos) {
                Some(c) if c.is_ascii_whitespace() => {
                    let k = self.int()?;
                    if k == 0 {
                        return self.error("declared k must be positive");
                    }
                    return Ok(Some(k));
                }
                _ => (self.pos, self.line, self.column) = save,
            }
        }
        Ok(None)
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{}` after expression", c as char)),
        }
    }

    fn cw(&mut self) -> Result<CwNode> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let op = self.ident()?;
        self.expect(b'(')?;
        let node = match op {
            "v" => CwNode::Leaf(self.label()?),
            "oplus" => {
                let l = self.cw()?;
                self.expect(b',')?;
                CwNode::union(l, self.cw()?)
            }
            "eta" | "rho" => {
                let a = self.label()?;
                self.expect(b',')?;
                let b = self.label()?;
                if a == b {
                    return Err(Error::syntax(
                        line,
                        column,
                        format!("{op} needs two distinct labels, got {a} twice"),
                    ));
                }
                self.expect(b',')?;
                let c = self.cw()?;
                if op == "eta" {
                    CwNode::add_edges(a, b, c)
                } else {
                    CwNode::relabel(a, b, c)
                }
            }
            other => {
                return Err(Error::syntax(
                    line,
                    column,
                    format!("unknown clique-width operation `{other}`"),
                ))
            }
        };
        self.expect(b')')?;
        Ok(node)
    }

    fn nlc(&mut self) -> Result<RawNlc> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let op = self.ident()?;
        self.expect(b'(')?;
        let node = match op {
            "v" => RawNlc::Leaf(self.label()?),
            "times" => {
                let s = self.pairs()?;
                self.expect(b',')?;
                let l = self.nlc()?;
                self.expect(b',')?;
                let r = self.nlc()?;
                RawNlc::Join(s, Box::new(l), Box::new(r))
            }
            "ren" => {
                let m = self.map()?;
                self.expect(b',')?;
                RawNlc::Relabel(m, Box::new(self.nlc()?))
            }
            other => {
                return Err(Error::syntax(
                    line,
                    column,
                    format!("unknown NLC operation `{other}`"),
                ))
            }
        };
        self.expect(b')')?;
        Ok(node)
    }

    fn pairs(&mut self) -> Result<Vec<(Label, Label)>> {
        self.expect(b'{')?;
        let mut out = Vec::new();
        if self.peek() == Some(b'}') {
            self.bump();
            return Ok(out);
        }
        loop {
            self.expect(b'(')?;
            let a = self.label()?;
            self.expect(b',')?;
            let b = self.label()?;
            self.expect(b')')?;
            out.push((a, b));
            match self.peek() {
                Some(b';') => self.bump(),
                _ => break,
            }
        }
        self.expect(b'}')?;
        Ok(out)
    }

    fn map(&mut self) -> Result<Vec<(Label, Label)>> {
        self.expect(b'{')?;
        let mut out = Vec::new();
        let mut seen: HashMap<Label, Label> = HashMap::new();
        loop {
            self.skip_ws();
            let (line, column) = (self.line, self.column);
            let a = self.label()?;
            self.expect(b':')?;
            let b = self.label()?;
            if let Some(&prev) = seen.get(&a) {
                if prev != b {
                    return Err(Error::syntax(
                        line,
                        column,
                        format!("relabel map sends {a} to both {prev} and {b}"),
                    ));
                }
            }
            seen.insert(a, b);
            out.push((a, b));
            match self.peek() {
                Some(b';') => self.bump(),
                _ => break,
            }
        }
        self.expect(b'}')?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let x = parse_cw("eta(1,2,oplus(v(1),v(2)))").unwrap();
        assert_eq!(x.k(), 2);
        assert_eq!(
            x.root(),
            &CwNode::add_edges(1, 2, CwNode::union(CwNode::Leaf(1), CwNode::Leaf(2)))
        );
    }

    #[test]
    fn parses_nlc_leaf() {
        let x = parse_nlc("v(1)").unwrap();
        assert_eq!(x.k(), 1);
        assert_eq!(x.root(), &NlcNode::Leaf(1));
    }

    #[test]
    fn rejects_equal_labels_in_eta() {
        let err = parse_cw("eta(1,1,v(1))").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 1, .. }), "{err}");
    }

    #[test]
    fn header_declares_larger_alphabet() {
        let x = parse_cw("k 4\nv(1)").unwrap();
        assert_eq!(x.k(), 4);
        assert!(parse_cw("k 1\nv(2)").is_err());
        assert!(parse_nlc("k 1\ntimes({(1,2)},v(1),v(1))").is_err());
        assert!(parse_cw("k 0\nv(1)").is_err());
    }

    #[test]
    fn nlc_syntax() {
        let x = parse_nlc("times({(1,2);(2,3)}, ren({2:1;3:2}, v(3)), v(2))").unwrap();
        assert_eq!(x.k(), 3);
        let NlcNode::Join(s, l, _) = x.root() else {
            panic!("expected a join")
        };
        assert!(s.contains(1, 2) && s.contains(2, 3) && !s.contains(2, 1));
        let NlcNode::Relabel(m, _) = l.as_ref() else {
            panic!("expected a relabeling")
        };
        assert_eq!((m.apply(1), m.apply(2), m.apply(3)), (1, 1, 2));
        assert!(parse_nlc("times({}, v(1), v(1))").is_ok());
        assert!(parse_nlc("ren({1:2;1:3}, v(1))").is_err());
        assert!(parse_nlc("ren({}, v(1))").is_err());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_cw("oplus(v(1),\n  w(2))").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 3, .. }), "{err}");
        assert!(parse_cw("v(0)").is_err());
        assert!(parse_cw("v(1) v(2)").is_err());
        assert!(parse_cw("oplus(v(1)").is_err());
    }

    #[test]
    fn detects_calculus() {
        assert_eq!(detect_calculus("v(1)").unwrap(), Calculus::CliqueWidth);
        assert_eq!(detect_calculus("times({},v(1),v(1))").unwrap(), Calculus::Nlc);
        assert_eq!(detect_calculus("rho(1,2,v(1))").unwrap(), Calculus::CliqueWidth);
        assert!(detect_calculus("times({},v(1),eta(1,2,v(1)))").is_err());
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "eta(1,2,oplus(rho(2,1,v(2)),v(2)))",
            "k 5\noplus(v(1),v(3))",
        ] {
            let x = parse_cw(text).unwrap();
            assert_eq!(parse_cw(&x.to_text()).unwrap(), x);
        }
        let y = parse_nlc("ren({1:1}, times({(1,1)}, v(1), v(1)))").unwrap();
        assert_eq!(parse_nlc(&y.to_text()).unwrap(), y);
    }
}
