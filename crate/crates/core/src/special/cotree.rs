use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{JoinRelation, NlcExpr, NlcNode};
use crate::graph::{Graph, ParamReport};

/// Binary co-tree. Vertices are numbered leftmost leaf first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoTree {
    Leaf,
    Union(Box<CoTree>, Box<CoTree>),
    Join(Box<CoTree>, Box<CoTree>),
}

impl CoTree {
    pub fn union(l: CoTree, r: CoTree) -> Self {
        CoTree::Union(Box::new(l), Box::new(r))
    }

    pub fn join(l: CoTree, r: CoTree) -> Self {
        CoTree::Join(Box::new(l), Box::new(r))
    }

    pub fn leaf_count(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                CoTree::Leaf => count += 1,
                CoTree::Union(l, r) | CoTree::Join(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        count
    }

    /// The co-graph defined by the tree.
    pub fn to_graph(&self) -> Graph {
        let n = self.leaf_count();
        let mut edges = Vec::new();
        self.fold(
            &mut |_| (),
            &mut |_, _| (),
            &mut |(lo, mid), (_, hi)| {
                for u in lo..mid {
                    for v in mid..hi {
                        edges.push((u + 1, v + 1));
                    }
                }
            },
        );
        Graph::new(n, edges).expect("co-tree edges are simple")
    }

    /// NLC-width 1 encoding: union is `times({})` and join is `times({(1,1)})`.
    pub fn to_nlc(&self) -> NlcExpr {
        let none = JoinRelation::empty(1);
        let all = JoinRelation::from_pairs(1, [(1, 1)]).expect("valid pair");
        let root = self.fold_values(
            &|| NlcNode::Leaf(1),
            &|l, r| NlcNode::join(none.clone(), l, r),
            &|l, r| NlcNode::join(all.clone(), l, r),
        );
        NlcExpr::new(root, 1).expect("single-label expression")
    }

    /// Post-order walk handing each internal node the vertex ranges
    /// `(start, end)` of its two subtrees.
    fn fold(
        &self,
        leaf: &mut dyn FnMut(usize),
        union: &mut dyn FnMut((usize, usize), (usize, usize)),
        join: &mut dyn FnMut((usize, usize), (usize, usize)),
    ) {
        enum Step<'a> {
            Enter(&'a CoTree),
            Exit(&'a CoTree),
        }
        let mut next = 0;
        let mut ranges: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![Step::Enter(self)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Enter(CoTree::Leaf) => {
                    leaf(next);
                    ranges.push((next, next + 1));
                    next += 1;
                }
                Step::Enter(t @ (CoTree::Union(l, r) | CoTree::Join(l, r))) => {
                    stack.push(Step::Exit(t));
                    stack.push(Step::Enter(r));
                    stack.push(Step::Enter(l));
                }
                Step::Exit(t) => {
                    let b = ranges.pop().expect("right range");
                    let a = ranges.pop().expect("left range");
                    match t {
                        CoTree::Union(..) => union(a, b),
                        _ => join(a, b),
                    }
                    ranges.push((a.0, b.1));
                }
            }
        }
    }

    fn fold_values<T>(
        &self,
        leaf: &dyn Fn() -> T,
        union: &dyn Fn(T, T) -> T,
        join: &dyn Fn(T, T) -> T,
    ) -> T {
        enum Step<'a> {
            Enter(&'a CoTree),
            Exit(&'a CoTree),
        }
        let mut values: Vec<T> = Vec::new();
        let mut stack = vec![Step::Enter(self)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Enter(CoTree::Leaf) => values.push(leaf()),
                Step::Enter(t @ (CoTree::Union(l, r) | CoTree::Join(l, r))) => {
                    stack.push(Step::Exit(t));
                    stack.push(Step::Enter(r));
                    stack.push(Step::Enter(l));
                }
                Step::Exit(t) => {
                    let b = values.pop().expect("right value");
                    let a = values.pop().expect("left value");
                    values.push(match t {
                        CoTree::Union(..) => union(a, b),
                        _ => join(a, b),
                    });
                }
            }
        }
        values.pop().expect("root value")
    }
}

impl Drop for CoTree {
    fn drop(&mut self) {
        let mut stack = Vec::new();
        if let CoTree::Union(l, r) | CoTree::Join(l, r) = self {
            stack.push(std::mem::replace(l.as_mut(), CoTree::Leaf));
            stack.push(std::mem::replace(r.as_mut(), CoTree::Leaf));
        }
        while let Some(mut t) = stack.pop() {
            if let CoTree::Union(l, r) | CoTree::Join(l, r) = &mut t {
                stack.push(std::mem::replace(l.as_mut(), CoTree::Leaf));
                stack.push(std::mem::replace(r.as_mut(), CoTree::Leaf));
            }
        }
    }
}

impl fmt::Display for CoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Token<'a> {
            Tree(&'a CoTree),
            Text(&'static str),
        }
        let mut stack = vec![Token::Tree(self)];
        while let Some(token) = stack.pop() {
            match token {
                Token::Text(s) => f.write_str(s)?,
                Token::Tree(CoTree::Leaf) => f.write_str("l")?,
                Token::Tree(t @ (CoTree::Union(l, r) | CoTree::Join(l, r))) => {
                    f.write_str(if matches!(t, CoTree::Union(..)) { "u(" } else { "x(" })?;
                    stack.extend([Token::Text(")"), Token::Tree(r), Token::Text(","), Token::Tree(l)]);
                }
            }
        }
        Ok(())
    }
}

/// Parses `E ::= l | u(E,E) | x(E,E)`. Whitespace is ignored.
pub fn parse_cotree(text: &str) -> Result<CoTree> {
    enum Frame {
        Union,
        Join,
    }
    let chars: Vec<(usize, usize, char)> = {
        let (mut line, mut column) = (1, 1);
        let mut out = Vec::new();
        for c in text.chars() {
            if !c.is_whitespace() {
                out.push((line, column, c));
            }
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        out
    };
    let end = {
        let (line, column) = (text.lines().count().max(1), text.lines().last().map_or(0, |l| l.chars().count()) + 1);
        (line, column)
    };
    let mut pos = 0;
    let expect = |want: char, pos: &mut usize| -> Result<()> {
        match chars.get(*pos) {
            Some(&(_, _, c)) if c == want => {
                *pos += 1;
                Ok(())
            }
            Some(&(line, column, c)) => Err(Error::syntax(line, column, format!("expected '{want}', found '{c}'"))),
            None => Err(Error::syntax(end.0, end.1, format!("expected '{want}', found end of input"))),
        }
    };
    // Operators waiting for operands, with the operands collected so far.
    let mut stack: Vec<(Frame, Vec<CoTree>)> = Vec::new();
    loop {
        let mut done = match chars.get(pos) {
            Some(&(_, _, 'l')) => {
                pos += 1;
                CoTree::Leaf
            }
            Some(&(_, _, c @ ('u' | 'x'))) => {
                pos += 1;
                expect('(', &mut pos)?;
                stack.push((if c == 'u' { Frame::Union } else { Frame::Join }, Vec::new()));
                continue;
            }
            Some(&(line, column, c)) => {
                return Err(Error::syntax(line, column, format!("expected 'l', 'u' or 'x', found '{c}'")))
            }
            None => return Err(Error::syntax(end.0, end.1, "expected 'l', 'u' or 'x', found end of input")),
        };
        loop {
            let Some((frame, operands)) = stack.last_mut() else {
                if let Some(&(line, column, c)) = chars.get(pos) {
                    return Err(Error::syntax(line, column, format!("unexpected '{c}' after co-tree")));
                }
                return Ok(done);
            };
            operands.push(done);
            if operands.len() == 1 {
                expect(',', &mut pos)?;
                break;
            }
            expect(')', &mut pos)?;
            let r = operands.pop().expect("right operand");
            let l = operands.pop().expect("left operand");
            done = match frame {
                Frame::Union => CoTree::union(l, r),
                Frame::Join => CoTree::join(l, r),
            };
            stack.pop();
        }
    }
}

/// `alpha` adds over unions and takes the maximum over joins; `omega` is the
/// dual. Co-graphs are perfect, so `chi = omega` and `theta = alpha`.
pub fn cotree_params(t: &CoTree) -> ParamReport {
    let (alpha, omega) = t.fold_values(
        &|| (1usize, 1usize),
        &|(a1, o1), (a2, o2)| (a1 + a2, o1.max(o2)),
        &|(a1, o1), (a2, o2)| (a1.max(a2), o1 + o2),
    );
    ParamReport::new(alpha, omega, omega, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let t = parse_cotree(" x( u(l,l),\n l )").unwrap();
        assert_eq!(t, CoTree::join(CoTree::union(CoTree::Leaf, CoTree::Leaf), CoTree::Leaf));
        assert_eq!(t.to_string(), "x(u(l,l),l)");
        assert_eq!(t.leaf_count(), 3);
        assert_eq!(parse_cotree("l").unwrap(), CoTree::Leaf);
    }

    #[test]
    fn syntax_errors_have_positions() {
        for (text, line, column) in [("u(l)", 1, 4), ("u(l,l", 1, 6), ("q", 1, 1), ("l l", 1, 3), ("x(l,\n  y)", 2, 3), ("", 1, 1)] {
            match parse_cotree(text) {
                Err(Error::Syntax { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn p3_complement_is_k1_plus_k2() {
        // x(l, u(l,l)) is P3 with centre 1.
        let t = parse_cotree("x(l,u(l,l))").unwrap();
        let g = t.to_graph();
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);
        assert_eq!(cotree_params(&t), ParamReport::new(2, 2, 2, 2));
        assert_eq!(t.to_nlc().eval().graph(), &g);
    }

    #[test]
    fn complete_multipartite() {
        let t = parse_cotree("x(u(l,u(l,l)),u(l,l))").unwrap();
        assert_eq!(cotree_params(&t), ParamReport::new(3, 2, 2, 3));
        assert_eq!(t.to_graph().edge_count(), 6);
    }

    #[test]
    fn deep_trees_do_not_overflow() {
        let mut t = CoTree::Leaf;
        for i in 0..200_000 {
            t = if i % 2 == 0 { CoTree::union(t, CoTree::Leaf) } else { CoTree::join(t, CoTree::Leaf) };
        }
        let text = t.to_string();
        let parsed = parse_cotree(&text).unwrap();
        assert_eq!(parsed.leaf_count(), 200_001);
        assert_eq!(cotree_params(&parsed).alpha, 100_001);
    }
}
