//! Bracket grammar:
//!
//! ```text
//! leaf      := "*"
//! unpainted := "(" child (" " child)* ")"
//! painted   := ("u" | "p" | "b") "(" child (" " child)* ")"
//! child     := leaf | vertex ("@" p "/" q)?
//! ```
//!
//! The length suffix sits on every non-root vertex whose outgoing edge is
//! internal, in lowest terms (`"@1"` for integers).

use super::{Inner, Node, Tree, VertexKind};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub(super) fn write_node(node: &Node, out: &mut String) {
    match node {
        Node::Leaf => out.push('*'),
        Node::Inner(v) => {
            out.push_str(v.kind.prefix());
            out.push('(');
            for (i, c) in v.children.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write_node(c, out);
                if let Node::Inner(Inner {
                    length: Some(l), ..
                }) = c
                {
                    out.push('@');
                    out.push_str(&rational::format(l));
                }
            }
            out.push(')');
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        let kind = match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                return Ok(Node::Leaf);
            }
            Some(b'(') => VertexKind::Plain,
            Some(b'u') => VertexKind::TypeI,
            Some(b'p') => VertexKind::TypeII,
            Some(b'b') => VertexKind::TypeIII,
            Some(c) => return self.err(format!("unexpected {:?}", c as char)),
            None => return self.err("unexpected end of input"),
        };
        if kind != VertexKind::Plain {
            self.pos += 1;
            if self.peek() != Some(b'(') {
                return self.err("expected '(' after vertex type");
            }
        }
        self.pos += 1;
        let mut children = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() == Some(b')') {
                self.pos += 1;
                break;
            }
            let mut child = self.node()?;
            if self.peek() == Some(b'@') {
                self.pos += 1;
                let l = self.length()?;
                match &mut child {
                    Node::Leaf => return self.err("leaf edges carry no length"),
                    Node::Inner(v) => v.length = Some(l),
                }
            }
            children.push(child);
        }
        if children.is_empty() {
            return self.err("vertex without children");
        }
        Ok(Node::inner(kind, None, children))
    }

    fn length(&mut self) -> Result<Rational> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9' | b'/' | b'-')) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        if text.is_empty() {
            return self.err("expected a length after '@'");
        }
        rational::parse(text).map_err(|_| Error::Parse {
            pos: start,
            msg: format!("bad length {text:?}"),
        })
    }
}

pub(super) fn parse(s: &str) -> Result<Tree> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let root = p.node()?;
    p.skip_ws();
    if p.peek() == Some(b'@') {
        return p.err("the root edge carries no length");
    }
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(Tree::from_root(root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_comb_example() {
        let t = parse("((* *)@1/2 *)").unwrap();
        assert_eq!(t.encode(), "((* *)@1/2 *)");
    }

    #[test]
    fn normalises_lengths_and_whitespace() {
        let t = parse(" ( (*   *)@2/4 * ) ").unwrap();
        assert_eq!(t.encode(), "((* *)@1/2 *)");
        assert_eq!(
            parse("p(b(*)@2/2 b(*)@0)").unwrap().encode(),
            "p(b(*)@1 b(*)@0)"
        );
    }

    #[test]
    fn rejects() {
        for bad in [
            "",
            "(",
            "()",
            "(* *",
            "(*@1 *)",
            "(* *)@1",
            "x(*)",
            "(* *))",
            "((* *)@ *)",
        ] {
            assert!(parse(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
