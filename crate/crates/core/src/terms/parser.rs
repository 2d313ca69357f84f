//! Recursive-descent parser for terms and quasi-identities.
//!
//! ```text
//! quasi  := atomic ("&&" atomic)* "=>" atomic | atomic
//! atomic := term ("=" | "<=") term
//! term   := binary operators, loosest first: "->" (right), "|", "^", "&"
//! unary  := "-" unary | "f" "(" term ")" | "g" "(" term ")"
//!         | "0" | "1" | ident | "(" term ")"
//! ```
//!
//! Identifiers match `[a-zA-Z][a-zA-Z0-9_]*`; `f` and `g` are reserved for the
//! operations. `#` starts a comment running to the end of the line.

use std::fmt;

use super::ast::{AtomicFormula, BinOp, QuasiIdentity, Rel, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {}: expected {}, found {}",
            self.line,
            self.column,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    LParen,
    RParen,
    Minus,
    Amp,
    Pipe,
    Caret,
    Arrow,
    Eq,
    Leq,
    AndAnd,
    Implies,
    Eof,
    Bad(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Leq => "`<=`".into(),
            Tok::AndAnd => "`&&`".into(),
            Tok::Implies => "`=>`".into(),
            Tok::Eof => "end of input".into(),
            Tok::Bad(c) => format!("`{c}`"),
        }
    }

    fn binop(&self) -> Option<BinOp> {
        match self {
            Tok::Amp => Some(BinOp::Meet),
            Tok::Pipe => Some(BinOp::Join),
            Tok::Caret => Some(BinOp::Xor),
            Tok::Arrow => Some(BinOp::Implies),
            _ => None,
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Vec<Spanned> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        let next = chars.get(i + 1).copied();
        let (tok, width) = match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                (Tok::Ident(chars[i..i + len].iter().collect()), len)
            }
            '0' => (Tok::Zero, 1),
            '1' => (Tok::One, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '-' if next == Some('>') => (Tok::Arrow, 2),
            '-' => (Tok::Minus, 1),
            '&' if next == Some('&') => (Tok::AndAnd, 2),
            '&' => (Tok::Amp, 1),
            '|' => (Tok::Pipe, 1),
            '^' => (Tok::Caret, 1),
            '<' if next == Some('=') => (Tok::Leq, 2),
            '=' if next == Some('>') => (Tok::Implies, 2),
            '=' => (Tok::Eq, 1),
            other => (Tok::Bad(other), 1),
        };
        out.push(Spanned {
            tok,
            line: start.0,
            column: start.1,
        });
        i += width;
        column += width;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    out
}

const TERM_START: &[&str] = &["identifier", "`0`", "`1`", "`-`", "`f(`", "`g(`", "`(`"];
const BINARY: &[&str] = &["`&`", "`|`", "`^`", "`->`"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let s = &self.toks[self.pos];
        SyntaxError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str, also: &[&str]) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let mut expected: Vec<&str> = also.to_vec();
            expected.push(name);
            Err(self.error(&expected))
        }
    }

    fn quasi(&mut self) -> Result<QuasiIdentity, SyntaxError> {
        let first = self.atomic()?;
        let q = match self.peek() {
            Tok::Eof => QuasiIdentity::identity(first),
            Tok::AndAnd | Tok::Implies => {
                let mut premises = vec![first];
                while *self.peek() == Tok::AndAnd {
                    self.bump();
                    premises.push(self.atomic()?);
                }
                self.expect(Tok::Implies, "`=>`", &["`&&`"])?;
                let conclusion = self.atomic()?;
                QuasiIdentity {
                    premises,
                    conclusion,
                }
            }
            _ => return Err(self.error(&["`&&`", "`=>`", "end of input"])),
        };
        self.expect(Tok::Eof, "end of input", &[])?;
        Ok(q)
    }

    fn atomic(&mut self) -> Result<AtomicFormula, SyntaxError> {
        let lhs = self.term(0)?;
        let rel = match self.peek() {
            Tok::Eq => Rel::Eq,
            Tok::Leq => Rel::Leq,
            _ => {
                let mut expected = BINARY.to_vec();
                expected.extend(["`=`", "`<=`"]);
                return Err(self.error(&expected));
            }
        };
        self.bump();
        let rhs = self.term(0)?;
        Ok(AtomicFormula { lhs, rel, rhs })
    }

    fn term(&mut self, min_prec: u8) -> Result<Term, SyntaxError> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.peek().binop() {
            let p = op.precedence();
            if p < min_prec {
                break;
            }
            self.bump();
            let rhs = self.term(if op.right_assoc() { p } else { p + 1 })?;
            lhs = Term::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Term, SyntaxError> {
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                Ok(Term::not(self.unary()?))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(Term::One)
            }
            Tok::LParen => {
                self.bump();
                let t = self.term(0)?;
                self.expect(Tok::RParen, "`)`", BINARY)?;
                Ok(t)
            }
            Tok::Ident(name) if name == "f" || name == "g" => {
                self.bump();
                self.expect(Tok::LParen, "`(`", &[])?;
                let arg = self.term(0)?;
                self.expect(Tok::RParen, "`)`", BINARY)?;
                Ok(if name == "f" {
                    Term::f(arg)
                } else {
                    Term::g(arg)
                })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            _ => Err(self.error(TERM_START)),
        }
    }
}

pub fn parse_quasi_identity(text: &str) -> Result<QuasiIdentity, SyntaxError> {
    Parser {
        toks: lex(text),
        pos: 0,
    }
    .quasi()
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
    };
    let t = p.term(0)?;
    p.expect(Tok::Eof, "end of input", BINARY)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }
    fn y() -> Term {
        Term::var("y")
    }

    #[test]
    fn star_quasi_identity() {
        let q = parse_quasi_identity("x ^ y <= z => f(x) ^ f(y) <= f(z)").unwrap();
        assert_eq!(q.premises.len(), 1);
        assert_eq!(q.variables(), vec!["x", "y", "z"]);
        assert_eq!(
            q.conclusion,
            AtomicFormula::new(
                Term::bin(BinOp::Xor, Term::f(x()), Term::f(y())),
                Rel::Leq,
                Term::f(Term::var("z"))
            )
        );
    }

    #[test]
    fn additivity_identity() {
        let q = parse_quasi_identity("f(x | y) = f(x) | f(y)").unwrap();
        assert!(q.premises.is_empty());
        assert_eq!(q.conclusion.lhs, Term::f(Term::join(x(), y())));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_term("x | y & z").unwrap(),
            Term::join(x(), Term::meet(y(), Term::var("z")))
        );
        assert_eq!(
            parse_term("x -> y -> z").unwrap(),
            Term::bin(
                BinOp::Implies,
                x(),
                Term::bin(BinOp::Implies, y(), Term::var("z"))
            )
        );
        assert_eq!(
            parse_term("x & y & z").unwrap(),
            Term::meet(Term::meet(x(), y()), Term::var("z"))
        );
        assert_eq!(
            parse_term("x ^ y | z").unwrap(),
            Term::join(Term::bin(BinOp::Xor, x(), y()), Term::var("z"))
        );
        assert_eq!(parse_term("--x").unwrap(), Term::not(Term::not(x())));
        assert_eq!(parse_term("-0").unwrap(), Term::not(Term::Zero));
    }

    #[test]
    fn comments_and_newlines() {
        let q = parse_quasi_identity("# monotone\nx <= y # premise\n=> f(x) <= f(y)").unwrap();
        assert_eq!(q.premises.len(), 1);
    }

    #[test]
    fn malformed_reports_position() {
        let e = parse_quasi_identity("x <= => y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.expected.contains(&"identifier".to_string()));
        assert_eq!(e.found, "`=>`");

        let e = parse_quasi_identity("x = y\n  && f(x = y").unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
        assert!(e.expected.contains(&"`)`".to_string()));

        let e = parse_quasi_identity("x = y && y = z").unwrap_err();
        assert_eq!(e.found, "end of input");
        assert!(e.expected.contains(&"`=>`".to_string()));

        let e = parse_quasi_identity("x = 2").unwrap_err();
        assert_eq!(e.found, "`2`");
        assert!(parse_quasi_identity("f = x").is_err());
        assert!(parse_quasi_identity("x").is_err());
        assert!(parse_quasi_identity("").is_err());
    }
}
