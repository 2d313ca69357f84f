use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Meet,
    Join,
    Xor,
    Implies,
}

impl BinOp {
    pub(crate) fn precedence(self) -> u8 {
        match self {
            BinOp::Implies => 1,
            BinOp::Join => 2,
            BinOp::Xor => 3,
            BinOp::Meet => 4,
        }
    }

    pub(crate) fn right_assoc(self) -> bool {
        self == BinOp::Implies
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Meet => "&",
            BinOp::Join => "|",
            BinOp::Xor => "^",
            BinOp::Implies => "->",
        }
    }
}

/// A frame term. `G` is the optional companion operation, only meaningful
/// when evaluating against a frame paired with a second table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Not(Box<Term>),
    F(Box<Term>),
    G(Box<Term>),
    Bin(BinOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn f(t: Term) -> Term {
        Term::F(Box::new(t))
    }

    pub fn g(t: Term) -> Term {
        Term::G(Box::new(t))
    }

    pub fn bin(op: BinOp, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Meet, l, r)
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Join, l, r)
    }

    /// Appends variables in order of first occurrence.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::Not(t) | Term::F(t) | Term::G(t) => t.collect_vars(out),
            Term::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Bin(op, ..) => op.precedence(),
            _ => u8::MAX,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Not(t) | Term::F(t) | Term::G(t) => 1 + t.size(),
            Term::Bin(_, l, r) => 1 + l.size() + r.size(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Not(t) => {
                if matches!(**t, Term::Bin(..)) {
                    write!(f, "-({t})")
                } else {
                    write!(f, "-{t}")
                }
            }
            Term::F(t) => write!(f, "f({t})"),
            Term::G(t) => write!(f, "g({t})"),
            Term::Bin(op, l, r) => {
                let p = op.precedence();
                let lp = l.precedence() < p || (l.precedence() == p && op.right_assoc());
                let rp = r.precedence() < p || (r.precedence() == p && !op.right_assoc());
                write_side(f, l, lp)?;
                write!(f, " {} ", op.symbol())?;
                write_side(f, r, rp)
            }
        }
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, t: &Term, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Leq,
}

/// `lhs = rhs` or `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomicFormula {
    pub lhs: Term,
    pub rel: Rel,
    pub rhs: Term,
}

impl AtomicFormula {
    pub fn new(lhs: Term, rel: Rel, rhs: Term) -> Self {
        AtomicFormula { lhs, rel, rhs }
    }

    pub fn collect_vars(&self, out: &mut Vec<String>) {
        self.lhs.collect_vars(out);
        self.rhs.collect_vars(out);
    }
}

impl fmt::Display for AtomicFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.rel {
            Rel::Eq => "=",
            Rel::Leq => "<=",
        };
        write!(f, "{} {} {}", self.lhs, rel, self.rhs)
    }
}

/// A universal Horn condition; no premises means a plain identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiIdentity {
    pub premises: Vec<AtomicFormula>,
    pub conclusion: AtomicFormula,
}

impl QuasiIdentity {
    pub fn identity(conclusion: AtomicFormula) -> Self {
        QuasiIdentity {
            premises: Vec::new(),
            conclusion,
        }
    }

    /// Variables in order of first occurrence, premises first.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in &self.premises {
            p.collect_vars(&mut out);
        }
        self.conclusion.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" && ")?;
            }
            write!(f, "{p}")?;
        }
        if !self.premises.is_empty() {
            f.write_str(" => ")?;
        }
        write!(f, "{}", self.conclusion)
    }
}
