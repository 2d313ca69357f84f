//! Terms, quasi-identities, and checking them over a frame.

mod ast;
mod eval;
mod parser;

use std::fmt;
use std::str::FromStr;

pub use ast::{AtomicFormula, BinOp, QuasiIdentity, Rel, Term};
pub use eval::{
    check_in, check_quasi_identity, eval_term, eval_term_in, satisfied_at, term_table,
    CheckMode, CheckStatus, Interpretation, Verdict,
};
pub use parser::{parse_quasi_identity, parse_term, SyntaxError};

use crate::error::{Error, Result};
use crate::frame::BooleanFrame;
use crate::limits::Limits;

/// The star quasi-equation: symmetric differences below `z` stay below `f(z)`.
pub const STAR: &str = "x ^ y <= z => f(x) ^ f(y) <= f(z)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Additive,
    Monotone,
    Normal,
    Conormal,
    Extensive,
    Star,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Additive,
        Property::Monotone,
        Property::Normal,
        Property::Conormal,
        Property::Extensive,
        Property::Star,
    ];

    pub fn source(self) -> &'static str {
        match self {
            Property::Additive => "f(x | y) = f(x) | f(y)",
            Property::Monotone => "x <= y => f(x) <= f(y)",
            Property::Normal => "f(0) = 0",
            Property::Conormal => "f(1) = 1",
            Property::Extensive => "x <= f(x)",
            Property::Star => STAR,
        }
    }

    pub fn quasi_identity(self) -> QuasiIdentity {
        parse_quasi_identity(self.source()).expect("builtin property text parses")
    }

    pub fn name(self) -> &'static str {
        match self {
            Property::Additive => "additive",
            Property::Monotone => "monotone",
            Property::Normal => "normal",
            Property::Conormal => "conormal",
            Property::Extensive => "extensive",
            Property::Star => "star",
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownSpec(s.to_string()))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin_property(frame: &BooleanFrame, property: Property, limits: &Limits) -> Result<Verdict> {
    check_quasi_identity(frame, &property.quasi_identity(), limits)
}
