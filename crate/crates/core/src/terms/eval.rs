//! Term evaluation and exhaustive (or sampled) quasi-identity checking.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ast::{AtomicFormula, BinOp, QuasiIdentity, Rel, Term};
use crate::error::{Error, Result};
use crate::frame::{leq, BooleanFrame, Element};
use crate::limits::Limits;

/// A frame, optionally paired with a second operation table read as `g`.
#[derive(Debug, Clone, Copy)]
pub struct Interpretation<'a> {
    pub frame: &'a BooleanFrame,
    pub companion: Option<&'a BooleanFrame>,
}

impl<'a> Interpretation<'a> {
    pub fn new(frame: &'a BooleanFrame) -> Self {
        Interpretation {
            frame,
            companion: None,
        }
    }

    /// Pairs `frame` (read as `f`) with `g`; both must share the Boolean reduct.
    pub fn with_companion(frame: &'a BooleanFrame, g: &'a BooleanFrame) -> Result<Self> {
        if g.atoms() != frame.atoms() {
            return Err(Error::LengthMismatch {
                atoms: frame.atoms(),
                expected: frame.size(),
                found: g.size(),
            });
        }
        Ok(Interpretation {
            frame,
            companion: Some(g),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Instr {
    Var(usize),
    Zero,
    One,
    Not,
    F,
    G,
    Bin(BinOp),
}

/// Postfix code for a term with variables resolved to slot indices.
#[derive(Debug, Clone)]
struct Program(Vec<Instr>);

impl Program {
    fn compile(term: &Term, vars: &[String], companion: bool) -> Result<Program> {
        let mut code = Vec::with_capacity(term.size());
        emit(term, vars, companion, &mut code)?;
        Ok(Program(code))
    }

    #[inline]
    fn run(&self, interp: &Interpretation<'_>, env: &[Element], stack: &mut Vec<Element>) -> Element {
        let top = interp.frame.top();
        stack.clear();
        for &ins in &self.0 {
            let v = match ins {
                Instr::Var(i) => env[i],
                Instr::Zero => 0,
                Instr::One => top,
                Instr::Not => stack.pop().unwrap() ^ top,
                Instr::F => interp.frame.f(stack.pop().unwrap()),
                Instr::G => interp.companion.unwrap().f(stack.pop().unwrap()),
                Instr::Bin(op) => {
                    let r = stack.pop().unwrap();
                    let l = stack.pop().unwrap();
                    match op {
                        BinOp::Meet => l & r,
                        BinOp::Join => l | r,
                        BinOp::Xor => l ^ r,
                        BinOp::Implies => (l ^ top) | r,
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().unwrap()
    }
}

fn emit(term: &Term, vars: &[String], companion: bool, code: &mut Vec<Instr>) -> Result<()> {
    match term {
        Term::Var(v) => {
            let i = vars
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            code.push(Instr::Var(i));
        }
        Term::Zero => code.push(Instr::Zero),
        Term::One => code.push(Instr::One),
        Term::Not(t) => {
            emit(t, vars, companion, code)?;
            code.push(Instr::Not);
        }
        Term::F(t) => {
            emit(t, vars, companion, code)?;
            code.push(Instr::F);
        }
        Term::G(t) => {
            if !companion {
                return Err(Error::MissingCompanion);
            }
            emit(t, vars, companion, code)?;
            code.push(Instr::G);
        }
        Term::Bin(op, l, r) => {
            emit(l, vars, companion, code)?;
            emit(r, vars, companion, code)?;
            code.push(Instr::Bin(*op));
        }
    }
    Ok(())
}

/// Evaluates `term` in `frame` under a name-based assignment.
pub fn eval_term(
    frame: &BooleanFrame,
    term: &Term,
    assignment: &HashMap<String, Element>,
) -> Result<Element> {
    eval_term_in(Interpretation::new(frame), term, assignment)
}

pub fn eval_term_in(
    interp: Interpretation<'_>,
    term: &Term,
    assignment: &HashMap<String, Element>,
) -> Result<Element> {
    let mut vars = Vec::new();
    term.collect_vars(&mut vars);
    let env = vars
        .iter()
        .map(|v| {
            let x = *assignment
                .get(v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            interp.frame.check_element(x)?;
            Ok(x)
        })
        .collect::<Result<Vec<_>>>()?;
    let prog = Program::compile(term, &vars, interp.companion.is_some())?;
    Ok(prog.run(&interp, &env, &mut Vec::new()))
}

/// The table of a one-variable term: its value at every element.
pub fn term_table(interp: Interpretation<'_>, term: &Term, var: &str) -> Result<Vec<Element>> {
    let vars = vec![var.to_string()];
    let prog = Program::compile(term, &vars, interp.companion.is_some())?;
    let mut stack = Vec::new();
    Ok(interp
        .frame
        .elements()
        .map(|x| prog.run(&interp, &[x], &mut stack))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    /// Variable bindings, in order of first occurrence.
    pub counterexample: Option<Vec<(String, Element)>>,
    pub status: CheckStatus,
}

impl Verdict {
    pub fn counterexample_map(&self) -> Option<HashMap<String, Element>> {
        self.counterexample
            .as_ref()
            .map(|c| c.iter().cloned().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Exhaustive within budget, sampled beyond it.
    Auto,
    /// Exhaustive or [`Error::BudgetExceeded`].
    Exhaustive,
}

struct CompiledAtomic {
    lhs: Program,
    rel: Rel,
    rhs: Program,
}

impl CompiledAtomic {
    fn compile(a: &AtomicFormula, vars: &[String], companion: bool) -> Result<Self> {
        Ok(CompiledAtomic {
            lhs: Program::compile(&a.lhs, vars, companion)?,
            rel: a.rel,
            rhs: Program::compile(&a.rhs, vars, companion)?,
        })
    }

    #[inline]
    fn holds(&self, interp: &Interpretation<'_>, env: &[Element], stack: &mut Vec<Element>) -> bool {
        let l = self.lhs.run(interp, env, stack);
        let r = self.rhs.run(interp, env, stack);
        match self.rel {
            Rel::Eq => l == r,
            Rel::Leq => leq(l, r),
        }
    }
}

struct CompiledQuasi {
    vars: Vec<String>,
    premises: Vec<CompiledAtomic>,
    conclusion: CompiledAtomic,
}

impl CompiledQuasi {
    fn compile(q: &QuasiIdentity, companion: bool) -> Result<Self> {
        let vars = q.variables();
        Ok(CompiledQuasi {
            premises: q
                .premises
                .iter()
                .map(|p| CompiledAtomic::compile(p, &vars, companion))
                .collect::<Result<_>>()?,
            conclusion: CompiledAtomic::compile(&q.conclusion, &vars, companion)?,
            vars,
        })
    }

    /// True when the assignment does not refute the quasi-identity.
    #[inline]
    fn satisfied(&self, interp: &Interpretation<'_>, env: &[Element], stack: &mut Vec<Element>) -> bool {
        !self.premises.iter().all(|p| p.holds(interp, env, stack))
            || self.conclusion.holds(interp, env, stack)
    }

    fn named(&self, env: &[Element]) -> Vec<(String, Element)> {
        self.vars.iter().cloned().zip(env.iter().copied()).collect()
    }
}

/// Checks `q` in `frame`: exhaustively within the evaluation budget, by seeded
/// sampling beyond it (reported in the verdict's status).
pub fn check_quasi_identity(frame: &BooleanFrame, q: &QuasiIdentity, limits: &Limits) -> Result<Verdict> {
    check_in(Interpretation::new(frame), q, limits, CheckMode::Auto)
}

pub fn check_in(
    interp: Interpretation<'_>,
    q: &QuasiIdentity,
    limits: &Limits,
    mode: CheckMode,
) -> Result<Verdict> {
    let compiled = CompiledQuasi::compile(q, interp.companion.is_some())?;
    let k = interp.frame.atoms();
    let v = compiled.vars.len() as u32;
    let log2_needed = k * v;
    let within_budget = log2_needed < 64 && (1u128 << log2_needed) <= limits.eval_budget as u128;
    if within_budget {
        Ok(exhaustive(&interp, &compiled))
    } else {
        match mode {
            CheckMode::Exhaustive => Err(Error::BudgetExceeded {
                log2_needed,
                budget: limits.eval_budget,
            }),
            CheckMode::Auto => Ok(sampled(&interp, &compiled, limits)),
        }
    }
}

/// Assignments are scanned in lexicographic order with the first variable
/// most significant; the least failing assignment is reported.
fn exhaustive(interp: &Interpretation<'_>, q: &CompiledQuasi) -> Verdict {
    let n = interp.frame.size() as Element;
    let v = q.vars.len();
    let scan_rest = |first: Option<Element>| -> Option<Vec<Element>> {
        let mut env = vec![0; v];
        let mut stack = Vec::with_capacity(16);
        let fixed = usize::from(first.is_some());
        if let Some(x) = first {
            env[0] = x;
        }
        loop {
            if !q.satisfied(interp, &env, &mut stack) {
                return Some(env);
            }
            // odometer over env[fixed..], last position fastest
            let mut i = v;
            loop {
                if i == fixed {
                    return None;
                }
                i -= 1;
                env[i] += 1;
                if env[i] < n {
                    break;
                }
                env[i] = 0;
            }
        }
    };
    let failure = if v == 0 {
        scan_rest(None)
    } else {
        (0..n).into_par_iter().find_map_first(|x| scan_rest(Some(x)))
    };
    Verdict {
        holds: failure.is_none(),
        counterexample: failure.map(|env| q.named(&env)),
        status: CheckStatus::Exhaustive,
    }
}

fn sampled(interp: &Interpretation<'_>, q: &CompiledQuasi, limits: &Limits) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(limits.sample_seed);
    let n = interp.frame.size() as Element;
    let mut env = vec![0; q.vars.len()];
    let mut stack = Vec::new();
    for _ in 0..limits.sample_count {
        for slot in env.iter_mut() {
            *slot = rng.gen_range(0..n);
        }
        if !q.satisfied(interp, &env, &mut stack) {
            return Verdict {
                holds: false,
                counterexample: Some(q.named(&env)),
                status: CheckStatus::Sampled,
            };
        }
    }
    Verdict {
        holds: true,
        counterexample: None,
        status: CheckStatus::Sampled,
    }
}

/// Re-evaluates `q` at a single assignment; true when it is not refuted there.
pub fn satisfied_at(
    interp: Interpretation<'_>,
    q: &QuasiIdentity,
    assignment: &HashMap<String, Element>,
) -> Result<bool> {
    let compiled = CompiledQuasi::compile(q, interp.companion.is_some())?;
    let env = compiled
        .vars
        .iter()
        .map(|v| {
            assignment
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnboundVariable(v.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    for &x in &env {
        interp.frame.check_element(x)?;
    }
    Ok(compiled.satisfied(&interp, &env, &mut Vec::new()))
}
