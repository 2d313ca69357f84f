//! Unary term clones and what can be read off them: additive members,
//! term-equivalence with additive operations, and switching terms.

use std::collections::HashMap;
use std::sync::Arc;

use crate::builtin::{builtin_frame, TWO_ELEMENT_NAMES};
use crate::error::{Error, Result};
use crate::frame::{BooleanFrame, Element};
use crate::limits::Limits;
use crate::structure::hs_classes;
use crate::terms::Term;

pub const DEFAULT_CLONE_CAP: usize = 1 << 20;

/// A unary term operation: its table and a one-variable term (in `x`) that
/// evaluates to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryTable {
    pub table: Vec<Element>,
    pub derivation: Term,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    Zero,
    One,
    Var,
    Not(usize),
    F(usize),
    Meet(usize, usize),
}

/// The closure of `{0, 1, x}` under pointwise complement, pointwise meet and
/// post-composition with `f`, in discovery order.
#[derive(Debug, Clone)]
pub struct CloneResult {
    tables: Vec<Arc<[Element]>>,
    origins: Vec<Origin>,
    complete: bool,
}

impl CloneResult {
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// False when the member cap stopped the closure early.
    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn table(&self, i: usize) -> &[Element] {
        &self.tables[i]
    }

    pub fn tables(&self) -> impl Iterator<Item = &[Element]> {
        self.tables.iter().map(|t| &t[..])
    }

    pub fn position(&self, table: &[Element]) -> Option<usize> {
        self.tables.iter().position(|t| &t[..] == table)
    }

    /// The first-discovered term for member `i`.
    pub fn derivation(&self, i: usize) -> Term {
        match self.origins[i] {
            Origin::Zero => Term::Zero,
            Origin::One => Term::One,
            Origin::Var => Term::var("x"),
            Origin::Not(j) => Term::not(self.derivation(j)),
            Origin::F(j) => Term::f(self.derivation(j)),
            Origin::Meet(j, l) => Term::meet(self.derivation(j), self.derivation(l)),
        }
    }

    pub fn member(&self, i: usize) -> UnaryTable {
        UnaryTable {
            table: self.tables[i].to_vec(),
            derivation: self.derivation(i),
        }
    }

    pub fn members(&self) -> impl Iterator<Item = UnaryTable> + '_ {
        (0..self.len()).map(|i| self.member(i))
    }
}

/// Worklist closure; stops early when `stop` accepts a new member and
/// returns its index.
fn closure(frame: &BooleanFrame, cap: usize, mut stop: impl FnMut(&[Element]) -> bool) -> (CloneResult, Option<usize>) {
    let cap = cap.max(3);
    let top = frame.top();
    let mut result = CloneResult {
        tables: Vec::new(),
        origins: Vec::new(),
        complete: false,
    };
    let mut index: HashMap<Arc<[Element]>, usize> = HashMap::new();

    // Some(Some(i)): stop hit at i; Some(None): cap hit; None: continue
    let mut add = |result: &mut CloneResult, table: Vec<Element>, origin: Origin| -> Option<Option<usize>> {
        if index.contains_key(&table[..]) {
            return None;
        }
        if result.tables.len() == cap {
            return Some(None);
        }
        let table: Arc<[Element]> = table.into();
        let i = result.tables.len();
        index.insert(table.clone(), i);
        result.tables.push(table);
        result.origins.push(origin);
        stop(&result.tables[i]).then_some(Some(i))
    };

    let n = frame.size();
    let seeds = [
        (vec![0; n], Origin::Zero),
        (vec![top; n], Origin::One),
        (frame.elements().collect(), Origin::Var),
    ];
    for (table, origin) in seeds {
        if let Some(hit) = add(&mut result, table, origin) {
            return (result, hit);
        }
    }
    let mut i = 0;
    while i < result.tables.len() {
        let h = result.tables[i].clone();
        let not: Vec<Element> = h.iter().map(|&v| v ^ top).collect();
        if let Some(hit) = add(&mut result, not, Origin::Not(i)) {
            return (result, hit);
        }
        let fh: Vec<Element> = h.iter().map(|&v| frame.f(v)).collect();
        if let Some(hit) = add(&mut result, fh, Origin::F(i)) {
            return (result, hit);
        }
        for j in 0..i {
            let other = result.tables[j].clone();
            let meet: Vec<Element> = h.iter().zip(other.iter()).map(|(&a, &b)| a & b).collect();
            if let Some(hit) = add(&mut result, meet, Origin::Meet(i, j)) {
                return (result, hit);
            }
        }
        i += 1;
    }
    result.complete = true;
    (result, None)
}

/// All unary term operations of `frame`, up to `cap` members.
pub fn unary_clone(frame: &BooleanFrame, cap: usize) -> CloneResult {
    closure(frame, cap, |_| false).0
}

pub fn is_additive_table(table: &[Element]) -> bool {
    let n = table.len();
    (0..n).all(|x| (x..n).all(|y| table[x | y] == table[x] | table[y]))
}

/// Members that preserve binary joins.
pub fn additive_members(result: &CloneResult) -> Vec<UnaryTable> {
    (0..result.len())
        .filter(|&i| is_additive_table(result.table(i)))
        .map(|i| result.member(i))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdditiveEquivalence {
    /// `g` is additive, `g_in_f` defines it from `f` and `f_in_g` defines `f`
    /// from `g` (where `f(...)` in that term denotes `g`).
    Equivalent {
        g: Vec<Element>,
        g_in_f: Term,
        f_in_g: Term,
    },
    /// Every additive member of the clone was tried and none defines `f`.
    NotEquivalent,
    /// Some closure hit the cap before a decision.
    Inconclusive,
}

/// Decides whether `frame` is term-equivalent (over its Boolean reduct) to
/// the same algebra with some additive operation `g`.
///
/// Term-equivalence forces `g` into the unary clone of `f` and `f` into the
/// unary clone of `g`, so scanning the additive members of the former is
/// exhaustive.
pub fn additive_equivalence(frame: &BooleanFrame, cap: usize) -> Result<AdditiveEquivalence> {
    let identity = Term::f(Term::var("x"));
    if is_additive_table(frame.table()) {
        return Ok(AdditiveEquivalence::Equivalent {
            g: frame.table().to_vec(),
            g_in_f: identity.clone(),
            f_in_g: identity,
        });
    }
    let clo = unary_clone(frame, cap);
    if !clo.complete() {
        return Ok(AdditiveEquivalence::Inconclusive);
    }
    let mut inconclusive = false;
    for i in (0..clo.len()).filter(|&i| is_additive_table(clo.table(i))) {
        let g = frame.with_table(clo.table(i).to_vec())?;
        let (clo_g, hit) = closure(&g, cap, |t| t == frame.table());
        if let Some(j) = hit {
            return Ok(AdditiveEquivalence::Equivalent {
                g: g.table().to_vec(),
                g_in_f: clo.derivation(i),
                f_in_g: clo_g.derivation(j),
            });
        }
        inconclusive |= !clo_g.complete();
    }
    Ok(if inconclusive {
        AdditiveEquivalence::Inconclusive
    } else {
        AdditiveEquivalence::NotEquivalent
    })
}

/// Names of the 2-element frames that occur in HS of `frame`. An empty
/// answer rules out term-definability of `f` from any additive (or monotone)
/// operation on this algebra.
pub fn hs_two_element_check(frame: &BooleanFrame, limits: &Limits) -> Result<Vec<&'static str>> {
    let hs = hs_classes(frame, limits)?;
    let mut present = Vec::new();
    for name in TWO_ELEMENT_NAMES {
        if hs.contains(&builtin_frame(name)?, limits)? {
            present.push(name);
        }
    }
    Ok(present)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwitchingSearch {
    Found(UnaryTable),
    /// The whole clone was generated and contains no switching function.
    AbsentComplete,
    /// The cap stopped the closure first.
    Inconclusive,
}

pub fn switching_table(frame: &BooleanFrame) -> Vec<Element> {
    frame
        .elements()
        .map(|x| if x == 0 { 0 } else { frame.top() })
        .collect()
}

/// Searches the unary clone for `d(0) = 0`, `d(x) = 1` otherwise.
pub fn find_switching_term(frame: &BooleanFrame, cap: usize) -> Result<SwitchingSearch> {
    if frame.is_trivial() {
        return Err(Error::TrivialFrame);
    }
    let target = switching_table(frame);
    let (clo, hit) = closure(frame, cap, |t| t == target.as_slice());
    Ok(match hit {
        Some(i) => SwitchingSearch::Found(clo.member(i)),
        None if clo.complete() => SwitchingSearch::AbsentComplete,
        None => SwitchingSearch::Inconclusive,
    })
}

/// The ternary term `(d(x ^ y) & x) | (-d(x ^ y) & z)` built from a switching
/// term `d` in `x`.
pub fn discriminator_term(d: &Term) -> Term {
    let dxy = substitute_x(d, &Term::bin(crate::terms::BinOp::Xor, Term::var("x"), Term::var("y")));
    Term::join(
        Term::meet(dxy.clone(), Term::var("x")),
        Term::meet(Term::not(dxy), Term::var("z")),
    )
}

fn substitute_x(t: &Term, by: &Term) -> Term {
    match t {
        Term::Var(v) if v == "x" => by.clone(),
        Term::Var(_) | Term::Zero | Term::One => t.clone(),
        Term::Not(a) => Term::not(substitute_x(a, by)),
        Term::F(a) => Term::f(substitute_x(a, by)),
        Term::G(a) => Term::g(substitute_x(a, by)),
        Term::Bin(op, l, r) => Term::bin(*op, substitute_x(l, by), substitute_x(r, by)),
    }
}

/// Checks over all triples that the term built from `d` discriminates:
/// `t(a, b, c) = a` when `a != b` and `c` when `a == b`.
pub fn verify_discriminator(frame: &BooleanFrame, d: &[Element]) -> Result<bool> {
    if d != switching_table(frame).as_slice() {
        return Err(Error::NotSwitching);
    }
    let top = frame.top();
    let t = |a: Element, b: Element, c: Element| {
        let s = d[(a ^ b) as usize];
        (s & a) | ((s ^ top) & c)
    };
    Ok(frame.elements().all(|a| {
        frame.elements().all(|b| {
            frame
                .elements()
                .all(|c| t(a, b, c) == if a != b { a } else { c })
        })
    }))
}

/// Default cap from limits.
pub fn unary_clone_limited(frame: &BooleanFrame, limits: &Limits) -> CloneResult {
    unary_clone(frame, limits.clone_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_frame;
    use crate::frame::additive_extension;
    use crate::terms::{parse_term, term_table, Interpretation};

    fn frame(spec: &str) -> BooleanFrame {
        builtin_frame(spec).unwrap()
    }

    #[test]
    fn example1_clone_has_sixteen_members() {
        let a = frame("example1");
        let clo = unary_clone(&a, DEFAULT_CLONE_CAP);
        assert!(clo.complete());
        assert_eq!(clo.len(), 16);
        for m in clo.members() {
            let evaluated = term_table(Interpretation::new(&a), &m.derivation, "x").unwrap();
            assert_eq!(evaluated, m.table, "{}", m.derivation);
        }
        // -x & f(x) is 2 at 5, 0 elsewhere
        let mut expected = vec![0; 8];
        expected[5] = 2;
        assert!(clo.position(&expected).is_some());
    }

    #[test]
    fn identity_clone_is_boolean() {
        let id = BooleanFrame::new(2, vec![0, 1, 2, 3]).unwrap();
        let clo = unary_clone(&id, DEFAULT_CLONE_CAP);
        assert!(clo.complete());
        assert_eq!(clo.len(), 4);
        let additive: Vec<_> = additive_members(&clo).into_iter().map(|m| m.table).collect();
        assert_eq!(additive, vec![vec![0; 4], vec![3; 4], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cap_truncates() {
        let clo = unary_clone(&frame("cycle:3"), 100);
        assert!(!clo.complete());
        assert_eq!(clo.len(), 100);
        let tiny = unary_clone(&frame("example1"), 1);
        assert_eq!(tiny.len(), 3);
        assert!(!tiny.complete());
    }

    #[test]
    fn trivial_frame_clone() {
        let clo = unary_clone(&BooleanFrame::trivial(), 10);
        assert!(clo.complete());
        assert_eq!(clo.len(), 1);
        assert_eq!(additive_members(&clo).len(), 1);
    }

    #[test]
    fn example1_additive_members() {
        let clo = unary_clone(&frame("example1"), DEFAULT_CLONE_CAP);
        let tables: Vec<_> = additive_members(&clo).into_iter().map(|m| m.table).collect();
        assert_eq!(tables, vec![vec![0; 8], vec![7; 8], (0..8).collect::<Vec<_>>()]);
    }

    #[test]
    fn example1_not_additive_equivalent() {
        assert_eq!(
            additive_equivalence(&frame("example1"), DEFAULT_CLONE_CAP).unwrap(),
            AdditiveEquivalence::NotEquivalent
        );
    }

    #[test]
    fn additive_frame_is_equivalent_to_itself() {
        let g = additive_extension(3, &[2, 0, 1]).unwrap();
        match additive_equivalence(&g, DEFAULT_CLONE_CAP).unwrap() {
            AdditiveEquivalence::Equivalent { g: table, g_in_f, f_in_g } => {
                assert_eq!(table, g.table());
                assert_eq!(g_in_f.to_string(), "f(x)");
                assert_eq!(f_in_g.to_string(), "f(x)");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_small_cap_inconclusive() {
        assert_eq!(
            additive_equivalence(&frame("cycle:3"), 1000).unwrap(),
            AdditiveEquivalence::Inconclusive
        );
    }

    #[test]
    fn switching_term_on_small_frame() {
        let a = BooleanFrame::new(2, vec![0, 3, 3, 3]).unwrap();
        let SwitchingSearch::Found(d) = find_switching_term(&a, DEFAULT_CLONE_CAP).unwrap() else {
            panic!("expected a switching term");
        };
        assert_eq!(d.table, vec![0, 3, 3, 3]);
        let join_form = parse_term("x | f(x)").unwrap();
        assert_eq!(term_table(Interpretation::new(&a), &join_form, "x").unwrap(), d.table);
        assert!(verify_discriminator(&a, &d.table).unwrap());
        let t = discriminator_term(&d.derivation);
        assert_eq!(t.to_string(), "f(x ^ y) & x | -f(x ^ y) & z");
    }

    #[test]
    fn switching_absent_for_identity() {
        let id = BooleanFrame::new(2, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            find_switching_term(&id, DEFAULT_CLONE_CAP).unwrap(),
            SwitchingSearch::AbsentComplete
        );
        assert_eq!(
            find_switching_term(&BooleanFrame::trivial(), 10),
            Err(Error::TrivialFrame)
        );
    }

    #[test]
    fn discriminator_preconditions() {
        let t = BooleanFrame::trivial();
        assert!(verify_discriminator(&t, &[0]).unwrap());
        let id = BooleanFrame::new(2, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(verify_discriminator(&id, &[0, 1, 2, 3]), Err(Error::NotSwitching));
    }

    #[test]
    fn hs_two_element_examples() {
        let l = Limits::default();
        assert!(hs_two_element_check(&frame("cycle:3"), &l).unwrap().is_empty());
        assert_eq!(hs_two_element_check(&frame("example-sh"), &l).unwrap(), vec!["two:zero"]);
    }
}
