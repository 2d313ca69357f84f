//! Congruences of finite Boolean frames.
//!
//! A congruence is determined by its ideal `{x ^ y : x ~ y}`, and an ideal `I`
//! comes from a congruence iff `x ^ y ∈ I` implies `f(x) ^ f(y) ∈ I`. Ideals of
//! a finite Boolean algebra are principal, so a congruence is stored as the top
//! element `a` of its ideal: `x ~ y` iff `x ^ y <= a`. Such an `a` is called a
//! congruence generator below.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{leq, submasks, BooleanFrame, Element};
use crate::partitions::{blocks, SetPartitions};

/// Largest atom count for the brute-force partition oracle.
pub const ORACLE_MAX_ATOMS: u32 = 3;

fn congruential_unchecked(frame: &BooleanFrame, a: Element) -> bool {
    frame.elements().all(|x| {
        let fx = frame.f(x);
        submasks(a).all(|d| leq(fx ^ frame.f(x ^ d), a))
    })
}

/// Whether `x ^ y <= a` implies `f(x) ^ f(y) <= a` for all `x, y`.
pub fn is_congruential(frame: &BooleanFrame, a: Element) -> Result<bool> {
    frame.check_element(a)?;
    Ok(congruential_unchecked(frame, a))
}

/// All congruence generators, ascending. Always contains `0` and the top.
pub fn congruence_generators(frame: &BooleanFrame) -> Vec<Element> {
    let top = frame.top();
    (0..=top)
        .into_par_iter()
        .filter(|&a| congruential_unchecked(frame, a))
        .collect()
}

/// One round of the principal closure: `a` joined with every
/// `f(u) ^ f(v)` for `u ^ v <= a`.
fn closure_step(frame: &BooleanFrame, a: Element) -> Element {
    let top = frame.top();
    let mut next = a;
    for u in frame.elements() {
        let fu = frame.f(u);
        for d in submasks(a) {
            next |= fu ^ frame.f(u ^ d);
        }
        if next == top {
            break;
        }
    }
    next
}

/// The iterates `x ^ y = a_0 < a_1 < ... < a_n`, ending at the generator of
/// the principal congruence of `(x, y)`.
pub fn principal_closure_trace(frame: &BooleanFrame, x: Element, y: Element) -> Result<Vec<Element>> {
    frame.check_element(x)?;
    frame.check_element(y)?;
    let mut trace = vec![x ^ y];
    loop {
        let a = *trace.last().unwrap();
        let next = closure_step(frame, a);
        if next == a {
            return Ok(trace);
        }
        trace.push(next);
    }
}

/// Generator of the least congruence identifying `x` and `y`.
///
/// Congruence generators are closed under meet, so the least one above
/// `x ^ y` exists; every iterate stays below it, and the chain strictly grows
/// until it is reached.
pub fn principal_congruence(frame: &BooleanFrame, x: Element, y: Element) -> Result<Element> {
    Ok(*principal_closure_trace(frame, x, y)?.last().unwrap())
}

/// Join in the congruence lattice.
pub fn join_congruences(frame: &BooleanFrame, a: Element, b: Element) -> Result<Element> {
    principal_congruence(frame, a | b, 0)
}

/// Minimal nonzero congruence generators; a single one is the monolith.
pub fn minimal_nontrivial_congruences(frame: &BooleanFrame) -> Vec<Element> {
    let gens = congruence_generators(frame);
    let nonzero: Vec<_> = gens.into_iter().filter(|&a| a != 0).collect();
    nonzero
        .iter()
        .copied()
        .filter(|&a| !nonzero.iter().any(|&b| b != a && leq(b, a)))
        .collect()
}

/// Extracts the bits of `x` selected by `mask` into the low bits.
#[inline]
pub(crate) fn compress(x: Element, mask: Element) -> Element {
    let mut out = 0;
    let mut bit = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if x & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        m ^= low;
    }
    out
}

/// Inverse of [`compress`]: scatters the low bits of `x` onto `mask`.
#[inline]
pub(crate) fn expand(x: Element, mask: Element) -> Element {
    let mut out = 0;
    let mut bit = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if x >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
        m ^= low;
    }
    out
}

/// The quotient by the congruence with generator `a`.
///
/// The class of `x` is represented by `x & !a`; quotient atom `j` is the
/// `j`-th atom outside `a` in ascending order. Returns the quotient frame and
/// the surjection from frame elements onto quotient elements.
pub fn quotient(frame: &BooleanFrame, a: Element) -> Result<(BooleanFrame, Vec<Element>)> {
    if !is_congruential(frame, a)? {
        return Err(Error::NotCongruential(a));
    }
    let keep = frame.complement(a);
    let q = BooleanFrame::from_fn(keep.count_ones(), frame.atoms(), |c| {
        compress(frame.f(expand(c, keep)), keep)
    })?;
    let map = frame.elements().map(|x| compress(x, keep)).collect();
    Ok((q, map))
}

pub fn is_simple(frame: &BooleanFrame) -> Result<bool> {
    if frame.is_trivial() {
        return Err(Error::TrivialFrame);
    }
    Ok(congruence_generators(frame) == [0, frame.top()])
}

/// A congruence given explicitly by its blocks (each sorted, blocks ordered
/// by least element).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CongruencePartition {
    pub blocks: Vec<Vec<Element>>,
}

impl CongruencePartition {
    fn from_labels(labels: &[usize]) -> Self {
        CongruencePartition {
            blocks: blocks(labels)
                .into_iter()
                .map(|b| b.into_iter().map(|x| x as Element).collect())
                .collect(),
        }
    }
}

/// The partition `x ~ y` iff `x ^ y <= a`.
pub fn partition_of_generator(frame: &BooleanFrame, a: Element) -> CongruencePartition {
    let keep = frame.complement(a);
    let mut labels = vec![usize::MAX; frame.size()];
    let mut next = 0;
    let mut rep_label = vec![usize::MAX; frame.size()];
    for x in frame.elements() {
        let rep = (x & keep) as usize;
        if rep_label[rep] == usize::MAX {
            rep_label[rep] = next;
            next += 1;
        }
        labels[x as usize] = rep_label[rep];
    }
    CongruencePartition::from_labels(&labels)
}

/// Every partition of the element set compatible with meet, complement and
/// `f`, found by scanning all set partitions. Independent of the generator
/// characterization; only feasible for tiny frames.
pub fn partition_oracle(frame: &BooleanFrame) -> Result<Vec<CongruencePartition>> {
    if frame.atoms() > ORACLE_MAX_ATOMS {
        return Err(Error::TooLarge {
            atoms: frame.atoms(),
            max: ORACLE_MAX_ATOMS,
        });
    }
    let n = frame.size();
    let top = frame.top();
    let mut out = Vec::new();
    let mut parts = SetPartitions::new(n);
    while let Some(labels) = parts.next() {
        let compatible = (0..n).all(|x| {
            (x + 1..n).filter(|&x2| labels[x] == labels[x2]).all(|x2| {
                let (x, x2) = (x as Element, x2 as Element);
                labels[(x ^ top) as usize] == labels[(x2 ^ top) as usize]
                    && labels[frame.f(x) as usize] == labels[frame.f(x2) as usize]
                    && (0..=top).all(|y| labels[(x & y) as usize] == labels[(x2 & y) as usize])
            })
        });
        if compatible {
            out.push(CongruencePartition::from_labels(labels));
        }
    }
    Ok(out)
}
