//! The congruence extension property, decided three ways.
//!
//! * [`cep_direct`] searches, for every subalgebra and every congruence of it,
//!   over all congruences of the whole frame for one restricting to it.
//! * [`cep_two_generated`] only looks at principal congruences of subalgebras
//!   generated by two elements, and only at the canonical candidate extension:
//!   the principal congruence of the same generator in the whole frame.
//! * [`pcep`] runs the same canonical principal test over every subalgebra.
//!
//! A principal congruence of a subalgebra extends at all iff the ambient
//! principal congruence of the same pair restricts to it, which is what makes
//! the canonical test complete.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::congruence::{congruence_generators, is_congruential, principal_congruence};
use crate::error::{Error, Result};
use crate::frame::{leq, BooleanFrame, Element};
use crate::limits::Limits;
use crate::structure::{all_subalgebras, generated_subalgebra, relative_frame, Subalgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CepMethod {
    Direct,
    TwoGenerated,
    Pcep,
}

impl CepMethod {
    pub const ALL: [CepMethod; 3] = [CepMethod::Direct, CepMethod::TwoGenerated, CepMethod::Pcep];

    pub fn name(self) -> &'static str {
        match self {
            CepMethod::Direct => "direct",
            CepMethod::TwoGenerated => "two_generated",
            CepMethod::Pcep => "pcep",
        }
    }
}

/// A subalgebra together with a congruence of it (generator in ambient
/// coordinates) that no congruence of the whole frame restricts to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CepWitness {
    pub subalgebra: Vec<Element>,
    pub generator: Element,
    /// For the two-generated method: the generating pair.
    pub pair: Option<(Element, Element)>,
}

impl CepWitness {
    /// Confirms that no ambient congruence restricts to the witness.
    pub fn reverify(&self, frame: &BooleanFrame) -> Result<bool> {
        let sub = Subalgebra::new(frame, self.subalgebra.clone())?;
        let (rel, embed) = relative_frame(frame, &sub)?;
        let is_sub_congruence = congruence_generators(&rel)
            .into_iter()
            .any(|g| embed[g as usize] == self.generator);
        if !is_sub_congruence {
            return Ok(false);
        }
        for a in congruence_generators(frame) {
            if restrict_congruence(frame, a, &sub)? == self.generator {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CepVerdict {
    pub holds: bool,
    pub method: CepMethod,
    pub witness: Option<CepWitness>,
}

impl CepVerdict {
    fn from_witness(method: CepMethod, witness: Option<CepWitness>) -> Self {
        CepVerdict {
            holds: witness.is_none(),
            method,
            witness,
        }
    }
}

/// Generator, within `sub`, of the restriction of the congruence `a`:
/// the join of the members of `sub` below `a`.
pub fn restrict_congruence(frame: &BooleanFrame, a: Element, sub: &Subalgebra) -> Result<Element> {
    if !is_congruential(frame, a)? {
        return Err(Error::NotCongruential(a));
    }
    if !sub.elements().iter().all(|&x| sub.contains(frame.f(x))) {
        return Err(Error::NotClosed);
    }
    Ok(restrict_unchecked(a, sub))
}

fn restrict_unchecked(a: Element, sub: &Subalgebra) -> Element {
    sub.elements()
        .iter()
        .filter(|&&x| leq(x, a))
        .fold(0, |acc, &x| acc | x)
}

pub fn cep_direct(frame: &BooleanFrame, limits: &Limits) -> Result<CepVerdict> {
    let ambient = congruence_generators(frame);
    for sub in all_subalgebras(frame, limits)? {
        let (rel, embed) = relative_frame(frame, &sub)?;
        let restricted: BTreeSet<Element> = ambient
            .iter()
            .map(|&a| restrict_unchecked(a, &sub))
            .collect();
        for g in congruence_generators(&rel) {
            let b = embed[g as usize];
            if !restricted.contains(&b) {
                return Ok(CepVerdict::from_witness(
                    CepMethod::Direct,
                    Some(CepWitness {
                        subalgebra: sub.elements().to_vec(),
                        generator: b,
                        pair: None,
                    }),
                ));
            }
        }
    }
    Ok(CepVerdict::from_witness(CepMethod::Direct, None))
}

/// Memoized ambient principal congruences `Cg(b, 0)`.
struct PrincipalCache<'a> {
    frame: &'a BooleanFrame,
    memo: Vec<Option<Element>>,
}

impl<'a> PrincipalCache<'a> {
    fn new(frame: &'a BooleanFrame) -> Self {
        PrincipalCache {
            frame,
            memo: vec![None; frame.size()],
        }
    }

    fn get(&mut self, b: Element) -> Result<Element> {
        if let Some(a) = self.memo[b as usize] {
            return Ok(a);
        }
        let a = principal_congruence(self.frame, b, 0)?;
        self.memo[b as usize] = Some(a);
        Ok(a)
    }
}

/// First `b` in `sub` whose principal congruence in `sub` differs from the
/// restriction of its principal congruence in the frame. Returns the
/// subalgebra's principal generator for `b`, in ambient coordinates.
fn first_principal_failure(
    frame: &BooleanFrame,
    sub: &Subalgebra,
    cache: &mut PrincipalCache<'_>,
) -> Result<Option<Element>> {
    let (rel, embed) = relative_frame(frame, sub)?;
    let mut to_rel = vec![Element::MAX; frame.size()];
    for (r, &x) in embed.iter().enumerate() {
        to_rel[x as usize] = r as Element;
    }
    for &b in sub.elements() {
        let extended = restrict_unchecked(cache.get(b)?, sub);
        let local = embed[principal_congruence(&rel, to_rel[b as usize], 0)? as usize];
        if extended != local {
            return Ok(Some(local));
        }
    }
    Ok(None)
}

fn check_subalgebra_budget(frame: &BooleanFrame, limits: &Limits) -> Result<()> {
    if frame.atoms() > limits.max_subalgebra_atoms {
        return Err(Error::TooLarge {
            atoms: frame.atoms(),
            max: limits.max_subalgebra_atoms,
        });
    }
    Ok(())
}

pub fn cep_two_generated(frame: &BooleanFrame, limits: &Limits) -> Result<CepVerdict> {
    check_subalgebra_budget(frame, limits)?;
    let mut cache = PrincipalCache::new(frame);
    let mut seen: HashSet<Subalgebra> = HashSet::new();
    for x in frame.elements() {
        for y in x..=frame.top() {
            let sub = generated_subalgebra(frame, &[x, y])?;
            if seen.contains(&sub) {
                continue;
            }
            if let Some(generator) = first_principal_failure(frame, &sub, &mut cache)? {
                return Ok(CepVerdict::from_witness(
                    CepMethod::TwoGenerated,
                    Some(CepWitness {
                        subalgebra: sub.elements().to_vec(),
                        generator,
                        pair: Some((x, y)),
                    }),
                ));
            }
            seen.insert(sub);
        }
    }
    Ok(CepVerdict::from_witness(CepMethod::TwoGenerated, None))
}

pub fn pcep(frame: &BooleanFrame, limits: &Limits) -> Result<CepVerdict> {
    let mut cache = PrincipalCache::new(frame);
    for sub in all_subalgebras(frame, limits)? {
        if let Some(generator) = first_principal_failure(frame, &sub, &mut cache)? {
            return Ok(CepVerdict::from_witness(
                CepMethod::Pcep,
                Some(CepWitness {
                    subalgebra: sub.elements().to_vec(),
                    generator,
                    pair: None,
                }),
            ));
        }
    }
    Ok(CepVerdict::from_witness(CepMethod::Pcep, None))
}

pub fn cep(frame: &BooleanFrame, method: CepMethod, limits: &Limits) -> Result<CepVerdict> {
    match method {
        CepMethod::Direct => cep_direct(frame, limits),
        CepMethod::TwoGenerated => cep_two_generated(frame, limits),
        CepMethod::Pcep => pcep(frame, limits),
    }
}
