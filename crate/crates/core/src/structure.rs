//! Subalgebras, homomorphic images of subalgebras (HS) and subalgebras of
//! homomorphic images (SH), compared up to isomorphism.
//!
//! A Boolean subalgebra of a finite Boolean algebra is determined by the
//! partition of atoms into its relative atoms, so subalgebras of a frame are
//! exactly the atom partitions whose unions are closed under `f`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::congruence::{congruence_generators, quotient};
use crate::error::{Error, Result};
use crate::frame::{leq, product_with_max_atoms, unpair, BooleanFrame, Element};
use crate::iso::canonical_form;
use crate::limits::Limits;
use crate::partitions::SetPartitions;

/// A subalgebra given by its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subalgebra {
    elements: Vec<Element>,
}

impl Subalgebra {
    /// Validates closure under meet, complement and `f`.
    pub fn new(frame: &BooleanFrame, mut elements: Vec<Element>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            frame.check_element(x)?;
        }
        let sub = Subalgebra { elements };
        let closed = sub.contains(0)
            && sub.elements.iter().all(|&x| {
                sub.contains(frame.complement(x))
                    && sub.contains(frame.f(x))
                    && sub.elements.iter().all(|&y| sub.contains(x & y))
            });
        if closed {
            Ok(sub)
        } else {
            Err(Error::NotClosed)
        }
    }

    fn from_blocks(blocks: &[Element]) -> Self {
        let mut elements: Vec<Element> = (0..1u32 << blocks.len())
            .map(|pick| {
                blocks
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| pick >> j & 1 == 1)
                    .fold(0, |acc, (_, &b)| acc | b)
            })
            .collect();
        elements.sort_unstable();
        Subalgebra { elements }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn top(&self) -> Element {
        *self.elements.last().unwrap()
    }

    /// Minimal nonzero members, ordered by their least frame atom.
    pub fn relative_atoms(&self) -> Vec<Element> {
        let top = self.top();
        let mut atoms = Vec::new();
        let mut covered = 0;
        for i in 0..Element::BITS - top.leading_zeros() {
            let bit = 1 << i;
            if covered & bit != 0 {
                continue;
            }
            let block = self
                .elements
                .iter()
                .filter(|&&e| e & bit != 0)
                .fold(top, |acc, &e| acc & e);
            covered |= block;
            atoms.push(block);
        }
        atoms
    }
}

/// Refines a partition of atoms (given as disjoint masks) by `x`.
fn refine(blocks: &mut Vec<Element>, x: Element) {
    let mut out = Vec::with_capacity(blocks.len() + 1);
    for &b in blocks.iter() {
        for part in [b & x, b & !x] {
            if part != 0 {
                out.push(part);
            }
        }
    }
    *blocks = out;
}

/// The least subalgebra containing `generators`.
pub fn generated_subalgebra(frame: &BooleanFrame, generators: &[Element]) -> Result<Subalgebra> {
    for &g in generators {
        frame.check_element(g)?;
    }
    let mut blocks = if frame.is_trivial() {
        vec![]
    } else {
        vec![frame.top()]
    };
    for &g in generators {
        refine(&mut blocks, g);
    }
    loop {
        let sub = Subalgebra::from_blocks(&blocks);
        let before = blocks.len();
        for &x in &sub.elements {
            let fx = frame.f(x);
            if !sub.contains(fx) {
                refine(&mut blocks, fx);
            }
        }
        if blocks.len() == before {
            return Ok(sub);
        }
    }
}

/// Every subalgebra, sorted by element list.
pub fn all_subalgebras(frame: &BooleanFrame, limits: &Limits) -> Result<Vec<Subalgebra>> {
    let k = frame.atoms();
    if k > limits.max_subalgebra_atoms {
        return Err(Error::TooLarge {
            atoms: k,
            max: limits.max_subalgebra_atoms,
        });
    }
    let mut member = vec![false; frame.size()];
    let mut out = Vec::new();
    let mut parts = SetPartitions::new(k as usize);
    while let Some(labels) = parts.next() {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![0; count];
        for (atom, &l) in labels.iter().enumerate() {
            blocks[l] |= 1 << atom;
        }
        let sub = Subalgebra::from_blocks(&blocks);
        for &x in &sub.elements {
            member[x as usize] = true;
        }
        if sub.elements.iter().all(|&x| member[frame.f(x) as usize]) {
            out.push(sub.clone());
        }
        for &x in &sub.elements {
            member[x as usize] = false;
        }
    }
    out.sort();
    Ok(out)
}

/// The subalgebra as a standalone frame on its relative atoms, with the
/// embedding from relative elements into the ambient frame.
pub fn relative_frame(frame: &BooleanFrame, sub: &Subalgebra) -> Result<(BooleanFrame, Vec<Element>)> {
    if sub.is_empty() || sub.top() != frame.top() || !sub.elements.iter().all(|&x| sub.contains(frame.f(x))) {
        return Err(Error::NotClosed);
    }
    let atoms = sub.relative_atoms();
    if atoms.iter().fold(0, |acc, &a| acc | a) != frame.top() {
        return Err(Error::NotClosed);
    }
    let embed: Vec<Element> = (0..1u32 << atoms.len())
        .map(|r| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(j, _)| r >> j & 1 == 1)
                .fold(0, |acc, (_, &a)| acc | a)
        })
        .collect();
    let restrict = |x: Element| -> Element {
        atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| leq(a, x))
            .fold(0, |acc, (j, _)| acc | 1 << j)
    };
    let rel = BooleanFrame::from_fn(atoms.len() as u32, frame.atoms(), |r| {
        restrict(frame.f(embed[r as usize]))
    })?;
    Ok((rel, embed))
}

/// A set of isomorphism classes, each stored as its canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClassSet {
    classes: BTreeSet<(u32, Vec<Element>)>,
}

impl IsoClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Canonical representatives, ordered by atom count then table.
    pub fn frames(&self) -> impl Iterator<Item = BooleanFrame> + '_ {
        self.classes
            .iter()
            .map(|(k, t)| BooleanFrame::with_max_atoms(*k, t.clone(), *k).unwrap())
    }

    pub fn contains(&self, frame: &BooleanFrame, limits: &Limits) -> Result<bool> {
        let c = canonical_form(frame, limits.max_canonical_atoms)?;
        Ok(self.classes.contains(&(c.atoms(), c.table().to_vec())))
    }

    pub fn is_subset(&self, other: &IsoClassSet) -> bool {
        self.classes.is_subset(&other.classes)
    }

    pub fn difference<'a>(&'a self, other: &'a IsoClassSet) -> impl Iterator<Item = BooleanFrame> + 'a {
        self.classes
            .difference(&other.classes)
            .map(|(k, t)| BooleanFrame::with_max_atoms(*k, t.clone(), *k).unwrap())
    }
}

/// Inserts canonical forms, memoized by table.
struct Canonicalizer {
    max_atoms: u32,
    cache: HashMap<Vec<Element>, Vec<Element>>,
}

impl Canonicalizer {
    fn new(limits: &Limits) -> Self {
        Canonicalizer {
            max_atoms: limits.max_canonical_atoms,
            cache: HashMap::new(),
        }
    }

    fn insert(&mut self, set: &mut IsoClassSet, frame: &BooleanFrame) -> Result<()> {
        let canon = match self.cache.get(frame.table()) {
            Some(c) => c.clone(),
            None => {
                let c = canonical_form(frame, self.max_atoms)?.table().to_vec();
                self.cache.insert(frame.table().to_vec(), c.clone());
                c
            }
        };
        set.classes.insert((frame.atoms(), canon));
        Ok(())
    }
}

fn check_canonical_budget(frame: &BooleanFrame, limits: &Limits) -> Result<()> {
    if frame.atoms() > limits.max_canonical_atoms {
        return Err(Error::TooLarge {
            atoms: frame.atoms(),
            max: limits.max_canonical_atoms,
        });
    }
    Ok(())
}

/// Quotients of relative frames of all subalgebras.
pub fn hs_classes(frame: &BooleanFrame, limits: &Limits) -> Result<IsoClassSet> {
    check_canonical_budget(frame, limits)?;
    let mut set = IsoClassSet::default();
    let mut canon = Canonicalizer::new(limits);
    for sub in all_subalgebras(frame, limits)? {
        let (rel, _) = relative_frame(frame, &sub)?;
        for g in congruence_generators(&rel) {
            let (q, _) = quotient(&rel, g)?;
            canon.insert(&mut set, &q)?;
        }
    }
    Ok(set)
}

/// Relative frames of all subalgebras of all quotients.
pub fn sh_classes(frame: &BooleanFrame, limits: &Limits) -> Result<IsoClassSet> {
    check_canonical_budget(frame, limits)?;
    let mut set = IsoClassSet::default();
    let mut canon = Canonicalizer::new(limits);
    for g in congruence_generators(frame) {
        let (q, _) = quotient(frame, g)?;
        for sub in all_subalgebras(&q, limits)? {
            let (rel, _) = relative_frame(&q, &sub)?;
            canon.insert(&mut set, &rel)?;
        }
    }
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsShVerdict {
    pub holds: bool,
    pub hs: IsoClassSet,
    pub sh: IsoClassSet,
    /// A class in exactly one of the two sets.
    pub witness: Option<BooleanFrame>,
}

pub fn hs_equals_sh(frame: &BooleanFrame, limits: &Limits) -> Result<HsShVerdict> {
    let hs = hs_classes(frame, limits)?;
    let sh = sh_classes(frame, limits)?;
    let witness = hs.difference(&sh).chain(sh.difference(&hs)).next();
    Ok(HsShVerdict {
        holds: witness.is_none(),
        hs,
        sh,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FraserHornVerdict {
    pub holds: bool,
    pub product_generators: usize,
    pub factor_generators: (usize, usize),
    /// A product congruence generator that is not a pair, or a pair that is
    /// not a product congruence generator.
    pub witness: Option<Element>,
}

/// Compares the congruences of `a × b` with pairs of factor congruences.
pub fn fraser_horn_check(a: &BooleanFrame, b: &BooleanFrame, limits: &Limits) -> Result<FraserHornVerdict> {
    let p = product_with_max_atoms(a, b, limits.max_atoms)?;
    let ka = a.atoms();
    let ga: BTreeSet<Element> = congruence_generators(a).into_iter().collect();
    let gb: BTreeSet<Element> = congruence_generators(b).into_iter().collect();
    let gp: BTreeSet<Element> = congruence_generators(&p).into_iter().collect();
    let pairs: BTreeSet<Element> = ga
        .iter()
        .flat_map(|&u| gb.iter().map(move |&v| u | v << ka))
        .collect();
    let witness = gp
        .symmetric_difference(&pairs)
        .next()
        .copied();
    debug_assert!(witness.map_or(true, |w| {
        let (u, v) = unpair(w, ka);
        !(ga.contains(&u) && gb.contains(&v)) || !gp.contains(&w)
    }));
    Ok(FraserHornVerdict {
        holds: witness.is_none(),
        product_generators: gp.len(),
        factor_generators: (ga.len(), gb.len()),
        witness,
    })
}
