//! Kripke frames and their complex algebras.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{leq, BooleanFrame, Element};
use crate::limits::DEFAULT_MAX_ATOMS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modality {
    #[default]
    Diamond,
    Box,
}

/// A set of worlds `0..worlds` with an accessibility relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeFrame {
    worlds: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl KripkeFrame {
    pub fn new(worlds: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= worlds || v >= worlds) {
            return Err(Error::ValueOutOfRange {
                index: 0,
                value: u.max(v) as u64,
                atoms: worlds,
            });
        }
        Ok(KripkeFrame { worlds, edges })
    }

    /// Rim worlds `0..n` related to their neighbours and themselves (mod n),
    /// plus a hub `n` related both ways to every world including itself.
    pub fn wheel(n: u32) -> Result<Self> {
        let hub = n;
        let mut edges = Vec::new();
        for x in 0..n {
            for y in [(x + n - 1) % n, x, (x + 1) % n] {
                edges.push((x, y));
            }
            edges.push((hub, x));
            edges.push((x, hub));
        }
        edges.push((hub, hub));
        KripkeFrame::new(n + 1, edges)
    }

    pub fn worlds(&self) -> u32 {
        self.worlds
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    fn successor_masks(&self) -> Vec<Element> {
        let mut succ = vec![0; self.worlds as usize];
        for &(u, v) in &self.edges {
            succ[u as usize] |= 1 << v;
        }
        succ
    }
}

pub fn complex_algebra(frame: &KripkeFrame, modality: Modality) -> Result<BooleanFrame> {
    complex_algebra_with_max_atoms(frame, modality, DEFAULT_MAX_ATOMS)
}

pub fn complex_algebra_with_max_atoms(
    frame: &KripkeFrame,
    modality: Modality,
    max_atoms: u32,
) -> Result<BooleanFrame> {
    let succ = frame.successor_masks();
    BooleanFrame::from_fn(frame.worlds, max_atoms, |x| {
        succ.iter()
            .enumerate()
            .filter(|&(_, &s)| match modality {
                Modality::Diamond => s & x != 0,
                Modality::Box => leq(s, x),
            })
            .fold(0, |acc, (w, _)| acc | 1 << w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relation_diamond_is_zero() {
        let k = KripkeFrame::new(3, []).unwrap();
        let a = complex_algebra(&k, Modality::Diamond).unwrap();
        assert!(a.table().iter().all(|&v| v == 0));
        let b = complex_algebra(&k, Modality::Box).unwrap();
        assert!(b.table().iter().all(|&v| v == 7));
    }

    #[test]
    fn self_loop_is_identity() {
        let k = KripkeFrame::new(1, [(0, 0)]).unwrap();
        let a = complex_algebra(&k, Modality::Diamond).unwrap();
        assert_eq!(a.table(), &[0, 1]);
    }

    #[test]
    fn wheel_five() {
        let w = KripkeFrame::wheel(5).unwrap();
        assert_eq!(w.worlds(), 6);
        // 5 rims x 3 neighbours, 10 hub spokes, hub loop
        assert_eq!(w.edges().count(), 15 + 10 + 1);
        let a = complex_algebra(&w, Modality::Diamond).unwrap();
        assert_eq!(a.size(), 64);
        assert_eq!(a.f(1 << 5), 63);
        // world 0 is seen by 4, 0, 1 and the hub
        assert_eq!(a.f(1), 0b110011);
    }

    #[test]
    fn rejects_dangling_edges() {
        assert!(KripkeFrame::new(2, [(0, 2)]).is_err());
    }
}
