//! Atom permutations, isomorphism testing and canonical forms.
//!
//! Every isomorphism between finite Boolean algebras is induced by a bijection
//! of atoms, so two frames are isomorphic iff some atom permutation commutes
//! with their operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{BooleanFrame, Element};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomPermutation {
    images: Vec<u32>,
}

impl AtomPermutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for (index, &i) in images.iter().enumerate() {
            if i as usize >= k || std::mem::replace(&mut seen[i as usize], true) {
                return Err(Error::ValueOutOfRange {
                    index,
                    value: i as u64,
                    atoms: k as u32,
                });
            }
        }
        Ok(AtomPermutation { images })
    }

    pub fn identity(atoms: u32) -> Self {
        AtomPermutation {
            images: (0..atoms).collect(),
        }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        AtomPermutation { images }
    }

    pub fn apply(&self, x: Element) -> Element {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, _)| x >> i & 1 == 1)
            .fold(0, |acc, (_, &j)| acc | 1 << j)
    }

    /// The induced map on all `2^k` elements.
    pub fn element_map(&self) -> Vec<Element> {
        element_map(&self.images)
    }

    /// Checks `phi(f_a(x)) == f_b(phi(x))` at every element.
    pub fn is_isomorphism(&self, a: &BooleanFrame, b: &BooleanFrame) -> bool {
        if a.atoms() != b.atoms() || self.images.len() != a.atoms() as usize {
            return false;
        }
        let phi = self.element_map();
        a.elements()
            .all(|x| phi[a.f(x) as usize] == b.f(phi[x as usize]))
    }
}

fn element_map(images: &[u32]) -> Vec<Element> {
    let size = 1usize << images.len();
    let mut map = vec![0; size];
    for x in 1..size {
        map[x] = map[x & (x - 1)] | 1 << images[x.trailing_zeros() as usize];
    }
    map
}

/// Lexicographic successor; false once the last permutation is reached.
fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Returns a witness permutation when the frames are isomorphic.
pub fn is_isomorphic(a: &BooleanFrame, b: &BooleanFrame) -> Option<AtomPermutation> {
    if a.atoms() != b.atoms() {
        return None;
    }
    let profile = |fr: &BooleanFrame| {
        let mut p: Vec<(u32, u32)> = fr
            .elements()
            .map(|x| (x.count_ones(), fr.f(x).count_ones()))
            .collect();
        p.sort_unstable();
        p
    };
    if profile(a) != profile(b) {
        return None;
    }
    let k = a.atoms() as usize;
    let mut search = IsoSearch {
        a,
        b,
        images: Vec::with_capacity(k),
        used: vec![false; k],
    };
    if search.extend() {
        let perm = AtomPermutation {
            images: search.images,
        };
        debug_assert!(perm.is_isomorphism(a, b));
        Some(perm)
    } else {
        None
    }
}

/// Backtracking over partial atom assignments. After fixing the images of
/// atoms `0..m`, every element `x` built from those atoms has a known image,
/// and membership of each fixed atom in `f_a(x)` must match membership of its
/// image in `f_b(phi(x))`.
struct IsoSearch<'a> {
    a: &'a BooleanFrame,
    b: &'a BooleanFrame,
    images: Vec<u32>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self) -> bool {
        let k = self.used.len();
        let m = self.images.len();
        if m == k {
            return true;
        }
        for target in 0..k as u32 {
            if self.used[target as usize] {
                continue;
            }
            self.images.push(target);
            self.used[target as usize] = true;
            if self.consistent() && self.extend() {
                return true;
            }
            self.used[target as usize] = false;
            self.images.pop();
        }
        false
    }

    fn consistent(&self) -> bool {
        let m = self.images.len();
        let phi = element_map(&self.images);
        let newest = 1u32 << (m - 1);
        // only elements involving the newest atom, or any element checked
        // against the newest atom's membership, carry new information
        (0..1u32 << m).all(|x| {
            let fa = self.a.f(x);
            let fb = self.b.f(phi[x as usize]);
            if x & newest != 0 {
                (0..m).all(|i| (fa >> i & 1) == (fb >> self.images[i] & 1))
            } else {
                (fa >> (m - 1) & 1) == (fb >> self.images[m - 1] & 1)
            }
        })
    }
}

/// The isomorphic copy of `frame` whose table is lexicographically least over
/// all atom permutations. Isomorphic frames have identical canonical forms.
pub fn canonical_form(frame: &BooleanFrame, max_atoms: u32) -> Result<BooleanFrame> {
    let k = frame.atoms();
    if k > max_atoms {
        return Err(Error::TooLarge {
            atoms: k,
            max: max_atoms,
        });
    }
    let size = frame.size();
    let mut best: Vec<Element> = frame.table().to_vec();
    let mut perm: Vec<u32> = (0..k).collect();
    let mut inverse = vec![0u32; k as usize];
    let mut candidate = vec![0; size];
    while next_permutation(&mut perm) {
        for (i, &j) in perm.iter().enumerate() {
            inverse[j as usize] = i as u32;
        }
        let phi = element_map(&perm);
        let psi = element_map(&inverse);
        let mut better = false;
        for y in 0..size {
            let v = phi[frame.f(psi[y]) as usize];
            if !better {
                match v.cmp(&best[y]) {
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Less => better = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            candidate[y] = v;
        }
        if better {
            best.copy_from_slice(&candidate);
        }
    }
    BooleanFrame::with_max_atoms(k, best, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_frame;

    fn permuted(frame: &BooleanFrame, perm: &AtomPermutation) -> BooleanFrame {
        let phi = perm.element_map();
        let psi = perm.inverse().element_map();
        let table = frame
            .elements()
            .map(|y| phi[frame.f(psi[y as usize]) as usize])
            .collect();
        frame.with_table(table).unwrap()
    }

    #[test]
    fn reflexive_with_identity_witness() {
        let a = builtin_frame("example1").unwrap();
        assert_eq!(is_isomorphic(&a, &a), Some(AtomPermutation::identity(3)));
    }

    #[test]
    fn two_element_frames_distinct() {
        let zero = builtin_frame("two:zero").unwrap();
        let id = builtin_frame("two:id").unwrap();
        assert_eq!(is_isomorphic(&zero, &id), None);
        assert_eq!(is_isomorphic(&zero, &BooleanFrame::trivial()), None);
    }

    #[test]
    fn finds_nontrivial_witness() {
        let a = builtin_frame("example-sh").unwrap();
        let perm = AtomPermutation::new(vec![2, 0, 1]).unwrap();
        let b = permuted(&a, &perm);
        assert_ne!(a.table(), b.table());
        let w = is_isomorphic(&a, &b).unwrap();
        assert!(w.is_isomorphism(&a, &b));
        assert!(w.inverse().is_isomorphism(&b, &a));
        assert_eq!(
            canonical_form(&a, 8).unwrap().table(),
            canonical_form(&b, 8).unwrap().table()
        );
    }

    #[test]
    fn permutation_validation() {
        assert!(AtomPermutation::new(vec![0, 0]).is_err());
        assert!(AtomPermutation::new(vec![0, 2]).is_err());
        let p = AtomPermutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.apply(0b001), 0b010);
        assert_eq!(p.apply(0b101), 0b011);
        assert_eq!(p.element_map()[5], 0b011);
    }

    #[test]
    fn next_permutation_counts() {
        let mut p = vec![0, 1, 2, 3];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 24);
        assert!(!next_permutation(&mut []));
    }

    #[test]
    fn canonical_idempotent_and_capped() {
        let a = builtin_frame("cycle:4").unwrap();
        let c = canonical_form(&a, 8).unwrap();
        assert_eq!(canonical_form(&c, 8).unwrap(), c);
        assert!(c.table() <= a.table());
        assert!(is_isomorphic(&a, &c).is_some());
        assert!(canonical_form(&a, 3).is_err());
    }
}
