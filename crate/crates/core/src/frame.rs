//! Finite Boolean frames: the powerset algebra on `k` atoms together with
//! one arbitrary unary operation given by its full table.
//!
//! Elements are bitmasks; bit `i` set means atom `i` belongs to the subset.
//! The Boolean operations are never stored, they are plain bit arithmetic:
//! meet is `&`, join is `|`, complement is `^ top`, symmetric difference is
//! `^`, and `x <= y` iff `x & y == x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{DEFAULT_MAX_ATOMS, HARD_MAX_ATOMS};

/// One member of a finite Boolean algebra, encoded as a subset of atoms.
pub type Element = u32;

/// `x <= y` in the Boolean order.
#[inline]
pub fn leq(x: Element, y: Element) -> bool {
    x & !y == 0
}

/// Iterates over every submask of `mask`, including `0` and `mask` itself.
#[inline]
pub fn submasks(mask: Element) -> impl Iterator<Item = Element> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(into = "crate::io::FrameJson", try_from = "crate::io::FrameJson")]
pub struct BooleanFrame {
    name: Option<String>,
    atoms: u32,
    table: Vec<Element>,
}

impl BooleanFrame {
    /// Validates and builds a frame with the default atom cap.
    pub fn new(atoms: u32, table: Vec<Element>) -> Result<Self> {
        Self::with_max_atoms(atoms, table, DEFAULT_MAX_ATOMS)
    }

    pub fn with_max_atoms(atoms: u32, table: Vec<Element>, max_atoms: u32) -> Result<Self> {
        let max = max_atoms.min(HARD_MAX_ATOMS);
        if atoms > max {
            return Err(Error::TooLarge { atoms, max });
        }
        let expected = 1usize << atoms;
        if table.len() != expected {
            return Err(Error::LengthMismatch {
                atoms,
                expected,
                found: table.len(),
            });
        }
        if let Some((index, &value)) = table
            .iter()
            .enumerate()
            .find(|(_, &v)| v as usize >= expected)
        {
            return Err(Error::ValueOutOfRange {
                index,
                value: value as u64,
                atoms,
            });
        }
        Ok(BooleanFrame {
            name: None,
            atoms,
            table,
        })
    }

    /// Builds a frame from a rule evaluated at every element.
    pub fn from_fn(atoms: u32, max_atoms: u32, f: impl Fn(Element) -> Element) -> Result<Self> {
        let max = max_atoms.min(HARD_MAX_ATOMS);
        if atoms > max {
            return Err(Error::TooLarge { atoms, max });
        }
        let table = (0..1u32 << atoms).map(f).collect();
        Self::with_max_atoms(atoms, table, max)
    }

    /// The one-element algebra: no atoms, `0 = 1`.
    pub fn trivial() -> Self {
        BooleanFrame {
            name: None,
            atoms: 0,
            table: vec![0],
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn atoms(&self) -> u32 {
        self.atoms
    }

    /// Number of elements, `2^k`.
    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn top(&self) -> Element {
        (self.table.len() - 1) as Element
    }

    pub fn is_trivial(&self) -> bool {
        self.atoms == 0
    }

    #[inline]
    pub fn f(&self, x: Element) -> Element {
        self.table[x as usize]
    }

    #[inline]
    pub fn complement(&self, x: Element) -> Element {
        x ^ self.top()
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.table.len() as Element
    }

    pub fn contains(&self, x: Element) -> bool {
        (x as usize) < self.table.len()
    }

    pub(crate) fn check_element(&self, x: Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ValueOutOfRange {
                index: 0,
                value: x as u64,
                atoms: self.atoms,
            })
        }
    }

    /// Same Boolean reduct, different operation.
    pub fn with_table(&self, table: Vec<Element>) -> Result<Self> {
        Self::with_max_atoms(self.atoms, table, HARD_MAX_ATOMS)
    }
}

impl fmt::Debug for BooleanFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BooleanFrame")
            .field("name", &self.name)
            .field("atoms", &self.atoms)
            .field("f", &self.table)
            .finish()
    }
}

/// Public constructor with the default cap.
pub fn make_frame(atoms: u32, table: Vec<Element>) -> Result<BooleanFrame> {
    BooleanFrame::new(atoms, table)
}

/// The additive, normal operation determined by the image of each atom:
/// `g(X)` is the join of the images of the atoms in `X`.
pub fn additive_extension(atoms: u32, atom_images: &[Element]) -> Result<BooleanFrame> {
    if atom_images.len() != atoms as usize {
        return Err(Error::LengthMismatch {
            atoms,
            expected: atoms as usize,
            found: atom_images.len(),
        });
    }
    if atoms > HARD_MAX_ATOMS {
        return Err(Error::TooLarge {
            atoms,
            max: DEFAULT_MAX_ATOMS,
        });
    }
    let size = 1u64 << atoms;
    if let Some((index, &value)) = atom_images
        .iter()
        .enumerate()
        .find(|(_, &v)| v as u64 >= size)
    {
        return Err(Error::ValueOutOfRange {
            index,
            value: value as u64,
            atoms,
        });
    }
    let mut table = vec![0; size as usize];
    for x in 1..size as usize {
        let low = x.trailing_zeros() as usize;
        table[x] = table[x & (x - 1)] | atom_images[low];
    }
    BooleanFrame::new(atoms, table)
}

/// Places `u` in the low `left_atoms` bits and `v` above them.
#[inline]
pub fn pair(u: Element, v: Element, left_atoms: u32) -> Element {
    u | (v << left_atoms)
}

/// Splits a product element back into its components.
#[inline]
pub fn unpair(x: Element, left_atoms: u32) -> (Element, Element) {
    let mask = (1u32 << left_atoms) - 1;
    (x & mask, x >> left_atoms)
}

/// Direct product with pointwise operation; `a`'s atoms occupy the low bits.
pub fn product(a: &BooleanFrame, b: &BooleanFrame) -> Result<BooleanFrame> {
    product_with_max_atoms(a, b, DEFAULT_MAX_ATOMS)
}

pub fn product_with_max_atoms(
    a: &BooleanFrame,
    b: &BooleanFrame,
    max_atoms: u32,
) -> Result<BooleanFrame> {
    let ka = a.atoms();
    let frame = BooleanFrame::from_fn(ka + b.atoms(), max_atoms, |x| {
        let (u, v) = unpair(x, ka);
        pair(a.f(u), b.f(v), ka)
    })?;
    Ok(match (a.name(), b.name()) {
        (Some(l), Some(r)) => frame.named(format!("{l}*{r}")),
        _ => frame,
    })
}
