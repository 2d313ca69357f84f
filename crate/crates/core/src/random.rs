//! Seeded random frames for the property-test corpus.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frame::{additive_extension, BooleanFrame, Element};
use crate::limits::{Limits, HARD_MAX_ATOMS};
use crate::terms::{builtin_property, Property};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Every `f(x)` uniform.
    Free,
    /// `f(0) = 0`, the rest uniform.
    Normal,
    /// Uniform atom images, extended additively.
    Additive,
    /// Free frames rejected until the star quasi-equation holds.
    Star,
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" | "free" => Ok(Constraint::Free),
            "normal" => Ok(Constraint::Normal),
            "additive" => Ok(Constraint::Additive),
            "star" => Ok(Constraint::Star),
            other => Err(Error::UnknownSpec(other.to_string())),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::Free => "none",
            Constraint::Normal => "normal",
            Constraint::Additive => "additive",
            Constraint::Star => "star",
        })
    }
}

/// Deterministic in `(atoms, seed, constraint)` and the relevant limits.
pub fn random_frame(
    atoms: u32,
    seed: u64,
    constraint: Constraint,
    limits: &Limits,
) -> Result<BooleanFrame> {
    let max = limits.max_atoms.min(HARD_MAX_ATOMS);
    if atoms > max {
        return Err(Error::TooLarge { atoms, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << atoms;
    let frame = match constraint {
        Constraint::Free => free_frame(atoms, &mut rng)?,
        Constraint::Normal => {
            let mut table = draw_table(size, size, &mut rng);
            table[0] = 0;
            BooleanFrame::with_max_atoms(atoms, table, max)?
        }
        Constraint::Additive => {
            let images = draw_table(atoms as usize, size, &mut rng);
            additive_extension(atoms, &images)?
        }
        Constraint::Star => {
            let mut found = None;
            for _ in 0..limits.star_retries {
                let candidate = free_frame(atoms, &mut rng)?;
                if builtin_property(&candidate, Property::Star, limits)?.holds {
                    found = Some(candidate);
                    break;
                }
            }
            found.ok_or(Error::RetryExhausted {
                budget: limits.star_retries,
            })?
        }
    };
    Ok(frame.named(format!("random:{atoms}:{seed}:{constraint}")))
}

/// `len` values uniform in `0..size`.
fn draw_table(len: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<Element> {
    (0..len).map(|_| rng.gen_range(0..size as Element)).collect()
}

fn free_frame(atoms: u32, rng: &mut ChaCha8Rng) -> Result<BooleanFrame> {
    let size = 1usize << atoms;
    BooleanFrame::with_max_atoms(atoms, draw_table(size, size, rng), HARD_MAX_ATOMS)
}

/// Every frame on `atoms` atoms, in table order (last entry most significant).
pub fn all_frames(atoms: u32) -> impl Iterator<Item = BooleanFrame> {
    let size = 1usize << atoms;
    let count = (size as u64).pow(size as u32);
    (0..count).map(move |mut code| {
        let table = (0..size)
            .map(|_| {
                let v = (code % size as u64) as Element;
                code /= size as u64;
                v
            })
            .collect();
        BooleanFrame::new(atoms, table).expect("enumerated tables are in range")
    })
}
