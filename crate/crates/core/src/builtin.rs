//! Named frames used throughout the test suites and the CLI.
//!
//! * `example1`: three atoms, `f` fixes everything except `{0,2} -> top`.
//! * `example-sh`: three atoms `a, b, c`; `f(b) = 1`, `f(1) = 0`, `f(c) = 0`,
//!   all other elements fixed. Simple, not CEP, yet HS = SH.
//! * `cycle:N`: `N` atoms; `0 -> top -> {N-1} -> ... -> {0} -> 0`, identity
//!   elsewhere.
//! * `wheel:N`: diamond complex algebra of the wheel frame on `N` rim worlds.
//! * `two:id|zero|one|swap`: the four 2-element frames.

use crate::error::{Error, Result};
use crate::frame::{BooleanFrame, Element};
use crate::kripke::{complex_algebra_with_max_atoms, KripkeFrame, Modality};
use crate::limits::DEFAULT_MAX_ATOMS;

pub const TWO_ELEMENT_NAMES: [&str; 4] = ["two:id", "two:zero", "two:one", "two:swap"];

pub fn builtin_frame(spec: &str) -> Result<BooleanFrame> {
    builtin_frame_with_max_atoms(spec, DEFAULT_MAX_ATOMS)
}

pub fn builtin_frame_with_max_atoms(spec: &str, max_atoms: u32) -> Result<BooleanFrame> {
    let unknown = || Error::UnknownSpec(spec.to_string());
    let frame = match spec {
        "example1" => {
            let mut table: Vec<Element> = (0..8).collect();
            table[0b101] = 0b111;
            BooleanFrame::new(3, table)?
        }
        "example-sh" => {
            let mut table: Vec<Element> = (0..8).collect();
            table[0b010] = 0b111;
            table[0b111] = 0;
            table[0b100] = 0;
            BooleanFrame::new(3, table)?
        }
        "two:id" => BooleanFrame::new(1, vec![0, 1])?,
        "two:zero" => BooleanFrame::new(1, vec![0, 0])?,
        "two:one" => BooleanFrame::new(1, vec![1, 1])?,
        "two:swap" => BooleanFrame::new(1, vec![1, 0])?,
        _ => {
            let (kind, arg) = spec.split_once(':').ok_or_else(unknown)?;
            let n: u32 = arg.parse().map_err(|_| unknown())?;
            match kind {
                "cycle" if n >= 2 => cycle_frame(n, max_atoms)?,
                "wheel" if n >= 5 => {
                    let w = KripkeFrame::wheel(n)?;
                    complex_algebra_with_max_atoms(&w, Modality::Diamond, max_atoms)?
                }
                _ => return Err(unknown()),
            }
        }
    };
    Ok(frame.named(spec))
}

fn cycle_frame(n: u32, max_atoms: u32) -> Result<BooleanFrame> {
    let top = ((1u64 << n) - 1) as Element;
    BooleanFrame::from_fn(n, max_atoms, |x| {
        if x == 0 {
            top
        } else if x == top {
            1 << (n - 1)
        } else if x.is_power_of_two() {
            x >> 1
        } else {
            x
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_table() {
        let a = builtin_frame("example1").unwrap();
        assert_eq!(a.table(), &[0, 1, 2, 3, 4, 7, 6, 7]);
        assert_eq!(a.name(), Some("example1"));
    }

    #[test]
    fn example_sh_table() {
        let a = builtin_frame("example-sh").unwrap();
        assert_eq!(a.table(), &[0, 1, 7, 3, 0, 5, 6, 0]);
    }

    #[test]
    fn cycle_three_orbit() {
        let a = builtin_frame("cycle:3").unwrap();
        let mut x = 0;
        let mut orbit = vec![x];
        for _ in 0..5 {
            x = a.f(x);
            orbit.push(x);
        }
        assert_eq!(orbit, vec![0, 7, 4, 2, 1, 0]);
        for fixed in [3, 5, 6] {
            assert_eq!(a.f(fixed), fixed);
        }
    }

    #[test]
    fn cycle_two() {
        let a = builtin_frame("cycle:2").unwrap();
        assert_eq!(a.table(), &[3, 0, 1, 2]);
    }

    #[test]
    fn two_element_frames() {
        assert_eq!(builtin_frame("two:swap").unwrap().table(), &[1, 0]);
        assert_eq!(builtin_frame("two:one").unwrap().table(), &[1, 1]);
    }

    #[test]
    fn errors() {
        for bad in ["nope", "cycle:1", "wheel:4", "cycle:x", "two:other"] {
            assert!(matches!(builtin_frame(bad), Err(Error::UnknownSpec(_))), "{bad}");
        }
        assert!(matches!(
            builtin_frame("wheel:10"),
            Err(Error::TooLarge { atoms: 11, .. })
        ));
        assert!(builtin_frame_with_max_atoms("wheel:10", 11).is_ok());
    }
}
