//! JSON import and export of frames.
//!
//! Frame JSON: `{"name": "...", "atoms": k, "f": [...]}`.
//! Kripke JSON: `{"worlds": n, "edges": [[u, v], ...], "modality": "diamond"}`.
//! Inputs are told apart by the presence of `worlds`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::frame::{BooleanFrame, Element};
use crate::kripke::{complex_algebra_with_max_atoms, KripkeFrame, Modality};
use crate::limits::DEFAULT_MAX_ATOMS;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub atoms: u32,
    pub f: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeJson {
    pub worlds: u32,
    pub edges: Vec<(u32, u32)>,
    #[serde(default)]
    pub modality: Modality,
}

impl From<&BooleanFrame> for FrameJson {
    fn from(frame: &BooleanFrame) -> Self {
        FrameJson {
            name: frame.name().map(str::to_owned),
            atoms: frame.atoms(),
            f: frame.table().iter().map(|&v| v as u64).collect(),
        }
    }
}

impl From<BooleanFrame> for FrameJson {
    fn from(frame: BooleanFrame) -> Self {
        FrameJson::from(&frame)
    }
}

impl TryFrom<FrameJson> for BooleanFrame {
    type Error = Error;

    fn try_from(json: FrameJson) -> Result<Self> {
        json.into_frame(crate::limits::HARD_MAX_ATOMS)
    }
}

impl FrameJson {
    pub fn into_frame(self, max_atoms: u32) -> Result<BooleanFrame> {
        let expected = 1u64.checked_shl(self.atoms).unwrap_or(u64::MAX);
        if let Some((index, &value)) = self.f.iter().enumerate().find(|(_, &v)| v >= expected) {
            return Err(Error::ValueOutOfRange {
                index,
                value,
                atoms: self.atoms,
            });
        }
        let table: Vec<Element> = self.f.into_iter().map(|v| v as Element).collect();
        let frame = BooleanFrame::with_max_atoms(self.atoms, table, max_atoms)?;
        Ok(match self.name {
            Some(name) => frame.named(name),
            None => frame,
        })
    }
}

impl KripkeJson {
    pub fn from_kripke(frame: &KripkeFrame, modality: Modality) -> Self {
        KripkeJson {
            worlds: frame.worlds(),
            edges: frame.edges().collect(),
            modality,
        }
    }

    pub fn into_frame(self, max_atoms: u32) -> Result<BooleanFrame> {
        let kripke = KripkeFrame::new(self.worlds, self.edges)?;
        complex_algebra_with_max_atoms(&kripke, self.modality, max_atoms)
    }
}

/// Parses either JSON form into a frame.
pub fn frame_from_json(text: &str, max_atoms: u32) -> Result<BooleanFrame> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let is_kripke = value.get("worlds").is_some();
    if is_kripke {
        let k: KripkeJson = serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?;
        k.into_frame(max_atoms)
    } else {
        let f: FrameJson = serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?;
        f.into_frame(max_atoms)
    }
}

pub fn read_frame(text: &str) -> Result<BooleanFrame> {
    frame_from_json(text, DEFAULT_MAX_ATOMS)
}

pub fn frame_to_json(frame: &BooleanFrame) -> String {
    serde_json::to_string(&FrameJson::from(frame)).expect("frame JSON serializes")
}

pub fn kripke_to_json(frame: &KripkeFrame, modality: Modality) -> String {
    serde_json::to_string(&KripkeJson::from_kripke(frame, modality)).expect("Kripke JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_frame;

    #[test]
    fn round_trip() {
        for spec in ["example1", "example-sh", "cycle:3", "wheel:5", "two:zero"] {
            let a = builtin_frame(spec).unwrap();
            let back = read_frame(&frame_to_json(&a)).unwrap();
            assert_eq!(back, a);
        }
        let t = BooleanFrame::trivial();
        assert_eq!(read_frame(&frame_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn frame_json_shape() {
        let a = builtin_frame("example1").unwrap();
        assert_eq!(
            frame_to_json(&a),
            r#"{"name":"example1","atoms":3,"f":[0,1,2,3,4,7,6,7]}"#
        );
        let unnamed = read_frame(r#"{"atoms":1,"f":[0,1]}"#).unwrap();
        assert_eq!(unnamed.name(), None);
    }

    #[test]
    fn kripke_input() {
        let wheel = KripkeFrame::wheel(5).unwrap();
        let text = kripke_to_json(&wheel, Modality::Diamond);
        let a = read_frame(&text).unwrap();
        assert_eq!(a.table(), builtin_frame("wheel:5").unwrap().table());
        let b = read_frame(r#"{"worlds":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(b.table(), &[0, 0, 1, 1]);
        let boxed = read_frame(r#"{"worlds":2,"edges":[[0,1]],"modality":"box"}"#).unwrap();
        assert_eq!(boxed.table(), &[2, 2, 3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            read_frame(r#"{"atoms":2,"f":[0,1,2]}"#),
            Err(Error::LengthMismatch { expected: 4, found: 3, .. })
        ));
        assert!(matches!(
            read_frame(r#"{"atoms":1,"f":[0,4294967296]}"#),
            Err(Error::ValueOutOfRange { index: 1, .. })
        ));
        assert!(matches!(read_frame("{"), Err(Error::Format(_))));
        assert!(matches!(
            read_frame(r#"{"worlds":2,"edges":[[0,5]]}"#),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            frame_from_json(r#"{"atoms":12,"f":[]}"#, 10),
            Err(Error::TooLarge { atoms: 12, max: 10 })
        ));
    }
}
