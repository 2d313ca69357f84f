//! Finite Boolean algebras with one extra unary operation.
//!
//! Elements of a frame with `k` atoms are the bitmasks `0..2^k`; the extra
//! operation is stored as a table. Congruences are represented by the
//! generator of their zero class, subalgebras by their sorted element lists.

pub mod builtin;
pub mod cep;
pub mod clone;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod frame;
pub mod io;
pub mod iso;
pub mod kripke;
pub mod limits;
pub mod partitions;
pub mod random;
pub mod structure;
pub mod terms;

pub use builtin::{builtin_frame, builtin_frame_with_max_atoms, TWO_ELEMENT_NAMES};
pub use cep::{cep, cep_direct, cep_two_generated, pcep, restrict_congruence, CepMethod, CepVerdict, CepWitness};
pub use clone::{
    additive_equivalence, additive_members, find_switching_term, hs_two_element_check, unary_clone,
    verify_discriminator, AdditiveEquivalence, CloneResult, SwitchingSearch, UnaryTable,
};
pub use congruence::{
    congruence_generators, is_congruential, is_simple, join_congruences, minimal_nontrivial_congruences,
    principal_congruence, quotient, CongruencePartition,
};
pub use error::{Error, Result};
pub use frame::{additive_extension, leq, make_frame, product, BooleanFrame, Element};
pub use io::{frame_from_json, frame_to_json, read_frame};
pub use iso::{canonical_form, is_isomorphic, AtomPermutation};
pub use kripke::{complex_algebra, KripkeFrame, Modality};
pub use limits::{Limits, DEFAULT_MAX_ATOMS, HARD_MAX_ATOMS};
pub use random::{all_frames, random_frame, Constraint};
pub use structure::{
    all_subalgebras, fraser_horn_check, generated_subalgebra, hs_classes, hs_equals_sh, relative_frame, sh_classes,
    FraserHornVerdict, HsShVerdict, IsoClassSet, Subalgebra,
};
pub use terms::{
    builtin_property, check_quasi_identity, parse_quasi_identity, parse_term, Property, QuasiIdentity, Term,
    Verdict,
};
