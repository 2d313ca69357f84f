/// Caps and budgets shared by the exhaustive procedures.
///
/// Every search in this crate is exponential in the atom count, so each
/// procedure checks its own cap up front and fails with
/// [`Error::TooLarge`](crate::Error::TooLarge) or
/// [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) instead of running
/// unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest atom count accepted by frame constructors.
    pub max_atoms: u32,
    /// Largest atom count for enumerating all subalgebras (Bell-number scan).
    pub max_subalgebra_atoms: u32,
    /// Largest atom count for canonical forms (k! permutation scan).
    pub max_canonical_atoms: u32,
    /// Number of term evaluations an exhaustive identity check may spend.
    pub eval_budget: u64,
    /// Samples drawn when a check falls back to sampling.
    pub sample_count: u64,
    /// Seed for sampled checks.
    pub sample_seed: u64,
    /// Member cap for unary clone closures.
    pub clone_cap: usize,
    /// Draws allowed for rejection sampling of star-constrained frames.
    pub star_retries: u32,
}

pub const DEFAULT_MAX_ATOMS: u32 = 10;
/// Frames are stored as dense tables indexed by `u32`; beyond this even a
/// raised cap makes no sense.
pub const HARD_MAX_ATOMS: u32 = 20;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
            max_subalgebra_atoms: 9,
            max_canonical_atoms: 8,
            eval_budget: 1 << 26,
            sample_count: 1_000_000,
            sample_seed: 0,
            clone_cap: 1 << 20,
            star_retries: 10_000,
        }
    }
}
