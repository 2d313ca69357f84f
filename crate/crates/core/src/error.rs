use crate::frame::Element;
use crate::terms::SyntaxError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("table has {found} entries but {atoms} atoms require {expected}")]
    LengthMismatch {
        atoms: u32,
        expected: usize,
        found: usize,
    },
    #[error("value {value} at index {index} is out of range for {atoms} atoms")]
    ValueOutOfRange { index: usize, value: u64, atoms: u32 },
    #[error("{atoms} atoms exceeds the configured maximum of {max}")]
    TooLarge { atoms: u32, max: u32 },
    #[error("unknown builtin frame `{0}`")]
    UnknownSpec(String),
    #[error("no frame satisfying the constraint within {budget} draws")]
    RetryExhausted { budget: u32 },
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("operation `g` used without a companion table")]
    MissingCompanion,
    #[error("exhaustive check needs 2^{log2_needed} evaluations, budget is {budget}")]
    BudgetExceeded { log2_needed: u32, budget: u64 },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("element {0} does not generate a congruence")]
    NotCongruential(Element),
    #[error("element set is not a subalgebra")]
    NotClosed,
    #[error("operation requires a nontrivial frame")]
    TrivialFrame,
    #[error("table is not a switching function")]
    NotSwitching,
    #[error("invalid frame document: {0}")]
    Format(String),
}
