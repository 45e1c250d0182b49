use thiserror::Error;

/// Errors raised by group construction, parsing and the set-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic factor of order 0 is not allowed")]
    ZeroOrder,

    #[error("group order overflows u64")]
    OrderOverflow,

    #[error("element has {found} coordinates, group has rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate {coord} out of range for factor Z{order}")]
    CoordinateOutOfRange { coord: u64, order: u64 },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("group of order {order} is too large to materialize as a bitset")]
    TooLarge { order: u64 },

    #[error("sets belong to different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("set is not contained in the ambient subgroup")]
    NotInAmbient,

    #[error("set is not a subgroup")]
    NotSubgroup,

    #[error("element is not a member of the set")]
    NotAMember,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid subset range {lo}:{hi} (universe has {limit} subsets)")]
    InvalidRange { lo: u64, hi: u64, limit: u128 },

    #[error("output error: {0}")]
    Io(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
