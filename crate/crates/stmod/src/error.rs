//! Crate-wide error type and the process exit codes the CLI maps it onto.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic must be a prime in 2..=97, got {0}")]
    BadCharacteristic(u64),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),

    #[error("unsupported group order {order} (cap {cap})")]
    OrderCap { order: usize, cap: usize },

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("bad construction spec `{0}`: {1}")]
    BadSpec(String, String),

    #[error("matrices do not define a module: {0}")]
    NotAModule(String),

    #[error("map is not equivariant")]
    NotEquivariant,

    #[error("subspace is not closed under the group action")]
    NotActionClosed,

    #[error("{0} requires a p-group for the working characteristic")]
    NotPGroup(&'static str),

    #[error("groups or fields of the operands do not match: {0}")]
    Incompatible(String),

    #[error("enumeration needs {needed} candidates, over the cap 2^{cap_log2}")]
    EnumCap { needed: f64, cap_log2: u32 },

    #[error("degree {requested} outside the configured cap {cap}")]
    DegreeCap { requested: i64, cap: i64 },

    #[error("no periodicity witness for d <= {max_d}")]
    NoPeriodicityWitness { max_d: i64 },

    #[error("generator sweep did not stabilize below the cap {cap}")]
    NoStabilization { cap: i64 },

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// CLI contract: 0 = computed, 1 = bad input, 2 = blocked by a cap,
    /// 3 = internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EnumCap { .. }
            | Error::DegreeCap { .. }
            | Error::NoPeriodicityWitness { .. }
            | Error::NoStabilization { .. }
            | Error::OrderCap { .. } => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for internal invariant failures: conditions that hold by
/// theorem when the callers' preconditions do, so a trip here is a bug.
macro_rules! internal {
    ($($arg:tt)*) => {
        $crate::error::Error::Internal(format!($($arg)*))
    };
}
pub(crate) use internal;
