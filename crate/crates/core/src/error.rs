use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group enumeration exceeded the limit of {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("unknown generator or element `{0}`")]
    UnknownSymbol(String),

    #[error("malformed group word `{word}`: {reason}")]
    MalformedWord { word: String, reason: String },

    #[error("orbit is not stable under the given permutation")]
    OrbitNotStable,

    #[error("inconsistent cover data: {0}")]
    CoverInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("fusion multiplicity N_{{{a},{b}}}^{{{c}}} = {n} is not supported (multiplicity-free models only)")]
    Multiplicity { a: String, b: String, c: String, n: u64 },

    #[error("{identity} violated with residual {residual:.3e}")]
    AxiomViolation { identity: String, residual: f64 },

    #[error("invalid model data: {0}")]
    InvalidModel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("crossing position {position} out of range for a word of {len} strands")]
    CrossingOutOfRange { position: usize, len: usize },

    #[error("words do not compose: {0}")]
    Composition(String),

    #[error("unassigned object slot `{0}`")]
    UnassignedSlot(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
