use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance has no labels")]
    EmptyInstance,

    #[error("set `{0}` is empty")]
    EmptySet(String),

    #[error("label `{0}` appears more than once")]
    DuplicateLabel(String),

    #[error("shift vector domain mismatch (missing: {missing:?}, extra: {extra:?})")]
    DomainMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph is disconnected: {left:?} | {right:?}")]
    Disconnected {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("weight system is infeasible: cycle {cycle:?} has weight {weight}")]
    Infeasible { cycle: Vec<String>, weight: i64 },

    #[error("weights do not match the edges of the graph: {0}")]
    WeightMismatch(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("invalid Prüfer code: {0}")]
    InvalidPrufer(String),

    #[error("search space of {count} candidates exceeds the guard limit of {limit}")]
    GuardLimit { count: u128, limit: u128 },

    #[error("search cancelled before any candidate was evaluated")]
    Cancelled,

    #[error("certificate tree does not span the instance labels: {0}")]
    CertificateMismatch(String),

    #[error("ruler order must be positive")]
    InvalidRulerOrder,

    #[error("edge {{{0}, {1}}} is not covered")]
    NotACover(String, String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
