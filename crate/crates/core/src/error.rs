use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge-list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("graph has {n} vertices, more than the supported maximum of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("instance too large: {what} exceeded the budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("brute-force oracle refuses n = {n} (cap {cap})")]
    OracleCap { n: usize, cap: usize },

    #[error("no (k, q) = ({k}, {q}) target: {reason}")]
    InvalidTarget { k: u32, q: i64, reason: String },

    #[error("could not realize (k, q) = ({k}, {q}) within the search bound")]
    Unrealized { k: u32, q: i64 },
}

impl Error {
    pub(crate) fn budget(what: &'static str, limit: u64) -> Self {
        Error::BudgetExceeded { what, limit }
    }
}
