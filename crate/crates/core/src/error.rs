use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge ({u}, {w})")]
    DuplicateEdge { u: usize, w: usize },

    #[error("edge ({u}, {w}) out of range for a graph with n = {n}, m = {m}")]
    IndexOutOfRange {
        u: usize,
        w: usize,
        n: usize,
        m: usize,
    },

    #[error("integer overflow; retry with an arbitrary-precision scalar")]
    Overflow,

    #[error("graph with {nodes} nodes exceeds the dense eigensolver limit of {limit}")]
    TooLarge { nodes: usize, limit: usize },

    #[error("length {0} has no closed form (supported: 2, 4, 6, 8, 10)")]
    UnsupportedLength(usize),

    #[error("invalid length {0}: expected an even length within the supported range")]
    InvalidLength(usize),

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(u64),

    #[error("tree walk length {len} exceeds the configured bound {limit}")]
    ResourceLimit { len: usize, limit: usize },

    #[error("inconsistent bi-regular parameters: n*d_v = {lhs} but m*d_c = {rhs}")]
    InconsistentParameters { lhs: u128, rhs: u128 },

    #[error("girth {girth} too small: at least {required} required")]
    GirthTooSmall { girth: usize, required: usize },

    #[error("length {length}: residual {residual} is not divisible by {divisor}")]
    NonDivisibleTrace {
        length: usize,
        residual: String,
        divisor: usize,
    },

    #[error("no target lengths requested")]
    EmptyTargets,

    #[error("graph is not {0}")]
    WrongClass(&'static str),

    #[error("search budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),

    #[error("generator gave up after {0} attempts")]
    RetriesExhausted(usize),
}
