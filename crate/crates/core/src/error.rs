//! Error taxonomy shared by all modules.

use num_bigint::BigUint;

/// Errors surfaced by the library.
///
/// Domain errors carry enough context to be reported verbatim by the CLI.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("coset index {index} exceeds limit {limit}")]
    IndexExceedsLimit { index: BigUint, limit: usize },

    #[error("derived series did not stabilize within {0} steps")]
    StepLimit(usize),

    #[error("group is not transitive")]
    NotTransitive,

    #[error("group is trivial")]
    TrivialGroup,

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded {
        nodes: u64,
        /// Generators found before the budget ran out; a checkpoint for resume.
        partial: Vec<crate::Permutation>,
    },

    #[error("factorization budget exceeded; unfactored cofactor {cofactor}")]
    FactorizationTimeout { cofactor: BigUint },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown group name: {0}")]
    UnknownName(String),

    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },

    #[error("order mismatch: file claims {expected}, chain computed {got}")]
    OrderMismatch { expected: BigUint, got: BigUint },

    #[error("arc element x lies inside the vertex stabilizer")]
    XInsideH,

    #[error("coset graph has {count} vertices, above the cap {cap}")]
    TooManyVertices { count: BigUint, cap: usize },

    #[error("internal adjacency symmetry violation: {0}")]
    BrokenSymmetry(String),

    #[error("generator is not an automorphism of the graph: {0}")]
    NotAnAutomorphism(String),

    #[error("quotient is degenerate: {0}")]
    DegenerateQuotient(String),

    #[error("no Hall subgroup found within budget {budget}")]
    NoHallSubgroupFound { budget: u64 },

    #[error("unknown claim id: {0}")]
    UnknownClaim(String),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("out of statement range: {0}")]
    OutOfStatement(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
