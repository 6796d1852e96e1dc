use thiserror::Error;

/// Errors raised by the tree, coloring and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid family parameters for `{family}`: {reason}")]
    InvalidFamilyParams { family: String, reason: String },
    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange {
        order: usize,
        min: usize,
        max: usize,
    },
    #[error("edge ({0}, {1}) is not an edge of the tree")]
    EdgeNotInTree(usize, usize),
    #[error("trees have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("coloring assignment is incomplete: {0}")]
    IncompleteAssignment(String),
    #[error("bad color: {0}")]
    BadColor(String),
    #[error("pattern with {pattern} vertices does not fit a host with {host} vertices")]
    PatternTooLarge { pattern: usize, host: usize },
    #[error("cannot use {colors} colors on {edges} edges")]
    TooManyColors { colors: usize, edges: usize },
    #[error("rainbow search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("color budget {t} below the minimum {min} for this construction")]
    BadColorBudget { t: usize, min: usize },
    #[error("bad edge order: {0}")]
    BadEdgeOrder(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
