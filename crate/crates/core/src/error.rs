use thiserror::Error;

use crate::braid::MoveError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid torus knot parameters ({p}, {q}): {reason}")]
    InvalidParams { p: u64, q: u64, reason: &'static str },

    #[error("table bound {bound} is below frobenius number + 1 = {}", frobenius + 1)]
    BoundBelowFrobenius { bound: u64, frobenius: i64 },

    #[error("parameter {0} is not in the open interval (0, 1)")]
    OutOfUnitInterval(String),

    #[error("cannot parse rational {0:?}, expected \"a/b\"")]
    BadRational(String),

    #[error("t = {0} is not regular (jump of the signature function)")]
    NotRegular(String),

    #[error("not regular at requested precision: eigenvalue {eigenvalue:e} below tolerance {tolerance:e}")]
    IllConditioned { eigenvalue: f64, tolerance: f64 },

    #[error("tolerance {0:e} exceeds the permitted maximum 1e-4")]
    ToleranceTooLoose(f64),

    #[error("braid closure is split: generator a{0} does not occur")]
    SplitClosure(usize),

    #[error("braid closure has {0} components, a knot is required")]
    NotAKnot(usize),

    #[error("step {index}: {source}")]
    IllegalStep {
        index: usize,
        #[source]
        source: MoveError,
    },

    #[error(transparent)]
    Move(#[from] MoveError),

    #[error("replayed end word {actual} differs from declared end {declared}")]
    DeclaredEndMismatch { actual: String, declared: String },

    #[error("{which} closure is not certified as {claimed}")]
    EndpointMismatch { which: &'static str, claimed: String },

    #[error("script is not decomposable: it deletes generators")]
    NotDecomposable,

    #[error("script does not connect two knots")]
    NotKnotToKnot,

    #[error("the two knots are identical: {0}")]
    IdenticalKnots(String),

    #[error("no obstruction found for {0}")]
    NoObstruction(String),

    #[error("invalid script: {0}")]
    InvalidScript(String),

    #[error("unknown check suite {0:?}")]
    UnknownSuite(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
