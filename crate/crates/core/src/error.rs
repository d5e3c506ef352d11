use thiserror::Error;

use crate::atlas::CounterexampleBundle;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph, partition or command input.
    #[error("invalid input: {0}")]
    Input(String),

    /// The input is well formed but outside the domain of the operation
    /// (disconnected graph, complete graph where a bound is undefined, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("not a vertex cut: {0}")]
    NotACut(String),

    /// A construction hypothesis failed. `step` is the 1-based construction
    /// step, absent for checks on the initial partition.
    #[error("precondition failed{}: {clause}", step.map(|s| format!(" at step {s}")).unwrap_or_default())]
    Precondition { step: Option<usize>, clause: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("bound violated by graph {}", .0.graph6)]
    Counterexample(Box<CounterexampleBundle>),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(step: Option<usize>, clause: impl Into<String>) -> Self {
        Error::Precondition {
            step,
            clause: clause.into(),
        }
    }
}
