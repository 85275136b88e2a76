use thiserror::Error;

use crate::graph6::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("{what} {value} outside the supported range {min}..={max}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("host has more than {cap} {what}; refusing to enumerate")]
    FeasibilityCap { what: &'static str, cap: usize },

    #[error("unknown graph family {0:?} (expected star, path, cycle or complete)")]
    UnknownFamily(String),

    #[error("engines disagree on {graph6}: naive = {naive}, classes = {classes}")]
    EngineDisagreement {
        graph6: String,
        naive: String,
        classes: String,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::OrderTooLarge { .. } | Error::OutOfBounds { .. } | Error::FeasibilityCap { .. }
        )
    }
}
