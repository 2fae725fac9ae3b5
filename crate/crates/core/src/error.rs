// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::topology::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("soft sets or topologies belong to different contexts")]
    ContextMismatch,

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error("universe has {size} elements, at most {max} are supported")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("subset mask {mask:#x} does not fit a universe of {size} elements")]
    SubsetOutOfRange { mask: u64, size: usize },

    #[error("not a soft topology: {0}")]
    InvalidTopology(Box<Violation>),

    #[error("not a topology on {points} points: {reason}")]
    InvalidPointTopology { points: usize, reason: String },

    #[error("bitopology components live on {left} and {right} points")]
    PointSetMismatch { left: usize, right: usize },

    #[error("{what} of size {size} exceeds the exhaustive bound {max}")]
    SizeOverBound {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("invalid search configuration: {0}")]
    Config(String),

    #[error("fixture: {0}")]
    Fixture(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
