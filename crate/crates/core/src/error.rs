use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("node {0} is outside 1..=6")]
    InvalidNode(i64),
    #[error("vertex {0} is outside 1..=27")]
    InvalidVertex(i64),
    #[error("malformed crystal graph: {0}")]
    Graph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid rigged configuration: {0}")]
    InvalidConfiguration(String),
    #[error("delta requires a rigged configuration with L >= 1")]
    EmptyPath,
    #[error("vertex {vertex} cannot be appended to the given rigged configuration")]
    InvalidPair { vertex: u8 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
