use thiserror::Error;

use crate::lattice::Vertex;

/// Errors produced by the lattice, graph, engine and verifier layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeoError {
    #[error("valuation undefined at zero")]
    ValuationOfZero,

    #[error("invalid modulus {0}: expected an integer >= 2")]
    InvalidModulus(i64),

    #[error("not a unit lattice edge: {0} - {1}")]
    NotUnitEdge(Vertex, Vertex),

    #[error("vertex {0} is not distinguished for p = {1}")]
    NotDistinguished(Vertex, i64),

    #[error("invalid weight parameters: {0}")]
    InvalidParams(String),

    #[error("invalid reduction configuration: {0}")]
    InvalidReduction(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("window needs {required} cells, cap is {cap}")]
    WindowTooLarge { required: u64, cap: u64 },

    #[error("source {0} lies outside the window")]
    SourceOutsideWindow(Vertex),

    #[error("vertex {0} was not reached inside the window")]
    Unreached(Vertex),

    #[error("geodesic count exceeds cap {0}")]
    CapExceeded(u64),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, GeoError>;
