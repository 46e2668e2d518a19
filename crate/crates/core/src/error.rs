use thiserror::Error;

/// Errors raised by the library. Every variant is a domain or input error;
/// nothing here wraps I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Calogero-Moser pair: rank([X,Y] - tau I) = {minus_tau}, rank([X,Y] + tau I) = {plus_tau}")]
    NotCalogeroMoser { minus_tau: usize, plus_tau: usize },
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("direct sum is not cyclic (Krylov span {span} < {dim})")]
    NotCyclic { span: usize, dim: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
