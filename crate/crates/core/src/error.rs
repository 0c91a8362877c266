use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("coordinate {index} out of range (order {order})")]
    OutOfRange { index: usize, order: usize },

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: usize, order: usize },

    #[error("enumeration budget exceeded: {needed} > {budget} ({what})")]
    BudgetExceeded { what: &'static str, needed: u128, budget: u128 },

    #[error("invalid structured endomorphism: {0}")]
    InvalidEndo(String),

    #[error("malformed pair spec: {0}")]
    PairSpec(String),

    #[error("invalid graph input: {0}")]
    InvalidGraph(String),

    #[error("path is not composable: {0}")]
    NotComposable(String),

    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },

    #[error("component is not unicyclic: {vertices} vertices, {edges} edges")]
    NotUnicyclic { vertices: usize, edges: usize },

    #[error("base group admits a fixed point free automorphism; tree criterion refused")]
    HasFpfAutomorphism,

    #[error("no usable component for witness construction")]
    NoUsableComponent,

    #[error("pair is not fixed point free: {0}")]
    NotFpf(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid (f, g) data: {0}")]
    InvalidFgPair(String),

    #[error("automorphism is not in Aut0: {0}")]
    NotInAut0(String),

    #[error("precondition unmet: {0}")]
    Precondition(String),

    #[error("non-integral count: {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
