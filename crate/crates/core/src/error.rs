use thiserror::Error;

use crate::rootsys::Weight;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid algebra {series}{rank}: {reason}")]
    InvalidAlgebra {
        series: char,
        rank: usize,
        reason: String,
    },
    #[error("cannot parse algebra name {0:?}: expected a letter A-G followed by a rank, e.g. \"A2\"")]
    ParseAlgebra(String),
    #[error("cannot parse weight {0:?}: expected comma-separated integers, e.g. \"1,0,1\"")]
    ParseWeight(String),
    #[error("weight has {got} labels but the algebra has rank {rank}")]
    WeightLength { got: usize, rank: usize },
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group too large to enumerate: |W| = {order} exceeds bound {bound}")]
    GroupTooLarge { order: u64, bound: u64 },
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error("evaluation point too close to a pole: {0}")]
    NearPole(String),
    #[error("vertex cone at {vertex:?} is not unimodular")]
    NonUnimodularCone { vertex: Vec<i64> },
    #[error("operation not supported for {0}: {1}")]
    Unsupported(String, String),
    #[error("weight order is not downward closed; missing: {missing:?}")]
    OrderNotDownwardClosed { missing: Vec<Weight> },
    #[error("matrix is not unit lower triangular on the given order: entry ({row}, {col}) = {value}")]
    NotTriangular { row: usize, col: usize, value: i64 },
    #[error("partition function too large: |R_> \\ S| = {size} exceeds bound {bound}")]
    PartitionTooLarge { size: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
