//! Error types.

use thiserror::Error;

use crate::rootsys::{Family, RootSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("no simple Lie algebra of type {family:?} and rank {rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("rank {0} exceeds the supported maximum of 64")]
    RankTooLarge(usize),
    #[error("cannot parse Lie type `{0}`")]
    Parse(String),
    #[error("{0} is not a set of simple roots of this system")]
    NotSubset(RootSet),
    #[error("{0} is not connected in the Dynkin diagram")]
    Disconnected(RootSet),
    #[error("subdiagram {0} has no supported shape")]
    Unclassifiable(RootSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeaweedError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("composition sums to {sum}, exceeding rank {rank}")]
    CompositionTooLarge { sum: usize, rank: usize },
    #[error("the set {0} is not a partial-sum set")]
    NotAComposition(RootSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeanderError {
    #[error("pi1 and pi2 do not cover all simple roots (missing {0}); decompose the seaweed into a direct sum first")]
    NotFullUnion(RootSet),
    #[error("{0}")]
    MovePrecondition(&'static str),
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error(transparent)]
    Seaweed(#[from] SeaweedError),
    #[error("generated meander is not Frobenius")]
    NotFrobenius,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Meander(#[from] MeanderError),
    #[error("seaweed is not Frobenius")]
    NotFrobenius,
    #[error("eigenvalue constraints are inconsistent")]
    Inconsistent,
    #[error("eigenvalue constraints leave {0} degrees of freedom")]
    Underdetermined(usize),
    #[error("solved eigenvalue of alpha_{0} is not an integer")]
    NonIntegral(usize),
    #[error("root is not supported in the component")]
    RootOutsideComponent,
    #[error("component is not of type A")]
    NotTypeA,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix realisations exist only for type A, got {0}")]
    Unsupported(String),
    #[error("basis is not closed under the bracket")]
    NotClosed,
    #[error("functional is not Frobenius (rank {rank} < dimension {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("eigenvalue multiplicities sum to {found}, expected {dim}: non-integer spectrum")]
    NonIntegerSpectrum { found: usize, dim: usize },
    #[error("matrix is not in the span of the basis")]
    NotInSpan,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("rank {0} is too large to enumerate (limit 16)")]
    RankTooLarge(usize),
}
