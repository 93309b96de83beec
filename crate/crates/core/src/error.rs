use thiserror::Error;

use crate::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("a complex needs at least one facet (use [[]] for the empty-face complex)")]
    NoFacets,
    #[error("element {0} is a coloop and cannot be deleted")]
    DeleteColoop(usize),
    #[error("element {0} is a loop and cannot be contracted")]
    ContractLoop(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("{0} is not a basis of the complex")]
    NotABasis(VertexSet),
    #[error("shuffle does not match ground sets of sizes {left} and {right}")]
    ShuffleMismatch { left: usize, right: usize },
    #[error("ranks differ ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },
    #[error("skeleton rank {k} exceeds complex rank {rank}")]
    SkeletonOutOfRange { k: usize, rank: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("operation requires a pure complex")]
    NotPure,
    #[error("basis order is not a permutation of the bases")]
    NotABasisOrder,
    #[error("not an order ideal: {0}")]
    NotAnIdeal(String),
    #[error("the order ideal is empty")]
    EmptyIdeal,
    #[error("posets are defined on different element sets")]
    ElementMismatch,
    #[error("{e} is not externally active with respect to {basis}")]
    NotExternallyActive { basis: VertexSet, e: usize },
    #[error("{count} circuits lie in {basis} + {e}; expected exactly one")]
    FundamentalCircuitNotUnique {
        basis: VertexSet,
        e: usize,
        count: usize,
    },
    #[error("deletion-contraction reached {0} which is outside QE and QC")]
    LeftTutteClass(String),
    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    BoxViolation {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },
    #[error("complex is not shifted")]
    NotShifted,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent sub-witnesses: {0}")]
    InconsistentWitnesses(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("dimension {k} out of range for a complex of rank {rank}")]
    DimensionOutOfRange { k: isize, rank: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
