use alloc::string::String;

use crate::algebra::Axiom;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{p} is not a prime")]
    NotPrime { p: u32 },

    #[error("{axiom} violated on basis tuple {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: [usize; 3] },

    #[error("structure constant index ({i}, {j}, {k}) out of range for dimension {dim}")]
    StructureIndex { i: usize, j: usize, k: usize, dim: usize },

    #[error("structure constant ({i}, {j}, {k}) listed twice")]
    DuplicateStructureConstant { i: usize, j: usize, k: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("coordinate {value} is not reduced modulo {p}")]
    CoordinateOutOfRange { value: u32, p: u32 },

    #[error("CIF sets live over different ambient algebras")]
    AmbientMismatch,

    #[error("universe has {size} elements, cap is {cap}")]
    UniverseTooLarge { size: u128, cap: usize },

    #[error("search space has {size} candidates, cap is {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("operands are not homogeneous with each other: {detail}")]
    NotHomogeneousPair { detail: String },

    #[error("value {value} is outside [0, 1]")]
    OutOfUnitInterval { value: String },

    #[error("magnitudes {lambda} + {rho} exceed 1")]
    MagnitudeSum { lambda: String, rho: String },

    #[error("table has {found} entries, universe has {expected}")]
    TableSize { expected: usize, found: usize },

    #[error("invalid value grid: {0}")]
    InvalidGrid(String),

    #[error("no crisp chain with {requested} proper steps exists (longest is {available})")]
    EmptyChain { requested: usize, available: usize },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("malformed instance: {0}")]
    MalformedInstance(String),
}
