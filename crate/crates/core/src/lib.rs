//! Complex intuitionistic fuzzy (CIF) sets over finite-dimensional Lie
//! superalgebras defined over prime fields.
//!
//! Everything is finite and exact: field elements are residues mod `p`,
//! membership values are rationals in polar normal form `r·e^{i2πw}`, and
//! every universally quantified condition is checked by exhaustive
//! enumeration of the ambient space (guarded by a universe cap).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and
//! the command-line front end live in the `ciflie` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linear;
pub mod ops;
pub mod oracle;
pub mod set;
pub mod space;
pub mod subspace;
pub mod value;
pub mod vector;
pub mod verify;

pub use algebra::{
    check_axioms, make_superalgebra, AlgebraWarning, Axiom, AxiomReport, LieSuperalgebra, StructureConstant,
};
pub use error::Error;
pub use field::PrimeField;
pub use linear::{AntiHomReport, AntiHomViolation, LinearMap};
pub use set::CifSet;
pub use space::{enumerate_elements, Space, DEFAULT_UNIVERSE_CAP};
pub use value::{CifValue, CutThreshold, Rational, UnitValue};
pub use vector::{Parity, SuperVector};
pub use verify::{CrispSubset, Structure, Verdict, Witness};

pub type Result<T, E = Error> = core::result::Result<T, E>;
