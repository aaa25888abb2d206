//! Independent generators, brute-force evaluators and the theorem runner.

pub mod brute;
pub mod enumerate;
pub mod generate;
pub mod grid;
pub mod theorem;

pub use enumerate::{enumerate_cif_sets, DEFAULT_SEARCH_CAP};
pub use generate::{random_cif_structure, StructureKind};
pub use grid::ValueGrid;
pub use theorem::{evaluate, run_batch, BatchReport, Check, Instance, Outcome, TheoremId};
