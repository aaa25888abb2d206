//! Exhaustive enumeration of CIF sets over micro-universes.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::grid::ValueGrid;
use crate::set::CifSet;
use crate::space::Space;
use crate::value::CifValue;
use crate::{Error, Result};

pub const DEFAULT_SEARCH_CAP: u128 = 1_000_000;

/// `|grid|^(4·(|V| − 1))`: the raw search space before the magnitude filter.
pub fn raw_search_size(space: &Space, grid: &ValueGrid) -> u128 {
    let free = space.size().saturating_sub(1) as u32;
    (grid.len() as u128).checked_pow(4 * free).unwrap_or(u128::MAX)
}

/// Every table with grid coordinates, `λ.r + ρ.r ≤ 1`, and the top value at
/// zero, each exactly once. The last element varies fastest.
pub fn enumerate_cif_sets(space: Arc<Space>, grid: &ValueGrid) -> Result<CifSetStream> {
    enumerate_cif_sets_with_cap(space, grid, DEFAULT_SEARCH_CAP)
}

pub fn enumerate_cif_sets_with_cap(space: Arc<Space>, grid: &ValueGrid, cap: u128) -> Result<CifSetStream> {
    let size = raw_search_size(&space, grid);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    let values = grid.values();
    let free = space.size() - 1;
    let digits = if values.is_empty() { None } else { Some(vec![0usize; free]) };
    Ok(CifSetStream { space, values, digits })
}

/// Odometer over per-element value choices.
#[derive(Debug, Clone)]
pub struct CifSetStream {
    space: Arc<Space>,
    values: Vec<CifValue>,
    digits: Option<Vec<usize>>,
}

impl Iterator for CifSetStream {
    type Item = CifSet;

    fn next(&mut self) -> Option<CifSet> {
        let digits = self.digits.as_mut()?;
        let mut table = Vec::with_capacity(digits.len() + 1);
        table.push(CifValue::top());
        table.extend(digits.iter().map(|&d| self.values[d]));
        let set = CifSet::new(self.space.clone(), table).expect("one entry per element");

        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.values.len() {
                break;
            }
            digits[pos] = 0;
        }
        Some(set)
    }
}
