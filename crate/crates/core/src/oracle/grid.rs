//! Finite value grids that make generation and enumeration discrete.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::value::{format_rational, parse_rational, rational, CifValue, Rational};
use crate::{Error, Result};

/// Ascending, deduplicated rationals in `[0, 1]`; always contains `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueGrid {
    levels: Vec<Rational>,
}

impl ValueGrid {
    pub fn new(levels: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut levels: Vec<Rational> = levels.into_iter().collect();
        if let Some(bad) = levels.iter().find(|r| **r > Rational::one()) {
            return Err(Error::InvalidGrid(format!("{} is outside [0, 1]", format_rational(bad))));
        }
        levels.sort_unstable();
        levels.dedup();
        if levels.first() != Some(&Rational::zero()) {
            return Err(Error::InvalidGrid(String::from("grid must contain 0")));
        }
        Ok(Self { levels })
    }

    /// `{0, 1/n, 2/n, …, 1}`
    pub fn uniform(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGrid(String::from("need at least one step")));
        }
        Self::new((0..=n).map(|k| rational(k, n)))
    }

    /// Comma-separated rationals, e.g. `0,1/2,1`.
    pub fn parse(spec: &str) -> Result<Self> {
        let levels = spec
            .split(',')
            .map(|s| parse_rational(s).map_err(|_| Error::InvalidGrid(format!("bad level {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(levels)
    }

    pub fn levels(&self) -> &[Rational] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Every `CifValue` with all four coordinates on the grid, in
    /// lexicographic `(λ.r, λ.w, ρ.r, ρ.w)` order.
    pub fn values(&self) -> Vec<CifValue> {
        let mut out = Vec::new();
        for &lr in &self.levels {
            for &lw in &self.levels {
                for &rr in &self.levels {
                    for &rw in &self.levels {
                        if let Ok(v) = crate::value::UnitValue::new(lr, lw)
                            .and_then(|l| CifValue::new(l, crate::value::UnitValue::new(rr, rw)?))
                        {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Default for ValueGrid {
    fn default() -> Self {
        Self::uniform(10).expect("valid grid")
    }
}

impl fmt::Display for ValueGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&format_rational(r))?;
        }
        Ok(())
    }
}
