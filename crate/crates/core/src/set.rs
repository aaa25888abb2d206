//! Total CIF tables over the universe of a superalgebra.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::space::Space;
use crate::value::{CifValue, Rational, UnitValue};
use crate::vector::SuperVector;
use crate::{Error, Result};

/// `A = (λ_A, ρ_A)`: one [`CifValue`] for every element of `V`, indexed like
/// [`Space`].
#[derive(Debug, Clone)]
pub struct CifSet {
    space: Arc<Space>,
    table: Vec<CifValue>,
}

impl PartialEq for CifSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other).is_ok() && self.table == other.table
    }
}

impl Eq for CifSet {}

/// Which half of a CIF value a homogeneity witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Lambda,
    Rho,
}

/// Elements `x`, `y` where `r(x) ≤ r(y)` and `w(x) ≤ w(y)` disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomogeneityViolation {
    pub component: Component,
    pub x: usize,
    pub y: usize,
}

impl CifSet {
    pub fn new(space: Arc<Space>, table: Vec<CifValue>) -> Result<Self> {
        if table.len() != space.size() {
            return Err(Error::TableSize { expected: space.size(), found: table.len() });
        }
        Ok(Self { space, table })
    }

    pub fn from_fn(space: Arc<Space>, f: impl FnMut(usize) -> CifValue) -> Self {
        let table = space.indices().map(f).collect();
        Self { space, table }
    }

    pub fn try_from_fn(space: Arc<Space>, f: impl FnMut(usize) -> Result<CifValue>) -> Result<Self> {
        let table = space.indices().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self { space, table })
    }

    /// `λ = 1` at zero and `0` elsewhere, `ρ` dually.
    pub fn trivial(space: Arc<Space>) -> Self {
        Self::from_fn(space, |i| if i == 0 { CifValue::top() } else { CifValue::bottom() })
    }

    pub fn constant(space: Arc<Space>, value: CifValue) -> Self {
        Self::from_fn(space, |_| value)
    }

    /// `λ = 1`, `ρ = 0` everywhere.
    pub fn top(space: Arc<Space>) -> Self {
        Self::constant(space, CifValue::top())
    }

    #[inline]
    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    #[inline]
    pub fn value(&self, i: usize) -> &CifValue {
        &self.table[i]
    }

    #[inline]
    pub fn lambda(&self, i: usize) -> &UnitValue {
        self.table[i].lambda()
    }

    #[inline]
    pub fn rho(&self, i: usize) -> &UnitValue {
        self.table[i].rho()
    }

    pub fn value_at(&self, x: &SuperVector) -> Result<&CifValue> {
        Ok(&self.table[self.space.index_of(x)?])
    }

    pub fn table(&self) -> &[CifValue] {
        &self.table
    }

    pub fn into_table(self) -> Vec<CifValue> {
        self.table
    }

    /// Copy with the value at one element replaced.
    pub fn with_value(&self, i: usize, value: CifValue) -> Self {
        let mut table = self.table.clone();
        table[i] = value;
        Self { space: self.space.clone(), table }
    }

    pub fn same_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Exact table equality over a shared ambient.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.table == other.table)
    }

    /// `λ(0) = 1·e^{i2π}` and `ρ(0) = 0`.
    pub fn is_normalized(&self) -> bool {
        self.table[0] == CifValue::top()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity_violation().is_none()
    }

    /// First pair violating `r(x) ≤ r(y) ⇔ w(x) ≤ w(y)` (and the `ρ` twin).
    ///
    /// The biconditional only depends on the attained values, so it is
    /// checked over distinct values, each represented by its first element.
    pub fn homogeneity_violation(&self) -> Option<HomogeneityViolation> {
        cross_violation(self, self)
    }

    /// Pairwise form: `r_A(x) ≤ r_B(y) ⇔ w_A(x) ≤ w_B(y)` for all `x, y`, and
    /// likewise for `ρ`. Not symmetric in `A` and `B`.
    pub fn is_homogeneous_with(&self, other: &Self) -> Result<bool> {
        Ok(self.homogeneity_violation_with(other)?.is_none())
    }

    pub fn homogeneity_violation_with(&self, other: &Self) -> Result<Option<HomogeneityViolation>> {
        self.same_ambient(other)?;
        Ok(cross_violation(self, other))
    }
}

fn distinct(values: impl Iterator<Item = (usize, UnitValue)>) -> Vec<((Rational, Rational), usize)> {
    let mut seen: BTreeMap<(Rational, Rational), usize> = BTreeMap::new();
    for (i, u) in values {
        seen.entry((u.r(), u.w())).or_insert(i);
    }
    seen.into_iter().collect()
}

fn cross_violation(a: &CifSet, b: &CifSet) -> Option<HomogeneityViolation> {
    for component in [Component::Lambda, Component::Rho] {
        let pick = |s: &CifSet, i: usize| match component {
            Component::Lambda => *s.lambda(i),
            Component::Rho => *s.rho(i),
        };
        let left = distinct(a.space.indices().map(|i| (i, pick(a, i))));
        let right = distinct(b.space.indices().map(|i| (i, pick(b, i))));
        for &((rx, wx), x) in &left {
            for &((ry, wy), y) in &right {
                if (rx <= ry) != (wx <= wy) {
                    return Some(HomogeneityViolation { component, x, y });
                }
            }
        }
    }
    None
}
