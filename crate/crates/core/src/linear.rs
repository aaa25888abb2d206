//! Linear maps between finite superalgebras and anti-homomorphism checks.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::space::Space;
use crate::vector::SuperVector;
use crate::{Error, Result};

/// A GF(p)-linear map `φ: V → V'` given by a `dim' × dim` matrix
/// (column `j` is the image of basis vector `eⱼ`).
#[derive(Debug, Clone)]
pub struct LinearMap {
    source: Arc<Space>,
    target: Arc<Space>,
    rows: Vec<Vec<u32>>,
    // image index of every source element
    images: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntiHomViolation {
    /// Matrix entry `(row, col)` is nonzero across parities.
    Grading { row: usize, col: usize },
    /// `φ([eᵢ, eⱼ]) ≠ −[φ(eᵢ), φ(eⱼ)]` for basis indices `i`, `j`.
    Bracket { i: usize, j: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntiHomReport {
    pub grading_preserving: bool,
    pub violation: Option<AntiHomViolation>,
}

impl AntiHomReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl LinearMap {
    pub fn new(source: Arc<Space>, target: Arc<Space>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let (p, q) = (source.p(), target.p());
        if p != q {
            return Err(Error::FieldMismatch { left: p, right: q });
        }
        if rows.len() != target.dim() {
            return Err(Error::DimensionMismatch { expected: target.dim(), found: rows.len() });
        }
        let field = source.algebra().field();
        for row in &rows {
            if row.len() != source.dim() {
                return Err(Error::DimensionMismatch { expected: source.dim(), found: row.len() });
            }
            for &c in row {
                field.check(c)?;
            }
        }
        let mut map = Self { source, target, rows, images: Vec::new() };
        let mut out = vec![0u32; map.target.dim()];
        map.images = map
            .source
            .indices()
            .map(|i| {
                map.apply_coords(map.source.coords(i), &mut out);
                map.target.encode(&out)
            })
            .collect();
        Ok(map)
    }

    /// Build from the images of the source basis vectors.
    pub fn from_columns(source: Arc<Space>, target: Arc<Space>, columns: &[Vec<u32>]) -> Result<Self> {
        if columns.len() != source.dim() {
            return Err(Error::DimensionMismatch { expected: source.dim(), found: columns.len() });
        }
        let mut rows = vec![vec![0u32; source.dim()]; target.dim()];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != target.dim() {
                return Err(Error::DimensionMismatch { expected: target.dim(), found: col.len() });
            }
            for (i, &c) in col.iter().enumerate() {
                rows[i][j] = c;
            }
        }
        Self::new(source, target, rows)
    }

    pub fn scalar(space: Arc<Space>, alpha: u32) -> Self {
        let dim = space.dim();
        let alpha = alpha % space.p();
        let rows = (0..dim).map(|i| (0..dim).map(|j| if i == j { alpha } else { 0 }).collect()).collect();
        Self::new(space.clone(), space, rows).expect("square matrix over one field")
    }

    pub fn identity(space: Arc<Space>) -> Self {
        Self::scalar(space, 1)
    }

    /// `x ↦ −x`
    pub fn negation(space: Arc<Space>) -> Self {
        let minus_one = space.p() - 1;
        Self::scalar(space, minus_one)
    }

    pub fn zero(source: Arc<Space>, target: Arc<Space>) -> Result<Self> {
        let rows = vec![vec![0u32; source.dim()]; target.dim()];
        Self::new(source, target, rows)
    }

    pub fn source(&self) -> &Arc<Space> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Space> {
        &self.target
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn apply_coords(&self, x: &[u32], out: &mut [u32]) {
        let f = self.source.algebra().field();
        for (o, row) in out.iter_mut().zip(&self.rows) {
            *o = row.iter().zip(x).fold(0, |acc, (&m, &c)| f.add(acc, f.mul(m, c)));
        }
    }

    pub fn apply(&self, x: &SuperVector) -> Result<SuperVector> {
        let i = self.source.index_of(x)?;
        Ok(self.target.vector(self.images[i]))
    }

    /// Image of source element `i` as a target index.
    #[inline]
    pub fn apply_index(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// First nonzero entry mapping an even coordinate to an odd one or vice versa.
    pub fn grading_violation(&self) -> Option<(usize, usize)> {
        let (src, tgt) = (self.source.algebra(), self.target.algebra());
        for (row, entries) in self.rows.iter().enumerate() {
            for (col, &m) in entries.iter().enumerate() {
                if m != 0 && tgt.basis_parity(row) != src.basis_parity(col) {
                    return Some((row, col));
                }
            }
        }
        None
    }

    pub fn is_grading_preserving(&self) -> bool {
        self.grading_violation().is_none()
    }

    /// Checks grading preservation and `φ([eᵢ,eⱼ]) = −[φ(eᵢ),φ(eⱼ)]` on every
    /// pair of basis vectors; bilinearity extends this to all of `V`.
    pub fn validate_antihom(&self) -> AntiHomReport {
        if let Some((row, col)) = self.grading_violation() {
            return AntiHomReport {
                grading_preserving: false,
                violation: Some(AntiHomViolation::Grading { row, col }),
            };
        }
        let src = self.source.algebra();
        let tgt = self.target.algebra();
        let f = src.field();
        let dim = src.dim();
        let mut lhs = vec![0u32; self.target.dim()];
        let mut rhs = vec![0u32; self.target.dim()];
        let mut bracket = vec![0u32; dim];
        let mut ei = vec![0u32; dim];
        let mut ej = vec![0u32; dim];
        let columns: Vec<Vec<u32>> = (0..dim).map(|j| self.rows.iter().map(|row| row[j]).collect()).collect();
        for i in 0..dim {
            ei.iter_mut().for_each(|c| *c = 0);
            ei[i] = 1;
            for j in 0..dim {
                ej.iter_mut().for_each(|c| *c = 0);
                ej[j] = 1;
                src.bracket_into(&ei, &ej, &mut bracket);
                self.apply_coords(&bracket, &mut lhs);
                tgt.bracket_into(&columns[i], &columns[j], &mut rhs);
                if lhs.iter().zip(&rhs).any(|(&l, &r)| l != f.neg(r)) {
                    return AntiHomReport {
                        grading_preserving: true,
                        violation: Some(AntiHomViolation::Bracket { i, j }),
                    };
                }
            }
        }
        AntiHomReport { grading_preserving: true, violation: None }
    }

    /// Exhaustive form of the bracket condition over all element pairs.
    /// Returns the first failing `(x, y)` in lexicographic order.
    pub fn antihom_violation_exhaustive(&self) -> Option<(SuperVector, SuperVector)> {
        let (src, tgt) = (&self.source, &self.target);
        for x in src.indices() {
            for y in src.indices() {
                let lhs = self.images[src.bracket(x, y)];
                let rhs = tgt.neg(tgt.bracket(self.images[x], self.images[y]));
                if lhs != rhs {
                    return Some((src.vector(x), src.vector(y)));
                }
            }
        }
        None
    }

    /// `{x : φ(x) = y}` in lexicographic order.
    pub fn preimage_fiber(&self, y: &SuperVector) -> Result<Vec<SuperVector>> {
        let target = self.target.index_of(y)?;
        Ok(self.fiber_indices(target).map(|i| self.source.vector(i)).collect())
    }

    pub fn fiber_indices(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(move |(_, &img)| img == y).map(|(i, _)| i)
    }
}
