//! The finite universe of a Lie superalgebra over GF(p), indexed in
//! lexicographic coordinate order.
//!
//! Element `i` has coordinates given by the base-`p` digits of `i`, most
//! significant first, so index 0 is the zero vector and iteration order is
//! the lexicographic order on coordinate vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LieSuperalgebra;
use crate::vector::{Parity, SuperVector};
use crate::{Error, Result};

pub const DEFAULT_UNIVERSE_CAP: usize = 100_000;

/// `p^(d0+d1)` without overflow.
pub fn universe_size(algebra: &LieSuperalgebra) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..algebra.dim() {
        size = size.saturating_mul(u128::from(algebra.p()));
    }
    size
}

/// Every element of `V`, once each, in lexicographic order.
pub fn enumerate_elements(algebra: &LieSuperalgebra, cap: usize) -> Result<impl Iterator<Item = SuperVector> + '_> {
    let size = universe_size(algebra);
    if size > cap as u128 {
        return Err(Error::UniverseTooLarge { size, cap });
    }
    let dim = algebra.dim();
    let p = algebra.p() as usize;
    Ok((0..size as usize).map(move |mut idx| {
        let mut coords = vec![0u32; dim];
        for c in coords.iter_mut().rev() {
            *c = (idx % p) as u32;
            idx /= p;
        }
        SuperVector::new(algebra.even_dim(), coords)
    }))
}

#[derive(Debug, Clone)]
pub struct Space {
    algebra: LieSuperalgebra,
    size: usize,
    // place value of each coordinate
    weights: Vec<usize>,
    // coordinates of element i at [i*dim .. (i+1)*dim]
    coords: Vec<u32>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
    }
}

impl Eq for Space {}

impl Space {
    pub fn new(algebra: LieSuperalgebra) -> Result<Self> {
        Self::with_cap(algebra, DEFAULT_UNIVERSE_CAP)
    }

    pub fn with_cap(algebra: LieSuperalgebra, cap: usize) -> Result<Self> {
        let size = universe_size(&algebra);
        if size > cap as u128 {
            return Err(Error::UniverseTooLarge { size, cap });
        }
        let size = size as usize;
        let dim = algebra.dim();
        let p = algebra.p() as usize;
        let mut weights = vec![1usize; dim];
        for k in (0..dim.saturating_sub(1)).rev() {
            weights[k] = weights[k + 1] * p;
        }
        let mut coords = Vec::with_capacity(size * dim);
        for v in enumerate_elements(&algebra, cap)? {
            coords.extend_from_slice(v.coords());
        }
        Ok(Self { algebra, size, weights, coords })
    }

    #[inline]
    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.algebra.p()
    }

    pub fn indices(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn coords(&self, i: usize) -> &[u32] {
        let dim = self.dim();
        &self.coords[i * dim..(i + 1) * dim]
    }

    pub fn vector(&self, i: usize) -> SuperVector {
        SuperVector::new(self.algebra.even_dim(), self.coords(i).to_vec())
    }

    #[inline]
    pub fn encode(&self, coords: &[u32]) -> usize {
        coords.iter().zip(&self.weights).map(|(&c, &w)| c as usize * w).sum()
    }

    pub fn index_of(&self, x: &SuperVector) -> Result<usize> {
        if x.len() != self.dim() || x.even_dim() != self.algebra.even_dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        for &c in x.coords() {
            self.algebra.field().check(c)?;
        }
        Ok(self.encode(x.coords()))
    }

    pub fn elements(&self) -> impl Iterator<Item = SuperVector> + '_ {
        self.indices().map(|i| self.vector(i))
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        let f = self.algebra.field();
        self.coords(i)
            .iter()
            .zip(self.coords(j))
            .zip(&self.weights)
            .map(|((&a, &b), &w)| f.add(a, b) as usize * w)
            .sum()
    }

    #[inline]
    pub fn sub(&self, i: usize, j: usize) -> usize {
        let f = self.algebra.field();
        self.coords(i)
            .iter()
            .zip(self.coords(j))
            .zip(&self.weights)
            .map(|((&a, &b), &w)| f.sub(a, b) as usize * w)
            .sum()
    }

    #[inline]
    pub fn neg(&self, i: usize) -> usize {
        let f = self.algebra.field();
        self.coords(i).iter().zip(&self.weights).map(|(&a, &w)| f.neg(a) as usize * w).sum()
    }

    #[inline]
    pub fn scale(&self, alpha: u32, i: usize) -> usize {
        let f = self.algebra.field();
        self.coords(i).iter().zip(&self.weights).map(|(&a, &w)| f.mul(alpha, a) as usize * w).sum()
    }

    pub fn bracket(&self, i: usize, j: usize) -> usize {
        let mut out = vec![0u32; self.dim()];
        self.algebra.bracket_into(self.coords(i), self.coords(j), &mut out);
        self.encode(&out)
    }

    /// Indices of `(x₀, x₁)`.
    pub fn graded_parts(&self, i: usize) -> (usize, usize) {
        let d0 = self.algebra.even_dim();
        let c = self.coords(i);
        let even: usize = c[..d0].iter().zip(&self.weights[..d0]).map(|(&a, &w)| a as usize * w).sum();
        let odd: usize = c[d0..].iter().zip(&self.weights[d0..]).map(|(&a, &w)| a as usize * w).sum();
        (even, odd)
    }

    pub fn in_part(&self, i: usize, parity: Parity) -> bool {
        let d0 = self.algebra.even_dim();
        let c = self.coords(i);
        match parity {
            Parity::Even => c[d0..].iter().all(|&a| a == 0),
            Parity::Odd => c[..d0].iter().all(|&a| a == 0),
        }
    }

    /// Indices of `V_parity` in increasing order.
    pub fn part(&self, parity: Parity) -> impl Iterator<Item = usize> + '_ {
        self.indices().filter(move |&i| self.in_part(i, parity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        let a = LieSuperalgebra::abelian(2, 1, 0).unwrap();
        let all: Vec<_> = enumerate_elements(&a, DEFAULT_UNIVERSE_CAP).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert!(all[0].is_zero());
        assert_eq!(all[1], a.basis(0));

        let h = LieSuperalgebra::heisenberg(5, 1).unwrap();
        assert_eq!(enumerate_elements(&h, DEFAULT_UNIVERSE_CAP).unwrap().count(), 125);

        let h72 = LieSuperalgebra::heisenberg(7, 2).unwrap();
        assert_eq!(Space::new(h72).unwrap().size(), 16_807);

        let h73 = LieSuperalgebra::heisenberg(7, 3).unwrap();
        assert!(matches!(Space::new(h73), Err(Error::UniverseTooLarge { size: 823_543, cap: DEFAULT_UNIVERSE_CAP })));
    }

    #[test]
    fn enumeration_is_lexicographic_and_indexed() {
        let h = LieSuperalgebra::heisenberg(3, 1).unwrap();
        let s = Space::new(h).unwrap();
        let all: Vec<_> = s.elements().collect();
        assert!(all.windows(2).all(|w| w[0].coords() < w[1].coords()));
        for (i, v) in all.iter().enumerate() {
            assert_eq!(s.index_of(v).unwrap(), i);
        }
    }

    #[test]
    fn index_arithmetic_matches_vector_arithmetic() {
        let h = LieSuperalgebra::heisenberg(5, 1).unwrap();
        let s = Space::new(h.clone()).unwrap();
        for i in s.indices().step_by(7) {
            for j in s.indices().step_by(11) {
                let (x, y) = (s.vector(i), s.vector(j));
                assert_eq!(s.vector(s.add(i, j)), h.add(&x, &y).unwrap());
                assert_eq!(s.vector(s.bracket(i, j)), h.bracket(&x, &y).unwrap());
                assert_eq!(s.add(s.sub(i, j), j), i);
            }
            assert_eq!(s.add(i, s.neg(i)), 0);
            let (x0, x1) = s.graded_parts(i);
            assert_eq!(s.add(x0, x1), i);
            assert!(s.in_part(x0, Parity::Even) && s.in_part(x1, Parity::Odd));
        }
        assert_eq!(s.part(Parity::Even).count(), 5);
        assert_eq!(s.part(Parity::Odd).count(), 25);
    }
}
