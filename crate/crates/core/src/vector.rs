use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Z2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Degree of a product of homogeneous elements, `α + β mod 2`.
impl core::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        Parity::from_bit((self.bit() + other.bit()) % 2)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A coordinate vector of `V = V₀ ⊕ V₁`: the first `d0` coordinates span the
/// even part, the remaining ones the odd part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperVector {
    d0: usize,
    coords: Vec<u32>,
}

impl SuperVector {
    pub fn zero(d0: usize, d1: usize) -> Self {
        Self { d0, coords: vec![0; d0 + d1] }
    }

    /// `coords` must already be reduced modulo the field; the algebra checks this
    /// where vectors enter from outside.
    pub fn new(d0: usize, coords: Vec<u32>) -> Self {
        assert!(d0 <= coords.len(), "even dimension exceeds vector length");
        Self { d0, coords }
    }

    pub fn basis(d0: usize, d1: usize, i: usize) -> Self {
        let mut v = Self::zero(d0, d1);
        v.coords[i] = 1;
        v
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn even_dim(&self) -> usize {
        self.d0
    }

    pub fn odd_dim(&self) -> usize {
        self.coords.len() - self.d0
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Split `x = x₀ + x₁` with `x₀` even-supported and `x₁` odd-supported.
    pub fn graded_parts(&self) -> (SuperVector, SuperVector) {
        let mut even = self.clone();
        let mut odd = self.clone();
        even.coords[self.d0..].iter_mut().for_each(|c| *c = 0);
        odd.coords[..self.d0].iter_mut().for_each(|c| *c = 0);
        (even, odd)
    }

    pub fn is_homogeneous_of(&self, parity: Parity) -> bool {
        match parity {
            Parity::Even => self.coords[self.d0..].iter().all(|&c| c == 0),
            Parity::Odd => self.coords[..self.d0].iter().all(|&c| c == 0),
        }
    }

    /// Degree of a homogeneous vector; `None` for mixed vectors. Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        if self.is_homogeneous_of(Parity::Even) {
            Some(Parity::Even)
        } else if self.is_homogeneous_of(Parity::Odd) {
            Some(Parity::Odd)
        } else {
            None
        }
    }
}

impl fmt::Display for SuperVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if i == self.d0 {
                f.write_str("| ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_parts_split_coordinates() {
        // heisenberg(5,1) coordinates (e | a, b)
        let e_plus_a = SuperVector::new(1, vec![1, 1, 0]);
        let (x0, x1) = e_plus_a.graded_parts();
        assert_eq!(x0.coords(), [1, 0, 0]);
        assert_eq!(x1.coords(), [0, 1, 0]);

        let zero = SuperVector::zero(1, 2);
        assert_eq!(zero.graded_parts(), (zero.clone(), zero.clone()));

        let v = SuperVector::new(1, vec![2, 3, 4]);
        let (x0, x1) = v.graded_parts();
        assert_eq!(x0.coords(), [2, 0, 0]);
        assert_eq!(x1.coords(), [0, 3, 4]);
    }

    #[test]
    fn parity_of_homogeneous_vectors() {
        assert_eq!(SuperVector::new(1, vec![3, 0, 0]).parity(), Some(Parity::Even));
        assert_eq!(SuperVector::new(1, vec![0, 0, 2]).parity(), Some(Parity::Odd));
        assert_eq!(SuperVector::new(1, vec![1, 0, 2]).parity(), None);
        let zero = SuperVector::zero(1, 2);
        assert!(zero.is_homogeneous_of(Parity::Even) && zero.is_homogeneous_of(Parity::Odd));
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
    }
}
