//! Subspaces of `GF(p)^n` in reduced row echelon form, with closure under the
//! bracket. Used to build chains of crisp sub-superalgebras and ideals.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LieSuperalgebra;
use crate::space::Space;
use crate::vector::Parity;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    n: usize,
    // RREF rows sorted by pivot column; each pivot entry is 1
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Self { p, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: u32, n: usize) -> Self {
        let mut s = Self::zero(p, n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            s.insert(&e);
        }
        s
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = u64::from(self.p);
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((u64::from(*x) + (p - u64::from(c)) * u64::from(r)) % p) as u32;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Add `v` to the span. Returns `false` if it was already contained.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.n);
        let p = u64::from(self.p);
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = crate::field::PrimeField::new(self.p).expect("prime").inv(v[piv]).expect("nonzero");
        for x in v.iter_mut() {
            *x = (u64::from(*x) * u64::from(inv) % p) as u32;
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = ((u64::from(*x) + (p - u64::from(c)) * u64::from(r)) % p) as u32;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(at, v);
        self.pivots.insert(at, piv);
        true
    }

    /// Whether the span is spanned by homogeneous vectors.
    pub fn is_graded(&self, d0: usize) -> bool {
        self.rows.iter().all(|row| {
            let (even, odd) = row.split_at(d0);
            let mut x0 = even.to_vec();
            x0.extend(core::iter::repeat_n(0, odd.len()));
            self.contains(&x0)
        })
    }

    /// Smallest subspace containing `self` that is closed under the bracket
    /// (`ideal = false`) or under bracketing with all of `V` (`ideal = true`).
    /// Brackets are split into graded parts, so a graded input stays graded.
    pub fn close_under_bracket(&mut self, algebra: &LieSuperalgebra, ideal: bool) {
        let n = self.n;
        let d0 = algebra.even_dim();
        let mut out = vec![0u32; n];
        loop {
            let mut grew = false;
            let current = self.rows.clone();
            let partners: Vec<Vec<u32>> = if ideal {
                (0..n)
                    .map(|i| {
                        let mut e = vec![0; n];
                        e[i] = 1;
                        e
                    })
                    .collect()
            } else {
                current.clone()
            };
            for x in &current {
                for y in &partners {
                    algebra.bracket_into(x, y, &mut out);
                    let mut even = out.clone();
                    even[d0..].iter_mut().for_each(|c| *c = 0);
                    let mut odd = out.clone();
                    odd[..d0].iter_mut().for_each(|c| *c = 0);
                    grew |= self.insert(&even);
                    grew |= self.insert(&odd);
                }
            }
            if !grew {
                return;
            }
        }
    }

    /// Indices (in `space`) of every element of the subspace, sorted.
    pub fn element_indices(&self, space: &Space) -> Vec<usize> {
        let f = space.algebra().field();
        let mut out = vec![0usize];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            for &base in &out {
                for c in 1..self.p {
                    let v: Vec<u32> =
                        space.coords(base).iter().zip(row).map(|(&b, &r)| f.add(b, f.mul(c, r))).collect();
                    next.push(space.encode(&v));
                }
            }
            out.extend(next);
        }
        out.sort_unstable();
        out
    }

    /// Homogeneous part of the given parity as its own subspace.
    pub fn part(&self, d0: usize, parity: Parity) -> Subspace {
        let mut s = Subspace::zero(self.p, self.n);
        for row in &self.rows {
            let mut v = row.clone();
            match parity {
                Parity::Even => v[d0..].iter_mut().for_each(|c| *c = 0),
                Parity::Odd => v[..d0].iter_mut().for_each(|c| *c = 0),
            }
            s.insert(&v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_membership() {
        let mut s = Subspace::zero(5, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(!s.insert(&[2, 4, 0]));
        assert!(s.contains(&[3, 1, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert!(s.insert(&[0, 1, 1]));
        assert_eq!(s.dimension(), 2);
        assert_eq!(Subspace::full(5, 3).dimension(), 3);
    }

    #[test]
    fn heisenberg_closures() {
        let h = LieSuperalgebra::heisenberg(5, 1).unwrap();
        let space = Space::new(h.clone()).unwrap();

        // ideal generated by a contains [a, b] = e
        let mut s = Subspace::zero(5, 3);
        s.insert(&[0, 1, 0]);
        s.close_under_bracket(&h, true);
        assert_eq!(s.dimension(), 2);
        assert!(s.contains(&[1, 0, 0]));

        // subalgebra generated by a is just ⟨a⟩ ([a, a] = 0)
        let mut t = Subspace::zero(5, 3);
        t.insert(&[0, 1, 0]);
        t.close_under_bracket(&h, false);
        assert_eq!(t.dimension(), 1);
        assert_eq!(t.element_indices(&space).len(), 5);

        // subalgebra generated by a + b: [a+b, a+b] = 2e
        let mut u = Subspace::zero(5, 3);
        u.insert(&[0, 1, 1]);
        u.close_under_bracket(&h, false);
        assert_eq!(u.dimension(), 2);
        assert!(u.is_graded(1));

        let mut mixed = Subspace::zero(5, 3);
        mixed.insert(&[1, 1, 0]);
        assert!(!mixed.is_graded(1));
        assert_eq!(mixed.part(1, Parity::Even).dimension(), 1);
        assert_eq!(Subspace::full(5, 3).element_indices(&space), (0..125).collect::<Vec<_>>());
    }
}
