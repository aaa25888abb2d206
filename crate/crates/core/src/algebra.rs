//! Lie superalgebras given by structure constants over GF(p).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeField;
use crate::vector::{Parity, SuperVector};
use crate::{Error, Result};

/// One nonzero entry `c[i][j][k]` of `[eᵢ, eⱼ] = Σₖ c[i][j][k]·eₖ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: i64,
}

impl StructureConstant {
    pub fn new(i: usize, j: usize, k: usize, value: i64) -> Self {
        Self { i, j, k, value }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `[V_i, V_j] ⊆ V_{i+j}`
    Grading,
    /// `[x, y] = −(−1)^{|x||y|}[y, x]`
    SuperSkewSymmetry,
    /// `[x,[y,z]] − (−1)^{|x||y|}[y,[x,z]] = [[x,y],z]`
    SuperJacobi,
}

impl Axiom {
    pub const ALL: [Axiom; 3] = [Axiom::Grading, Axiom::SuperSkewSymmetry, Axiom::SuperJacobi];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Grading => "grading",
            Axiom::SuperSkewSymmetry => "super skew-symmetry",
            Axiom::SuperJacobi => "super Jacobi identity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Non-fatal diagnostics attached to a validated algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraWarning {
    /// p ∈ {2, 3}: the super sign `(−1)^{|x||y|}` degenerates (p = 2) or the
    /// usual odd-square conventions break down (p = 3).
    LowCharacteristic { p: u32 },
}

impl fmt::Display for AlgebraWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraWarning::LowCharacteristic { p } => {
                write!(f, "characteristic {p}: super sign conventions degenerate")
            }
        }
    }
}

/// A validated Lie superalgebra `V = V₀ ⊕ V₁` with basis `e₀..e_{d0+d1-1}`,
/// even basis vectors first.
#[derive(Debug, Clone)]
pub struct LieSuperalgebra {
    field: PrimeField,
    d0: usize,
    d1: usize,
    // dense c[i][j][k] at (i * dim + j) * dim + k
    sc: Vec<u32>,
    warnings: Vec<AlgebraWarning>,
}

impl PartialEq for LieSuperalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.d0 == other.d0 && self.d1 == other.d1 && self.sc == other.sc
    }
}

impl Eq for LieSuperalgebra {}

/// Build a Lie superalgebra from its nonzero structure constants and check all
/// three axioms on every basis tuple. Unlisted constants are zero; values are
/// reduced modulo `p`.
pub fn make_superalgebra(p: u32, d0: usize, d1: usize, sc: &[StructureConstant]) -> Result<LieSuperalgebra> {
    let algebra = build_unchecked(p, d0, d1, sc)?;
    algebra.validate()?;
    Ok(algebra)
}

/// Status of each axiom: the first violating basis tuple, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: [(Axiom, Option<[usize; 3]>); 3],
    pub warnings: Vec<AlgebraWarning>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|(_, w)| w.is_none())
    }
}

/// Evaluate every axiom without stopping at the first failure. Errors only
/// on malformed input (non-prime modulus, bad or duplicate indices).
pub fn check_axioms(p: u32, d0: usize, d1: usize, sc: &[StructureConstant]) -> Result<AxiomReport> {
    let algebra = build_unchecked(p, d0, d1, sc)?;
    Ok(AxiomReport {
        checks: [
            (Axiom::Grading, algebra.grading_violation()),
            (Axiom::SuperSkewSymmetry, algebra.skew_violation()),
            (Axiom::SuperJacobi, algebra.jacobi_violation()),
        ],
        warnings: algebra.warnings,
    })
}

fn build_unchecked(p: u32, d0: usize, d1: usize, sc: &[StructureConstant]) -> Result<LieSuperalgebra> {
    let field = PrimeField::new(p)?;
    let dim = d0 + d1;
    let mut dense = vec![0u32; dim * dim * dim];
    let mut seen = vec![false; dim * dim * dim];
    for c in sc {
        if c.i >= dim || c.j >= dim || c.k >= dim {
            return Err(Error::StructureIndex { i: c.i, j: c.j, k: c.k, dim });
        }
        let at = (c.i * dim + c.j) * dim + c.k;
        if seen[at] {
            return Err(Error::DuplicateStructureConstant { i: c.i, j: c.j, k: c.k });
        }
        seen[at] = true;
        dense[at] = field.reduce(c.value);
    }
    let mut warnings = Vec::new();
    if p == 2 || p == 3 {
        warnings.push(AlgebraWarning::LowCharacteristic { p });
    }
    Ok(LieSuperalgebra { field, d0, d1, sc: dense, warnings })
}

impl LieSuperalgebra {
    /// Heisenberg superalgebra: `N₀ = ⟨e⟩`, `N₁ = ⟨a₁..aₙ, b₁..bₙ⟩`,
    /// `[aᵢ,bᵢ] = [bᵢ,aᵢ] = e`, all other brackets zero.
    pub fn heisenberg(p: u32, n: usize) -> Result<Self> {
        let mut sc = Vec::with_capacity(2 * n);
        for i in 0..n {
            let a = 1 + i;
            let b = 1 + n + i;
            sc.push(StructureConstant::new(a, b, 0, 1));
            sc.push(StructureConstant::new(b, a, 0, 1));
        }
        make_superalgebra(p, 1, 2 * n, &sc)
    }

    /// Zero bracket on `V₀ ⊕ V₁` with the given dimensions.
    pub fn abelian(p: u32, d0: usize, d1: usize) -> Result<Self> {
        make_superalgebra(p, d0, d1, &[])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    #[inline]
    pub fn even_dim(&self) -> usize {
        self.d0
    }

    #[inline]
    pub fn odd_dim(&self) -> usize {
        self.d1
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.d0 + self.d1
    }

    pub fn warnings(&self) -> &[AlgebraWarning] {
        &self.warnings
    }

    pub fn basis_parity(&self, i: usize) -> Parity {
        if i < self.d0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        let dim = self.dim();
        self.sc[(i * dim + j) * dim + k]
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let dim = self.dim();
        let mut out = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = self.structure_constant(i, j, k);
                    if c != 0 {
                        out.push(StructureConstant::new(i, j, k, i64::from(c)));
                    }
                }
            }
        }
        out
    }

    pub fn zero(&self) -> SuperVector {
        SuperVector::zero(self.d0, self.d1)
    }

    pub fn basis(&self, i: usize) -> SuperVector {
        SuperVector::basis(self.d0, self.d1, i)
    }

    /// Vector from raw coordinates, checking length and reduction.
    pub fn vector(&self, coords: Vec<u32>) -> Result<SuperVector> {
        self.check_len(coords.len())?;
        for &c in &coords {
            self.field.check(c)?;
        }
        Ok(SuperVector::new(self.d0, coords))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: len });
        }
        Ok(())
    }

    fn check(&self, x: &SuperVector) -> Result<()> {
        self.check_len(x.len())?;
        if x.even_dim() != self.d0 {
            return Err(Error::DimensionMismatch { expected: self.d0, found: x.even_dim() });
        }
        Ok(())
    }

    pub fn add(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector> {
        self.check(x)?;
        self.check(y)?;
        let f = self.field;
        let coords = x.coords().iter().zip(y.coords()).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(SuperVector::new(self.d0, coords))
    }

    pub fn neg(&self, x: &SuperVector) -> Result<SuperVector> {
        self.check(x)?;
        let f = self.field;
        Ok(SuperVector::new(self.d0, x.coords().iter().map(|&a| f.neg(a)).collect()))
    }

    pub fn scale(&self, alpha: u32, x: &SuperVector) -> Result<SuperVector> {
        self.check(x)?;
        let f = self.field;
        let alpha = alpha % f.modulus();
        Ok(SuperVector::new(self.d0, x.coords().iter().map(|&a| f.mul(alpha, a)).collect()))
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector> {
        self.check(x)?;
        self.check(y)?;
        let mut out = vec![0u32; self.dim()];
        self.bracket_into(x.coords(), y.coords(), &mut out);
        Ok(SuperVector::new(self.d0, out))
    }

    /// `out = [x, y]` on raw coordinate slices of length `dim`.
    pub(crate) fn bracket_into(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        let dim = self.dim();
        let p = u64::from(self.p());
        let mut acc = vec![0u64; dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let w = u64::from(xi) * u64::from(yj) % p;
                let row = &self.sc[(i * dim + j) * dim..(i * dim + j + 1) * dim];
                for (a, &c) in acc.iter_mut().zip(row) {
                    if c != 0 {
                        *a = (*a + w * u64::from(c)) % p;
                    }
                }
            }
        }
        for (o, a) in out.iter_mut().zip(acc) {
            *o = a as u32;
        }
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &[u32] {
        let dim = self.dim();
        &self.sc[(i * dim + j) * dim..(i * dim + j + 1) * dim]
    }

    fn validate(&self) -> Result<()> {
        if let Some(witness) = self.grading_violation() {
            return Err(Error::AxiomViolation { axiom: Axiom::Grading, witness });
        }
        if let Some(witness) = self.skew_violation() {
            return Err(Error::AxiomViolation { axiom: Axiom::SuperSkewSymmetry, witness });
        }
        if let Some(witness) = self.jacobi_violation() {
            return Err(Error::AxiomViolation { axiom: Axiom::SuperJacobi, witness });
        }
        Ok(())
    }

    /// First basis tuple `(i, j, k)` with `c[i][j][k] ≠ 0` but `|eₖ| ≠ |eᵢ| + |eⱼ|`.
    pub fn grading_violation(&self) -> Option<[usize; 3]> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let target = self.basis_parity(i) + self.basis_parity(j);
                for k in 0..dim {
                    if self.structure_constant(i, j, k) != 0 && self.basis_parity(k) != target {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn skew_violation(&self) -> Option<[usize; 3]> {
        let dim = self.dim();
        let f = self.field;
        for i in 0..dim {
            for j in 0..dim {
                let sign = f.sign(self.basis_parity(i).bit(), self.basis_parity(j).bit());
                for k in 0..dim {
                    let lhs = self.structure_constant(i, j, k);
                    let rhs = f.neg(f.mul(sign, self.structure_constant(j, i, k)));
                    if lhs != rhs {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// First basis triple `(i, j, l)` violating
    /// `[eᵢ,[eⱼ,eₗ]] − (−1)^{|eᵢ||eⱼ|}[eⱼ,[eᵢ,eₗ]] = [[eᵢ,eⱼ],eₗ]`.
    pub fn jacobi_violation(&self) -> Option<[usize; 3]> {
        let dim = self.dim();
        let f = self.field;
        let mut lhs1 = vec![0u32; dim];
        let mut lhs2 = vec![0u32; dim];
        let mut rhs = vec![0u32; dim];
        let mut basis_i = vec![0u32; dim];
        let mut basis_j = vec![0u32; dim];
        let mut basis_l = vec![0u32; dim];
        for i in 0..dim {
            basis_i.iter_mut().for_each(|c| *c = 0);
            basis_i[i] = 1;
            for j in 0..dim {
                basis_j.iter_mut().for_each(|c| *c = 0);
                basis_j[j] = 1;
                let sign = f.sign(self.basis_parity(i).bit(), self.basis_parity(j).bit());
                for l in 0..dim {
                    basis_l.iter_mut().for_each(|c| *c = 0);
                    basis_l[l] = 1;
                    self.bracket_into(&basis_i, self.basis_bracket(j, l), &mut lhs1);
                    self.bracket_into(&basis_j, self.basis_bracket(i, l), &mut lhs2);
                    self.bracket_into(self.basis_bracket(i, j), &basis_l, &mut rhs);
                    let holds = (0..dim).all(|k| f.sub(lhs1[k], f.mul(sign, lhs2[k])) == rhs[k]);
                    if !holds {
                        return Some([i, j, l]);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(alg: &LieSuperalgebra, c: [u32; 3]) -> SuperVector {
        alg.vector(c.to_vec()).unwrap()
    }

    #[test]
    fn heisenberg_is_valid() {
        let h = LieSuperalgebra::heisenberg(5, 1).unwrap();
        assert_eq!((h.even_dim(), h.odd_dim()), (1, 2));
        assert!(h.warnings().is_empty());
        assert_eq!(h.structure_constants().len(), 2);
    }

    #[test]
    fn abelian_is_valid() {
        let a = LieSuperalgebra::abelian(5, 1, 1).unwrap();
        assert!(a.structure_constants().is_empty());
    }

    #[test]
    fn antisymmetric_odd_pair_is_rejected() {
        // [a,b] = e, [b,a] = −e: on two odd vectors the bracket must be symmetric.
        let err =
            make_superalgebra(5, 1, 2, &[StructureConstant::new(1, 2, 0, 1), StructureConstant::new(2, 1, 0, -1)])
                .unwrap_err();
        assert_eq!(err, Error::AxiomViolation { axiom: Axiom::SuperSkewSymmetry, witness: [1, 2, 0] });
    }

    #[test]
    fn grading_violation_is_reported_first() {
        // [e, a] = e lands in the wrong degree
        let err = make_superalgebra(5, 1, 2, &[StructureConstant::new(0, 1, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::Grading, witness: [0, 1, 0] }));
    }

    #[test]
    fn jacobi_violation_is_detected() {
        // sl2: [h,x] = 2x, [h,y] = −2y, [x,y] = h
        let sc = [
            StructureConstant::new(0, 1, 1, 2),
            StructureConstant::new(1, 0, 1, -2),
            StructureConstant::new(0, 2, 2, -2),
            StructureConstant::new(2, 0, 2, 2),
            StructureConstant::new(1, 2, 0, 1),
            StructureConstant::new(2, 1, 0, -1),
        ];
        assert!(make_superalgebra(7, 3, 0, &sc).is_ok());
        // [x,y] = x, [x,z] = y: [x,[y,z]] − [y,[x,z]] = 0 but [[x,y],z] = y.
        let broken = [
            StructureConstant::new(0, 1, 0, 1),
            StructureConstant::new(1, 0, 0, -1),
            StructureConstant::new(0, 2, 1, 1),
            StructureConstant::new(2, 0, 1, -1),
        ];
        let err = make_superalgebra(7, 3, 0, &broken).unwrap_err();
        assert_eq!(err, Error::AxiomViolation { axiom: Axiom::SuperJacobi, witness: [0, 1, 2] });
    }

    #[test]
    fn low_characteristic_warns() {
        let a = LieSuperalgebra::abelian(2, 1, 0).unwrap();
        assert_eq!(a.warnings(), [AlgebraWarning::LowCharacteristic { p: 2 }]);
        assert_eq!(make_superalgebra(4, 1, 0, &[]).unwrap_err(), Error::NotPrime { p: 4 });
    }

    #[test]
    fn bad_structure_index() {
        let err = make_superalgebra(5, 1, 1, &[StructureConstant::new(0, 2, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::StructureIndex { .. }));
        let dup = [StructureConstant::new(0, 0, 0, 0), StructureConstant::new(0, 0, 0, 0)];
        assert!(matches!(make_superalgebra(5, 1, 0, &dup).unwrap_err(), Error::DuplicateStructureConstant { .. }));
    }

    #[test]
    fn bracket_examples() {
        let h = LieSuperalgebra::heisenberg(5, 1).unwrap();
        let e = h.basis(0);
        let a = h.basis(1);
        let b = h.basis(2);
        assert_eq!(h.bracket(&a, &b).unwrap(), e);
        for x in [&e, &a, &b] {
            assert!(h.bracket(x, &h.zero()).unwrap().is_zero());
        }
        // [2a + e, 3b] = 6e = e (mod 5)
        assert_eq!(h.bracket(&v(&h, [1, 2, 0]), &v(&h, [0, 0, 3])).unwrap(), e);
        assert!(h.bracket(&e, &SuperVector::zero(1, 1)).is_err());
        assert!(h.vector(alloc::vec![0, 5, 0]).is_err());
    }

    #[test]
    fn axiom_report_lists_every_axiom() {
        let ok =
            check_axioms(5, 1, 2, &[StructureConstant::new(1, 2, 0, 1), StructureConstant::new(2, 1, 0, 1)]).unwrap();
        assert!(ok.is_valid());
        let bad =
            check_axioms(5, 1, 2, &[StructureConstant::new(1, 2, 0, 1), StructureConstant::new(2, 1, 0, -1)]).unwrap();
        assert!(!bad.is_valid());
        assert_eq!(bad.checks[0].1, None);
        assert!(bad.checks[1].1.is_some());
        assert!(check_axioms(4, 1, 0, &[]).is_err());
        assert_eq!(check_axioms(3, 1, 0, &[]).unwrap().warnings, vec![AlgebraWarning::LowCharacteristic { p: 3 }]);
    }
}
