//! Seeded instance generators.
//!
//! Structured sets are built from random chains `{0} = S₀ ⊂ S₁ ⊂ … ⊂ Sₖ = V`
//! of crisp graded subspaces (closed under the bracket, or ideals), with
//! non-increasing `λ` and non-decreasing `ρ` levels along the chain. Such a
//! set has every level cut equal to some `Sᵢ`, so it lies in the requested
//! class by construction.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grid::ValueGrid;
use crate::linear::LinearMap;
use crate::set::CifSet;
use crate::space::Space;
use crate::subspace::Subspace;
use crate::value::{CifValue, Rational, UnitValue};
use crate::vector::Parity;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    /// Unstructured table (diagonal values, normalized at 0).
    Set,
    /// Chain of graded subspaces.
    Subspace,
    /// Chain of graded sub-superalgebras.
    Subsuperalgebra,
    /// Chain of graded ideals.
    Ideal,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random chain from `{0}` to `V`; each step adds one random homogeneous
/// vector and closes according to `kind`.
pub fn random_chain(space: &Space, kind: StructureKind, rng: &mut impl Rng) -> Vec<Subspace> {
    let alg = space.algebra();
    let (p, n, d0) = (space.p(), space.dim(), alg.even_dim());
    let mut cur = Subspace::zero(p, n);
    let mut chain = vec![cur.clone()];
    while cur.dimension() < n {
        let mut open = Vec::new();
        if cur.part(d0, Parity::Even).dimension() < d0 {
            open.push(Parity::Even);
        }
        if cur.part(d0, Parity::Odd).dimension() < n - d0 {
            open.push(Parity::Odd);
        }
        let parity = *open.choose(rng).expect("a graded proper subspace misses some part");
        let range = match parity {
            Parity::Even => 0..d0,
            Parity::Odd => d0..n,
        };
        let v = loop {
            let mut v = vec![0u32; n];
            for c in &mut v[range.clone()] {
                *c = rng.random_range(0..p);
            }
            if !cur.contains(&v) {
                break v;
            }
        };
        cur.insert(&v);
        match kind {
            StructureKind::Subsuperalgebra => cur.close_under_bracket(alg, false),
            StructureKind::Ideal => cur.close_under_bracket(alg, true),
            StructureKind::Set | StructureKind::Subspace => {}
        }
        chain.push(cur.clone());
    }
    chain
}

/// Level `i` of the chain: non-increasing diagonal `λ` starting at `1`,
/// non-decreasing diagonal `ρ` starting at `0`, with `λ.r + ρ.r ≤ 1`.
pub fn random_levels(grid: &ValueGrid, steps: usize, rng: &mut impl Rng) -> Vec<CifValue> {
    let mut levels = vec![CifValue::top()];
    let (mut l, mut r) = (Rational::one(), grid.levels()[0]);
    for _ in 0..steps {
        let below: Vec<Rational> = grid.levels().iter().copied().filter(|v| *v <= l).collect();
        l = *below.choose(rng).expect("grid contains 0");
        let room = Rational::one() - l;
        let above: Vec<Rational> = grid.levels().iter().copied().filter(|v| *v >= r && *v <= room).collect();
        r = *above.choose(rng).expect("previous ρ level still fits");
        levels.push(diag(l, r));
    }
    levels
}

fn diag(l: Rational, r: Rational) -> CifValue {
    CifValue::diagonal(l, r).expect("levels are kept in range")
}

/// Assign `levels[i]` to `Sᵢ \ Sᵢ₋₁`.
pub fn chain_structure(space: Arc<Space>, chain: &[Subspace], levels: &[CifValue]) -> Result<CifSet> {
    if chain.len() != levels.len() {
        return Err(Error::MalformedInstance(alloc::format!(
            "{} chain members but {} levels",
            chain.len(),
            levels.len()
        )));
    }
    let s = space.clone();
    CifSet::try_from_fn(space, |i| {
        let x = s.coords(i);
        chain
            .iter()
            .position(|sub| sub.contains(x))
            .map(|k| levels[k])
            .ok_or_else(|| Error::MalformedInstance(alloc::format!("{} lies outside the chain", s.vector(i))))
    })
}

/// Deterministic in `(space, grid, kind, seed)`.
pub fn random_cif_structure(space: Arc<Space>, grid: &ValueGrid, kind: StructureKind, seed: u64) -> CifSet {
    let mut rng = rng(seed);
    if kind == StructureKind::Set {
        return random_set(space, grid, &mut rng);
    }
    let chain = random_chain(&space, kind, &mut rng);
    let levels = random_levels(grid, chain.len() - 1, &mut rng);
    chain_structure(space, &chain, &levels).expect("chain ends at V")
}

/// As [`random_cif_structure`] with exactly `steps` proper inclusions.
/// `available` in the error is the length of the longest of a few sampled
/// chains.
pub fn random_cif_structure_with_steps(
    space: Arc<Space>,
    grid: &ValueGrid,
    kind: StructureKind,
    steps: usize,
    seed: u64,
) -> Result<CifSet> {
    let mut rng = rng(seed);
    let mut best = random_chain(&space, kind, &mut rng);
    for _ in 0..8 {
        if best.len() > steps {
            break;
        }
        let c = random_chain(&space, kind, &mut rng);
        if c.len() > best.len() {
            best = c;
        }
    }
    let available = best.len() - 1;
    if steps > available || (steps == 0 && space.dim() > 0) {
        return Err(Error::EmptyChain { requested: steps, available });
    }
    // keep S₀, V and a random choice of the intermediate members
    let mut inner: Vec<usize> = (1..available).collect();
    while inner.len() + 1 > steps {
        let drop = rng.random_range(0..inner.len());
        inner.remove(drop);
    }
    let mut chain = vec![best[0].clone()];
    chain.extend(inner.iter().map(|&i| best[i].clone()));
    chain.push(best[available].clone());
    let levels = random_levels(grid, steps, &mut rng);
    chain_structure(space, &chain, &levels)
}

/// Random diagonal values on a grid, normalized at 0. Over `{0, 1}` this is
/// the indicator of a random subset containing 0.
pub fn random_set(space: Arc<Space>, grid: &ValueGrid, rng: &mut impl Rng) -> CifSet {
    CifSet::from_fn(space, |i| {
        if i == 0 {
            return CifValue::top();
        }
        let l = *grid.levels().choose(rng).expect("nonempty grid");
        let fits: Vec<Rational> = grid.levels().iter().copied().filter(|r| *r + l <= Rational::one()).collect();
        diag(l, *fits.choose(rng).expect("0 always fits"))
    })
}

/// Uniformly random matrix `V → V'`.
pub fn random_linear_map(source: Arc<Space>, target: Arc<Space>, rng: &mut impl Rng) -> Result<LinearMap> {
    let p = source.p();
    let rows = (0..target.dim()).map(|_| (0..source.dim()).map(|_| rng.random_range(0..p)).collect()).collect();
    LinearMap::new(source, target, rows)
}

/// Random block-diagonal (grading-preserving) matrix `V → V'`.
pub fn random_graded_map(source: Arc<Space>, target: Arc<Space>, rng: &mut impl Rng) -> Result<LinearMap> {
    let p = source.p();
    let (s0, t0) = (source.algebra().even_dim(), target.algebra().even_dim());
    let rows = (0..target.dim())
        .map(|r| (0..source.dim()).map(|c| if (r < t0) == (c < s0) { rng.random_range(0..p) } else { 0 }).collect())
        .collect();
    LinearMap::new(source, target, rows)
}

/// Permutation of basis vectors `eᵢ ↦ e_{perm[i]}`.
pub fn basis_permutation(space: Arc<Space>, perm: &[usize]) -> Result<LinearMap> {
    let n = space.dim();
    if perm.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
    }
    if let Some(&j) = perm.iter().find(|&&j| j >= n) {
        return Err(Error::StructureIndex { i: j, j, k: j, dim: n });
    }
    let columns: Vec<Vec<u32>> = perm
        .iter()
        .map(|&j| {
            let mut c = vec![0; n];
            c[j] = 1;
            c
        })
        .collect();
    LinearMap::from_columns(space.clone(), space, &columns)
}

/// Replace the value at one random nonzero element by a different diagonal
/// `λ` level (keeping `ρ` within the magnitude budget). On a CIF subspace
/// over a field with `p ≥ 3` this always breaks the scalar condition, since
/// `x` and `2x` used to share a value.
pub fn mutate_point(a: &CifSet, grid: &ValueGrid, rng: &mut impl Rng) -> CifSet {
    let space = a.space();
    assert!(space.size() > 1, "nothing to mutate in the zero space");
    let x = rng.random_range(1..space.size());
    let old = *a.lambda(x);
    let mut choices: Vec<Rational> = grid.levels().to_vec();
    if !choices.contains(&Rational::one()) {
        choices.push(Rational::one());
    }
    choices.retain(|&l| UnitValue::diagonal(l).expect("in range") != old);
    let l = *choices.choose(rng).expect("grid has at least two levels");
    let room = Rational::one() - l;
    let rho = a.rho(x);
    let rho = UnitValue::new(rho.r().min(room), rho.w().min(room)).expect("in range");
    a.with_value(x, CifValue::new(UnitValue::diagonal(l).expect("in range"), rho).expect("fits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieSuperalgebra;
    use crate::fixtures;
    use crate::verify;

    #[test]
    fn chain_reproduces_the_example() {
        let s = fixtures::heisenberg_5_1();
        let (p, n) = (5, 3);
        let mut n0 = Subspace::zero(p, n);
        n0.insert(&[1, 0, 0]);
        let chain = [Subspace::zero(p, n), n0, Subspace::full(p, n)];
        let a = chain_structure(s, &chain, &fixtures::paper_example_levels()).unwrap();
        assert_eq!(a, fixtures::paper_example());
        assert!(chain_structure(a.space().clone(), &chain[..2], &fixtures::paper_example_levels()[..2]).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let s = fixtures::heisenberg_5_1();
        let g = ValueGrid::default();
        for kind in [StructureKind::Set, StructureKind::Ideal] {
            let a = random_cif_structure(s.clone(), &g, kind, 7);
            assert_eq!(a, random_cif_structure(s.clone(), &g, kind, 7));
        }
        let distinct = (0..20)
            .map(|seed| random_cif_structure(s.clone(), &g, StructureKind::Ideal, seed))
            .filter(|a| *a != random_cif_structure(s.clone(), &g, StructureKind::Ideal, 0))
            .count();
        assert!(distinct > 0);
    }

    #[test]
    fn indicator_sets_on_a_binary_grid() {
        let s = fixtures::heisenberg_5_1();
        let g = ValueGrid::parse("0,1").unwrap();
        let a = random_cif_structure(s.clone(), &g, StructureKind::Set, 3);
        assert!(a.is_normalized());
        for i in s.indices() {
            let l = a.lambda(i);
            assert!(*l == UnitValue::one() || *l == UnitValue::zero());
        }
    }

    #[test]
    fn generated_structures_pass_their_verifiers() {
        let spaces = [fixtures::heisenberg_5_1(), fixtures::abelian(5, 1, 1).unwrap()];
        let g = ValueGrid::default();
        for s in &spaces {
            for seed in 0..60 {
                let sub = random_cif_structure(s.clone(), &g, StructureKind::Subspace, seed);
                assert!(verify::is_cif_subspace(&sub).holds);
                let alg = random_cif_structure(s.clone(), &g, StructureKind::Subsuperalgebra, seed);
                assert!(verify::is_cif_subsuperalgebra(&alg).holds);
                let id = random_cif_structure(s.clone(), &g, StructureKind::Ideal, seed);
                assert!(verify::is_cif_ideal(&id).holds, "seed {seed}");
            }
        }
    }

    #[test]
    fn chain_length_requests() {
        let line = Arc::new(Space::new(LieSuperalgebra::abelian(5, 1, 0).unwrap()).unwrap());
        let g = ValueGrid::default();
        assert!(random_cif_structure_with_steps(line.clone(), &g, StructureKind::Ideal, 1, 0).is_ok());
        assert_eq!(
            random_cif_structure_with_steps(line, &g, StructureKind::Ideal, 2, 0).unwrap_err(),
            Error::EmptyChain { requested: 2, available: 1 }
        );
        let h = fixtures::heisenberg_5_1();
        for steps in 1..=2 {
            let a = random_cif_structure_with_steps(h.clone(), &g, StructureKind::Ideal, steps, 4).unwrap();
            assert!(verify::is_cif_ideal(&a).holds);
        }
    }

    #[test]
    fn mutations_break_subspaces() {
        let g = ValueGrid::default();
        let s = fixtures::heisenberg_5_1();
        let mut r = rng(99);
        for seed in 0..40 {
            let a = random_cif_structure(s.clone(), &g, StructureKind::Ideal, seed);
            let m = mutate_point(&a, &g, &mut r);
            assert_ne!(m, a);
            assert!(!verify::is_cif_subspace(&m).holds);
        }
    }

    #[test]
    fn maps() {
        let s = fixtures::abelian(5, 2, 1).unwrap();
        let swap = basis_permutation(s.clone(), &[1, 0, 2]).unwrap();
        assert!(swap.validate_antihom().is_valid() && swap.is_surjective());
        assert!(basis_permutation(s.clone(), &[0, 2, 1]).unwrap().validate_antihom().violation.is_some());
        let mut r = rng(1);
        let h = fixtures::heisenberg_5_1();
        for _ in 0..10 {
            assert!(random_graded_map(h.clone(), h.clone(), &mut r).unwrap().is_grading_preserving());
        }
        assert!(random_linear_map(h.clone(), s, &mut r).is_ok());
    }
}
