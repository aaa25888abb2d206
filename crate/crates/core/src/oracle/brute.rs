//! Direct transcriptions of the definitions, written against coordinate
//! vectors and the algebra's own arithmetic rather than the indexed fast
//! paths. Used to cross-check the production kernels.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::grid::ValueGrid;
use crate::algebra::LieSuperalgebra;
use crate::linear::LinearMap;
use crate::set::CifSet;
use crate::space::enumerate_elements;
use crate::value::{CifValue, Rational, UnitValue};
use crate::vector::SuperVector;
use crate::Result;

type Pair = (Rational, Rational);
type Table = BTreeMap<Vec<u32>, (Pair, Pair)>;

fn table_of(a: &CifSet) -> Table {
    let alg = a.space().algebra();
    enumerate_elements(alg, usize::MAX)
        .expect("already enumerated once")
        .map(|x| {
            let v = a.value_at(&x).expect("same algebra");
            let (l, r) = (v.lambda(), v.rho());
            (x.into_coords(), ((l.r(), l.w()), (r.r(), r.w())))
        })
        .collect()
}

fn leq(a: Pair, b: Pair) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn min2(a: Pair, b: Pair) -> Pair {
    (if a.0 < b.0 { a.0 } else { b.0 }, if a.1 < b.1 { a.1 } else { b.1 })
}

fn max2(a: Pair, b: Pair) -> Pair {
    (if a.0 > b.0 { a.0 } else { b.0 }, if a.1 > b.1 { a.1 } else { b.1 })
}

fn elements(alg: &LieSuperalgebra) -> Vec<SuperVector> {
    enumerate_elements(alg, usize::MAX).expect("already enumerated once").collect()
}

/// `λ(0) = (1,1)`, `ρ(0) = (0,0)`, and for all `x, y ∈ V`, `α ∈ K`:
/// `λ(x+y) ≥ λ(x)∧λ(y)`, `ρ(x+y) ≤ ρ(x)∨ρ(y)`, `λ(αx) ≥ λ(x)`, `ρ(αx) ≤ ρ(x)`.
pub fn is_cif_subspace(a: &CifSet) -> bool {
    let alg = a.space().algebra();
    let t = table_of(a);
    let at = |v: &SuperVector| t[v.coords()];
    let one: Pair = (Rational::one(), Rational::one());
    let zero: Pair = (Rational::zero(), Rational::zero());
    if at(&alg.zero()) != (one, zero) {
        return false;
    }
    let all = elements(alg);
    for x in &all {
        for y in &all {
            let s = alg.add(x, y).expect("same algebra");
            let ((lx, rx), (ly, ry), (ls, rs)) = (at(x), at(y), at(&s));
            if !leq(min2(lx, ly), ls) || !leq(rs, max2(rx, ry)) {
                return false;
            }
        }
    }
    for alpha in alg.field().elements() {
        for x in &all {
            let s = alg.scale(alpha, x).expect("same algebra");
            let ((lx, rx), (ls, rs)) = (at(x), at(&s));
            if !leq(lx, ls) || !leq(rs, rx) {
                return false;
            }
        }
    }
    true
}

fn build(a: &CifSet, values: &Table) -> CifSet {
    let space = a.space().clone();
    let s = space.clone();
    CifSet::try_from_fn(space, |i| {
        let ((lr, lw), (rr, rw)) = values[s.coords(i)];
        CifValue::new(UnitValue::new(lr, lw)?, UnitValue::new(rr, rw)?)
    })
    .expect("well-formed aggregate")
}

/// Sum by bucketing every pair `(a, b)` under `a + b`.
pub fn sum(a: &CifSet, b: &CifSet) -> CifSet {
    let alg = a.space().algebra();
    let (ta, tb) = (table_of(a), table_of(b));
    let all = elements(alg);
    let mut acc: Table = BTreeMap::new();
    for u in &all {
        for v in &all {
            let x = alg.add(u, v).expect("same algebra").into_coords();
            let ((la, ra), (lb, rb)) = (ta[u.coords()], tb[v.coords()]);
            let (l, r) = (min2(la, lb), max2(ra, rb));
            acc.entry(x)
                .and_modify(|(al, ar)| {
                    *al = max2(*al, l);
                    *ar = min2(*ar, r);
                })
                .or_insert((l, r));
        }
    }
    build(a, &acc)
}

/// Image by applying the matrix to every source vector.
pub fn image(phi: &LinearMap, a: &CifSet) -> Result<CifSet> {
    let ta = table_of(a);
    let src = phi.source().algebra();
    let tgt = phi.target().algebra();
    let f = tgt.field();
    let mut acc: Table = BTreeMap::new();
    for x in elements(src) {
        let y: Vec<u32> = phi
            .rows()
            .iter()
            .map(|row| row.iter().zip(x.coords()).fold(0, |s, (&m, &c)| f.add(s, f.mul(m, c))))
            .collect();
        let (l, r) = ta[x.coords()];
        acc.entry(y)
            .and_modify(|(al, ar)| {
                *al = max2(*al, l);
                *ar = min2(*ar, r);
            })
            .or_insert((l, r));
    }
    let bottom = ((Rational::zero(), Rational::zero()), (Rational::one(), Rational::one()));
    for y in elements(tgt) {
        acc.entry(y.into_coords()).or_insert(bottom);
    }
    let target = phi.target().clone();
    let t = target.clone();
    CifSet::try_from_fn(target, |i| {
        let ((lr, lw), (rr, rw)) = acc[t.coords(i)];
        CifValue::new(UnitValue::new(lr, lw)?, UnitValue::new(rr, rw)?)
    })
}

/// Closed-form count of the enumerated sets: each of the `|V| − 1` free
/// elements takes `(#(λ.r, ρ.r) with λ.r + ρ.r ≤ 1) · |grid|²` values.
pub fn count_cif_sets(universe: usize, grid: &ValueGrid) -> u128 {
    let g = grid.levels();
    let magnitudes = g.iter().flat_map(|a| g.iter().map(move |b| *a + *b)).filter(|s| *s <= Rational::one()).count();
    let per = magnitudes as u128 * (g.len() as u128).pow(2);
    per.pow(universe.saturating_sub(1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ops;
    use crate::oracle::generate::{random_cif_structure, random_linear_map, rng, StructureKind};
    use crate::verify;

    #[test]
    fn counts() {
        assert_eq!(count_cif_sets(2, &ValueGrid::parse("0,1").unwrap()), 12);
        assert_eq!(count_cif_sets(3, &ValueGrid::parse("0,1/2,1").unwrap()), 2916);
        assert_eq!(count_cif_sets(2, &ValueGrid::parse("0").unwrap()), 1);
    }

    #[test]
    fn agrees_with_fast_paths() {
        let s = fixtures::heisenberg_5_1();
        let g = ValueGrid::default();
        let mut r = rng(5);
        for seed in 0..6 {
            let a = random_cif_structure(s.clone(), &g, StructureKind::Ideal, seed);
            let b = random_cif_structure(s.clone(), &g, StructureKind::Subspace, seed + 100);
            assert_eq!(ops::sum(&a, &b).unwrap(), sum(&a, &b));
            let phi = random_linear_map(s.clone(), s.clone(), &mut r).unwrap();
            assert_eq!(ops::image(&phi, &a).unwrap(), image(&phi, &a).unwrap());
            let set = random_cif_structure(s.clone(), &g, StructureKind::Set, seed);
            assert_eq!(verify::is_cif_subspace(&set).holds, is_cif_subspace(&set));
            assert!(is_cif_subspace(&a));
        }
        let ex = fixtures::paper_example();
        assert!(is_cif_subspace(&ex));
        let lowered = ex.with_value(25, CifValue::diagonal(crate::value::rational(1, 10), Rational::zero()).unwrap());
        assert!(!is_cif_subspace(&lowered));
    }
}
