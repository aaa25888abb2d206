//! Constructions on CIF sets: lattice operations, the complex intuitionistic
//! sum, scalar transforms, graded decomposition, complements and transport
//! along linear maps.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linear::LinearMap;
use crate::set::CifSet;
use crate::space::Space;
use crate::value::{CifValue, Rational, UnitValue};
use crate::vector::Parity;
use crate::{Error, Result};

/// `A ⊆ B`: `λ_A ≤ λ_B` and `ρ_A ≥ ρ_B` everywhere.
pub fn contains(a: &CifSet, b: &CifSet) -> Result<bool> {
    a.same_ambient(b)?;
    Ok(a.space().indices().all(|i| a.lambda(i).le(b.lambda(i)) && a.rho(i).ge(b.rho(i))))
}

/// `A ∩ B = (λ_A ∧ λ_B, ρ_A ∨ ρ_B)`
pub fn intersect(a: &CifSet, b: &CifSet) -> Result<CifSet> {
    a.same_ambient(b)?;
    Ok(CifSet::from_fn(a.space().clone(), |i| a.value(i).meet(b.value(i))))
}

/// `A ∪ B = (λ_A ∨ λ_B, ρ_A ∧ ρ_B)`
pub fn union(a: &CifSet, b: &CifSet) -> Result<CifSet> {
    a.same_ambient(b)?;
    Ok(CifSet::from_fn(a.space().clone(), |i| a.value(i).join(b.value(i))))
}

/// The complex intuitionistic sum `A + B`.
///
/// Magnitude and phase are aggregated independently over all decompositions
/// `x = a + b`:
///
/// ```text
/// r_{A+B}(x) = sup min(r_A(a), r_B(b))     w_{A+B}(x) = sup min(w_A(a), w_B(b))
/// r̂_{A+B}(x) = inf max(r̂_A(a), r̂_B(b))     ŵ_{A+B}(x) = inf max(ŵ_A(a), ŵ_B(b))
/// ```
///
/// Every `x` decomposes (at least as `x + 0`), so the "otherwise" branch of the
/// definition never fires on a total table. `A` must be homogeneous with `B`.
pub fn sum(a: &CifSet, b: &CifSet) -> Result<CifSet> {
    if let Some(v) = a.homogeneity_violation_with(b)? {
        let space = a.space();
        return Err(Error::NotHomogeneousPair {
            detail: format!("{:?} component at x = {}, y = {}", v.component, space.vector(v.x), space.vector(v.y)),
        });
    }
    Ok(sum_unchecked(a, b))
}

/// Sum kernel without the homogeneity gate. Exposed for oracles and
/// diagnostics; the checked operation is [`sum`].
pub fn sum_unchecked(a: &CifSet, b: &CifSet) -> CifSet {
    let space = a.space().clone();
    let table = space
        .indices()
        .map(|x| {
            let (mut lr, mut lw) = (Rational::zero(), Rational::zero());
            let (mut rr, mut rw) = (Rational::one(), Rational::one());
            for ai in space.indices() {
                let bi = space.sub(x, ai);
                let (la, lb) = (a.lambda(ai), b.lambda(bi));
                let (ra, rb) = (a.rho(ai), b.rho(bi));
                lr = lr.max(la.r().min(lb.r()));
                lw = lw.max(la.w().min(lb.w()));
                rr = rr.min(ra.r().max(rb.r()));
                rw = rw.min(ra.w().max(rb.w()));
            }
            CifValue::new_unchecked(unit(lr, lw), unit(rr, rw))
        })
        .collect();
    CifSet::new(space, table).expect("total table")
}

fn unit(r: Rational, w: Rational) -> UnitValue {
    UnitValue::new(r, w).expect("aggregates of unit values stay in [0, 1]")
}

/// `A + B` is direct when `A ∩ B` is the trivial set.
pub fn is_direct(a: &CifSet, b: &CifSet) -> Result<bool> {
    let meet = intersect(a, b)?;
    Ok(meet == CifSet::trivial(a.space().clone()))
}

/// `αA`: `λ_{αA}(x) = λ_A(α⁻¹x)` for `α ≠ 0`; the trivial set for `α = 0`.
pub fn scalar_transform(alpha: u32, a: &CifSet) -> CifSet {
    let space = a.space().clone();
    let field = space.algebra().field();
    match field.inv(alpha % field.modulus()) {
        None => CifSet::trivial(space),
        Some(inv) => {
            let s = space.clone();
            CifSet::from_fn(space, |x| *a.value(s.scale(inv, x)))
        }
    }
}

/// CIF data on the homogeneous part `V_parity`, keyed by universe index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartData {
    space: Arc<Space>,
    parity: Parity,
    entries: Vec<(usize, CifValue)>,
}

impl PartData {
    /// `entries` must list every element of `V_parity` exactly once, in
    /// increasing index order.
    pub fn new(space: Arc<Space>, parity: Parity, entries: Vec<(usize, CifValue)>) -> Result<Self> {
        let expected: Vec<usize> = space.part(parity).collect();
        if entries.len() != expected.len() {
            return Err(Error::TableSize { expected: expected.len(), found: entries.len() });
        }
        if entries.iter().zip(&expected).any(|((i, _), j)| i != j) {
            return Err(Error::MalformedInstance(format!("entries do not cover V_{parity}")));
        }
        Ok(Self { space, parity, entries })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn entries(&self) -> &[(usize, CifValue)] {
        &self.entries
    }

    pub fn value(&self, i: usize) -> Option<&CifValue> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|at| &self.entries[at].1)
    }
}

/// `A_parity`: the values of `A` on `V_parity`.
pub fn restrict_to_part(a: &CifSet, parity: Parity) -> PartData {
    let space = a.space().clone();
    let entries = space.part(parity).map(|i| (i, *a.value(i))).collect();
    PartData { space, parity, entries }
}

/// The extension `𝔞_parity`: the part's values on `V_parity`, `λ = 0` and
/// `ρ = 1` elsewhere.
pub fn extend_from_part(data: &PartData) -> CifSet {
    let mut table = alloc::vec![CifValue::bottom(); data.space.size()];
    for &(i, v) in &data.entries {
        table[i] = v;
    }
    CifSet::new(data.space.clone(), table).expect("total table")
}

#[derive(Debug, Clone)]
pub struct GradedComponents {
    pub even: PartData,
    pub odd: PartData,
    /// `A = A₀ ⊕ A₁`
    pub is_graded: bool,
    /// First element where `𝔞₀ + 𝔞₁` differs from `A`.
    pub first_mismatch: Option<usize>,
}

/// Split `A` into its even and odd parts and decide whether
/// `A = 𝔞₀ + 𝔞₁` with `𝔞₀ ∩ 𝔞₁` trivial.
pub fn graded_components(a: &CifSet) -> Result<GradedComponents> {
    let even = restrict_to_part(a, Parity::Even);
    let odd = restrict_to_part(a, Parity::Odd);
    let (e0, e1) = (extend_from_part(&even), extend_from_part(&odd));
    let total = sum(&e0, &e1)?;
    let first_mismatch = a.space().indices().find(|&i| total.value(i) != a.value(i));
    let is_graded = first_mismatch.is_none() && is_direct(&e0, &e1)?;
    Ok(GradedComponents { even, odd, is_graded, first_mismatch })
}

/// `A^c = (λ_A, λ_A^c)` with `λ^c = (1 − r)·e^{i2π(1 − w)}`.
pub fn complement_c(a: &CifSet) -> CifSet {
    CifSet::from_fn(a.space().clone(), |i| {
        let l = *a.lambda(i);
        CifValue::new_unchecked(l, l.complement())
    })
}

/// `A^L = (ρ_A^c, ρ_A)`.
pub fn complement_l(a: &CifSet) -> CifSet {
    CifSet::from_fn(a.space().clone(), |i| {
        let r = *a.rho(i);
        CifValue::new_unchecked(r.complement(), r)
    })
}

fn check_source(phi: &LinearMap, a: &CifSet) -> Result<()> {
    if **phi.source() != **a.space() {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}

/// `φ(A)`: componentwise sup of `λ_A` (inf of `ρ_A`) over each fiber, and
/// `λ = 0`, `ρ = 1` off the range.
pub fn image(phi: &LinearMap, a: &CifSet) -> Result<CifSet> {
    check_source(phi, a)?;
    let target = phi.target().clone();
    let n = target.size();
    let mut hit = alloc::vec![false; n];
    let mut acc = alloc::vec![(Rational::zero(), Rational::zero(), Rational::one(), Rational::one()); n];
    for x in a.space().indices() {
        let y = phi.apply_index(x);
        let (l, r) = (a.lambda(x), a.rho(x));
        let slot = &mut acc[y];
        if hit[y] {
            slot.0 = slot.0.max(l.r());
            slot.1 = slot.1.max(l.w());
            slot.2 = slot.2.min(r.r());
            slot.3 = slot.3.min(r.w());
        } else {
            hit[y] = true;
            *slot = (l.r(), l.w(), r.r(), r.w());
        }
    }
    let table = (0..n)
        .map(|y| {
            if hit[y] {
                let (lr, lw, rr, rw) = acc[y];
                CifValue::new_unchecked(unit(lr, lw), unit(rr, rw))
            } else {
                CifValue::bottom()
            }
        })
        .collect();
    CifSet::new(target, table)
}

/// `φ⁻¹(B)`: `λ(x) = λ_B(φ(x))`, `ρ(x) = ρ_B(φ(x))`.
pub fn preimage(phi: &LinearMap, b: &CifSet) -> Result<CifSet> {
    if **phi.target() != **b.space() {
        return Err(Error::AmbientMismatch);
    }
    Ok(CifSet::from_fn(phi.source().clone(), |x| *b.value(phi.apply_index(x))))
}
