//! Verifiers for the fuzzy structure classes and the crisp checks used by
//! level cuts. Every quantifier is exhaustive over the universe; negative
//! verdicts carry the first witness in index order.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ops::{extend_from_part, graded_components, restrict_to_part};
use crate::set::{CifSet, Component};
use crate::space::Space;
use crate::value::{CutThreshold, Rational, UnitValue};
use crate::vector::{Parity, SuperVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `λ(0) ≠ 1·e^{i2π}` or `ρ(0) ≠ 0`.
    Normalization,
    /// `λ(x + y) ≱ λ(x) ∧ λ(y)` (or the `ρ` dual).
    Addition { component: Component, x: SuperVector, y: SuperVector },
    /// `λ(αx) ≱ λ(x)` (or the `ρ` dual).
    Scalar { component: Component, alpha: u32, x: SuperVector },
    /// `𝔞₀ + 𝔞₁` differs from `A` at `x`, or (`x = None`) the sum is not direct.
    NotGraded { x: Option<SuperVector> },
    /// The extensions `𝔞₀`, `𝔞₁` are not homogeneous with each other, so
    /// their sum is undefined.
    ExtensionsNotHomogeneous { component: Component, x: SuperVector, y: SuperVector },
    /// The bracket condition fails at `[x, y]` (`−[x, y]` when `negated`).
    Bracket { component: Component, x: SuperVector, y: SuperVector, negated: bool },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Normalization => write!(f, "value at 0 is not ((1,1),(0,0))"),
            Witness::Addition { component, x, y } => {
                write!(f, "{component:?} fails additive closure at x = {x}, y = {y}")
            }
            Witness::Scalar { component, alpha, x } => {
                write!(f, "{component:?} fails scalar closure at alpha = {alpha}, x = {x}")
            }
            Witness::NotGraded { x: Some(x) } => write!(f, "A differs from A_0 + A_1 at {x}"),
            Witness::NotGraded { x: None } => write!(f, "A_0 + A_1 is not direct"),
            Witness::ExtensionsNotHomogeneous { component, x, y } => {
                write!(f, "extensions not homogeneous ({component:?}) at x = {x}, y = {y}")
            }
            Witness::Bracket { component, x, y, negated } => {
                let sign = if *negated { "-" } else { "" };
                write!(f, "{component:?} fails bracket condition at {sign}[{x}, {y}]")
            }
        }
    }
}

/// Outcome of a verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Pairs (or scalar/element combinations) examined before deciding.
    pub checked_pairs: u64,
}

impl Verdict {
    fn pass(checked_pairs: u64) -> Self {
        Self { holds: true, witness: None, checked_pairs }
    }

    fn fail(witness: Witness, checked_pairs: u64) -> Self {
        Self { holds: false, witness: Some(witness), checked_pairs }
    }

    /// Chain a further check after a passing verdict, accumulating counts.
    fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if !self.holds {
            return self;
        }
        let mut v = next();
        v.checked_pairs += self.checked_pairs;
        v
    }
}

/// Bracket-closure flavours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    /// `λ([x,y]) ≥ λ(x) ∧ λ(y)`, `ρ([x,y]) ≤ ρ(x) ∨ ρ(y)`
    Subsuperalgebra,
    /// `λ([x,y]) ≥ λ(x) ∨ λ(y)`, `ρ([x,y]) ≤ ρ(x) ∧ ρ(y)`
    Ideal,
    /// As `Subsuperalgebra` with `−[x,y]`.
    AntiSubsuperalgebra,
    /// As `Ideal` with `−[x,y]`.
    AntiIdeal,
}

impl Structure {
    pub const ALL: [Structure; 4] =
        [Structure::Subsuperalgebra, Structure::Ideal, Structure::AntiSubsuperalgebra, Structure::AntiIdeal];

    pub fn is_ideal(self) -> bool {
        matches!(self, Structure::Ideal | Structure::AntiIdeal)
    }

    pub fn is_anti(self) -> bool {
        matches!(self, Structure::AntiSubsuperalgebra | Structure::AntiIdeal)
    }
}

fn vec2(space: &Space, x: usize, y: usize) -> (SuperVector, SuperVector) {
    (space.vector(x), space.vector(y))
}

/// CIF vector subspace: normalized at zero, and for all `x, y, α`
/// `λ(x+y) ≥ λ(x) ∧ λ(y)`, `ρ(x+y) ≤ ρ(x) ∨ ρ(y)`, `λ(αx) ≥ λ(x)`,
/// `ρ(αx) ≤ ρ(x)`.
pub fn is_cif_subspace(a: &CifSet) -> Verdict {
    if !a.is_normalized() {
        return Verdict::fail(Witness::Normalization, 0);
    }
    let space = a.space();
    let mut checked = 0u64;
    for x in space.indices() {
        for y in space.indices() {
            checked += 1;
            let z = space.add(x, y);
            let component = if !a.lambda(z).ge(&a.lambda(x).meet(a.lambda(y))) {
                Component::Lambda
            } else if !a.rho(z).le(&a.rho(x).join(a.rho(y))) {
                Component::Rho
            } else {
                continue;
            };
            let (x, y) = vec2(space, x, y);
            return Verdict::fail(Witness::Addition { component, x, y }, checked);
        }
    }
    for alpha in 0..space.p() {
        for x in space.indices() {
            checked += 1;
            let z = space.scale(alpha, x);
            let component = if !a.lambda(z).ge(a.lambda(x)) {
                Component::Lambda
            } else if !a.rho(z).le(a.rho(x)) {
                Component::Rho
            } else {
                continue;
            };
            return Verdict::fail(Witness::Scalar { component, alpha, x: space.vector(x) }, checked);
        }
    }
    Verdict::pass(checked)
}

/// `A = A₀ ⊕ A₁`, decided through the extensions `𝔞₀`, `𝔞₁`. When the
/// extensions are not homogeneous with each other their sum does not exist
/// and the set is reported as not graded.
pub fn is_z2_graded(a: &CifSet) -> Verdict {
    let space = a.space();
    let e0 = extend_from_part(&restrict_to_part(a, Parity::Even));
    let e1 = extend_from_part(&restrict_to_part(a, Parity::Odd));
    if let Some(v) = e0.homogeneity_violation_with(&e1).expect("same ambient") {
        let (x, y) = vec2(space, v.x, v.y);
        return Verdict::fail(Witness::ExtensionsNotHomogeneous { component: v.component, x, y }, 1);
    }
    let g = graded_components(a).expect("extensions are homogeneous with each other");
    let n = space.size() as u64;
    if g.is_graded {
        Verdict::pass(n)
    } else {
        Verdict::fail(Witness::NotGraded { x: g.first_mismatch.map(|i| space.vector(i)) }, n)
    }
}

/// The bracket condition alone, over all pairs.
pub fn bracket_condition(a: &CifSet, structure: Structure) -> Verdict {
    let space = a.space();
    let negated = structure.is_anti();
    let mut checked = 0u64;
    for x in space.indices() {
        for y in space.indices() {
            checked += 1;
            let mut z = space.bracket(x, y);
            if negated {
                z = space.neg(z);
            }
            let (lx, ly, rx, ry) = (a.lambda(x), a.lambda(y), a.rho(x), a.rho(y));
            let (lb, rb) = if structure.is_ideal() { (lx.join(ly), rx.meet(ry)) } else { (lx.meet(ly), rx.join(ry)) };
            let component = if !a.lambda(z).ge(&lb) {
                Component::Lambda
            } else if !a.rho(z).le(&rb) {
                Component::Rho
            } else {
                continue;
            };
            let (x, y) = vec2(space, x, y);
            return Verdict::fail(Witness::Bracket { component, x, y, negated }, checked);
        }
    }
    Verdict::pass(checked)
}

/// Subspace ∧ graded ∧ bracket condition.
pub fn check_structure(a: &CifSet, structure: Structure) -> Verdict {
    is_cif_subspace(a).and_then(|| is_z2_graded(a)).and_then(|| bracket_condition(a, structure))
}

pub fn is_cif_subsuperalgebra(a: &CifSet) -> Verdict {
    check_structure(a, Structure::Subsuperalgebra)
}

pub fn is_cif_ideal(a: &CifSet) -> Verdict {
    check_structure(a, Structure::Ideal)
}

pub fn is_anti_cif_subsuperalgebra(a: &CifSet) -> Verdict {
    check_structure(a, Structure::AntiSubsuperalgebra)
}

pub fn is_anti_cif_ideal(a: &CifSet) -> Verdict {
    check_structure(a, Structure::AntiIdeal)
}

/// Single-set homogeneity as a verdict.
pub fn homogeneity(a: &CifSet) -> Verdict {
    match a.homogeneity_violation() {
        None => Verdict::pass(1),
        Some(v) => {
            let (x, y) = vec2(a.space(), v.x, v.y);
            Verdict::fail(Witness::ExtensionsNotHomogeneous { component: v.component, x, y }, 1)
        }
    }
}

pub type Level = (Rational, Rational);

/// Attained `(r, w)` pairs of `λ` and of `ρ`, and their intersection.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ImageSet {
    pub lambda: BTreeSet<Level>,
    pub rho: BTreeSet<Level>,
    pub both: BTreeSet<Level>,
}

pub fn image_set(a: &CifSet) -> ImageSet {
    let lambda: BTreeSet<Level> = a.table().iter().map(|v| (v.lambda().r(), v.lambda().w())).collect();
    let rho: BTreeSet<Level> = a.table().iter().map(|v| (v.rho().r(), v.rho().w())).collect();
    let both = lambda.intersection(&rho).copied().collect();
    ImageSet { lambda, rho, both }
}

/// A classical subset of the universe, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSubset {
    space: Arc<Space>,
    mask: Vec<bool>,
}

impl CrispSubset {
    pub fn from_indices(space: Arc<Space>, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; space.size()];
        for i in members {
            mask[i] = true;
        }
        Self { space, mask }
    }

    pub fn from_predicate(space: Arc<Space>, mut f: impl FnMut(usize) -> bool) -> Self {
        let mask = space.indices().map(&mut f).collect();
        Self { space, mask }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn vectors(&self) -> impl Iterator<Item = SuperVector> + '_ {
        self.members().map(|i| self.space.vector(i))
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }
}

/// `U(λ, (t, s)) = {x : r(x) ≥ t, w(x) ≥ s}`
pub fn upper_cut(a: &CifSet, th: CutThreshold) -> CrispSubset {
    let u = th.as_unit();
    CrispSubset::from_predicate(a.space().clone(), |i| a.lambda(i).ge(&u))
}

/// `L(ρ, (t, s)) = {x : r̂(x) ≤ t, ŵ(x) ≤ s}`
pub fn lower_cut(a: &CifSet, th: CutThreshold) -> CrispSubset {
    let u = th.as_unit();
    CrispSubset::from_predicate(a.space().clone(), |i| a.rho(i).le(&u))
}

/// Cut at an attained value.
pub fn threshold(level: Level) -> CutThreshold {
    CutThreshold::from(UnitValue::new(level.0, level.1).expect("attained values lie in [0, 1]"))
}

/// Nonempty, closed under `+` and scalar multiples, and containing the
/// graded parts of its members.
pub fn crisp_is_graded_subspace(s: &CrispSubset) -> bool {
    let space = s.space();
    if !s.contains(0) {
        return false;
    }
    let members: Vec<usize> = s.members().collect();
    let graded = members.iter().all(|&x| {
        let (x0, x1) = space.graded_parts(x);
        s.contains(x0) && s.contains(x1)
    });
    graded
        && members.iter().all(|&x| (1..space.p()).all(|alpha| s.contains(space.scale(alpha, x))))
        && members.iter().all(|&x| members.iter().all(|&y| s.contains(space.add(x, y))))
}

/// Graded subspace with `[S, S] ⊆ S`.
pub fn crisp_is_subsuperalgebra(s: &CrispSubset) -> bool {
    let space = s.space();
    crisp_is_graded_subspace(s) && {
        let members: Vec<usize> = s.members().collect();
        members.iter().all(|&x| members.iter().all(|&y| s.contains(space.bracket(x, y))))
    }
}

/// Graded subspace with `[S, V] ⊆ S` and `[V, S] ⊆ S`.
pub fn crisp_is_ideal(s: &CrispSubset) -> bool {
    let space = s.space();
    crisp_is_graded_subspace(s)
        && s.members()
            .all(|x| space.indices().all(|y| s.contains(space.bracket(x, y)) && s.contains(space.bracket(y, x))))
}

/// Crisp check matching a fuzzy structure flavour. Anti-variants use the
/// same crisp notion since `−[x, y] ∈ S ⇔ [x, y] ∈ S` for a subspace.
pub fn crisp_is(structure: Structure, s: &CrispSubset) -> bool {
    if structure.is_ideal() {
        crisp_is_ideal(s)
    } else {
        crisp_is_subsuperalgebra(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieSuperalgebra;
    use crate::fixtures;
    use crate::value::{rational, CifValue};

    fn idx(s: &Space, c: &[u32]) -> usize {
        s.encode(c)
    }

    fn diag(l: (u64, u64), r: (u64, u64)) -> CifValue {
        CifValue::diagonal(rational(l.0, l.1), rational(r.0, r.1)).unwrap()
    }

    fn lvl(n: u64, d: u64) -> Level {
        (rational(n, d), rational(n, d))
    }

    #[test]
    fn example_passes_everything() {
        let a = fixtures::paper_example();
        assert!(is_cif_subspace(&a).holds);
        assert!(is_z2_graded(&a).holds);
        for s in Structure::ALL {
            let v = check_structure(&a, s);
            assert!(v.holds, "{s:?}: {:?}", v.witness);
        }
        let t = CifSet::trivial(a.space().clone());
        assert!(is_cif_subspace(&t).holds);
        let top = CifSet::top(a.space().clone());
        assert!(is_cif_subsuperalgebra(&top).holds && is_cif_ideal(&top).holds);
        assert!(is_anti_cif_subsuperalgebra(&top).holds);
    }

    #[test]
    fn lowered_lambda_is_caught() {
        let a = fixtures::paper_example();
        let s = a.space().clone();
        let e = idx(&s, &[1, 0, 0]);
        let broken = a.with_value(e, diag((1, 10), (1, 5)));
        let v = is_cif_subspace(&broken);
        assert!(!v.holds);
        // first failing pair in index order: x = b, y = e − b
        assert_eq!(
            v.witness,
            Some(Witness::Addition {
                component: Component::Lambda,
                x: s.vector(idx(&s, &[0, 0, 1])),
                y: s.vector(idx(&s, &[1, 0, 4])),
            })
        );
        // the scalar condition also fails at 3e
        let three_e = idx(&s, &[3, 0, 0]);
        assert!(!broken.lambda(s.scale(2, three_e)).ge(broken.lambda(three_e)));
        assert!(!is_cif_subspace(&broken.with_value(0, diag((1, 2), (0, 1)))).holds);
    }

    #[test]
    fn mutated_example_is_not_graded() {
        let a = fixtures::paper_example();
        let s = a.space().clone();
        let ea = idx(&s, &[1, 1, 0]);
        let m = a.with_value(ea, diag((9, 10), (1, 10)));
        let v = is_z2_graded(&m);
        assert_eq!(v.witness, Some(Witness::NotGraded { x: Some(s.vector(ea)) }));
        assert!(!is_cif_ideal(&m).holds);
    }

    #[test]
    fn bracket_failure_is_reported() {
        let s = fixtures::heisenberg_5_1();
        // λ high on the odd part but low on e breaks [a, b] = e
        let a = CifSet::from_fn(s.clone(), |i| {
            if i == 0 {
                CifValue::top()
            } else if s.in_part(i, Parity::Odd) {
                diag((7, 10), (1, 5))
            } else {
                diag((1, 2), (2, 5))
            }
        });
        assert!(is_cif_subspace(&a).holds);
        assert!(is_z2_graded(&a).holds);
        let v = is_cif_subsuperalgebra(&a);
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::Bracket { component: Component::Lambda, negated: false, .. })));
        assert!(!is_anti_cif_subsuperalgebra(&a).holds);
    }

    #[test]
    fn anti_and_plain_agree_on_abelian() {
        let s = Arc::new(Space::new(LieSuperalgebra::abelian(5, 1, 1).unwrap()).unwrap());
        let a = CifSet::from_fn(s.clone(), |i| if i == 0 { CifValue::top() } else { diag((1, 3), (1, 3)) });
        assert_eq!(bracket_condition(&a, Structure::Ideal).holds, bracket_condition(&a, Structure::AntiIdeal).holds);
        assert!(check_structure(&a, Structure::AntiIdeal).holds);
    }

    #[test]
    fn image_sets_of_the_example() {
        let a = fixtures::paper_example();
        let im = image_set(&a);
        assert_eq!(im.lambda, [lvl(1, 1), lvl(7, 10), lvl(1, 2)].into_iter().collect());
        assert_eq!(im.rho, [lvl(0, 1), lvl(1, 5), lvl(2, 5)].into_iter().collect());
        assert!(im.both.is_empty());
        let top = image_set(&CifSet::top(a.space().clone()));
        assert_eq!(top.lambda, [lvl(1, 1)].into_iter().collect());
    }

    #[test]
    fn cuts_of_the_example() {
        let a = fixtures::paper_example();
        let s = a.space().clone();
        let n0 = upper_cut(&a, threshold(lvl(7, 10)));
        assert_eq!(n0.members().collect::<Vec<_>>(), s.part(Parity::Even).collect::<Vec<_>>());
        assert!(crisp_is_ideal(&n0));
        assert_eq!(upper_cut(&a, threshold(lvl(0, 1))).len(), 125);
        assert_eq!(lower_cut(&a, threshold(lvl(0, 1))).members().collect::<Vec<_>>(), vec![0]);
        assert_eq!(lower_cut(&a, threshold(lvl(1, 5))), n0);
        assert!(upper_cut(&a, threshold(lvl(1, 1))).is_subset_of(&n0));
    }

    #[test]
    fn crisp_examples() {
        let s = fixtures::heisenberg_5_1();
        let zero = CrispSubset::from_indices(s.clone(), [0]);
        assert!(crisp_is_graded_subspace(&zero) && crisp_is_subsuperalgebra(&zero) && crisp_is_ideal(&zero));
        let a = idx(&s, &[0, 1, 0]);
        let pair = CrispSubset::from_indices(s.clone(), [0, a]);
        assert!(!crisp_is_graded_subspace(&pair));
        let empty = CrispSubset::from_indices(s.clone(), []);
        assert!(!crisp_is_graded_subspace(&empty));
        let all = CrispSubset::from_predicate(s.clone(), |_| true);
        assert!(crisp_is_ideal(&all));
        // span{a} is a graded subspace and closed ([a,a] = 0) but not an ideal
        let line = CrispSubset::from_indices(s.clone(), (0..5).map(|c| idx(&s, &[0, c, 0])));
        assert!(crisp_is_subsuperalgebra(&line));
        assert!(!crisp_is_ideal(&line));
        // span{e + a} is not graded
        let mixed = CrispSubset::from_indices(s.clone(), (0..5).map(|c| idx(&s, &[c, c, 0])));
        assert!(!crisp_is_graded_subspace(&mixed));
    }
}
