//! Executable theorem statements and the batch runner.
//!
//! Each theorem is evaluated per instance as one or more [`Check`]s (one per
//! structure flavour, direction or threshold reading). A check whose
//! hypothesis fails is skipped, never counted as a pass.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use super::generate::{self, random_cif_structure, StructureKind};
use super::grid::ValueGrid;
use crate::linear::LinearMap;
use crate::ops;
use crate::set::CifSet;
use crate::space::Space;
use crate::verify::{
    self, check_structure, crisp_is, image_set, lower_cut, threshold, upper_cut, Level, Structure, Verdict,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    PSum,
    PCap,
    PScalar,
    PPre,
    PImg,
    IGraded,
    PCutFwd,
    PCutBack,
    PComp,
    PIff,
    PSumSuper,
    PCapSuper,
    PAntiPre,
    PAntiImg,
    PAntiSum,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::PSum,
        TheoremId::PCap,
        TheoremId::PScalar,
        TheoremId::PPre,
        TheoremId::PImg,
        TheoremId::IGraded,
        TheoremId::PCutFwd,
        TheoremId::PCutBack,
        TheoremId::PComp,
        TheoremId::PIff,
        TheoremId::PSumSuper,
        TheoremId::PCapSuper,
        TheoremId::PAntiPre,
        TheoremId::PAntiImg,
        TheoremId::PAntiSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::PSum => "P-SUM",
            TheoremId::PCap => "P-CAP",
            TheoremId::PScalar => "P-SCALAR",
            TheoremId::PPre => "P-PRE",
            TheoremId::PImg => "P-IMG",
            TheoremId::IGraded => "I-GRADED",
            TheoremId::PCutFwd => "P-CUT-FWD",
            TheoremId::PCutBack => "P-CUT-BACK",
            TheoremId::PComp => "P-COMP",
            TheoremId::PIff => "P-IFF",
            TheoremId::PSumSuper => "P-SUMSUPER",
            TheoremId::PCapSuper => "P-CAPSUPER",
            TheoremId::PAntiPre => "P-ANTIPRE",
            TheoremId::PAntiImg => "P-ANTIIMG",
            TheoremId::PAntiSum => "P-ANTISUM",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(String::from(s)))
    }
}

/// Inputs of one theorem evaluation.
#[derive(Debug, Clone)]
pub enum Instance {
    Single(CifSet),
    Pair(CifSet, CifSet),
    Scalar(u32, CifSet),
    /// The set lives on the map's source (images) or target (preimages).
    Mapped(LinearMap, CifSet),
    MappedPair(LinearMap, CifSet, CifSet),
}

impl Instance {
    fn shape(&self) -> &'static str {
        match self {
            Instance::Single(_) => "single",
            Instance::Pair(..) => "pair",
            Instance::Scalar(..) => "scalar",
            Instance::Mapped(..) => "mapped",
            Instance::MappedPair(..) => "mapped-pair",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Held,
    /// Held because the quantified range was empty.
    Vacuous,
    Skipped,
    Refuted,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Held => "held",
            Outcome::Vacuous => "vacuous",
            Outcome::Skipped => "skipped",
            Outcome::Refuted => "refuted",
        }
    }
}

/// One hypothesis ⇒ conclusion evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub variant: String,
    pub hypothesis: bool,
    /// `None` when the conclusion is undefined (e.g. a sum of a
    /// non-homogeneous pair).
    pub conclusion: Option<bool>,
    pub vacuous: bool,
    pub detail: Option<String>,
}

impl Check {
    fn new(variant: impl Into<String>, hypothesis: bool, conclusion: Option<bool>) -> Self {
        Self { variant: variant.into(), hypothesis, conclusion, vacuous: false, detail: None }
    }

    fn detail(mut self, detail: Option<String>) -> Self {
        self.detail = detail;
        self
    }

    pub fn outcome(&self) -> Outcome {
        match (self.hypothesis, self.conclusion) {
            (false, _) => Outcome::Skipped,
            (true, Some(true)) if self.vacuous => Outcome::Vacuous,
            (true, Some(true)) => Outcome::Held,
            (true, _) => Outcome::Refuted,
        }
    }

    /// A deliberately broken instance is caught unless it is reported as a
    /// genuine, holding instance.
    pub fn flags_invalid_input(&self) -> bool {
        !(self.hypothesis && self.conclusion == Some(true))
    }
}

fn flavor_name(s: Structure) -> &'static str {
    match s {
        Structure::Subsuperalgebra => "subsuperalgebra",
        Structure::Ideal => "ideal",
        Structure::AntiSubsuperalgebra => "anti-subsuperalgebra",
        Structure::AntiIdeal => "anti-ideal",
    }
}

const PLAIN: [Structure; 2] = [Structure::Subsuperalgebra, Structure::Ideal];
const ANTI: [Structure; 2] = [Structure::AntiSubsuperalgebra, Structure::AntiIdeal];

fn why(v: &Verdict) -> Option<String> {
    v.witness.as_ref().map(|w| w.to_string())
}

fn malformed(id: TheoremId, inst: &Instance) -> Error {
    Error::MalformedInstance(format!("{id} does not take a {} instance", inst.shape()))
}

fn homogeneous_with(a: &CifSet, b: &CifSet) -> Result<bool> {
    a.is_homogeneous_with(b)
}

fn subspace_check(variant: &str, hyp: bool, result: Option<CifSet>) -> Check {
    match result {
        Some(out) => {
            let v = verify::is_cif_subspace(&out);
            Check::new(variant, hyp, Some(v.holds)).detail(why(&v))
        }
        None => Check::new(variant, hyp, None),
    }
}

/// Evaluate one theorem on one instance.
pub fn evaluate(id: TheoremId, inst: &Instance) -> Result<Vec<Check>> {
    use TheoremId::*;
    let sub = |a: &CifSet| verify::is_cif_subspace(a).holds;
    match (id, inst) {
        (PSum, Instance::Pair(a, b)) => {
            let hw = homogeneous_with(a, b)?;
            let hyp = sub(a) && sub(b) && hw;
            let out = if hw { Some(ops::sum(a, b)?) } else { None };
            Ok(alloc::vec![subspace_check("subspace", hyp, out)])
        }
        (PCap, Instance::Pair(a, b)) => {
            let hyp = sub(a) && sub(b) && homogeneous_with(a, b)?;
            Ok(alloc::vec![subspace_check("subspace", hyp, Some(ops::intersect(a, b)?))])
        }
        (PScalar, Instance::Scalar(alpha, a)) => {
            Ok(alloc::vec![subspace_check("subspace", sub(a), Some(ops::scalar_transform(*alpha, a)))])
        }
        (PPre, Instance::Mapped(phi, b)) => {
            Ok(alloc::vec![subspace_check("subspace", sub(b), Some(ops::preimage(phi, b)?))])
        }
        (PImg, Instance::Mapped(phi, a)) => {
            Ok(alloc::vec![subspace_check("subspace", sub(a), Some(ops::image(phi, a)?))])
        }
        (IGraded, Instance::Single(a)) => Ok(alloc::vec![graded_formula(a)]),
        (PCutFwd, Instance::Single(a)) => Ok(PLAIN.iter().flat_map(|&f| cut_forward(a, f)).collect()),
        (PCutBack, Instance::Single(a)) => Ok(PLAIN.iter().map(|&f| cut_backward(a, f)).collect()),
        (PComp, Instance::Single(a)) => Ok(PLAIN
            .iter()
            .flat_map(|&f| {
                let hyp = check_structure(a, f).holds;
                let c = check_structure(&ops::complement_c(a), f);
                let l = check_structure(&ops::complement_l(a), f);
                [
                    Check::new(format!("{}/A^c", flavor_name(f)), hyp, Some(c.holds)).detail(why(&c)),
                    Check::new(format!("{}/A^L", flavor_name(f)), hyp, Some(l.holds)).detail(why(&l)),
                ]
            })
            .collect()),
        (PIff, Instance::Single(a)) => Ok(PLAIN
            .iter()
            .flat_map(|&f| {
                let base = check_structure(a, f);
                let c = check_structure(&ops::complement_c(a), f);
                let l = check_structure(&ops::complement_l(a), f);
                let both = c.holds && l.holds;
                let comp_why = if c.holds { why(&l) } else { why(&c) };
                [
                    Check::new(format!("{}/forward", flavor_name(f)), base.holds, Some(both)).detail(comp_why),
                    Check::new(format!("{}/backward", flavor_name(f)), both, Some(base.holds)).detail(why(&base)),
                ]
            })
            .collect()),
        (PSumSuper, Instance::Pair(a, b)) => {
            let hw = homogeneous_with(a, b)?;
            let total = if hw { Some(ops::sum(a, b)?) } else { None };
            Ok(PLAIN.iter().map(|&f| closure_check(f, a, b, hw, total.as_ref())).collect())
        }
        (PCapSuper, Instance::Pair(a, b)) => {
            let hw = homogeneous_with(a, b)?;
            let meet = ops::intersect(a, b)?;
            Ok(PLAIN.iter().map(|&f| closure_check(f, a, b, hw, Some(&meet))).collect())
        }
        (PAntiPre, Instance::Mapped(phi, b)) => {
            let valid = phi.validate_antihom().is_valid();
            let pre = ops::preimage(phi, b)?;
            Ok(ANTI
                .iter()
                .map(|&f| {
                    let v = check_structure(&pre, f);
                    Check::new(flavor_name(f), valid && check_structure(b, f).holds, Some(v.holds)).detail(why(&v))
                })
                .collect())
        }
        (PAntiImg, Instance::Mapped(phi, a)) => {
            let valid = phi.validate_antihom().is_valid() && phi.is_surjective();
            let img = ops::image(phi, a)?;
            Ok(ANTI
                .iter()
                .map(|&f| {
                    let v = check_structure(&img, f);
                    Check::new(flavor_name(f), valid && check_structure(a, f).holds, Some(v.holds)).detail(why(&v))
                })
                .collect())
        }
        (PAntiSum, Instance::MappedPair(phi, a, b)) => Ok(alloc::vec![anti_sum(phi, a, b)?]),
        _ => Err(malformed(id, inst)),
    }
}

/// `λ(x) = λ(x₀) ∧ λ(x₁)` and `ρ(x) = ρ(x₀) ∨ ρ(x₁)` whenever `A` is graded.
fn graded_formula(a: &CifSet) -> Check {
    let hyp = verify::is_z2_graded(a).holds;
    let space = a.space();
    let bad = space.indices().find(|&x| {
        let (x0, x1) = space.graded_parts(x);
        *a.lambda(x) != a.lambda(x0).meet(a.lambda(x1)) || *a.rho(x) != a.rho(x0).join(a.rho(x1))
    });
    Check::new("graded", hyp, Some(bad.is_none())).detail(bad.map(|x| format!("formula fails at {}", space.vector(x))))
}

fn cuts_hold(a: &CifSet, f: Structure, uppers: &BTreeSet<Level>, lowers: &BTreeSet<Level>) -> Option<String> {
    for &t in uppers {
        if !crisp_is(f, &upper_cut(a, threshold(t))) {
            return Some(format!("upper cut at ({}, {}) is not a crisp {}", t.0, t.1, flavor_name(f)));
        }
    }
    for &t in lowers {
        if !crisp_is(f, &lower_cut(a, threshold(t))) {
            return Some(format!("lower cut at ({}, {}) is not a crisp {}", t.0, t.1, flavor_name(f)));
        }
    }
    None
}

/// Literal reading: thresholds in `Im(λ) ∩ Im(ρ)` for both cuts.
/// Per-function reading: `Im(λ)` for upper cuts, `Im(ρ)` for lower cuts.
fn cut_forward(a: &CifSet, f: Structure) -> [Check; 2] {
    let hyp = check_structure(a, f).holds;
    let im = image_set(a);
    let literal = cuts_hold(a, f, &im.both, &im.both);
    let mut lit = Check::new(format!("{}/literal", flavor_name(f)), hyp, Some(literal.is_none())).detail(literal);
    lit.vacuous = im.both.is_empty();
    let per = cuts_hold(a, f, &im.lambda, &im.rho);
    [lit, Check::new(format!("{}/per-function", flavor_name(f)), hyp, Some(per.is_none())).detail(per)]
}

/// Thresholds for the converse: every combination of an attained magnitude
/// with an attained phase.
fn product(levels: &BTreeSet<Level>) -> BTreeSet<Level> {
    let rs: BTreeSet<_> = levels.iter().map(|l| l.0).collect();
    let ws: BTreeSet<_> = levels.iter().map(|l| l.1).collect();
    rs.iter().flat_map(|&r| ws.iter().map(move |&w| (r, w))).collect()
}

/// Hypothesis: normalized, homogeneous, and every nonempty cut at a product
/// threshold is a crisp structure. Conclusion: the fuzzy verifier passes.
fn cut_backward(a: &CifSet, f: Structure) -> Check {
    let im = image_set(a);
    let mut failure = None;
    for t in product(&im.lambda) {
        let cut = upper_cut(a, threshold(t));
        if !cut.is_empty() && !crisp_is(f, &cut) {
            failure = Some(format!("upper cut at ({}, {}) is not a crisp {}", t.0, t.1, flavor_name(f)));
            break;
        }
    }
    if failure.is_none() {
        for t in product(&im.rho) {
            let cut = lower_cut(a, threshold(t));
            if !cut.is_empty() && !crisp_is(f, &cut) {
                failure = Some(format!("lower cut at ({}, {}) is not a crisp {}", t.0, t.1, flavor_name(f)));
                break;
            }
        }
    }
    let hyp = a.is_normalized() && a.is_homogeneous() && failure.is_none();
    let v = check_structure(a, f);
    let detail =
        if hyp { why(&v) } else { failure.or_else(|| Some(String::from("not normalized or not homogeneous"))) };
    Check::new(flavor_name(f), hyp, Some(v.holds)).detail(detail)
}

fn closure_check(f: Structure, a: &CifSet, b: &CifSet, hw: bool, out: Option<&CifSet>) -> Check {
    let hyp = hw && check_structure(a, f).holds && check_structure(b, f).holds;
    match out {
        Some(out) => {
            let v = check_structure(out, f);
            Check::new(flavor_name(f), hyp, Some(v.holds)).detail(why(&v))
        }
        None => Check::new(flavor_name(f), hyp, None),
    }
}

/// `φ(A + B) = φ(A) + φ(B)`, and the result is an anti-CIF ideal.
fn anti_sum(phi: &LinearMap, a: &CifSet, b: &CifSet) -> Result<Check> {
    let f = Structure::AntiIdeal;
    let hw = homogeneous_with(a, b)?;
    let hyp = phi.validate_antihom().is_valid()
        && phi.is_surjective()
        && hw
        && check_structure(a, f).holds
        && check_structure(b, f).holds;
    if !hw {
        return Ok(Check::new(flavor_name(f), hyp, None));
    }
    let lhs = ops::image(phi, &ops::sum(a, b)?)?;
    let rhs = match ops::sum(&ops::image(phi, a)?, &ops::image(phi, b)?) {
        Ok(r) => r,
        Err(Error::NotHomogeneousPair { detail }) => {
            return Ok(Check::new(flavor_name(f), hyp, Some(false))
                .detail(Some(format!("images are not homogeneous with each other: {detail}"))))
        }
        Err(e) => return Err(e),
    };
    if lhs != rhs {
        let at = lhs.space().indices().find(|&y| lhs.value(y) != rhs.value(y)).expect("tables differ");
        return Ok(Check::new(flavor_name(f), hyp, Some(false))
            .detail(Some(format!("phi(A+B) and phi(A)+phi(B) differ at {}", lhs.space().vector(at)))));
    }
    let v = check_structure(&lhs, f);
    Ok(Check::new(flavor_name(f), hyp, Some(v.holds)).detail(why(&v)))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub held: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub refuted: usize,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Held => self.held += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Skipped => self.skipped += 1,
            Outcome::Refuted => self.refuted += 1,
        }
    }

    /// Instances where the hypothesis held.
    pub fn evaluated(&self) -> usize {
        self.held + self.vacuous + self.refuted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: usize,
    pub variant: String,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportVerdict {
    Held,
    Refuted,
    /// No instance satisfied any hypothesis.
    Skipped,
}

impl ReportVerdict {
    pub fn name(self) -> &'static str {
        match self {
            ReportVerdict::Held => "held",
            ReportVerdict::Refuted => "refuted",
            ReportVerdict::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchReport {
    pub id: TheoremId,
    pub instances: usize,
    pub variants: BTreeMap<String, Tally>,
    /// First refuted check, by instance index then variant order.
    pub counterexample: Option<Counterexample>,
}

impl BatchReport {
    pub fn verdict(&self) -> ReportVerdict {
        if self.counterexample.is_some() {
            ReportVerdict::Refuted
        } else if self.variants.values().any(|t| t.evaluated() > 0) {
            ReportVerdict::Held
        } else {
            ReportVerdict::Skipped
        }
    }

    pub fn tally(&self, variant: &str) -> Tally {
        self.variants.get(variant).copied().unwrap_or_default()
    }
}

pub fn run_batch(id: TheoremId, instances: &[Instance]) -> Result<BatchReport> {
    let mut variants: BTreeMap<String, Tally> = BTreeMap::new();
    let mut counterexample = None;
    for (i, inst) in instances.iter().enumerate() {
        for check in evaluate(id, inst)? {
            let o = check.outcome();
            variants.entry(check.variant.clone()).or_default().add(o);
            if o == Outcome::Refuted && counterexample.is_none() {
                counterexample = Some(Counterexample { instance: i, variant: check.variant, detail: check.detail });
            }
        }
    }
    Ok(BatchReport { id, instances: instances.len(), variants, counterexample })
}

fn kind_for(seed: u64) -> StructureKind {
    if seed.is_multiple_of(2) {
        StructureKind::Subsuperalgebra
    } else {
        StructureKind::Ideal
    }
}

/// One seeded instance for `id` on `space`. `map` replaces the default map
/// (random linear maps for the plain lemmas, `−id` for the anti-theorems);
/// sets are then generated on its source or target as appropriate.
pub fn generate_instance(
    id: TheoremId,
    space: &Arc<Space>,
    grid: &ValueGrid,
    seed: u64,
    map: Option<&LinearMap>,
) -> Result<Instance> {
    use TheoremId::*;
    let mut rng = generate::rng(seed);
    let mut child = || rng.random::<u64>();
    let (s1, s2, s3) = (child(), child(), child());
    let gen = |space: &Arc<Space>, kind, s| random_cif_structure(space.clone(), grid, kind, s);
    let sub = StructureKind::Subspace;
    Ok(match id {
        PSum | PCap => Instance::Pair(gen(space, sub, s1), gen(space, sub, s2)),
        PScalar => {
            let alpha = (s3 % u64::from(space.p())) as u32;
            Instance::Scalar(alpha, gen(space, sub, s1))
        }
        PPre | PImg => {
            let phi = match map {
                Some(m) => m.clone(),
                None => generate::random_linear_map(space.clone(), space.clone(), &mut generate::rng(s3))?,
            };
            let on = if id == PPre { phi.target().clone() } else { phi.source().clone() };
            Instance::Mapped(phi, gen(&on, sub, s1))
        }
        IGraded => {
            let kinds = [StructureKind::Subsuperalgebra, StructureKind::Ideal, sub, StructureKind::Set];
            Instance::Single(gen(space, kinds[(seed % 4) as usize], s1))
        }
        PCutFwd | PCutBack | PComp | PIff => Instance::Single(gen(space, kind_for(seed), s1)),
        PSumSuper | PCapSuper => Instance::Pair(gen(space, kind_for(seed), s1), gen(space, kind_for(seed), s2)),
        PAntiPre | PAntiImg | PAntiSum => {
            let phi = match map {
                Some(m) => m.clone(),
                None => LinearMap::negation(space.clone()),
            };
            if id == PAntiSum {
                let on = phi.source().clone();
                Instance::MappedPair(phi, gen(&on, StructureKind::Ideal, s1), gen(&on, StructureKind::Ideal, s2))
            } else {
                let on = if id == PAntiPre { phi.target().clone() } else { phi.source().clone() };
                Instance::Mapped(phi, gen(&on, kind_for(seed), s1))
            }
        }
    })
}

/// Instances for `seeds`, in seed order.
pub fn generate_batch(
    id: TheoremId,
    space: &Arc<Space>,
    grid: &ValueGrid,
    seeds: core::ops::Range<u64>,
    map: Option<&LinearMap>,
) -> Result<Vec<Instance>> {
    seeds.map(|s| generate_instance(id, space, grid, s, map)).collect()
}

/// A valid structure with one point mutated, wrapped for single-set theorems.
pub fn mutant_instance(space: &Arc<Space>, grid: &ValueGrid, seed: u64) -> Instance {
    let a = random_cif_structure(space.clone(), grid, kind_for(seed), seed);
    let mut rng = generate::rng(seed ^ 0x5eed);
    Instance::Single(generate::mutate_point(&a, grid, &mut rng))
}
