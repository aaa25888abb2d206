//! Oracle cross-checks: generator soundness, frozen derived values and
//! known refutations.

use ciflie_core::oracle::generate::{chain_structure, random_cif_structure, StructureKind};
use ciflie_core::oracle::theorem::{evaluate, Instance, Outcome, TheoremId};
use ciflie_core::oracle::{brute, enumerate_cif_sets, ValueGrid};
use ciflie_core::subspace::Subspace;
use ciflie_core::value::rational;
use ciflie_core::verify::{self, image_set, threshold, upper_cut};
use ciflie_core::{fixtures, ops, CifSet, CifValue, LinearMap, Parity, Space};
use std::sync::Arc;

fn d(l: (u64, u64), r: (u64, u64)) -> CifValue {
    CifValue::diagonal(rational(l.0, l.1), rational(r.0, r.1)).unwrap()
}

#[test]
fn ideal_generator_is_sound_over_many_seeds() {
    let g = ValueGrid::default();
    for s in [fixtures::heisenberg_5_1(), fixtures::abelian(5, 1, 1).unwrap()] {
        for seed in 0..200 {
            let a = random_cif_structure(s.clone(), &g, StructureKind::Ideal, seed);
            let v = verify::is_cif_ideal(&a);
            assert!(v.holds, "seed {seed}: {:?}", v.witness);
        }
    }
}

#[test]
fn sum_values_match_the_decomposition_oracle() {
    // abelian line, λ = 1/2 and ρ = 1/4 off zero
    let line = fixtures::abelian(5, 1, 0).unwrap();
    let a = CifSet::from_fn(line.clone(), |i| if i == 0 { CifValue::top() } else { d((1, 2), (1, 4)) });
    let fast = ops::sum(&a, &a).unwrap();
    assert_eq!(fast, brute::sum(&a, &a));
    assert_eq!(*fast.value(1), d((1, 2), (1, 4)));

    let ex = fixtures::paper_example();
    let e0 = ops::extend_from_part(&ops::restrict_to_part(&ex, Parity::Even));
    let e1 = ops::extend_from_part(&ops::restrict_to_part(&ex, Parity::Odd));
    assert_eq!(brute::sum(&e0, &e1), ex);
    assert_eq!(ops::sum(&e0, &e1).unwrap(), ex);
}

#[test]
fn intersections_are_entrywise() {
    let ex = fixtures::paper_example();
    let comp = ops::complement_c(&ex);
    let meet = ops::intersect(&ex, &comp).unwrap();
    let s = ex.space();
    // e: λ (7/10) vs (7/10); ρ (1/5) vs (3/10)
    assert_eq!(*meet.value(s.encode(&[1, 0, 0])), d((7, 10), (3, 10)));
    // a: λ (1/2); ρ (2/5) vs (1/2)
    assert_eq!(*meet.value(s.encode(&[0, 1, 0])), d((1, 2), (1, 2)));
    for i in s.indices() {
        let (x, y) = (ex.value(i), comp.value(i));
        assert_eq!(meet.lambda(i).r(), x.lambda().r().min(y.lambda().r()));
        assert_eq!(meet.rho(i).w(), x.rho().w().max(y.rho().w()));
    }
    assert!(ops::contains(&meet, &ex).unwrap());
}

#[test]
fn images_match_the_fiber_oracle() {
    let s = fixtures::heisenberg_5_1();
    let ex = fixtures::paper_example();
    // projection onto the even part
    let proj = LinearMap::new(s.clone(), s.clone(), vec![vec![1, 0, 0], vec![0; 3], vec![0; 3]]).unwrap();
    assert_eq!(proj.fiber_indices(s.encode(&[1, 0, 0])).count(), 25);
    let img = ops::image(&proj, &ex).unwrap();
    assert_eq!(img, brute::image(&proj, &ex).unwrap());
    assert_eq!(*img.value(s.encode(&[1, 0, 0])), d((7, 10), (1, 5)));
    assert_eq!(*img.value(s.encode(&[0, 1, 0])), CifValue::bottom());
    assert_eq!(ops::preimage(&LinearMap::negation(s.clone()), &ex).unwrap(), ex);
}

#[test]
fn example_images_and_cuts() {
    let ex = fixtures::paper_example();
    let im = image_set(&ex);
    let lv = |n, d| (rational(n, d), rational(n, d));
    assert_eq!(im.lambda.into_iter().collect::<Vec<_>>(), vec![lv(1, 2), lv(7, 10), lv(1, 1)]);
    assert!(im.both.is_empty());
    let cut: Vec<_> = upper_cut(&ex, threshold(lv(7, 10))).vectors().map(|v| v.into_coords()).collect();
    assert_eq!(cut, (0..5).map(|c| vec![c, 0, 0]).collect::<Vec<_>>());
}

#[test]
fn micro_enumeration_agrees_with_the_definition() {
    let s = fixtures::abelian(2, 1, 1).unwrap();
    let g = ValueGrid::parse("0,1").unwrap();
    let mut n = 0;
    for a in enumerate_cif_sets(s, &g).unwrap() {
        assert_eq!(verify::is_cif_subspace(&a).holds, brute::is_cif_subspace(&a));
        n += 1;
    }
    assert_eq!(n, brute::count_cif_sets(4, &g));
}

/// Two sub-superalgebras built on the odd lines `span{a}` and `span{b}` of
/// the Heisenberg superalgebra: both pass, but their sum gives
/// `λ(e) = λ([b, a])` a value below `λ(a) ∧ λ(b)`. The closure of
/// sub-superalgebras under sums fails in general; for ideals it holds.
#[test]
fn sums_of_subsuperalgebras_can_fail() {
    let s = fixtures::heisenberg_5_1();
    let levels = [CifValue::top(), d((7, 10), (1, 5)), d((1, 5), (1, 2))];
    let chain = |v: [u32; 3]| {
        let mut line = Subspace::zero(5, 3);
        line.insert(&v);
        [Subspace::zero(5, 3), line, Subspace::full(5, 3)]
    };
    let a = chain_structure(s.clone(), &chain([0, 1, 0]), &levels).unwrap();
    let b = chain_structure(s.clone(), &chain([0, 0, 1]), &levels).unwrap();
    assert!(verify::is_cif_subsuperalgebra(&a).holds && verify::is_cif_subsuperalgebra(&b).holds);
    let total = ops::sum(&a, &b).unwrap();
    assert_eq!(*total.value(s.encode(&[0, 1, 0])), levels[1]);
    assert_eq!(*total.value(s.encode(&[1, 0, 0])), levels[2]);
    assert!(!verify::is_cif_subsuperalgebra(&total).holds);

    let checks = evaluate(TheoremId::PSumSuper, &Instance::Pair(a, b)).unwrap();
    assert_eq!(checks[0].variant, "subsuperalgebra");
    assert_eq!(checks[0].outcome(), Outcome::Refuted);
    assert_eq!(checks[1].outcome(), Outcome::Skipped);
}

#[test]
fn zero_space_is_handled() {
    let s: Arc<Space> = fixtures::abelian(3, 0, 0).unwrap();
    let t = CifSet::trivial(s.clone());
    assert!(verify::is_cif_ideal(&t).holds);
    assert_eq!(ops::sum(&t, &t).unwrap(), t);
}
