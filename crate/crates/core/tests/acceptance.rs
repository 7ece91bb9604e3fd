//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `cargo test --test acceptance -- --nocapture`) and
//! asserting its stated time budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crcodes::constructions::{psl_2_5, rep_code, rep_transitive_group, twisted_pgl25};
use crcodes::designs::{orbit_design, qary_design_lambda, Design};
use crcodes::feasibility::Provenance;
use crcodes::hamming::hamming_distance;
use crcodes::nonexist::{build_nonexistence_system, nonexistence_certificates, Assumption, BranchOutcome};
use crcodes::regularity::s_regularity_level;
use crcodes::spectra::{
    affine_bound_feasible, macwilliams_transform, prime_power, psl_bound_feasible,
};
use crcodes::theorems::replay;
use crcodes::transitivity::{neighbour_transitivity_level, PartStatus};
use crcodes::wreath::normalize_code;
use crcodes::{AutSubgroup, Budget, Code, PermGroup, Permutation, Vertex, WreathElement};

fn finish(criterion: &str, name: &str, start: Instant, bound: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {criterion} ({name}): PASS in {elapsed:.2?} (bound {bound:.0?})");
    assert!(
        elapsed < bound,
        "{criterion} took {elapsed:?}, over the bound {bound:?}"
    );
}

#[test]
fn criterion_1_repetition_complete_transitivity() {
    let start = Instant::now();
    let budget = Budget::default();
    for m in 5..=8usize {
        let code = rep_code(m, 2).unwrap();
        let group = rep_transitive_group(m).unwrap();
        let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
        assert!(verdict.is_completely_transitive(), "m = {m}");
        if m == 6 {
            let partition = code.distance_partition().unwrap();
            assert_eq!(partition.sizes(), &[2, 12, 30, 20]);
            assert_eq!(partition.rho(), 3);
        }
        assert_eq!(code.covering_radius().unwrap(), m / 2);
    }
    finish(
        "criterion 1",
        "repetition codes completely transitive, length-6 partition",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_twisted_group_level_two() {
    let start = Instant::now();
    let budget = Budget::default();
    let code = rep_code(6, 2).unwrap();
    let group = twisted_pgl25();
    let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
    assert_eq!(verdict.level, Some(2));
    assert!(!verdict.is_completely_transitive());
    match &verdict.parts[3] {
        PartStatus::Split {
            orbit_size,
            part_size,
            ..
        } => {
            assert_eq!((*orbit_size, *part_size), (10, 20));
        }
        other => panic!("expected a split on the weight-3 part, got {other:?}"),
    }
    finish(
        "criterion 2",
        "twisted projective group stops at level 2 with a 10+10 split",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_triple_orbits_are_complementary_biplanes() {
    let start = Instant::now();
    let budget = Budget::default();
    let orbits = psl_2_5().orbits_on_ksubsets(3, &budget).unwrap();
    assert_eq!(orbits.len(), 2);
    assert_eq!(orbits[0].len(), 10);
    assert_eq!(orbits[1].len(), 10);
    let first = Design::new(6, orbits[0].clone()).unwrap();
    let second = Design::new(6, orbits[1].clone()).unwrap();
    assert_eq!(first.t_design_lambda(2, &budget).unwrap(), Some(2));
    assert_eq!(second.t_design_lambda(2, &budget).unwrap(), Some(2));
    assert_eq!(first.complement(), second);
    assert_eq!(second.complement(), first);
    finish(
        "criterion 3",
        "two triple orbits of size 10, each a 2-(6,3,2), mutually complementary",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_4_nonexistence_pipeline_16_5() {
    let start = Instant::now();
    let report = nonexistence_certificates(16, 5).unwrap();
    // Index divisibility forces lambda = 4 and a weight-5 class of 48.
    assert_eq!(report.min_weight.admissible, vec![4]);
    assert_eq!(report.forced_class_size, Some(48));
    // Intersection numbers of the weight-5 class template.
    assert_eq!(
        report.intersection_profile.as_ref().unwrap(),
        &BTreeSet::from([0, 1, 2])
    );
    // The two printed transform rows and the bound they imply.
    let derivation = report.bound_derivation.as_ref().unwrap();
    let rat = |n: i64| BigRational::from_integer(n.into());
    assert_eq!(derivation.low_row.constant, rat(600));
    assert_eq!(derivation.low_row.coeffs[7], rat(-6));
    assert_eq!(derivation.low_row.coeffs[8], rat(-8));
    assert_eq!(derivation.low_row.coeffs[9], rat(-6));
    assert_eq!(derivation.high_row.constant, rat(-360));
    assert_eq!(derivation.high_row.coeffs[7], rat(6));
    assert_eq!(derivation.high_row.coeffs[8], rat(-8));
    assert_eq!(derivation.high_row.coeffs[9], rat(6));
    assert_eq!(derivation.weight, 8);
    assert_eq!(derivation.upper_bound, rat(15));
    // Divisibility of the weight-8 index by 7 forces at least 30 blocks.
    assert_eq!(derivation.design_lower_bound, 30);
    // Covering radii 4 and 5 die on exact cardinality equations.
    for (branch, multiplier) in report.branches.iter().zip([154u64, 274]) {
        match &branch.outcome {
            BranchOutcome::Arithmetic { reason } => {
                assert!(reason.contains(&format!("|C| * {multiplier} = 2^16")));
                assert!(reason.contains("no integer solution"));
            }
            other => panic!("expected arithmetic closure, got {other:?}"),
        }
    }
    // The remaining branches close with validating certificates.
    assert!(report.infeasible());
    for branch in &report.branches {
        if let BranchOutcome::Certified {
            system,
            certificate,
        } = &branch.outcome
        {
            assert!(certificate.is_infeasible());
            assert!(certificate.validate(system));
        }
    }
    assert_eq!(report.branches.len(), 4);
    finish(
        "criterion 4",
        "length-16 distance-5 pipeline matches every printed intermediate",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_bound_tables() {
    let start = Instant::now();
    let mut affine = Vec::new();
    for r in [2u64, 3, 5, 7] {
        for n in 1..=6u32 {
            for q in [2u8, 3] {
                if affine_bound_feasible(r, n, q).unwrap() {
                    affine.push((r, n, q));
                }
            }
        }
    }
    assert_eq!(affine, vec![(2, 3, 3), (2, 4, 2), (2, 5, 2)]);
    let mut projective = Vec::new();
    for n in 2..=5u32 {
        for r in 2..=32u64 {
            if prime_power(r).is_some() && psl_bound_feasible(n, r, 2).unwrap() {
                projective.push((n, r));
            }
        }
    }
    assert_eq!(
        projective,
        vec![(2, 9), (2, 11), (2, 13), (2, 16), (3, 3), (3, 4), (4, 2)]
    );
    finish(
        "criterion 5",
        "affine and projective bound tables reproduced exactly",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_6_exhaustive_replays() {
    let start = Instant::now();
    let two_word = replay("two-word-regular-codes").unwrap();
    assert!(two_word.pass(), "{}", two_word.render());
    assert_eq!(two_word.counterexamples(), 0);
    let normalization = replay("full-distance-normalization").unwrap();
    assert!(normalization.pass(), "{}", normalization.render());
    assert_eq!(normalization.counterexamples(), 0);
    finish(
        "criterion 6",
        "exhaustive small-parameter replays with zero counterexamples",
        start,
        Duration::from_secs(60),
    );
}

fn random_permutation(rng: &mut StdRng, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(images).unwrap()
}

fn random_zero_fixing_permutation(rng: &mut StdRng, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (2..degree).rev() {
        images.swap(i, rng.gen_range(1..=i));
    }
    Permutation::from_images(images).unwrap()
}

fn random_vertex(rng: &mut StdRng, m: usize, q: u8) -> Vertex {
    Vertex::new((0..m).map(|_| rng.gen_range(0..q)).collect())
}

fn random_code(rng: &mut StdRng, m: usize, q: u8, max_size: usize) -> Code {
    let size = rng.gen_range(1..=max_size);
    let words = (0..size).map(|_| random_vertex(rng, m, q)).collect();
    Code::new(m, q, words).unwrap()
}

fn random_wreath(rng: &mut StdRng, m: usize, q: u8) -> WreathElement {
    let alphabet = (0..m)
        .map(|_| random_permutation(rng, q as usize))
        .collect();
    WreathElement::new(alphabet, random_permutation(rng, m)).unwrap()
}

#[test]
fn criterion_7_property_suites() {
    let start = Instant::now();
    let budget = Budget::default();

    // MacWilliams transform non-negativity on random codes.
    let mut rng = StdRng::seed_from_u64(71);
    for case in 0..200 {
        let m = rng.gen_range(2..=8usize);
        let q = rng.gen_range(2..=4u8);
        let code = random_code(&mut rng, m, q, 16);
        let transform =
            macwilliams_transform(code.distance_distribution().unwrap().values(), q).unwrap();
        for (k, value) in transform.iter().enumerate() {
            assert!(
                !value.is_negative(),
                "case {case}: negative transform entry at k={k}"
            );
        }
    }
    println!("  suite macwilliams-nonnegativity: 200 cases");

    // Orbit-stabilizer identity on random groups.
    let mut rng = StdRng::seed_from_u64(72);
    for _ in 0..200 {
        let degree = rng.gen_range(4..=8usize);
        let gens = (0..rng.gen_range(1..=3))
            .map(|_| random_permutation(&mut rng, degree))
            .collect();
        let group = PermGroup::from_generators(degree, gens).unwrap();
        let point = rng.gen_range(0..degree);
        let orbit = group.orbit(point).unwrap();
        let stabilizer = group.point_stabilizer(point).unwrap();
        assert_eq!(
            group.order(),
            stabilizer.order() * BigUint::from(orbit.len())
        );
    }
    println!("  suite orbit-stabilizer: 200 cases");

    // Action law: applying a product equals applying the factors in turn.
    let mut rng = StdRng::seed_from_u64(73);
    for _ in 0..200 {
        let m = rng.gen_range(2..=6usize);
        let q = rng.gen_range(2..=4u8);
        let x = random_wreath(&mut rng, m, q);
        let y = random_wreath(&mut rng, m, q);
        let v = random_vertex(&mut rng, m, q);
        assert_eq!(
            x.then(&y).apply(&v).unwrap(),
            y.apply(&x.apply(&v).unwrap()).unwrap()
        );
    }
    println!("  suite action-law: 200 cases");

    // Support transport under zero-fixing automorphisms.
    let mut rng = StdRng::seed_from_u64(74);
    for _ in 0..200 {
        let m = rng.gen_range(2..=6usize);
        let q = rng.gen_range(2..=4u8);
        let alphabet = (0..m)
            .map(|_| random_zero_fixing_permutation(&mut rng, q as usize))
            .collect();
        let x = WreathElement::new(alphabet, random_permutation(&mut rng, m)).unwrap();
        let v = random_vertex(&mut rng, m, q);
        assert!(x.support_transport_check(&v).unwrap());
        assert!(x.support_transport_check(&Vertex::zero(m)).unwrap());
    }
    println!("  suite support-transport: 200 cases");

    // Equivalence preserves distance, covering radius and regularity.
    let mut rng = StdRng::seed_from_u64(75);
    for _ in 0..200 {
        let m = rng.gen_range(2..=5usize);
        let q = rng.gen_range(2..=3u8);
        let code = random_code(&mut rng, m, q, 6);
        let x = random_wreath(&mut rng, m, q);
        let image = x.act_on_code(&code).unwrap();
        assert_eq!(
            code.min_distance_opt().unwrap(),
            image.min_distance_opt().unwrap()
        );
        assert_eq!(
            code.covering_radius().unwrap(),
            image.covering_radius().unwrap()
        );
        let before = s_regularity_level(&code).unwrap();
        let after = s_regularity_level(&image).unwrap();
        assert_eq!(before.level, after.level);
    }
    println!("  suite equivalence-invariance: 200 cases");

    // Binary weight-class designs agree with their support designs.
    let mut rng = StdRng::seed_from_u64(76);
    let mut agreement_cases = 0usize;
    while agreement_cases < 200 {
        let m = rng.gen_range(3..=7usize);
        let k = rng.gen_range(1..=m);
        let t = rng.gen_range(1..=k);
        let mut pool: Vec<Vertex> = crcodes::hamming::vertices_of_weight(m, 2, k, &budget)
            .unwrap();
        // Pick a random non-empty subset of the weight-k layer.
        let keep: Vec<Vertex> = pool
            .drain(..)
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if keep.is_empty() {
            continue;
        }
        let qary = qary_design_lambda(&keep, 2, t, &budget).unwrap();
        let blocks: Vec<Vec<usize>> = keep.iter().map(|v| v.support()).collect();
        let support = Design::new(m, blocks).unwrap();
        assert_eq!(qary, support.t_design_lambda(t, &budget).unwrap());
        agreement_cases += 1;
    }
    println!("  suite binary-design-agreement: {agreement_cases} cases");

    // Double counting on every produced design verdict.
    let mut rng = StdRng::seed_from_u64(77);
    let mut verdicts = 0usize;
    while verdicts < 200 {
        let m = rng.gen_range(4..=7usize);
        let gens = (0..rng.gen_range(1..=2))
            .map(|_| random_permutation(&mut rng, m))
            .collect();
        let group = PermGroup::from_generators(m, gens).unwrap();
        let k = rng.gen_range(1..=m - 1);
        let block: Vec<usize> = {
            let mut points: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                points.swap(i, rng.gen_range(0..=i));
            }
            points.truncate(k);
            points
        };
        let design = orbit_design(&group, &block, &budget).unwrap();
        for t in 1..=k.min(2) {
            if let Some(lambda) = design.t_design_lambda(t, &budget).unwrap() {
                let b = design.block_count() as u64;
                let choose = |n: usize, r: usize| {
                    crcodes::spectra::binomial(n as u64, r as u64)
                        .to_u64()
                        .unwrap()
                };
                assert_eq!(b * choose(k, t), lambda * choose(m, t));
                verdicts += 1;
            }
        }
    }
    println!("  suite design-double-counting: {verdicts} verdicts");

    finish(
        "criterion 7",
        "seven property suites, at least 200 cases each, zero failures",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_8_forward_verification() {
    let start = Instant::now();
    let budget = Budget::default();
    for m in 5..=8usize {
        let code = rep_code(m, 2).unwrap();
        let group = rep_transitive_group(m).unwrap();
        // Hypotheses.
        assert!(code.len() >= 2);
        assert!(code.min_distance().unwrap() >= 5);
        assert!(group.is_faithful_on_entries());
        // Conclusions.
        assert_eq!(code.q(), 2);
        let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
        assert!(verdict.is_completely_transitive());
        let alpha = Vertex::constant(m, 1);
        let beta = Vertex::zero(m);
        let (x, normalized) = normalize_code(&code, &alpha, &beta, 0).unwrap();
        assert_eq!(normalized, code);
        assert_eq!(x.apply(&alpha).unwrap(), Vertex::zero(m));
        let factorial: u64 = (1..=m as u64).product();
        assert_eq!(group.order(), BigUint::from(factorial));
        let stabilizer = group
            .vertex_stabilizer(&Vertex::zero(m), &budget)
            .unwrap();
        assert_eq!(group.order(), stabilizer.order() * BigUint::from(2u32));
    }
    finish(
        "criterion 8",
        "forward verification of the witness family at lengths 5 to 8",
        start,
        Duration::from_secs(10),
    );
}

/// The base system with no assumptions and full distance pins everything
/// except the top entry (regression companion to criterion 4).
#[test]
fn nonexistence_base_system_sanity() {
    let system = build_nonexistence_system(6, 6, &[]).unwrap();
    assert!(system
        .constraints()
        .iter()
        .any(|c| matches!(c.provenance, Provenance::MacWilliamsRow(_))));
    let antipodal = build_nonexistence_system(6, 2, &[Assumption::Antipodal]).unwrap();
    let mirrors = antipodal
        .constraints()
        .iter()
        .filter(|c| matches!(c.provenance, Provenance::Antipodality(_)))
        .count();
    assert_eq!(mirrors, 3);
}

/// Distances are preserved by every wreath element (metric sanity used
/// throughout the acceptance checks).
#[test]
fn wreath_elements_preserve_distance() {
    let mut rng = StdRng::seed_from_u64(78);
    for _ in 0..100 {
        let m = rng.gen_range(2..=6usize);
        let q = rng.gen_range(2..=4u8);
        let x = random_wreath(&mut rng, m, q);
        let u = random_vertex(&mut rng, m, q);
        let v = random_vertex(&mut rng, m, q);
        assert_eq!(
            hamming_distance(&u, &v).unwrap(),
            hamming_distance(&x.apply(&u).unwrap(), &x.apply(&v).unwrap()).unwrap()
        );
    }
    let _ = AutSubgroup::trivial(4, 2);
}
