//! Batch replays of the structural facts the toolkit is built around, as
//! executable desk-scale checks over built-in instances and exhaustive
//! small ranges.
//!
//! Each replay is registered under a descriptive id and produces a
//! deterministic report: one line per checked instance, overall pass when
//! no counterexample appears. Replays marked [`ReplayScope::Arithmetic`]
//! verify only the arithmetic substance of an argument whose remaining
//! steps rest on classification facts outside this toolkit's scope.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::constructions::{
    diagonal_flip, pgl_2_7, psl_2_5, psl_2_7, rep_code, rep_transitive_group, twisted_pgl25,
};
use crate::error::{Error, Result};
use crate::group::binomial_u64;
use crate::hamming::{Code, Vertex};
use crate::nonexist::nonexistence_certificates;
use crate::perm::Permutation;
use crate::regularity::s_regularity_level;
use crate::spectra::{affine_bound_feasible, prime_power, psl_bound_feasible};
use crate::transitivity::{
    check_stabilizer_homogeneity, counting_bound, entry_stabilizer_transitive_on_code,
    neighbour_transitivity_level, PartStatus,
};
use crate::wreath::{normalize_code, AutSubgroup, WreathElement};

/// Whether a replay covers the argument in full or only its arithmetic
/// sub-steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplayScope {
    Full,
    Arithmetic,
}

#[derive(Debug, Clone)]
pub struct ReplayCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub id: &'static str,
    pub title: &'static str,
    pub scope: ReplayScope,
    pub checks: Vec<ReplayCheck>,
}

impl ReplayReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn counterexamples(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    /// Stable text rendering, one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "format-version: 1").unwrap();
        writeln!(out, "replay: {}", self.id).unwrap();
        writeln!(out, "title: {}", self.title).unwrap();
        writeln!(
            out,
            "scope: {}",
            match self.scope {
                ReplayScope::Full => "full",
                ReplayScope::Arithmetic => "arithmetic sub-steps only",
            }
        )
        .unwrap();
        writeln!(
            out,
            "overall: {} ({} checks, {} counterexamples)",
            if self.pass() { "pass" } else { "fail" },
            self.checks.len(),
            self.counterexamples()
        )
        .unwrap();
        for check in &self.checks {
            writeln!(
                out,
                "{}: {} — {}",
                if check.pass { "pass" } else { "FAIL" },
                check.name,
                check.detail
            )
            .unwrap();
        }
        out
    }
}

/// Registered replay ids, in execution order.
pub const REPLAY_IDS: [&str; 15] = [
    "two-word-regular-codes",
    "full-distance-normalization",
    "size-two-iff-full-distance",
    "stabilizer-sphere-transitivity",
    "entry-stabilizer-code-transitivity",
    "alphabet-two-transitivity",
    "entry-action-two-transitivity",
    "orbit-counting-bound",
    "twisted-group-orbit-split",
    "weight-four-orbit-divisibility",
    "fisher-size-bound",
    "repetition-complete-transitivity",
    "affine-parameter-table",
    "projective-parameter-table",
    "nonexistence-certificates",
];

/// Runs one replay by id.
pub fn replay(id: &str) -> Result<ReplayReport> {
    match id {
        "two-word-regular-codes" => two_word_regular_codes(),
        "full-distance-normalization" => full_distance_normalization(),
        "size-two-iff-full-distance" => size_two_iff_full_distance(),
        "stabilizer-sphere-transitivity" => stabilizer_sphere_transitivity(),
        "entry-stabilizer-code-transitivity" => entry_stabilizer_code_transitivity(),
        "alphabet-two-transitivity" => alphabet_two_transitivity(),
        "entry-action-two-transitivity" => entry_action_two_transitivity(),
        "orbit-counting-bound" => orbit_counting_bound(),
        "twisted-group-orbit-split" => twisted_group_orbit_split(),
        "weight-four-orbit-divisibility" => weight_four_orbit_divisibility(),
        "fisher-size-bound" => fisher_size_bound(),
        "repetition-complete-transitivity" => repetition_complete_transitivity(),
        "affine-parameter-table" => affine_parameter_table(),
        "projective-parameter-table" => projective_parameter_table(),
        "nonexistence-certificates" => nonexistence_replay(),
        _ => Err(Error::domain(format!(
            "unknown replay id {id:?}; known ids: {REPLAY_IDS:?}"
        ))),
    }
}

/// Runs every registered replay.
pub fn replay_all() -> Result<Vec<ReplayReport>> {
    REPLAY_IDS.iter().map(|id| replay(id)).collect()
}

/// The verified instances the structural replays quantify over:
/// the binary repetition codes with their transitive groups, and the
/// twisted projective group on length 6.
fn corpus() -> Vec<(String, Code, AutSubgroup)> {
    let mut corpus = Vec::new();
    for m in 5..=8 {
        corpus.push((
            format!("repetition m={m}"),
            rep_code(m, 2).expect("m >= 2"),
            rep_transitive_group(m).expect("m >= 3"),
        ));
    }
    corpus.push((
        "twisted projective m=6".to_string(),
        rep_code(6, 2).expect("m >= 2"),
        twisted_pgl25(),
    ));
    corpus
}

fn two_word_codes(m: usize, q: u8) -> impl Iterator<Item = Code> {
    let total = (q as u64).pow(m as u32);
    (0..total).flat_map(move |a| {
        (a + 1..total).map(move |b| {
            Code::new(
                m,
                q,
                vec![Vertex::decode(a, m, q), Vertex::decode(b, m, q)],
            )
            .expect("valid entries")
        })
    })
}

/// Every 1-regular two-word code in the exhaustive range has minimum
/// distance 1 or m over the binary alphabet.
fn two_word_regular_codes() -> Result<ReplayReport> {
    let mut checks = Vec::new();
    for q in 2..=3u8 {
        for m in 2..=5usize {
            let mut scanned = 0u64;
            let mut regular = 0u64;
            let mut counterexamples = 0u64;
            for code in two_word_codes(m, q) {
                scanned += 1;
                let verdict = s_regularity_level(&code)?;
                if verdict.level >= Some(1) {
                    regular += 1;
                    let delta = code.min_distance()?;
                    if !((delta == 1 || delta == m) && q == 2) {
                        counterexamples += 1;
                    }
                }
            }
            checks.push(ReplayCheck {
                name: format!("m={m} q={q}"),
                pass: counterexamples == 0,
                detail: format!(
                    "{scanned} two-word codes, {regular} of them 1-regular, \
                     {counterexamples} counterexamples"
                ),
            });
        }
    }
    Ok(ReplayReport {
        id: "two-word-regular-codes",
        title: "1-regular two-word codes have minimum distance 1 or m, binary alphabet",
        scope: ReplayScope::Full,
        checks,
    })
}

/// Enumerates codes with minimum distance equal to the length: normalizing
/// any of them lands inside the repetition code, and the 1-regular ones
/// normalize onto the whole repetition code.
fn full_distance_normalization() -> Result<ReplayReport> {
    let mut checks = Vec::new();
    for q in 2..=3u8 {
        for m in 2..=4usize {
            let rep = rep_code(m, q)?;
            let total = (q as u64).pow(m as u32);
            let all: Vec<Vertex> = (0..total).map(|c| Vertex::decode(c, m, q)).collect();
            let mut scanned = 0u64;
            let mut one_regular = 0u64;
            let mut failures = 0u64;
            // Codes with pairwise distance m have at most q words; grow
            // them greedily from every seed pair.
            let mut stack: Vec<Vec<usize>> = Vec::new();
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    if crate::hamming::hamming_distance(&all[i], &all[j])? == m {
                        stack.push(vec![i, j]);
                    }
                }
            }
            while let Some(indices) = stack.pop() {
                let words: Vec<Vertex> = indices.iter().map(|&i| all[i].clone()).collect();
                let code = Code::new(m, q, words)?;
                scanned += 1;
                let alpha = code.words()[0].clone();
                let beta = code.words()[1].clone();
                let (_, image) = normalize_code(&code, &alpha, &beta, 0)?;
                let inside_rep = image.words().iter().all(|w| rep.contains(w));
                let mut ok = inside_rep;
                if s_regularity_level(&code)?.level >= Some(1) {
                    one_regular += 1;
                    ok = ok && image == rep;
                }
                if !ok {
                    failures += 1;
                }
                // Extend to larger codes still at pairwise distance m.
                let last = *indices.last().expect("non-empty");
                for next in last + 1..all.len() {
                    if indices
                        .iter()
                        .all(|&i| crate::hamming::hamming_distance(&all[i], &all[next])
                            .map(|d| d == m)
                            .unwrap_or(false))
                    {
                        let mut extended = indices.clone();
                        extended.push(next);
                        stack.push(extended);
                    }
                }
            }
            checks.push(ReplayCheck {
                name: format!("m={m} q={q}"),
                pass: failures == 0,
                detail: format!(
                    "{scanned} full-distance codes, {one_regular} of them 1-regular, \
                     {failures} failures"
                ),
            });
        }
    }
    Ok(ReplayReport {
        id: "full-distance-normalization",
        title: "codes at full minimum distance normalize into the repetition code",
        scope: ReplayScope::Full,
        checks,
    })
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// On completely regular binary codes of lengths 5 and 6 with minimum
/// distance at least 2 (exhaustive pairs plus seeded samples), having
/// exactly two words is equivalent to full minimum distance.
fn size_two_iff_full_distance() -> Result<ReplayReport> {
    let mut checks = Vec::new();
    for m in 5..=6usize {
        let mut inspected = 0u64;
        let mut counterexamples = 0u64;
        let mut verify = |code: &Code| -> Result<()> {
            let delta = match code.min_distance_opt()? {
                Some(d) if d >= 2 => d,
                _ => return Ok(()),
            };
            if !s_regularity_level(code)?.is_completely_regular() {
                return Ok(());
            }
            inspected += 1;
            if (code.len() == 2) != (delta == m) {
                counterexamples += 1;
            }
            Ok(())
        };
        for code in two_word_codes(m, 2) {
            verify(&code)?;
        }
        // Named larger members and seeded random samples.
        let even_weight: Vec<Vertex> = (0..(1u64 << m))
            .map(|c| Vertex::decode(c, m, 2))
            .filter(|v| v.weight() % 2 == 0)
            .collect();
        verify(&Code::new(m, 2, even_weight)?)?;
        let mut rng = XorShift(0x5eed_0000 + m as u64);
        for _ in 0..400 {
            let size = 3 + (rng.next() % 6) as usize;
            let words: Vec<Vertex> = (0..size)
                .map(|_| Vertex::decode(rng.next() % (1 << m), m, 2))
                .collect();
            verify(&Code::new(m, 2, words)?)?;
        }
        checks.push(ReplayCheck {
            name: format!("m={m}"),
            pass: counterexamples == 0,
            detail: format!(
                "{inspected} completely regular codes inspected, \
                 {counterexamples} counterexamples"
            ),
        });
    }
    Ok(ReplayReport {
        id: "size-two-iff-full-distance",
        title: "completely regular, distance >= 2: two words iff full distance",
        scope: ReplayScope::Full,
        checks,
    })
}

/// Codeword stabilizers of verified neighbour-transitive instances act
/// transitively on the surrounding spheres and homogeneously on entries.
fn stabilizer_sphere_transitivity() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (name, code, group) in corpus() {
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        let level = verdict.level.expect("corpus instances are at least 0-transitive");
        let report = check_stabilizer_homogeneity(&code, &group, level, &budget)?;
        checks.push(ReplayCheck {
            name,
            pass: report.all_pass(),
            detail: format!(
                "level {level}, radii 0..={}, {} stabilizer checks",
                report.max_radius,
                report.checks.len()
            ),
        });
    }
    Ok(ReplayReport {
        id: "stabilizer-sphere-transitivity",
        title: "codeword stabilizers are sphere-transitive and entry-homogeneous",
        scope: ReplayScope::Full,
        checks,
    })
}

/// Setwise entry stabilizers of verified instances act transitively on
/// the code, for every entry set within the verified range.
fn entry_stabilizer_code_transitivity() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (name, code, group) in corpus() {
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        let level = verdict.level.expect("corpus instances are at least 0-transitive");
        let delta = code.min_distance()?;
        let max_size = level.min((delta - 1) / 2);
        let mut tested = 0u64;
        let mut failures = 0u64;
        for size in 0..=max_size {
            for entries in crate::group::combinations(code.m(), size) {
                tested += 1;
                if !entry_stabilizer_transitive_on_code(&code, &group, &entries, &budget)? {
                    failures += 1;
                }
            }
        }
        checks.push(ReplayCheck {
            name,
            pass: failures == 0,
            detail: format!("{tested} entry sets of size 0..={max_size}, {failures} failures"),
        });
    }
    Ok(ReplayReport {
        id: "entry-stabilizer-code-transitivity",
        title: "entry-set stabilizers act transitively on the code",
        scope: ReplayScope::Full,
        checks,
    })
}

/// The induced alphabet group in any entry of a 1-neighbour-transitive
/// instance with distance >= 3 is 2-transitive.
fn alphabet_two_transitivity() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (name, code, group) in corpus() {
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        if verdict.level < Some(1) || code.min_distance()? < 3 || code.len() <= 1 {
            continue;
        }
        let induced = group.entry_alphabet_group(0, &budget)?;
        let pass = induced.is_k_transitive(2, &budget)?;
        checks.push(ReplayCheck {
            name,
            pass,
            detail: format!(
                "alphabet group in entry 1 has order {}",
                induced.order()
            ),
        });
    }
    Ok(ReplayReport {
        id: "alphabet-two-transitivity",
        title: "induced alphabet groups are 2-transitive",
        scope: ReplayScope::Full,
        checks,
    })
}

/// The entry action of a 2-neighbour-transitive instance with distance at
/// least 5 and faithful entry action is 2-transitive.
fn entry_action_two_transitivity() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (name, code, group) in corpus() {
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        if verdict.level < Some(2)
            || code.min_distance()? < 5
            || code.len() <= 1
            || !group.is_faithful_on_entries()
        {
            continue;
        }
        let pass = group.entry_group().is_k_transitive(2, &budget)?;
        checks.push(ReplayCheck {
            name,
            pass,
            detail: format!("entry group of order {}", group.entry_group().order()),
        });
    }
    Ok(ReplayReport {
        id: "entry-action-two-transitivity",
        title: "entry actions of 2-neighbour-transitive instances are 2-transitive",
        scope: ReplayScope::Full,
        checks,
    })
}

/// Verified completely transitive instances satisfy the orbit-counting
/// bound and its alphabet refinement.
fn orbit_counting_bound() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for (name, code, group) in corpus() {
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        if !verdict.is_completely_transitive() {
            continue;
        }
        let bound = counting_bound(&code, &group);
        let pass = bound.holds && bound.faithful_refinement != Some(false);
        checks.push(ReplayCheck {
            name,
            pass,
            detail: format!(
                "q^m <= |X|(m+1): {}, refinement q <= m-2: {:?}",
                bound.holds, bound.faithful_refinement
            ),
        });
    }
    Ok(ReplayReport {
        id: "orbit-counting-bound",
        title: "completely transitive instances satisfy the counting bound",
        scope: ReplayScope::Full,
        checks,
    })
}

/// The twisted projective group reaches level exactly 2 on the length-6
/// repetition code: the weight-3 part splits into the two support-orbit
/// halves, which the flip exchanges.
fn twisted_group_orbit_split() -> Result<ReplayReport> {
    let budget = Budget::default();
    let code = rep_code(6, 2)?;
    let group = twisted_pgl25();
    let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
    let mut checks = Vec::new();
    checks.push(ReplayCheck {
        name: "level".to_string(),
        pass: verdict.level == Some(2) && !verdict.is_completely_transitive(),
        detail: format!("level {:?}, covering radius {}", verdict.level, verdict.covering_radius),
    });
    let split_sizes = match &verdict.parts[3] {
        PartStatus::Split {
            orbit_size,
            part_size,
            ..
        } => Some((*orbit_size, *part_size)),
        _ => None,
    };
    checks.push(ReplayCheck {
        name: "weight-3 part splits 10 + 10".to_string(),
        pass: split_sizes == Some((10, 20)),
        detail: format!("orbit/part sizes {split_sizes:?}"),
    });
    // The two halves are the vertex sets over the two support orbits, and
    // the flip swaps them.
    let orbits = psl_2_5().orbits_on_ksubsets(3, &budget)?;
    let half = |orbit: &Vec<Vec<usize>>| -> Vec<Vertex> {
        orbit
            .iter()
            .map(|support| {
                let mut entries = vec![0u8; 6];
                for &i in support {
                    entries[i] = 1;
                }
                Vertex::new(entries)
            })
            .collect()
    };
    let first = half(&orbits[0]);
    let second = half(&orbits[1]);
    let flip = diagonal_flip(6);
    let flipped: Vec<Vertex> = first
        .iter()
        .map(|v| flip.apply(v).expect("shape"))
        .collect();
    let swapped = flipped.len() == second.len() && flipped.iter().all(|v| second.contains(v));
    checks.push(ReplayCheck {
        name: "flip exchanges the two halves".to_string(),
        pass: swapped,
        detail: format!("|halves| = {} and {}", first.len(), second.len()),
    });
    Ok(ReplayReport {
        id: "twisted-group-orbit-split",
        title: "twisted projective group stops at level 2 on length 6",
        scope: ReplayScope::Full,
        checks,
    })
}

/// At length 8, a projective-type group has order coprime to 5, so the
/// 70 weight-4 vertices cannot form a single orbit and complete
/// transitivity fails.
fn weight_four_orbit_divisibility() -> Result<ReplayReport> {
    let budget = Budget::default();
    let order = pgl_2_7().order_u64()?;
    let mut checks = Vec::new();
    checks.push(ReplayCheck {
        name: "group order".to_string(),
        pass: order == 336 && order % 5 != 0,
        detail: format!("order {order}, order mod 5 = {}", order % 5),
    });
    let weight4 = binomial_u64(8, 4).expect("small");
    checks.push(ReplayCheck {
        name: "orbit size obstruction".to_string(),
        pass: order % weight4 != 0,
        detail: format!("{weight4} weight-4 vertices cannot divide order {order}"),
    });
    // Concrete replay: the twisted analogue on length 8 cannot get past
    // the weight-4 part.
    let psl = psl_2_7();
    let mut gens: Vec<WreathElement> = psl
        .generators()
        .iter()
        .map(|p| WreathElement::from_coord_perm(p.clone(), 2))
        .collect();
    let outer = Permutation::from_cycles(8, &[vec![2, 4, 3, 7, 5, 6]]).expect("valid cycle");
    gens.push(diagonal_flip(8).then(&WreathElement::from_coord_perm(outer, 2)));
    let group = AutSubgroup::new(8, 2, gens)?;
    let code = rep_code(8, 2)?;
    let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
    checks.push(ReplayCheck {
        name: "twisted analogue at length 8".to_string(),
        pass: group.order() == BigUint::from(336u32)
            && !verdict.is_completely_transitive()
            && !verdict.parts[4].is_single_orbit(),
        detail: format!(
            "order {}, level {:?}, weight-4 part single orbit: {}",
            group.order(),
            verdict.level,
            verdict.parts[4].is_single_orbit()
        ),
    });
    Ok(ReplayReport {
        id: "weight-four-orbit-divisibility",
        title: "length-8 projective candidates fail on the weight-4 part",
        scope: ReplayScope::Full,
        checks,
    })
}

/// Completely regular corpus members with 5 <= delta < m have at least
/// m + 1 codewords (via the Fisher bound on the minimum-weight class). A
/// vacuous pass is reported when no member qualifies.
fn fisher_size_bound() -> Result<ReplayReport> {
    let mut checks = Vec::new();
    let mut qualifying = 0u64;
    for (name, code, _) in corpus() {
        let delta = match code.min_distance_opt()? {
            Some(d) => d,
            None => continue,
        };
        if !(5..code.m()).contains(&delta) {
            continue;
        }
        if !s_regularity_level(&code)?.is_completely_regular() {
            continue;
        }
        qualifying += 1;
        checks.push(ReplayCheck {
            name,
            pass: code.len() > code.m(),
            detail: format!("|C| = {} against m + 1 = {}", code.len(), code.m() + 1),
        });
    }
    if qualifying == 0 {
        checks.push(ReplayCheck {
            name: "corpus".to_string(),
            pass: true,
            detail: "no corpus member has 5 <= delta < m; vacuous pass".to_string(),
        });
    }
    Ok(ReplayReport {
        id: "fisher-size-bound",
        title: "completely regular members with 5 <= delta < m have |C| >= m + 1",
        scope: ReplayScope::Full,
        checks,
    })
}

/// The repetition witness family satisfies the full forward statement:
/// hypotheses and conclusions of the classification on lengths 5 to 8.
fn repetition_complete_transitivity() -> Result<ReplayReport> {
    let budget = Budget::default();
    let mut checks = Vec::new();
    for m in 5..=8usize {
        let code = rep_code(m, 2)?;
        let group = rep_transitive_group(m)?;
        let delta = code.min_distance()?;
        let hypotheses = code.len() >= 2 && delta >= 5 && group.is_faithful_on_entries();
        let verdict = neighbour_transitivity_level(&code, &group, &budget)?;
        let factorial: u64 = (1..=m as u64).product();
        let alpha = Vertex::constant(m, 1);
        let beta = Vertex::zero(m);
        let (_, normalized) = normalize_code(&code, &alpha, &beta, 0)?;
        let stabilizer = group.vertex_stabilizer(&Vertex::zero(m), &budget)?;
        let index_two = group.order() == stabilizer.order() * BigUint::from(2u32);
        let conclusions = code.q() == 2
            && verdict.is_completely_transitive()
            && normalized == code
            && group.order() == BigUint::from(factorial)
            && index_two;
        checks.push(ReplayCheck {
            name: format!("m={m}"),
            pass: hypotheses && conclusions,
            detail: format!(
                "delta = {delta}, level {:?}/{}, |X| = {}, zero-stabilizer index 2: {index_two}",
                verdict.level,
                verdict.covering_radius,
                group.order()
            ),
        });
    }
    Ok(ReplayReport {
        id: "repetition-complete-transitivity",
        title: "repetition codes with the flip-twisted symmetric group verify the classification forward",
        scope: ReplayScope::Full,
        checks,
    })
}

/// The affine bound table: admissible (r, n, q) over primes r in
/// {2, 3, 5, 7}, n <= 6, q in {2, 3}.
fn affine_parameter_table() -> Result<ReplayReport> {
    let mut admissible = Vec::new();
    for r in [2u64, 3, 5, 7] {
        for n in 1..=6u32 {
            for q in [2u8, 3] {
                if affine_bound_feasible(r, n, q)? {
                    admissible.push((r, n, q));
                }
            }
        }
    }
    let expected = vec![(2u64, 3u32, 3u8), (2, 4, 2), (2, 5, 2)];
    Ok(ReplayReport {
        id: "affine-parameter-table",
        title: "affine-type parameter table",
        scope: ReplayScope::Arithmetic,
        checks: vec![ReplayCheck {
            name: "admissible (r, n, q)".to_string(),
            pass: admissible == expected,
            detail: format!("computed {admissible:?}"),
        }],
    })
}

/// The projective bound table: admissible (n, r) for q = 2 over prime
/// powers r <= 32, n <= 5, plus the failure of every ternary candidate.
fn projective_parameter_table() -> Result<ReplayReport> {
    let mut admissible = Vec::new();
    for n in 2..=5u32 {
        for r in 2..=32u64 {
            if prime_power(r).is_none() {
                continue;
            }
            if psl_bound_feasible(n, r, 2)? {
                admissible.push((n, r));
            }
        }
    }
    let expected = vec![(2u32, 9u64), (2, 11), (2, 13), (2, 16), (3, 3), (3, 4), (4, 2)];
    let mut checks = vec![ReplayCheck {
        name: "admissible (n, r) at q = 2".to_string(),
        pass: admissible == expected,
        detail: format!("computed {admissible:?}"),
    }];
    let ternary_all_fail = [(2u32, 16u64), (3, 3), (3, 4)]
        .iter()
        .map(|&(n, r)| psl_bound_feasible(n, r, 3).map(|f| !f))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    checks.push(ReplayCheck {
        name: "ternary candidates all fail".to_string(),
        pass: ternary_all_fail,
        detail: "(2,16), (3,3), (3,4) against q = 3".to_string(),
    });
    Ok(ReplayReport {
        id: "projective-parameter-table",
        title: "projective-type parameter table",
        scope: ReplayScope::Arithmetic,
        checks,
    })
}

/// All five supported nonexistence cases close with validating
/// certificates.
fn nonexistence_replay() -> Result<ReplayReport> {
    let mut checks = Vec::new();
    for (m, delta) in crate::nonexist::SUPPORTED_PAIRS {
        let report = nonexistence_certificates(m, delta)?;
        let mut certified = true;
        for branch in &report.branches {
            if let crate::nonexist::BranchOutcome::Certified {
                system,
                certificate,
            } = &branch.outcome
            {
                certified &= certificate.validate(system);
            }
        }
        checks.push(ReplayCheck {
            name: format!("m={m} delta={delta}"),
            pass: report.infeasible() && certified,
            detail: format!(
                "{} branches, all closed: {}, certificates validate: {certified}",
                report.branches.len(),
                report.infeasible()
            ),
        });
    }
    Ok(ReplayReport {
        id: "nonexistence-certificates",
        title: "nonexistence certificates for the five parameter pairs",
        scope: ReplayScope::Full,
        checks,
    })
}
