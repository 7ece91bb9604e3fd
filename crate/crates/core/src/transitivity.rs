//! Neighbour transitivity and complete transitivity of codes under a
//! subgroup of Hamming-graph automorphisms, plus the derived structural
//! checks on stabilizers, entry actions and the orbit-counting bound.
//!
//! A part `C_i` of the distance partition is checked by closing its
//! lexicographically least vertex under the generators and comparing the
//! closure with the part; the full element set of the group is never
//! materialised.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hamming::{sphere, Code, Vertex};
use crate::wreath::AutSubgroup;

/// Orbit status of one part of the distance partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartStatus {
    /// The part is a single orbit of the group.
    SingleOrbit { size: u64 },
    /// The orbit of the seed vertex is a proper subset of the part.
    Split {
        orbit_size: u64,
        part_size: u64,
        seed: Vertex,
        outside_orbit: Vertex,
    },
    /// The orbit of the seed leaves the part, so the group does not even
    /// preserve the partition (equivalently, it moves the code).
    NotInvariant { seed: Vertex, image_outside: Vertex },
}

impl PartStatus {
    pub fn is_single_orbit(&self) -> bool {
        matches!(self, PartStatus::SingleOrbit { .. })
    }
}

/// Outcome of the neighbour-transitivity computation.
#[derive(Debug, Clone)]
pub struct TransitivityVerdict {
    /// Largest `s` with `C_0, ..., C_s` single orbits; `None` when the code
    /// itself is not an orbit.
    pub level: Option<usize>,
    pub covering_radius: usize,
    /// Status of every part, indexed by distance.
    pub parts: Vec<PartStatus>,
}

impl TransitivityVerdict {
    pub fn is_completely_transitive(&self) -> bool {
        self.level == Some(self.covering_radius)
    }

    /// The first part that is not a single orbit, if any.
    pub fn first_failure(&self) -> Option<(usize, &PartStatus)> {
        self.parts
            .iter()
            .enumerate()
            .find(|(_, status)| !status.is_single_orbit())
    }
}

/// Computes the largest `s` such that `C_0, ..., C_s` are single orbits of
/// the group, with a per-part status report.
pub fn neighbour_transitivity_level(
    code: &Code,
    group: &AutSubgroup,
    budget: &Budget,
) -> Result<TransitivityVerdict> {
    if code.m() != group.m() || code.q() != group.q() {
        return Err(Error::domain(format!(
            "code shape ({}, {}) does not match group shape ({}, {})",
            code.m(),
            code.q(),
            group.m(),
            group.q()
        )));
    }
    let partition = code.distance_partition()?;
    let rho = partition.rho();
    let mut parts = Vec::with_capacity(rho + 1);
    for part in 0..=rho {
        let part_size = partition.sizes()[part];
        if part_size > budget.max_orbit {
            return Err(Error::resource(format!(
                "part {part} has {part_size} vertices, over the orbit budget {}",
                budget.max_orbit
            )));
        }
        let seed = partition
            .part_encoded(part)
            .next()
            .expect("parts are non-empty");
        let seed_vertex = Vertex::decode(seed, code.m(), code.q());
        let mut orbit: HashSet<u64> = HashSet::from([seed]);
        let mut queue = vec![seed];
        let mut status = None;
        'closure: while let Some(current) = queue.pop() {
            let vertex = Vertex::decode(current, code.m(), code.q());
            for gen in group.generators() {
                let image = gen.apply(&vertex)?;
                let encoded = image.encode(code.q());
                if partition.distance_of_encoded(encoded) != part {
                    status = Some(PartStatus::NotInvariant {
                        seed: seed_vertex.clone(),
                        image_outside: image,
                    });
                    break 'closure;
                }
                if orbit.insert(encoded) {
                    queue.push(encoded);
                }
            }
        }
        let status = status.unwrap_or_else(|| {
            if orbit.len() as u64 == part_size {
                PartStatus::SingleOrbit { size: part_size }
            } else {
                let outside = partition
                    .part_encoded(part)
                    .find(|encoded| !orbit.contains(encoded))
                    .expect("orbit is a proper subset");
                PartStatus::Split {
                    orbit_size: orbit.len() as u64,
                    part_size,
                    seed: seed_vertex.clone(),
                    outside_orbit: Vertex::decode(outside, code.m(), code.q()),
                }
            }
        });
        parts.push(status);
    }
    let level = parts
        .iter()
        .take_while(|status| status.is_single_orbit())
        .count()
        .checked_sub(1);
    Ok(TransitivityVerdict {
        level,
        covering_radius: rho,
        parts,
    })
}

/// True when every part of the distance partition is a single orbit.
pub fn is_completely_transitive(
    code: &Code,
    group: &AutSubgroup,
    budget: &Budget,
) -> Result<bool> {
    Ok(neighbour_transitivity_level(code, group, budget)?.is_completely_transitive())
}

/// One stabilizer check: for a codeword and a radius, whether the codeword
/// stabilizer is transitive on the sphere and acts homogeneously on the
/// entries.
#[derive(Debug, Clone)]
pub struct StabilizerCheck {
    pub codeword: Vertex,
    pub radius: usize,
    pub sphere_transitive: bool,
    pub entries_homogeneous: bool,
}

impl StabilizerCheck {
    pub fn pass(&self) -> bool {
        self.sphere_transitive && self.entries_homogeneous
    }
}

/// Report of the codeword-stabilizer checks up to a given level.
#[derive(Debug, Clone)]
pub struct StabilizerReport {
    /// Largest radius checked: `min(s, (delta - 1) / 2)`.
    pub max_radius: usize,
    pub checks: Vec<StabilizerCheck>,
}

impl StabilizerReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(StabilizerCheck::pass)
    }
}

/// For every codeword `alpha` and radius `i <= min(s, (delta-1)/2)`,
/// verifies that the stabilizer of `alpha` is transitive on the vertices
/// at distance `i` from `alpha` and that its entry action is
/// i-homogeneous.
pub fn check_stabilizer_homogeneity(
    code: &Code,
    group: &AutSubgroup,
    s: usize,
    budget: &Budget,
) -> Result<StabilizerReport> {
    let delta = code.min_distance()?;
    let max_radius = s.min((delta - 1) / 2);
    let mut checks = Vec::new();
    for alpha in code.words() {
        let stabilizer = group.vertex_stabilizer(alpha, budget)?;
        for radius in 0..=max_radius {
            let shell = sphere(alpha, radius, code.q(), budget)?;
            let orbit = stabilizer.vertex_orbit(&shell[0], budget)?;
            let sphere_transitive = orbit.len() == shell.len()
                && orbit.iter().all(|vertex| shell.contains(vertex));
            let entries_homogeneous = stabilizer
                .entry_group()
                .is_k_homogeneous(radius, budget)?;
            checks.push(StabilizerCheck {
                codeword: alpha.clone(),
                radius,
                sphere_transitive,
                entries_homogeneous,
            });
        }
    }
    Ok(StabilizerReport { max_radius, checks })
}

/// True when the setwise stabilizer of the given entries acts transitively
/// on the code.
pub fn entry_stabilizer_transitive_on_code(
    code: &Code,
    group: &AutSubgroup,
    entries: &[usize],
    budget: &Budget,
) -> Result<bool> {
    let stabilizer = group.entry_setwise_stabilizer(entries, budget)?;
    let orbit = stabilizer.vertex_orbit(&code.words()[0], budget)?;
    Ok(orbit.len() == code.len() && orbit.iter().all(|vertex| code.contains(vertex)))
}

/// The orbit-counting bound for a complete-transitivity candidate, as an
/// exact integer comparison, with the alphabet refinement for groups
/// faithful on entries.
#[derive(Debug, Clone)]
pub struct CountingBound {
    /// Whether `q^m <= |X| * (m + 1)`.
    pub holds: bool,
    /// For groups faithful on entries with `m >= 5`: whether `q <= m - 2`.
    pub faithful_refinement: Option<bool>,
}

/// Raw form of the counting bound: `q^m / (m+1) <= order`.
pub fn counting_bound_raw(m: usize, q: u8, order: &BigUint) -> bool {
    let lhs = BigUint::from(q).pow(m as u32);
    let rhs = order * BigUint::from(m as u64 + 1);
    lhs <= rhs
}

/// Evaluates the counting bound for a code and group pair.
pub fn counting_bound(code: &Code, group: &AutSubgroup) -> CountingBound {
    let holds = counting_bound_raw(code.m(), code.q(), &group.order());
    let faithful_refinement = if group.is_faithful_on_entries() && code.m() >= 5 {
        Some((code.q() as usize) <= code.m() - 2)
    } else {
        None
    };
    CountingBound {
        holds,
        faithful_refinement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{rep_code, rep_transitive_group, twisted_pgl25};
    use crate::group::PermGroup;
    use crate::wreath::WreathElement;

    #[test]
    fn repetition_code_is_completely_transitive() {
        let budget = Budget::default();
        let code = rep_code(6, 2).unwrap();
        let group = rep_transitive_group(6).unwrap();
        let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
        assert_eq!(verdict.level, Some(3));
        assert_eq!(verdict.covering_radius, 3);
        assert!(verdict.is_completely_transitive());
        assert!(is_completely_transitive(&code, &group, &budget).unwrap());
    }

    #[test]
    fn coordinate_group_fixes_the_constant_words() {
        let budget = Budget::default();
        let code = rep_code(6, 2).unwrap();
        let group = AutSubgroup::from_coord_group(&PermGroup::symmetric(6), 2);
        let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
        // The code splits into the two fixed constant words.
        assert_eq!(verdict.level, None);
        assert!(matches!(
            verdict.parts[0],
            PartStatus::Split {
                orbit_size: 1,
                part_size: 2,
                ..
            }
        ));
    }

    #[test]
    fn twisted_group_splits_the_weight_three_part() {
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
                seed,
                outside_orbit,
            } => {
                assert_eq!(*orbit_size, 10);
                assert_eq!(*part_size, 20);
                assert_eq!(seed.weight(), 3);
                assert_eq!(outside_orbit.weight(), 3);
            }
            other => panic!("expected a split, got {other:?}"),
        }
    }

    #[test]
    fn trivial_group_fails_on_multi_word_codes() {
        let budget = Budget::default();
        let code = rep_code(5, 2).unwrap();
        let group = AutSubgroup::trivial(5, 2);
        assert!(!is_completely_transitive(&code, &group, &budget).unwrap());
    }

    #[test]
    fn non_stabilizing_group_is_flagged() {
        let budget = Budget::default();
        // The swap of the first two coordinates moves the seed 010 to 100,
        // which is at distance 2 from this code.
        let code = Code::from_strs(3, 2, &["010", "011"]).unwrap();
        let group = AutSubgroup::new(
            3,
            2,
            vec![WreathElement::from_coord_perm(
                crate::perm::Permutation::transposition(3, 0, 1).unwrap(),
                2,
            )],
        )
        .unwrap();
        let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
        assert!(matches!(verdict.parts[0], PartStatus::NotInvariant { .. }));
        assert_eq!(verdict.level, None);
    }

    #[test]
    fn stabilizer_homogeneity_on_the_repetition_witness() {
        let budget = Budget::default();
        let code = rep_code(6, 2).unwrap();
        let group = rep_transitive_group(6).unwrap();
        let report = check_stabilizer_homogeneity(&code, &group, 2, &budget).unwrap();
        assert_eq!(report.max_radius, 2);
        assert!(report.all_pass());
        // Two codewords, radii 0..=2.
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn entry_stabilizer_acts_transitively_on_the_code() {
        let budget = Budget::default();
        let code = rep_code(6, 2).unwrap();
        let group = rep_transitive_group(6).unwrap();
        assert!(entry_stabilizer_transitive_on_code(&code, &group, &[0], &budget).unwrap());
        assert!(entry_stabilizer_transitive_on_code(&code, &group, &[], &budget).unwrap());
        assert!(entry_stabilizer_transitive_on_code(&code, &group, &[0, 1], &budget).unwrap());
    }

    #[test]
    fn counting_bound_examples() {
        // m = 6, q = 2, order 720: 64/7 <= 720.
        assert!(counting_bound_raw(6, 2, &BigUint::from(720u32)));
        // m = 28, q = 2, order 1512: 2^28 / 29 > 1512.
        assert!(!counting_bound_raw(28, 2, &BigUint::from(1512u32)));
        // Boundary: q = m - 1 at m = 5 fails the refinement.
        let code = rep_code(5, 4).unwrap();
        let group = AutSubgroup::from_coord_group(&PermGroup::symmetric(5), 4);
        let bound = counting_bound(&code, &group);
        assert_eq!(bound.faithful_refinement, Some(false));
        let code = rep_code(6, 2).unwrap();
        let group = rep_transitive_group(6).unwrap();
        let bound = counting_bound(&code, &group);
        assert!(bound.holds);
        assert_eq!(bound.faithful_refinement, Some(true));
    }

    #[test]
    fn level_is_bounded_by_covering_radius() {
        let budget = Budget::default();
        for m in 4..=7 {
            let code = rep_code(m, 2).unwrap();
            let group = rep_transitive_group(m).unwrap();
            let verdict = neighbour_transitivity_level(&code, &group, &budget).unwrap();
            assert!(verdict.level.unwrap() <= verdict.covering_radius);
        }
    }

    #[test]
    fn complete_transitivity_implies_complete_regularity() {
        let budget = Budget::default();
        for m in 4..=8 {
            let code = rep_code(m, 2).unwrap();
            let group = rep_transitive_group(m).unwrap();
            if is_completely_transitive(&code, &group, &budget).unwrap() {
                assert!(crate::regularity::is_completely_regular(&code).unwrap());
            }
        }
    }
}
