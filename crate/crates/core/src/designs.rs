//! Combinatorial designs: t-design verification, block intersection
//! numbers, complements, orbit designs and the arithmetic of design
//! parameters.
//!
//! Blocks are stored as sorted point lists and a design is a multiset of
//! blocks of one size; verification never assumes simplicity. All
//! verdicts come from exact integer counting over every t-subset — there
//! is no sampling.
//!
//! Design files are line oriented: an `m k` header, then one block per
//! line as sorted 1-based point lists.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::{binomial_u64, combinations, PermGroup};
use crate::hamming::{vertices_of_weight, Vertex};

/// A multiset of equal-size blocks over the points `{0, ..., m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    points: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(points: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::domain("a design needs at least one block".to_string()));
        }
        let mut blocks = blocks;
        let k = blocks[0].len();
        for block in blocks.iter_mut() {
            block.sort_unstable();
            if block.len() != k {
                return Err(Error::domain("blocks must share one size".to_string()));
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::domain("a block must not repeat a point".to_string()));
            }
            if block.iter().any(|&p| p >= points) {
                return Err(Error::domain(format!(
                    "block point out of range for {points} points"
                )));
            }
        }
        blocks.sort();
        Ok(Design { points, blocks })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in sorted order (duplicates kept).
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Returns the constant number of blocks through a t-subset, or `None`
    /// when the count varies.
    pub fn t_design_lambda(&self, t: usize, budget: &Budget) -> Result<Option<u64>> {
        let k = self.block_size();
        if t > k {
            return Err(Error::domain(format!(
                "t = {t} exceeds the block size {k}"
            )));
        }
        binomial_u64(self.points, t)
            .filter(|&c| c <= budget.max_subsets)
            .ok_or_else(|| {
                Error::resource(format!(
                    "C({}, {t}) exceeds the subset budget",
                    self.points
                ))
            })?;
        let masks: Vec<u64> = self.blocks.iter().map(|b| mask_of(b)).collect();
        let mut lambda: Option<u64> = None;
        for subset in combinations(self.points, t) {
            let sub_mask = mask_of(&subset);
            let count = masks.iter().filter(|&&m| m & sub_mask == sub_mask).count() as u64;
            match lambda {
                None => lambda = Some(count),
                Some(expected) if expected != count => return Ok(None),
                Some(_) => {}
            }
        }
        Ok(lambda)
    }

    /// The set of realized pairwise intersection sizes among distinct
    /// blocks. Needs at least two blocks.
    pub fn block_intersection_numbers(&self) -> Result<BTreeSet<usize>> {
        if self.blocks.len() < 2 {
            return Err(Error::precondition(
                "intersection numbers need at least two blocks".to_string(),
            ));
        }
        let masks: Vec<u64> = self.blocks.iter().map(|b| mask_of(b)).collect();
        let mut sizes = BTreeSet::new();
        for (i, a) in masks.iter().enumerate() {
            for b in &masks[i + 1..] {
                sizes.insert((a & b).count_ones() as usize);
            }
        }
        Ok(sizes)
    }

    /// The design whose blocks are the pointwise complements.
    pub fn complement(&self) -> Design {
        let blocks = self
            .blocks
            .iter()
            .map(|block| {
                (0..self.points)
                    .filter(|p| !block.contains(p))
                    .collect::<Vec<_>>()
            })
            .collect();
        Design::new(self.points, blocks).expect("complement blocks are uniform")
    }

    /// Whether the claimed Fisher bound `b >= m` holds; requires a
    /// verified 2-design with block size below the point count.
    pub fn fisher_holds(&self, budget: &Budget) -> Result<bool> {
        if self.block_size() >= self.points {
            return Err(Error::precondition(
                "the Fisher bound needs blocks smaller than the point set".to_string(),
            ));
        }
        if self.t_design_lambda(2, budget)?.is_none() {
            return Err(Error::precondition(
                "the Fisher bound needs a verified 2-design".to_string(),
            ));
        }
        Ok(self.block_count() >= self.points)
    }

    /// The full automorphism group of the design: all point permutations
    /// preserving the block multiset, computed from Schreier generators on
    /// the orbit of the block set inside the symmetric group.
    pub fn automorphism_group(&self, budget: &Budget) -> Result<PermGroup> {
        let symmetric = PermGroup::symmetric(self.points);
        let apply = |g: &crate::perm::Permutation, blocks: &Vec<Vec<usize>>| {
            let mut image: Vec<Vec<usize>> = blocks
                .iter()
                .map(|block| {
                    let mut mapped: Vec<usize> = block.iter().map(|&p| g.apply(p)).collect();
                    mapped.sort_unstable();
                    mapped
                })
                .collect();
            image.sort();
            image
        };
        let (_, gens) = crate::group::stabilizer_generators(
            symmetric.generators(),
            self.blocks.clone(),
            crate::perm::Permutation::identity(self.points),
            apply,
            budget.max_subsets,
        )?;
        PermGroup::from_generators(self.points, gens)
    }

    /// Renders the design file format (1-based points).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.points, self.block_size()).unwrap();
        for block in &self.blocks {
            let line = block
                .iter()
                .map(|p| (p + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "{line}").unwrap();
        }
        out
    }

    /// Parses the design file format.
    pub fn parse(text: &str) -> Result<Design> {
        let mut header: Option<(usize, usize)> = None;
        let mut blocks = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = crate::group::strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let mut parts = line.split_whitespace();
                    let m = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `m k` header"))?;
                    let k = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `m k` header"))?;
                    header = Some((m, k));
                }
                Some((_, k)) => {
                    let block: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<usize>()
                                .ok()
                                .and_then(|p| p.checked_sub(1))
                                .ok_or_else(|| Error::parse(line_no, format!("bad point {t:?}")))
                        })
                        .collect::<Result<_>>()?;
                    if block.len() != k {
                        return Err(Error::parse(
                            line_no,
                            format!("block has {} points, expected {k}", block.len()),
                        ));
                    }
                    blocks.push(block);
                }
            }
        }
        let (m, _) = header.ok_or_else(|| Error::parse(1, "missing `m k` header"))?;
        Design::new(m, blocks)
    }
}

fn mask_of(points: &[usize]) -> u64 {
    points.iter().fold(0u64, |mask, &p| mask | (1 << p))
}

/// Orbit of a block under a permutation group, as a design.
pub fn orbit_design(group: &PermGroup, block: &[usize], budget: &Budget) -> Result<Design> {
    let mut seed = block.to_vec();
    seed.sort_unstable();
    let (orbit, _) = crate::group::orbit_with_transversal(
        group.generators(),
        seed,
        crate::perm::Permutation::identity(group.degree()),
        |g: &crate::perm::Permutation, s: &Vec<usize>| {
            let mut image: Vec<usize> = s.iter().map(|&p| g.apply(p)).collect();
            image.sort_unstable();
            image
        },
        budget.max_subsets,
    )?;
    Design::new(group.degree(), orbit)
}

/// Checks a set of weight-k vertices as a q-ary t-design: every weight-t
/// vertex must be covered by the same number of members, where `beta`
/// covers `nu` when they agree on the support of `nu`. Returns that count,
/// or `None` when it varies. For `q = 2` this is the ordinary t-design
/// condition on supports.
pub fn qary_design_lambda(
    members: &[Vertex],
    q: u8,
    t: usize,
    budget: &Budget,
) -> Result<Option<u64>> {
    if members.is_empty() {
        return Err(Error::domain("empty vertex set".to_string()));
    }
    let m = members[0].len();
    let k = members[0].weight();
    for member in members {
        if member.len() != m || member.weight() != k {
            return Err(Error::domain(
                "members must share length and weight".to_string(),
            ));
        }
    }
    if t > k {
        return Err(Error::domain(format!("t = {t} exceeds the weight {k}")));
    }
    let mut lambda: Option<u64> = None;
    for nu in vertices_of_weight(m, q, t, budget)? {
        let support = nu.support();
        let count = members
            .iter()
            .filter(|beta| support.iter().all(|&i| beta.entry(i) == nu.entry(i)))
            .count() as u64;
        match lambda {
            None => lambda = Some(count),
            Some(expected) if expected != count => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(lambda)
}

/// Replication number and block count of a 2-(m, k, lambda) design, as
/// exact rationals with integrality verdicts.
#[derive(Debug, Clone)]
pub struct TwoDesignParams {
    pub replication: BigRational,
    pub block_count: BigRational,
    pub replication_integral: bool,
    pub block_count_integral: bool,
}

pub fn two_design_params(m: u64, k: u64, lambda: u64) -> TwoDesignParams {
    let rat = |n: u64| BigRational::from_integer(BigInt::from(n));
    let replication = rat(lambda) * rat(m - 1) / rat(k - 1);
    let block_count = rat(lambda) * rat(m) * rat(m - 1) / (rat(k) * rat(k - 1));
    TwoDesignParams {
        replication_integral: replication.is_integer(),
        block_count_integral: block_count.is_integer(),
        replication,
        block_count,
    }
}

/// The index parameters `lambda_i = lambda * C(m-i, t-i) / C(k-i, t-i)`
/// of a t-(m, k, lambda) design, for `i = 0, ..., t`.
pub fn index_parameters(m: u64, k: u64, t: u64, lambda: u64) -> Vec<BigRational> {
    (0..=t)
        .map(|i| {
            let num = binomial_big(m - i, t - i);
            let den = binomial_big(k - i, t - i);
            BigRational::from_integer(BigInt::from(lambda)) * BigRational::new(num, den)
        })
        .collect()
}

fn binomial_big(n: u64, k: u64) -> BigInt {
    let mut result = BigInt::one();
    if k > n {
        return BigInt::zero();
    }
    for i in 0..k.min(n - k) {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// True when all index parameters of a t-(m, k, lambda) design are
/// integers.
pub fn index_parameters_integral(m: u64, k: u64, t: u64, lambda: u64) -> bool {
    index_parameters(m, k, t, lambda)
        .iter()
        .all(BigRational::is_integer)
}

/// The smallest index `lambda >= 1` making every `lambda_i` integral,
/// together with the corresponding block count `lambda_0`.
pub fn minimal_integral_index(m: u64, k: u64, t: u64) -> (u64, u64) {
    let mut lcm = BigInt::one();
    for i in 0..=t {
        let ratio = BigRational::new(binomial_big(m - i, t - i), binomial_big(k - i, t - i));
        lcm = lcm.lcm(ratio.denom());
    }
    let lambda = lcm.to_u64().expect("small denominators");
    let block_count = index_parameters(m, k, t, lambda)[0]
        .to_integer()
        .to_u64()
        .expect("small parameters");
    (lambda, block_count)
}

/// Indices admissible for the weight-k class of a code whose pairwise
/// block intersections are at most `t`: every `lambda_i` integral and the
/// disjoint-remainder bound `lambda * (k - t) <= m - t`.
pub fn admissible_bounded_indices(m: u64, k: u64, t: u64) -> Vec<u64> {
    if k <= t {
        return Vec::new();
    }
    let max_lambda = (m - t) / (k - t);
    (1..=max_lambda)
        .filter(|&lambda| index_parameters_integral(m, k, t, lambda))
        .collect()
}

/// Realized block intersection sizes of a 2-(m, k, lambda) design whose
/// blocks pairwise meet in at most two points, by exact counting: through
/// a pair inside a block there are `lambda - 1` other blocks; a block and
/// one of its points meet `r - 1 - (k-1)(lambda-1)` blocks in exactly that
/// point; the rest are disjoint from it.
pub fn pair_intersection_profile(m: u64, k: u64, lambda: u64) -> Result<BTreeSet<u64>> {
    let params = two_design_params(m, k, lambda);
    if !params.replication_integral || !params.block_count_integral {
        return Err(Error::Inconsistent(format!(
            "2-({m}, {k}, {lambda}) has non-integral parameters"
        )));
    }
    let r = params.replication.to_integer();
    let b = params.block_count.to_integer();
    let lam = BigInt::from(lambda);
    let k_big = BigInt::from(k);
    let one = BigInt::one();
    let meeting_in_two: BigInt = &lam - &one;
    let meeting_in_one_per_point: BigInt = &r - &one - (&k_big - &one) * (&lam - &one);
    let pairs_in_block: BigInt = &k_big * (&k_big - &one) / BigInt::from(2);
    let disjoint: BigInt =
        &b - &one - &pairs_in_block * (&lam - &one) - &k_big * &meeting_in_one_per_point;
    if meeting_in_one_per_point.is_negative() || disjoint.is_negative() {
        return Err(Error::Inconsistent(format!(
            "2-({m}, {k}, {lambda}) cannot have intersections bounded by two"
        )));
    }
    let mut profile = BTreeSet::new();
    if meeting_in_two.is_positive() {
        profile.insert(2);
    }
    if meeting_in_one_per_point.is_positive() {
        profile.insert(1);
    }
    if disjoint.is_positive() {
        profile.insert(0);
    }
    Ok(profile)
}
