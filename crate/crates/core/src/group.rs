//! Finite permutation groups given by generators.
//!
//! A [`PermGroup`] lazily builds a base-and-strong-generating-set chain
//! (Schreier–Sims) the first time an order or membership query needs it.
//! The chain gives exact orders, membership by sifting, deterministic
//! element enumeration, and point/setwise stabilizers. Orbits on points,
//! k-subsets and ordered k-tuples are plain closures under the generators,
//! guarded by [`Budget`] limits.
//!
//! Group files are line oriented: a `degree n` header, then one permutation
//! per line in cycle or image notation over 1-based points; `#` starts a
//! comment.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Abstraction over group elements acted through closures; lets orbit and
/// Schreier-generator machinery work for both plain permutations and
/// Hamming-graph automorphisms.
pub(crate) trait GroupElem: Clone {
    /// Right-action product: apply `self` first, then `other`.
    fn prod(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_id(&self) -> bool;
}

impl GroupElem for Permutation {
    fn prod(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn is_id(&self) -> bool {
        self.is_identity()
    }
}

/// Orbit of `seed` in breadth-first order together with a transversal:
/// `transversal[p]` maps `seed` to `p`.
pub(crate) fn orbit_with_transversal<T, E, A>(
    gens: &[E],
    seed: T,
    identity: E,
    apply: A,
    max_orbit: u64,
) -> Result<(Vec<T>, HashMap<T, E>)>
where
    T: Eq + Hash + Clone,
    E: GroupElem,
    A: Fn(&E, &T) -> T,
{
    let mut order = vec![seed.clone()];
    let mut transversal = HashMap::new();
    transversal.insert(seed.clone(), identity);
    let mut queue = VecDeque::new();
    queue.push_back(seed);
    while let Some(point) = queue.pop_front() {
        let rep = transversal[&point].clone();
        for gen in gens {
            let image = apply(gen, &point);
            if let Entry::Vacant(slot) = transversal.entry(image.clone()) {
                if order.len() as u64 >= max_orbit {
                    return Err(Error::resource(format!(
                        "orbit exceeds {max_orbit} points"
                    )));
                }
                slot.insert(rep.prod(gen));
                order.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok((order, transversal))
}

/// Schreier generators for the stabilizer of `seed` in the group generated
/// by `gens`, acting via `apply`. Identity and duplicate generators are
/// dropped.
pub(crate) fn stabilizer_generators<T, E, A>(
    gens: &[E],
    seed: T,
    identity: E,
    apply: A,
    max_orbit: u64,
) -> Result<(Vec<T>, Vec<E>)>
where
    T: Eq + Hash + Clone,
    E: GroupElem + PartialEq,
    A: Fn(&E, &T) -> T,
{
    let (orbit, transversal) = orbit_with_transversal(gens, seed, identity, &apply, max_orbit)?;
    let mut stab_gens: Vec<E> = Vec::new();
    for point in &orbit {
        let rep = &transversal[point];
        for gen in gens {
            let image = apply(gen, point);
            let schreier = rep.prod(gen).prod(&transversal[&image].inv());
            if !schreier.is_id() && !stab_gens.contains(&schreier) {
                stab_gens.push(schreier);
            }
        }
    }
    Ok((orbit, stab_gens))
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// Orbit point -> representative u with base^u = point.
    transversal: HashMap<usize, Permutation>,
    /// Orbit in breadth-first discovery order.
    orbit: Vec<usize>,
}

/// Base and strong generating set; levels are nested stabilizers.
#[derive(Debug, Clone)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation], first_base: Option<usize>) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if let Some(base) = first_base {
            chain.push_level(base);
        }
        for gen in gens {
            if !gen.is_identity() {
                if chain.levels.is_empty() {
                    let base = gen.min_moved_point().expect("non-identity moves a point");
                    chain.push_level(base);
                }
                chain.levels[0].gens.push(gen.clone());
            }
        }
        // Fixpoint loop: refresh every orbit, look for one Schreier
        // generator that fails to sift, adopt its residue as a strong
        // generator, and start over. Each adoption strictly enlarges the
        // subgroup at the failing level, so the loop terminates; the final
        // round verifies the whole chain against fully refreshed orbits.
        loop {
            for i in (0..chain.levels.len()).rev() {
                chain.refresh_level(i);
            }
            match chain.find_failing_schreier_generator() {
                None => break,
                Some((depth, residue)) => chain.adopt_generator(depth, residue),
            }
        }
        chain
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            gens: Vec::new(),
            transversal: HashMap::from([(base, Permutation::identity(self.degree))]),
            orbit: vec![base],
        });
    }

    fn adopt_generator(&mut self, level: usize, gen: Permutation) {
        if level == self.levels.len() {
            let base = gen.min_moved_point().expect("non-identity moves a point");
            self.push_level(base);
        }
        self.levels[level].gens.push(gen);
    }

    /// Generators of the level'th stabilizer subgroup: everything stored at
    /// this level or deeper.
    fn level_generators(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn refresh_level(&mut self, level: usize) {
        let gens = self.level_generators(level);
        let base = self.levels[level].base;
        let (orbit, transversal) = orbit_with_transversal(
            &gens,
            base,
            Permutation::identity(self.degree),
            |g: &Permutation, &p: &usize| g.apply(p),
            u64::MAX,
        )
        .expect("point orbit is bounded by the degree");
        self.levels[level].orbit = orbit;
        self.levels[level].transversal = transversal;
    }

    fn find_failing_schreier_generator(&self) -> Option<(usize, Permutation)> {
        for level in 0..self.levels.len() {
            let gens = self.level_generators(level);
            for point in &self.levels[level].orbit {
                let rep = &self.levels[level].transversal[point];
                for gen in &gens {
                    let image = gen.apply(*point);
                    let schreier = rep
                        .then(gen)
                        .then(&self.levels[level].transversal[&image].inverse());
                    let (residue, depth) = self.sift_from(level + 1, schreier);
                    if !residue.is_identity() {
                        return Some((depth, residue));
                    }
                }
            }
        }
        None
    }

    /// Strips `x` through levels `from..`; returns the residue and the
    /// level at which stripping stopped.
    fn sift_from(&self, from: usize, x: Permutation) -> (Permutation, usize) {
        let mut residue = x;
        for (offset, level) in self.levels[from..].iter().enumerate() {
            let image = residue.apply(level.base);
            match level.transversal.get(&image) {
                None => return (residue, from + offset),
                Some(u) => residue = residue.then(&u.inverse()),
            }
        }
        (residue, self.levels.len())
    }

    fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    fn contains(&self, x: &Permutation) -> bool {
        let (residue, _) = self.sift_from(0, x.clone());
        residue.is_identity()
    }

    /// All elements, as products of transversal representatives.
    fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for point in &level.orbit {
                let u = &level.transversal[point];
                for w in &acc {
                    next.push(w.then(u));
                }
            }
            acc = next;
        }
        acc
    }
}

/// A permutation group on `{0, ..., degree-1}` given by generators.
///
/// The stabilizer chain is built once on first use and shared; all queries
/// afterwards are read-only, so values can be used freely across threads.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    /// Group generated by `generators`; identity generators are dropped.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for gen in &generators {
            if gen.degree() != degree {
                return Err(Error::domain(format!(
                    "generator degree {} differs from group degree {degree}",
                    gen.degree()
                )));
            }
        }
        Ok(PermGroup {
            degree,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
            chain: OnceLock::new(),
        })
    }

    /// Symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::transposition(degree, 0, 1).unwrap());
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
        }
        PermGroup::from_generators(degree, gens).unwrap()
    }

    /// Alternating group on `degree` points (generated by 3-cycles).
    pub fn alternating(degree: usize) -> Self {
        let mut gens = Vec::new();
        for i in 2..degree {
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1, i]]).unwrap());
        }
        PermGroup::from_generators(degree, gens).unwrap()
    }

    /// Cyclic group generated by the full cycle `(1 2 ... degree)`.
    pub fn cyclic(degree: usize) -> Self {
        if degree < 2 {
            return PermGroup::trivial(degree);
        }
        let cycle: Vec<usize> = (0..degree).collect();
        PermGroup::from_generators(
            degree,
            vec![Permutation::from_cycles(degree, &[cycle]).unwrap()],
        )
        .unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, None))
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Group order as `u64`; errors if it does not fit.
    pub fn order_u64(&self) -> Result<u64> {
        self.order()
            .to_u64()
            .ok_or_else(|| Error::resource("group order exceeds u64".to_string()))
    }

    /// Membership test by sifting through the stabilizer chain.
    pub fn contains(&self, perm: &Permutation) -> Result<bool> {
        if perm.degree() != self.degree {
            return Err(Error::domain(format!(
                "permutation degree {} differs from group degree {}",
                perm.degree(),
                self.degree
            )));
        }
        Ok(self.chain().contains(perm))
    }

    /// Orbit of a point under the group.
    ///
    /// ```
    /// # use crcodes::{PermGroup, Permutation};
    /// let g = PermGroup::from_generators(4, vec![Permutation::parse("(1 2 3)", 4)?])?;
    /// assert_eq!(g.orbit(0)?.len(), 3);
    /// assert_eq!(g.orbit(3)?.len(), 1);
    /// # Ok::<(), crcodes::Error>(())
    /// ```
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>> {
        if point >= self.degree {
            return Err(Error::domain(format!(
                "point {point} out of range for degree {}",
                self.degree
            )));
        }
        let (orbit, _) = orbit_with_transversal(
            &self.generators,
            point,
            Permutation::identity(self.degree),
            |g: &Permutation, &p: &usize| g.apply(p),
            u64::MAX,
        )?;
        Ok(orbit.into_iter().collect())
    }

    /// Orbits on points, sorted by smallest member.
    pub fn point_orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let orbit = self.orbit(p).expect("point in range");
            for &q in &orbit {
                seen[q] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).expect("point in range").len() == self.degree
    }

    /// Stabilizer of a point, as a group in its own right.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::domain(format!(
                "point {point} out of range for degree {}",
                self.degree
            )));
        }
        let chain = StabChain::build(self.degree, &self.generators, Some(point));
        let gens = if chain.levels.is_empty() {
            Vec::new()
        } else {
            chain.level_generators(1)
        };
        PermGroup::from_generators(self.degree, gens)
    }

    /// Setwise stabilizer `{x : subset^x = subset}`, computed from Schreier
    /// generators on the orbit of the subset.
    pub fn setwise_stabilizer(&self, subset: &BTreeSet<usize>, budget: &Budget) -> Result<PermGroup> {
        for &p in subset {
            if p >= self.degree {
                return Err(Error::domain(format!(
                    "subset point {p} out of range for degree {}",
                    self.degree
                )));
            }
        }
        let seed: Vec<usize> = subset.iter().copied().collect();
        let apply = |g: &Permutation, s: &Vec<usize>| {
            let mut image: Vec<usize> = s.iter().map(|&p| g.apply(p)).collect();
            image.sort_unstable();
            image
        };
        let (_, gens) = stabilizer_generators(
            &self.generators,
            seed,
            Permutation::identity(self.degree),
            apply,
            budget.max_subsets,
        )?;
        PermGroup::from_generators(self.degree, gens)
    }

    /// Orbits on k-subsets; each orbit lists its subsets in lexicographic
    /// order, and orbits are sorted by their first subset.
    pub fn orbits_on_ksubsets(&self, k: usize, budget: &Budget) -> Result<Vec<Vec<Vec<usize>>>> {
        if k > self.degree {
            return Err(Error::domain(format!(
                "subset size {k} exceeds degree {}",
                self.degree
            )));
        }
        let total = binomial_u64(self.degree, k)
            .filter(|&t| t <= budget.max_subsets)
            .ok_or_else(|| {
                Error::resource(format!(
                    "C({}, {k}) exceeds the subset budget {}",
                    self.degree, budget.max_subsets
                ))
            })?;
        let mut orbits = Vec::new();
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(total as usize);
        for subset in combinations(self.degree, k) {
            if seen.contains_key(&subset) {
                continue;
            }
            let orbit_id = orbits.len();
            let (orbit, _) = orbit_with_transversal(
                &self.generators,
                subset,
                Permutation::identity(self.degree),
                |g: &Permutation, s: &Vec<usize>| {
                    let mut image: Vec<usize> = s.iter().map(|&p| g.apply(p)).collect();
                    image.sort_unstable();
                    image
                },
                budget.max_subsets,
            )?;
            for member in &orbit {
                seen.insert(member.clone(), orbit_id);
            }
            let mut sorted = orbit;
            sorted.sort();
            orbits.push(sorted);
        }
        Ok(orbits)
    }

    /// True when the group is transitive on k-subsets.
    pub fn is_k_homogeneous(&self, k: usize, budget: &Budget) -> Result<bool> {
        Ok(self.orbits_on_ksubsets(k, budget)?.len() <= 1)
    }

    /// True when the group is transitive on ordered k-tuples of distinct
    /// points.
    pub fn is_k_transitive(&self, k: usize, budget: &Budget) -> Result<bool> {
        if k > self.degree {
            return Err(Error::domain(format!(
                "tuple size {k} exceeds degree {}",
                self.degree
            )));
        }
        if k == 0 {
            return Ok(true);
        }
        let target = falling_factorial_u64(self.degree, k)
            .filter(|&t| t <= budget.max_tuples)
            .ok_or_else(|| {
                Error::resource(format!(
                    "{}-tuple count exceeds the tuple budget {}",
                    k, budget.max_tuples
                ))
            })?;
        let seed: Vec<usize> = (0..k).collect();
        let (orbit, _) = orbit_with_transversal(
            &self.generators,
            seed,
            Permutation::identity(self.degree),
            |g: &Permutation, t: &Vec<usize>| t.iter().map(|&p| g.apply(p)).collect(),
            budget.max_tuples,
        )?;
        Ok(orbit.len() as u64 == target)
    }

    /// Full element listing in deterministic order; guarded by
    /// `budget.max_elements`.
    pub fn elements(&self, budget: &Budget) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(budget.max_elements) {
            return Err(Error::resource(format!(
                "group order {order} exceeds the element budget {}",
                budget.max_elements
            )));
        }
        Ok(self.chain().elements())
    }

    /// Structural equality as abstract subgroups of the same symmetric
    /// group: equal orders and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::domain(
                "cannot compare groups of different degrees".to_string(),
            ));
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        for gen in &other.generators {
            if !self.contains(gen)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renders the group file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "degree {}", self.degree).unwrap();
        if self.generators.is_empty() {
            writeln!(out, "()").unwrap();
        }
        for gen in &self.generators {
            writeln!(out, "{}", gen.to_cycle_string()).unwrap();
        }
        out
    }

    /// Parses the group file format; see the module docs.
    pub fn parse(text: &str) -> Result<PermGroup> {
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match degree {
                None => {
                    let rest = line.strip_prefix("degree").ok_or_else(|| {
                        Error::parse(line_no, "expected `degree n` header".to_string())
                    })?;
                    let n: usize = rest.trim().parse().map_err(|_| {
                        Error::parse(line_no, format!("bad degree {:?}", rest.trim()))
                    })?;
                    degree = Some(n);
                }
                Some(n) => {
                    let perm = Permutation::parse(line, n)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    gens.push(perm);
                }
            }
        }
        let degree =
            degree.ok_or_else(|| Error::parse(1, "missing `degree n` header".to_string()))?;
        PermGroup::from_generators(degree, gens)
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => line[..pos].trim(),
        None => line.trim(),
    }
}

/// C(n, k) if it fits in u64.
pub(crate) fn binomial_u64(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 0..k {
        result = result
            .checked_mul((n - i) as u64)?
            .checked_div((i + 1) as u64)
            .unwrap();
        // Division is exact at each step because any i+1 consecutive
        // integers contain a multiple of i+1; the intermediate product of
        // C(n, i) * (n - i) is divisible by i + 1.
    }
    Some(result)
}

pub(crate) fn falling_factorial_u64(n: usize, k: usize) -> Option<u64> {
    let mut result: u64 = 1;
    for i in 0..k {
        result = result.checked_mul((n - i) as u64)?;
    }
    Some(result)
}

/// All k-subsets of `{0, ..., n-1}` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let subset = current.clone()?;
        // Advance to the next combination.
        let next = {
            let mut c = subset.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] != i + n - k {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        current = next;
        Some(subset)
    })
}
