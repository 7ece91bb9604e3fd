//! Vertices and codes of the Hamming graph `H(m, q)`.
//!
//! Vertices are `m`-tuples over the alphabet `{0, ..., q-1}`; two vertices
//! are adjacent when they differ in exactly one entry, so the graph
//! distance is the Hamming distance. A [`Code`] is a non-empty set of
//! vertices with cached invariants: minimum distance, covering radius and
//! the distance partition `{C_0, ..., C_rho}` obtained by multi-source
//! breadth-first search over the implicit vertex set (vertices are encoded
//! as radix-`q` integers rather than materialised as tuples).
//!
//! Code files are line oriented: an `m q` header, then one codeword per
//! line, either as `m` space-separated digits or as a contiguous digit
//! string when `q <= 10`; `#` starts a comment. Writing a parsed code
//! reproduces the canonical (lexicographically sorted) form bit for bit.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::{binomial_u64, combinations};

/// A vertex of `H(m, q)`: an `m`-tuple with entries below `q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    entries: Vec<u8>,
}

impl Vertex {
    pub fn new(entries: Vec<u8>) -> Self {
        Vertex { entries }
    }

    /// The all-zero vertex.
    pub fn zero(m: usize) -> Self {
        Vertex {
            entries: vec![0; m],
        }
    }

    /// The constant vertex `(a, ..., a)`.
    pub fn constant(m: usize, a: u8) -> Self {
        Vertex {
            entries: vec![a; m],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> u8 {
        self.entries[i]
    }

    /// Positions with a non-zero entry.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| if e != 0 { Some(i) } else { None })
            .collect()
    }

    /// Number of non-zero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Positions where the two vertices differ.
    pub fn diff(&self, other: &Vertex) -> Result<Vec<usize>> {
        if self.len() != other.len() {
            return Err(Error::domain(format!(
                "vertex lengths {} and {} differ",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .enumerate()
            .filter_map(|(i, (a, b))| if a != b { Some(i) } else { None })
            .collect())
    }

    /// Radix-`q` encoding with entry 0 most significant, so numeric order
    /// equals lexicographic order on tuples.
    pub fn encode(&self, q: u8) -> u64 {
        let mut code = 0u64;
        for &e in &self.entries {
            code = code * q as u64 + e as u64;
        }
        code
    }

    pub fn decode(mut code: u64, m: usize, q: u8) -> Vertex {
        let mut entries = vec![0u8; m];
        for slot in entries.iter_mut().rev() {
            *slot = (code % q as u64) as u8;
            code /= q as u64;
        }
        Vertex { entries }
    }

    fn render(&self, q: u8) -> String {
        if q <= 10 {
            self.entries.iter().map(|e| (b'0' + e) as char).collect()
        } else {
            self.entries
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex(")?;
        for &e in &self.entries {
            if e < 10 {
                write!(f, "{e}")?;
            } else {
                write!(f, " {e}")?;
            }
        }
        write!(f, ")")
    }
}

/// Hamming distance: the number of entries in which two vertices differ.
pub fn hamming_distance(u: &Vertex, v: &Vertex) -> Result<usize> {
    Ok(u.diff(v)?.len())
}

/// All vertices at distance exactly `k` from `center` in `H(m, q)`.
pub fn sphere(center: &Vertex, k: usize, q: u8, budget: &Budget) -> Result<Vec<Vertex>> {
    let m = center.len();
    if k > m {
        return Err(Error::domain(format!("radius {k} exceeds length {m}")));
    }
    let count = binomial_u64(m, k)
        .and_then(|c| c.checked_mul(((q - 1) as u64).checked_pow(k as u32)?))
        .filter(|&c| c <= budget.max_vertices)
        .ok_or_else(|| {
            Error::resource(format!(
                "sphere size C({m},{k})*(q-1)^{k} exceeds the vertex budget"
            ))
        })?;
    let mut result = Vec::with_capacity(count as usize);
    for positions in combinations(m, k) {
        // Odometer over the non-zero offsets 1..q-1 at the chosen positions.
        let mut offsets = vec![1u8; k];
        'assignments: loop {
            let mut entries = center.entries.clone();
            for (&off, &pos) in offsets.iter().zip(&positions) {
                entries[pos] = (entries[pos] + off) % q;
            }
            result.push(Vertex::new(entries));
            let mut i = k;
            loop {
                if i == 0 {
                    break 'assignments;
                }
                i -= 1;
                if offsets[i] < q - 1 {
                    offsets[i] += 1;
                    for slot in offsets.iter_mut().skip(i + 1) {
                        *slot = 1;
                    }
                    continue 'assignments;
                }
            }
        }
    }
    debug_assert_eq!(result.len() as u64, count);
    Ok(result)
}

/// All vertices of weight exactly `w` in `H(m, q)`.
pub fn vertices_of_weight(m: usize, q: u8, w: usize, budget: &Budget) -> Result<Vec<Vertex>> {
    sphere(&Vertex::zero(m), w, q, budget)
}

/// Distance partition `{C_0, ..., C_rho}` stored as a distance table over
/// the full (encoded) vertex set.
#[derive(Debug, Clone)]
pub struct DistancePartition {
    m: usize,
    q: u8,
    dist: Vec<u8>,
    sizes: Vec<u64>,
}

impl DistancePartition {
    /// Covering radius: the index of the last part.
    pub fn rho(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Sizes of `C_0, ..., C_rho`.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Distance of a vertex from the code.
    pub fn distance_of(&self, v: &Vertex) -> usize {
        self.dist[v.encode(self.q) as usize] as usize
    }

    pub fn distance_of_encoded(&self, code: u64) -> usize {
        self.dist[code as usize] as usize
    }

    /// Encoded vertices of part `C_i`, in increasing (lexicographic) order.
    pub fn part_encoded(&self, i: usize) -> impl Iterator<Item = u64> + '_ {
        self.dist
            .iter()
            .enumerate()
            .filter(move |(_, &d)| d as usize == i)
            .map(|(code, _)| code as u64)
    }

    /// Part `C_i` as decoded vertices.
    pub fn part(&self, i: usize) -> Vec<Vertex> {
        self.part_encoded(i)
            .map(|code| Vertex::decode(code, self.m, self.q))
            .collect()
    }
}

/// Exact distance distribution `(a_0, ..., a_m)` of a code: `a_i` is the
/// number of ordered codeword pairs at distance `i`, divided by `|C|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    values: Vec<BigRational>,
}

impl DistanceDistribution {
    pub fn new(values: Vec<BigRational>) -> Self {
        DistanceDistribution { values }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> &BigRational {
        &self.values[i]
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |a, b| a + b)
    }
}

/// A non-empty code in `H(m, q)`, canonically ordered, with cached
/// invariants. Caches are built once on first use (thread-safe) and every
/// query afterwards is read-only.
pub struct Code {
    m: usize,
    q: u8,
    words: Vec<Vertex>,
    budget: Budget,
    partition: OnceLock<DistancePartition>,
    min_distance: OnceLock<usize>,
    distribution: OnceLock<DistanceDistribution>,
}

impl Clone for Code {
    fn clone(&self) -> Self {
        Code {
            m: self.m,
            q: self.q,
            words: self.words.clone(),
            budget: self.budget,
            partition: OnceLock::new(),
            min_distance: OnceLock::new(),
            distribution: OnceLock::new(),
        }
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.q == other.q && self.words == other.words
    }
}

impl Eq for Code {}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(m={}, q={}, |C|={})", self.m, self.q, self.words.len())
    }
}

impl Code {
    pub fn new(m: usize, q: u8, words: Vec<Vertex>) -> Result<Self> {
        Code::with_budget(m, q, words, Budget::default())
    }

    pub fn with_budget(m: usize, q: u8, words: Vec<Vertex>, budget: Budget) -> Result<Self> {
        if m == 0 || q < 2 {
            return Err(Error::domain(format!(
                "Hamming graph parameters m={m}, q={q} out of range"
            )));
        }
        if words.is_empty() {
            return Err(Error::domain("a code must be non-empty".to_string()));
        }
        let mut words = words;
        for w in &words {
            if w.len() != m {
                return Err(Error::domain(format!(
                    "codeword length {} differs from m={m}",
                    w.len()
                )));
            }
            if let Some(&e) = w.entries().iter().find(|&&e| e >= q) {
                return Err(Error::domain(format!("entry {e} not below q={q}")));
            }
        }
        words.sort();
        words.dedup();
        Ok(Code {
            m,
            q,
            words,
            budget,
            partition: OnceLock::new(),
            min_distance: OnceLock::new(),
            distribution: OnceLock::new(),
        })
    }

    /// Code from string words like `"0012"` (q <= 10).
    pub fn from_strs(m: usize, q: u8, words: &[&str]) -> Result<Self> {
        let parsed = words
            .iter()
            .map(|w| parse_word(w, m, q))
            .collect::<Result<Vec<_>>>()?;
        Code::new(m, q, parsed)
    }

    /// The full vertex set of `H(m, q)` as a code.
    pub fn full_space(m: usize, q: u8) -> Result<Self> {
        let total = (q as u64)
            .checked_pow(m as u32)
            .filter(|&t| t <= Budget::default().max_vertices)
            .ok_or_else(|| Error::resource("full vertex set exceeds the vertex budget"))?;
        let words = (0..total).map(|c| Vertex::decode(c, m, q)).collect();
        Code::new(m, q, words)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Codewords in lexicographic order.
    pub fn words(&self) -> &[Vertex] {
        &self.words
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.words.binary_search(v).is_ok()
    }

    /// Minimum distance between distinct codewords. Requires at least two
    /// codewords.
    pub fn min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::precondition(
                "minimum distance needs at least two codewords".to_string(),
            ));
        }
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        // Lexicographically adjacent words catch distance 1 early; this
        // keeps huge codes (e.g. the full vertex set) out of the quadratic
        // scan.
        for pair in self.words.windows(2) {
            if hamming_distance(&pair[0], &pair[1])? == 1 {
                return Ok(*self.min_distance.get_or_init(|| 1));
            }
        }
        let pairs = (self.words.len() as u64).pow(2);
        if pairs > self.budget.max_pairs {
            return Err(Error::resource(format!(
                "{} codeword pairs exceed the pair budget {}",
                pairs, self.budget.max_pairs
            )));
        }
        let mut best = self.m;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = hamming_distance(u, v)?;
                if d < best {
                    best = d;
                    if best == 1 {
                        break;
                    }
                }
            }
        }
        Ok(*self.min_distance.get_or_init(|| best))
    }

    /// Minimum distance, or `None` for a single-word code.
    pub fn min_distance_opt(&self) -> Result<Option<usize>> {
        if self.words.len() < 2 {
            Ok(None)
        } else {
            self.min_distance().map(Some)
        }
    }

    /// Distance partition of the code, cached after the first call.
    pub fn distance_partition(&self) -> Result<&DistancePartition> {
        if let Some(p) = self.partition.get() {
            return Ok(p);
        }
        let total = (self.q as u64)
            .checked_pow(self.m as u32)
            .filter(|&t| t <= self.budget.max_vertices)
            .ok_or_else(|| {
                Error::resource(format!(
                    "q^m = {}^{} exceeds the vertex budget {}",
                    self.q, self.m, self.budget.max_vertices
                ))
            })?;
        let mut dist = vec![u8::MAX; total as usize];
        let mut queue = VecDeque::with_capacity(self.words.len());
        for w in &self.words {
            let code = w.encode(self.q);
            dist[code as usize] = 0;
            queue.push_back(code);
        }
        let mut pows = vec![1u64; self.m];
        for j in (0..self.m.saturating_sub(1)).rev() {
            pows[j] = pows[j + 1] * self.q as u64;
        }
        let mut sizes = vec![self.words.len() as u64];
        while let Some(code) = queue.pop_front() {
            let d = dist[code as usize];
            for &pow in &pows {
                let digit = (code / pow) % self.q as u64;
                let base = code - digit * pow;
                for s in 0..self.q as u64 {
                    if s == digit {
                        continue;
                    }
                    let neighbour = base + s * pow;
                    if dist[neighbour as usize] == u8::MAX {
                        dist[neighbour as usize] = d + 1;
                        if sizes.len() <= (d + 1) as usize {
                            sizes.push(0);
                        }
                        sizes[(d + 1) as usize] += 1;
                        queue.push_back(neighbour);
                    }
                }
            }
        }
        let partition = DistancePartition {
            m: self.m,
            q: self.q,
            dist,
            sizes,
        };
        Ok(self.partition.get_or_init(|| partition))
    }

    /// Covering radius: the largest distance of any vertex from the code.
    pub fn covering_radius(&self) -> Result<usize> {
        Ok(self.distance_partition()?.rho())
    }

    /// Exact distance distribution `(a_0, ..., a_m)`.
    pub fn distance_distribution(&self) -> Result<&DistanceDistribution> {
        if let Some(d) = self.distribution.get() {
            return Ok(d);
        }
        let pairs = (self.words.len() as u64).pow(2);
        if pairs > self.budget.max_pairs {
            return Err(Error::resource(format!(
                "{} codeword pairs exceed the pair budget {}",
                pairs, self.budget.max_pairs
            )));
        }
        let mut counts = vec![BigUint::zero(); self.m + 1];
        counts[0] = BigUint::from(self.words.len());
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = hamming_distance(u, v)?;
                counts[d] += 2u32;
            }
        }
        let size = BigRational::from_integer(self.words.len().into());
        let values = counts
            .into_iter()
            .map(|c| BigRational::from_integer(c.into()) / &size)
            .collect();
        Ok(self
            .distribution
            .get_or_init(|| DistanceDistribution::new(values)))
    }

    /// Codewords whose difference pattern with `alpha` equals the one of
    /// `beta`, i.e. `{gamma in C : Diff(alpha, gamma) = Diff(alpha, beta)}`.
    pub fn diff_class(&self, alpha: &Vertex, beta: &Vertex) -> Result<Vec<Vertex>> {
        if !self.contains(alpha) || !self.contains(beta) {
            return Err(Error::precondition(
                "diff_class arguments must be codewords".to_string(),
            ));
        }
        let pattern = alpha.diff(beta)?;
        let mut class = Vec::new();
        for gamma in &self.words {
            if alpha.diff(gamma)? == pattern {
                class.push(gamma.clone());
            }
        }
        Ok(class)
    }

    /// Codewords of weight exactly `k`.
    pub fn weight_class(&self, k: usize) -> Vec<Vertex> {
        self.words
            .iter()
            .filter(|w| w.weight() == k)
            .cloned()
            .collect()
    }

    /// Renders the code file format (canonical order).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.m, self.q).unwrap();
        for w in &self.words {
            writeln!(out, "{}", w.render(self.q)).unwrap();
        }
        out
    }

    /// Parses the code file format; see the module docs.
    pub fn parse(text: &str) -> Result<Code> {
        Code::parse_with_budget(text, Budget::default())
    }

    pub fn parse_with_budget(text: &str, budget: Budget) -> Result<Code> {
        let mut header: Option<(usize, u8)> = None;
        let mut words = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = crate::group::strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let mut parts = line.split_whitespace();
                    let m: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `m q` header"))?;
                    let q: u8 = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `m q` header"))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(line_no, "expected exactly `m q` in header"));
                    }
                    header = Some((m, q));
                }
                Some((m, q)) => {
                    let word =
                        parse_word(line, m, q).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    words.push(word);
                }
            }
        }
        let (m, q) = header.ok_or_else(|| Error::parse(1, "missing `m q` header"))?;
        Code::with_budget(m, q, words, budget)
    }
}

fn parse_word(text: &str, m: usize, q: u8) -> Result<Vertex> {
    let entries: Vec<u8> = if text.contains(' ') {
        text.split_whitespace()
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| Error::domain(format!("bad digit {t:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::domain(format!("bad digit {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    if entries.len() != m {
        return Err(Error::domain(format!(
            "codeword has {} entries, expected {m}",
            entries.len()
        )));
    }
    if let Some(&e) = entries.iter().find(|&&e| e >= q) {
        return Err(Error::domain(format!("entry {e} not below q={q}")));
    }
    Ok(Vertex::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::rep_code;
    use num_traits::One;

    fn v(word: &str) -> Vertex {
        Vertex::new(word.bytes().map(|b| b - b'0').collect())
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hamming_distance(&v("000"), &v("000")).unwrap(), 0);
        assert_eq!(hamming_distance(&v("00000"), &v("11111")).unwrap(), 5);
        assert_eq!(hamming_distance(&v("120"), &v("102")).unwrap(), 2);
        assert!(hamming_distance(&v("01"), &v("011")).is_err());
    }

    #[test]
    fn distance_is_a_metric_on_samples() {
        let words = ["0000", "1111", "0110", "2012", "2210"];
        for a in words {
            for b in words {
                for c in words {
                    let (a, b, c) = (v(a), v(b), v(c));
                    let dab = hamming_distance(&a, &b).unwrap();
                    let dba = hamming_distance(&b, &a).unwrap();
                    assert_eq!(dab, dba);
                    assert_eq!(dab == 0, a == b);
                    let dac = hamming_distance(&a, &c).unwrap();
                    let dcb = hamming_distance(&c, &b).unwrap();
                    assert!(dab <= dac + dcb);
                }
            }
        }
    }

    #[test]
    fn support_and_weight() {
        assert_eq!(v("0102").support(), vec![1, 3]);
        assert_eq!(v("0102").weight(), 2);
        assert_eq!(Vertex::zero(4).weight(), 0);
    }

    #[test]
    fn encode_decode_round_trip() {
        for q in [2u8, 3, 4] {
            for code in 0..(q as u64).pow(4) {
                let vert = Vertex::decode(code, 4, q);
                assert_eq!(vert.encode(q), code);
            }
        }
    }

    #[test]
    fn encoding_preserves_lexicographic_order() {
        let a = v("0112");
        let b = v("0121");
        assert!(a < b);
        assert!(a.encode(3) < b.encode(3));
    }

    #[test]
    fn min_distance_of_repetition_code() {
        assert_eq!(rep_code(6, 2).unwrap().min_distance().unwrap(), 6);
        assert_eq!(rep_code(5, 3).unwrap().min_distance().unwrap(), 5);
    }

    #[test]
    fn min_distance_by_pairwise_oracle() {
        let code = Code::from_strs(3, 2, &["000", "011", "101"]).unwrap();
        let words = code.words();
        let mut best = usize::MAX;
        for (i, u) in words.iter().enumerate() {
            for w in &words[i + 1..] {
                best = best.min(hamming_distance(u, w).unwrap());
            }
        }
        assert_eq!(best, 2);
        assert_eq!(code.min_distance().unwrap(), 2);
    }

    #[test]
    fn min_distance_one_found_quickly() {
        let code = Code::full_space(4, 3).unwrap();
        assert_eq!(code.min_distance().unwrap(), 1);
    }

    #[test]
    fn min_distance_needs_two_words() {
        let code = Code::from_strs(4, 2, &["0000"]).unwrap();
        assert!(matches!(code.min_distance(), Err(Error::Precondition(_))));
        assert_eq!(code.min_distance_opt().unwrap(), None);
    }

    #[test]
    fn sphere_sizes() {
        let budget = Budget::default();
        let s = sphere(&Vertex::zero(3), 1, 2, &budget).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&v("100")) && s.contains(&v("010")) && s.contains(&v("001")));
        assert_eq!(sphere(&Vertex::zero(3), 0, 2, &budget).unwrap(), vec![Vertex::zero(3)]);
        assert_eq!(sphere(&Vertex::zero(6), 3, 2, &budget).unwrap().len(), 20);
        // Around a non-zero centre with q = 3: C(4,2) * 2^2 = 24.
        let s = sphere(&v("1202"), 2, 3, &budget).unwrap();
        assert_eq!(s.len(), 24);
        for w in &s {
            assert_eq!(hamming_distance(w, &v("1202")).unwrap(), 2);
        }
    }

    #[test]
    fn partition_of_repetition_code() {
        let code = rep_code(6, 2).unwrap();
        let partition = code.distance_partition().unwrap();
        assert_eq!(partition.sizes(), &[2, 12, 30, 20]);
        assert_eq!(partition.rho(), 3);
        assert_eq!(code.covering_radius().unwrap(), 3);
    }

    #[test]
    fn repetition_covering_radius_is_half_length() {
        for m in 2..=10 {
            let code = rep_code(m, 2).unwrap();
            assert_eq!(code.covering_radius().unwrap(), m / 2, "m = {m}");
        }
    }

    #[test]
    fn partition_of_full_space_is_a_single_part() {
        let code = Code::full_space(3, 2).unwrap();
        let partition = code.distance_partition().unwrap();
        assert_eq!(partition.sizes(), &[8]);
        assert_eq!(partition.rho(), 0);
    }

    #[test]
    fn single_word_covering_radius() {
        let code = Code::from_strs(5, 2, &["00000"]).unwrap();
        assert_eq!(code.covering_radius().unwrap(), 5);
    }

    #[test]
    fn partition_parts_are_a_partition() {
        let code = Code::from_strs(4, 3, &["0000", "1110", "2221"]).unwrap();
        let partition = code.distance_partition().unwrap();
        let total: u64 = partition.sizes().iter().sum();
        assert_eq!(total, 81);
        // Part membership agrees with pointwise distances.
        for c in 0..81u64 {
            let vert = Vertex::decode(c, 4, 3);
            let d = code
                .words()
                .iter()
                .map(|w| hamming_distance(w, &vert).unwrap())
                .min()
                .unwrap();
            assert_eq!(partition.distance_of(&vert), d);
        }
    }

    #[test]
    fn inner_parts_are_disjoint_sphere_unions() {
        // For i below half the minimum distance, |C_i| = |C| * C(m,i) * (q-1)^i.
        let code = rep_code(7, 3).unwrap();
        let partition = code.distance_partition().unwrap();
        let e = (code.min_distance().unwrap() - 1) / 2;
        for i in 0..=e {
            let expected =
                3 * binomial_u64(7, i).unwrap() * 2u64.pow(i as u32);
            assert_eq!(partition.sizes()[i], expected, "i = {i}");
        }
    }

    #[test]
    fn distribution_of_repetition_code() {
        for m in [3usize, 5, 6] {
            let code = rep_code(m, 2).unwrap();
            let dist = code.distance_distribution().unwrap();
            assert_eq!(dist.value(0), &BigRational::one());
            assert_eq!(dist.value(m), &BigRational::one());
            for i in 1..m {
                assert!(dist.value(i).is_zero());
            }
        }
    }

    #[test]
    fn distribution_of_single_word() {
        let code = Code::from_strs(4, 2, &["0110"]).unwrap();
        let dist = code.distance_distribution().unwrap();
        assert_eq!(dist.value(0), &BigRational::one());
        for i in 1..=4 {
            assert!(dist.value(i).is_zero());
        }
    }

    #[test]
    fn distribution_sums_to_code_size() {
        let code = Code::from_strs(4, 3, &["0000", "1110", "2221", "0122"]).unwrap();
        let dist = code.distance_distribution().unwrap();
        assert_eq!(dist.sum(), BigRational::from_integer(4.into()));
        assert_eq!(dist.value(0), &BigRational::one());
    }

    #[test]
    fn antipodal_distribution_is_symmetric() {
        // Closed under complementation: a_i = a_{m-i}.
        let code = Code::from_strs(4, 2, &["0000", "1111", "0011", "1100"]).unwrap();
        let dist = code.distance_distribution().unwrap();
        for i in 0..=4 {
            assert_eq!(dist.value(i), dist.value(4 - i));
        }
    }

    #[test]
    fn diff_class_examples() {
        let code = Code::from_strs(5, 3, &["00000", "11100", "22200"]).unwrap();
        let alpha = v("00000");
        let beta = v("11100");
        let class = code.diff_class(&alpha, &beta).unwrap();
        assert_eq!(class, vec![v("11100"), v("22200")]);
        // alpha = beta selects exactly alpha.
        assert_eq!(code.diff_class(&alpha, &alpha).unwrap(), vec![alpha.clone()]);
        let rep = rep_code(6, 2).unwrap();
        let one = Vertex::constant(6, 1);
        assert_eq!(
            rep.diff_class(&Vertex::zero(6), &one).unwrap(),
            vec![one.clone()]
        );
        assert!(code.diff_class(&alpha, &v("12345")).is_err());
    }

    #[test]
    fn weight_class_examples() {
        let rep = rep_code(6, 2).unwrap();
        assert_eq!(rep.weight_class(6), vec![Vertex::constant(6, 1)]);
        assert!(rep.weight_class(3).is_empty());
        assert_eq!(rep.weight_class(0), vec![Vertex::zero(6)]);
    }

    #[test]
    fn code_file_round_trip_binary() {
        let code = rep_code(6, 2).unwrap();
        let text = code.to_file_string();
        assert_eq!(text, "6 2\n000000\n111111\n");
        let parsed = Code::parse(&text).unwrap();
        assert_eq!(parsed, code);
        assert_eq!(parsed.to_file_string(), text);
    }

    #[test]
    fn code_file_accepts_spaced_digits_and_comments() {
        let text = "# sample\n4 3\n0 0 0 0\n2221\n";
        let code = Code::parse(text).unwrap();
        assert_eq!(code.len(), 2);
        assert_eq!(code.to_file_string(), "4 3\n0000\n2221\n");
    }

    #[test]
    fn code_file_errors_carry_line_numbers() {
        let err = Code::parse("4 2\n0000\n0021\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Code::parse("4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn vertex_budget_is_enforced() {
        let tight = Budget {
            max_vertices: 10,
            ..Budget::default()
        };
        let code = Code::with_budget(4, 2, vec![Vertex::zero(4)], tight).unwrap();
        assert!(matches!(
            code.distance_partition(),
            Err(Error::Resource(_))
        ));
    }
}
