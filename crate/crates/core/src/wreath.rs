//! Automorphisms of the Hamming graph and generated subgroups.
//!
//! `Aut(H(m, q))` is the wreath product `S_q wr S_m`: an element is a tuple
//! `(g_1, ..., g_m)` of alphabet permutations together with a coordinate
//! permutation `sigma`, acting by
//!
//! ```text
//! (v^x)_i = g_j(v_j)   where j = sigma^{-1}(i).
//! ```
//!
//! Composition is a right action: `v^(xy) = (v^x)^y`. A generated subgroup
//! is carried alongside its faithful permutation representation on the
//! `q * m` alphabet-position pairs, which supplies exact orders and
//! membership through the stabilizer chain; the induced group on
//! coordinates is kept separate and never silently identified with the
//! subgroup itself.
//!
//! Automorphism files are line oriented: an `m q` header, then one element
//! per line as `sigma := <perm> | g := <perm>,...,<perm>` with `sigma` in
//! 1-based cycle notation and the `m` alphabet permutations in 0-based
//! cycle notation; `g := const <perm>` abbreviates a constant tuple.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::{orbit_with_transversal, stabilizer_generators, GroupElem, PermGroup};
use crate::hamming::{Code, Vertex};
use crate::perm::Permutation;

/// An automorphism of `H(m, q)`: alphabet permutations `g_1, ..., g_m`
/// plus a coordinate permutation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    alphabet_perms: Vec<Permutation>,
    coord_perm: Permutation,
}

impl WreathElement {
    pub fn new(alphabet_perms: Vec<Permutation>, coord_perm: Permutation) -> Result<Self> {
        let m = coord_perm.degree();
        if alphabet_perms.len() != m {
            return Err(Error::domain(format!(
                "{} alphabet permutations for {} coordinates",
                alphabet_perms.len(),
                m
            )));
        }
        let q = alphabet_perms.first().map(|p| p.degree()).unwrap_or(0);
        if alphabet_perms.iter().any(|p| p.degree() != q) {
            return Err(Error::domain(
                "alphabet permutations must share one degree".to_string(),
            ));
        }
        Ok(WreathElement {
            alphabet_perms,
            coord_perm,
        })
    }

    pub fn identity(m: usize, q: u8) -> Self {
        WreathElement {
            alphabet_perms: vec![Permutation::identity(q as usize); m],
            coord_perm: Permutation::identity(m),
        }
    }

    /// Element with identity alphabet parts (a pure coordinate
    /// permutation).
    pub fn from_coord_perm(coord_perm: Permutation, q: u8) -> Self {
        WreathElement {
            alphabet_perms: vec![Permutation::identity(q as usize); coord_perm.degree()],
            coord_perm,
        }
    }

    /// Element applying the same alphabet permutation in every coordinate.
    pub fn diagonal(m: usize, alphabet_perm: Permutation) -> Self {
        WreathElement {
            alphabet_perms: vec![alphabet_perm; m],
            coord_perm: Permutation::identity(m),
        }
    }

    pub fn m(&self) -> usize {
        self.coord_perm.degree()
    }

    pub fn q(&self) -> u8 {
        self.alphabet_perms[0].degree() as u8
    }

    /// The coordinate permutation (the image under the projection onto
    /// the top group).
    pub fn coord_perm(&self) -> &Permutation {
        &self.coord_perm
    }

    pub fn alphabet_perms(&self) -> &[Permutation] {
        &self.alphabet_perms
    }

    /// The alphabet permutation acting in entry `i`, defined when the
    /// element stabilizes entry `i`.
    pub fn alphabet_action(&self, i: usize) -> Result<&Permutation> {
        if i >= self.m() {
            return Err(Error::domain(format!("entry {i} out of range")));
        }
        if self.coord_perm.apply(i) != i {
            return Err(Error::precondition(format!(
                "element does not stabilize entry {i}"
            )));
        }
        Ok(&self.alphabet_perms[i])
    }

    /// Image of a vertex under the element.
    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        if v.len() != self.m() || v.entries().iter().any(|&e| e >= self.q()) {
            return Err(Error::domain(format!(
                "vertex does not live in H({}, {})",
                self.m(),
                self.q()
            )));
        }
        let mut entries = vec![0u8; v.len()];
        for j in 0..v.len() {
            entries[self.coord_perm.apply(j)] =
                self.alphabet_perms[j].apply(v.entry(j) as usize) as u8;
        }
        Ok(Vertex::new(entries))
    }

    /// Right-action product: apply `self` first, then `other`.
    pub fn then(&self, other: &WreathElement) -> WreathElement {
        debug_assert_eq!(self.m(), other.m());
        debug_assert_eq!(self.q(), other.q());
        let alphabet_perms = (0..self.m())
            .map(|j| {
                self.alphabet_perms[j].then(&other.alphabet_perms[self.coord_perm.apply(j)])
            })
            .collect();
        WreathElement {
            alphabet_perms,
            coord_perm: self.coord_perm.then(&other.coord_perm),
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let inv_coord = self.coord_perm.inverse();
        let mut alphabet_perms = vec![Permutation::identity(self.q() as usize); self.m()];
        for j in 0..self.m() {
            alphabet_perms[self.coord_perm.apply(j)] = self.alphabet_perms[j].inverse();
        }
        WreathElement {
            alphabet_perms,
            coord_perm: inv_coord,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coord_perm.is_identity() && self.alphabet_perms.iter().all(|p| p.is_identity())
    }

    /// True when the element fixes the all-zero vertex.
    pub fn fixes_zero(&self) -> bool {
        self.alphabet_perms.iter().all(|p| p.apply(0) == 0)
    }

    /// The faithful permutation on the `q * m` alphabet-position pairs,
    /// pair `(a, i)` encoded as `i * q + a`.
    pub fn omega_perm(&self) -> Permutation {
        let q = self.q() as usize;
        let mut images = vec![0usize; q * self.m()];
        for i in 0..self.m() {
            let target = self.coord_perm.apply(i);
            for a in 0..q {
                images[i * q + a] = target * q + self.alphabet_perms[i].apply(a);
            }
        }
        Permutation::from_images(images).expect("wreath image is a bijection")
    }

    /// Inverse of [`WreathElement::omega_perm`] for permutations that
    /// respect the alphabet-block structure.
    pub fn from_omega(perm: &Permutation, m: usize, q: u8) -> Result<WreathElement> {
        let qu = q as usize;
        if perm.degree() != m * qu {
            return Err(Error::domain("degree does not match m * q".to_string()));
        }
        let mut alphabet_perms = Vec::with_capacity(m);
        let mut coord_images = Vec::with_capacity(m);
        for i in 0..m {
            let block = perm.apply(i * qu) / qu;
            let mut images = Vec::with_capacity(qu);
            for a in 0..qu {
                let image = perm.apply(i * qu + a);
                if image / qu != block {
                    return Err(Error::domain(
                        "permutation does not preserve alphabet blocks".to_string(),
                    ));
                }
                images.push(image % qu);
            }
            alphabet_perms.push(Permutation::from_images(images)?);
            coord_images.push(block);
        }
        WreathElement::new(alphabet_perms, Permutation::from_images(coord_images)?)
    }

    /// Image of a code under the element.
    pub fn act_on_code(&self, code: &Code) -> Result<Code> {
        if code.m() != self.m() || code.q() != self.q() {
            return Err(Error::domain(format!(
                "code shape ({}, {}) does not match element shape ({}, {})",
                code.m(),
                code.q(),
                self.m(),
                self.q()
            )));
        }
        let words = code
            .words()
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Code::with_budget(code.m(), code.q(), words, *code.budget())
    }

    /// True when the element maps the code onto itself.
    pub fn is_code_automorphism(&self, code: &Code) -> Result<bool> {
        Ok(&self.act_on_code(code)? == code)
    }

    /// For an element fixing the zero vertex, checks that supports are
    /// transported by the coordinate permutation alone.
    pub fn support_transport_check(&self, v: &Vertex) -> Result<bool> {
        if !self.fixes_zero() {
            return Err(Error::precondition(
                "support transport needs an element fixing the zero vertex".to_string(),
            ));
        }
        let image = self.apply(v)?;
        let mut transported: Vec<usize> =
            v.support().iter().map(|&i| self.coord_perm.apply(i)).collect();
        transported.sort_unstable();
        Ok(image.support() == transported)
    }

    fn render(&self) -> String {
        let sigma = self.coord_perm.to_cycle_string();
        let constant = self.alphabet_perms.iter().all(|p| p == &self.alphabet_perms[0]);
        if constant {
            format!(
                "sigma := {sigma} | g := const {}",
                self.alphabet_perms[0].to_cycle_string_zero_based()
            )
        } else {
            let gs = self
                .alphabet_perms
                .iter()
                .map(|p| p.to_cycle_string_zero_based())
                .collect::<Vec<_>>()
                .join(",");
            format!("sigma := {sigma} | g := {gs}")
        }
    }

    fn parse_line(line: &str, m: usize, q: u8) -> Result<WreathElement> {
        let (sigma_part, g_part) = line
            .split_once('|')
            .ok_or_else(|| Error::domain("expected `sigma := ... | g := ...`".to_string()))?;
        let sigma_text = sigma_part
            .trim()
            .strip_prefix("sigma :=")
            .ok_or_else(|| Error::domain("missing `sigma :=`".to_string()))?
            .trim();
        let g_text = g_part
            .trim()
            .strip_prefix("g :=")
            .ok_or_else(|| Error::domain("missing `g :=`".to_string()))?
            .trim();
        let coord = Permutation::parse(sigma_text, m)?;
        let alphabet_perms = if let Some(rest) = g_text.strip_prefix("const") {
            vec![Permutation::parse_zero_based(rest.trim(), q as usize)?; m]
        } else {
            let parts: Vec<&str> = g_text.split(',').collect();
            if parts.len() != m {
                return Err(Error::domain(format!(
                    "expected {m} alphabet permutations, found {}",
                    parts.len()
                )));
            }
            parts
                .iter()
                .map(|p| Permutation::parse_zero_based(p.trim(), q as usize))
                .collect::<Result<Vec<_>>>()?
        };
        WreathElement::new(alphabet_perms, coord)
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl GroupElem for WreathElement {
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

/// A generated subgroup of `Aut(H(m, q))`.
pub struct AutSubgroup {
    m: usize,
    q: u8,
    generators: Vec<WreathElement>,
    omega: OnceLock<PermGroup>,
    entry_group: OnceLock<PermGroup>,
}

impl Clone for AutSubgroup {
    fn clone(&self) -> Self {
        AutSubgroup {
            m: self.m,
            q: self.q,
            generators: self.generators.clone(),
            omega: OnceLock::new(),
            entry_group: OnceLock::new(),
        }
    }
}

impl fmt::Debug for AutSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AutSubgroup(m={}, q={}, {} generators)",
            self.m,
            self.q,
            self.generators.len()
        )
    }
}

impl AutSubgroup {
    pub fn new(m: usize, q: u8, generators: Vec<WreathElement>) -> Result<Self> {
        for gen in &generators {
            if gen.m() != m || gen.q() != q {
                return Err(Error::domain(format!(
                    "generator shape ({}, {}) does not match ({m}, {q})",
                    gen.m(),
                    gen.q()
                )));
            }
        }
        Ok(AutSubgroup {
            m,
            q,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
            omega: OnceLock::new(),
            entry_group: OnceLock::new(),
        })
    }

    pub fn trivial(m: usize, q: u8) -> Self {
        AutSubgroup::new(m, q, Vec::new()).expect("no generators to validate")
    }

    /// Subgroup of pure coordinate permutations induced by a permutation
    /// group on the entries.
    pub fn from_coord_group(group: &PermGroup, q: u8) -> Self {
        let gens = group
            .generators()
            .iter()
            .map(|p| WreathElement::from_coord_perm(p.clone(), q))
            .collect();
        AutSubgroup::new(group.degree(), q, gens).expect("shapes match by construction")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn generators(&self) -> &[WreathElement] {
        &self.generators
    }

    /// The faithful representation on the `q * m` alphabet-position pairs.
    pub fn omega_group(&self) -> &PermGroup {
        self.omega.get_or_init(|| {
            let gens = self.generators.iter().map(|g| g.omega_perm()).collect();
            PermGroup::from_generators(self.m * self.q as usize, gens)
                .expect("omega images share one degree")
        })
    }

    /// The induced permutation group on the entries `{0, ..., m-1}`.
    pub fn entry_group(&self) -> &PermGroup {
        self.entry_group.get_or_init(|| {
            let gens = self
                .generators
                .iter()
                .map(|g| g.coord_perm().clone())
                .collect();
            PermGroup::from_generators(self.m, gens).expect("coordinate degrees match")
        })
    }

    /// Exact order of the subgroup.
    pub fn order(&self) -> BigUint {
        self.omega_group().order()
    }

    pub fn contains(&self, x: &WreathElement) -> Result<bool> {
        if x.m() != self.m || x.q() != self.q {
            return Err(Error::domain("element shape mismatch".to_string()));
        }
        self.omega_group().contains(&x.omega_perm())
    }

    /// True when only the identity acts trivially on entries, i.e. the
    /// subgroup meets the base group trivially and the entry action is
    /// faithful.
    pub fn is_faithful_on_entries(&self) -> bool {
        self.order() == self.entry_group().order()
    }

    /// Orbit of a vertex.
    pub fn vertex_orbit(&self, v: &Vertex, budget: &Budget) -> Result<Vec<Vertex>> {
        let (orbit, _) = orbit_with_transversal(
            &self.generators,
            v.clone(),
            WreathElement::identity(self.m, self.q),
            |g: &WreathElement, vert: &Vertex| g.apply(vert).expect("shape checked"),
            budget.max_orbit,
        )?;
        Ok(orbit)
    }

    /// Stabilizer of a vertex, from Schreier generators on its orbit.
    pub fn vertex_stabilizer(&self, v: &Vertex, budget: &Budget) -> Result<AutSubgroup> {
        if v.len() != self.m || v.entries().iter().any(|&e| e >= self.q) {
            return Err(Error::domain("vertex shape mismatch".to_string()));
        }
        let (_, gens) = stabilizer_generators(
            &self.generators,
            v.clone(),
            WreathElement::identity(self.m, self.q),
            |g: &WreathElement, vert: &Vertex| g.apply(vert).expect("shape checked"),
            budget.max_orbit,
        )?;
        AutSubgroup::new(self.m, self.q, gens)
    }

    /// Stabilizer of an entry under the induced coordinate action.
    pub fn entry_stabilizer(&self, i: usize, budget: &Budget) -> Result<AutSubgroup> {
        if i >= self.m {
            return Err(Error::domain(format!("entry {i} out of range")));
        }
        let (_, gens) = stabilizer_generators(
            &self.generators,
            i,
            WreathElement::identity(self.m, self.q),
            |g: &WreathElement, &p: &usize| g.coord_perm().apply(p),
            budget.max_orbit,
        )?;
        AutSubgroup::new(self.m, self.q, gens)
    }

    /// Setwise stabilizer of a set of entries under the coordinate action.
    pub fn entry_setwise_stabilizer(
        &self,
        entries: &[usize],
        budget: &Budget,
    ) -> Result<AutSubgroup> {
        if entries.iter().any(|&p| p >= self.m) {
            return Err(Error::domain("entry out of range".to_string()));
        }
        let mut seed: Vec<usize> = entries.to_vec();
        seed.sort_unstable();
        seed.dedup();
        let (_, gens) = stabilizer_generators(
            &self.generators,
            seed,
            WreathElement::identity(self.m, self.q),
            |g: &WreathElement, s: &Vec<usize>| {
                let mut image: Vec<usize> =
                    s.iter().map(|&p| g.coord_perm().apply(p)).collect();
                image.sort_unstable();
                image
            },
            budget.max_subsets,
        )?;
        AutSubgroup::new(self.m, self.q, gens)
    }

    /// The group of alphabet permutations induced in entry `i` by the
    /// stabilizer of entry `i`.
    pub fn entry_alphabet_group(&self, i: usize, budget: &Budget) -> Result<PermGroup> {
        let stabilizer = self.entry_stabilizer(i, budget)?;
        let gens = stabilizer
            .generators
            .iter()
            .map(|g| g.alphabet_action(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(self.q as usize, gens)
    }

    /// Full element listing, guarded by `budget.max_elements`.
    pub fn elements(&self, budget: &Budget) -> Result<Vec<WreathElement>> {
        let omega_elements = self.omega_group().elements(budget)?;
        omega_elements
            .iter()
            .map(|p| WreathElement::from_omega(p, self.m, self.q))
            .collect()
    }

    /// True when every generator maps the code onto itself.
    pub fn stabilizes_code(&self, code: &Code) -> Result<bool> {
        for gen in &self.generators {
            if !gen.is_code_automorphism(code)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Conjugate subgroup `{y^{-1} x y : x in self}`.
    pub fn conjugate(&self, y: &WreathElement) -> Result<AutSubgroup> {
        if y.m() != self.m || y.q() != self.q {
            return Err(Error::domain("element shape mismatch".to_string()));
        }
        let inv = y.inverse();
        let gens = self
            .generators
            .iter()
            .map(|g| inv.then(g).then(y))
            .collect();
        AutSubgroup::new(self.m, self.q, gens)
    }

    /// Renders the automorphism file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.m, self.q).unwrap();
        if self.generators.is_empty() {
            writeln!(out, "{}", WreathElement::identity(self.m, self.q).render()).unwrap();
        }
        for gen in &self.generators {
            writeln!(out, "{}", gen.render()).unwrap();
        }
        out
    }

    /// Parses the automorphism file format; see the module docs.
    pub fn parse(text: &str) -> Result<AutSubgroup> {
        let mut header: Option<(usize, u8)> = None;
        let mut gens = Vec::new();
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
                    header = Some((m, q));
                }
                Some((m, q)) => {
                    let element = WreathElement::parse_line(line, m, q)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    gens.push(element);
                }
            }
        }
        let (m, q) = header.ok_or_else(|| Error::parse(1, "missing `m q` header"))?;
        AutSubgroup::new(m, q, gens)
    }
}

/// Moves `alpha` to the constant word `(a, ..., a)` and every codeword
/// sharing the difference pattern of `beta` to a word of shape
/// `(c^delta, a^{m-delta})`, following the constructive argument: choose
/// alphabet permutations realising the required symbol images and a
/// coordinate permutation sending the difference positions to the front.
///
/// Requires `alpha, beta in C` with `d(alpha, beta)` equal to the minimum
/// distance. Returns the automorphism and the image code; the output
/// shapes are re-verified before returning.
pub fn normalize_code(
    code: &Code,
    alpha: &Vertex,
    beta: &Vertex,
    a: u8,
) -> Result<(WreathElement, Code)> {
    let m = code.m();
    let q = code.q();
    if a >= q {
        return Err(Error::domain(format!("symbol {a} not below q={q}")));
    }
    if !code.contains(alpha) || !code.contains(beta) || alpha == beta {
        return Err(Error::precondition(
            "normalization needs two distinct codewords".to_string(),
        ));
    }
    let delta = code.min_distance()?;
    let diff = alpha.diff(beta)?;
    if diff.len() != delta {
        return Err(Error::precondition(format!(
            "d(alpha, beta) = {} but the minimum distance is {delta}",
            diff.len()
        )));
    }
    let class = code.diff_class(alpha, beta)?;
    if class.len() > (q - 1) as usize {
        return Err(Error::Inconsistent(format!(
            "difference class of size {} violates the q-1 bound",
            class.len()
        )));
    }
    // Target symbols for the class members: the smallest symbols != a,
    // assigned in codeword order.
    let targets: Vec<u8> = (0..q).filter(|&c| c != a).take(class.len()).collect();
    let in_diff = {
        let mut flags = vec![false; m];
        for &k in &diff {
            flags[k] = true;
        }
        flags
    };
    let mut alphabet_perms = Vec::with_capacity(m);
    for k in 0..m {
        if in_diff[k] {
            // Sources alpha_k, class[0]_k, ... are pairwise distinct; send
            // them to a, targets[0], ... and extend order-preservingly.
            let mut images = vec![u8::MAX; q as usize];
            let mut used_targets = vec![false; q as usize];
            images[alpha.entry(k) as usize] = a;
            used_targets[a as usize] = true;
            for (member, &target) in class.iter().zip(&targets) {
                let source = member.entry(k) as usize;
                if images[source] != u8::MAX {
                    return Err(Error::Inconsistent(
                        "difference class entries collide".to_string(),
                    ));
                }
                images[source] = target;
                used_targets[target as usize] = true;
            }
            let mut remaining =
                (0..q).filter(|&c| !used_targets[c as usize]).collect::<Vec<_>>();
            remaining.reverse();
            for slot in images.iter_mut() {
                if *slot == u8::MAX {
                    *slot = remaining.pop().expect("counts match");
                }
            }
            alphabet_perms.push(Permutation::from_images(
                images.into_iter().map(|i| i as usize).collect(),
            )?);
        } else {
            alphabet_perms.push(Permutation::transposition(
                q as usize,
                a as usize,
                alpha.entry(k) as usize,
            )?);
        }
    }
    // Difference positions to the front, both halves order preserving.
    let mut coord_images = vec![0usize; m];
    let mut next_front = 0usize;
    let mut next_back = delta;
    for (k, &is_diff) in in_diff.iter().enumerate() {
        if is_diff {
            coord_images[k] = next_front;
            next_front += 1;
        } else {
            coord_images[k] = next_back;
            next_back += 1;
        }
    }
    let x = WreathElement::new(alphabet_perms, Permutation::from_images(coord_images)?)?;
    let image = x.act_on_code(code)?;
    // Postcondition check on every call.
    if x.apply(alpha)? != Vertex::constant(m, a) {
        return Err(Error::Inconsistent(
            "normalization failed to move alpha to a constant word".to_string(),
        ));
    }
    let mut seen_symbols = HashSet::new();
    for member in &class {
        let mapped = x.apply(member)?;
        let c = mapped.entry(0);
        let expected: Vec<u8> = (0..m)
            .map(|i| if i < delta { c } else { a })
            .collect();
        if c == a || mapped.entries() != expected.as_slice() || !seen_symbols.insert(c) {
            return Err(Error::Inconsistent(
                "normalization failed to shape a difference-class member".to_string(),
            ));
        }
    }
    Ok((x, image))
}
