//! Permutations of `{0, ..., n-1}`.
//!
//! Composition follows the right-action convention used throughout the
//! crate: points are written on the left, so `p.apply(x.then(y)) ==
//! y.apply(x.apply(p))` — first `x`, then `y`. All public operations that
//! take a point use 0-based indices; the text formats below are the only
//! place where 1-based numbering appears.
//!
//! Two text notations are supported:
//!
//! * cycle notation over 1-based points, e.g. `(1 2 3)(4 5)`, identity `()`;
//! * image notation over 1-based points, e.g. `[2,3,1,5,4]`.
//!
//! Alphabet permutations (used by the Hamming-graph automorphism format)
//! print their cycles with 0-based symbols instead; see
//! [`Permutation::to_cycle_string_zero_based`].

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., degree-1}`, stored by its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image vector (`images[i]` is the image
    /// of point `i`). Fails unless the vector is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::domain(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::domain(format!("image {img} repeated")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(Error::domain(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                if moved[from] {
                    return Err(Error::domain(format!("point {from} appears twice")));
                }
                moved[from] = true;
                images[from] = to;
            }
        }
        Self::from_images(images)
    }

    /// Transposition of two points (identity when they coincide).
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        if a >= degree || b >= degree {
            return Err(Error::domain(format!(
                "transposition points {a},{b} out of range for degree {degree}"
            )));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point under this permutation.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Preimage of a point.
    pub fn apply_inverse(&self, point: usize) -> usize {
        self.images.iter().position(|&img| img == point).unwrap()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Right-action composition: apply `self` first, then `other`, so
    /// `self.then(other).apply(p) == other.apply(self.apply(p))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// True for odd permutations (an odd number of transpositions).
    pub fn is_odd(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut odd = false;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            if len % 2 == 0 {
                odd = !odd;
            }
        }
        odd
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Non-trivial cycles, each starting at its smallest point, sorted by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Smallest moved point, if any.
    pub fn min_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find_map(
            |(i, &img)| {
                if i != img {
                    Some(i)
                } else {
                    None
                }
            },
        )
    }

    /// Cycle notation with points shifted by `offset` for display.
    fn cycle_string_with_offset(&self, offset: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(p + offset).to_string());
            }
            out.push(')');
        }
        out
    }

    /// Cycle notation over 1-based points, e.g. `(1 2 3)(4 5)`.
    pub fn to_cycle_string(&self) -> String {
        self.cycle_string_with_offset(1)
    }

    /// Cycle notation over 0-based symbols, used for alphabet permutations.
    pub fn to_cycle_string_zero_based(&self) -> String {
        self.cycle_string_with_offset(0)
    }

    /// Parses `(1 2 3)(4 5)`, `[2,3,1,5,4]` or `()` over 1-based points.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        parse_with_offset(text, degree, 1)
    }

    /// Parses cycle/image notation over 0-based symbols.
    pub fn parse_zero_based(text: &str, degree: usize) -> Result<Self> {
        parse_with_offset(text, degree, 0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_cycle_string())
    }
}

fn parse_with_offset(text: &str, degree: usize, offset: usize) -> Result<Permutation> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::domain("empty permutation text"));
    }
    if text.starts_with('[') {
        if !text.ends_with(']') {
            return Err(Error::domain("unterminated image notation"));
        }
        let inner = &text[1..text.len() - 1];
        let mut images = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            let value: usize = part
                .parse()
                .map_err(|_| Error::domain(format!("bad point {part:?}")))?;
            if value < offset {
                return Err(Error::domain(format!("point {value} below {offset}")));
            }
            images.push(value - offset);
        }
        if images.len() != degree {
            return Err(Error::domain(format!(
                "image notation lists {} points, degree is {degree}",
                images.len()
            )));
        }
        return Permutation::from_images(images);
    }
    if !text.starts_with('(') {
        return Err(Error::domain(format!("unrecognised permutation {text:?}")));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::domain(format!("expected '(' in {text:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::domain(format!("unbalanced parentheses in {text:?}")))?;
        let inner = &rest[1..close];
        let mut cycle = Vec::new();
        for part in inner.split([' ', ',']) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let value: usize = part
                .parse()
                .map_err(|_| Error::domain(format!("bad point {part:?}")))?;
            if value < offset {
                return Err(Error::domain(format!("point {value} below {offset}")));
            }
            cycle.push(value - offset);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}
