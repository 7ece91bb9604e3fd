//! Regularity of codes: outer-distribution rows and the s-regularity
//! level.
//!
//! A code is s-regular when, for every part `C_i` of its distance
//! partition with `i <= s`, all vertices of `C_i` see the same number of
//! codewords at every distance. The level is computed part by part with an
//! early exit at the first non-constant row; a failure carries a witness
//! pair so a verdict can be rechecked by hand.

use crate::error::{Error, Result};
use crate::hamming::{hamming_distance, Code, Vertex};

/// The outer-distribution row of a vertex: entry `k` counts the codewords
/// at distance exactly `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterRow {
    pub vertex: Vertex,
    pub counts: Vec<u64>,
}

/// Row of `gamma` against `code`: how many codewords lie at each distance.
pub fn outer_row(gamma: &Vertex, code: &Code) -> Result<OuterRow> {
    if gamma.len() != code.m() || gamma.entries().iter().any(|&e| e >= code.q()) {
        return Err(Error::domain(format!(
            "vertex does not live in H({}, {})",
            code.m(),
            code.q()
        )));
    }
    let mut counts = vec![0u64; code.m() + 1];
    for word in code.words() {
        counts[hamming_distance(gamma, word)?] += 1;
    }
    Ok(OuterRow {
        vertex: gamma.clone(),
        counts,
    })
}

/// Two vertices of one part whose rows differ, and the first distance
/// where they do.
#[derive(Debug, Clone)]
pub struct RegularityWitness {
    pub part: usize,
    pub first_differing_distance: usize,
    pub first: OuterRow,
    pub second: OuterRow,
}

/// Outcome of the s-regularity computation.
#[derive(Debug, Clone)]
pub struct RegularityVerdict {
    /// Largest `s` with constant rows on `C_0, ..., C_s`; `None` when even
    /// the codewords disagree.
    pub level: Option<usize>,
    pub covering_radius: usize,
    /// The shared row of each uniform part, indexed by part.
    pub shared_rows: Vec<Vec<u64>>,
    pub witness: Option<RegularityWitness>,
}

impl RegularityVerdict {
    pub fn is_completely_regular(&self) -> bool {
        self.level == Some(self.covering_radius)
    }
}

/// Computes the s-regularity level of a code.
pub fn s_regularity_level(code: &Code) -> Result<RegularityVerdict> {
    let partition = code.distance_partition()?;
    let rho = partition.rho();
    let mut shared_rows = Vec::new();
    let mut level = None;
    for part in 0..=rho {
        let mut first: Option<OuterRow> = None;
        let mut witness = None;
        for encoded in partition.part_encoded(part) {
            let vertex = Vertex::decode(encoded, code.m(), code.q());
            let row = outer_row(&vertex, code)?;
            match &first {
                None => first = Some(row),
                Some(reference) => {
                    if reference.counts != row.counts {
                        let k = reference
                            .counts
                            .iter()
                            .zip(&row.counts)
                            .position(|(a, b)| a != b)
                            .expect("rows differ");
                        witness = Some(RegularityWitness {
                            part,
                            first_differing_distance: k,
                            first: reference.clone(),
                            second: row,
                        });
                        break;
                    }
                }
            }
        }
        if let Some(witness) = witness {
            return Ok(RegularityVerdict {
                level,
                covering_radius: rho,
                shared_rows,
                witness: Some(witness),
            });
        }
        shared_rows.push(first.expect("parts are non-empty").counts);
        level = Some(part);
    }
    Ok(RegularityVerdict {
        level,
        covering_radius: rho,
        shared_rows,
        witness: None,
    })
}

/// True when every part of the distance partition has constant rows.
pub fn is_completely_regular(code: &Code) -> Result<bool> {
    Ok(s_regularity_level(code)?.is_completely_regular())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::rep_code;

    fn v(word: &str) -> Vertex {
        Vertex::new(word.bytes().map(|b| b - b'0').collect())
    }

    #[test]
    fn outer_row_examples() {
        let rep = rep_code(6, 2).unwrap();
        // A codeword sees itself at distance zero.
        let row = outer_row(&Vertex::zero(6), &rep).unwrap();
        assert_eq!(row.counts[0], 1);
        // A weight-2 vertex sees the two constant words at distances 2 and 4.
        let row = outer_row(&v("110000"), &rep).unwrap();
        let mut expected = vec![0u64; 7];
        expected[2] = 1;
        expected[4] = 1;
        assert_eq!(row.counts, expected);
        // Row sums equal the code size.
        for code in [rep, Code::from_strs(4, 3, &["0000", "1110", "2221"]).unwrap()] {
            for encoded in 0..9u64 {
                let vert = Vertex::decode(encoded, code.m(), code.q());
                let row = outer_row(&vert, &code).unwrap();
                assert_eq!(row.counts.iter().sum::<u64>(), code.len() as u64);
            }
        }
    }

    #[test]
    fn repetition_codes_are_completely_regular() {
        for m in 2..=8 {
            let code = rep_code(m, 2).unwrap();
            let verdict = s_regularity_level(&code).unwrap();
            assert_eq!(verdict.level, Some(m / 2), "m = {m}");
            assert!(verdict.is_completely_regular());
            assert!(is_completely_regular(&code).unwrap());
        }
    }

    #[test]
    fn short_pair_code_is_zero_regular_only() {
        let code = Code::from_strs(5, 2, &["00000", "11000"]).unwrap();
        let verdict = s_regularity_level(&code).unwrap();
        assert_eq!(verdict.level, Some(0));
        assert!(!verdict.is_completely_regular());
        let witness = verdict.witness.expect("fails at part 1");
        assert_eq!(witness.part, 1);
        assert_ne!(witness.first.counts, witness.second.counts);
    }

    #[test]
    fn full_vertex_set_is_completely_regular() {
        let code = Code::full_space(3, 2).unwrap();
        let verdict = s_regularity_level(&code).unwrap();
        assert_eq!(verdict.covering_radius, 0);
        assert!(verdict.is_completely_regular());
    }

    #[test]
    fn single_vertex_codes_are_completely_regular() {
        for m in 1..=4 {
            for q in 2..=3u8 {
                let code = Code::new(m, q, vec![Vertex::zero(m)]).unwrap();
                assert!(is_completely_regular(&code).unwrap(), "m={m} q={q}");
            }
        }
    }

    #[test]
    fn witness_rows_really_differ_in_the_named_entry() {
        let code = Code::from_strs(4, 2, &["0000", "0011", "1111"]).unwrap();
        let verdict = s_regularity_level(&code).unwrap();
        if let Some(witness) = verdict.witness {
            let k = witness.first_differing_distance;
            assert_ne!(witness.first.counts[k], witness.second.counts[k]);
            for earlier in 0..k {
                assert_eq!(witness.first.counts[earlier], witness.second.counts[earlier]);
            }
        }
    }
}
