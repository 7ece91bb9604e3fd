//! Enumeration budgets.
//!
//! Every operation that walks a combinatorial space checks the relevant
//! budget up front and returns [`Error::Resource`](crate::Error::Resource)
//! instead of starting a computation that cannot finish. The defaults cover
//! every built-in instance with room to spare; callers with bigger inputs
//! can raise them explicitly.

/// Limits for the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of Hamming-graph vertices (`q^m`) a distance
    /// partition may visit.
    pub max_vertices: u64,
    /// Maximum number of k-subsets enumerated by subset-orbit operations.
    pub max_subsets: u64,
    /// Maximum number of ordered tuples enumerated by transitivity tests.
    pub max_tuples: u64,
    /// Maximum orbit length for orbit/stabilizer constructions.
    pub max_orbit: u64,
    /// Maximum number of codeword pairs scanned by distance statistics.
    pub max_pairs: u64,
    /// Maximum group order for exhaustive element listings.
    pub max_elements: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 1 << 24,
            max_subsets: 1_000_000,
            max_tuples: 1_000_000,
            max_orbit: 1_000_000,
            max_pairs: 1 << 26,
            max_elements: 1_000_000,
        }
    }
}

impl Budget {
    /// Budget with every limit set to `n`. Handy in tests.
    pub fn uniform(n: u64) -> Self {
        Budget {
            max_vertices: n,
            max_subsets: n,
            max_tuples: n,
            max_orbit: n,
            max_pairs: n,
            max_elements: n,
        }
    }
}
