//! Verification toolkit for codes in Hamming graphs.
//!
//! The crate computes distance and regularity structure of codes in the
//! Hamming graph `H(m, q)`, checks symmetry properties (neighbour and
//! complete transitivity, homogeneity) of automorphism subgroups, verifies
//! design structure of weight classes, and produces exact-rational
//! nonexistence certificates for completely regular codes from Krawtchouk
//! and MacWilliams feasibility systems.
//!
//! All arithmetic is exact: group orders are big integers, distance
//! distributions and feasibility systems use arbitrary-precision rationals,
//! and the bound checks are log-free integer comparisons.
//!
//! ```
//! use crcodes::constructions::{rep_code, rep_transitive_group};
//! use crcodes::transitivity::neighbour_transitivity_level;
//! use crcodes::Budget;
//!
//! let code = rep_code(6, 2)?;
//! assert_eq!(code.min_distance()?, 6);
//! assert_eq!(code.distance_partition()?.sizes(), &[2, 12, 30, 20]);
//!
//! let group = rep_transitive_group(6)?;
//! let verdict = neighbour_transitivity_level(&code, &group, &Budget::default())?;
//! assert!(verdict.is_completely_transitive());
//! # Ok::<(), crcodes::Error>(())
//! ```

pub mod budget;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod feasibility;
pub mod group;
pub mod hamming;
pub mod nonexist;
pub mod perm;
pub mod regularity;
pub mod spectra;
pub mod theorems;
pub mod transitivity;
pub mod wreath;

pub use budget::Budget;
pub use designs::Design;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use hamming::{Code, DistanceDistribution, DistancePartition, Vertex};
pub use perm::Permutation;
pub use wreath::{AutSubgroup, WreathElement};
