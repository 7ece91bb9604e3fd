//! Built-in codes and groups used by the worked verification cases.
//!
//! The projective groups act on the projective line over `F_5` or `F_7`
//! with the points labelled `(infinity, 0, 1, ..., q-1)` as `0, 1, ...`;
//! the labelling is fixed here once and for all, and every verified
//! quantity (orders, orbit sizes, design parameters) is independent of it.

use crate::error::Result;
use crate::group::PermGroup;
use crate::hamming::{Code, Vertex};
use crate::perm::Permutation;
use crate::wreath::{AutSubgroup, WreathElement};
use crate::Budget;

/// The repetition code: the `q` constant words of `H(m, q)`.
pub fn rep_code(m: usize, q: u8) -> Result<Code> {
    let words = (0..q).map(|a| Vertex::constant(m, a)).collect();
    Code::new(m, q, words)
}

/// The order-2 automorphism of `H(m, 2)` flipping every bit.
pub fn diagonal_flip(m: usize) -> WreathElement {
    WreathElement::diagonal(m, Permutation::transposition(2, 0, 1).expect("q = 2"))
}

/// The copy of `S_m` inside `Aut(H(m, 2))` in which odd coordinate
/// permutations additionally flip every bit. It stabilizes the binary
/// repetition code, meets the base group trivially, and the stabilizer of
/// the zero word is the even half.
pub fn rep_transitive_group(m: usize) -> Result<AutSubgroup> {
    let flip = Permutation::transposition(2, 0, 1)?;
    let lift = |sigma: Permutation| -> Result<WreathElement> {
        let alphabet = if sigma.is_odd() {
            vec![flip.clone(); m]
        } else {
            vec![Permutation::identity(2); m]
        };
        WreathElement::new(alphabet, sigma)
    };
    let mut gens = vec![lift(Permutation::transposition(m, 0, 1)?)?];
    if m >= 3 {
        let cycle: Vec<usize> = (0..m).collect();
        gens.push(lift(Permutation::from_cycles(m, &[cycle])?)?);
    }
    AutSubgroup::new(m, 2, gens)
}

/// `PSL(2, 5)` acting on the 6 points of the projective line over `F_5`,
/// generated by `x -> x + 1` and `x -> -1/x`.
pub fn psl_2_5() -> PermGroup {
    PermGroup::from_generators(
        6,
        vec![
            Permutation::from_cycles(6, &[vec![1, 2, 3, 4, 5]]).unwrap(),
            Permutation::from_cycles(6, &[vec![0, 1], vec![2, 5]]).unwrap(),
        ],
    )
    .unwrap()
}

/// `PGL(2, 5)` on the same 6 points: `PSL(2, 5)` extended by `x -> 2x`.
pub fn pgl_2_5() -> PermGroup {
    let mut gens = psl_2_5().generators().to_vec();
    gens.push(Permutation::from_cycles(6, &[vec![2, 3, 5, 4]]).unwrap());
    PermGroup::from_generators(6, gens).unwrap()
}

/// `PSL(2, 7)` acting on the 8 points of the projective line over `F_7`.
pub fn psl_2_7() -> PermGroup {
    PermGroup::from_generators(
        8,
        vec![
            Permutation::from_cycles(8, &[vec![1, 2, 3, 4, 5, 6, 7]]).unwrap(),
            Permutation::from_cycles(8, &[vec![0, 1], vec![2, 7], vec![3, 4], vec![5, 6]])
                .unwrap(),
        ],
    )
    .unwrap()
}

/// `PGL(2, 7)` on the same 8 points: `PSL(2, 7)` extended by `x -> 3x`.
pub fn pgl_2_7() -> PermGroup {
    let mut gens = psl_2_7().generators().to_vec();
    gens.push(Permutation::from_cycles(8, &[vec![2, 4, 3, 7, 5, 6]]).unwrap());
    PermGroup::from_generators(8, gens).unwrap()
}

/// The subgroup of `Aut(H(6, 2))` consisting of the coordinate copy of
/// `PSL(2, 5)` together with the flip composed with each coordinate
/// permutation from `PGL(2, 5) \ PSL(2, 5)`. It has order 120, stabilizes
/// the repetition code, and fails to be transitive on the weight-3 part of
/// its distance partition.
pub fn twisted_pgl25() -> AutSubgroup {
    let mut gens: Vec<WreathElement> = psl_2_5()
        .generators()
        .iter()
        .map(|p| WreathElement::from_coord_perm(p.clone(), 2))
        .collect();
    let outer = Permutation::from_cycles(6, &[vec![2, 3, 5, 4]]).unwrap();
    gens.push(diagonal_flip(6).then(&WreathElement::from_coord_perm(outer, 2)));
    AutSubgroup::new(6, 2, gens).unwrap()
}

/// Explicit 120-element listing of [`twisted_pgl25`]: the even half is the
/// coordinate `PSL(2, 5)`, the other half carries the global flip.
pub fn twisted_pgl25_elements() -> Vec<WreathElement> {
    let budget = Budget::default();
    let psl = psl_2_5();
    let psl_elements = psl.elements(&budget).expect("order 60");
    let flip = diagonal_flip(6);
    let mut elements = Vec::with_capacity(120);
    for sigma in pgl_2_5().elements(&budget).expect("order 120") {
        if psl.contains(&sigma).expect("same degree") {
            elements.push(WreathElement::from_coord_perm(sigma, 2));
        } else {
            elements.push(flip.then(&WreathElement::from_coord_perm(sigma, 2)));
        }
    }
    debug_assert_eq!(psl_elements.len(), 60);
    elements
}
