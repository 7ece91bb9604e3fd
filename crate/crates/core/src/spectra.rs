//! Krawtchouk polynomials, the MacWilliams transform, and the arithmetic
//! bounds used to rule parameter sets in or out.
//!
//! Everything here is exact: Krawtchouk values are big integers, the
//! transform works on arbitrary-precision rationals, and the bound checks
//! are stated in their log-free integer forms so that a verdict is a pure
//! big-integer comparison.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Krawtchouk polynomial value
/// `K_k(x) = sum_j (-1)^j C(x, j) C(m-x, k-j) (q-1)^{k-j}`.
///
/// ```
/// # use crcodes::spectra::krawtchouk;
/// // K_1(x) = m - 2x over the binary alphabet.
/// assert_eq!(krawtchouk(16, 2, 1, 5)?, 6.into());
/// assert_eq!(krawtchouk(16, 2, 2, 8)?, (-8).into());
/// # Ok::<(), crcodes::Error>(())
/// ```
pub fn krawtchouk(m: u64, q: u8, k: u64, x: u64) -> Result<BigInt> {
    if k > m || x > m {
        return Err(Error::domain(format!(
            "krawtchouk arguments k={k}, x={x} out of range for m={m}"
        )));
    }
    let qm1 = BigInt::from(q as u64 - 1);
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = binomial(x, j) * binomial(m - x, k - j) * qm1.pow((k - j) as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// MacWilliams transform of a distance distribution:
/// `a'_k = sum_i a_i K_k(i)`. For the distribution of an actual code every
/// entry of the transform is non-negative.
pub fn macwilliams_transform(values: &[BigRational], q: u8) -> Result<Vec<BigRational>> {
    if values.is_empty() {
        return Err(Error::domain("empty distribution".to_string()));
    }
    let m = (values.len() - 1) as u64;
    let mut transform = Vec::with_capacity(values.len());
    for k in 0..=m {
        let mut total = BigRational::zero();
        for (i, value) in values.iter().enumerate() {
            total += value * BigRational::from_integer(krawtchouk(m, q, k, i as u64)?);
        }
        transform.push(total);
    }
    Ok(transform)
}

/// Sphere-packing check: with `e = (delta - 1) / 2`, a code of the given
/// size and minimum distance must satisfy
/// `size * sum_{i<=e} C(m, i) (q-1)^i <= q^m`.
pub fn sphere_packing_ok(m: u64, q: u8, delta: u64, size: &BigUint) -> Result<bool> {
    if delta < 1 {
        return Err(Error::domain("minimum distance must be positive".to_string()));
    }
    let e = (delta - 1) / 2;
    let mut ball = BigUint::zero();
    let qm1 = BigUint::from(q as u64 - 1);
    for i in 0..=e.min(m) {
        ball += binomial(m, i).to_biguint().expect("binomial is positive") * qm1.pow(i as u32);
    }
    Ok(size * ball <= BigUint::from(q as u64).pow(m as u32))
}

/// True when `r = p^f` for a prime `p`; returns `(p, f)`.
pub fn prime_power(r: u64) -> Option<(u64, u32)> {
    if r < 2 {
        return None;
    }
    let mut p = r;
    let mut candidate = 2;
    while candidate * candidate <= r {
        if r.is_multiple_of(candidate) {
            p = candidate;
            break;
        }
        candidate += 1;
    }
    let mut remaining = r;
    let mut exponent = 0;
    while remaining.is_multiple_of(p) {
        remaining /= p;
        exponent += 1;
    }
    if remaining == 1 {
        Some((p, exponent))
    } else {
        None
    }
}

pub fn is_prime(r: u64) -> bool {
    matches!(prime_power(r), Some((_, 1)))
}

/// Order of `PGammaL(n, r)` for a prime power `r = p^f`:
/// `f * r^{n(n-1)/2} * prod_{i=2..n} (r^i - 1)`.
pub fn pgammal_order(n: u32, r: u64) -> Result<BigUint> {
    let (_, f) = prime_power(r)
        .ok_or_else(|| Error::domain(format!("{r} is not a prime power")))?;
    let rb = BigUint::from(r);
    let mut order = BigUint::from(f) * rb.pow(n * (n - 1) / 2);
    for i in 2..=n {
        order *= rb.pow(i) - BigUint::one();
    }
    Ok(order)
}

/// Length constraints satisfiable by a completely transitive code with
/// minimum distance at least 5, a faithful entry action and a 2-transitive
/// entry group not containing the alternating group: binary codes need
/// `m >= 10`, ternary codes `8 <= m <= 24`, and no larger alphabet occurs.
pub fn length_constraints_ok(q: u8, m: u64) -> bool {
    match q {
        2 => m >= 10,
        3 => (8..=24).contains(&m),
        _ => false,
    }
}

/// Feasibility of an affine entry group `AGL(n, r)` (so `m = r^n`, `r`
/// prime) against the orbit-counting bound, in the log-free integer form
/// `q^{r^n} <= r^{n^2 + 2n}`, under the standing length constraints.
pub fn affine_bound_feasible(r: u64, n: u32, q: u8) -> Result<bool> {
    if !is_prime(r) {
        return Err(Error::domain(format!("{r} is not prime")));
    }
    if n < 1 || q < 2 {
        return Err(Error::domain("need n >= 1 and q >= 2".to_string()));
    }
    let m = r.pow(n);
    if !length_constraints_ok(q, m) {
        return Ok(false);
    }
    let lhs = BigUint::from(q as u64).pow(m as u32);
    let rhs = BigUint::from(r).pow(n * n + 2 * n);
    Ok(lhs <= rhs)
}

/// Feasibility of a projective entry group between `PSL(n, r)` and
/// `PGammaL(n, r)` (so `m = (r^n - 1)/(r - 1)`, `r` a prime power)
/// against the orbit-counting bound `q^m / (m+1) <= |PGammaL(n, r)|` in
/// integer form, under the standing length constraints.
pub fn psl_bound_feasible(n: u32, r: u64, q: u8) -> Result<bool> {
    if n < 2 {
        return Err(Error::domain("need n >= 2".to_string()));
    }
    if prime_power(r).is_none() {
        return Err(Error::domain(format!("{r} is not a prime power")));
    }
    let m = (r.pow(n) - 1) / (r - 1);
    if !length_constraints_ok(q, m) {
        return Ok(false);
    }
    let lhs = if q == 2 {
        BigUint::one() << m
    } else {
        BigUint::from(q as u64).pow(m as u32)
    };
    let rhs = BigUint::from(m + 1) * pgammal_order(n, r)?;
    Ok(lhs <= rhs)
}
