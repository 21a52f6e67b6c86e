//! Census of the corner-product invariant over semiprimes.
//!
//! For each squarefree semiprime `m = p * q` the invariant
//! `theta = 2 * rho * sigma - 1` (with `rho`, `sigma` the standard witness
//! pair of `(p, q)`) is computed from the closed form and compared against
//! the growth bound `theta <= m^(1/2 + gamma)` — exactly, in big-integer
//! arithmetic, with `gamma` an exact rational.
//!
//! Enumeration is ascending in `m` and the records are computed into a
//! pre-sorted vector, so output is byte-identical regardless of how many
//! worker threads do the arithmetic.

use num_bigint::BigUint;
use rayon::prelude::*;
use semicyclo::arith::sieve_primes;
use semicyclo::BinaryPair;
use serde::Serialize;

/// One semiprime's census entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    /// The semiprime `p * q`.
    pub m: u64,
    /// Smaller prime factor.
    pub p: u64,
    /// Larger prime factor.
    pub q: u64,
    /// The invariant `2 * rho * sigma - 1`.
    pub theta: u64,
    /// Whether `theta <= m^(1/2 + gamma)` for the gamma of this run.
    pub within_bound: bool,
}

/// An exact non-negative rational exponent offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gamma {
    /// Numerator.
    pub numer: u64,
    /// Denominator (positive).
    pub denom: u64,
}

impl std::fmt::Display for Gamma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Parse `"a/b"` (or a bare integer `"a"`) into an exact rational.
pub fn parse_gamma(s: &str) -> Result<Gamma, String> {
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let numer: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("invalid gamma numerator {a:?} (expected a/b)"))?;
    let denom: u64 = b
        .trim()
        .parse()
        .map_err(|_| format!("invalid gamma denominator {b:?} (expected a/b)"))?;
    if denom == 0 {
        return Err("gamma denominator must be positive".to_string());
    }
    Ok(Gamma { numer, denom })
}

/// Exact check of `theta <= m^(1/2 + gamma)`, done as
/// `theta^(2b) <= m^(b + 2a)` in non-negative big integers.
pub fn within_bound(theta: u64, m: u64, gamma: Gamma) -> bool {
    let lhs = BigUint::from(theta).pow(2 * gamma.denom as u32);
    let rhs = BigUint::from(m).pow((gamma.denom + 2 * gamma.numer) as u32);
    lhs <= rhs
}

/// All products of two distinct primes `p < q` with `p * q <= max`,
/// ascending in the product.
pub fn semiprimes(max: u64) -> Vec<(u64, u64)> {
    let primes = sieve_primes(max / 2);
    let mut pairs = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if p * p >= max {
            break;
        }
        for &q in &primes[i + 1..] {
            if p * q > max {
                break;
            }
            pairs.push((p, q));
        }
    }
    pairs.sort_by_key(|&(p, q)| (p * q, p));
    pairs
}

/// Run the census for every semiprime up to `max`.
///
/// Uses the ambient rayon thread pool; the result order is fixed by the
/// ascending-`m` enumeration, not by scheduling.
pub fn census(max: u64, gamma: Gamma) -> Vec<CensusRecord> {
    semiprimes(max)
        .into_par_iter()
        .map(|(p, q)| {
            let pair = BinaryPair::new(p, q).expect("distinct primes are coprime");
            let m = p * q;
            let theta = pair.theta();
            CensusRecord { m, p, q, theta, within_bound: within_bound(theta, m, gamma) }
        })
        .collect()
}
