//! Scalar number theory: factorization, multiplicative functions, Bezout
//! data, binomial coefficients, Bernoulli numbers, and power sums.
//!
//! Everything here is exact.  Integer results use [`BigInt`] where they can
//! outgrow machine words; rational results use [`BigRational`], which is kept
//! in lowest terms with a positive denominator by construction.  No floating
//! point is used anywhere in this crate.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, with primes in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.n
    }

    /// The `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    /// True when no prime occurs with exponent ≥ 2.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Product of the distinct primes (the squarefree kernel).
    pub fn squarefree_kernel(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// All positive divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factor `n` by trial division.
///
/// Intended for the desk-scale arguments used throughout this crate
/// (n well below 2^32, where trial division is instantaneous).
///
/// Errors with [`Error::ZeroArgument`] when `n == 0`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "factorize argument" });
    }
    let mut remaining = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= remaining {
        if remaining.is_multiple_of(p) {
            let mut e = 0u32;
            while remaining.is_multiple_of(p) {
                remaining /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if remaining > 1 {
        factors.push((remaining, 1));
    }
    Ok(Factorization { n, factors })
}

/// Mobius function: 0 when `n` has a squared prime factor, else
/// (−1)^(number of prime factors).
///
/// Errors with [`Error::ZeroArgument`] when `n == 0`.
pub fn mobius(n: u64) -> Result<i32> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.num_primes() % 2 == 0 { 1 } else { -1 })
}

/// Euler totient: the count of `1 ≤ k ≤ n` coprime to `n`.
///
/// Errors with [`Error::ZeroArgument`] when `n == 0`.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let mut phi = n;
    for &(p, _) in f.factors() {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(|a|, |b|) > 0`.
///
/// Errors with [`Error::ExtendedGcdZeroZero`] when both arguments are zero.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::ExtendedGcdZeroZero);
    }
    // Iterate on i128 so intermediate products never overflow for any i64 input.
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    Ok((r0 as i64, x0 as i64, y0 as i64))
}

/// Inverse of `a` modulo `m`, reduced to `[0, m)`.
///
/// For `m == 1` the unique residue `0` is returned.  Errors with
/// [`Error::NotCoprime`] when `gcd(a, m) > 1` and [`Error::ZeroArgument`]
/// when `m == 0`.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument { what: "modulus" });
    }
    if m == 1 {
        return Ok(0);
    }
    let a_red = a % m;
    let (g, x, _) = extended_gcd(a_red as i64, m as i64)?;
    if g != 1 {
        return Err(Error::NotCoprime { p: a, q: m, gcd: g as u64 });
    }
    Ok(x.rem_euclid(m as i64) as u64)
}

/// Binomial coefficient `C(n, k)`, with the total convention `C(n, k) = 0`
/// for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Multinomial coefficient `n! / (parts[0]! * parts[1]! * ...)`.
///
/// # Panics
///
/// Panics when the parts do not sum to `n`; that is a caller bug, not an
/// input-data condition.
pub fn multinomial(n: u64, parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    assert_eq!(total, n, "multinomial parts {parts:?} must sum to {n}");
    let mut remaining = n;
    let mut acc = BigInt::one();
    for &part in parts {
        acc *= binomial(remaining, part);
        remaining -= part;
    }
    acc
}

/// Primes up to and including `limit`, by sieve of Eratosthenes.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut multiple = p * p;
            while multiple <= n {
                composite[multiple] = true;
                multiple += p;
            }
        }
    }
    primes
}

// Append-only Bernoulli cache.  Concurrent readers share the read lock;
// extension takes the write lock and only ever pushes, so cached prefixes
// are immutable once published.
static BERNOULLI_CACHE: LazyLock<RwLock<Vec<BigRational>>> =
    LazyLock::new(|| RwLock::new(vec![BigRational::one()]));

/// Bernoulli numbers `B_0 .. B_m` inclusive.
///
/// Sign convention: `B_1 = -1/2` (the convention under which the power-sum
/// expansion in [`power_sum`] counts `0^j + 1^j + ... + (n-1)^j`).  All other
/// odd-index values are zero.
///
/// Values come from the defining recurrence
/// `sum_{j=0}^{n} C(n+1, j) * B_j = 0` for `n ≥ 1`, seeded with `B_0 = 1`,
/// and are memoized in a process-wide append-only cache, so repeated calls
/// never recompute an index.
pub fn bernoulli_upto(m: usize) -> Vec<BigRational> {
    {
        let cache = BERNOULLI_CACHE.read().unwrap();
        if cache.len() > m {
            return cache[..=m].to_vec();
        }
    }
    let mut cache = BERNOULLI_CACHE.write().unwrap();
    while cache.len() <= m {
        let n = cache.len();
        let mut acc = BigRational::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += BigRational::from_integer(binomial(n as u64 + 1, j as u64)) * b;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(n + 1));
        cache.push(next);
    }
    cache[..=m].to_vec()
}

/// The single Bernoulli number `B_m` (convention `B_1 = -1/2`).
pub fn bernoulli(m: usize) -> BigRational {
    bernoulli_upto(m).pop().expect("bernoulli_upto returns m+1 values")
}

/// Power sum `S_j(n) = 0^j + 1^j + ... + (n-1)^j`, with `0^0 = 1`.
///
/// Evaluated through the Bernoulli expansion
/// `S_j(n) = (1/(j+1)) * sum_{i=0}^{j} C(j+1, i) * B_i * n^(j+1-i)`,
/// exactly in rational arithmetic.
///
/// # Panics
///
/// Panics if the expansion fails to produce a non-negative integer, which
/// would indicate an arithmetic bug rather than bad input.
pub fn power_sum(j: u32, n: u64) -> BigInt {
    let bs = bernoulli_upto(j as usize);
    let n_big = BigInt::from(n);
    let mut acc = BigRational::zero();
    for (i, b) in bs.iter().enumerate() {
        let power = n_big.pow(j + 1 - i as u32);
        acc += BigRational::from_integer(binomial(j as u64 + 1, i as u64) * power) * b;
    }
    acc /= BigRational::from_integer(BigInt::from(j + 1));
    assert!(
        acc.is_integer() && !acc.is_negative(),
        "power_sum({j}, {n}) evaluated to non-integral or negative {acc}"
    );
    acc.to_integer()
}
