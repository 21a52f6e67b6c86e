//! Identity verification along independent computation paths.
//!
//! Each function here computes one mathematical identity in two or more ways
//! that share as little code as possible — set-theoretic vs. generating-
//! function vs. closed-form routes — and reports both sides, so a test or a
//! verification run can confirm they agree (or see exactly where they do
//! not).  Nothing in this module trusts the equality it is checking.
//!
//! The central statement is that for a coprime pair `p, q ≥ 2` the semigroup
//! polynomial of the two-generated semigroup equals the pair's
//! inclusion-exclusion polynomial.  Around it sit coefficient closed forms,
//! gap power sums, Bernoulli-number recursions, summation identities over
//! gaps, block counts, and corner censuses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{bernoulli_upto, binomial, multinomial};
use crate::cyclo::BinaryPair;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::semigroup::{denumerant_table, NumericalSemigroup};

/// One exponent where the three polynomial routes disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMismatch {
    /// The exponent in question.
    pub exponent: usize,
    /// Coefficient from the gap-set route.
    pub gap_route: BigInt,
    /// Coefficient from the denumerant partial-sum route.
    pub denumerant_route: BigInt,
    /// Coefficient from the subset-quotient route.
    pub quotient_route: BigInt,
}

/// The pair polynomial computed three independent ways, with any
/// coefficient-level disagreements.
#[derive(Debug, Clone)]
pub struct FolkloreReport {
    /// The pair under test.
    pub pair: BinaryPair,
    /// `1 + (x - 1) * sum of x^s over gaps`, from the Apery-set membership.
    pub gap_route: IntPoly,
    /// `x^pq + (1 - x) * sum of x^j over represented j < pq`, using the fact
    /// that below `pq` every representation count is 0 or 1.
    pub denumerant_route: IntPoly,
    /// The inclusion-exclusion subset quotient.
    pub quotient_route: IntPoly,
    /// Exponents where the routes differ; empty when the identity holds.
    pub mismatches: Vec<CoeffMismatch>,
}

impl FolkloreReport {
    /// True when all three routes agree coefficient-for-coefficient.
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compute the pair polynomial by three routes and compare them.
///
/// # Panics
///
/// Panics if some representation count below `pq` exceeds 1, which would
/// contradict the two-generator denumerant structure and indicates a bug.
pub fn folklore_check(pair: &BinaryPair) -> FolkloreReport {
    let (p, q) = (pair.p(), pair.q());
    let pq = (p * q) as usize;

    let gap_route = pair.semigroup().semigroup_polynomial();

    let table =
        denumerant_table(pq as i64 - 1, &[p, q]).expect("pair denumerant table stays in bounds");
    let mut coeffs = vec![BigInt::zero(); pq + 2];
    coeffs[pq] += BigInt::one();
    for (j, count) in table.iter().enumerate() {
        assert!(
            count.is_zero() || count.is_one(),
            "representation count below pq must be 0 or 1, got {count} at {j}"
        );
        if count.is_one() {
            coeffs[j] += BigInt::one();
            coeffs[j + 1] -= BigInt::one();
        }
    }
    let denumerant_route = IntPoly::from_coeffs(coeffs);

    let quotient_route = pair.inclusion_exclusion();

    let mut mismatches = Vec::new();
    for k in 0..=pq {
        let a = gap_route.coefficient(k);
        let d = denumerant_route.coefficient(k);
        let c = quotient_route.coefficient(k);
        if !(a == d && d == c) {
            mismatches.push(CoeffMismatch {
                exponent: k,
                gap_route: a,
                denumerant_route: d,
                quotient_route: c,
            });
        }
    }
    FolkloreReport { pair: *pair, gap_route, denumerant_route, quotient_route, mismatches }
}

/// Representation count of `n` over a coprime pair by the fractional-part
/// closed form
/// `r(n) = n/pq - frac(rho*n / q) - frac(sigma*n / p) + 1`,
/// evaluated in exact rational arithmetic.
///
/// # Panics
///
/// Panics if the expression fails to be a non-negative integer, which would
/// indicate an arithmetic bug.
pub fn denumerant_closed_form(pair: &BinaryPair, n: u64) -> u64 {
    let (p, q) = (pair.p(), pair.q());
    let alpha = (n as u128 * pair.rho() as u128 % q as u128) as u64;
    let beta = (n as u128 * pair.sigma() as u128 % p as u128) as u64;
    let r = BigRational::new(BigInt::from(n), BigInt::from(p * q))
        - BigRational::new(BigInt::from(alpha), BigInt::from(q))
        - BigRational::new(BigInt::from(beta), BigInt::from(p))
        + BigRational::one();
    assert!(
        r.is_integer() && !r.is_negative(),
        "closed-form representation count for n={n} evaluated to {r}"
    );
    r.to_integer().to_u64().expect("desk-scale count fits u64")
}

/// A gap power sum computed along two routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterSums {
    /// The power.
    pub k: u32,
    /// Value from the Bernoulli double-sum closed form.
    pub formula: BigInt,
    /// Value from literally summing `s^k` over the gaps.
    pub brute: BigInt,
}

impl SylvesterSums {
    /// True when both routes agree.
    pub fn ok(&self) -> bool {
        self.formula == self.brute
    }
}

/// Sum of `s^k` over the gaps `s` of the pair's semigroup, via the exact
/// Bernoulli closed form and, independently, by direct summation.
///
/// The closed form works at order `m = k + 1`:
///
/// ```text
/// m * sigma_(m-1) = (1/(m+1)) * sum_{i=0}^{m} sum_{j=0}^{m-i}
///                     multinomial(m+1; i, j, m+1-i-j) * B_i * B_j
///                     * p^(m-j) * q^(m-i)
///                   - B_m
/// ```
///
/// with the `B_1 = -1/2` convention; the reindexing from `k` to `m` happens
/// only here, at the API boundary.
///
/// # Panics
///
/// Panics if the closed form fails to produce a non-negative integer.
pub fn sylvester_sum(pair: &BinaryPair, k: u32) -> SylvesterSums {
    let brute: BigInt =
        pair.semigroup().gaps().iter().map(|&s| BigInt::from(s).pow(k)).sum();

    let m = k + 1;
    let bs = bernoulli_upto(m as usize);
    let p = BigInt::from(pair.p());
    let q = BigInt::from(pair.q());
    let mut double = BigRational::zero();
    for i in 0..=m {
        for j in 0..=(m - i) {
            let weight = multinomial(
                m as u64 + 1,
                &[i as u64, j as u64, (m + 1 - i - j) as u64],
            );
            let powers = p.pow(m - j) * q.pow(m - i);
            double += BigRational::from_integer(weight * powers)
                * &bs[i as usize]
                * &bs[j as usize];
        }
    }
    let m_sigma = double / BigRational::from_integer(BigInt::from(m + 1)) - &bs[m as usize];
    let formula = m_sigma / BigRational::from_integer(BigInt::from(m));
    assert!(
        formula.is_integer() && !formula.is_negative(),
        "gap power sum closed form for k={k} evaluated to {formula}"
    );
    SylvesterSums { k, formula: formula.to_integer(), brute }
}

/// Bernoulli number `B_m` recovered from a coprime pair, by the recursion
///
/// ```text
/// B_t = t * sigma_(t-1) / (p^t - 1)
///     + q^t / (p * (1 - p^t))
///       * sum_{r=0}^{t-1} C(t, r) * (p/q)^r * B_r * S_(t-r)(p)
/// ```
///
/// bootstrapped from `B_0 = 1`.  The gap power sums `sigma` and the power
/// sums `S` are computed by direct summation here, so this path shares no
/// machinery with the recurrence behind [`bernoulli_upto`] — agreement of
/// the two is a genuine cross-check.
pub fn bernoulli_via_semigroup(m: u32, pair: &BinaryPair) -> BigRational {
    assert!(m >= 1, "the recursion produces B_m for m >= 1");
    let (p, q) = (pair.p(), pair.q());
    let gaps = pair.semigroup().gaps();

    // Literal power sum over [0, p); the j = 0 case never arises because
    // the recursion only needs exponents t - r >= 1.
    let naive_power_sum =
        |j: u32| -> BigInt { (0..p).map(|n| BigInt::from(n).pow(j)).sum() };

    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for t in 1..=m {
        let p_t = BigInt::from(p).pow(t);
        let sigma: BigInt = gaps.iter().map(|&s| BigInt::from(s).pow(t - 1)).sum();
        let gap_term =
            BigRational::new(BigInt::from(t) * sigma, &p_t - BigInt::one());
        let mut inner = BigRational::zero();
        for (r, b_r) in b.iter().enumerate() {
            let weight = binomial(t as u64, r as u64) * naive_power_sum(t - r as u32);
            let ratio =
                BigRational::new(BigInt::from(p).pow(r as u32), BigInt::from(q).pow(r as u32));
            inner += BigRational::from_integer(weight) * ratio * b_r;
        }
        let prefactor =
            BigRational::new(BigInt::from(q).pow(t), BigInt::from(p) * (BigInt::one() - p_t));
        b.push(gap_term + prefactor * inner);
    }
    b.pop().expect("recursion produced m + 1 values")
}

/// Both sides of the gap-telescoping summation identity, in both
/// orientations of the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuenterReport {
    /// `sum over gaps n of (f(n + p) - f(n))`.
    pub gap_side_p: BigInt,
    /// `sum_{n=1}^{p-1} (f(n*q) - f(n))`.
    pub multiple_side_p: BigInt,
    /// `sum over gaps n of (f(n + q) - f(n))`.
    pub gap_side_q: BigInt,
    /// `sum_{n=1}^{q-1} (f(n*p) - f(n))`.
    pub multiple_side_q: BigInt,
}

impl TuenterReport {
    /// True when both orientations balance.
    pub fn ok(&self) -> bool {
        self.gap_side_p == self.multiple_side_p && self.gap_side_q == self.multiple_side_q
    }
}

/// Evaluate the gap-telescoping identity for an arbitrary function given as
/// an explicit value table (`table[n]` is `f(n)`).
///
/// The table must cover `[0, F + max(p, q)]`, which is every argument either
/// orientation touches; shorter tables error with [`Error::IncompleteTable`]
/// naming the first missing argument.
pub fn tuenter_check(pair: &BinaryPair, table: &[BigInt]) -> Result<TuenterReport> {
    let (p, q) = (pair.p(), pair.q());
    let needed = pair.frobenius() as u64 + p.max(q);
    if (table.len() as u64) <= needed {
        return Err(Error::IncompleteTable { missing: table.len() as u64 });
    }
    let gaps = pair.semigroup().gaps();
    let gap_side = |shift: u64| -> BigInt {
        gaps.iter().map(|&n| &table[(n + shift) as usize] - &table[n as usize]).sum()
    };
    let multiple_side = |count: u64, factor: u64| -> BigInt {
        (1..count).map(|n| &table[(n * factor) as usize] - &table[n as usize]).sum()
    };
    Ok(TuenterReport {
        gap_side_p: gap_side(p),
        multiple_side_p: multiple_side(p, q),
        gap_side_q: gap_side(q),
        multiple_side_q: multiple_side(q, p),
    })
}

/// Both sides of the gap product identity
/// `prod over gaps n of (n + p) = q^(p-1) * prod over gaps n of n`.
pub fn tuenter_product_identity(pair: &BinaryPair) -> (BigInt, BigInt) {
    let p = pair.p();
    let gaps = pair.semigroup().gaps();
    let lhs = gaps.iter().fold(BigInt::one(), |acc, &n| acc * BigInt::from(n + p));
    let rhs = BigInt::from(pair.q()).pow(p as u32 - 1)
        * gaps.iter().fold(BigInt::one(), |acc, &n| acc * BigInt::from(n));
    (lhs, rhs)
}

/// All coefficients of the pair polynomial on `[0, pq)` by the membership
/// rule: `+1` where `k` is a member and `k - 1` is not, `-1` where `k` is a
/// gap and `k - 1` is a member, `0` otherwise.
///
/// Builds the semigroup once; use this for sweeps rather than calling
/// [`coefficient_from_membership`] per exponent.
pub fn membership_coefficients(pair: &BinaryPair) -> Vec<i32> {
    let s = pair.semigroup();
    let pq = pair.p() * pair.q();
    (0..pq as i64)
        .map(|k| match (s.contains(k), s.contains(k - 1)) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        })
        .collect()
}

/// Single-exponent variant of [`membership_coefficients`]; validates
/// `k < pq` and rebuilds the semigroup, so it is a convenience for spot
/// queries only.
pub fn coefficient_from_membership(pair: &BinaryPair, k: u64) -> Result<i32> {
    let pq = pair.p() * pair.q();
    if k >= pq {
        return Err(Error::OutOfRange {
            what: "coefficient index",
            value: k as i64,
            range: format!("[0, {pq})"),
        });
    }
    Ok(membership_coefficients(pair)[k as usize])
}

/// A polynomial's maximum exponent gap next to the value its structure
/// predicts for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxGapRecord {
    /// Maximum gap measured on the expanded polynomial.
    pub poly_gap: usize,
    /// The predicted value (`min(p, q) - 1` for a pair polynomial,
    /// `multiplicity - 1` for a semigroup polynomial).
    pub expected: u64,
}

impl MaxGapRecord {
    /// True when measurement and prediction agree.
    pub fn matches(&self) -> bool {
        self.poly_gap as u64 == self.expected
    }
}

/// Maximum gap of the pair's inclusion-exclusion polynomial, expected to be
/// `min(p, q) - 1`.
pub fn max_gap_of_pair(pair: &BinaryPair) -> MaxGapRecord {
    let poly_gap = pair
        .inclusion_exclusion()
        .max_gap()
        .expect("pair polynomial is non-zero");
    MaxGapRecord { poly_gap, expected: pair.p().min(pair.q()) - 1 }
}

/// Maximum gap of a semigroup polynomial, expected to be `m(S) - 1`.
pub fn max_gap_of_semigroup(s: &NumericalSemigroup) -> MaxGapRecord {
    let poly_gap =
        s.semigroup_polynomial().max_gap().expect("semigroup polynomial is non-zero");
    MaxGapRecord { poly_gap, expected: s.multiplicity() - 1 }
}

/// Counts of consecutive-run blocks among gaps and members, next to the
/// predicted `rho*sigma - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCounts {
    /// Number of maximal runs of consecutive gaps.
    pub gap_blocks: usize,
    /// Number of maximal runs of consecutive members below the Frobenius
    /// number.
    pub element_blocks: usize,
    /// The predicted count for both: `rho*sigma - 1`.
    pub expected: u64,
}

impl BlockCounts {
    /// True when both counts match the prediction.
    pub fn matches(&self) -> bool {
        self.gap_blocks as u64 == self.expected && self.element_blocks as u64 == self.expected
    }
}

/// Count gap and element blocks of the pair's semigroup.
pub fn block_counts(pair: &BinaryPair) -> BlockCounts {
    let blocks = pair.semigroup().blocks().expect("pair semigroups always have gaps");
    BlockCounts {
        gap_blocks: blocks.gap_blocks.len(),
        element_blocks: blocks.element_blocks.len(),
        expected: pair.rho() * pair.sigma() - 1,
    }
}

/// Census of `k` in `[0, F]` classified by membership of `k` and `k - 1`,
/// with the closed-form predictions for each class.
///
/// The first three classes have reliable closed forms.  The companion
/// closed form for the fourth class, `N - rho*sigma - 1`, disagrees with
/// direct enumeration (which gives `N - rho*sigma + 1` on every pair we have
/// checked); callers should treat that mismatch as a known discrepancy to
/// surface as a warning, not as a verification failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerCensus {
    /// `k` member, `k - 1` member.
    pub in_in: u64,
    /// `k` member, `k - 1` gap (or `k = 0`).
    pub in_out: u64,
    /// `k` gap, `k - 1` member.
    pub out_in: u64,
    /// `k` gap, `k - 1` gap.
    pub out_out: u64,
    /// `rho * sigma` for the pair.
    pub rho_sigma: u64,
    /// Genus of the pair's semigroup.
    pub genus: u64,
}

impl CornerCensus {
    /// Closed form for the member/member class: `N - rho*sigma + 1`.
    pub fn expected_in_in(&self) -> i64 {
        self.genus as i64 - self.rho_sigma as i64 + 1
    }

    /// Closed form for the member/gap class: `rho*sigma - 1`.
    pub fn expected_in_out(&self) -> i64 {
        self.rho_sigma as i64 - 1
    }

    /// Closed form for the gap/member class: `rho*sigma - 1`.
    pub fn expected_out_in(&self) -> i64 {
        self.rho_sigma as i64 - 1
    }

    /// The companion closed form for the gap/gap class,
    /// `N - rho*sigma - 1` — known to disagree with enumeration.
    pub fn claimed_out_out(&self) -> i64 {
        self.genus as i64 - self.rho_sigma as i64 - 1
    }

    /// True when the three reliable closed forms match the enumeration.
    pub fn first_three_match(&self) -> bool {
        self.in_in as i64 == self.expected_in_in()
            && self.in_out as i64 == self.expected_in_out()
            && self.out_in as i64 == self.expected_out_in()
    }

    /// True when the fourth closed form matches the enumeration (it does
    /// not, on any pair checked so far).
    pub fn fourth_matches_claim(&self) -> bool {
        self.out_out as i64 == self.claimed_out_out()
    }
}

/// Enumerate the census for a pair.
pub fn corner_census(pair: &BinaryPair) -> CornerCensus {
    let s = pair.semigroup();
    let mut counts = [0u64; 4];
    for k in 0..=pair.frobenius() {
        let index = match (s.contains(k), s.contains(k - 1)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        counts[index] += 1;
    }
    CornerCensus {
        in_in: counts[0],
        in_out: counts[1],
        out_in: counts[2],
        out_out: counts[3],
        rho_sigma: pair.rho() * pair.sigma(),
        genus: pair.genus(),
    }
}
