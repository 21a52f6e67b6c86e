//! Batch verification over families of coprime pairs.
//!
//! [`verify_pair`] runs every identity class this crate knows about for one
//! pair and returns one [`IdentityRecord`] per class, each carrying both
//! computed sides as strings so a reader can see what was compared, not just
//! that it matched.  [`coprime_pairs`] enumerates the standard test family.
//!
//! Statuses are three-valued: `PASS` and `FAIL` mean what they say, and
//! `WARN` marks the one known discrepancy — the companion closed form for
//! the gap/gap corner census count disagrees with direct enumeration by
//! exactly two on every pair checked, so that record warns instead of
//! failing while still printing both values.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::arith::bernoulli;
use crate::cyclo::{binary_coefficient, lam_leung_expand, BinaryPair};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::identities::{
    bernoulli_via_semigroup, block_counts, corner_census, denumerant_closed_form,
    folklore_check, max_gap_of_pair, membership_coefficients, sylvester_sum, tuenter_check,
    tuenter_product_identity,
};
use crate::poly::IntPoly;
use crate::semigroup::denumerant_table;

/// Outcome of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    /// Both sides agreed.
    Pass,
    /// A known discrepancy was reproduced; both sides are reported.
    Warn,
    /// The sides disagreed where they were expected to agree.
    Fail,
}

/// One identity checked on one pair, with both computed sides.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    /// Which identity class was checked.
    pub identity: String,
    /// First generator of the pair.
    pub p: u64,
    /// Second generator of the pair.
    pub q: u64,
    /// Outcome.
    pub status: Status,
    /// The side computed by the primary (usually set-theoretic) route.
    pub lhs: String,
    /// The side computed by the independent (closed-form or quotient) route.
    pub rhs: String,
}

/// All coprime pairs `2 <= p < q <= pmax`, ascending in `p` then `q`.
pub fn coprime_pairs(pmax: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for p in 2..=pmax {
        for q in (p + 1)..=pmax {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

/// Short description of a polynomial: degree, support size, maximum gap.
fn poly_digest(poly: &IntPoly) -> String {
    match poly.degree() {
        None => "zero".to_string(),
        Some(d) => format!(
            "deg={d} terms={} gap={}",
            poly.num_nonzero_terms(),
            poly.max_gap().expect("non-zero polynomial")
        ),
    }
}

/// Decimal rendering of a big integer, elided in the middle when long.
fn big_digest(value: &BigInt) -> String {
    let s = value.to_string();
    if s.len() <= 32 {
        s
    } else {
        format!("{}...{} ({} digits)", &s[..8], &s[s.len() - 8..], s.len())
    }
}

fn record(
    identity: impl Into<String>,
    pair: &BinaryPair,
    ok: bool,
    lhs: String,
    rhs: String,
) -> IdentityRecord {
    IdentityRecord {
        identity: identity.into(),
        p: pair.p(),
        q: pair.q(),
        status: if ok { Status::Pass } else { Status::Fail },
        lhs,
        rhs,
    }
}

/// Run every identity class for the pair `(p, q)`, checking gap power sums
/// for exponents `0..=kmax`.
///
/// Returns one record per identity class; errors only when the pair itself
/// is invalid (not coprime, or a generator below 2).
pub fn verify_pair(p: u64, q: u64, kmax: u32) -> Result<Vec<IdentityRecord>> {
    let pair = BinaryPair::new(p, q)?;
    let s = pair.semigroup();
    let pq = p * q;
    let rho_sigma = pair.rho() * pair.sigma();
    let mut records = Vec::new();

    // Three routes to the pair polynomial.
    let folklore = folklore_check(&pair);
    let rhs = if folklore.ok() {
        poly_digest(&folklore.quotient_route)
    } else {
        let m = &folklore.mismatches[0];
        format!(
            "first mismatch at x^{}: gaps={} denumerant={} quotient={}",
            m.exponent, m.gap_route, m.denumerant_route, m.quotient_route
        )
    };
    records.push(record(
        "folklore_three_routes",
        &pair,
        folklore.ok(),
        poly_digest(&folklore.gap_route),
        rhs,
    ));

    // Coefficient closed form vs. membership vs. two-block expansion, with
    // the signed support counts.
    let membership = membership_coefficients(&pair);
    let expansion = lam_leung_expand(&pair);
    let mut pointwise = true;
    for (k, &coeff) in membership.iter().enumerate() {
        let closed = binary_coefficient(&pair, k as u64).expect("k < pq");
        if closed != coeff || BigInt::from(coeff) != expansion.coefficient(k) {
            pointwise = false;
            break;
        }
    }
    let plus = membership.iter().filter(|&&c| c == 1).count() as u64;
    let minus = membership.iter().filter(|&&c| c == -1).count() as u64;
    let counts_ok = plus == rho_sigma && minus == rho_sigma - 1;
    records.push(record(
        "coefficient_closed_form",
        &pair,
        pointwise && counts_ok,
        format!("plus={plus} minus={minus} pointwise={pointwise}"),
        format!("plus={rho_sigma} minus={}", rho_sigma - 1),
    ));

    // Nonzero coefficients, read in exponent order, alternate in sign and
    // open and close with +1.
    let signs: Vec<i8> = expansion
        .nonzero_terms()
        .iter()
        .map(|(_, c)| if c.is_positive() { 1 } else { -1 })
        .collect();
    let alternating = !signs.is_empty()
        && signs[0] == 1
        && *signs.last().expect("non-empty") == 1
        && signs.windows(2).all(|w| w[0] != w[1]);
    records.push(record(
        "alternating_signs",
        &pair,
        alternating,
        format!("{} sign changes over {} terms", signs.len().saturating_sub(1), signs.len()),
        "strict alternation, +1 at both ends".to_string(),
    ));

    // Frobenius number and genus against their closed forms.
    let f_closed = (pq - p - q) as i64;
    let n_closed = (p - 1) * (q - 1) / 2;
    let structural_ok = s.frobenius() == f_closed
        && s.genus() == n_closed
        && pair.frobenius() == f_closed
        && pair.genus() == n_closed;
    records.push(record(
        "frobenius_genus_closed_forms",
        &pair,
        structural_ok,
        format!("F={} N={}", s.frobenius(), s.genus()),
        format!("F={f_closed} N={n_closed}"),
    ));

    // Maximum exponent gap of the pair polynomial.
    let gap_record = max_gap_of_pair(&pair);
    records.push(record(
        "max_gap_pair",
        &pair,
        gap_record.matches(),
        format!("max gap {}", gap_record.poly_gap),
        format!("min(p, q) - 1 = {}", gap_record.expected),
    ));

    // Symmetry three ways: reciprocity of the polynomial, the set test, and
    // the gap-count balance 2N = F + 1.
    let selfreciprocal = folklore.gap_route.is_selfreciprocal().expect("non-zero");
    let symmetric = s.is_symmetric();
    let balanced = 2 * s.genus() == (s.frobenius() + 1) as u64;
    records.push(record(
        "selfreciprocal_symmetric",
        &pair,
        selfreciprocal && symmetric && balanced,
        format!("selfreciprocal={selfreciprocal} set_test={symmetric}"),
        format!("2N={} F+1={}", 2 * s.genus(), s.frobenius() + 1),
    ));

    // Fractional-part closed form for representation counts on [0, 3pq),
    // plus the shift property r(n + pq) = r(n) + 1.
    let table = denumerant_table(3 * pq as i64 - 1, &[p, q]).expect("in bounds");
    let mut counts_match = true;
    let mut shift_holds = true;
    for n in 0..3 * pq {
        if BigInt::from(denumerant_closed_form(&pair, n)) != table[n as usize] {
            counts_match = false;
            break;
        }
    }
    for n in 0..pq {
        if denumerant_closed_form(&pair, n + pq) != denumerant_closed_form(&pair, n) + 1 {
            shift_holds = false;
            break;
        }
    }
    records.push(record(
        "denumerant_closed_form",
        &pair,
        counts_match && shift_holds,
        format!("table agreement on [0, {}): {counts_match}", 3 * pq),
        format!("shift r(n + {pq}) = r(n) + 1: {shift_holds}"),
    ));

    // Gap power sums for each exponent up to kmax.
    for k in 0..=kmax {
        let sums = sylvester_sum(&pair, k);
        records.push(record(
            format!("sylvester_power_{k}"),
            &pair,
            sums.ok(),
            big_digest(&sums.brute),
            big_digest(&sums.formula),
        ));
    }

    // Bernoulli numbers recovered through the pair's gap sums.
    let mut bernoulli_ok = true;
    let mut first_bad = None;
    for m in 1..=8u32 {
        if bernoulli_via_semigroup(m, &pair) != bernoulli(m as usize) {
            bernoulli_ok = false;
            first_bad = Some(m);
            break;
        }
    }
    records.push(record(
        "bernoulli_recursion",
        &pair,
        bernoulli_ok,
        match first_bad {
            None => format!("B_1..B_8 via ({p}, {q})"),
            Some(m) => format!("first mismatch at B_{m}"),
        },
        "B_1..B_8 via recurrence".to_string(),
    ));

    // Gap-telescoping identity for a spread of explicit tables.
    let len = (s.frobenius() as u64 + p.max(q) + 1) as usize;
    let linear: Vec<BigInt> = (0..len as u64).map(BigInt::from).collect();
    let squares: Vec<BigInt> = (0..len as u64).map(|n| BigInt::from(n * n)).collect();
    let cubes: Vec<BigInt> = (0..len as u64).map(|n| BigInt::from(n).pow(3)).collect();
    let constant: Vec<BigInt> = vec![BigInt::from(11); len];
    let mut state = p * 7_919 + q;
    let noise: Vec<BigInt> = (0..len)
        .map(|_| {
            state = (state * 1_103_515_245 + 12_345) % 2_147_483_648;
            BigInt::from(state % 257) - BigInt::from(128)
        })
        .collect();
    let tables = [&linear, &squares, &cubes, &constant, &noise];
    let balanced = tables
        .iter()
        .filter(|t| tuenter_check(&pair, t).expect("table sized to fit").ok())
        .count();
    records.push(record(
        "tuenter_functional",
        &pair,
        balanced == tables.len(),
        format!("{balanced} of {} tables balanced", tables.len()),
        format!("{} tables, both orientations each", tables.len()),
    ));

    // Gap product identity.
    let (prod_lhs, prod_rhs) = tuenter_product_identity(&pair);
    records.push(record(
        "tuenter_product",
        &pair,
        prod_lhs == prod_rhs,
        big_digest(&prod_lhs),
        big_digest(&prod_rhs),
    ));

    // Consecutive-run block counts.
    let blocks = block_counts(&pair);
    records.push(record(
        "block_counts",
        &pair,
        blocks.matches(),
        format!("gap_blocks={} element_blocks={}", blocks.gap_blocks, blocks.element_blocks),
        format!("rho*sigma - 1 = {}", blocks.expected),
    ));

    // Corner census: the three reliable closed forms...
    let census = corner_census(&pair);
    records.push(record(
        "corner_census_members",
        &pair,
        census.first_three_match(),
        format!(
            "in/in={} in/out={} out/in={}",
            census.in_in, census.in_out, census.out_in
        ),
        format!(
            "{} {} {}",
            census.expected_in_in(),
            census.expected_in_out(),
            census.expected_out_in()
        ),
    ));

    // ...and the companion form for the fourth class, which reproducibly
    // disagrees with enumeration; report it as a warning so the discrepancy
    // stays visible without failing the run.
    records.push(IdentityRecord {
        identity: "corner_census_fourth".to_string(),
        p,
        q,
        status: if census.fourth_matches_claim() { Status::Pass } else { Status::Warn },
        lhs: format!("enumerated out/out = {}", census.out_out),
        rhs: format!("claimed N - rho*sigma - 1 = {}", census.claimed_out_out()),
    });

    // Diagram structure: corner-region exponents match the two-block
    // expansion's signed supports, and gap cells carry exactly the gaps.
    let diagram = Diagram::for_pair(&pair);
    let corners = diagram.corner_exponents();
    let mut plus_support = Vec::new();
    let mut minus_support = Vec::new();
    for (k, c) in expansion.nonzero_terms() {
        if c.is_positive() {
            plus_support.push(k as u64);
        } else {
            minus_support.push(k as u64);
        }
    }
    let gap_values: BTreeSet<u64> =
        diagram.cells().filter(|c| c.is_gap).map(|c| c.value).collect();
    let gap_set: BTreeSet<u64> = s.gaps().iter().copied().collect();
    let diagram_ok = corners.plus == plus_support
        && corners.minus == minus_support
        && gap_values == gap_set;
    records.push(record(
        "diagram_corners",
        &pair,
        diagram_ok,
        format!(
            "corners +{}/-{}, {} gap cells",
            corners.plus.len(),
            corners.minus.len(),
            gap_values.len()
        ),
        format!(
            "expansion +{}/-{}, {} gaps",
            plus_support.len(),
            minus_support.len(),
            gap_set.len()
        ),
    ));

    Ok(records)
}
