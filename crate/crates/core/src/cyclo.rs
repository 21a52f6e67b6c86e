//! Cyclotomic polynomials and their inclusion-exclusion generalization.
//!
//! Everything is computed with exact integer polynomial arithmetic — products
//! of `x^d - 1` factors followed by exact divisions — never by complex root
//! manipulation, so results are provably correct integer vectors.
//!
//! For a set `{r_1, ..., r_s}` of pairwise coprime integers > 1 with product
//! `n0`, the inclusion-exclusion polynomial is
//!
//! ```text
//!            prod over even-size subsets T of (x^(n0 / prod T) - 1)
//!   Q(x)  =  ------------------------------------------------------
//!            prod over odd-size subsets T of (x^(n0 / prod T) - 1)
//! ```
//!
//! which has degree `prod (r_i - 1)` and integer coefficients.  For a prime
//! pair `{p, q}` it coincides with the cyclotomic polynomial of index `pq`.
//!
//! The binary case carries extra structure: the unique non-negative solution
//! `(rho, sigma)` of `1 + pq = rho*p + sigma*q` drives a closed form for
//! every coefficient and an explicit expansion with `2*rho*sigma - 1`
//! non-zero terms.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{factorize, mobius, mod_inverse};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::semigroup::NumericalSemigroup;

/// Cap on cyclotomic indices (and inclusion-exclusion products): the dense
/// expansion is linear in the index, and this bound keeps worst-case calls
/// comfortably in memory.
pub const CYCLOTOMIC_INDEX_LIMIT: u64 = 30_000;

/// The cyclotomic polynomial of index `n`, via the Mobius-product formula
/// `Phi_n(x) = prod over d | n of (x^d - 1)^(mobius(n/d))`.
///
/// All positive-exponent factors are multiplied first, then each
/// negative-exponent factor is divided out exactly, keeping every
/// intermediate value an integer polynomial.
///
/// Errors on `n == 0` and on indices above [`CYCLOTOMIC_INDEX_LIMIT`].
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "cyclotomic index" });
    }
    if n > CYCLOTOMIC_INDEX_LIMIT {
        return Err(Error::ResourceLimit {
            what: format!("cyclotomic index {n} exceeds limit {CYCLOTOMIC_INDEX_LIMIT}"),
        });
    }
    let mut numerator = IntPoly::one();
    let mut denominators = Vec::new();
    for d in factorize(n)?.divisors() {
        match mobius(n / d)? {
            1 => numerator = numerator.mul(&IntPoly::x_power_minus_one(d as usize)),
            -1 => denominators.push(d as usize),
            _ => {}
        }
    }
    let mut result = numerator;
    for d in denominators {
        result = result
            .exact_div(&IntPoly::x_power_minus_one(d))
            .expect("Mobius product for a cyclotomic polynomial divides exactly");
    }
    Ok(result)
}

/// A non-empty set of pairwise coprime integers, each greater than 1 — the
/// index set of an inclusion-exclusion polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeBase {
    elements: Vec<u64>,
    product: u64,
}

impl CoprimeBase {
    /// Validate and sort the element list.
    ///
    /// Errors when the list is empty, contains an element ≤ 1, or contains
    /// two elements with a common factor.
    pub fn new(elements: &[u64]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        for &r in &sorted {
            if r <= 1 {
                return Err(Error::BaseElementTooSmall { value: r });
            }
        }
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                let g = num_integer::gcd(sorted[i], sorted[j]);
                if g != 1 {
                    return Err(Error::NotCoprime { p: sorted[i], q: sorted[j], gcd: g });
                }
            }
        }
        let product = sorted.iter().product();
        Ok(CoprimeBase { elements: sorted, product })
    }

    /// The elements, sorted ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// The product `n0` of all elements.
    pub fn product(&self) -> u64 {
        self.product
    }

    /// The inclusion-exclusion polynomial of this base set, by the quotient
    /// of subset products described in the module docs.
    ///
    /// Errors when the element product exceeds [`CYCLOTOMIC_INDEX_LIMIT`];
    /// the division itself is exact for every valid base set.
    pub fn inclusion_exclusion(&self) -> Result<IntPoly> {
        if self.product > CYCLOTOMIC_INDEX_LIMIT {
            return Err(Error::ResourceLimit {
                what: format!(
                    "inclusion-exclusion product {} exceeds limit {CYCLOTOMIC_INDEX_LIMIT}",
                    self.product
                ),
            });
        }
        let s = self.elements.len();
        let mut numerator = IntPoly::one();
        let mut denominators = Vec::new();
        for mask in 0u32..(1 << s) {
            let subset_product: u64 = self
                .elements
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &r)| r)
                .product();
            let exponent = (self.product / subset_product) as usize;
            if mask.count_ones() % 2 == 0 {
                numerator = numerator.mul(&IntPoly::x_power_minus_one(exponent));
            } else {
                denominators.push(exponent);
            }
        }
        let mut result = numerator;
        for d in denominators {
            result = result
                .exact_div(&IntPoly::x_power_minus_one(d))
                .expect("inclusion-exclusion quotient divides exactly for a coprime base");
        }
        let expected_degree: u64 = self.elements.iter().map(|&r| r - 1).product();
        debug_assert_eq!(result.degree(), Some(expected_degree as usize));
        Ok(result)
    }

    /// The divisors `d` of the product sharing a factor with every base
    /// element — exactly the cyclotomic indices whose product recovers the
    /// inclusion-exclusion polynomial.
    pub fn cyclotomic_factor_indices(&self) -> Vec<u64> {
        factorize(self.product)
            .expect("base product is positive")
            .divisors()
            .into_iter()
            .filter(|&d| self.elements.iter().all(|&r| num_integer::gcd(d, r) > 1))
            .collect()
    }
}

/// A pair of coprime integers `p, q ≥ 2` together with the unique
/// non-negative solution `(rho, sigma)` of `1 + pq = rho*p + sigma*q`.
///
/// Those witnesses double as modular inverses — `rho = p^(-1) mod q` and
/// `sigma = q^(-1) mod p` — and are stored at construction so coefficient
/// queries need no further inversions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryPair {
    p: u64,
    q: u64,
    rho: u64,
    sigma: u64,
}

impl BinaryPair {
    /// Validate the pair and solve for `(rho, sigma)`.
    ///
    /// Errors when either entry is ≤ 1 or the entries share a factor.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p <= 1 {
            return Err(Error::BaseElementTooSmall { value: p });
        }
        if q <= 1 {
            return Err(Error::BaseElementTooSmall { value: q });
        }
        let g = num_integer::gcd(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        let rho = mod_inverse(p, q)?;
        let sigma = mod_inverse(q, p)?;
        debug_assert_eq!(1 + p * q, rho * p + sigma * q, "witness equation must balance");
        Ok(BinaryPair { p, q, rho, sigma })
    }

    /// First entry.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Second entry.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Witness `rho`, with `1 ≤ rho ≤ q - 1`; equals `p^(-1) mod q`.
    pub fn rho(&self) -> u64 {
        self.rho
    }

    /// Witness `sigma`, with `1 ≤ sigma ≤ p - 1`; equals `q^(-1) mod p`.
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// `p^(-1) mod q` (stored, not recomputed).
    pub fn p_inv_mod_q(&self) -> u64 {
        self.rho
    }

    /// `q^(-1) mod p` (stored, not recomputed).
    pub fn q_inv_mod_p(&self) -> u64 {
        self.sigma
    }

    /// Number of non-zero coefficients of the pair's inclusion-exclusion
    /// polynomial: `2*rho*sigma - 1`, straight from the stored witnesses,
    /// with no polynomial expansion.
    pub fn theta(&self) -> u64 {
        2 * self.rho * self.sigma - 1
    }

    /// Frobenius number `pq - p - q` of the pair's semigroup.
    pub fn frobenius(&self) -> i64 {
        (self.p * self.q - self.p - self.q) as i64
    }

    /// Genus `(p - 1)(q - 1) / 2` of the pair's semigroup.
    pub fn genus(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    /// The numerical semigroup generated by the pair.
    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&[self.p, self.q])
            .expect("a coprime pair generates a numerical semigroup")
    }

    /// The pair's inclusion-exclusion polynomial via the subset quotient.
    pub fn inclusion_exclusion(&self) -> IntPoly {
        CoprimeBase::new(&[self.p, self.q])
            .expect("a valid pair is a valid base set")
            .inclusion_exclusion()
            .expect("pair products stay within the expansion limit")
    }
}

/// Coefficient of `x^m` in the inclusion-exclusion polynomial of `pair`,
/// by the closed form: with `alpha = m * rho mod q` and
/// `beta = m * sigma mod p`,
///
/// - `+1` when `alpha ≤ rho - 1` and `beta ≤ sigma - 1`,
/// - `-1` when `alpha ≥ rho` and `beta ≥ sigma`,
/// - `0` otherwise.
///
/// No polynomial is expanded.  Errors when `m ≥ pq`.
pub fn binary_coefficient(pair: &BinaryPair, m: u64) -> Result<i32> {
    let (p, q) = (pair.p, pair.q);
    if m >= p * q {
        return Err(Error::OutOfRange {
            what: "coefficient index",
            value: m as i64,
            range: format!("[0, {})", p * q),
        });
    }
    let alpha = (m as u128 * pair.rho as u128 % q as u128) as u64;
    let beta = (m as u128 * pair.sigma as u128 % p as u128) as u64;
    if alpha < pair.rho && beta < pair.sigma {
        debug_assert_eq!(alpha * p + beta * q, m);
        Ok(1)
    } else if alpha >= pair.rho && beta >= pair.sigma {
        debug_assert_eq!(alpha * p + beta * q, m + p * q);
        Ok(-1)
    } else {
        Ok(0)
    }
}

/// Expand the pair's inclusion-exclusion polynomial directly from the
/// two-block formula: `+1` at exponents `i*p + j*q` for `0 ≤ i < rho`,
/// `0 ≤ j < sigma`, and `-1` at exponents `i*p + j*q - pq` for
/// `rho ≤ i ≤ q - 1`, `sigma ≤ j ≤ p - 1`.
///
/// # Panics
///
/// Panics if two block exponents collide, which would contradict the
/// formula's term count and indicates an arithmetic bug.
pub fn lam_leung_expand(pair: &BinaryPair) -> IntPoly {
    let (p, q) = (pair.p, pair.q);
    let degree = ((p - 1) * (q - 1)) as usize;
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    let mut write = |e: usize, value: i32| {
        assert!(
            coeffs[e].is_zero(),
            "exponent collision at {e} in the two-block expansion of ({p}, {q})"
        );
        coeffs[e] = BigInt::from(value);
    };
    for i in 0..pair.rho {
        for j in 0..pair.sigma {
            write((i * p + j * q) as usize, 1);
        }
    }
    for i in pair.rho..q {
        for j in pair.sigma..p {
            write((i * p + j * q - p * q) as usize, -1);
        }
    }
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Oracle: substitute `x -> x^k` into a polynomial.
    fn substitute_power(f: &IntPoly, k: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); f.coeffs().len() * k];
        for (e, c) in f.nonzero_terms() {
            coeffs[e * k] = c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1).unwrap(), IntPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), IntPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), IntPoly::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), IntPoly::from_i64_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), IntPoly::from_i64_coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), IntPoly::from_i64_coeffs(&[1, 0, -1, 0, 1]));
        // Prime index: all-ones polynomial.
        for p in [5u64, 7, 11, 13] {
            let phi = cyclotomic(p).unwrap();
            assert_eq!(phi.degree(), Some(p as usize - 1));
            assert!(phi.coeffs().iter().all(One::is_one));
        }
    }

    #[test]
    fn cyclotomic_input_validation() {
        assert!(cyclotomic(0).is_err());
        assert!(matches!(
            cyclotomic(CYCLOTOMIC_INDEX_LIMIT + 1),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(cyclotomic(CYCLOTOMIC_INDEX_LIMIT).is_ok());
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for n in 1..=200u64 {
            assert_eq!(
                cyclotomic(n).unwrap().degree(),
                Some(crate::arith::euler_phi(n).unwrap() as usize),
                "degree mismatch at {n}"
            );
        }
    }

    #[test]
    fn cyclotomic_divisor_product_recovers_x_n_minus_one() {
        for n in 1..=100u64 {
            let mut product = IntPoly::one();
            for d in factorize(n).unwrap().divisors() {
                product = product.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(
                product,
                IntPoly::x_power_minus_one(n as usize),
                "divisor product failed at {n}"
            );
        }
    }

    #[test]
    fn cyclotomic_prime_multiple_substitution() {
        // For a prime p dividing n, the index-pn polynomial is the index-n
        // polynomial evaluated at x^p.
        for (p, n) in [(2u64, 4u64), (2, 6), (3, 6), (3, 9), (5, 10), (5, 25), (7, 21)] {
            assert_eq!(
                cyclotomic(p * n).unwrap(),
                substitute_power(&cyclotomic(n).unwrap(), p as usize),
                "substitution failed for p={p}, n={n}"
            );
        }
    }

    #[test]
    fn famous_first_coefficient_of_magnitude_two() {
        // Index 105 is the smallest with a coefficient outside {-1, 0, 1}.
        let phi = cyclotomic(105).unwrap();
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coefficient(7), BigInt::from(-2));
        assert!(phi.is_selfreciprocal().unwrap());
        for n in 1..105u64 {
            assert!(
                cyclotomic(n).unwrap().coeffs().iter().all(|c| num_traits::Signed::abs(c) <= BigInt::one()),
                "unexpected large coefficient below index 105 at {n}"
            );
        }
    }

    #[test]
    fn coprime_base_validation() {
        assert!(CoprimeBase::new(&[4, 7]).is_ok());
        assert!(CoprimeBase::new(&[3, 4, 5]).is_ok());
        assert!(matches!(CoprimeBase::new(&[]), Err(Error::EmptyGenerators)));
        assert!(matches!(
            CoprimeBase::new(&[1, 3]),
            Err(Error::BaseElementTooSmall { value: 1 })
        ));
        assert!(matches!(
            CoprimeBase::new(&[4, 6]),
            Err(Error::NotCoprime { p: 4, q: 6, gcd: 2 })
        ));
        assert_eq!(CoprimeBase::new(&[7, 4]).unwrap().elements(), &[4, 7]);
        assert_eq!(CoprimeBase::new(&[4, 7]).unwrap().product(), 28);
    }

    #[test]
    fn singleton_base_gives_all_ones_quotient() {
        for r in [2u64, 5, 6, 9, 12] {
            let q = CoprimeBase::new(&[r]).unwrap().inclusion_exclusion().unwrap();
            assert_eq!(q.degree(), Some(r as usize - 1));
            assert!(q.coeffs().iter().all(One::is_one), "failed for r={r}");
        }
    }

    #[test]
    fn pair_base_matches_cyclotomic_product() {
        // For the base {4, 7} the polynomial factors as the product of the
        // index-28 and index-14 cyclotomic polynomials.
        let base = CoprimeBase::new(&[4, 7]).unwrap();
        assert_eq!(base.cyclotomic_factor_indices(), vec![14, 28]);
        let q = base.inclusion_exclusion().unwrap();
        let product = cyclotomic(28).unwrap().mul(&cyclotomic(14).unwrap());
        assert_eq!(q, product);
        assert_eq!(q.degree(), Some(18));
        assert!(q.is_selfreciprocal().unwrap());
    }

    #[test]
    fn factor_index_product_recovers_the_polynomial() {
        let bases: Vec<Vec<u64>> = vec![
            vec![6],
            vec![2, 3],
            vec![4, 7],
            vec![5, 7],
            vec![2, 9],
            vec![3, 4, 5],
            vec![2, 3, 5],
        ];
        for elements in bases {
            let base = CoprimeBase::new(&elements).unwrap();
            let mut product = IntPoly::one();
            for d in base.cyclotomic_factor_indices() {
                product = product.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(
                base.inclusion_exclusion().unwrap(),
                product,
                "factor product failed for {elements:?}"
            );
        }
    }

    #[test]
    fn triple_base_degree_and_symmetry() {
        let base = CoprimeBase::new(&[3, 4, 5]).unwrap();
        let q = base.inclusion_exclusion().unwrap();
        assert_eq!(q.degree(), Some(2 * 3 * 4));
        assert!(q.is_selfreciprocal().unwrap());
    }

    #[test]
    fn binary_pair_witnesses() {
        let pair = BinaryPair::new(5, 7).unwrap();
        assert_eq!((pair.rho(), pair.sigma()), (3, 3));
        assert_eq!(pair.theta(), 17);
        assert_eq!(pair.frobenius(), 23);
        assert_eq!(pair.genus(), 12);

        let pair = BinaryPair::new(4, 7).unwrap();
        assert_eq!((pair.rho(), pair.sigma()), (2, 3));
        assert_eq!(pair.theta(), 11);
        assert_eq!(pair.frobenius(), 17);

        let pair = BinaryPair::new(2, 3).unwrap();
        assert_eq!((pair.rho(), pair.sigma()), (2, 1));

        // Swapping the pair swaps the witnesses.
        let pair = BinaryPair::new(3, 2).unwrap();
        assert_eq!((pair.rho(), pair.sigma()), (1, 2));

        assert!(matches!(BinaryPair::new(1, 5), Err(Error::BaseElementTooSmall { .. })));
        assert!(matches!(BinaryPair::new(6, 9), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn witness_equation_holds_across_pairs() {
        for p in 2..=40u64 {
            for q in 2..=40u64 {
                if p == q || num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let pair = BinaryPair::new(p, q).unwrap();
                assert_eq!(1 + p * q, pair.rho() * p + pair.sigma() * q);
                assert!(pair.rho() >= 1 && pair.rho() < q);
                assert!(pair.sigma() >= 1 && pair.sigma() < p);
                assert_eq!(pair.p_inv_mod_q() * p % q, 1);
                assert_eq!(pair.q_inv_mod_p() * q % p, 1);
            }
        }
    }

    #[test]
    fn closed_form_coefficients_for_five_seven() {
        // Frozen from the two-block formula worked by hand: +1 exponents
        // {0, 5, 10, 7, 12, 17, 14, 19, 24}, -1 exponents
        // {1, 6, 11, 16, 8, 13, 18, 23}.
        let pair = BinaryPair::new(5, 7).unwrap();
        let plus = [0u64, 5, 10, 7, 12, 17, 14, 19, 24];
        let minus = [1u64, 6, 11, 16, 8, 13, 18, 23];
        for m in 0..35u64 {
            let expected = if plus.contains(&m) {
                1
            } else if minus.contains(&m) {
                -1
            } else {
                0
            };
            assert_eq!(binary_coefficient(&pair, m).unwrap(), expected, "at exponent {m}");
        }
        assert!(matches!(binary_coefficient(&pair, 35), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn two_block_expansion_equals_quotient() {
        let pair = BinaryPair::new(2, 3).unwrap();
        assert_eq!(lam_leung_expand(&pair), IntPoly::from_i64_coeffs(&[1, -1, 1]));
        for p in 2..=20u64 {
            for q in (p + 1)..=20u64 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let pair = BinaryPair::new(p, q).unwrap();
                let expanded = lam_leung_expand(&pair);
                assert_eq!(expanded, pair.inclusion_exclusion(), "mismatch for ({p}, {q})");
                assert_eq!(expanded.num_nonzero_terms() as u64, pair.theta());
            }
        }
    }

    #[test]
    fn nonzero_coefficients_alternate_in_sign() {
        for (p, q) in [(2u64, 3u64), (3, 5), (4, 7), (5, 7), (7, 9), (8, 15)] {
            let pair = BinaryPair::new(p, q).unwrap();
            let terms = lam_leung_expand(&pair).nonzero_terms();
            assert_eq!(terms.first().map(|(e, _)| *e), Some(0));
            for window in terms.windows(2) {
                assert_eq!(
                    window[0].1.clone() + window[1].1.clone(),
                    BigInt::zero(),
                    "adjacent non-zero coefficients must alternate for ({p}, {q})"
                );
            }
            // Counts: rho*sigma positive terms, rho*sigma - 1 negative.
            let positives = terms.iter().filter(|(_, c)| c > &BigInt::zero()).count() as u64;
            let negatives = terms.iter().filter(|(_, c)| c < &BigInt::zero()).count() as u64;
            assert_eq!(positives, pair.rho() * pair.sigma());
            assert_eq!(negatives, pair.rho() * pair.sigma() - 1);
        }
    }
}
