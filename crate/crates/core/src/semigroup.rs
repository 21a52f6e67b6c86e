//! Numerical semigroups: sub-monoids of the non-negative integers with
//! finite complement.
//!
//! A semigroup is built from a generator list with gcd 1.  Construction
//! computes the Apery set with respect to the multiplicity by a shortest-path
//! sweep over residue classes, and every other invariant — Frobenius number,
//! genus, gaps, membership — reads off that set in O(1) or one scan.
//!
//! Conventions:
//!
//! - the full semigroup of all non-negative integers has Frobenius number
//!   `-1` (no gaps, genus 0) and is symmetric by convention;
//! - the Apery set with respect to an anchor `m` is returned indexed by
//!   residue class, so entry `r` is the least element congruent to `r` mod m.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Cap on denumerant arguments; the dynamic program is linear in `k` and
/// this keeps accidental huge requests from looking like a hang.
pub const DENUMERANT_LIMIT: i64 = 1_000_000;

/// A numerical semigroup, i.e. the set of all non-negative integer
/// combinations of a generator list whose gcd is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    minimal_generators: Vec<u64>,
    /// Apery set with respect to the multiplicity, indexed by residue class.
    apery_mult: Vec<u64>,
    multiplicity: u64,
    frobenius: i64,
    genus: u64,
}

/// Maximal runs of consecutive integers among the gaps of a semigroup and
/// among its elements below the Frobenius number.  Each block is an
/// inclusive `(start, end)` range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Blocks {
    /// Runs of consecutive gaps, ascending.
    pub gap_blocks: Vec<(u64, u64)>,
    /// Runs of consecutive elements inside `[0, F(S)]`, ascending.
    pub element_blocks: Vec<(u64, u64)>,
}

/// Serializable summary of a semigroup's basic invariants.
#[derive(Debug, Clone, Serialize)]
pub struct SemigroupSummary {
    /// The generator list as given (sorted, deduplicated).
    pub generators: Vec<u64>,
    /// The unique minimal generating system.
    pub minimal_generators: Vec<u64>,
    /// Least positive element.
    pub multiplicity: u64,
    /// Size of the minimal generating system.
    pub embedding_dimension: usize,
    /// Largest integer not in the semigroup (−1 when there is none).
    pub frobenius: i64,
    /// Number of gaps.
    pub genus: u64,
    /// The gaps, ascending.
    pub gaps: Vec<u64>,
    /// Apery set with respect to the multiplicity, indexed by residue.
    pub apery: Vec<u64>,
}

/// Least element of each residue class mod `m`, by Dijkstra on the residue
/// graph: node `r` steps to `(r + g) mod m` at cost `g` for each generator.
fn apery_by_shortest_paths(generators: &[u64], m: u64) -> Vec<u64> {
    let m_us = m as usize;
    let mut dist = vec![u64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let step = (g % m) as usize;
            if step == 0 {
                // Stays in the same class at positive cost; never an improvement.
                continue;
            }
            let nd = d + g;
            let nr = (r + step) % m_us;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    debug_assert!(
        dist.iter().all(|&d| d != u64::MAX),
        "gcd-1 generators must reach every residue class"
    );
    dist
}

/// True when `target` is a non-negative integer combination of `gens`.
fn representable(target: u64, gens: &[u64]) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for &g in gens {
        let g = g as usize;
        if g == 0 || g > t {
            continue;
        }
        for j in g..=t {
            if reach[j - g] {
                reach[j] = true;
            }
        }
    }
    reach[t]
}

impl NumericalSemigroup {
    /// Build the semigroup generated by `generators`.
    ///
    /// The list is sorted and deduplicated; it must be non-empty, contain no
    /// zeros, and have gcd 1 (otherwise [`Error::NotNumerical`], since the
    /// complement would be infinite).
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroArgument { what: "generator" });
        }
        let mut gens: Vec<u64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &x| num_integer::gcd(acc, x));
        if g != 1 {
            return Err(Error::NotNumerical { generators: gens, gcd: g });
        }

        let multiplicity = gens[0];
        let apery_mult = apery_by_shortest_paths(&gens, multiplicity);
        let max_apery = *apery_mult.iter().max().expect("apery set is non-empty");
        let frobenius = max_apery as i64 - multiplicity as i64;

        // Genus via the Apery identity N = (sum of Apery values)/m - (m-1)/2,
        // evaluated as an exact integer.
        let apery_sum: u64 = apery_mult.iter().sum();
        let m = multiplicity;
        let twice = 2 * apery_sum - m * (m - 1);
        debug_assert_eq!(twice % (2 * m), 0, "Apery genus identity must divide exactly");
        let genus = twice / (2 * m);

        // Minimal generating system: drop generators representable by the
        // others, largest first.  A true minimal generator is never a sum of
        // smaller positive elements, so it survives any elimination order.
        let mut minimal = gens.clone();
        let mut i = minimal.len();
        while i > 0 {
            i -= 1;
            let candidate = minimal[i];
            let others: Vec<u64> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            if !others.is_empty() && representable(candidate, &others) {
                minimal.remove(i);
            }
        }

        Ok(NumericalSemigroup {
            generators: gens,
            minimal_generators: minimal,
            apery_mult,
            multiplicity,
            frobenius,
            genus,
        })
    }

    /// The generator list this semigroup was built from (sorted, deduplicated).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The unique minimal generating system.
    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    /// Least positive element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Size of the minimal generating system.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest integer outside the semigroup, or −1 when the semigroup is
    /// all of the non-negative integers.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Membership test in O(1) against the stored Apery set.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let r = (n as u64 % self.multiplicity) as usize;
        n as u64 >= self.apery_mult[r]
    }

    /// Apery set with respect to `anchor`, indexed by residue class mod
    /// `anchor`: entry `r` is the least element congruent to `r`.
    ///
    /// `anchor` must be a non-zero element of the semigroup.
    pub fn apery_set(&self, anchor: u64) -> Result<Vec<u64>> {
        if anchor == 0 || !self.contains(anchor as i64) {
            return Err(Error::AperyAnchorNotMember { m: anchor });
        }
        if anchor == self.multiplicity {
            return Ok(self.apery_mult.clone());
        }
        Ok(apery_by_shortest_paths(&self.generators, anchor))
    }

    /// The gaps (non-members below the Frobenius number), ascending.
    pub fn gaps(&self) -> Vec<u64> {
        if self.frobenius < 0 {
            return Vec::new();
        }
        (0..=self.frobenius as u64).filter(|&n| !self.contains(n as i64)).collect()
    }

    /// The semigroup polynomial `P_S(x) = 1 + (x - 1) * sum over gaps of x^s`.
    ///
    /// Its degree is `F(S) + 1` and its coefficients lie in `{-1, 0, 1}`.
    /// For the full semigroup the polynomial is the constant 1.
    pub fn semigroup_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); (self.frobenius + 2).max(1) as usize];
        coeffs[0] = BigInt::one();
        for s in self.gaps() {
            let s = s as usize;
            coeffs[s + 1] += BigInt::one();
            coeffs[s] -= BigInt::one();
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Symmetry test: `n` is a member exactly when `F - n` is a gap.
    ///
    /// Computed both from the member/gap sets and as selfreciprocity of the
    /// semigroup polynomial; the two routes are asserted to agree.  The full
    /// semigroup is symmetric by convention (both routes return true for it).
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        let by_sets = f < 0 || (0..=f).all(|n| self.contains(n) != self.contains(f - n));
        let by_polynomial = self
            .semigroup_polynomial()
            .is_selfreciprocal()
            .expect("semigroup polynomial is never zero");
        assert_eq!(
            by_sets, by_polynomial,
            "symmetry routes disagree for generators {:?}",
            self.generators
        );
        by_sets
    }

    /// Maximal runs of consecutive gaps, and of consecutive elements below
    /// the Frobenius number.
    ///
    /// Errors with [`Error::NoGaps`] for the full semigroup, which has
    /// neither gaps nor a finite element region.
    pub fn blocks(&self) -> Result<Blocks> {
        if self.frobenius < 0 {
            return Err(Error::NoGaps);
        }
        let f = self.frobenius as usize;
        let membership: Vec<bool> = (0..=f).map(|n| self.contains(n as i64)).collect();
        let mut gap_blocks = Vec::new();
        let mut element_blocks = Vec::new();
        let mut i = 0usize;
        while i <= f {
            let member = membership[i];
            let start = i as u64;
            while i <= f && membership[i] == member {
                i += 1;
            }
            let run = (start, (i - 1) as u64);
            if member {
                element_blocks.push(run);
            } else {
                gap_blocks.push(run);
            }
        }
        Ok(Blocks { gap_blocks, element_blocks })
    }

    /// Serializable summary of the basic invariants.
    pub fn summary(&self) -> SemigroupSummary {
        SemigroupSummary {
            generators: self.generators.clone(),
            minimal_generators: self.minimal_generators.clone(),
            multiplicity: self.multiplicity,
            embedding_dimension: self.embedding_dimension(),
            frobenius: self.frobenius,
            genus: self.genus,
            gaps: self.gaps(),
            apery: self.apery_mult.clone(),
        }
    }
}

/// Denumerant: the number of ways to write `k` as a non-negative integer
/// combination of the given generator list (order of the list fixed,
/// repeated entries count separately).
///
/// Computed by the classic coin-counting dynamic program, so memory and time
/// are linear in `k`; arguments above [`DENUMERANT_LIMIT`] are refused with
/// [`Error::ResourceLimit`].  Negative `k` has no representations.
pub fn denumerant(k: i64, generators: &[u64]) -> Result<BigInt> {
    if k < 0 {
        // Validate even though the answer is forced.
        denumerant_table(0, generators)?;
        return Ok(BigInt::zero());
    }
    Ok(denumerant_table(k, generators)?.pop().expect("table has k+1 entries"))
}

/// The full denumerant table `[d(0), d(1), ..., d(k)]` for one generator
/// list, from a single dynamic-programming pass.  Same contract as
/// [`denumerant`]; `k` must be non-negative here.
pub fn denumerant_table(k: i64, generators: &[u64]) -> Result<Vec<BigInt>> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroArgument { what: "generator" });
    }
    if k < 0 {
        return Err(Error::OutOfRange {
            what: "denumerant table bound",
            value: k,
            range: "[0, 1000000]".to_string(),
        });
    }
    if k > DENUMERANT_LIMIT {
        return Err(Error::ResourceLimit {
            what: format!("denumerant argument {k} exceeds limit {DENUMERANT_LIMIT}"),
        });
    }
    let k = k as usize;
    let mut ways = vec![BigInt::zero(); k + 1];
    ways[0] = BigInt::one();
    for &g in generators {
        let g = g as usize;
        if g > k {
            continue;
        }
        for j in g..=k {
            let prev = ways[j - g].clone();
            ways[j] += prev;
        }
    }
    Ok(ways)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: membership table by reachability sieve up to `bound`.
    fn members_by_sieve(gens: &[u64], bound: u64) -> Vec<bool> {
        let b = bound as usize;
        let mut member = vec![false; b + 1];
        member[0] = true;
        for n in 1..=b {
            member[n] = gens.iter().any(|&g| {
                let g = g as usize;
                g <= n && member[n - g]
            });
        }
        member
    }

    /// Oracle: Frobenius number by scanning the sieve from the top.  The
    /// bound max^2 + max exceeds every gap of a gcd-1 generator list.
    fn invariants_by_sieve(gens: &[u64]) -> (i64, u64, Vec<u64>) {
        let bound = {
            let mx = *gens.iter().max().unwrap();
            mx * mx + mx
        };
        let member = members_by_sieve(gens, bound);
        let frobenius = member
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &m)| !m)
            .map(|(n, _)| n as i64)
            .unwrap_or(-1);
        let gaps: Vec<u64> =
            member.iter().enumerate().filter(|(_, &m)| !m).map(|(n, _)| n as u64).collect();
        (frobenius, gaps.len() as u64, gaps)
    }

    /// Oracle: denumerant by recursive enumeration over the last generator.
    fn denumerant_by_enumeration(k: i64, gens: &[u64]) -> u64 {
        if gens.is_empty() {
            return u64::from(k == 0);
        }
        if k < 0 {
            return 0;
        }
        let (&last, rest) = gens.split_last().unwrap();
        let mut total = 0;
        let mut remaining = k;
        while remaining >= 0 {
            total += denumerant_by_enumeration(remaining, rest);
            remaining -= last as i64;
        }
        total
    }

    #[test]
    fn construction_validates_input() {
        assert!(matches!(NumericalSemigroup::new(&[]), Err(Error::EmptyGenerators)));
        assert!(matches!(
            NumericalSemigroup::new(&[0, 3]),
            Err(Error::ZeroArgument { .. })
        ));
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::NotNumerical { generators: vec![4, 6], gcd: 2 })
        );
        assert!(NumericalSemigroup::new(&[6, 10, 15]).is_ok());
    }

    #[test]
    fn four_six_nine_twenty() {
        // Expected values recomputed with the sieve oracle before freezing:
        // gaps {1, 2, 3, 5, 7, 11}.
        let s = NumericalSemigroup::new(&[4, 6, 9, 20]).unwrap();
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.genus(), 6);
        assert_eq!(s.multiplicity(), 4);
        assert_eq!(s.minimal_generators(), &[4, 6, 9]);
        assert_eq!(s.embedding_dimension(), 3);
        assert_eq!(s.gaps(), vec![1, 2, 3, 5, 7, 11]);
        let (f, n, gaps) = invariants_by_sieve(&[4, 6, 9, 20]);
        assert_eq!((s.frobenius(), s.genus(), s.gaps()), (f, n, gaps));
    }

    #[test]
    fn two_generator_example() {
        let s = NumericalSemigroup::new(&[5, 7]).unwrap();
        assert_eq!(s.frobenius(), 23);
        assert_eq!(s.genus(), 12);
        assert_eq!(s.embedding_dimension(), 2);
        // Apery set w.r.t. the multiplicity is {0, q, 2q, 3q, 4q}, returned
        // indexed by residue class mod 5.
        assert_eq!(s.apery_set(5).unwrap(), vec![0, 21, 7, 28, 14]);
        let mut sorted = s.apery_set(5).unwrap();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 7, 14, 21, 28]);
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
    }

    #[test]
    fn full_semigroup_conventions() {
        for gens in [vec![1], vec![1, 5]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            assert_eq!(s.frobenius(), -1);
            assert_eq!(s.genus(), 0);
            assert_eq!(s.multiplicity(), 1);
            assert_eq!(s.minimal_generators(), &[1]);
            assert!(s.gaps().is_empty());
            assert_eq!(s.semigroup_polynomial(), IntPoly::one());
            assert!(s.is_symmetric());
            assert!(matches!(s.blocks(), Err(Error::NoGaps)));
        }
    }

    #[test]
    fn membership_matches_sieve() {
        for gens in [vec![4u64, 7], vec![3, 5, 7], vec![6, 10, 15], vec![5, 9, 21], vec![2, 3]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let bound = (s.frobenius() + 20) as u64;
            let member = members_by_sieve(&gens, bound);
            for n in 0..=bound {
                assert_eq!(
                    s.contains(n as i64),
                    member[n as usize],
                    "membership mismatch at {n} for {gens:?}"
                );
            }
            assert!(!s.contains(-1));
            assert!(!s.contains(-100));
        }
    }

    #[test]
    fn invariants_match_sieve_on_many_generator_sets() {
        // Deterministic family sweeping multiplicities and shapes.
        let mut families: Vec<Vec<u64>> = Vec::new();
        for a in 2..=12u64 {
            for b in (a + 1)..=(a + 9) {
                if num_integer::gcd(a, b) == 1 {
                    families.push(vec![a, b]);
                }
                for c in (b + 1)..=(b + 5) {
                    let g = num_integer::gcd(num_integer::gcd(a, b), c);
                    if g == 1 {
                        families.push(vec![a, b, c]);
                    }
                }
            }
        }
        for gens in families {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let (f, n, gaps) = invariants_by_sieve(&gens);
            assert_eq!(s.frobenius(), f, "frobenius mismatch for {gens:?}");
            assert_eq!(s.genus(), n, "genus mismatch for {gens:?}");
            assert_eq!(s.gaps(), gaps, "gap list mismatch for {gens:?}");
            assert_eq!(s.genus() as usize, s.gaps().len());
        }
    }

    #[test]
    fn apery_set_for_general_anchor() {
        let s = NumericalSemigroup::new(&[4, 7]).unwrap();
        // Anchor 7: least elements in each class mod 7.
        let ap = s.apery_set(7).unwrap();
        assert_eq!(ap.len(), 7);
        for (r, &w) in ap.iter().enumerate() {
            assert_eq!(w % 7, r as u64);
            assert!(s.contains(w as i64));
            assert!(w < 7 || !s.contains(w as i64 - 7), "w - 7 must be a gap");
        }
        assert!(matches!(s.apery_set(6), Err(Error::AperyAnchorNotMember { m: 6 })));
        assert!(matches!(s.apery_set(0), Err(Error::AperyAnchorNotMember { m: 0 })));
    }

    #[test]
    fn minimal_generators_regenerate_the_semigroup() {
        let cases: Vec<(Vec<u64>, Vec<u64>)> = vec![
            (vec![4, 6, 9, 20], vec![4, 6, 9]),
            (vec![2, 3, 4, 5], vec![2, 3]),
            (vec![6, 10, 15], vec![6, 10, 15]),
            (vec![1, 5], vec![1]),
            (vec![5, 7], vec![5, 7]),
        ];
        for (gens, expected) in cases {
            let s = NumericalSemigroup::new(&gens).unwrap();
            assert_eq!(s.minimal_generators(), expected.as_slice(), "for {gens:?}");
            let regenerated = NumericalSemigroup::new(s.minimal_generators()).unwrap();
            assert_eq!(regenerated.frobenius(), s.frobenius());
            assert_eq!(regenerated.genus(), s.genus());
            assert_eq!(regenerated.gaps(), s.gaps());
        }
    }

    #[test]
    fn semigroup_polynomial_examples() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.semigroup_polynomial(), IntPoly::from_i64_coeffs(&[1, -1, 1]));
        for gens in [vec![4u64, 7], vec![3, 5, 7], vec![4, 6, 9, 20]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let p = s.semigroup_polynomial();
            assert_eq!(p.degree(), Some((s.frobenius() + 1) as usize));
            assert!(p.coeffs().iter().all(|c| num_traits::Signed::abs(c) <= BigInt::one()));
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(NumericalSemigroup::new(&[5, 7]).unwrap().is_symmetric());
        assert!(NumericalSemigroup::new(&[4, 6, 9]).unwrap().is_symmetric());
        assert!(!NumericalSemigroup::new(&[3, 5, 7]).unwrap().is_symmetric());
    }

    #[test]
    fn block_decomposition_example() {
        let s = NumericalSemigroup::new(&[4, 7]).unwrap();
        let blocks = s.blocks().unwrap();
        assert_eq!(blocks.gap_blocks, vec![(1, 3), (5, 6), (9, 10), (13, 13), (17, 17)]);
        assert_eq!(
            blocks.element_blocks,
            vec![(0, 0), (4, 4), (7, 8), (11, 12), (14, 16)]
        );
    }

    #[test]
    fn denumerant_examples_and_oracle() {
        // Frozen values recomputed with the enumeration oracle below.
        assert_eq!(denumerant(6, &[2, 3]).unwrap(), BigInt::from(2));
        assert_eq!(denumerant(100, &[2, 3]).unwrap(), BigInt::from(17));
        assert_eq!(denumerant(0, &[5, 7]).unwrap(), BigInt::one());
        assert_eq!(denumerant(-3, &[5, 7]).unwrap(), BigInt::zero());
        assert_eq!(denumerant(1, &[5, 7]).unwrap(), BigInt::zero());
        for k in 0..=60i64 {
            for gens in [vec![2u64, 3], vec![4, 7], vec![3, 5, 7], vec![2, 2]] {
                assert_eq!(
                    denumerant(k, &gens).unwrap(),
                    BigInt::from(denumerant_by_enumeration(k, &gens)),
                    "denumerant mismatch at k={k}, gens={gens:?}"
                );
            }
        }
        assert!(matches!(
            denumerant(DENUMERANT_LIMIT + 1, &[2, 3]),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(denumerant(5, &[]).is_err());
        assert!(denumerant(5, &[0, 2]).is_err());
    }
}
