//! Rational-canonical-form data: partition-valued assignments on monic
//! irreducible polynomials, the index set for matrix classes and for the
//! GL/GU Lie-algebra orbits.
//!
//! Class and orbit sizes depend on a polynomial only through its degree, so
//! data is stored per degree as a sorted list of partitions, one entry per
//! distinct polynomial of that degree.  The enumerator reports each such
//! profile together with its multiplicity — the number of ways to realize
//! it with distinct monic irreducibles, N(d,q) choose the used slots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::{partitions_of, Partition};
use crate::polycount::irreducible_count_int;
use crate::Result;

/// Canonical-form profile: degree → one partition per distinct polynomial
/// of that degree used, kept sorted so equal profiles compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CanonicalData {
    by_degree: BTreeMap<u32, Vec<Partition>>,
}

impl CanonicalData {
    pub fn new(mut by_degree: BTreeMap<u32, Vec<Partition>>) -> Self {
        by_degree.retain(|_, lambdas| !lambdas.is_empty());
        for lambdas in by_degree.values_mut() {
            assert!(
                lambdas.iter().all(|l| !l.is_empty()),
                "assigned partitions must be nonempty"
            );
            lambdas.sort();
        }
        CanonicalData { by_degree }
    }

    /// Data with a single polynomial of degree d carrying λ.
    pub fn single(d: u32, lambda: Partition) -> Self {
        let mut by_degree = BTreeMap::new();
        by_degree.insert(d, vec![lambda]);
        CanonicalData::new(by_degree)
    }

    pub fn empty() -> Self {
        CanonicalData {
            by_degree: BTreeMap::new(),
        }
    }

    /// Σ_φ d(φ)·|λ_φ|.
    pub fn weight(&self) -> u32 {
        self.by_degree
            .iter()
            .map(|(d, ls)| d * ls.iter().map(Partition::size).sum::<u32>())
            .sum()
    }

    /// (degree, λ) over all assigned polynomials.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &Partition)> {
        self.by_degree
            .iter()
            .flat_map(|(&d, ls)| ls.iter().map(move |l| (d, l)))
    }

    pub fn by_degree(&self) -> &BTreeMap<u32, Vec<Partition>> {
        &self.by_degree
    }
}

impl fmt::Display for CanonicalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.by_degree.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for (d, ls) in &self.by_degree {
            for l in ls {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "d{d}:{l}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// All multisets of nonempty partitions with total size `total`, each as a
/// sorted vector; `bound` caps the largest member to keep multisets unique.
pub(crate) fn partition_multisets(
    total: u32,
    bound: Option<&Partition>,
) -> Vec<Vec<Partition>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut result = Vec::new();
    for size in (1..=total).rev() {
        for head in partitions_of(size) {
            if let Some(b) = bound {
                if &head > b {
                    continue;
                }
            }
            for mut tail in partition_multisets(total - size, Some(&head)) {
                tail.push(head.clone());
                tail.sort();
                result.push(tail);
            }
        }
    }
    result
}

/// Falling factorial N·(N−1)⋯(N−t+1) divided by Π c_j! for the multiset's
/// repetition counts: the number of ways to attach the multiset to distinct
/// polynomials out of N.  Zero when t > N.
pub(crate) fn assignment_ways(n_polys: &BigInt, multiset: &[Partition]) -> BigInt {
    let mut ways = BigInt::one();
    let mut slot = BigInt::zero();
    for _ in multiset {
        ways *= n_polys - &slot;
        slot += 1;
    }
    if ways.is_zero() {
        return ways;
    }
    let mut run = 1u64;
    let mut divisor = BigInt::one();
    for w in multiset.windows(2) {
        if w[0] == w[1] {
            run += 1;
            divisor *= BigInt::from(run);
        } else {
            run = 1;
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&ways, &divisor);
    debug_assert!(r.is_zero(), "multinomial division is exact");
    q
}

/// Every canonical-form profile of weight n over F_q together with the
/// number of actual polynomial assignments realizing it.  The multiplicity
/// totals tie out to q^(n²) through the class-size mass checks.
pub fn enumerate_weighted(n: u32, q: &BigInt) -> Result<Vec<(CanonicalData, BigInt)>> {
    let mut poly_counts = Vec::new();
    for d in 1..=n.max(1) {
        poly_counts.push(irreducible_count_int(q, d)?);
    }
    let mut out = Vec::new();
    let mut stack: Vec<(u32, u32, BTreeMap<u32, Vec<Partition>>, BigInt)> =
        vec![(1, n, BTreeMap::new(), BigInt::one())];
    while let Some((d, remaining, acc, mult)) = stack.pop() {
        if remaining == 0 {
            out.push((CanonicalData { by_degree: acc }, mult));
            continue;
        }
        if d > remaining {
            continue;
        }
        let n_polys = &poly_counts[d as usize - 1];
        for s in 0..=remaining / d {
            for multiset in partition_multisets(s, None) {
                let ways = if multiset.is_empty() {
                    BigInt::one()
                } else {
                    assignment_ways(n_polys, &multiset)
                };
                if ways.is_zero() {
                    continue;
                }
                let mut next = acc.clone();
                if !multiset.is_empty() {
                    next.insert(d, multiset);
                }
                stack.push((d + 1, remaining - s * d, next, &mult * ways));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}
