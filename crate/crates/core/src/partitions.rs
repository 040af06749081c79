//! Integer partitions and the statistics the counting formulas consume.
//!
//! A partition λ is stored as its weakly decreasing list of positive parts;
//! the empty list is the unique partition of 0.  The statistics exposed here
//! are exactly the ones the orbit and centralizer formulas need: the
//! conjugate λ', the multiplicities m_i(λ), Σ_i (λ'_i)², the number o(λ) of
//! odd parts, and the double sum Σ_{i,j} min(λ_i, λ_j) which serves as an
//! independent route to Σ_i (λ'_i)².

use std::collections::BTreeMap;
use std::fmt;

/// A partition of a non-negative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Creates a partition, checking that parts are positive and weakly
    /// decreasing.
    ///
    /// Panics on invalid input; invalid part lists are programming errors,
    /// not runtime conditions.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the partitioned integer.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition λ', with λ'_i the size of the i-th column of
    /// the diagram; equivalently λ'_i = m_i(λ) + m_{i+1}(λ) + ⋯.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            let col = self.parts.iter().filter(|&&p| p as usize >= i).count() as u32;
            parts.push(col);
        }
        Partition { parts }
    }

    /// m_i(λ): part size → number of parts of that size, omitting zeros.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Σ_i (λ'_i)².
    pub fn sum_sq_conjugate(&self) -> u64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| (c as u64) * (c as u64))
            .sum()
    }

    /// Σ_{i,j ≥ 1} min(λ_i, λ_j), evaluated by the direct double loop.
    ///
    /// Equal to [`sum_sq_conjugate`](Self::sum_sq_conjugate); kept as a
    /// deliberately independent computation so the two can cross-check each
    /// other.
    pub fn min_sum(&self) -> u64 {
        let mut total = 0u64;
        for &a in &self.parts {
            for &b in &self.parts {
                total += a.min(b) as u64;
            }
        }
        total
    }

    /// o(λ): the number of parts of odd size.
    pub fn odd_part_count(&self) -> u32 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// True when every odd part size occurs with even multiplicity (the
    /// Jordan types that occur for nilpotent elements of sp).
    pub fn is_sp_admissible(&self) -> bool {
        self.multiplicities()
            .iter()
            .all(|(&size, &mult)| size % 2 == 0 || mult % 2 == 0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all partitions of `n` in decreasing lexicographic order:
/// (n), (n-1,1), …, (1,…,1).  The fixed order keeps every backend summing
/// strata identically, so reports are reproducible bit for bit.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

/// All partitions of `n`, each exactly once, decreasing lexicographic.
pub fn partitions_of(n: u32) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

/// Partitions of `n` in which every odd part has even multiplicity.
pub fn sp_admissible_partitions_of(n: u32) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(|p| p.is_sp_admissible())
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor in decreasing lexicographic order: shrink the rightmost
        // part larger than 1 and redistribute everything to its right.
        let succ = current
            .iter()
            .rposition(|&p| p > 1)
            .map(|i| {
                let reduced = current[i] - 1;
                let mut remaining = current[i] + (current.len() - 1 - i) as u32;
                let mut parts = current[..i].to_vec();
                while remaining >= reduced {
                    parts.push(reduced);
                    remaining -= reduced;
                }
                if remaining > 0 {
                    parts.push(remaining);
                }
                parts
            });
        self.next = succ;
        Some(Partition { parts: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// p(n) by the pentagonal-number recurrence; independent of the iterator.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                total += sign * p[m - g1 as usize];
                if g2 as usize <= m {
                    total += sign * p[m - g2 as usize];
                }
                k += 1;
            }
            p[m] = total;
        }
        p[n] as u64
    }

    #[test]
    fn conjugate_of_5441() {
        let p = Partition::new(vec![5, 4, 4, 1]);
        assert_eq!(p.conjugate(), Partition::new(vec![4, 3, 3, 3, 1]));
    }

    #[test]
    fn conjugate_edge_cases() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let rect = Partition::new(vec![3, 3]);
        assert_eq!(rect.conjugate(), Partition::new(vec![2, 2, 2]));
    }

    #[test]
    fn multiplicities_examples() {
        let p = Partition::new(vec![5, 4, 4, 1]);
        let m = p.multiplicities();
        assert_eq!(m.get(&5), Some(&1));
        assert_eq!(m.get(&4), Some(&2));
        assert_eq!(m.get(&1), Some(&1));
        assert_eq!(m.len(), 3);

        let m = Partition::new(vec![2, 2, 2]).multiplicities();
        assert_eq!(m.get(&2), Some(&3));
        assert_eq!(m.len(), 1);

        assert!(Partition::empty().multiplicities().is_empty());
    }

    #[test]
    fn sum_sq_conjugate_examples() {
        assert_eq!(Partition::new(vec![5, 4, 4, 1]).sum_sq_conjugate(), 44);
        assert_eq!(Partition::new(vec![1]).sum_sq_conjugate(), 1);
        for n in 1..=12 {
            assert_eq!(Partition::new(vec![n]).sum_sq_conjugate(), n as u64);
        }
    }

    #[test]
    fn min_sum_examples() {
        assert_eq!(Partition::new(vec![2, 1]).min_sum(), 5);
        assert_eq!(Partition::new(vec![1]).min_sum(), 1);
        assert_eq!(Partition::new(vec![5, 4, 4, 1]).min_sum(), 44);
    }

    #[test]
    fn odd_part_count_examples() {
        assert_eq!(Partition::new(vec![5, 4, 4, 1]).odd_part_count(), 2);
        assert_eq!(Partition::new(vec![2, 2]).odd_part_count(), 0);
        assert_eq!(Partition::new(vec![3, 3, 1, 1]).odd_part_count(), 4);
    }

    #[test]
    fn iteration_order_and_counts() {
        let got: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(got, vec![Partition::empty()]);

        let got: Vec<Vec<u32>> = partitions_of(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );

        assert_eq!(partitions_of(10).count() as u64, 42);
        for n in 0..=20u32 {
            let listed: Vec<Partition> = partitions_of(n).collect();
            assert_eq!(listed.len() as u64, partition_count(n as usize), "p({n})");
            // no duplicates, strictly decreasing lexicographic
            assert!(listed.windows(2).all(|w| w[0] > w[1]));
            assert!(listed.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn sp_admissible_examples() {
        let got: Vec<Vec<u32>> = sp_admissible_partitions_of(2)
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![2], vec![1, 1]]);

        assert_eq!(sp_admissible_partitions_of(1).count(), 0);

        let got: Vec<Vec<u32>> = sp_admissible_partitions_of(4)
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..=6, 0..=6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involutive(p in arb_partition()) {
            prop_assert_eq!(p.conjugate().conjugate(), p);
        }

        #[test]
        fn min_sum_equals_sum_sq_conjugate(p in arb_partition()) {
            prop_assert_eq!(p.min_sum(), p.sum_sq_conjugate());
        }

        #[test]
        fn multiplicities_weigh_to_size(p in arb_partition()) {
            let weighted: u32 = p.multiplicities().iter().map(|(i, m)| i * m).sum();
            prop_assert_eq!(weighted, p.size());
            let first_col = p.conjugate().parts().first().copied().unwrap_or(0);
            prop_assert_eq!(first_col as usize, p.num_parts());
        }
    }

    #[test]
    fn conjugation_is_involutive_exhaustively() {
        for n in 0..=20u32 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn admissible_statistics_have_even_parity() {
        // o(λ) even, and Σ (λ'_i)² + o(λ) even, so the symplectic
        // half-integer exponents always resolve to integers.
        for n in 0..=16u32 {
            for p in sp_admissible_partitions_of(n) {
                assert_eq!(p.odd_part_count() % 2, 0, "{p}");
                assert_eq!((p.sum_sq_conjugate() + p.odd_part_count() as u64) % 2, 0, "{p}");
            }
        }
    }

    #[test]
    fn admissible_matches_filter_of_all_partitions() {
        for n in 0..=14u32 {
            let filtered: Vec<Partition> =
                partitions_of(n).filter(|p| p.is_sp_admissible()).collect();
            let direct: Vec<Partition> = sp_admissible_partitions_of(n).collect();
            assert_eq!(filtered, direct);
        }
    }
}
