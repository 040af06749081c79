//! Exhaustive orbit census: groups every element of a space by its
//! canonical-form fingerprint so the per-stratum counts can be checked
//! against the class/orbit size formulas.
//!
//! The fingerprint of a matrix M is the factored characteristic polynomial
//! together with, for each irreducible factor φ, the partition recovered
//! from the rank sequence of φ(M)^j.  For the skew-Hermitian space the
//! fingerprint is taken of θ·M, whose invariant data is defined over the
//! prime field.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::partitions::Partition;
use crate::Result;

use super::field::FqCtx;
use super::matrix::FqMat;
use super::poly::FPoly;
use super::space::{LieSpace, SpaceKind};

/// One irreducible factor of the characteristic polynomial with the
/// partition attached to it: coefficients ascending, encoded over the
/// coefficient field.
pub type FactorData = (Vec<u64>, Vec<u32>);

/// Fingerprint: sorted (φ, λ) list.
pub type CensusKey = Vec<FactorData>;

/// Recovers the partition attached to an irreducible factor φ from ranks of
/// φ(M)^j: the number of φ-blocks of size ≥ j is (rank^(j-1) − rank^j)/deg φ.
fn partition_of_factor(ctx: &FqCtx, m: &FqMat, phi: &FPoly, mult: u32) -> Partition {
    let degree = phi.degree().unwrap() as u32;
    let phi_m = m.eval_poly(ctx, phi);
    let mut ranks = vec![m.n];
    let mut power = FqMat::identity(ctx, m.n);
    for _ in 1..=mult {
        power = power.mul(ctx, &phi_m);
        ranks.push(power.rank(ctx));
    }
    let blocks: Vec<u32> = (1..ranks.len())
        .map(|j| {
            let drop = (ranks[j - 1] - ranks[j]) as u32;
            debug_assert_eq!(drop % degree, 0);
            drop / degree
        })
        .collect();
    // blocks[j-1] = number of parts ≥ j; convert to the part list
    let mut parts = Vec::new();
    for (j, &b) in blocks.iter().enumerate() {
        let next = blocks.get(j + 1).copied().unwrap_or(0);
        for _ in 0..(b - next) {
            parts.push(j as u32 + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Fingerprint of a single matrix, over the given polynomial field (the
/// prime field for the unitary census, the entry field otherwise).
fn fingerprint(entry_field: &FqCtx, poly_field: &FqCtx, m: &FqMat) -> Result<CensusKey> {
    let charpoly = m.charpoly(entry_field);
    // the polynomial must be defined over the census field; element structs
    // of the subfield are valid in the extension unchanged
    if poly_field.k() < entry_field.k()
        && !charpoly.coeffs.iter().all(|&c| entry_field.in_prime_field(c))
    {
        return Err(Error::Inconsistent(
            "characteristic polynomial not defined over the census field".into(),
        ));
    }
    let down = FPoly {
        coeffs: charpoly.coeffs.clone(),
    };
    let mut key: CensusKey = Vec::new();
    for (phi, mult) in down.factor(poly_field) {
        let lambda = partition_of_factor(entry_field, m, &phi, mult);
        debug_assert_eq!(lambda.size(), mult);
        let encoded: Vec<u64> = phi.coeffs.iter().map(|&c| poly_field.index(c)).collect();
        key.push((encoded, lambda.parts().to_vec()));
    }
    key.sort();
    Ok(key)
}

/// Groups all elements of the space by canonical-form fingerprint.
///
/// Keys factor over the coefficient field of the space; the counts per key
/// are exactly what the class-size and orbit-size formulas predict.
pub fn orbit_census(space: &LieSpace, force: bool) -> Result<BTreeMap<CensusKey, u64>> {
    let total = space.num_elements().unwrap_or(u64::MAX);
    if !force && total > 1 << super::space::SIZE_GUARD_BITS {
        return Err(Error::SizeGuard {
            bits: 64 - total.leading_zeros(),
            limit: super::space::SIZE_GUARD_BITS,
        });
    }
    let theta = match space.kind {
        SpaceKind::SkewHermitian => Some(space.field.skew_unit()),
        SpaceKind::Hermitian | SpaceKind::Mat | SpaceKind::Symplectic => None,
    };
    let mut census = BTreeMap::new();
    for idx in 0..total {
        let a = space.element(&space.coords_of_index(idx));
        let m = match theta {
            Some(t) => a.scale(&space.field, t),
            None => a,
        };
        let key = fingerprint(&space.field, &space.coeff, &m)?;
        *census.entry(key).or_insert(0u64) += 1;
    }
    Ok(census)
}

/// Decodes a census key back into (degree, partition) pairs.
pub fn key_factors(key: &CensusKey) -> Vec<(u32, Partition)> {
    key.iter()
        .map(|(coeffs, parts)| {
            (
                (coeffs.len() - 1) as u32,
                Partition::new(parts.clone()),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_of_mat_2_2() {
        // 16 matrices over F_2: scalar fingerprints count 1 each, the
        // nonzero-nilpotent stratum has q² - 1 = 3 elements
        let space = LieSpace::mat(2, 1, 2).unwrap();
        let census = orbit_census(&space, false).unwrap();
        let total: u64 = census.values().sum();
        assert_eq!(total, 16);

        let f2 = &space.coeff;
        // the zero matrix: data {x: (1,1)}
        let x_key: CensusKey = vec![(vec![0, 1], vec![1, 1])];
        assert_eq!(census.get(&x_key), Some(&1));
        // nonzero nilpotents: {x: (2)}
        let nil_key: CensusKey = vec![(vec![0, 1], vec![2])];
        assert_eq!(census.get(&nil_key), Some(&3));
        // the irreducible quadratic x²+x+1 gets one partition (1):
        // its stratum is |GL(2,2)| / |F_4ˣ| = 2
        let irr_key: CensusKey = vec![(vec![1, 1, 1], vec![1])];
        assert_eq!(census.get(&irr_key), Some(&2));
        let _ = f2;
    }

    #[test]
    fn census_of_gu_1_2_is_all_singletons() {
        // 1×1 skew-Hermitian over F_4: q = 2 elements, each its own orbit
        let space = LieSpace::skew_hermitian(2, 1).unwrap();
        let census = orbit_census(&space, false).unwrap();
        assert_eq!(census.len(), 2);
        assert!(census.values().all(|&c| c == 1));
    }
}
