//! Symplectic counts for odd q: admissible canonical data, centralizer
//! dimensions, orbit sizes in sp(2n,q), and the pair totals S_n and NS_n.
//!
//! Canonical data splits into the nilpotent part λ_x (odd parts with even
//! multiplicity), one partition per self-dual irreducible φ = φ̄ of degree
//! 2d, and one partition per unordered pair {φ, φ̄}; a pair of degree-d
//! polynomials carries u-weight 2d·|λ| because both members receive the
//! same partition.
//!
//! Only cardinalities are computed here.  The nilpotent pairs counted by
//! NS_n live in a variety whose irreducible components (over the algebraic
//! closure) are indexed by the partitions of n into distinct parts; that
//! geometry stays out of scope.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::canonical::partition_multisets;
use crate::counts_gl::rational_count;
use crate::error::Error;
use crate::partitions::{sp_admissible_partitions_of, Partition};
use crate::polycount::{dual_pair_count_int, selfdual_count_int};
use crate::qexact::{euler_sum, pochhammer, PochBase, Scalar, USeries};
use crate::{QRat, Result};

/// Canonical data of an element of sp(2n,q).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SpData {
    /// Partition at φ = x; odd parts must have even multiplicity.
    pub lambda_x: Partition,
    /// Half-degree d (the polynomial has degree 2d) → one partition per
    /// distinct self-dual irreducible used.
    pub selfdual: BTreeMap<u32, Vec<Partition>>,
    /// Degree d of each pair member → one partition per pair {φ, φ̄} used.
    pub pairs: BTreeMap<u32, Vec<Partition>>,
}

impl SpData {
    pub fn nilpotent(lambda_x: Partition) -> Self {
        SpData {
            lambda_x,
            selfdual: BTreeMap::new(),
            pairs: BTreeMap::new(),
        }
    }

    /// Σ_φ d(φ)·|λ_φ| = |λ_x| + Σ 2d·|λ| over self-duals and pairs.
    pub fn weight(&self) -> u32 {
        let sd: u32 = self
            .selfdual
            .iter()
            .map(|(d, ls)| 2 * d * ls.iter().map(Partition::size).sum::<u32>())
            .sum();
        let pr: u32 = self
            .pairs
            .iter()
            .map(|(d, ls)| 2 * d * ls.iter().map(Partition::size).sum::<u32>())
            .sum();
        self.lambda_x.size() + sd + pr
    }
}

impl fmt::Display for SpData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x:{}", self.lambda_x)?;
        for (d, ls) in &self.selfdual {
            for l in ls {
                write!(f, " sd{}:{l}", 2 * d)?;
            }
        }
        for (d, ls) in &self.pairs {
            for l in ls {
                write!(f, " pair{d}:{l}")?;
            }
        }
        Ok(())
    }
}

/// The stratified expansion tracks u with u-degree equal to the
/// matrix-size weight, so sp(2n) sits at u^(2n); the closed product form
/// tracks v = u² with sp(2n) at v^n.  Both coefficient extractions go
/// through these two functions so the bookkeeping cannot drift apart.
fn stratified_degree(n: u32) -> usize {
    2 * n as usize
}

fn closed_form_degree(n: u32) -> usize {
    n as usize
}

fn check_odd(q: &BigInt) -> Result<()> {
    use num_integer::Integer;
    if q.is_even() {
        return Err(Error::EvenQ { q: q.clone() });
    }
    Ok(())
}

fn check_admissible(lambda: &Partition) -> Result<()> {
    if !lambda.is_sp_admissible() {
        return Err(Error::NotAdmissible {
            partition: lambda.to_string(),
        });
    }
    Ok(())
}

/// |Sp(2n,q)| = q^(n²)·Π_{i=1}^n (q^(2i) − 1).
pub fn group_order_sp<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let mut order = K::q_pow(ctx, (n as i64) * (n as i64));
    for i in 1..=n {
        order = order * (K::q_pow(ctx, 2 * i as i64) - K::one());
    }
    order
}

pub fn group_order_sp_int(q: &BigInt, n: u32) -> Result<BigInt> {
    check_odd(q)?;
    let v: QRat = group_order_sp(q, n);
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// Half-sum (Σ_i (λ'_i)² + o(λ))/2, asserting the numerator is even.
fn half_dim(lambda: &Partition, what: &str) -> Result<u64> {
    let numerator = lambda.sum_sq_conjugate() + lambda.odd_part_count() as u64;
    if numerator % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "odd numerator in half-integer exponent for {what} {lambda}"
        )));
    }
    Ok(numerator / 2)
}

/// Dimension of the centralizer in sp of an element with the given data:
/// Σ(λ'_x)²/2 + o(λ_x)/2 + Σ_{φ=φ̄} d(φ)·Σ(λ')²/2 + Σ_{pairs} d(φ)·Σ(λ')².
pub fn centralizer_dim_sp(data: &SpData) -> Result<u64> {
    check_admissible(&data.lambda_x)?;
    let mut dim = half_dim(&data.lambda_x, "nilpotent part")?;
    for (d, lambdas) in &data.selfdual {
        // degree 2d, halved: d·Σ(λ')²
        for l in lambdas {
            dim += *d as u64 * l.sum_sq_conjugate();
        }
    }
    for (d, lambdas) in &data.pairs {
        for l in lambdas {
            dim += *d as u64 * l.sum_sq_conjugate();
        }
    }
    Ok(dim)
}

/// The two expressions for the sp-centralizer dimension of a nilpotent of
/// type λ — Σ_{j<i} λ_i + Σ_i ⌈λ_i/2⌉ and Σ_i (λ'_i)²/2 + o(λ)/2 — must
/// coincide; returns the common value.
pub fn nilpotent_dim_formulas_agree(lambda: &Partition) -> Result<u64> {
    check_admissible(lambda)?;
    let expr1: u64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64 + (p as u64).div_ceil(2))
        .sum();
    let expr2 = half_dim(lambda, "nilpotent type")?;
    if expr1 != expr2 {
        return Err(Error::Inconsistent(format!(
            "centralizer-dimension expressions disagree on {lambda}: {expr1} vs {expr2}"
        )));
    }
    Ok(expr1)
}

/// Π_{r=1}^{⌊m/2⌋} (1 − 1/q^(2r)), the finite factor attached to a
/// multiplicity m in the nilpotent strata.
fn nil_poch<K: Scalar>(ctx: &K::Ctx, m: u32) -> K {
    pochhammer::<K>(ctx, PochBase::plain(2), m / 2)
}

/// Number of nilpotent elements of sp(2n,q) with Jordan type λ:
/// |Sp(2n,q)| / [q^(Σ(λ')²/2 + o(λ)/2)·Π_i Π_{r≤⌊m_i/2⌋}(1−1/q^(2r))].
pub fn nilpotent_count_sp(q: &BigInt, n: u32, lambda: &Partition) -> Result<BigInt> {
    check_odd(q)?;
    if lambda.size() != 2 * n {
        return Err(Error::WeightMismatch {
            got: lambda.size(),
            expected: 2 * n,
        });
    }
    check_admissible(lambda)?;
    let dim = half_dim(lambda, "nilpotent type")?;
    let mut denom = <QRat as Scalar>::q_pow(q, dim as i64);
    for (_, mult) in lambda.multiplicities() {
        denom = denom * nil_poch::<QRat>(q, mult);
    }
    let size: QRat = group_order_sp::<QRat>(q, n) / denom;
    if !size.is_integer() || !size.is_positive() {
        return Err(Error::NonIntegral {
            what: format!("sp nilpotent count of {lambda} at q = {q}"),
        });
    }
    Ok(size.to_integer())
}

/// Number of elements of sp(2n,q) with the given canonical data:
/// |Sp(2n,q)| / [q^dim · nilpotent factor · self-dual factors (alternating
/// Pochhammer at base q^d) · pair factors (plain Pochhammer at base q^d)].
pub fn orbit_size_sp(q: &BigInt, n: u32, data: &SpData) -> Result<BigInt> {
    check_odd(q)?;
    if data.weight() != 2 * n {
        return Err(Error::WeightMismatch {
            got: data.weight(),
            expected: 2 * n,
        });
    }
    let dim = centralizer_dim_sp(data)?;
    let mut denom = <QRat as Scalar>::q_pow(q, dim as i64);
    for (_, mult) in data.lambda_x.multiplicities() {
        denom = denom * nil_poch::<QRat>(q, mult);
    }
    for (d, lambdas) in &data.selfdual {
        for l in lambdas {
            for (_, mult) in l.multiplicities() {
                denom = denom * pochhammer::<QRat>(q, PochBase::alternating(*d), mult);
            }
        }
    }
    for (d, lambdas) in &data.pairs {
        for l in lambdas {
            for (_, mult) in l.multiplicities() {
                denom = denom * pochhammer::<QRat>(q, PochBase::plain(*d), mult);
            }
        }
    }
    let size: QRat = group_order_sp::<QRat>(q, n) / denom;
    if !size.is_integer() || !size.is_positive() {
        return Err(Error::NonIntegral {
            what: format!("sp orbit size of {data} at q = {q}"),
        });
    }
    Ok(size.to_integer())
}

/// Π_{i=1}^order (1+v^i)·Σ_m (q·v^i)^m/(1/q²)_m, the series whose v^n
/// coefficient is S_n/|Sp(2n,q)|.
pub fn pairs_series_sp<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    sp_series(ctx, order, 1)
}

/// The nilpotent analog: scale 1/q instead of q.
pub fn nilpairs_series_sp<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    sp_series(ctx, order, -1)
}

fn sp_series<K: Scalar>(ctx: &K::Ctx, order: usize, scale_exp: i64) -> USeries<K> {
    let mut acc = USeries::one(order);
    for i in 1..=order as u32 {
        let one_plus = USeries::one(order).add(&USeries::monomial(order, i as usize, K::one()));
        acc = acc
            .mul(&one_plus)
            .mul(&euler_sum(ctx, i, K::q_pow(ctx, scale_exp), PochBase::plain(2), order));
    }
    acc
}

/// S_n by the generating-function backend.
pub fn commuting_pairs_sp_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let degree = closed_form_degree(n);
    let series = pairs_series_sp::<K>(ctx, degree);
    group_order_sp::<K>(ctx, n) * series.coeff(degree).clone()
}

/// NS_n by the generating-function backend.
pub fn nilpotent_pairs_sp_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let degree = closed_form_degree(n);
    let series = nilpairs_series_sp::<K>(ctx, degree);
    group_order_sp::<K>(ctx, n) * series.coeff(degree).clone()
}

/// The stratified A-factor: Σ over admissible λ of
/// u^|λ| / Π_i Π_{r≤⌊m_i/2⌋}(1−1/q^(2r)), truncated at the order.
fn admissible_sum_series<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    let mut series = USeries::zero(order);
    for s in 0..=order as u32 {
        let mut coeff = K::zero();
        for lambda in sp_admissible_partitions_of(s) {
            let mut denom = K::one();
            for (_, mult) in lambda.multiplicities() {
                denom = denom * nil_poch::<K>(ctx, mult);
            }
            coeff = coeff + K::one() / denom;
        }
        series.set_coeff(s as usize, coeff);
    }
    series
}

/// S_n by the stratified backend: |Sp(2n,q)| times the u^(2n) coefficient
/// of A·Π_d B_d^N̄(2d,q)·Π_d C_d^M̄(d,q), where A sums over admissible
/// partitions, B_d carries the alternating Pochhammer at base q^d, and C_d
/// the plain one.  Numeric odd q only.
pub fn commuting_pairs_sp_class_sum(q: &BigInt, n: u32) -> Result<BigInt> {
    check_odd(q)?;
    let order = stratified_degree(n);
    let mut acc = admissible_sum_series::<QRat>(q, order);
    for d in 1..=n {
        let mut b_d = USeries::<QRat>::one(order);
        let mut c_d = USeries::<QRat>::one(order);
        let mut i = 1u32;
        while (2 * d * i) as usize <= order {
            b_d = b_d.mul(&euler_sum(q, 2 * d * i, QRat::one(), PochBase::alternating(d), order));
            c_d = c_d.mul(&euler_sum(q, 2 * d * i, QRat::one(), PochBase::plain(d), order));
            i += 1;
        }
        let nbar = selfdual_count_int(q, 2 * d)?;
        let mbar = dual_pair_count_int(q, d)?;
        acc = acc
            .mul(&b_d.pow(&nbar.to_biguint().expect("N̄ >= 0")))
            .mul(&c_d.pow(&mbar.to_biguint().expect("M̄ >= 0")));
    }
    let total: QRat = group_order_sp::<QRat>(q, n) * acc.coeff(order).clone();
    rational_count(total, || format!("S_{n} class_sum at q = {q}"))
}

/// NS_n by the stratified backend:
/// |Sp(2n,q)|·Σ over admissible |λ|=2n of
/// Π_i 1/[Π_{r≤⌊m_i/2⌋}(1−1/q^(2r))·q^⌊m_i/2⌋]; symbolic q works.
pub fn nilpotent_pairs_sp_class_sum<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    nilpotent_pairs_sp_class_sum_base(ctx, n, PochBase::plain(2))
}

/// Backend body with the Pochhammer base exposed for fault injection.
pub(crate) fn nilpotent_pairs_sp_class_sum_base<K: Scalar>(
    ctx: &K::Ctx,
    n: u32,
    base: PochBase,
) -> K {
    let mut total = K::zero();
    for lambda in sp_admissible_partitions_of(2 * n) {
        let mut denom = K::one();
        for (_, mult) in lambda.multiplicities() {
            denom = denom
                * pochhammer::<K>(ctx, base, mult / 2)
                * K::q_pow(ctx, (mult / 2) as i64);
        }
        total = total + K::one() / denom;
    }
    group_order_sp::<K>(ctx, n) * total
}

/// Every admissible canonical profile of weight 2n over F_q together with
/// its realization multiplicity (how many choices of actual self-dual
/// polynomials and dual pairs produce it).
pub fn enumerate_sp_weighted(n: u32, q: &BigInt) -> Result<Vec<(SpData, BigInt)>> {
    check_odd(q)?;
    let target = 2 * n;
    // supply per slot kind: self-dual of half-degree d, pairs of degree d
    let mut supplies: Vec<(bool, u32, BigInt)> = Vec::new();
    for d in 1..=n.max(1) {
        supplies.push((true, d, selfdual_count_int(q, 2 * d)?));
        supplies.push((false, d, dual_pair_count_int(q, d)?));
    }
    let mut out = Vec::new();
    // stack entries: (slot index, remaining weight, selfdual acc, pairs acc, multiplicity)
    type Acc = BTreeMap<u32, Vec<Partition>>;
    let mut stack: Vec<(usize, u32, Acc, Acc, BigInt)> =
        vec![(0, target, BTreeMap::new(), BTreeMap::new(), BigInt::one())];
    while let Some((slot, remaining, sd, pr, mult)) = stack.pop() {
        if slot == supplies.len() {
            // the nilpotent part absorbs the remaining weight
            for lambda_x in sp_admissible_partitions_of(remaining) {
                out.push((
                    SpData {
                        lambda_x,
                        selfdual: sd.clone(),
                        pairs: pr.clone(),
                    },
                    mult.clone(),
                ));
            }
            continue;
        }
        let (is_selfdual, d, ref supply) = supplies[slot];
        let unit = 2 * d;
        for s in 0..=remaining / unit {
            for multiset in partition_multisets(s, None) {
                let ways = if multiset.is_empty() {
                    BigInt::one()
                } else {
                    crate::canonical::assignment_ways(supply, &multiset)
                };
                if ways.is_zero() {
                    continue;
                }
                let mut sd2 = sd.clone();
                let mut pr2 = pr.clone();
                if !multiset.is_empty() {
                    if is_selfdual {
                        sd2.insert(d, multiset);
                    } else {
                        pr2.insert(d, multiset);
                    }
                }
                stack.push((slot + 1, remaining - s * unit, sd2, pr2, &mult * ways));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}
