//! Unitary-side counts: orbit sizes of GU(n,q) on its Lie algebra of
//! skew-Hermitian matrices, centralizer sizes, and the pair totals U_n and
//! NU_n.
//!
//! The orbits are indexed by the same canonical data as Mat(n,q); the only
//! change against the matrix case is the substitution q ↦ −q inside every
//! Pochhammer attached to an odd-degree polynomial, which is what
//! [`PochBase::unitary`] encodes.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::canonical::CanonicalData;
use crate::counts_gl::{centralizer_exponent, nilpotent_partition_sum, rational_count};
use crate::error::Error;
use crate::polycount::irreducible_count_int;
use crate::qexact::{euler_sum, pochhammer, PochBase, Scalar, USeries};
use crate::{QRat, Result};

/// |GU(n,q)| = q^(n(n−1)/2)·Π_{i=1}^n (q^i − (−1)^i); |GU(0,q)| = 1.
pub fn group_order_gu<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let mut order = K::q_pow(ctx, (n as i64 * (n as i64 - 1)) / 2);
    for i in 1..=n {
        let sign = if i % 2 == 0 { K::one() } else { -K::one() };
        order = order * (K::q_pow(ctx, i as i64) - sign);
    }
    order
}

pub fn group_order_gu_int(q: &BigInt, n: u32) -> BigInt {
    let v: QRat = group_order_gu(q, n);
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// Number of Lie-algebra elements commuting with an element of the given
/// data: the same q-power as in the matrix case (the F_q-dimension of the
/// skew-Hermitian centralizer equals the full centralizer dimension).
pub fn centralizer_size_u<K: Scalar>(ctx: &K::Ctx, data: &CanonicalData) -> K {
    K::q_pow(ctx, centralizer_exponent(data) as i64)
}

/// Size of the GU(n,q)-orbit with the given canonical data:
/// |GU(n,q)| / Π_φ [q^(d·Σ(λ'_i)²)·Π_i (1/q^d)_{m_i, q ↦ −q for odd d}].
pub fn orbit_size_u(q: &BigInt, n: u32, data: &CanonicalData) -> Result<BigInt> {
    if data.weight() != n {
        return Err(Error::WeightMismatch {
            got: data.weight(),
            expected: n,
        });
    }
    let mut denom = centralizer_size_u::<QRat>(q, data);
    for (d, lambda) in data.entries() {
        for (_, mult) in lambda.multiplicities() {
            denom = denom * pochhammer::<QRat>(q, PochBase::unitary(d), mult);
        }
    }
    let size: QRat = group_order_gu::<QRat>(q, n) / denom;
    if !size.is_integer() || !size.is_positive() {
        return Err(Error::NonIntegral {
            what: format!("GU orbit size of {data} at q = {q}"),
        });
    }
    Ok(size.to_integer())
}

/// Π_{i=1}^order Σ_m (q·u^i)^m/(1/q)_{m, q↦−q} — u^n coefficient is
/// U_n/|GU(n,q)|.
pub fn pairs_series_u<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    let mut acc = USeries::one(order);
    for i in 1..=order as u32 {
        acc = acc.mul(&euler_sum(
            ctx,
            i,
            K::q_pow(ctx, 1),
            PochBase::alternating(1),
            order,
        ));
    }
    acc
}

/// Π_{i=1}^order Σ_m (u^i/q)^m/(1/q)_{m, q↦−q} — the nilpotent analog.
/// The scale stays +1/q: substituting q ↦ −q in u^(im)/[q^m (1/q)_m]
/// flips the q^m factor and the (−1)^m of the alternating numerator
/// together, leaving (u^i/q)^m over the flipped Pochhammer.
pub fn nilpairs_series_u<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    let mut acc = USeries::one(order);
    for i in 1..=order as u32 {
        acc = acc.mul(&euler_sum(
            ctx,
            i,
            K::q_pow(ctx, -1),
            PochBase::alternating(1),
            order,
        ));
    }
    acc
}

/// U_n by the generating-function backend.
pub fn commuting_pairs_u_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let series = pairs_series_u::<K>(ctx, n as usize);
    group_order_gu::<K>(ctx, n) * series.coeff(n as usize).clone()
}

/// U_n by the stratified backend: |GU(n,q)|·[u^n] Π_d F_d(u)^N(d,q), F_d
/// built from the degree-d Pochhammer with the parity-dependent sign flip.
/// Numeric q only.
pub fn commuting_pairs_u_class_sum(q: &BigInt, n: u32) -> Result<BigInt> {
    let order = n as usize;
    let mut acc = USeries::<QRat>::one(order);
    for d in 1..=n {
        let mut f_d = USeries::<QRat>::one(order);
        let mut i = 1u32;
        while (i * d) as usize <= order {
            f_d = f_d.mul(&euler_sum(q, i * d, QRat::one(), PochBase::unitary(d), order));
            i += 1;
        }
        let count = irreducible_count_int(q, d)?;
        acc = acc.mul(&f_d.pow(&count.to_biguint().expect("N(d,q) >= 0")));
    }
    let total: QRat = group_order_gu::<QRat>(q, n) * acc.coeff(order).clone();
    rational_count(total, || format!("U_{n} class_sum at q = {q}"))
}

/// NU_n by the generating-function backend.
pub fn nilpotent_pairs_u_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let series = nilpairs_series_u::<K>(ctx, n as usize);
    group_order_gu::<K>(ctx, n) * series.coeff(n as usize).clone()
}

/// NU_n by the stratified backend:
/// |GU(n,q)|·Σ_{|λ|=n} Π_i 1/[q^(m_i)·(1/q)_{m_i, q↦−q}]; symbolic works.
pub fn nilpotent_pairs_u_class_sum<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    group_order_gu::<K>(ctx, n) * nilpotent_partition_sum(ctx, n, PochBase::alternating(1))
}
