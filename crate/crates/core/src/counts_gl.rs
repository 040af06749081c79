//! Matrix-side counts: class sizes in Mat(n,q), centralizer sizes, and the
//! commuting-pair totals G_n and NG_n through two independent backends.
//!
//! The class_sum backend keeps the product over polynomial degrees d with
//! the irreducible counts N(d,q) as explicit exponents (so it exercises the
//! class-size machinery); the gen_fn backend expands the collapsed product
//! Π_{i≥1} Π_{l≥0} 1/(1 − u^i/q^(l−1)), through its Euler form.  Both are
//! exact; agreement between them is part of the acceptance gate.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::canonical::CanonicalData;
use crate::error::Error;
use crate::partitions::partitions_of;
use crate::polycount::irreducible_count_int;
use crate::qexact::{euler_sum, pochhammer, PochBase, Scalar, USeries};
use crate::{QRat, Result};

/// |GL(n,q)| = q^(n(n−1)/2)·Π_{i=1}^n (q^i − 1); |GL(0,q)| = 1.
pub fn group_order_gl<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let mut order = K::q_pow(ctx, (n as i64 * (n as i64 - 1)) / 2);
    for i in 1..=n {
        order = order * (K::q_pow(ctx, i as i64) - K::one());
    }
    order
}

pub fn group_order_gl_int(q: &BigInt, n: u32) -> BigInt {
    let v: QRat = group_order_gl(q, n);
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// Exponent of the Mat-centralizer size: Σ_φ d(φ)·Σ_i (λ'_{φ,i})².
pub fn centralizer_exponent(data: &CanonicalData) -> u64 {
    data.entries()
        .map(|(d, l)| d as u64 * l.sum_sq_conjugate())
        .sum()
}

/// Number of matrices commuting with an element of the given canonical
/// form: q^(Σ_φ d(φ)·Σ_i (λ'_i)²).
pub fn centralizer_size_mat<K: Scalar>(ctx: &K::Ctx, data: &CanonicalData) -> K {
    K::q_pow(ctx, centralizer_exponent(data) as i64)
}

/// Π_φ Π_i (1/q^d(φ))_{m_i(λ_φ)}, the finite part of the centralizer order.
fn centralizer_poch<K: Scalar>(ctx: &K::Ctx, data: &CanonicalData) -> K {
    let mut acc = K::one();
    for (d, lambda) in data.entries() {
        for (_, mult) in lambda.multiplicities() {
            acc = acc * pochhammer::<K>(ctx, PochBase::plain(d), mult);
        }
    }
    acc
}

/// Number of elements of Mat(n,q) with the given canonical form:
/// |GL(n,q)| / Π_φ [q^(d·Σ(λ'_i)²)·Π_i (1/q^d)_{m_i}].
pub fn class_size(q: &BigInt, n: u32, data: &CanonicalData) -> Result<BigInt> {
    if data.weight() != n {
        return Err(Error::WeightMismatch {
            got: data.weight(),
            expected: n,
        });
    }
    let order: QRat = group_order_gl(q, n);
    let denom = centralizer_size_mat::<QRat>(q, data) * centralizer_poch::<QRat>(q, data);
    let size = order / denom;
    if !size.is_integer() || !size.is_positive() {
        return Err(Error::NonIntegral {
            what: format!("class size of {data} at q = {q}"),
        });
    }
    Ok(size.to_integer())
}

/// Π_{i=1}^order Σ_m (q·u^i)^m/(1/q)_m — the commuting-pair series whose
/// u^n coefficient is G_n/|GL(n,q)|.
pub fn pairs_series_gl<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    let mut acc = USeries::one(order);
    for i in 1..=order as u32 {
        acc = acc.mul(&euler_sum(ctx, i, K::q_pow(ctx, 1), PochBase::plain(1), order));
    }
    acc
}

/// Π_{i=1}^order Σ_m (u^i/q)^m/(1/q)_m — the nilpotent analog, with the
/// scale q replaced by 1/q (shifting each geometric factor by one q-power).
pub fn nilpairs_series_gl<K: Scalar>(ctx: &K::Ctx, order: usize) -> USeries<K> {
    let mut acc = USeries::one(order);
    for i in 1..=order as u32 {
        acc = acc.mul(&euler_sum(ctx, i, K::q_pow(ctx, -1), PochBase::plain(1), order));
    }
    acc
}

/// G_n by the generating-function backend: |GL(n,q)|·[u^n] pairs series.
pub fn commuting_pairs_gl_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let series = pairs_series_gl::<K>(ctx, n as usize);
    group_order_gl::<K>(ctx, n) * series.coeff(n as usize).clone()
}

/// G_n by the stratified backend: |GL(n,q)|·[u^n] Π_d F_d(u)^N(d,q) with
/// F_d(u) = Π_{i≥1} Σ_m u^(imd)/(1/q^d)_m.  Numeric q only — the exponents
/// N(d,q) must be integers.
pub fn commuting_pairs_gl_class_sum(q: &BigInt, n: u32) -> Result<BigInt> {
    let order = n as usize;
    let mut acc = USeries::<QRat>::one(order);
    for d in 1..=n {
        let mut f_d = USeries::<QRat>::one(order);
        let mut i = 1u32;
        while (i * d) as usize <= order {
            f_d = f_d.mul(&euler_sum(q, i * d, QRat::one(), PochBase::plain(d), order));
            i += 1;
        }
        let count = irreducible_count_int(q, d)?;
        acc = acc.mul(&f_d.pow(&count.to_biguint().expect("N(d,q) >= 0")));
    }
    let total: QRat = group_order_gl::<QRat>(q, n) * acc.coeff(order).clone();
    rational_count(total, || format!("G_{n} class_sum at q = {q}"))
}

/// NG_n by the generating-function backend.
pub fn nilpotent_pairs_gl_gen<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    let series = nilpairs_series_gl::<K>(ctx, n as usize);
    group_order_gl::<K>(ctx, n) * series.coeff(n as usize).clone()
}

/// NG_n by the stratified backend:
/// |GL(n,q)|·Σ_{|λ|=n} Π_i 1/[(1/q)_{m_i(λ)}·q^{m_i(λ)}].
/// Pure partition sum, so symbolic q works here.
pub fn nilpotent_pairs_gl_class_sum<K: Scalar>(ctx: &K::Ctx, n: u32) -> K {
    nilpotent_pairs_gl_class_sum_base(ctx, n, PochBase::plain(1))
}

/// Backend body with the Pochhammer base exposed, so the verifier's fault
/// injection can flip the sign of exactly one stratum family.
pub(crate) fn nilpotent_pairs_gl_class_sum_base<K: Scalar>(
    ctx: &K::Ctx,
    n: u32,
    base: PochBase,
) -> K {
    group_order_gl::<K>(ctx, n) * nilpotent_partition_sum(ctx, n, base)
}

/// Σ_{|λ|=n} Π_i 1/[(b)_{m_i(λ)}·q^{m_i(λ)}], the stratified nilpotent-pair
/// sum shared by the matrix (b = 1/q) and unitary (b = −1/q) families.
pub(crate) fn nilpotent_partition_sum<K: Scalar>(ctx: &K::Ctx, n: u32, base: PochBase) -> K {
    let mut total = K::zero();
    for lambda in partitions_of(n) {
        let mut denom = K::one();
        for (_, mult) in lambda.multiplicities() {
            denom = denom * pochhammer::<K>(ctx, base, mult) * K::q_pow(ctx, mult as i64);
        }
        total = total + K::one() / denom;
    }
    total
}

pub(crate) fn rational_count(v: QRat, what: impl Fn() -> String) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::NonIntegral { what: what() });
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_traits::Zero;

    use crate::partitions::Partition;
    use crate::qexact::{IntPoly, RatFn};

    use super::*;

    fn q(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn group_orders() {
        let sym: RatFn = group_order_gl(&(), 1);
        assert_eq!(sym.to_string(), "q - 1");
        assert_eq!(group_order_gl_int(&q(2), 2), BigInt::from(6));
        assert_eq!(group_order_gl_int(&q(2), 3), BigInt::from(168));
        assert_eq!(group_order_gl_int(&q(5), 0), BigInt::one());
    }

    #[test]
    fn class_size_examples() {
        // scalar matrix: a class of size 1
        let scalar = CanonicalData::single(1, Partition::new(vec![1]));
        assert_eq!(class_size(&q(7), 1, &scalar).unwrap(), BigInt::one());

        // irreducible characteristic polynomial, n = 2, q = 2: the
        // centralizer is F_4ˣ, so the class has 6/3 = 2 elements
        let irr = CanonicalData::single(2, Partition::new(vec![1]));
        assert_eq!(class_size(&q(2), 2, &irr).unwrap(), BigInt::from(2));

        // nonzero nilpotent 2×2 matrices: q² − 1
        let nil = CanonicalData::single(1, Partition::new(vec![2]));
        assert_eq!(class_size(&q(2), 2, &nil).unwrap(), BigInt::from(3));
        assert_eq!(class_size(&q(3), 2, &nil).unwrap(), BigInt::from(8));

        assert!(matches!(
            class_size(&q(2), 3, &nil),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn centralizer_size_examples() {
        let scalar = CanonicalData::single(1, Partition::new(vec![1]));
        assert_eq!(centralizer_size_mat::<QRat>(&q(5), &scalar), QRat::from(q(5)));

        let central2 = CanonicalData::single(1, Partition::new(vec![1, 1]));
        assert_eq!(centralizer_exponent(&central2), 4);

        let jordan = CanonicalData::single(1, Partition::new(vec![2]));
        assert_eq!(centralizer_exponent(&jordan), 2);
    }

    #[test]
    fn duality_with_the_group_order() {
        // class_size · q^(Σ d Σ(λ')²) · Π (1/q^d)_{m_i} = |GL(n,q)| exactly
        for n in 1..=4u32 {
            for (data, _) in crate::canonical::enumerate_weighted(n, &q(3)).unwrap() {
                let cs = QRat::from(class_size(&q(3), n, &data).unwrap());
                let back = cs
                    * centralizer_size_mat::<QRat>(&q(3), &data)
                    * centralizer_poch::<QRat>(&q(3), &data);
                assert_eq!(back, QRat::from(group_order_gl_int(&q(3), n)), "{data}");
            }
        }
    }

    #[test]
    fn classes_fill_the_whole_matrix_space() {
        // Σ multiplicity·class_size = q^(n²): every matrix has exactly one
        // canonical form
        for qq in [2i64, 3] {
            for n in 1..=4u32 {
                let mut total = BigInt::zero();
                for (data, mult) in crate::canonical::enumerate_weighted(n, &q(qq)).unwrap() {
                    total += mult * class_size(&q(qq), n, &data).unwrap();
                }
                assert_eq!(total, q(qq).pow(n * n), "n = {n}, q = {qq}");
            }
        }
    }

    #[test]
    fn nilpotent_classes_fill_the_nilpotent_cone() {
        // Σ_{|λ|=n} class_size(λ at x) = q^(n²−n)
        for qq in [2i64, 3] {
            for n in 1..=4u32 {
                let mut total = BigInt::zero();
                for lambda in partitions_of(n) {
                    total += class_size(&q(qq), n, &CanonicalData::single(1, lambda)).unwrap();
                }
                assert_eq!(total, q(qq).pow(n * n - n), "n = {n}, q = {qq}");
            }
        }
    }

    #[test]
    fn commuting_pairs_small_values() {
        // G_0 = 1, G_1 = q², G_2 = q⁶ + q⁵ − q³
        assert_eq!(commuting_pairs_gl_class_sum(&q(2), 0).unwrap(), BigInt::one());
        let g1: RatFn = commuting_pairs_gl_gen(&(), 1);
        assert_eq!(g1.to_string(), "q^2");
        let g2: RatFn = commuting_pairs_gl_gen(&(), 2);
        assert_eq!(g2.to_string(), "q^6 + q^5 - q^3");
        assert_eq!(commuting_pairs_gl_class_sum(&q(2), 2).unwrap(), BigInt::from(88));
        assert_eq!(commuting_pairs_gl_class_sum(&q(3), 2).unwrap(), BigInt::from(945));
        let gen2: QRat = commuting_pairs_gl_gen(&q(2), 2);
        assert_eq!(gen2, QRat::from(BigInt::from(88)));
    }

    #[test]
    fn nilpotent_pairs_small_values() {
        let n1: RatFn = nilpotent_pairs_gl_class_sum(&(), 1);
        assert_eq!(n1, RatFn::one());
        let n2: RatFn = nilpotent_pairs_gl_class_sum(&(), 2);
        assert_eq!(n2.to_string(), "q^3 + q^2 - q");
        let at2: QRat = nilpotent_pairs_gl_gen(&q(2), 2);
        assert_eq!(at2, QRat::from(BigInt::from(10)));
    }

    #[test]
    fn backends_agree_and_symbolic_evaluates() {
        for qq in [2i64, 3] {
            for n in 0..=6u32 {
                let class = commuting_pairs_gl_class_sum(&q(qq), n).unwrap();
                let gen: QRat = commuting_pairs_gl_gen(&q(qq), n);
                assert_eq!(QRat::from(class), gen, "pairs n = {n}, q = {qq}");

                let class_nil: QRat = nilpotent_pairs_gl_class_sum(&q(qq), n);
                let gen_nil: QRat = nilpotent_pairs_gl_gen(&q(qq), n);
                assert_eq!(class_nil, gen_nil, "nil n = {n}, q = {qq}");
            }
        }
        // symbolic gen_fn evaluated at q matches numeric gen_fn
        for n in 0..=5u32 {
            let sym: RatFn = commuting_pairs_gl_gen(&(), n);
            let poly: IntPoly = sym.as_poly().expect("G_n is a polynomial").clone();
            for qq in [2i64, 3, 4, 5] {
                let num: QRat = commuting_pairs_gl_gen(&q(qq), n);
                assert_eq!(QRat::from(poly.eval_int(&q(qq))), num);
            }
        }
    }
}
