//! q-Pochhammer products and the Euler rewrite of infinite products.
//!
//! The engine needs products of the shape Π_{l≥0} 1/(1 − v·b^l) with
//! v = scale·u^step and b = ±1/q^e.  They are never truncated in l;
//! instead each is rewritten through Euler's identity
//!
//!   Σ_{m≥0} v^m / ((1−b)(1−b²)⋯(1−b^m)) = Π_{l≥0} 1/(1 − v·b^l),
//!
//! whose left side contributes finitely many terms per u-coefficient.
//! That rewrite is the whole reason exact arithmetic is possible here.

use super::scalar::{scalar_pow, Scalar};
use super::series::USeries;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Base of a q-Pochhammer product: the value ±1/q^e.
///
/// The `Minus` variant covers both the q ↦ −q substitution (for odd e the
/// two coincide) and the genuinely alternating products at even e that the
/// symplectic self-dual factors need, so the sign is explicit rather than
/// derived from the exponent's parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PochBase {
    pub exponent: u32,
    pub sign: Sign,
}

impl PochBase {
    /// 1/q^e.
    pub fn plain(exponent: u32) -> Self {
        PochBase {
            exponent,
            sign: Sign::Plus,
        }
    }

    /// −1/q^e, giving the alternating product (1+1/q^e)(1−1/q^{2e})⋯.
    pub fn alternating(exponent: u32) -> Self {
        PochBase {
            exponent,
            sign: Sign::Minus,
        }
    }

    /// The base obtained from 1/q^d by substituting q ↦ −q, as the unitary
    /// orbit formulas prescribe: alternating for odd d, plain for even d.
    pub fn unitary(d: u32) -> Self {
        if d % 2 == 1 {
            PochBase::alternating(d)
        } else {
            PochBase::plain(d)
        }
    }

    /// The base as a field element.
    pub fn value<K: Scalar>(&self, ctx: &K::Ctx) -> K {
        let v = K::q_pow(ctx, -(self.exponent as i64));
        match self.sign {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

/// (b)_r = (1−b)(1−b²)⋯(1−b^r) with b the base value; (b)_0 = 1.
pub fn pochhammer<K: Scalar>(ctx: &K::Ctx, base: PochBase, r: u32) -> K {
    let b = base.value::<K>(ctx);
    let mut result = K::one();
    let mut b_pow = K::one();
    for _ in 0..r {
        b_pow = b_pow * b.clone();
        result = result * (K::one() - b_pow.clone());
    }
    result
}

/// Σ_{m=0}^{⌊order/step⌋} (scale)^m / (b)_m · u^(step·m), the Euler form of
/// Π_{l≥0} 1/(1 − scale·u^step·b^l) truncated at the stated order.
pub fn euler_sum<K: Scalar>(
    ctx: &K::Ctx,
    step: u32,
    scale: K,
    base: PochBase,
    order: usize,
) -> USeries<K> {
    assert!(step >= 1, "euler_sum needs a positive u-step");
    let b = base.value::<K>(ctx);
    let mut series = USeries::zero(order);
    let mut scale_pow = K::one();
    let mut poch = K::one();
    let mut b_pow = K::one();
    let mut m = 0u32;
    loop {
        let degree = (step as usize) * (m as usize);
        if degree > order {
            break;
        }
        series.set_coeff(degree, scale_pow.clone() / poch.clone());
        m += 1;
        scale_pow = scale_pow * scale.clone();
        b_pow = b_pow * b.clone();
        poch = poch * (K::one() - b_pow.clone());
    }
    series
}

/// Π_{s=1}^{r} (1 − b^s) for an arbitrary scalar b; used by the oracle-side
/// checks that expand products factor by factor instead of via Euler.
pub fn finite_product_recip<K: Scalar>(factors: &[K], order: usize) -> USeries<K>
where
    K: Scalar,
{
    // reciprocal of Π (1 − f·u^deg) style products is assembled by callers;
    // this helper only multiplies out Π 1/(1 − factors[l]·u) for l ≤ L.
    let mut acc = USeries::one(order);
    for f in factors {
        let factor = USeries::one(order).sub(&USeries::monomial(order, 1, f.clone()));
        acc = acc.mul(&factor.recip().expect("unit constant term"));
    }
    acc
}

/// Convenience: scale^m / (b)_m, the m-th Euler term, for direct use in
/// stratified sums.
pub fn euler_term<K: Scalar>(ctx: &K::Ctx, scale: &K, base: PochBase, m: u32) -> K {
    scalar_pow(scale, m as u64) / pochhammer::<K>(ctx, base, m)
}
