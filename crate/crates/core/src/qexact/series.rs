//! Truncated power series in the bookkeeping variable u.
//!
//! A `USeries` of order N carries the coefficients of u^0 … u^N and all
//! arithmetic is exact modulo u^(N+1).  Binary operations require matching
//! orders; there is no silent re-truncation.

use num_bigint::BigUint;

use crate::error::Error;
use crate::Result;

use super::scalar::Scalar;

/// Power series in u truncated at a stated order, with exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct USeries<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> USeries<K> {
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![K::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = USeries::zero(order);
        s.coeffs[0] = K::one();
        s
    }

    /// c·u^k as a series of the given order (k may exceed the order, in
    /// which case the term truncates away).
    pub fn monomial(order: usize, k: usize, c: K) -> Self {
        let mut s = USeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the u^0 coefficient");
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &K {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: K) {
        self.coeffs[k] = c;
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series orders must match exactly"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let n = self.order();
        let mut coeffs = vec![K::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        USeries { coeffs }
    }

    /// Multiplicative inverse modulo u^(N+1); the constant term must be a
    /// unit of the coefficient field.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnitConstant);
        }
        let inv_a0 = K::one() / a0.clone();
        let n = self.order();
        let mut coeffs = vec![K::zero(); n + 1];
        coeffs[0] = inv_a0.clone();
        for m in 1..=n {
            let mut acc = K::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() || coeffs[m - k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * coeffs[m - k].clone();
            }
            coeffs[m] = -(inv_a0.clone() * acc);
        }
        Ok(USeries { coeffs })
    }

    /// self^e for a non-negative integer exponent, by repeated squaring.
    /// Exponents routinely reach the irreducible-polynomial counts N(d,q),
    /// which exceed u64 already at moderate q, hence `BigUint`.
    pub fn pow(&self, e: &BigUint) -> Self {
        let order = self.order();
        let mut result = USeries::one(order);
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        result
    }

    /// self^α for a scalar exponent α of the coefficient field, via the
    /// generalized binomial series Σ_k C(α,k)·(self − 1)^k.  The sum is
    /// finite because self − 1 has positive valuation, which is why the
    /// constant term must be exactly 1.
    pub fn pow_scalar(&self, alpha: &K) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonMonicBase);
        }
        let order = self.order();
        let mut g = self.clone();
        g.coeffs[0] = K::zero();
        let mut result = USeries::one(order);
        let mut g_pow = USeries::one(order);
        let mut binom = K::one();
        for k in 1..=order {
            g_pow = g_pow.mul(&g);
            // C(α,k) = C(α,k-1)·(α-k+1)/k
            binom = binom * (alpha.clone() - K::from_int(k as i64 - 1)) / K::from_int(k as i64);
            if g_pow.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
            result = result.add(&g_pow.scale(&binom));
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    use crate::qexact::RatFn;

    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn one_minus_u_times_geometric_is_one() {
        let n = 8;
        let mut geo = USeries::<BigRational>::zero(n);
        for k in 0..=n {
            geo.set_coeff(k, BigRational::one());
        }
        let one_minus_u = USeries::one(n).sub(&USeries::monomial(n, 1, BigRational::one()));
        assert_eq!(one_minus_u.mul(&geo), USeries::one(n));
        assert_eq!(one_minus_u.recip().unwrap(), geo);
    }

    #[test]
    fn pow_edge_cases() {
        let s = USeries::from_coeffs(vec![rat(1, 1), rat(3, 2), rat(-1, 5)]);
        assert_eq!(s.pow(&BigUint::from(0u32)), USeries::one(2));
        assert_eq!(s.pow(&BigUint::from(1u32)), s);
        assert_eq!(s.pow(&BigUint::from(3u32)), s.mul(&s).mul(&s));
    }

    #[test]
    fn recip_of_one_minus_qu_symbolic() {
        // 1/(1-qu) = 1 + qu + q²u²
        let n = 2;
        let s = USeries::<RatFn>::one(n).sub(&USeries::monomial(n, 1, RatFn::q()));
        let r = s.recip().unwrap();
        assert_eq!(r.coeff(0), &RatFn::one());
        assert_eq!(r.coeff(1), &RatFn::q());
        assert_eq!(r.coeff(2), &RatFn::q_pow(2));
    }

    #[test]
    fn recip_requires_unit_constant() {
        let s = USeries::<BigRational>::monomial(3, 1, rat(1, 1));
        assert!(matches!(s.recip(), Err(Error::NonUnitConstant)));
    }

    #[test]
    fn pow_scalar_matches_integer_pow() {
        let s = USeries::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(-1, 3), rat(0, 1), rat(5, 7)]);
        for e in 0..5i64 {
            let via_binomial = s.pow_scalar(&rat(e, 1)).unwrap();
            let via_squaring = s.pow(&BigUint::from(e as u64));
            assert_eq!(via_binomial, via_squaring, "e = {e}");
        }
    }

    #[test]
    fn pow_scalar_symbolic_exponent() {
        // (1 - u)^α has u-coefficient -α
        let n = 3;
        let s = USeries::<RatFn>::one(n).sub(&USeries::monomial(n, 1, RatFn::one()));
        let alpha = RatFn::new("q^2 - q".parse().unwrap(), "2".parse().unwrap());
        let p = s.pow_scalar(&alpha).unwrap();
        assert_eq!(p.coeff(1), &-alpha.clone());
        // and evaluates consistently with integer exponents at q = 3 (α = 3)
        let at3 = p.coeff(2).eval(&BigRational::from(BigInt::from(3))).unwrap();
        assert_eq!(at3, rat(3, 1)); // C(3,2) = 3
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms_hold_exactly(
            a in proptest::collection::vec((-9i64..=9, 1i64..=9), 5),
            b in proptest::collection::vec((-9i64..=9, 1i64..=9), 5),
            c in proptest::collection::vec((-9i64..=9, 1i64..=9), 5),
        ) {
            let mk = |v: &[(i64, i64)]| {
                USeries::from_coeffs(v.iter().map(|&(n, d)| rat(n, d)).collect())
            };
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
