//! Counting monic irreducible polynomials over F_q.
//!
//! N(d,q) comes from the classical Möbius/necklace formula.  The symplectic
//! counts N̄(2d,q) (self-dual irreducibles of degree 2d, φ = φ̄ under
//! φ ↦ (−1)^deg φ(−x)) and M̄(d,q) (unordered pairs {φ, φ̄} with φ ≠ φ̄ of
//! degree d) have no closed form here; they are obtained by inverting the
//! two product identities
//!
//!   Π_d (1−u^d)^{−N̄(2d,q)} · Π_d (1−u^d)^{−M̄(d,q)} = (1−u)/(1−qu),
//!   Π_d (1+u^d)^{−N̄(2d,q)} · Π_d (1−u^d)^{−M̄(d,q)} = 1,
//!
//! degree by degree through their logarithms.  A brute-force enumeration of
//! small-degree polynomials validates the inversion in the tests.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::bruteforce::field::{make_field, FqCtx};
use crate::bruteforce::poly::{monic_irreducibles, FPoly};
use crate::error::Error;
use crate::qexact::Scalar;
use crate::Result;

/// Möbius function by trial factorization; plenty for degrees ≤ 64.
pub fn mobius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// N(d,q) = (1/d)·Σ_{e|d} μ(e)·q^(d/e), the number of monic irreducibles
/// of degree d over F_q.
pub fn irreducible_count<K: Scalar>(ctx: &K::Ctx, d: u32) -> K {
    assert!(d >= 1);
    let mut sum = K::zero();
    for e in divisors(d) {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        sum = sum + K::from_int(mu) * K::q_pow(ctx, (d / e) as i64);
    }
    sum / K::from_int(d as i64)
}

/// N(d,q) at numeric q as an integer; the division by d is asserted exact.
pub fn irreducible_count_int(q: &BigInt, d: u32) -> Result<BigInt> {
    let v: crate::QRat = irreducible_count(q, d);
    if !v.is_integer() {
        return Err(Error::NonIntegral {
            what: format!("N({d}, {q})"),
        });
    }
    Ok(v.to_integer())
}

/// N̄(2d,q) and M̄(d,q) for d = 1..=max_d.
#[derive(Clone, Debug)]
pub struct SelfDualCounts<K> {
    nbar: Vec<K>,
    mbar: Vec<K>,
}

impl<K: Scalar> SelfDualCounts<K> {
    /// N̄(2d,q): monic irreducibles of degree 2d with φ = φ̄.
    pub fn nbar(&self, d: u32) -> &K {
        &self.nbar[d as usize - 1]
    }

    /// M̄(d,q): unordered pairs {φ, φ̄}, φ ≠ φ̄, of degree d.
    pub fn mbar(&self, d: u32) -> &K {
        &self.mbar[d as usize - 1]
    }

    pub fn max_d(&self) -> u32 {
        self.nbar.len() as u32
    }
}

/// Degree-by-degree inversion of the two self-dual product identities.
///
/// Taking logarithms turns them into, for every k ≥ 1,
///   Σ_{d|k} d·(N̄(2d)+M̄(d)) = q^k − 1,
///   Σ_{d|k} d·(M̄(d) + (−1)^(k/d)·N̄(2d)) = 0,
/// a 2×2 system in (N̄(2k), M̄(k)) once smaller degrees are known.
pub fn selfdual_pair_counts<K: Scalar>(ctx: &K::Ctx, max_d: u32) -> SelfDualCounts<K> {
    let mut nbar: Vec<K> = Vec::with_capacity(max_d as usize);
    let mut mbar: Vec<K> = Vec::with_capacity(max_d as usize);
    for k in 1..=max_d {
        let mut e1 = K::q_pow(ctx, k as i64) - K::one();
        let mut e2 = K::zero();
        for d in divisors(k) {
            if d == k {
                continue;
            }
            let (n_d, m_d) = (&nbar[d as usize - 1], &mbar[d as usize - 1]);
            let dk = K::from_int(d as i64);
            e1 = e1 - dk.clone() * (n_d.clone() + m_d.clone());
            let sign = if (k / d) % 2 == 0 {
                n_d.clone()
            } else {
                -n_d.clone()
            };
            e2 = e2 - dk * (m_d.clone() + sign);
        }
        let two_k = K::from_int(2 * k as i64);
        nbar.push((e1.clone() - e2.clone()) / two_k.clone());
        mbar.push((e1 + e2) / two_k);
    }
    SelfDualCounts { nbar, mbar }
}

/// N̄(two_d, q); two_d must be even.
pub fn selfdual_count<K: Scalar>(ctx: &K::Ctx, two_d: u32) -> K {
    assert!(two_d >= 2 && two_d % 2 == 0, "self-dual irreducibles other than x have even degree");
    selfdual_pair_counts::<K>(ctx, two_d / 2).nbar(two_d / 2).clone()
}

/// M̄(d, q).  For d = 1 the polynomial x (the unique φ = φ̄ of odd degree)
/// is excluded, leaving the (q−1)/2 pairs {x−a, x+a}.
pub fn dual_pair_count<K: Scalar>(ctx: &K::Ctx, d: u32) -> K {
    assert!(d >= 1);
    selfdual_pair_counts::<K>(ctx, d).mbar(d).clone()
}

/// Exhaustive degree-d lists over F_q by trial factorization; test oracle.
pub struct PolyOracle {
    pub field: FqCtx,
    pub irreducible: Vec<FPoly>,
    pub self_dual: Vec<FPoly>,
    pub dual_pairs: Vec<(FPoly, FPoly)>,
}

const ORACLE_MAX_D: u32 = 4;
const ORACLE_MAX_Q: u64 = 7;

/// Enumerates all monic irreducibles of degree d over F_q (q = p or p² ≤ 7),
/// split into self-duals and unordered dual pairs.
pub fn enumerate_polys(q: u64, d: u32) -> Result<PolyOracle> {
    if d == 0 || d > ORACLE_MAX_D || q > ORACLE_MAX_Q {
        return Err(Error::OracleRange {
            max_d: ORACLE_MAX_D,
            max_q: ORACLE_MAX_Q,
        });
    }
    let field = match q {
        4 => make_field(2, 2)?,
        _ => make_field(q, 1)?,
    };
    let irreducible = monic_irreducibles(&field, d as usize);
    let mut self_dual = Vec::new();
    let mut dual_pairs = Vec::new();
    for phi in &irreducible {
        let bar = phi.bar(&field);
        if bar == *phi {
            // x is self-dual but is not counted by N̄
            let is_x = *phi == FPoly::x(&field);
            if !is_x {
                self_dual.push(phi.clone());
            }
        } else if *phi < bar {
            dual_pairs.push((phi.clone(), bar));
        }
    }
    Ok(PolyOracle {
        field,
        irreducible,
        self_dual,
        dual_pairs,
    })
}

/// Numeric N̄(2d,q) as an integer (odd q), with exactness asserted.
pub fn selfdual_count_int(q: &BigInt, two_d: u32) -> Result<BigInt> {
    let v: crate::QRat = selfdual_count(q, two_d);
    rational_count(v, || format!("N̄({two_d}, {q})"))
}

/// Numeric M̄(d,q) as an integer (odd q), with exactness asserted.
pub fn dual_pair_count_int(q: &BigInt, d: u32) -> Result<BigInt> {
    let v: crate::QRat = dual_pair_count(q, d);
    rational_count(v, || format!("M̄({d}, {q})"))
}

fn rational_count(v: crate::QRat, what: impl Fn() -> String) -> Result<BigInt> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::NonIntegral { what: what() });
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use num_traits::One;

    use crate::qexact::{RatFn, USeries};
    use crate::QRat;

    use super::*;

    fn q(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn irreducible_count_examples() {
        // d = 1: all x - a
        let sym: RatFn = irreducible_count(&(), 1);
        assert_eq!(sym, RatFn::q());
        // d = 2, q = 2 → 1; d = 3, q = 2 → 2; cross-checked by enumeration
        assert_eq!(irreducible_count_int(&q(2), 2).unwrap(), BigInt::from(1));
        assert_eq!(irreducible_count_int(&q(2), 3).unwrap(), BigInt::from(2));
        for qq in [2u64, 3, 5] {
            for d in 1..=4u32 {
                let oracle = enumerate_polys(qq, d).unwrap();
                let formula = irreducible_count_int(&q(qq as i64), d).unwrap();
                assert_eq!(
                    BigInt::from(oracle.irreducible.len()),
                    formula,
                    "N({d}, {qq})"
                );
            }
        }
    }

    #[test]
    fn divisor_sum_recovers_q_powers() {
        // Σ_{e|d} e·N(e) = q^d, unique factorization degree count
        for qq in [2i64, 3, 5, 9] {
            for d in 1..=8u32 {
                let mut sum = QRat::from(BigInt::from(0));
                for e in divisors(d) {
                    let n: QRat = irreducible_count(&q(qq), e);
                    sum += QRat::from(BigInt::from(e)) * n;
                }
                assert_eq!(sum, QRat::from(q(qq).pow(d)));
            }
        }
    }

    #[test]
    fn oracle_lists_smallest_cases() {
        // degree 1 over F_2: exactly {x, x+1}
        let oracle = enumerate_polys(2, 1).unwrap();
        let f = &oracle.field;
        let x = crate::bruteforce::FPoly::x(f);
        let x1 = crate::bruteforce::FPoly::new(f, vec![f.one(), f.one()]);
        assert_eq!(oracle.irreducible, vec![x.clone(), x1.clone()]);
        // in characteristic 2 the involution is the identity, so x+1 is
        // formally self-dual; only odd q feeds the symplectic counts
        assert_eq!(oracle.self_dual, vec![x1]);
        assert!(oracle.dual_pairs.is_empty());

        // self-dual quadratics over F_3: exactly {x² + 1}
        let oracle = enumerate_polys(3, 2).unwrap();
        let f = &oracle.field;
        let x2_plus_1 = crate::bruteforce::FPoly::new(f, vec![f.one(), f.zero(), f.one()]);
        assert_eq!(oracle.self_dual, vec![x2_plus_1]);
    }

    #[test]
    fn oracle_range_is_enforced() {
        assert!(matches!(
            enumerate_polys(11, 2),
            Err(crate::Error::OracleRange { .. })
        ));
        assert!(matches!(
            enumerate_polys(3, 5),
            Err(crate::Error::OracleRange { .. })
        ));
    }

    #[test]
    fn degree_one_sanity() {
        // N̄(2,q) = M̄(1,q) = (q-1)/2, symbolically
        let counts = selfdual_pair_counts::<RatFn>(&(), 1);
        let half_qm1 = RatFn::new("q - 1".parse().unwrap(), "2".parse().unwrap());
        assert_eq!(counts.nbar(1), &half_qm1);
        assert_eq!(counts.mbar(1), &half_qm1);
    }

    #[test]
    fn selfdual_examples_match_enumeration() {
        // N̄(2,3) = 1 (x²+1), N̄(2,5) = 2, M̄(1,3) = 1, M̄(1,5) = 2
        assert_eq!(selfdual_count_int(&q(3), 2).unwrap(), BigInt::from(1));
        assert_eq!(selfdual_count_int(&q(5), 2).unwrap(), BigInt::from(2));
        assert_eq!(dual_pair_count_int(&q(3), 1).unwrap(), BigInt::from(1));
        assert_eq!(dual_pair_count_int(&q(5), 1).unwrap(), BigInt::from(2));

        for qq in [3u64, 5, 7] {
            // degree-d data against exhaustive enumeration, incl. the
            // 81 monic quartics over F_3
            for d in 1..=4u32 {
                let oracle = enumerate_polys(qq, d).unwrap();
                if d % 2 == 0 {
                    let formula = selfdual_count_int(&q(qq as i64), d).unwrap();
                    assert_eq!(
                        BigInt::from(oracle.self_dual.len()),
                        formula,
                        "N̄({d}, {qq})"
                    );
                } else if d > 1 {
                    assert!(oracle.self_dual.is_empty(), "odd degree self-duals");
                }
                let formula = dual_pair_count_int(&q(qq as i64), d).unwrap();
                assert_eq!(
                    BigInt::from(oracle.dual_pairs.len()),
                    formula,
                    "M̄({d}, {qq})"
                );
            }
        }
    }

    #[test]
    fn split_of_irreducibles_by_duality() {
        // N(d) = N̄(d)[d even] + 2·M̄(d) + [d = 1], symbolically to d = 8
        let counts = selfdual_pair_counts::<RatFn>(&(), 8);
        for d in 1..=8u32 {
            let n: RatFn = irreducible_count(&(), d);
            let mut rhs = counts.mbar(d).clone() + counts.mbar(d).clone();
            if d % 2 == 0 {
                rhs = rhs + counts.nbar(d / 2).clone();
            }
            if d == 1 {
                rhs = rhs + RatFn::one();
            }
            assert_eq!(n, rhs, "degree {d}");
        }
    }

    /// Π_{d≤N} (1-u^d)^{N(d,q)} ≡ 1 - uq (mod u^{N+1}), symbolically.
    #[test]
    fn product_over_irreducibles_telescopes() {
        let order = 10usize;
        let mut lhs = USeries::<RatFn>::one(order);
        for d in 1..=order {
            let base = USeries::one(order).sub(&USeries::monomial(order, d, RatFn::one()));
            let exponent: RatFn = irreducible_count(&(), d as u32);
            lhs = lhs.mul(&base.pow_scalar(&exponent).unwrap());
        }
        let expected = USeries::one(order).sub(&USeries::monomial(order, 1, RatFn::q()));
        assert_eq!(lhs, expected);
    }

    /// Both self-dual product identities at truncation, q ∈ {3,5}, order 8.
    #[test]
    fn selfdual_product_identities() {
        let order = 8usize;
        for qq in [3i64, 5] {
            let ctx = q(qq);
            let counts = selfdual_pair_counts::<QRat>(&ctx, order as u32);
            let one_minus = |d: usize| {
                USeries::<QRat>::one(order)
                    .sub(&USeries::monomial(order, d, QRat::from(BigInt::from(1))))
            };
            let one_plus = |d: usize| {
                USeries::<QRat>::one(order)
                    .add(&USeries::monomial(order, d, QRat::from(BigInt::from(1))))
            };

            let mut first = USeries::<QRat>::one(order);
            let mut second = USeries::<QRat>::one(order);
            for d in 1..=order {
                let nb = counts.nbar(d as u32).clone();
                let mb = counts.mbar(d as u32).clone();
                first = first
                    .mul(&one_minus(d).pow_scalar(&-nb.clone()).unwrap())
                    .mul(&one_minus(d).pow_scalar(&-mb.clone()).unwrap());
                second = second
                    .mul(&one_plus(d).pow_scalar(&-nb).unwrap())
                    .mul(&one_minus(d).pow_scalar(&-mb).unwrap());
            }
            // (1-u)/(1-qu)
            let target = one_minus(1).mul(
                &USeries::one(order)
                    .sub(&USeries::monomial(
                        order,
                        1,
                        BigRational::from(BigInt::from(qq)),
                    ))
                    .recip()
                    .unwrap(),
            );
            assert_eq!(first, target, "first identity at q = {qq}");
            assert_eq!(second, USeries::one(order), "second identity at q = {qq}");
        }
    }
}
