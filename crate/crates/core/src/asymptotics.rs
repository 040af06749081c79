//! The three limit constants and convergence of the scaled count sequences.
//!
//! Constants are evaluated as exact rational partial products Π_{j≤J}, with
//! a certified bound on the dropped tail via −log(1−x) ≤ x/(1−x) applied
//! termwise; decimals are produced only at the very end.  The limits are
//!
//!   gl: Π_{j≥1} (1−1/q^j)^(−j)                (G_n/q^(n²+n) → this)
//!   u:  Π_{odd}(1−1/q^i)^(−1)·Π_{even}(1−1/q^i)^(−⌊i/4⌋)
//!   sp: Π_{i≥1} (1+1/q^i)·(1−1/q^i)^(−⌊(i+1)/2⌋)  (S_n/q^(2n²+2n) → this)

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::qexact::Scalar;
use crate::report::Family;
use crate::{counts_gl, counts_sp, counts_u, QRat, Result};

/// What to evaluate: family, numeric q ≥ 2 (odd for sp), target accuracy.
#[derive(Clone, Debug)]
pub struct LimitSpec {
    pub family: Family,
    pub q: BigInt,
    pub eps: QRat,
}

/// A certified enclosure: |constant − value| ≤ bound.
#[derive(Clone, Debug)]
pub struct LimitValue {
    pub value: QRat,
    pub bound: QRat,
    /// Number of product terms taken.
    pub terms: u32,
}

fn validate(spec: &LimitSpec) -> Result<()> {
    if spec.family == Family::Sp && spec.q.is_even() {
        return Err(Error::EvenQ { q: spec.q.clone() });
    }
    assert!(spec.q >= BigInt::from(2), "limits need q >= 2");
    assert!(spec.eps.is_positive(), "accuracy must be positive");
    Ok(())
}

/// Exact partial product Π_{j≤terms} of the family's limit expression.
///
/// Numerator and denominator accumulate separately and reduce once at the
/// end; reducing after every factor would gcd hundred-kilobit integers
/// hundreds of times.
pub fn partial_product(family: Family, q: &BigInt, terms: u32) -> QRat {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 1..=terms {
        let qj = q.pow(j);
        let qj_m1 = &qj - BigInt::one(); // (1 − 1/q^j) = (q^j − 1)/q^j
        match family {
            Family::Gl => {
                num *= qj.pow(j);
                den *= qj_m1.pow(j);
            }
            Family::U => {
                let e = if j % 2 == 1 { 1 } else { j / 4 };
                num *= qj.pow(e);
                den *= qj_m1.pow(e);
            }
            Family::Sp => {
                let e = (j + 1) / 2;
                num *= (&qj + BigInt::one()) * qj.pow(e);
                den *= &qj * qj_m1.pow(e);
            }
        }
    }
    QRat::new(num, den)
}

/// Upper bound on Σ_{j>terms} j·x^j/(1−x^j) with x = 1/q:
/// x^(J+1)·((J+1) − J·x) / ((1−x)²·(1−x^(J+1))).
fn log_tail_base(q: &BigInt, terms: u32) -> QRat {
    let x = <QRat as Scalar>::q_pow(q, -1);
    let j = QRat::from(BigInt::from(terms));
    let x_next = <QRat as Scalar>::q_pow(q, -(terms as i64 + 1));
    let one_minus_x = QRat::one() - x.clone();
    x_next.clone() * (j.clone() + QRat::one() - j * x)
        / (one_minus_x.clone() * one_minus_x * (QRat::one() - x_next))
}

/// Per-family multiple of the base tail: every factor's |log| is at most
/// that multiple of j·x^j/(1−x^j).
fn tail_multiplier(family: Family) -> i64 {
    match family {
        Family::Gl | Family::U => 1,
        // log(1+x^j) + ⌊(j+1)/2⌋·(−log(1−x^j)) ≤ 2j·x^j/(1−x^j)
        Family::Sp => 2,
    }
}

fn enclosure(value: QRat, log_tail: QRat) -> Option<LimitValue> {
    // |C − P| ≤ P·(e^T − 1) ≤ P·T/(1−T), valid for T < 1
    if log_tail >= QRat::one() {
        return None;
    }
    let bound = value.clone() * log_tail.clone() / (QRat::one() - log_tail);
    Some(LimitValue {
        value,
        bound,
        terms: 0,
    })
}

/// Truncated product with J chosen so the certified bound is below eps.
pub fn limit_constant(spec: &LimitSpec) -> Result<LimitValue> {
    validate(spec)?;
    let mult = QRat::from(BigInt::from(tail_multiplier(spec.family)));
    let mut terms = 4u32;
    loop {
        let value = partial_product(spec.family, &spec.q, terms);
        let tail = mult.clone() * log_tail_base(&spec.q, terms);
        if let Some(mut enc) = enclosure(value, tail) {
            if enc.bound <= spec.eps {
                enc.terms = terms;
                return Ok(enc);
            }
        }
        assert!(terms < 1 << 20, "tail bound failed to converge");
        terms *= 2;
    }
}

/// The unitary constant through its pre-simplification form
///
///   Π_{j≥1}(1−(−1)^j/q^j) · Π_{k≥1}(1−1/q^k)^(−⌈(k+1)/2⌉)(1+1/q^k)^(−⌊(k+1)/2⌋),
///
/// which collapses to the headline form by (1+y)(1−y) = 1−y².  Used as the
/// second of the two-route agreement check.
pub fn limit_constant_u_preform(q: &BigInt, eps: &QRat) -> Result<LimitValue> {
    assert!(*q >= BigInt::from(2));
    let mut terms = 4u32;
    loop {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 1..=terms {
            let qk = q.pow(k);
            let minus = &qk - BigInt::one();
            let plus = &qk + BigInt::one();
            // prefactor (1 − (−1)^k/q^k), then exponents ⌈(k+1)/2⌉ on the
            // (1−1/q^k) factor and ⌊(k+1)/2⌋ on (1+1/q^k)
            let (e_minus, e_plus) = ((k + 2) / 2, (k + 1) / 2);
            num *= if k % 2 == 1 { &plus } else { &minus } * qk.pow(e_minus + e_plus);
            den *= &qk * minus.pow(e_minus) * plus.pow(e_plus);
        }
        let acc = QRat::new(num, den);
        // |log factor_k| ≤ (k+2)·x^k/(1−x^k) ≤ 3k·x^k/(1−x^k)
        let tail = QRat::from(BigInt::from(3)) * log_tail_base(q, terms);
        if let Some(mut enc) = enclosure(acc, tail) {
            if enc.bound <= *eps {
                enc.terms = terms;
                return Ok(enc);
            }
        }
        assert!(terms < 1 << 20, "tail bound failed to converge");
        terms *= 2;
    }
}

/// One row of a convergence table.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n: u32,
    /// count_n / q^(scaling exponent), exact.
    pub ratio: QRat,
    /// |ratio − limit constant|, exact up to the constant's enclosure.
    pub distance: QRat,
}

/// Ratios count_n/q^e(n) against the limit constant, for n = 0..=n_max.
/// e(n) = n²+n for gl and u, 2n²+2n for sp.
pub fn convergence_report(
    family: Family,
    q: &BigInt,
    n_max: u32,
    eps: &QRat,
) -> Result<(LimitValue, Vec<ConvergenceRow>)> {
    let spec = LimitSpec {
        family,
        q: q.clone(),
        eps: eps.clone(),
    };
    let limit = limit_constant(&spec)?;
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let count: QRat = match family {
            Family::Gl => counts_gl::commuting_pairs_gl_gen(q, n),
            Family::U => counts_u::commuting_pairs_u_gen(q, n),
            Family::Sp => counts_sp::commuting_pairs_sp_gen(q, n),
        };
        let exponent = match family {
            Family::Gl | Family::U => (n as i64) * (n as i64) + n as i64,
            Family::Sp => 2 * (n as i64) * (n as i64) + 2 * n as i64,
        };
        let ratio = count / <QRat as Scalar>::q_pow(q, exponent);
        let distance = (ratio.clone() - limit.value.clone()).abs();
        rows.push(ConvergenceRow { n, ratio, distance });
    }
    Ok((limit, rows))
}

/// Fixed-point decimal rendering of a non-negative rational, rounded to
/// `digits` places; deterministic.
pub fn decimal_string(x: &QRat, digits: u32) -> String {
    assert!(!x.is_negative(), "decimal rendering expects non-negative values");
    let scale = BigInt::from(10).pow(digits);
    let scaled = (x.numer() * &scale * BigInt::from(2) + x.denom()) / (x.denom() * BigInt::from(2));
    let (int_part, frac_part) = scaled.div_rem(&scale);
    if digits == 0 {
        return int_part.to_string();
    }
    let mut frac = frac_part.to_string();
    while frac.len() < digits as usize {
        frac.insert(0, '0');
    }
    format!("{int_part}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(p: i64) -> QRat {
        QRat::new(BigInt::one(), BigInt::from(10).pow(p as u32))
    }

    #[test]
    fn gl_constant_is_near_one_for_huge_q() {
        let spec = LimitSpec {
            family: Family::Gl,
            q: BigInt::from(1_000_000),
            eps: eps(8),
        };
        let lv = limit_constant(&spec).unwrap();
        let dist = (lv.value - QRat::one()).abs();
        assert!(dist < eps(5));
    }

    #[test]
    fn doubling_the_truncation_stays_within_the_bound() {
        for family in [Family::Gl, Family::U, Family::Sp] {
            for qv in [2i64, 3] {
                if family == Family::Sp && qv == 2 {
                    continue;
                }
                let spec = LimitSpec {
                    family,
                    q: BigInt::from(qv),
                    eps: eps(12),
                };
                let lv = limit_constant(&spec).unwrap();
                let doubled = partial_product(family, &spec.q, lv.terms * 2);
                assert!(
                    (doubled - lv.value.clone()).abs() <= lv.bound.clone() + lv.bound.clone(),
                    "{family} q={qv}"
                );
            }
        }
    }

    #[test]
    fn unitary_constant_two_routes_agree() {
        for qv in [2i64, 3] {
            let q = BigInt::from(qv);
            let e = eps(12);
            let direct = limit_constant(&LimitSpec {
                family: Family::U,
                q: q.clone(),
                eps: e.clone(),
            })
            .unwrap();
            let preform = limit_constant_u_preform(&q, &e).unwrap();
            assert!(
                (direct.value - preform.value).abs() <= e.clone() + e,
                "q = {qv}"
            );
        }
    }

    #[test]
    fn early_ratios_match_hand_values() {
        // gl at q = 2: G_1/q² = 1
        let (_, rows) = convergence_report(Family::Gl, &BigInt::from(2), 1, &eps(9)).unwrap();
        assert_eq!(rows[1].ratio, QRat::one());
        // sp at q = 3, n = 1: S_1/q⁴ = 105/81
        let (_, rows) = convergence_report(Family::Sp, &BigInt::from(3), 1, &eps(9)).unwrap();
        assert_eq!(
            rows[1].ratio,
            QRat::new(BigInt::from(105), BigInt::from(81))
        );
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(
            decimal_string(&QRat::new(BigInt::from(105), BigInt::from(81)), 6),
            "1.296296"
        );
        assert_eq!(decimal_string(&QRat::one(), 3), "1.000");
        // leading fractional zeros survive past the u64 range
        assert_eq!(
            decimal_string(&QRat::new(BigInt::from(1), BigInt::from(4)), 25),
            "0.2500000000000000000000000"
        );
        assert_eq!(
            decimal_string(&QRat::new(BigInt::from(1), BigInt::from(10).pow(24)), 25),
            "0.0000000000000000000000010"
        );
    }
}
