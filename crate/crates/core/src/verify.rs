//! Backend-vs-backend and backend-vs-oracle verification.
//!
//! Every check is one row naming the stratum and both values; the report
//! fails on any mismatch.  An optional fault can be injected to prove the
//! verifier actually bites: it flips the sign of the Pochhammer base inside
//! the stratified nilpotent backend, which must surface as a named failing
//! row.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::bruteforce::LieSpace;
use crate::counts_gl;
use crate::counts_sp;
use crate::counts_u;
use crate::error::Error;
use crate::qexact::PochBase;
use crate::report::Family;
use crate::{QRat, Result};

/// Deliberate defects for exercising the verifier; never reachable from the
/// CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip the Pochhammer base sign in the stratified nilpotent backend.
    FlipPochSign,
}

/// One comparison: a named stratum and the two values that must agree.
#[derive(Clone, Debug)]
pub struct CheckRow {
    pub stratum: String,
    pub lhs_label: &'static str,
    pub lhs: String,
    pub rhs_label: &'static str,
    pub rhs: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.ok)
    }

    fn push(&mut self, stratum: String, lhs_label: &'static str, lhs: String, rhs_label: &'static str, rhs: String) {
        let ok = lhs == rhs;
        self.rows.push(CheckRow {
            stratum,
            lhs_label,
            lhs,
            rhs_label,
            rhs,
            ok,
        });
    }
}

/// q = p^k with k ≤ 2, if it is one (the oracle's reach).
fn split_prime_power(q: &BigInt) -> Option<(u64, u8)> {
    let q = q.to_u64()?;
    let is_prime = |p: u64| p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if is_prime(q) {
        return Some((q, 1));
    }
    let r = (q as f64).sqrt().round() as u64;
    if r * r == q && is_prime(r) {
        return Some((r, 2));
    }
    None
}

/// The oracle space for (family, q, n), when q is within the oracle's
/// reach (p or p² for Mat/Sp, a prime for the skew-Hermitian model).
pub fn oracle_space(family: Family, q: &BigInt, n: u32) -> Result<Option<LieSpace>> {
    let Some((p, k)) = split_prime_power(q) else {
        return Ok(None);
    };
    let space = match family {
        Family::Gl => LieSpace::mat(p, k, n as usize)?,
        // the skew-Hermitian model needs q itself prime (entries in GF(p²))
        Family::U => {
            if k != 1 {
                return Ok(None);
            }
            LieSpace::skew_hermitian(p, n as usize)?
        }
        Family::Sp => LieSpace::symplectic(p, k, n as usize)?,
    };
    Ok(Some(space))
}

fn class_sum_pairs(family: Family, q: &BigInt, n: u32) -> Result<BigInt> {
    match family {
        Family::Gl => counts_gl::commuting_pairs_gl_class_sum(q, n),
        Family::U => counts_u::commuting_pairs_u_class_sum(q, n),
        Family::Sp => counts_sp::commuting_pairs_sp_class_sum(q, n),
    }
}

fn gen_pairs(family: Family, q: &BigInt, n: u32) -> QRat {
    match family {
        Family::Gl => counts_gl::commuting_pairs_gl_gen(q, n),
        Family::U => counts_u::commuting_pairs_u_gen(q, n),
        Family::Sp => counts_sp::commuting_pairs_sp_gen(q, n),
    }
}

fn class_sum_nil(family: Family, q: &BigInt, n: u32, fault: Option<Fault>) -> QRat {
    let flip = fault == Some(Fault::FlipPochSign);
    match family {
        Family::Gl => {
            let base = if flip {
                PochBase::alternating(1)
            } else {
                PochBase::plain(1)
            };
            counts_gl::nilpotent_pairs_gl_class_sum_base(q, n, base)
        }
        Family::U => {
            let base = if flip {
                PochBase::plain(1)
            } else {
                PochBase::alternating(1)
            };
            counts_u::group_order_gu::<QRat>(q, n)
                * counts_gl::nilpotent_partition_sum::<QRat>(q, n, base)
        }
        Family::Sp => {
            let base = if flip {
                PochBase::alternating(2)
            } else {
                PochBase::plain(2)
            };
            counts_sp::nilpotent_pairs_sp_class_sum_base(q, n, base)
        }
    }
}

fn gen_nil(family: Family, q: &BigInt, n: u32) -> QRat {
    match family {
        Family::Gl => counts_gl::nilpotent_pairs_gl_gen(q, n),
        Family::U => counts_u::nilpotent_pairs_u_gen(q, n),
        Family::Sp => counts_sp::nilpotent_pairs_sp_gen(q, n),
    }
}

/// Runs backend-vs-backend comparisons for n = 0..=max_n and, where the
/// enumeration guard admits it, backend-vs-oracle comparisons.
pub fn verify_family(
    family: Family,
    q: &BigInt,
    max_n: u32,
    force: bool,
    fault: Option<Fault>,
) -> Result<VerifyReport> {
    use num_integer::Integer;
    if family == Family::Sp && q.is_even() {
        return Err(Error::EvenQ { q: q.clone() });
    }
    let mut report = VerifyReport::default();
    for n in 0..=max_n {
        let class = class_sum_pairs(family, q, n)?;
        let gen = gen_pairs(family, q, n);
        report.push(
            format!("{family} pairs n={n} q={q}"),
            "class_sum",
            class.to_string(),
            "gen_fn",
            gen.to_string(),
        );

        let class_nil = class_sum_nil(family, q, n, fault);
        let gen_nil_v = gen_nil(family, q, n);
        report.push(
            format!("{family} nilpotent_pairs n={n} q={q}"),
            "class_sum",
            class_nil.to_string(),
            "gen_fn",
            gen_nil_v.to_string(),
        );
    }
    for n in 1..=max_n {
        let Some(space) = oracle_space(family, q, n)? else {
            continue;
        };
        let pairs = match space.count_commuting_pairs(force) {
            Ok(v) => v,
            Err(Error::SizeGuard { .. }) => continue,
            Err(e) => return Err(e),
        };
        report.push(
            format!("{family} pairs n={n} q={q} (oracle)"),
            "gen_fn",
            gen_pairs(family, q, n).to_string(),
            "oracle",
            pairs.to_string(),
        );
        let nil = match space.count_nilpotent_pairs(force) {
            Ok(v) => v,
            Err(Error::SizeGuard { .. }) => continue,
            Err(e) => return Err(e),
        };
        report.push(
            format!("{family} nilpotent_pairs n={n} q={q} (oracle)"),
            "gen_fn",
            gen_nil(family, q, n).to_string(),
            "oracle",
            nil.to_string(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_runs_pass() {
        let report = verify_family(Family::Gl, &BigInt::from(2), 2, false, None).unwrap();
        assert!(report.all_ok());
        assert!(report.rows.iter().any(|r| r.stratum.contains("oracle")));
    }

    #[test]
    fn injected_fault_is_caught_and_named() {
        for (family, qv) in [(Family::Gl, 2i64), (Family::U, 2), (Family::Sp, 3)] {
            let report =
                verify_family(family, &BigInt::from(qv), 2, false, Some(Fault::FlipPochSign))
                    .unwrap();
            assert!(!report.all_ok(), "{family}");
            let failing: Vec<_> = report.failures().collect();
            assert!(
                failing.iter().all(|r| r.stratum.contains("nilpotent_pairs")),
                "fault must surface in the nilpotent strata, got {failing:?}"
            );
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(split_prime_power(&BigInt::from(7)), Some((7, 1)));
        assert_eq!(split_prime_power(&BigInt::from(4)), Some((2, 2)));
        assert_eq!(split_prime_power(&BigInt::from(9)), Some((3, 2)));
        assert_eq!(split_prime_power(&BigInt::from(12)), None);
        assert_eq!(split_prime_power(&BigInt::from(8)), None);
    }
}
