//! Uniform entry points over family, kind, q-mode, and backend.
//!
//! The typed per-family functions live in [`counts_gl`](crate::counts_gl),
//! [`counts_u`](crate::counts_u) and [`counts_sp`](crate::counts_sp); this
//! module picks the right one, runs the integrality assertions, and wraps
//! the value into a [`CountReport`].

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Error;
use crate::qexact::RatFn;
use crate::report::{BackendTag, CountReport, CountValue, Family, Kind, QSpec};
use crate::{counts_gl, counts_sp, counts_u, QRat, Result};

/// Numeric value into an exact integer count.
pub fn rat_to_value(v: QRat, what: impl Fn() -> String) -> Result<CountValue> {
    if !v.is_integer() {
        return Err(Error::NonIntegral { what: what() });
    }
    Ok(CountValue::Int(v.to_integer()))
}

/// Symbolic value into a canonical q-polynomial count.
pub fn sym_to_value(v: RatFn, what: impl Fn() -> String) -> Result<CountValue> {
    match v.as_poly() {
        Some(p) => Ok(CountValue::from_poly(p.clone())),
        None => Err(Error::NonIntegral { what: what() }),
    }
}

fn check_sp_q(family: Family, q: &QSpec) -> Result<()> {
    if family == Family::Sp {
        if let QSpec::Numeric(q) = q {
            if q.is_even() {
                return Err(Error::EvenQ { q: q.clone() });
            }
        }
    }
    Ok(())
}

/// Computes one count and packages it with its provenance.
pub fn count(
    family: Family,
    kind: Kind,
    n: u32,
    q: &QSpec,
    backend: BackendTag,
) -> Result<CountReport> {
    check_sp_q(family, q)?;
    let what = || format!("{family} {kind} n={n} q={q} via {backend}");
    let value = match (q, backend) {
        (QSpec::Numeric(qv), BackendTag::ClassSum) => match (family, kind) {
            (Family::Gl, Kind::Pairs) => {
                CountValue::Int(counts_gl::commuting_pairs_gl_class_sum(qv, n)?)
            }
            (Family::Gl, Kind::NilpotentPairs) => {
                rat_to_value(counts_gl::nilpotent_pairs_gl_class_sum(qv, n), what)?
            }
            (Family::U, Kind::Pairs) => {
                CountValue::Int(counts_u::commuting_pairs_u_class_sum(qv, n)?)
            }
            (Family::U, Kind::NilpotentPairs) => {
                rat_to_value(counts_u::nilpotent_pairs_u_class_sum(qv, n), what)?
            }
            (Family::Sp, Kind::Pairs) => {
                CountValue::Int(counts_sp::commuting_pairs_sp_class_sum(qv, n)?)
            }
            (Family::Sp, Kind::NilpotentPairs) => {
                rat_to_value(counts_sp::nilpotent_pairs_sp_class_sum(qv, n), what)?
            }
            (_, Kind::GroupOrder) => CountValue::Int(group_order_int(family, qv, n)?),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "kind {kind} is not a countable total"
                )))
            }
        },
        (QSpec::Numeric(qv), BackendTag::GenFn) => match (family, kind) {
            (Family::Gl, Kind::Pairs) => {
                rat_to_value(counts_gl::commuting_pairs_gl_gen(qv, n), what)?
            }
            (Family::Gl, Kind::NilpotentPairs) => {
                rat_to_value(counts_gl::nilpotent_pairs_gl_gen(qv, n), what)?
            }
            (Family::U, Kind::Pairs) => rat_to_value(counts_u::commuting_pairs_u_gen(qv, n), what)?,
            (Family::U, Kind::NilpotentPairs) => {
                rat_to_value(counts_u::nilpotent_pairs_u_gen(qv, n), what)?
            }
            (Family::Sp, Kind::Pairs) => {
                rat_to_value(counts_sp::commuting_pairs_sp_gen(qv, n), what)?
            }
            (Family::Sp, Kind::NilpotentPairs) => {
                rat_to_value(counts_sp::nilpotent_pairs_sp_gen(qv, n), what)?
            }
            (_, Kind::GroupOrder) => CountValue::Int(group_order_int(family, qv, n)?),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "kind {kind} is not a countable total"
                )))
            }
        },
        (QSpec::Symbolic, BackendTag::GenFn) => match (family, kind) {
            (Family::Gl, Kind::Pairs) => {
                sym_to_value(counts_gl::commuting_pairs_gl_gen(&(), n), what)?
            }
            (Family::Gl, Kind::NilpotentPairs) => {
                sym_to_value(counts_gl::nilpotent_pairs_gl_gen(&(), n), what)?
            }
            (Family::U, Kind::Pairs) => sym_to_value(counts_u::commuting_pairs_u_gen(&(), n), what)?,
            (Family::U, Kind::NilpotentPairs) => {
                sym_to_value(counts_u::nilpotent_pairs_u_gen(&(), n), what)?
            }
            (Family::Sp, Kind::Pairs) => {
                sym_to_value(counts_sp::commuting_pairs_sp_gen(&(), n), what)?
            }
            (Family::Sp, Kind::NilpotentPairs) => {
                sym_to_value(counts_sp::nilpotent_pairs_sp_gen(&(), n), what)?
            }
            (_, Kind::GroupOrder) => sym_to_value(group_order_sym(family, n), what)?,
            _ => {
                return Err(Error::Inconsistent(format!(
                    "kind {kind} is not a countable total"
                )))
            }
        },
        (QSpec::Symbolic, BackendTag::ClassSum) => match (family, kind) {
            // the stratified pair backends raise series to N(d,q)-th powers,
            // which needs a concrete integer q
            (_, Kind::Pairs) => {
                return Err(Error::SymbolicUnsupported {
                    backend: "class_sum (pairs)",
                })
            }
            (Family::Gl, Kind::NilpotentPairs) => {
                sym_to_value(counts_gl::nilpotent_pairs_gl_class_sum(&(), n), what)?
            }
            (Family::U, Kind::NilpotentPairs) => {
                sym_to_value(counts_u::nilpotent_pairs_u_class_sum(&(), n), what)?
            }
            (Family::Sp, Kind::NilpotentPairs) => {
                sym_to_value(counts_sp::nilpotent_pairs_sp_class_sum(&(), n), what)?
            }
            (_, Kind::GroupOrder) => sym_to_value(group_order_sym(family, n), what)?,
            _ => {
                return Err(Error::Inconsistent(format!(
                    "kind {kind} is not a countable total"
                )))
            }
        },
        (_, BackendTag::Oracle) => {
            return Err(Error::Inconsistent(
                "oracle counts go through bruteforce::LieSpace".into(),
            ))
        }
    };
    Ok(CountReport {
        family,
        kind,
        n,
        q: q.clone(),
        backend,
        value,
    })
}

pub fn group_order_int(family: Family, q: &BigInt, n: u32) -> Result<BigInt> {
    Ok(match family {
        Family::Gl => counts_gl::group_order_gl_int(q, n),
        Family::U => counts_u::group_order_gu_int(q, n),
        Family::Sp => counts_sp::group_order_sp_int(q, n)?,
    })
}

fn group_order_sym(family: Family, n: u32) -> RatFn {
    match family {
        Family::Gl => counts_gl::group_order_gl(&(), n),
        Family::U => counts_u::group_order_gu(&(), n),
        Family::Sp => counts_sp::group_order_sp(&(), n),
    }
}
