//! Series-identity checks: the left side Σ_n count_n·u^n/|group order|
//! against the independently expanded product form, coefficient by
//! coefficient.  The difference column must be identically zero.
//!
//! In numeric mode the counts come from the stratified class_sum backend,
//! so the comparison pits the class-size machinery against the Euler-form
//! product.  In symbolic mode the stratified route exists only for the
//! nilpotent kinds (the pair backends need integer exponents N(d,q)); for
//! symbolic pairs the left side falls back to per-n gen_fn values, which
//! still checks truncation stability of the expansion.

use num_bigint::BigInt;

use crate::qexact::{RatFn, Scalar, USeries};
use crate::report::{Family, Kind};
use crate::{counts_gl, counts_sp, counts_u, Error, QRat, Result};

/// One coefficient row of a series comparison.
#[derive(Clone, Debug)]
pub struct SeriesRow<K> {
    pub n: u32,
    pub lhs: K,
    pub rhs: K,
    pub diff: K,
}

impl<K: Scalar> SeriesRow<K> {
    pub fn is_zero_diff(&self) -> bool {
        self.diff.is_zero()
    }
}

fn rhs_series<K: Scalar>(ctx: &K::Ctx, family: Family, kind: Kind, order: usize) -> USeries<K> {
    match (family, kind) {
        (Family::Gl, Kind::Pairs) => counts_gl::pairs_series_gl(ctx, order),
        (Family::Gl, Kind::NilpotentPairs) => counts_gl::nilpairs_series_gl(ctx, order),
        (Family::U, Kind::Pairs) => counts_u::pairs_series_u(ctx, order),
        (Family::U, Kind::NilpotentPairs) => counts_u::nilpairs_series_u(ctx, order),
        (Family::Sp, Kind::Pairs) => counts_sp::pairs_series_sp(ctx, order),
        (Family::Sp, Kind::NilpotentPairs) => counts_sp::nilpairs_series_sp(ctx, order),
        _ => unreachable!("series identities exist for pair kinds only"),
    }
}

fn check_kind(kind: Kind) -> Result<()> {
    match kind {
        Kind::Pairs | Kind::NilpotentPairs => Ok(()),
        other => Err(Error::Inconsistent(format!(
            "no series identity for kind {other}"
        ))),
    }
}

/// Numeric comparison to the given order; counts via class_sum.
pub fn series_identity_numeric(
    family: Family,
    kind: Kind,
    q: &BigInt,
    order: u32,
) -> Result<Vec<SeriesRow<QRat>>> {
    check_kind(kind)?;
    let rhs = rhs_series::<QRat>(q, family, kind, order as usize);
    let mut rows = Vec::with_capacity(order as usize + 1);
    for n in 0..=order {
        let count: QRat = match (family, kind) {
            (Family::Gl, Kind::Pairs) => {
                QRat::from(counts_gl::commuting_pairs_gl_class_sum(q, n)?)
            }
            (Family::Gl, Kind::NilpotentPairs) => counts_gl::nilpotent_pairs_gl_class_sum(q, n),
            (Family::U, Kind::Pairs) => QRat::from(counts_u::commuting_pairs_u_class_sum(q, n)?),
            (Family::U, Kind::NilpotentPairs) => counts_u::nilpotent_pairs_u_class_sum(q, n),
            (Family::Sp, Kind::Pairs) => QRat::from(counts_sp::commuting_pairs_sp_class_sum(q, n)?),
            (Family::Sp, Kind::NilpotentPairs) => counts_sp::nilpotent_pairs_sp_class_sum(q, n),
            _ => unreachable!(),
        };
        let order_n: QRat = match family {
            Family::Gl => counts_gl::group_order_gl(q, n),
            Family::U => counts_u::group_order_gu(q, n),
            Family::Sp => counts_sp::group_order_sp(q, n),
        };
        let lhs = count / order_n;
        let rhs_c = rhs.coeff(n as usize).clone();
        rows.push(SeriesRow {
            n,
            diff: lhs.clone() - rhs_c.clone(),
            lhs,
            rhs: rhs_c,
        });
    }
    Ok(rows)
}

/// Symbolic comparison to the given order.
pub fn series_identity_symbolic(
    family: Family,
    kind: Kind,
    order: u32,
) -> Result<Vec<SeriesRow<RatFn>>> {
    check_kind(kind)?;
    let rhs = rhs_series::<RatFn>(&(), family, kind, order as usize);
    let mut rows = Vec::with_capacity(order as usize + 1);
    for n in 0..=order {
        let count: RatFn = match (family, kind) {
            (Family::Gl, Kind::NilpotentPairs) => counts_gl::nilpotent_pairs_gl_class_sum(&(), n),
            (Family::U, Kind::NilpotentPairs) => counts_u::nilpotent_pairs_u_class_sum(&(), n),
            (Family::Sp, Kind::NilpotentPairs) => counts_sp::nilpotent_pairs_sp_class_sum(&(), n),
            // pairs: the stratified backend needs numeric q, so use per-n
            // gen_fn values against the single full-order expansion
            (Family::Gl, Kind::Pairs) => counts_gl::commuting_pairs_gl_gen(&(), n),
            (Family::U, Kind::Pairs) => counts_u::commuting_pairs_u_gen(&(), n),
            (Family::Sp, Kind::Pairs) => counts_sp::commuting_pairs_sp_gen(&(), n),
            _ => unreachable!(),
        };
        let order_n: RatFn = match family {
            Family::Gl => counts_gl::group_order_gl(&(), n),
            Family::U => counts_u::group_order_gu(&(), n),
            Family::Sp => counts_sp::group_order_sp(&(), n),
        };
        let lhs = count / order_n;
        let rhs_c = rhs.coeff(n as usize).clone();
        rows.push(SeriesRow {
            n,
            diff: lhs.clone() - rhs_c.clone(),
            lhs,
            rhs: rhs_c,
        });
    }
    Ok(rows)
}
