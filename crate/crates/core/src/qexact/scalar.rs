//! The exact coefficient field the whole engine is generic over.
//!
//! Two scalars implement [`Scalar`]: `BigRational` for a fixed numeric q
//! (its context is the chosen q), and [`RatFn`](super::RatFn) for symbolic q
//! (no context).  Everything downstream — Pochhammer symbols, truncated
//! series, the counting formulas — is written once against this trait, so a
//! "mode mismatch" between numeric and symbolic values cannot arise at
//! runtime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ratfn::RatFn;

/// Exact field with a distinguished element q.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// What is needed to materialize q: its numeric value, or nothing.
    type Ctx: Clone + Sync;

    fn from_int(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// q^e in this field; e may be negative.
    fn q_pow(ctx: &Self::Ctx, e: i64) -> Self;
}

impl Scalar for BigRational {
    type Ctx = BigInt;

    fn from_int(v: i64) -> Self {
        BigRational::from(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from(v.clone())
    }

    fn q_pow(q: &BigInt, e: i64) -> Self {
        if e >= 0 {
            BigRational::from(q.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), q.pow((-e) as u32))
        }
    }
}

impl Scalar for RatFn {
    type Ctx = ();

    fn from_int(v: i64) -> Self {
        RatFn::from_int(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        RatFn::from_bigint(v)
    }

    fn q_pow(_: &(), e: i64) -> Self {
        RatFn::q_pow(e)
    }
}

/// base^e by repeated squaring, for any scalar.
pub fn scalar_pow<K: Scalar>(base: &K, e: u64) -> K {
    let mut result = K::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    result
}
