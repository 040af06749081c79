//! Polynomials over the small finite fields, at oracle scale.
//!
//! Just enough machinery for the census and the polynomial-enumeration
//! oracle: arithmetic, the bar involution φ ↦ (−1)^deg·φ(−x), trial-division
//! irreducibility, and factorization into monic irreducibles.

use super::field::{Fq, FqCtx};

/// Polynomial with ascending coefficients over GF(p^k), trailing zeros
/// trimmed; zero is the empty list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FPoly {
    pub coeffs: Vec<Fq>,
}

impl FPoly {
    pub fn new(ctx: &FqCtx, mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|&c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> Self {
        FPoly { coeffs: Vec::new() }
    }

    pub fn one(ctx: &FqCtx) -> Self {
        FPoly {
            coeffs: vec![ctx.one()],
        }
    }

    /// The polynomial x.
    pub fn x(ctx: &FqCtx) -> Self {
        FPoly {
            coeffs: vec![ctx.zero(), ctx.one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, ctx: &FqCtx, k: usize) -> Fq {
        self.coeffs.get(k).copied().unwrap_or_else(|| ctx.zero())
    }

    pub fn is_monic(&self, ctx: &FqCtx) -> bool {
        self.coeffs.last() == Some(&ctx.one())
    }

    pub fn add(&self, ctx: &FqCtx, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| ctx.add(self.coeff(ctx, k), other.coeff(ctx, k)))
            .collect();
        FPoly::new(ctx, coeffs)
    }

    pub fn neg(&self, ctx: &FqCtx) -> Self {
        FPoly {
            coeffs: self.coeffs.iter().map(|&c| ctx.neg(c)).collect(),
        }
    }

    pub fn sub(&self, ctx: &FqCtx, other: &Self) -> Self {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FqCtx, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero();
        }
        let mut coeffs = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ctx.add(coeffs[i + j], ctx.mul(a, b));
            }
        }
        FPoly::new(ctx, coeffs)
    }

    pub fn mul_scalar(&self, ctx: &FqCtx, s: Fq) -> Self {
        FPoly::new(ctx, self.coeffs.iter().map(|&c| ctx.mul(c, s)).collect())
    }

    /// Euclidean division; the divisor may have any nonzero leading
    /// coefficient.
    pub fn divrem(&self, ctx: &FqCtx, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = ctx.inv(*divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        let mut top = rem.len();
        while top > dd {
            let k = top - 1 - dd;
            let qc = ctx.mul(rem[top - 1], lead_inv);
            if !ctx.is_zero(qc) {
                for (j, &c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = ctx.sub(rem[k + j], ctx.mul(c, qc));
                }
            }
            quot[k] = qc;
            top -= 1;
        }
        (FPoly::new(ctx, quot), FPoly::new(ctx, rem))
    }

    pub fn divides(&self, ctx: &FqCtx, target: &Self) -> bool {
        target.divrem(ctx, self).1.is_zero()
    }

    pub fn eval(&self, ctx: &FqCtx, x: Fq) -> Fq {
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }

    /// The involution φ ↦ (−1)^deg(φ)·φ(−x); fixes monic polynomials whose
    /// roots are closed under negation.
    pub fn bar(&self, ctx: &FqCtx) -> Self {
        let d = match self.degree() {
            None => return FPoly::zero(),
            Some(d) => d,
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                if (d - j) % 2 == 1 {
                    ctx.neg(c)
                } else {
                    c
                }
            })
            .collect();
        FPoly::new(ctx, coeffs)
    }

    /// Applies Frobenius to every coefficient.
    pub fn frobenius(&self, ctx: &FqCtx) -> Self {
        FPoly {
            coeffs: self.coeffs.iter().map(|&c| ctx.frobenius(c)).collect(),
        }
    }

    /// True when every coefficient lies in the prime subfield.
    pub fn over_prime_field(&self, ctx: &FqCtx) -> bool {
        self.coeffs.iter().all(|&c| ctx.in_prime_field(c))
    }

    /// Trial-division irreducibility: no monic irreducible factor of degree
    /// at most deg/2.
    pub fn is_irreducible(&self, ctx: &FqCtx) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        for e in 1..=d / 2 {
            for phi in monic_irreducibles(ctx, e) {
                if phi.divides(ctx, self) {
                    return false;
                }
            }
        }
        true
    }

    /// Monic irreducible factorization (φ, multiplicity), trial division in
    /// increasing degree.  Intended for the small census polynomials only.
    pub fn factor(&self, ctx: &FqCtx) -> Vec<(FPoly, u32)> {
        assert!(self.is_monic(ctx), "factor expects a monic polynomial");
        let mut rest = self.clone();
        let mut factors = Vec::new();
        let mut degree = 1;
        while rest.degree().unwrap() > 0 {
            let remaining = rest.degree().unwrap();
            if 2 * degree > remaining {
                // all factors below `degree` are divided out, so the rest
                // cannot split into two pieces of degree >= `degree`
                factors.push((rest.clone(), 1));
                break;
            }
            for phi in monic_irreducibles(ctx, degree) {
                let mut mult = 0;
                loop {
                    let (q, r) = rest.divrem(ctx, &phi);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((phi, mult));
                }
            }
            degree += 1;
        }
        factors
    }
}

/// All monic polynomials of exact degree d, in lexicographic coefficient
/// order (constant coefficient fastest).
pub fn monic_polys(ctx: &FqCtx, d: usize) -> Vec<FPoly> {
    let q = ctx.order();
    let total = q.pow(d as u32);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rest = idx;
        for _ in 0..d {
            coeffs.push(ctx.element(rest % q));
            rest /= q;
        }
        coeffs.push(ctx.one());
        out.push(FPoly { coeffs });
    }
    out
}

/// All monic irreducibles of exact degree d.
pub fn monic_irreducibles(ctx: &FqCtx, d: usize) -> Vec<FPoly> {
    monic_polys(ctx, d)
        .into_iter()
        .filter(|f| f.is_irreducible(ctx))
        .collect()
}
