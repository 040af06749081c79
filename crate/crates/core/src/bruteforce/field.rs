//! Exact arithmetic in GF(p) and GF(p²) for small primes.
//!
//! Elements are pairs (c0, c1) representing c0 + c1·t where t is a root of
//! the chosen degree-2 modulus; over the prime field c1 is always 0.  All
//! operations are exact modular arithmetic, no rounding anywhere.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// Field context: the prime p, extension degree k ∈ {1,2}, modulus for
/// k = 2, and the precomputed Frobenius image of t.
#[derive(Clone, Debug)]
pub struct FqCtx {
    p: u64,
    k: u8,
    /// x² + m1·x + m0; unused when k = 1.
    modulus: [u64; 2],
    /// t^p, so Frobenius is a linear lookup.
    t_frob: Fq,
}

/// Element of GF(p^k), k ≤ 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fq {
    pub c0: u64,
    pub c1: u64,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1 == 0 {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}t", self.c0, self.c1)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^k).  For k = 2 the modulus is the lexicographically smallest
/// monic irreducible x² + m1·x + m0 (ordered by (m1, m0)).
pub fn make_field(p: u64, k: u8) -> Result<FqCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(k == 1 || k == 2, "only GF(p) and GF(p^2) are supported");
    let mut ctx = FqCtx {
        p,
        k,
        modulus: [0, 0],
        t_frob: Fq { c0: 0, c1: 0 },
    };
    if k == 2 {
        let modulus = smallest_irreducible_quadratic(p);
        ctx.modulus = modulus;
        // t^p by repeated squaring once the modulus is fixed
        ctx.t_frob = Fq { c0: 0, c1: 1 };
        ctx.t_frob = ctx.pow(ctx.t_frob, p);
    }
    Ok(ctx)
}

fn smallest_irreducible_quadratic(p: u64) -> [u64; 2] {
    for m1 in 0..p {
        for m0 in 0..p {
            // irreducible over F_p iff no root: a² + m1·a + m0 ≠ 0 for all a
            let has_root = (0..p).any(|a| (a * a + m1 * a + m0) % p == 0);
            if !has_root {
                return [m0, m1];
            }
        }
    }
    unreachable!("every prime field has an irreducible quadratic")
}

impl FqCtx {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    /// |GF(p^k)| = p^k.
    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    /// Modulus coefficients [m0, m1] of x² + m1·x + m0 (k = 2 only).
    pub fn modulus(&self) -> [u64; 2] {
        self.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq { c0: 0, c1: 0 }
    }

    pub fn one(&self) -> Fq {
        Fq { c0: 1, c1: 0 }
    }

    /// Embeds an integer (mod p) into the field.
    pub fn from_u64(&self, v: u64) -> Fq {
        Fq {
            c0: v % self.p,
            c1: 0,
        }
    }

    /// The element with index i under the enumeration c0 + c1·p.
    pub fn element(&self, index: u64) -> Fq {
        debug_assert!(index < self.order());
        Fq {
            c0: index % self.p,
            c1: index / self.p,
        }
    }

    /// Inverse of [`element`](Self::element).
    pub fn index(&self, x: Fq) -> u64 {
        x.c0 + x.c1 * self.p
    }

    /// All p^k field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq {
            c0: (a.c0 + b.c0) % self.p,
            c1: (a.c1 + b.c1) % self.p,
        }
    }

    pub fn neg(&self, a: Fq) -> Fq {
        Fq {
            c0: (self.p - a.c0 % self.p) % self.p,
            c1: (self.p - a.c1 % self.p) % self.p,
        }
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        let x0 = (a.c0 * b.c0) % p;
        let x1 = (a.c0 * b.c1 + a.c1 * b.c0) % p;
        let x2 = (a.c1 * b.c1) % p;
        if x2 == 0 {
            return Fq { c0: x0, c1: x1 };
        }
        // reduce x2·t² with t² = -m0 - m1·t
        let [m0, m1] = self.modulus;
        Fq {
            c0: (x0 + x2 * (p - m0) % p) % p,
            c1: (x1 + x2 * (p - m1) % p) % p,
        }
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        let mut result = self.one();
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse by Fermat: a^(q-2).
    pub fn inv(&self, a: Fq) -> Fq {
        assert!(!self.is_zero(a), "inverse of zero");
        self.pow(a, self.order() - 2)
    }

    pub fn is_zero(&self, a: Fq) -> bool {
        a.c0 == 0 && a.c1 == 0
    }

    /// The p-power Frobenius x ↦ x^p, an involution of GF(p²) fixing GF(p).
    pub fn frobenius(&self, a: Fq) -> Fq {
        if self.k == 1 {
            return a;
        }
        // (c0 + c1·t)^p = c0 + c1·t^p
        let scaled = self.mul(Fq { c0: a.c1, c1: 0 }, self.t_frob);
        self.add(Fq { c0: a.c0, c1: 0 }, scaled)
    }

    /// True when the element lies in the prime subfield.
    pub fn in_prime_field(&self, a: Fq) -> bool {
        a.c1 == 0
    }

    /// A nonzero θ with θ^p = −θ (k = 2).  Scaling by θ swaps the Hermitian
    /// and skew-Hermitian matrix spaces.
    pub fn skew_unit(&self) -> Fq {
        assert_eq!(self.k, 2, "skew unit lives in the quadratic extension");
        self.elements()
            .find(|&x| !self.is_zero(x) && self.frobenius(x) == self.neg(x))
            .expect("GF(p^2) always contains a skew unit")
    }
}
