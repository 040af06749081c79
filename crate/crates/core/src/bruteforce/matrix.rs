//! Square matrices over the small finite fields, with the exact linear
//! algebra the oracle needs: rank/nullspace by Gaussian elimination and
//! characteristic polynomials at census scale.

use super::field::{Fq, FqCtx};
use super::poly::FPoly;

/// Row-major n×n matrix over GF(p^k).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMat {
    pub n: usize,
    entries: Vec<Fq>,
}

impl FqMat {
    pub fn zero(ctx: &FqCtx, n: usize) -> Self {
        FqMat {
            n,
            entries: vec![ctx.zero(); n * n],
        }
    }

    pub fn identity(ctx: &FqCtx, n: usize) -> Self {
        let mut m = FqMat::zero(ctx, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_zero(&self, ctx: &FqCtx) -> bool {
        self.entries.iter().all(|&e| ctx.is_zero(e))
    }

    pub fn add(&self, ctx: &FqCtx, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        FqMat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ctx.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, ctx: &FqCtx, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        FqMat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ctx.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, ctx: &FqCtx) -> Self {
        FqMat {
            n: self.n,
            entries: self.entries.iter().map(|&a| ctx.neg(a)).collect(),
        }
    }

    pub fn scale(&self, ctx: &FqCtx, s: Fq) -> Self {
        FqMat {
            n: self.n,
            entries: self.entries.iter().map(|&a| ctx.mul(a, s)).collect(),
        }
    }

    pub fn mul(&self, ctx: &FqCtx, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = FqMat::zero(ctx, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if ctx.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let v = ctx.add(out.get(i, j), ctx.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i));
            }
        }
        out
    }

    /// Entrywise Frobenius followed by transpose, the conjugate-transpose
    /// of the unitary setting.
    pub fn conj_transpose(&self, ctx: &FqCtx) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, ctx.frobenius(self.get(j, i)));
            }
        }
        out
    }

    /// A^s = 0 with s the matrix size; sufficient nilpotency test for any
    /// nilpotent matrix of this size.
    pub fn is_nilpotent(&self, ctx: &FqCtx) -> bool {
        let mut power = self.clone();
        let mut s = self.n;
        // repeated squaring: A^(2^j) until the exponent reaches n
        while s > 1 {
            if power.is_zero(ctx) {
                return true;
            }
            power = power.mul(ctx, &power);
            s = s.div_ceil(2);
        }
        power.is_zero(ctx)
    }

    /// φ(A) by Horner evaluation.
    pub fn eval_poly(&self, ctx: &FqCtx, phi: &FPoly) -> FqMat {
        let n = self.n;
        let mut acc = FqMat::zero(ctx, n);
        for &c in phi.coeffs.iter().rev() {
            acc = acc.mul(ctx, self);
            for i in 0..n {
                acc.set(i, i, ctx.add(acc.get(i, i), c));
            }
        }
        acc
    }

    pub fn rank(&self, ctx: &FqCtx) -> usize {
        let rows: Vec<Vec<Fq>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect();
        rank_of(ctx, rows)
    }

    /// det(xI − A), by Leibniz expansion over permutations; fine for the
    /// census sizes (n ≤ 6).
    pub fn charpoly(&self, ctx: &FqCtx) -> FPoly {
        let n = self.n;
        assert!(n <= 6, "charpoly via permanent-style expansion is desk-scale only");
        // entries of xI - A as degree-<=1 polynomials
        let entry = |i: usize, j: usize| -> FPoly {
            let a = ctx.neg(self.get(i, j));
            if i == j {
                FPoly::new(ctx, vec![a, ctx.one()])
            } else {
                FPoly::new(ctx, vec![a])
            }
        };
        let mut result = FPoly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign_positive = true;
        // Heap's algorithm, tracking the permutation sign
        let mut c = vec![0usize; n];
        let push_term = |perm: &[usize], positive: bool, result: &mut FPoly| {
            let mut term = FPoly::one(ctx);
            for (i, &j) in perm.iter().enumerate() {
                term = term.mul(ctx, &entry(i, j));
            }
            if !positive {
                term = term.neg(ctx);
            }
            *result = result.add(ctx, &term);
        };
        push_term(&perm, sign_positive, &mut result);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                sign_positive = !sign_positive;
                push_term(&perm, sign_positive, &mut result);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        result
    }
}

/// Rank of a rectangular row list by Gaussian elimination (consumes rows).
pub fn rank_of(ctx: &FqCtx, mut rows: Vec<Vec<Fq>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !ctx.is_zero(rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ctx.inv(rows[rank][col]);
        for j in col..cols {
            rows[rank][j] = ctx.mul(rows[rank][j], inv);
        }
        for r in 0..rows.len() {
            if r != rank && !ctx.is_zero(rows[r][col]) {
                let factor = rows[r][col];
                for j in col..cols {
                    let delta = ctx.mul(factor, rows[rank][j]);
                    rows[r][j] = ctx.sub(rows[r][j], delta);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of {x : M·x = 0} for a rectangular M given as rows.
pub fn nullspace(ctx: &FqCtx, mut rows: Vec<Vec<Fq>>) -> Vec<Vec<Fq>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !ctx.is_zero(rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ctx.inv(rows[rank][col]);
        for j in col..cols {
            rows[rank][j] = ctx.mul(rows[rank][j], inv);
        }
        for r in 0..rows.len() {
            if r != rank && !ctx.is_zero(rows[r][col]) {
                let factor = rows[r][col];
                for j in col..cols {
                    let delta = ctx.mul(factor, rows[rank][j]);
                    rows[r][j] = ctx.sub(rows[r][j], delta);
                }
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); cols];
        v[free] = ctx.one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            // reduced row echelon: pivot row reads x_pc = -Σ free coeffs
            v[pc] = ctx.neg(rows[row][free]);
        }
        basis.push(v);
    }
    basis
}
