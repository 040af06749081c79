//! The three Lie-algebra matrix spaces at oracle scale, with exhaustive
//! pair counting.
//!
//! A space is presented by an explicit basis over its coefficient field:
//! all of Mat(n,q); the skew-Hermitian matrices over GF(q²) (an F_q-space
//! of dimension n²); and sp(2n,q) = {A : AJ = (AJ)ᵀ} of dimension 2n²+n.
//! Pair counting always goes through centralizer nullities — the number of
//! B commuting with A is q^nullity(A), so one elimination per element
//! replaces a second enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::Result;

use super::field::{make_field, Fq, FqCtx};
use super::matrix::{nullspace, rank_of, FqMat};

/// Default cap on enumeration size: at most 2^22 elements.
pub const SIZE_GUARD_BITS: u32 = 22;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceKind {
    /// All n×n matrices over GF(q).
    Mat,
    /// Skew-Hermitian matrices over GF(q²): the Lie algebra of GU(n,q).
    SkewHermitian,
    /// Hermitian matrices over GF(q²); only used to check that scaling by a
    /// skew unit θ matches the skew-Hermitian counts.
    Hermitian,
    /// sp(2n,q): AJ symmetric for the fixed alternating form J.
    Symplectic,
}

/// A matrix Lie algebra with an explicit basis over its coefficient field.
pub struct LieSpace {
    pub kind: SpaceKind,
    /// Field the matrix entries live in.
    pub field: FqCtx,
    /// Field the space is a vector space over (the prime field for the
    /// unitary spaces, the entry field otherwise).
    pub coeff: FqCtx,
    /// Matrix size (2n for the symplectic space).
    pub size: usize,
    basis: Vec<FqMat>,
    /// The alternating form J for the symplectic space.
    form: Option<FqMat>,
}

impl LieSpace {
    /// Mat(n, p^k).
    pub fn mat(p: u64, k: u8, n: usize) -> Result<LieSpace> {
        let field = make_field(p, k)?;
        let mut basis = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut b = FqMat::zero(&field, n);
                b.set(i, j, field.one());
                basis.push(b);
            }
        }
        Ok(LieSpace {
            kind: SpaceKind::Mat,
            coeff: field.clone(),
            field,
            size: n,
            basis,
            form: None,
        })
    }

    /// Skew-Hermitian n×n matrices over GF(p²), an F_p-space of dimension n².
    pub fn skew_hermitian(p: u64, n: usize) -> Result<LieSpace> {
        Self::hermitian_kind(p, n, SpaceKind::SkewHermitian)
    }

    /// Hermitian n×n matrices over GF(p²).
    pub fn hermitian(p: u64, n: usize) -> Result<LieSpace> {
        Self::hermitian_kind(p, n, SpaceKind::Hermitian)
    }

    fn hermitian_kind(p: u64, n: usize, kind: SpaceKind) -> Result<LieSpace> {
        let field = make_field(p, 2)?;
        let coeff = make_field(p, 1)?;
        let theta = field.skew_unit();
        let t = field.element(p); // the extension generator t itself
        let one = field.one();
        // diagonal line: a with ā = ∓a; off-diagonal pairs carry two
        // F_p-dimensions each, spanned by 1 and t in the (i,j) slot
        let (diag_unit, sign) = match kind {
            SpaceKind::SkewHermitian => (theta, true),
            SpaceKind::Hermitian => (one, false),
            _ => unreachable!(),
        };
        let mut basis = Vec::with_capacity(n * n);
        for i in 0..n {
            let mut b = FqMat::zero(&field, n);
            b.set(i, i, diag_unit);
            basis.push(b);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for unit in [one, t] {
                    let mut b = FqMat::zero(&field, n);
                    b.set(i, j, unit);
                    let mirrored = field.frobenius(unit);
                    b.set(j, i, if sign { field.neg(mirrored) } else { mirrored });
                    basis.push(b);
                }
            }
        }
        debug_assert_eq!(basis.len(), n * n);
        Ok(LieSpace {
            kind,
            field,
            coeff,
            size: n,
            basis,
            form: None,
        })
    }

    /// sp(2n, p^k) for odd p: matrices with AJ symmetric, J the
    /// block-antidiagonal alternating form with identity blocks.
    pub fn symplectic(p: u64, k: u8, n: usize) -> Result<LieSpace> {
        let field = make_field(p, k)?;
        if p == 2 {
            return Err(Error::EvenQ {
                q: BigInt::from(field.order()),
            });
        }
        let size = 2 * n;
        let mut j_form = FqMat::zero(&field, size);
        for i in 0..n {
            j_form.set(i, n + i, field.one());
            j_form.set(n + i, i, field.neg(field.one()));
        }
        // J² = -I, so J⁻¹ = -J; A = S·J⁻¹ for symmetric S gives AJ = S
        let j_inv = j_form.neg(&field);
        let mut basis = Vec::new();
        let mut push_sym = |s: FqMat| {
            basis.push(s.mul(&field, &j_inv));
        };
        for i in 0..size {
            let mut s = FqMat::zero(&field, size);
            s.set(i, i, field.one());
            push_sym(s);
        }
        for i in 0..size {
            for j in (i + 1)..size {
                let mut s = FqMat::zero(&field, size);
                s.set(i, j, field.one());
                s.set(j, i, field.one());
                push_sym(s);
            }
        }
        debug_assert_eq!(basis.len(), 2 * n * n + n);
        Ok(LieSpace {
            kind: SpaceKind::Symplectic,
            coeff: field.clone(),
            field,
            size,
            basis,
            form: Some(j_form),
        })
    }

    /// Dimension over the coefficient field.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of coefficient-field scalars expanded per matrix entry.
    fn components(&self) -> usize {
        (self.field.k() / self.coeff.k()) as usize
    }

    /// Total number of elements, q0^dim, if it fits in u64.
    pub fn num_elements(&self) -> Option<u64> {
        let q0 = self.coeff.order();
        let mut total = 1u64;
        for _ in 0..self.dim() {
            total = total.checked_mul(q0)?;
        }
        Some(total)
    }

    fn guard(&self, force: bool) -> Result<u64> {
        let total = self.num_elements().unwrap_or(u64::MAX);
        if !force && total > 1u64 << SIZE_GUARD_BITS {
            let bits = 64 - total.leading_zeros();
            return Err(Error::SizeGuard {
                bits,
                limit: SIZE_GUARD_BITS,
            });
        }
        Ok(total)
    }

    fn kind_name(&self) -> &'static str {
        match self.kind {
            SpaceKind::Mat => "mat",
            SpaceKind::SkewHermitian => "skew-hermitian",
            SpaceKind::Hermitian => "hermitian",
            SpaceKind::Symplectic => "sp",
        }
    }

    /// Defining-equation membership test.
    pub fn contains(&self, a: &FqMat) -> bool {
        if a.n != self.size {
            return false;
        }
        match self.kind {
            SpaceKind::Mat => true,
            SpaceKind::SkewHermitian => a.conj_transpose(&self.field) == a.neg(&self.field),
            SpaceKind::Hermitian => a.conj_transpose(&self.field) == *a,
            SpaceKind::Symplectic => {
                let j = self.form.as_ref().unwrap();
                let aj = a.mul(&self.field, j);
                aj.transpose() == aj
            }
        }
    }

    /// Element from coefficient coordinates.
    pub fn element(&self, coords: &[Fq]) -> FqMat {
        assert_eq!(coords.len(), self.dim());
        let mut m = FqMat::zero(&self.field, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if self.coeff.is_zero(*c) {
                continue;
            }
            m = m.add(&self.field, &b.scale(&self.field, *c));
        }
        m
    }

    /// Coordinates of the element with the given enumeration index
    /// (base-q0 digits, least significant first).
    pub fn coords_of_index(&self, index: u64) -> Vec<Fq> {
        let q0 = self.coeff.order();
        let mut rest = index;
        (0..self.dim())
            .map(|_| {
                let c = self.coeff.element(rest % q0);
                rest /= q0;
                c
            })
            .collect()
    }

    /// Coefficient-field components of a field element (coordinates in the
    /// basis {1, t} for the unitary spaces, identity otherwise).
    fn expand(&self, x: Fq) -> Vec<Fq> {
        if self.components() == 1 {
            vec![x]
        } else {
            vec![Fq { c0: x.c0, c1: 0 }, Fq { c0: x.c1, c1: 0 }]
        }
    }

    /// Rows, over the coefficient field, of the linear map
    /// c ↦ A·(Σ c_j B_j) − (Σ c_j B_j)·A.
    fn commutator_rows(&self, a: &FqMat) -> Vec<Vec<Fq>> {
        let n = self.size;
        let r = self.components();
        let mut rows = vec![vec![self.coeff.zero(); self.dim()]; n * n * r];
        for (col, b) in self.basis.iter().enumerate() {
            let c = a.mul(&self.field, b).sub(&self.field, &b.mul(&self.field, a));
            for i in 0..n {
                for j in 0..n {
                    for (comp, v) in self.expand(c.get(i, j)).into_iter().enumerate() {
                        rows[(i * n + j) * r + comp][col] = v;
                    }
                }
            }
        }
        rows
    }

    /// Dimension over the coefficient field of {B in the space : AB = BA}.
    pub fn centralizer_nullity(&self, a: &FqMat) -> Result<usize> {
        if !self.contains(a) {
            return Err(Error::NotInSpace {
                space: self.kind_name(),
            });
        }
        let rank = rank_of(&self.coeff, self.commutator_rows(a));
        Ok(self.dim() - rank)
    }

    /// Matrices spanning the centralizer of `a` inside the space.
    pub fn centralizer_basis(&self, a: &FqMat) -> Result<Vec<FqMat>> {
        if !self.contains(a) {
            return Err(Error::NotInSpace {
                space: self.kind_name(),
            });
        }
        let vectors = nullspace(&self.coeff, self.commutator_rows(a));
        Ok(vectors.iter().map(|v| self.element(v)).collect())
    }

    /// Runs `per_element` over contiguous index slices in parallel and sums
    /// the slice results in slice order, so totals are independent of the
    /// thread count.
    fn sliced_sum<F>(&self, total: u64, per_element: F) -> BigInt
    where
        F: Fn(u64) -> BigInt + Sync,
    {
        let slices: u64 = 128.min(total.max(1));
        let partials: Vec<BigInt> = (0..slices)
            .into_par_iter()
            .map(|s| {
                let lo = total * s / slices;
                let hi = total * (s + 1) / slices;
                let mut acc = BigInt::zero();
                for idx in lo..hi {
                    acc += per_element(idx);
                }
                acc
            })
            .collect();
        partials.into_iter().sum()
    }

    /// Σ_A q0^nullity(A) over the whole space: the number of ordered
    /// commuting pairs.
    pub fn count_commuting_pairs(&self, force: bool) -> Result<BigInt> {
        let total = self.guard(force)?;
        let q0 = BigInt::from(self.coeff.order());
        Ok(self.sliced_sum(total, |idx| {
            let a = self.element(&self.coords_of_index(idx));
            let rank = rank_of(&self.coeff, self.commutator_rows(&a));
            q0.pow((self.dim() - rank) as u32)
        }))
    }

    /// Number of nilpotent elements of the space.
    pub fn count_nilpotents(&self, force: bool) -> Result<BigInt> {
        let total = self.guard(force)?;
        Ok(self.sliced_sum(total, |idx| {
            let a = self.element(&self.coords_of_index(idx));
            if a.is_nilpotent(&self.field) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Oracle count wrapped as a [`CountReport`](crate::report::CountReport)
    /// so results export through the same JSON/CSV schema as the formulas.
    pub fn count_report(
        &self,
        kind: crate::report::Kind,
        force: bool,
    ) -> Result<crate::report::CountReport> {
        use crate::report::{BackendTag, CountReport, CountValue, Family, Kind, QSpec};
        let (family, n, q) = match self.kind {
            SpaceKind::Mat => (Family::Gl, self.size as u32, self.field.order()),
            SpaceKind::SkewHermitian => (Family::U, self.size as u32, self.coeff.order()),
            SpaceKind::Symplectic => (Family::Sp, (self.size / 2) as u32, self.field.order()),
            SpaceKind::Hermitian => {
                return Err(Error::NotInSpace {
                    space: "hermitian (no report family)",
                })
            }
        };
        let value = match kind {
            Kind::Pairs => self.count_commuting_pairs(force)?,
            Kind::NilpotentPairs => self.count_nilpotent_pairs(force)?,
            other => {
                return Err(Error::Inconsistent(format!(
                    "oracle reports exist for pair kinds, not {other}"
                )))
            }
        };
        Ok(CountReport {
            family,
            kind,
            n,
            q: QSpec::Numeric(BigInt::from(q)),
            backend: BackendTag::Oracle,
            value: CountValue::Int(value),
        })
    }

    /// Ordered pairs of commuting nilpotent elements: for every nilpotent A
    /// the commuting B are enumerated from a centralizer basis and tested
    /// for nilpotency.
    pub fn count_nilpotent_pairs(&self, force: bool) -> Result<BigInt> {
        let total = self.guard(force)?;
        let q0 = self.coeff.order();
        Ok(self.sliced_sum(total, |idx| {
            let a = self.element(&self.coords_of_index(idx));
            if !a.is_nilpotent(&self.field) {
                return BigInt::zero();
            }
            let cent = nullspace(&self.coeff, self.commutator_rows(&a));
            let cent_mats: Vec<FqMat> = cent.iter().map(|v| self.element(v)).collect();
            let inner_total = q0.pow(cent_mats.len() as u32);
            let mut count = 0u64;
            for inner in 0..inner_total {
                let mut b = FqMat::zero(&self.field, self.size);
                let mut rest = inner;
                for v in &cent_mats {
                    let digit = self.coeff.element(rest % q0);
                    rest /= q0;
                    if !self.coeff.is_zero(digit) {
                        b = b.add(&self.field, &v.scale(&self.field, digit));
                    }
                }
                if b.is_nilpotent(&self.field) {
                    count += 1;
                }
            }
            BigInt::from(count)
        }))
    }
}
