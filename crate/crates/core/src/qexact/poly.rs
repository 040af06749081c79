//! Univariate polynomials in q with arbitrary-precision integer coefficients.
//!
//! These are the building blocks of the symbolic coefficient field: a
//! symbolic value is a reduced ratio of two `IntPoly`.  Normalization relies
//! on the primitive-PRS gcd implemented here.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in q with `BigInt` coefficients, stored ascending with no
/// trailing zeros; the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_int(v: i64) -> Self {
        IntPoly::constant(BigInt::from(v))
    }

    /// c·q^deg.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Exact division; None if `d` does not divide `self` in Z[q].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        let lead = d.leading().unwrap();
        let mut top = rem.len();
        while top > dd {
            let k = top - 1 - dd;
            let (qc, r) = rem[top - 1].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if !qc.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    let t = c * &qc;
                    rem[k + j] -= t;
                }
            }
            quot[k] = qc;
            debug_assert!(rem[top - 1].is_zero());
            top -= 1;
        }
        if rem.iter().take(top).all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: lc(d)^(deg self - deg d + 1) · self = q·d + r.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let rl = rem.leading().unwrap().clone();
            rem = rem
                .mul_scalar(&lead)
                .sub(&d.mul(&IntPoly::monomial(rl, shift)));
        }
        rem
    }

    /// Primitive gcd with positive leading coefficient (1 for coprime
    /// inputs).  Contents are deliberately excluded: gcd(2q, 4) = 1 here.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_sign(other.primitive_part());
        }
        if other.is_zero() {
            return normalize_sign(self.primitive_part());
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

impl fmt::Display for IntPoly {
    /// Canonical rendering: descending powers with explicit signs, e.g.
    /// `q^6 + q^5 - q^3` or `2q^2 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if deg == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = String;

    /// Parses the canonical `Display` form back; used by report round-trips.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        if s == "0" {
            return Ok(IntPoly::zero());
        }
        let mut result = IntPoly::zero();
        // Normalize to a list of signed terms.
        let body = s.replace(" - ", " + -");
        for raw in body.split(" + ") {
            let raw = raw.trim();
            let (negative, term) = match raw.strip_prefix('-') {
                Some(rest) => (true, rest.trim()),
                None => (false, raw),
            };
            let (coeff_str, deg) = match term.find('q') {
                None => (term, 0usize),
                Some(pos) => {
                    let deg = match term[pos + 1..].strip_prefix('^') {
                        Some(d) => d.parse::<usize>().map_err(|e| e.to_string())?,
                        None if term[pos + 1..].is_empty() => 1,
                        None => return Err(format!("malformed term: {raw}")),
                    };
                    (&term[..pos], deg)
                }
            };
            let mag: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|e: num_bigint::ParseBigIntError| e.to_string())?
            };
            let c = if negative { -mag } else { mag };
            result = result.add(&IntPoly::monomial(c, deg));
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 2q + 1
        let b = p(&[-1, 1]); // q - 1
        assert_eq!(a.mul(&b), p(&[-1, -1, 2]));
        assert_eq!(a.add(&b), p(&[0, 3]));
        assert_eq!(a.sub(&a), IntPoly::zero());
    }

    #[test]
    fn gcd_and_exact_division() {
        // (q-1)(q+1) and (q-1)q share q-1
        let a = p(&[-1, 0, 1]);
        let b = p(&[0, -1, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[0, 1])), None);
        // content is excluded from the gcd
        assert_eq!(p(&[0, 2]).gcd(&p(&[4])), IntPoly::one());
        // sign normalization
        assert_eq!(p(&[1, -1]).gcd(&p(&[1, -1])), p(&[-1, 1]));
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(
            IntPoly::monomial(BigInt::one(), 6)
                .add(&IntPoly::monomial(BigInt::one(), 5))
                .add(&IntPoly::monomial(BigInt::from(-1), 3))
                .to_string(),
            "q^6 + q^5 - q^3"
        );
        assert_eq!(p(&[-3, 0, 2]).to_string(), "2q^2 - 3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for poly in [
            IntPoly::zero(),
            p(&[7]),
            p(&[-3, 0, 2]),
            p(&[0, -1]),
            p(&[-1, 0, -1, 1]),
            p(&[5, 4, 0, 0, 1]),
        ] {
            let shown = poly.to_string();
            assert_eq!(shown.parse::<IntPoly>().unwrap(), poly, "{shown}");
        }
    }

    proptest::proptest! {
        #[test]
        fn display_parse_round_trips(coeffs in proptest::collection::vec(-99i64..=99, 0..=8)) {
            let poly = IntPoly::new(coeffs.into_iter().map(BigInt::from).collect());
            let shown = poly.to_string();
            proptest::prop_assert_eq!(shown.parse::<IntPoly>().unwrap(), poly, "{}", shown);
        }

        #[test]
        fn gcd_divides_both_and_is_monic_up_to_sign(
            a in proptest::collection::vec(-9i64..=9, 1..=5),
            b in proptest::collection::vec(-9i64..=9, 1..=5),
        ) {
            let a = IntPoly::new(a.into_iter().map(BigInt::from).collect());
            let b = IntPoly::new(b.into_iter().map(BigInt::from).collect());
            let g = a.gcd(&b);
            if a.is_zero() && b.is_zero() {
                proptest::prop_assert!(g.is_zero());
            } else {
                proptest::prop_assert!(!g.is_zero());
                proptest::prop_assert!(!g.leading().unwrap().is_negative());
                if !a.is_zero() {
                    proptest::prop_assert!(a.primitive_part().div_exact(&g).is_some());
                }
                if !b.is_zero() {
                    proptest::prop_assert!(b.primitive_part().div_exact(&g).is_some());
                }
            }
        }
    }
}
