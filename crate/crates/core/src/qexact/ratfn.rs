//! Rational functions of q: the symbolic coefficient field.
//!
//! Values are kept in a canonical reduced form at all times, so equality is
//! plain representation equality: numerator and denominator are coprime in
//! Z[q], their integer contents are coprime, and the denominator has a
//! positive leading coefficient.  Zero is 0/1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// Reduced ratio of two integer-coefficient polynomials in q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: IntPoly,
    den: IntPoly,
}

impl RatFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFn { num, den }.reduced()
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        RatFn::from_poly(IntPoly::from_int(v))
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        RatFn::from_poly(IntPoly::constant(v.clone()))
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RatFn::from_poly(IntPoly::q())
    }

    /// q^e, with negative exponents allowed.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            RatFn::from_poly(IntPoly::monomial(BigInt::one(), e as usize))
        } else {
            RatFn {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::one(), (-e) as usize),
            }
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Some(p) iff the value is a polynomial (denominator 1).
    pub fn as_poly(&self) -> Option<&IntPoly> {
        if self.den.is_one_poly() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Exact evaluation at a rational q; None if the denominator vanishes.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q) / d)
    }

    fn reduced(self) -> Self {
        let RatFn { mut num, mut den } = self;
        if num.is_zero() {
            return RatFn {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        if g.degree() != Some(0) || !g.leading().unwrap().is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let cn = num.content();
        let cd = den.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            num = num
                .div_exact(&IntPoly::constant(c.clone()))
                .expect("content divides");
            den = den
                .div_exact(&IntPoly::constant(c))
                .expect("content divides");
        }
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFn { num, den }
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for IntPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.leading().unwrap().is_one()
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        self + (-rhs)
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        RatFn::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for RatFn {
    type Output = RatFn;
    fn div(self, rhs: RatFn) -> RatFn {
        assert!(!rhs.num.is_zero(), "division by the zero rational function");
        RatFn::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        // negating the numerator preserves canonical form
        RatFn {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::from_poly(IntPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one_poly() && self.den.is_one_poly()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}
