//! The ground field: rational functions in one formal parameter `a` over Q.
//!
//! Every [`Scalar`] is kept in canonical form: numerator and denominator share
//! no factor over Q[a], the denominator has a positive leading coefficient, and
//! the integer coefficients of numerator and denominator together have gcd 1.
//! Two scalars are equal iff their canonical forms agree coefficient by
//! coefficient, so `==` is exact field equality.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use parse::parse_scalar;
pub use poly::Poly;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// The formal parameter `a`.
    pub fn param() -> Self {
        Scalar {
            num: Poly::param(),
            den: Poly::one(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::from_poly(Poly::constant(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Scalar::from_poly(Poly::constant(k))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Scalar::from_parts(
            Poly::constant(q.numer().clone()),
            Poly::constant(q.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator { offset: None });
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let (mut num, mut den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        // A constant numerator and non-constant denominator can still share
        // only integer factors; handled by the content step below.
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_int(&c);
            den = den.div_exact_int(&c);
        }
        Scalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `a`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value of a constant scalar.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant()
            .then(|| BigRational::new(self.num.constant_term(), self.den.constant_term()))
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.to_string()));
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Substitutes `a := v`.
    pub fn eval(&self, v: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::Pole(v.to_string()));
        }
        Ok(self.num.eval(v) / d)
    }

    /// Substitutes `a := v`, returning the result as a constant scalar.
    pub fn eval_scalar(&self, v: &BigRational) -> Result<Scalar> {
        if self.is_constant() {
            return Ok(self.clone());
        }
        self.eval(v).map(|q| Scalar::from_rational(&q))
    }

    pub fn parse(text: &str) -> Result<Scalar> {
        parse_scalar(text)
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::normalize(self.num.add(&rhs.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(self.num.mul(&rhs.num));
        }
        Self::normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl fmt::Display for Scalar {
    /// Deterministic printing in the scalar grammar: `p`, `p/q`, `(p)/(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        let wrap_num = self.num.term_count() > 1;
        let den = self.den.to_string();
        // The denominator is a bare integer, a bare `a`, or gets parentheses.
        let bare_den = self.den.is_constant() || den == "a";
        match (wrap_num, bare_den) {
            (false, true) => write!(f, "{num}/{den}"),
            (false, false) => write!(f, "{num}/({den})"),
            (true, true) => write!(f, "({num})/{den}"),
            (true, false) => write!(f, "({num})/({den})"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
// Panics on a zero divisor; use `checked_div` when the divisor may vanish.
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero scalar"));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

/// `1/1` style rational parsing helper shared by the CLI (`--alpha`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = parse_scalar(text)?;
    s.as_rational()
        .ok_or_else(|| Error::InvalidInput(format!("'{text}' is not a rational constant")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_constant_fraction() {
        let x = s("-3/2");
        assert_eq!(x.as_rational(), Some(q(-3, 2)));
        assert_eq!(x.to_string(), "-3/2");
    }

    #[test]
    fn parse_parameter() {
        assert_eq!(s("a"), Scalar::param());
    }

    #[test]
    fn parse_reduces_common_factor() {
        let x = s("(2*a+2)/(a+1)");
        assert_eq!(x, Scalar::from_int(2));
        // Oracle: the unreduced quotient agrees at three distinct points.
        for v in [q(0, 1), q(3, 1), q(-5, 7)] {
            let lhs = (q(2, 1) * &v + q(2, 1)) / (&v + q(1, 1));
            assert_eq!(x.eval(&v).unwrap(), lhs);
        }
    }

    #[test]
    fn field_op_examples() {
        assert_eq!(s("1/2") + s("1/2"), Scalar::one());
        assert_eq!((s("a") * s("a")).to_string(), "a^2");
        let x = s("a-1");
        let inv = x.inverse().unwrap();
        assert_eq!(inv.to_string(), "1/(a-1)");
        assert_eq!(&x * &inv, Scalar::one());
    }

    #[test]
    fn division_by_zero_carries_operand() {
        match Scalar::zero().inverse() {
            Err(Error::DivisionByZero(v)) => assert_eq!(v, "0"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(s("a").checked_div(&s("a-a")).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(s("a+1").eval(&q(2, 1)).unwrap(), q(3, 1));
        assert_eq!(s("(a^2-1)/(a-1)").eval(&q(5, 1)).unwrap(), q(6, 1));
        assert!(matches!(s("1/(a-1)").eval(&q(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn canonical_sign_and_content() {
        let x = s("(2*a)/(-4*a^2+2)");
        assert_eq!(x.to_string(), "-a/(2*a^2-1)");
        assert_eq!(s("(6)/(4)").to_string(), "3/2");
        assert_eq!(s("(a+1)/2").to_string(), "(a+1)/2");
        assert_eq!(s("1/a").to_string(), "1/a");
        assert_eq!(s("3/(2*a)").to_string(), "3/(2*a)");
    }
}
