//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in the formal parameter `a`; `coeffs[k]` is the coefficient of `a^k`.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `a`.
    pub fn param() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`, which must divide each of them.
    pub fn div_exact_int(&self, k: &BigInt) -> Poly {
        if k.is_one() {
            return self.clone();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|c| c / k).collect())
    }

    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_exact_int(&c)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&other.coeffs) {
            *c -= s;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
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
        Poly::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`: the remainder of
    /// `lc(divisor)^(deg self - deg divisor + 1) * self` on division by `divisor`.
    pub fn pseudo_rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        let dl = divisor.leading();
        let dd = divisor.degree();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = rem.degree() - dd;
            let rl = rem.leading();
            let mut next = rem.scale(&dl).coeffs;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                next[k + shift] -= &rl * c;
            }
            rem = Poly::from_coeffs(next);
        }
        rem
    }

    /// Exact quotient over Z; `divisor` must divide `self` with an integral
    /// quotient (always true when `divisor` is primitive and divides over Q).
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if divisor.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return Poly::zero();
        }
        let dd = divisor.degree();
        let dl = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() + 1 - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for s in (0..qlen).rev() {
            let lead = &rem[s + dd];
            if lead.is_zero() {
                continue;
            }
            let q = lead / &dl;
            debug_assert!((lead % &dl).is_zero(), "inexact polynomial division");
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[k + s] -= &q * c;
            }
            quot[s] = q;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly::from_coeffs(quot)
    }

    /// Primitive gcd over Q[a], normalized to positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            if b.degree() == 0 {
                return Poly::one();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Returns the list of (power, coefficient) pairs with nonzero coefficient,
    /// highest power first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Poly {
    /// Descending powers, no spaces: `3*a^2-a+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms_desc() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("a")?,
                _ => write!(f, "a^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (a+1)(a-2) and (a+1)(2a+3)
        let f = p(&[1, 1]).mul(&p(&[-2, 1]));
        let g = p(&[1, 1]).mul(&p(&[3, 2]));
        assert_eq!(f.gcd(&g), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), Poly::one());
        assert_eq!(p(&[6]).gcd(&p(&[4, 2])), Poly::one());
    }

    #[test]
    fn exact_division_recovers_factor() {
        let f = p(&[2, 3]).mul(&p(&[-5, 0, 7]));
        assert_eq!(f.div_exact(&p(&[2, 3])), p(&[-5, 0, 7]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, -1, 3]).to_string(), "3*a^2-a+1");
        assert_eq!(p(&[0, 1]).to_string(), "a");
        assert_eq!(p(&[-4]).to_string(), "-4");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
