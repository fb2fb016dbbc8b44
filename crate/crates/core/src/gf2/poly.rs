//! Polynomials over GF(2) packed into a machine word.
//!
//! Bit `i` holds the coefficient of `x^i`, so degrees up to 63 are
//! representable. That is ample here: register lengths are bounded by the
//! width of a state word anyway.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryPolynomial(u64);

// Arithmetic returns `Result` where it can overflow or divide by zero, so
// the operator traits do not fit.
#[allow(clippy::should_implement_trait)]
impl BinaryPolynomial {
    pub const ZERO: Self = BinaryPolynomial(0);
    pub const ONE: Self = BinaryPolynomial(1);
    pub const X: Self = BinaryPolynomial(2);

    pub const fn from_bits(bits: u64) -> Self {
        BinaryPolynomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree of the polynomial; the zero polynomial reports `None`.
    pub fn degree(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn deg(self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    pub fn constant_term(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficients below the leading term, i.e. the feedback taps of an
    /// LFSR whose characteristic polynomial is `self`.
    pub fn low_bits(self) -> u64 {
        match self.degree() {
            Some(d) => self.0 & ((1u64 << d) - 1),
            None => 0,
        }
    }

    pub fn add(self, rhs: Self) -> Self {
        BinaryPolynomial(self.0 ^ rhs.0)
    }

    /// Carry-less product. Fails if the result would exceed degree 63.
    pub fn mul(self, rhs: Self) -> Result<Self> {
        let wide = clmul(self.0, rhs.0);
        if wide >> 64 != 0 {
            return Err(Error::DegreeOverflow(127 - wide.leading_zeros() as usize));
        }
        Ok(BinaryPolynomial(wide as u64))
    }

    pub fn div_rem(self, rhs: Self) -> Result<(Self, Self)> {
        let d = rhs.degree().ok_or(Error::DivisionByZero)?;
        let mut q = 0u64;
        let mut r = self.0;
        while r != 0 {
            let rd = 63 - r.leading_zeros() as usize;
            if rd < d {
                break;
            }
            q |= 1 << (rd - d);
            r ^= rhs.0 << (rd - d);
        }
        Ok((BinaryPolynomial(q), BinaryPolynomial(r)))
    }

    pub fn rem(self, rhs: Self) -> Result<Self> {
        self.div_rem(rhs).map(|(_, r)| r)
    }

    pub fn gcd(self, rhs: Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut a, mut b) = (self, rhs);
        while !b.is_zero() {
            let r = a.rem(b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `(self * rhs) mod modulus`, with both operands already reduced.
    pub fn mul_mod(self, rhs: Self, modulus: Self) -> Self {
        BinaryPolynomial(reduce_wide(clmul(self.0, rhs.0), modulus.0))
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(self, mut exp: u64, modulus: Self) -> Self {
        let mut base = BinaryPolynomial(reduce_wide(self.0 as u128, modulus.0));
        let mut acc = BinaryPolynomial(reduce_wide(1, modulus.0));
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(base, modulus);
            }
            base = base.mul_mod(base, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Reciprocal polynomial `x^deg * p(1/x)`.
    pub fn reciprocal(self) -> Self {
        match self.degree() {
            None => self,
            Some(d) => BinaryPolynomial(self.0.reverse_bits() >> (63 - d)),
        }
    }

    /// Human-readable form such as `x^4+x+1`.
    pub fn to_algebraic(self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for i in (0..=self.deg()).rev() {
            if self.coeff(i) {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                });
            }
        }
        terms.join("+")
    }
}

fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let a = a as u128;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn reduce_wide(mut value: u128, modulus: u64) -> u64 {
    debug_assert!(modulus != 0);
    let d = 63 - modulus.leading_zeros() as usize;
    let m = modulus as u128;
    while value != 0 {
        let vd = 127 - value.leading_zeros() as usize;
        if vd < d {
            break;
        }
        value ^= m << (vd - d);
    }
    value as u64
}

/// Coefficient-string format: highest degree first, e.g. `"1011"` is
/// `x^3+x+1`. Whitespace anywhere in the string is ignored.
impl FromStr for BinaryPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if digits.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let trimmed = digits.trim_start_matches('0');
        if trimmed.len() > 64 {
            return Err(Error::DegreeOverflow(trimmed.len() - 1));
        }
        let mut bits = 0u64;
        for c in digits.chars() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::Parse(s.to_string())),
            };
            bits = (bits << 1) | b;
        }
        Ok(BinaryPolynomial(bits))
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        write!(f, "{:b}", self.0)
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self, self.to_algebraic())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("1011").bits(), 0b1011);
        assert_eq!(p("100 111 111"), p("100111111"));
        assert_eq!(p("11111").to_algebraic(), "x^4+x^3+x^2+x+1");
        assert_eq!(p("1011").to_string(), "1011");
        assert!("10a1".parse::<BinaryPolynomial>().is_err());
        assert!("".parse::<BinaryPolynomial>().is_err());
        assert!("   ".parse::<BinaryPolynomial>().is_err());
    }

    #[test]
    fn gcd_with_itself() {
        assert_eq!(p("11").gcd(p("11")).unwrap(), p("11"));
    }

    #[test]
    fn telescoping_product() {
        assert_eq!(p("11").mul(p("111")).unwrap(), p("1001"));
    }

    #[test]
    fn remainder_by_x_plus_one() {
        assert_eq!(p("11111").rem(p("11")).unwrap(), BinaryPolynomial::ONE);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            p("101").rem(BinaryPolynomial::ZERO),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            p("101").gcd(BinaryPolynomial::ZERO),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p("1101011011");
        let b = p("1011");
        let (q, r) = a.div_rem(b).unwrap();
        assert!(r.deg() < 3);
        assert_eq!(q.mul(b).unwrap().add(r), a);
    }

    #[test]
    fn reciprocal_of_primitive() {
        assert_eq!(p("10011").reciprocal(), p("11001"));
        assert_eq!(p("11111").reciprocal(), p("11111"));
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = p("10011");
        let mut acc = BinaryPolynomial::ONE;
        for k in 0..40u64 {
            assert_eq!(BinaryPolynomial::X.pow_mod(k, m), acc);
            acc = acc.mul_mod(BinaryPolynomial::X, m);
        }
    }
}
