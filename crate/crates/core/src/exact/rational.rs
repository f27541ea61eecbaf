use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_arith(x: &Rational, y: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x / y
        }
    })
}

/// `x^e` for a signed exponent; `0^e` with `e < 0` is a division by zero.
pub fn pow_rational(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(pow_unsigned(&x.recip(), e.unsigned_abs()));
    }
    Ok(pow_unsigned(x, e as u64))
}

pub(crate) fn pow_unsigned(x: &Rational, mut e: u64) -> Rational {
    let mut base = x.clone();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-s+1)`.
pub fn falling_rational(x: &Rational, s: u32) -> Rational {
    let mut acc = Rational::one();
    let mut cur = x.clone();
    for _ in 0..s {
        acc *= &cur;
        cur -= Rational::one();
    }
    acc
}

/// Accepts `"p/q"`, `"p"` and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` when the value is an integer.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_examples() {
        assert_eq!(rational_arith(&rat(1, 2), &rat(1, 3), ArithOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rational_arith(&rat(7, 4), &int(1), ArithOp::Mul).unwrap(), rat(7, 4));
        assert_eq!(rational_arith(&rat(1, 2), &int(0), ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form() {
        let x = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational(" 3/6 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&int(6)), "6");
    }

    #[test]
    fn powers_and_falling() {
        assert_eq!(pow_rational(&rat(1, 2), 3).unwrap(), rat(1, 8));
        assert_eq!(pow_rational(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert_eq!(pow_rational(&int(0), -1), Err(Error::DivisionByZero));
        assert_eq!(falling_rational(&int(5), 3), int(60));
        assert_eq!(falling_rational(&rat(5, 2), 2), rat(15, 4));
        assert_eq!(falling_rational(&int(2), 3), int(0));
    }

    #[test]
    fn huge_ratio_to_float() {
        let big = pow_unsigned(&int(10), 400);
        let x = &big / (&big * int(3));
        assert!((to_f64(&x) - 1.0 / 3.0).abs() < 1e-15);
    }
}
