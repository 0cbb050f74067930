//! Small helpers for exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 900;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational, stable for huge numerators and denominators.
pub fn ln_rational(x: &BigRational) -> f64 {
    assert!(x.is_positive(), "logarithm of nonpositive rational");
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| ln_rational(x).exp())
}

/// Rational with denominator `10^digits` nearest to `x`.
pub fn approx_rational(x: f64, digits: u32) -> BigRational {
    let scale = 10i64.pow(digits);
    BigRational::new(BigInt::from((x * scale as f64).round() as i64), BigInt::from(scale))
}

/// Parse `"n/d"`, `"n"`, or a finite decimal such as `"0.25"`, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse rational '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = BigRational::new(int_part.abs() * &denom + frac_part, denom);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Unit-volume normalization of positive weights.
pub fn normalize(weights: &[BigRational]) -> Vec<BigRational> {
    let total: BigRational = weights.iter().cloned().sum();
    weights.iter().map(|w| w / &total).collect()
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn log_of_huge_ratio() {
        let big = BigRational::from_integer(num_traits::pow(BigInt::from(3), 2000));
        let expected = 2000.0 * 3f64.ln();
        assert!((ln_rational(&big) - expected).abs() < 1e-9 * expected);
        assert!((ln_rational(&rat(3, 2)) - 1.5f64.ln()).abs() < 1e-15);
    }
}
