//! Exact rationals backed by `num-rational`.
//!
//! Values render as `"p/q"`, or `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `"p/q"` or `"p"`; `num-rational` already prints reduced fractions this way.
pub fn render(r: &Rational) -> String {
    r.to_string()
}

pub fn render_all(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(render).collect()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Square root of a non-negative rational as a float.
pub fn sqrt_f64(r: &Rational) -> f64 {
    debug_assert!(!r.is_negative());
    to_f64(r).sqrt()
}

/// Fixed-point rendering with `places` decimals, ties to even.
pub fn decimal(x: f64, places: usize) -> String {
    format!("{x:.places$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_reduced() {
        assert_eq!(render(&rat(2, 4)), "1/2");
        assert_eq!(render(&rat(-5, 12)), "-5/12");
        assert_eq!(render(&rat(3, -1)), "-3");
        assert_eq!(render(&rat(0, 7)), "0");
    }

    #[test]
    fn parses() {
        assert_eq!(parse("-5/12"), Some(rat(-5, 12)));
        assert_eq!(parse("4"), Some(int(4)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(0.9428, 3), "0.943");
        assert_eq!(decimal(0.125, 2), "0.12");
        assert_eq!(decimal(0.375, 2), "0.38");
        assert_eq!(decimal(2.524444, 5), "2.52444");
    }
}
