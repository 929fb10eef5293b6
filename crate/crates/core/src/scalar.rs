use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

/// Coefficient type accepted by the polynomial containers.
///
/// Anything with signed ring arithmetic and a total-enough order qualifies:
/// `i64`, `i128`, `BigInt`, `BigRational`, and (for quick numerics) `f64`.
/// Operations that divide (remainders, Sturm chains) are only exact when
/// the scalar is a field such as `BigRational`.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static {}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static {}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.5"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac_part);
        let mut num: BigInt = digits.parse().ok()?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac_part.len());
        return Some(BigRational::new(num, den));
    }
    let num: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(num))
}

/// Canonical `"p/q"` text; integers print without a denominator.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn int<T: Into<BigInt>>(v: T) -> BigRational {
    BigRational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("6/4"), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(parse_rational("-0.5"), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("-.25"), Some(BigRational::new((-1).into(), 4.into())));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(rational_to_string(&BigRational::new(2.into(), (-4).into())), "-1/2");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
        assert_eq!(factorial(8), BigInt::from(40320));
    }
}
