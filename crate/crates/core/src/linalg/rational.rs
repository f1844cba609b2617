//! Exact rational scalars.
//!
//! Scalars are `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator (zero is `0/1`). Text form is `"p/q"`,
//! or just `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, d))
        }
    }
}

/// Least common multiple of the denominators of `xs` (1 for an empty slice).
pub(crate) fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let x = frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(frac(0, -7), q(0));
        assert_eq!(q(0).denom(), &BigInt::from(1));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "5", "-3/2", "7/9"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational(" -10/-4 ").unwrap()), "5/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("").is_err());
    }
}
