use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ArithError;

/// Arbitrary-precision rational in canonical form.
///
/// `num_rational` keeps the denominator positive and the fraction reduced
/// after every operation, and prints `p/q` (or `p` when `q = 1`), which is
/// the wire format used throughout.
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q` / `-p/q` with decimal integers.
///
/// Decimal fractions, exponents, signs on the denominator and a leading `+`
/// are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits_only = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits_only(unsigned) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) if digits_only(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(ArithError::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_accepted_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-2/3").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational(" 0/5 ").unwrap(), rat(0, 1));
    }

    #[test]
    fn rejects_non_exact_input() {
        for s in ["0.5", "1e3", "", "/2", "1/", "+1", "1/-2", "a/b", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
        assert_eq!(
            parse_rational("1/0"),
            Err(ArithError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn canonical_display() {
        assert_eq!(rat(4, -6).to_string(), "-2/3");
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(0, 7).to_string(), "0");
        assert_eq!(*rat(0, 7).denom(), BigInt::from(1));
    }
}
