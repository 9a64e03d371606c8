use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduced fraction over big integers. The denominator is kept positive and
/// zero is stored as 0/1, so structural equality is value equality.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `-p`, `+p` or `p/q` (sign on the numerator only).
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num: BigInt = parse_int(num, true).ok_or_else(|| format!("bad numerator in '{token}'"))?;
    let den: BigInt = match den {
        Some(d) => parse_int(d, false).ok_or_else(|| format!("bad denominator in '{token}'"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in '{token}'"));
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let digits = match s.as_bytes().first() {
        Some(b'-') | Some(b'+') if signed => &s[1..],
        _ => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub(crate) fn parse_rational_at(token: &str, line: usize) -> Result<Rational> {
    parse_rational(token).map_err(|reason| Error::parse(line, reason))
}

/// Formats a coefficient for polynomial output: integers bare, fractions in parentheses.
pub(crate) fn coeff_str(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("+3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "a", "1/-2", "1.5", "--1", "1/", "/2"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_form() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(frac(0, -7), zero());
        assert_eq!(frac(0, -7).denom(), &BigInt::one());
        assert_eq!(frac(7, 1).to_string(), "7");
        assert_eq!(frac(-7, 2).to_string(), "-7/2");
    }
}
