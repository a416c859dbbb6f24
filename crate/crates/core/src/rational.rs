//! Canonical rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator and `0` stored as `0/1`. `num_rational` restores that
//! canonical form after every operation, so structural equality is numeric
//! equality and the type can key ordered maps.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Rational with value `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
///
/// Panics when `den == 0`; use [`parse_rational`] for untrusted input.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational denominator must be nonzero");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace allowed).
///
/// Rejects a zero denominator and anything that is not a plain integer on
/// either side of the slash; the canonical form is restored on construction,
/// so `"2/4"` parses to `1/2` and `"1/-2"` to `-1/2`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let err = |reason: &str| Error::InvalidRational {
        text: text.to_owned(),
        reason: reason.to_owned(),
    };
    let body = text.trim();
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let num: BigInt = num_text.parse().map_err(|_| err("numerator is not an integer"))?;
    let den: BigInt = den_text.parse().map_err(|_| err("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a whole vector of rational literals.
pub fn parse_vector(texts: &[String]) -> Result<Vec<Rational>, Error> {
    texts.iter().map(|t| parse_rational(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_to_canonical_form() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_round_trips() {
        let x = rat(-3, 7);
        assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
        assert_eq!(int(5).to_string(), "5");
    }
}
