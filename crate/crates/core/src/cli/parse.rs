use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::admissibility::{Exponent, Rational};
use crate::error::{Error, Result};

/// Exact value from `"n"`, `"n/m"` or a plain decimal such as `"0.25"`
/// or `"1.5e-3"`. Used by numeric commands that accept decimals.
pub fn number(s: &str) -> Result<Rational> {
    let t = s.trim();
    if !t.contains(['.', 'e', 'E']) {
        return t.parse();
    }
    let bad = || Error::Parse(format!("malformed number {s:?}"));
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty()
        || !(int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()))
    {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational(num_rational::BigRational::from_integer(
            digits * Pow::pow(&ten, scale as u32),
        ))
    } else {
        Rational(num_rational::BigRational::new(
            digits,
            Pow::pow(&ten, (-scale) as u32),
        ))
    };
    Ok(if neg && !value.0.is_zero() {
        Rational(-value.0)
    } else {
        value
    })
}

/// Exponent from `"inf"` or a [`number`].
pub fn exponent(s: &str) -> Result<Exponent> {
    match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" => Ok(Exponent::Infinite),
        _ => Exponent::finite(number(s)?),
    }
}

/// Floating value from a decimal or a fraction.
pub fn real(s: &str) -> Result<f64> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Ok(number(s)?.to_f64()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(number("0.25").unwrap(), Rational::new(1, 4));
        assert_eq!(number("-1.5e-1").unwrap(), Rational::new(-3, 20));
        assert_eq!(number("2e3").unwrap(), Rational::integer(2000));
        assert_eq!(number("3/2").unwrap(), Rational::new(3, 2));
        assert!(number("1.2.3").is_err());
        assert!(number(".").is_err());
        assert_eq!(exponent("inf").unwrap(), Exponent::Infinite);
        assert!(exponent("0.5").is_err());
        assert_eq!(real("1/4").unwrap(), 0.25);
    }
}
