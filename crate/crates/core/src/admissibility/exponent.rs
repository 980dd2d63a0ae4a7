use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(std::ops::$trait::$method(self.0, rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parses `"n"` or `"n/m"` with optional sign. Decimal and exponent
/// notation are rejected so that no value is silently rounded.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "expected an exact rational like 3 or 3/2, got {s:?}"
            ))
        };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let int = |x: &str| -> Result<BigInt> {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        let (num, den) = (int(num)?, int(den)?);
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        format!("{}/{}", repr.num, repr.den)
            .parse()
            .map_err(de::Error::custom)
    }
}

/// Lebesgue exponent `1 <= p <= inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(Rational),
    Infinite,
}

impl Exponent {
    pub fn finite(value: Rational) -> Result<Self> {
        if value < Rational::one() {
            return Err(Error::Domain(format!("exponent must be >= 1, got {value}")));
        }
        Ok(Exponent::Finite(value))
    }

    pub fn integer(n: i64) -> Result<Self> {
        Self::finite(Rational::integer(n))
    }

    /// `1/p`, with `1/inf = 0`.
    pub fn reciprocal(&self) -> Rational {
        match self {
            Exponent::Finite(p) => &Rational::one() / p,
            Exponent::Infinite => Rational::zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Exponent::Finite(p) if *p == Rational::one())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Exponent::Infinite)
    }

    /// `1 < p < inf`.
    pub fn is_interior(&self) -> bool {
        !self.is_one() && !self.is_infinite()
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exponent::Finite(p) => p.to_f64(),
            Exponent::Infinite => f64::INFINITY,
        }
    }
}

/// Hölder conjugate `p' = p/(p - 1)`, with `1' = inf` and `inf' = 1`.
pub fn holder_conjugate(p: &Exponent) -> Exponent {
    match p {
        Exponent::Infinite => Exponent::Finite(Rational::one()),
        Exponent::Finite(v) if *v == Rational::one() => Exponent::Infinite,
        Exponent::Finite(v) => Exponent::Finite(v / &(v - &Rational::one())),
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // larger p means smaller 1/p
        other.reciprocal().cmp(&self.reciprocal())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Exponent::Infinite),
            _ => Exponent::finite(s.parse()?),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => p.serialize(serializer),
            Exponent::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Inf(String),
            Finite(Rational),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Inf(s) if s == "inf" => Ok(Exponent::Infinite),
            Repr::Inf(s) => Err(de::Error::custom(format!("unknown exponent {s:?}"))),
            Repr::Finite(p) => Exponent::finite(p).map_err(de::Error::custom),
        }
    }
}
