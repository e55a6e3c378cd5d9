//! Base-field scalars: exact arbitrary-precision rationals.
//!
//! The canonical text form is "p/q" with the sign on the numerator, or just
//! "p" when the denominator is 1. Parsing and formatting live here, together
//! with the serde adapters used by every serialized type in the crate, so the
//! whole artifact shares one rational format.

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::error::Error;

/// Exact element of the base field k = ℚ. Stored reduced, denominator
/// positive; all arithmetic is exact field arithmetic.
pub type Rational = num::BigRational;

/// Shorthand constructor. Panics on a zero denominator, so it is meant for
/// literals in code and tests, not for input handling.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer shorthand, `rat(n, 1)`.
pub fn rat_int(numer: i64) -> Rational {
    Rational::from(BigInt::from(numer))
}

/// Parse the canonical form "p" or "p/q". Unlike `Rational::new` this
/// rejects a zero denominator instead of panicking. Surrounding whitespace
/// is tolerated; anything else is an error.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || {
        Error::Parse(format!(
            "invalid rational `{text}`: expected `p` or `p/q` with integer p, q and q nonzero"
        ))
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(bad());
    }
    let (numer, denom) = match trimmed.split_once('/') {
        None => (trimmed, "1"),
        Some((n, d)) => (n, d),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True iff `r` is the square of a rational. For reduced p/q this holds
/// exactly when p ≥ 0 and p, q are both perfect squares; since gcd(p, q) = 1
/// that is the same as p·q being a perfect square.
pub fn is_square(r: &Rational) -> bool {
    !r.is_negative() && is_square_int(r.numer()) && is_square_int(r.denom())
}

fn is_square_int(n: &BigInt) -> bool {
    debug_assert!(!n.is_negative());
    let root = n.sqrt();
    &root * &root == *n
}

/// Serde adapter for rational fields: `#[serde(with = "rational::serde_str")]`.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for optional rational fields. Pair it with
/// `#[serde(default, skip_serializing_if = "Option::is_none")]` so absent
/// means absent on the wire.
pub mod serde_opt_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&super::format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| super::parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
