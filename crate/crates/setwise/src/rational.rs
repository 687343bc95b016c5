//! Parsing, formatting, and serde helpers for exact rationals and big
//! integers.
//!
//! Rationals cross every external boundary (CLI flags, JSON reports) as
//! `"p/q"` strings, with a bare integer accepted as shorthand for `p/1`.
//! Arbitrary-precision integers serialize as decimal strings so that values
//! past 2^53 survive JSON round-trips.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::BigUint;

use crate::{Error, Result};

/// Parse a `"p/q"` string (or bare integer `"p"`) into an exact rational.
///
/// Whitespace around the string and around the slash is tolerated. A zero
/// denominator is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num_text:?}")))?;
    let denom: BigInt = den_text
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den_text:?}")))?;
    if denom == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Format a rational as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom() == &BigInt::from(1) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Serde adapter: `BigRational` as a `"p/q"` string field.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &BigRational,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let text = String::deserialize(de)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vec<BigRational>` as a list of `"p/q"` strings.
pub mod serde_rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[BigRational],
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Vec<BigRational>, D::Error> {
        let texts = Vec::<String>::deserialize(de)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter: `BigUint` as a decimal string field.
pub mod serde_biguint {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &BigUint,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<BigUint, D::Error> {
        let text = String::deserialize(de)?;
        text.parse()
            .map_err(|_| serde::de::Error::custom(format!("bad integer {text:?}")))
    }
}

/// Exact factorial.
pub fn factorial(n: u32) -> BigUint {
    (1..=u64::from(n)).map(BigUint::from).product()
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(u64::from(n - i)) / BigUint::from(u64::from(i) + 1);
    }
    acc
}

/// A `BigUint` viewed as an exact rational, for mixed arithmetic.
pub fn big_to_ratio(value: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Convenience: an integer as an exact rational.
pub fn int_ratio(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}
