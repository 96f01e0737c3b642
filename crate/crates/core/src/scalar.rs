//! Exact rational scalars.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number; always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^k` as a scalar.
pub fn sign(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Parses `n`, `-n`, `p/q` or `-p/q`. Decimal points are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |m: &str| Error::Parse {
        line: 1,
        column: 1,
        message: format!("invalid rational `{text}`: {m}"),
    };
    let t = text.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(bad("decimals are not allowed, write p/q"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad("bad numerator"))?;
    let d = BigInt::from_str(den).map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    if den.starts_with('-') || den.starts_with('+') {
        return Err(bad("signed denominator"));
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form, `p` or `p/q`; round-trips through [`parse_scalar`].
pub fn format_scalar(s: &Scalar) -> String {
    ScalarDisplay(s).to_string()
}

pub(crate) struct ScalarDisplay<'a>(pub &'a Scalar);

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
