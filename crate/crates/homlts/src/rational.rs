//! Exact rational scalars.
//!
//! Every computation in this crate runs over the field of rational numbers
//! with arbitrary-precision integer parts; there are no floating-point code
//! paths and every identity check is an exact equality. Scalars are kept in
//! canonical form (reduced fraction, positive denominator) by construction
//! and serialize as `"p/q"`, or `"p"` when the denominator is 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parse `"p"` or `"p/q"` (optional leading `-`). Rejects `q = 0` and any
/// other malformed input.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator {num:?}"))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid rational denominator {d:?}"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: `"p/q"` or `"p"` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}
