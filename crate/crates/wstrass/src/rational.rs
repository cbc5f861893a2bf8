//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision rational; floats
//! never appear. [`Rat`] is `num_rational::BigRational`, which keeps
//! numerator and denominator coprime with a positive denominator, so the
//! reduced-form invariant holds after every operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: reduced p/q with q >= 1.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction n/d, reduced.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact string form: `p/q`, or just `p` when the denominator is 1.
///
/// This is the only serialization the crate emits for rationals.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `-p`, or `p/q` with integer p, q.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| err("bad integer"))?;
        Ok(Rat::from_integer(n))
    }
}

/// Exact n-th root of a rational, if one exists.
///
/// For even n the nonnegative root is returned.
pub fn rat_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1);
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if &rn.pow(n) == num && &rd.pow(n) == den {
        Some(Rat::new(rn, rd))
    } else {
        None
    }
}
