//! Helpers around `BigRational`, the scalar type of every polynomial here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Returns `Some(n)` when `x` is an integer that fits in an `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if it is the square of a rational.
pub fn rat_sqrt_exact(x: &Q) -> Option<Q> {
    let n = int_sqrt_exact(x.numer())?;
    let d = int_sqrt_exact(x.denom())?;
    Some(Q::new(n, d))
}

/// gcd of numerators over lcm of denominators; the positive rational `c` with
/// every input divided by `c` an integer with content one.
pub fn rational_content<'a, I: IntoIterator<Item = &'a Q>>(it: I) -> Q {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in it {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        return Q::one();
    }
    Q::new(g, l)
}

/// Height of a rational: max(|num|, den).
pub fn height(x: &Q) -> BigInt {
    let n = x.numer().abs();
    let d = x.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}
