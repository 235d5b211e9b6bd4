//! Exact scalar type and small arithmetic helpers.
//!
//! All quantities in this crate (coordinates, areas, lattice distances,
//! quasi-polynomial coefficients) are arbitrary-precision rationals, stored
//! reduced with a positive denominator. `num_rational::BigRational` maintains
//! exactly that invariant, so it is used directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(int(n))
}

/// `n/d` with `d > 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d > 0, "denominator must be positive");
    Rational::new(int(n), int(d))
}

pub fn floor_int(r: &Rational) -> Int {
    r.floor().to_integer()
}

pub fn ceil_int(r: &Rational) -> Int {
    r.ceil().to_integer()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    a.lcm(b)
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Number of integers in the closed interval `[lo, hi]`; zero when empty.
pub fn integers_in_closed_interval(lo: &Rational, hi: &Rational) -> Int {
    if lo > hi {
        return Int::zero();
    }
    let n: Int = floor_int(hi) - ceil_int(lo) + 1;
    if n.is_negative() {
        Int::zero()
    } else {
        n
    }
}

/// Parses `"a"` or `"a/b"` with `b > 0`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<Int>().ok()?;
            let d = d.trim().parse::<Int>().ok()?;
            if d.is_positive() {
                Some(Rational::new(n, d))
            } else {
                None
            }
        }
    }
}

/// Formats as `"a"` for integers and `"a/b"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
