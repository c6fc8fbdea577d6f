//! Exact rationals and the handful of integer helpers the identities need.

use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("'{text}' is not a rational of the form p/q"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p = i128::from_str(p).map_err(|_| bad())?;
    let q = i128::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn serialize_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// Binomial coefficient, `None` on overflow. `binomial(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

pub fn binomial_i128(n: usize, k: usize) -> Result<i128> {
    binomial(n as u64, k as u64)
        .and_then(|b| b.to_i128())
        .ok_or(Error::Overflow("binomial coefficient"))
}

pub fn factorial(n: usize) -> Result<i128> {
    (1..=n as i128)
        .try_fold(1i128, |acc, i| acc.checked_mul(i))
        .ok_or(Error::Overflow("factorial"))
}

pub fn pow_i128(base: i128, exp: usize) -> Result<i128> {
    (0..exp)
        .try_fold(1i128, |acc, _| acc.checked_mul(base))
        .ok_or(Error::Overflow("integer power"))
}

pub fn checked_mul(a: Rational, b: Rational) -> Result<Rational> {
    // reduce crosswise before multiplying to keep i128 headroom
    let g1 = num_integer::gcd(*a.numer(), *b.denom());
    let g2 = num_integer::gcd(*b.numer(), *a.denom());
    let num = (a.numer() / g1)
        .checked_mul(b.numer() / g2)
        .ok_or(Error::Overflow("rational product"))?;
    let den = (a.denom() / g2)
        .checked_mul(b.denom() / g1)
        .ok_or(Error::Overflow("rational product"))?;
    Ok(Rational::new(num, den))
}

pub fn checked_add(a: Rational, b: Rational) -> Result<Rational> {
    let l = num_integer::lcm(*a.denom(), *b.denom());
    let x = a
        .numer()
        .checked_mul(l / a.denom())
        .and_then(|x| b.numer().checked_mul(l / b.denom()).and_then(|y| x.checked_add(y)))
        .ok_or(Error::Overflow("rational sum"))?;
    Ok(Rational::new(x, l))
}

/// Largest integer `<= r`.
pub fn floor_to_i128(r: &Rational) -> i128 {
    r.floor().to_integer()
}
