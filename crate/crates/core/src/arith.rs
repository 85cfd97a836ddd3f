//! Small exact-integer helpers: gcd, square roots, trial-division factoring
//! and overflow-checked products.

use crate::error::{Error, Result};
use num_integer::Integer;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Non-negative gcd of a slice; zero for an empty or all-zero slice.
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0, |g, &x| gcd(g, x))
}

/// Floor square root of a non-negative integer.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative {n}");
    n.isqrt()
}

pub fn ceil_sqrt(n: i64) -> i64 {
    let r = isqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// `Some(r)` with `r >= 0` when `n = r^2`.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Exact quotient, or `None` when `den` does not divide `num`.
pub fn div_exact(num: i64, den: i64) -> Option<i64> {
    if den == 0 || num % den != 0 {
        None
    } else {
        Some(num / den)
    }
}

/// Nearest integer to `num / den` (ties toward +inf), `den > 0`.
pub fn div_round(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    (2 * num + den).div_euclid(2 * den)
}

pub fn checked_mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub fn checked_add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub fn checked_sq(a: i64, ctx: &'static str) -> Result<i64> {
    checked_mul(a, a, ctx)
}

/// Distinct prime factors with multiplicity, by trial division.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    matches!(factorize(n).as_slice(), [(p, 1)] if *p == n)
}
