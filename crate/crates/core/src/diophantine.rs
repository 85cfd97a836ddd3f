//! Solvers, generators and counting formulas for `a^2 + b^2 + c^2 = 3d^2`
//! and `2a^2 + c^2 = 3d^2`.

use std::fmt;

use num_traits::{CheckedMul, One};

use crate::arith::{
    checked_add, checked_mul, checked_sq, exact_sqrt, factorize, gcd, gcd_all, is_prime, isqrt,
};
use crate::error::{ensure_identity, Error, Result};
use crate::Rational;

/// A solution `(a, b, c; d)` of `a^2 + b^2 + c^2 = 3d^2`.
///
/// `primitive` is set when `gcd(a, b, c) = 1` and `0 < a <= b <= c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleSolution {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub primitive: bool,
}

impl TripleSolution {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::domain(format!("d must be non-negative, got {d}")));
        }
        let lhs = checked_add(
            checked_add(checked_sq(a, "triple")?, checked_sq(b, "triple")?, "triple")?,
            checked_sq(c, "triple")?,
            "triple",
        )?;
        let rhs = checked_mul(3, checked_sq(d, "triple")?, "triple")?;
        if lhs != rhs {
            return Err(Error::domain(format!("{a}^2+{b}^2+{c}^2 != 3*{d}^2")));
        }
        let primitive = gcd_all(&[a, b, c]) == 1 && 0 < a && a <= b && b <= c;
        Ok(TripleSolution { a, b, c, d, primitive })
    }

    pub fn abc(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// Absolute values, sorted, with the common factor removed from `a, b, c` and `d`.
    /// `None` for the zero solution.
    pub fn to_primitive(&self) -> Option<TripleSolution> {
        let g = gcd_all(&self.abc());
        if g == 0 {
            return None;
        }
        let mut v = self.abc().map(|x| x.abs() / g);
        v.sort_unstable();
        // g^2 | 3d^2 with 3 squarefree forces g | d.
        TripleSolution::new(v[0], v[1], v[2], self.d / g).ok()
    }
}

impl fmt::Display for TripleSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// A positive solution of `2a^2 + c^2 = 3d^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoOneSolution {
    pub a: i64,
    pub c: i64,
    pub d: i64,
    pub primitive: bool,
}

impl TwoOneSolution {
    pub fn new(a: i64, c: i64, d: i64) -> Result<Self> {
        if a <= 0 || c <= 0 || d <= 0 {
            return Err(Error::domain(format!("({a},{c},{d}) is not positive")));
        }
        let lhs =
            checked_add(checked_mul(2, checked_sq(a, "2a2c2")?, "2a2c2")?, checked_sq(c, "2a2c2")?, "2a2c2")?;
        if lhs != checked_mul(3, checked_sq(d, "2a2c2")?, "2a2c2")? {
            return Err(Error::domain(format!("2*{a}^2+{c}^2 != 3*{d}^2")));
        }
        Ok(TwoOneSolution { a, c, d, primitive: gcd(a, c) == 1 })
    }

    pub fn to_primitive(&self) -> TwoOneSolution {
        let g = gcd(self.a, self.c);
        TwoOneSolution { a: self.a / g, c: self.c / g, d: self.d / g, primitive: true }
    }
}

/// Ingredients of the closed-form count of primitive solutions for odd `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountBreakdown {
    pub d: i64,
    pub lambda: Rational,
    pub gamma2: u64,
    /// Orbit correction for `a = b = c`, nonzero only at `d = 1`.
    pub gamma3: u64,
    pub count: u64,
}

/// Seed `(x, y, z, t)` of the four-square quadratic generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadrupleSeed {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub t: i64,
}

/// Which sign pattern of the `(k, l)` parametrization produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `k != l (mod 3)`.
    Plus,
    /// `k != -l (mod 3)`.
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSolution {
    pub branches: Vec<Branch>,
    pub solution: TwoOneSolution,
}

fn require_positive(name: &str, d: i64) -> Result<()> {
    if d <= 0 {
        Err(Error::domain(format!("{name} must be positive, got {d}")))
    } else {
        Ok(())
    }
}

fn require_odd_positive(name: &str, d: i64) -> Result<()> {
    require_positive(name, d)?;
    if d % 2 == 0 {
        Err(Error::domain(format!("{name} must be odd, got {d}")))
    } else {
        Ok(())
    }
}

/// All primitive `[a, b, c]` for the given `d`, in lexicographic order.
///
/// Even `d` has none and yields an empty list.
pub fn primitive_solutions_3d2(d: i64) -> Result<Vec<TripleSolution>> {
    require_positive("d", d)?;
    if d % 2 == 0 {
        return Ok(Vec::new());
    }
    let target = checked_mul(3, checked_sq(d, "primitive_solutions_3d2")?, "primitive_solutions_3d2")?;
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= target {
        let mut b = a;
        while a * a + 2 * b * b <= target {
            let rest = target - a * a - b * b;
            if let Some(c) = exact_sqrt(rest) {
                if c >= b && gcd_all(&[a, b, c]) == 1 {
                    out.push(TripleSolution::new(a, b, c, d)?);
                }
            }
            b += 1;
        }
        a += 1;
    }
    Ok(out)
}

/// Legendre symbol `(-3 / p)` for an odd prime `p`.
pub fn legendre_minus3(p: i64) -> Result<i64> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    Ok(match p % 12 {
        3 => 0,
        1 | 7 => 1,
        _ => -1,
    })
}

/// `8d * prod_{p | d} (1 - (-3/p)/p)` as an exact rational.
pub fn lambda_d(d: i64) -> Result<Rational> {
    require_odd_positive("d", d)?;
    let mut acc = Rational::from_integer(checked_mul(8, d, "lambda_d")?);
    for (p, _) in factorize(d) {
        let factor = Rational::one() - Rational::new(legendre_minus3(p)?, p);
        acc = acc.checked_mul(&factor).ok_or(Error::Overflow("lambda_d"))?;
    }
    Ok(acc)
}

/// Zero when some prime factor is `5` or `7 (mod 8)`, one for `d = 3`,
/// otherwise `2^k` with `k` the number of prime factors `1` or `3 (mod 8)` other than 3.
pub fn gamma2(d: i64) -> Result<u64> {
    require_odd_positive("d", d)?;
    let primes: Vec<i64> = factorize(d).into_iter().map(|(p, _)| p).collect();
    if primes.iter().any(|p| matches!(p % 8, 5 | 7)) {
        return Ok(0);
    }
    if d == 3 {
        return Ok(1);
    }
    let k = primes.iter().filter(|&&p| p != 3 && matches!(p % 8, 1 | 3)).count();
    Ok(1u64 << k)
}

/// Count of primitive solutions from the closed form
/// `(lambda + 24 gamma2 + 16 gamma3) / 48`. The division must be exact.
pub fn count_primitive_3d2(d: i64) -> Result<CountBreakdown> {
    let lambda = lambda_d(d)?;
    let gamma2 = gamma2(d)?;
    // The only primitive solution with a = b = c is [1,1,1]; its 3-cycle
    // stabilizer contributes 16 fixed points to the orbit count.
    let gamma3: u64 = u64::from(d == 1);
    let total = lambda + Rational::from_integer(24 * gamma2 as i64 + 16 * gamma3 as i64);
    let count = total / Rational::from_integer(48);
    ensure_identity!(
        count.is_integer() && *count.numer() >= 0,
        "count formula for d={d} gave non-integer {count}"
    );
    Ok(CountBreakdown { d, lambda, gamma2, gamma3, count: count.to_integer() as u64 })
}

/// Evaluates the four-square quadratic generator at `seed`.
///
/// The result always satisfies `a^2 + b^2 + c^2 = 3d^2` but is neither
/// ordered nor primitive in general.
pub fn seed_generate(seed: QuadrupleSeed) -> Result<TripleSolution> {
    let QuadrupleSeed { x, y, z, t } = seed;
    let a = x * x + y * y - z * z - t * t + 2 * (x * z - x * t - y * t - y * z);
    let b = y * y + t * t - x * x - z * z + 2 * (y * z - x * y - x * t - z * t);
    let c = z * z + y * y - x * x - t * t + 2 * (x * y + y * t + x * z - z * t);
    let d = x * x + y * y + z * z + t * t;
    TripleSolution::new(a, b, c, d)
        .map_err(|e| Error::internal(format!("generator identity failed at {seed:?}: {e}")))
}

/// Solutions of `2a^2 + c^2 = 3d^2` with `d = 2l^2 + k^2`, one per applicable branch.
/// Coinciding branch outputs are merged.
pub fn two_one_generate(k: i64, l: i64) -> Result<Vec<BranchSolution>> {
    require_odd_positive("k", k)?;
    require_positive("l", l)?;
    if gcd(k, l) != 1 {
        return Err(Error::domain(format!("gcd({k},{l}) != 1")));
    }
    let d = 2 * l * l + k * k;
    let mut out: Vec<BranchSolution> = Vec::new();
    let mut push = |branch, a: i64, c: i64| -> Result<()> {
        let sol = TwoOneSolution::new(a.abs(), c.abs(), d)?;
        match out.iter_mut().find(|s| s.solution == sol) {
            Some(existing) => existing.branches.push(branch),
            None => out.push(BranchSolution { branches: vec![branch], solution: sol }),
        }
        Ok(())
    };
    if (k - l).rem_euclid(3) != 0 {
        push(Branch::Plus, 2 * l * l + 2 * k * l - k * k, k * k + 4 * k * l - 2 * l * l)?;
    }
    if (k + l).rem_euclid(3) != 0 {
        push(Branch::Minus, 2 * l * l - 2 * k * l - k * k, k * k - 4 * k * l - 2 * l * l)?;
    }
    Ok(out)
}

/// Exhaustive positive primitive solutions of `2a^2 + c^2 = 3d^2`, sorted by `a`.
pub fn brute_force_2a2c2(d: i64) -> Result<Vec<TwoOneSolution>> {
    require_positive("d", d)?;
    let target = checked_mul(3, checked_sq(d, "brute_force_2a2c2")?, "brute_force_2a2c2")?;
    let mut out = Vec::new();
    for a in 1..=isqrt(target / 2) {
        if let Some(c) = exact_sqrt(target - 2 * a * a) {
            if c > 0 && gcd(a, c) == 1 {
                out.push(TwoOneSolution::new(a, c, d)?);
            }
        }
    }
    Ok(out)
}
