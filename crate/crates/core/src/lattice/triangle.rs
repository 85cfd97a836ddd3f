use std::fmt;

use super::{SymmetryOp, Vec4};
use crate::arith::{checked_add, checked_mul, gcd};
use crate::error::{ensure_identity, Error, Result};

/// Equilateral triangle `{O, A, B}` with the third vertex at the origin.
///
/// `d` is the common squared side, so `|A|^2 = |B|^2 = |A-B|^2 = d`
/// and `2<A,B> = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub a: Vec4,
    pub b: Vec4,
    pub d: i64,
}

impl Triangle {
    /// Validating constructor; rejects anything that is not a non-degenerate
    /// equilateral triangle.
    pub fn new(a: Vec4, b: Vec4) -> Result<Triangle> {
        is_equilateral(a, b).ok_or_else(|| Error::domain(format!("{{O,{a},{b}}} is not equilateral")))
    }

    /// Half the squared side.
    pub fn l(&self) -> i64 {
        self.d / 2
    }

    /// No common factor divides all eight coordinates.
    pub fn is_irreducible(&self) -> bool {
        gcd(self.a.content(), self.b.content()) == 1
    }

    pub fn map(&self, op: &SymmetryOp) -> Triangle {
        Triangle { a: op.apply(self.a), b: op.apply(self.b), d: self.d }
    }

    /// The six ways to put one vertex at the origin and order the other two.
    pub fn relabelings(&self) -> [(Vec4, Vec4); 6] {
        let (a, b) = (self.a, self.b);
        [(a, b), (b, a), (-a, b - a), (b - a, -a), (-b, a - b), (a - b, -b)]
    }

    pub fn canonical(&self) -> Triangle {
        canonical_form(self)
    }

    /// Both vertices divided by their joint content.
    pub fn reduced(&self) -> Triangle {
        let g = gcd(self.a.content(), self.b.content());
        let (a, b) = (self.a.map(|x| x / g), self.b.map(|x| x / g));
        Triangle { a, b, d: self.d / (g * g) }
    }
}

/// Formats as `{[a1,a2,a3,a4],[b1,b2,b3,b4]}`.
impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// `Some` when `|A|^2 = |B|^2 = |A-B|^2 > 0`.
pub fn is_equilateral(a: Vec4, b: Vec4) -> Option<Triangle> {
    let d = a.norm2();
    (d > 0 && b.norm2() == d && (a - b).norm2() == d).then_some(Triangle { a, b, d })
}

/// Whether an irreducible triangle with squared side `d` can exist:
/// `d = 2^j * odd` with `j` equal to 1 or 2.
pub fn admissible_d(d: i64) -> bool {
    d >= 1 && matches!(d.trailing_zeros(), 1 | 2)
}

/// Canonical representative of the orbit of `t` under vertex relabeling
/// and the 384 signed permutations.
///
/// Among all images whose `A` has non-negative coordinates in ascending
/// order, the one with the lexicographically least `(A, B)` is chosen.
/// Constant on orbits and idempotent.
pub fn canonical_form(t: &Triangle) -> Triangle {
    let mut best: Option<(Vec4, Vec4)> = None;
    for (p, q) in t.relabelings() {
        let mut key = p.0.map(i64::abs);
        key.sort_unstable();
        let key = Vec4(key);
        if best.is_some_and(|b| key > b.0) {
            continue;
        }
        for op in SymmetryOp::all() {
            let pa = op.apply(p);
            if pa != key {
                continue;
            }
            let cand = (pa, op.apply(q));
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    let (a, b) = best.expect("some relabeling always reaches its sorted form");
    Triangle { a, b, d: t.d }
}

/// The triangle `{O, mA - nB, nA + (m-n)B}` in the plane of `t`, with
/// squared side `D (m^2 - mn + n^2)`.
pub fn generate_mn(t: &Triangle, m: i64, n: i64) -> Result<Triangle> {
    if (m, n) == (0, 0) {
        return Err(Error::Degenerate("(m, n) = (0, 0)".into()));
    }
    let ctx = "generate_mn";
    let form = checked_add(checked_mul(m, m - n, ctx)?, checked_mul(n, n, ctx)?, ctx)?;
    let side = checked_mul(t.d, form, ctx)?;
    let scaled = |x: Vec4, f: i64| -> Result<Vec4> {
        Ok(Vec4([
            checked_mul(x.0[0], f, ctx)?,
            checked_mul(x.0[1], f, ctx)?,
            checked_mul(x.0[2], f, ctx)?,
            checked_mul(x.0[3], f, ctx)?,
        ]))
    };
    let p = scaled(t.a, m)? - scaled(t.b, n)?;
    let q = scaled(t.a, n)? + scaled(t.b, m - n)?;
    let out = Triangle::new(p, q).map_err(|e| Error::internal(e.to_string()))?;
    ensure_identity!(out.d == side, "generated side {} != {side}", out.d);
    Ok(out)
}

/// Regular tetrahedron `{O, A, B, C}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tetrahedron {
    pub a: Vec4,
    pub b: Vec4,
    pub c: Vec4,
    pub d: i64,
}

impl Tetrahedron {
    /// Validating constructor: all six squared edges must agree and be positive.
    pub fn new(a: Vec4, b: Vec4, c: Vec4) -> Result<Tetrahedron> {
        let d = a.norm2();
        let edges = [b.norm2(), c.norm2(), (a - b).norm2(), (a - c).norm2(), (b - c).norm2()];
        if d == 0 || edges.iter().any(|&e| e != d) {
            return Err(Error::domain(format!("{{O,{a},{b},{c}}} is not a regular tetrahedron")));
        }
        Ok(Tetrahedron { a, b, c, d })
    }

    pub fn face(&self) -> Triangle {
        Triangle { a: self.a, b: self.b, d: self.d }
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: [i64; 4]) -> Vec4 {
        Vec4(x)
    }

    #[test]
    fn equilateral_examples() {
        let t = is_equilateral(v([0, 0, 1, 1]), v([0, 1, 1, 0])).unwrap();
        assert_eq!(t.d, 2);
        assert!(is_equilateral(v([1, 0, 0, 0]), v([0, 1, 0, 0])).is_none());
        let t = is_equilateral(v([8, 4, 2, -20]), v([21, 5, -3, -3])).unwrap();
        assert_eq!(t.d, 484);
        assert!(is_equilateral(Vec4::ZERO, Vec4::ZERO).is_none());
    }

    #[test]
    fn irreducibility() {
        let t = Triangle::new(v([0, 0, 1, 1]), v([0, 1, 1, 0])).unwrap();
        assert!(t.is_irreducible());
        let t2 = Triangle::new(v([0, 0, 2, 2]), v([0, 2, 2, 0])).unwrap();
        assert!(!t2.is_irreducible());
        assert_eq!(t2.reduced(), t);
        let t3 = Triangle::new(v([3, 3, 3, 3]), v([6, 0, 0, 0])).unwrap();
        assert!(!t3.is_irreducible());
    }

    #[test]
    fn admissible() {
        assert!(admissible_d(2));
        assert!(admissible_d(4));
        assert!(admissible_d(6));
        assert!(!admissible_d(8));
        assert!(!admissible_d(3));
        assert!(!admissible_d(0));
    }

    #[test]
    fn canonical_examples() {
        let t = Triangle::new(v([0, 1, 1, 0]), v([0, 0, 1, 1])).unwrap();
        let u = Triangle::new(v([0, 0, 1, 1]), v([0, 1, 1, 0])).unwrap();
        assert_eq!(canonical_form(&t), canonical_form(&u));
        assert_eq!(canonical_form(&u), Triangle::new(v([0, 0, 1, 1]), v([-1, 0, 0, 1])).unwrap());
        let big = Triangle::new(v([8, 4, 2, -20]), v([21, 5, -3, -3])).unwrap();
        let c = canonical_form(&big);
        assert_eq!(canonical_form(&c), c);
        for op in SymmetryOp::all().iter().step_by(13) {
            assert_eq!(canonical_form(&big.map(op)), c);
        }
        let (p, q) = big.relabelings()[4];
        assert_eq!(canonical_form(&Triangle::new(p, q).unwrap()), c);
    }

    #[test]
    fn generated_triangles() {
        let unit = Triangle::new(v([0, 0, 1, 1]), v([0, 1, 1, 0])).unwrap();
        assert_eq!(generate_mn(&unit, 1, 0).unwrap(), unit);
        assert_eq!(generate_mn(&unit, 2, 1).unwrap().d, 6);
        assert_eq!(generate_mn(&unit, 1, -1).unwrap().d, 6);
        assert!(matches!(generate_mn(&unit, 0, 0), Err(Error::Degenerate(_))));
    }

    #[test]
    fn tetrahedron_validation() {
        let t = Tetrahedron::new(v([1, 1, 0, 0]), v([1, 0, -1, 0]), v([0, 1, -1, 0])).unwrap();
        assert_eq!(t.d, 2);
        assert!(Tetrahedron::new(v([1, 1, 0, 0]), v([1, 0, -1, 0]), v([1, 0, 1, 0])).is_err());
    }
}
