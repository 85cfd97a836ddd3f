use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::gcd_all;

/// Integer point in `Z^4`. Ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec4(pub [i64; 4]);

impl Vec4 {
    pub const ZERO: Vec4 = Vec4([0; 4]);

    pub const fn new(x1: i64, x2: i64, x3: i64, x4: i64) -> Self {
        Vec4([x1, x2, x3, x4])
    }

    pub fn dot(self, o: Vec4) -> i64 {
        (0..4).map(|i| self.0[i] * o.0[i]).sum()
    }

    pub fn norm2(self) -> i64 {
        self.dot(self)
    }

    /// Non-negative gcd of the coordinates, zero for the origin.
    pub fn content(self) -> i64 {
        gcd_all(&self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    pub fn map(self, f: impl Fn(i64) -> i64) -> Vec4 {
        Vec4(self.0.map(f))
    }
}

impl From<[i64; 4]> for Vec4 {
    fn from(v: [i64; 4]) -> Self {
        Vec4(v)
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, o: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        self.map(|x| -x)
    }
}

impl Mul<Vec4> for i64 {
    type Output = Vec4;
    fn mul(self, v: Vec4) -> Vec4 {
        v.map(|x| self * x)
    }
}

/// Formats as `[x1,x2,x3,x4]`.
impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[{a},{b},{c},{d}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Vec4::new(8, 4, 2, -20);
        let b = Vec4::new(21, 5, -3, -3);
        assert_eq!(a.norm2(), 484);
        assert_eq!(a.dot(b), 242);
        assert_eq!((a - b).norm2(), 484);
        assert_eq!(2 * a, Vec4::new(16, 8, 4, -40));
        assert_eq!(-a + a, Vec4::ZERO);
        assert_eq!(a.content(), 2);
        assert_eq!(a.to_string(), "[8,4,2,-20]");
    }
}
