//! Lattice-point counts of dilated triangles inside their own plane lattice.

use std::fmt;

use num_traits::Zero;

use super::plane::PlaneLattice;
use crate::error::{ensure_identity, Error, Result};
use crate::lattice::Triangle;
use crate::Rational;

/// `c2 t^2 + c1 t + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EhrhartPoly {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

impl EhrhartPoly {
    pub fn eval(&self, t: i64) -> Rational {
        self.c2 * t * t + self.c1 * t + self.c0
    }

    pub fn coefficients(&self) -> [Rational; 3] {
        [self.c2, self.c1, self.c0]
    }
}

impl fmt::Display for EhrhartPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} t^2 + {} t + {}", self.c2, self.c1, self.c0)
    }
}

/// Triangle vertices in plane-lattice coordinates.
struct Flat {
    a: (i64, i64),
    b: (i64, i64),
    /// Sign of the orientation `cross(a, b)`.
    orient: i64,
}

fn cross(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

impl Flat {
    fn of(t: &Triangle) -> Result<(Flat, PlaneLattice)> {
        let pl = PlaneLattice::of_triangle(t)?;
        let a = pl.coords(t.a).ok_or_else(|| Error::internal("vertex outside plane lattice"))?;
        let b = pl.coords(t.b).ok_or_else(|| Error::internal("vertex outside plane lattice"))?;
        let orient = cross(a, b).signum();
        ensure_identity!(orient != 0, "flat triangle {t}");
        Ok((Flat { a, b, orient }, pl))
    }

    /// Points of the `t`-dilate; `strict` excludes the boundary.
    fn count(&self, t: i64, strict: bool) -> u64 {
        let (a, b) = ((t * self.a.0, t * self.a.1), (t * self.b.0, t * self.b.1));
        let xs = [0, a.0, b.0];
        let ys = [0, a.1, b.1];
        let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let edges = [((0, 0), a), (a, b), (b, (0, 0))];
        let mut n = 0;
        for x in x0..=x1 {
            for y in y0..=y1 {
                let inside = edges.iter().all(|&(p, q)| {
                    let s = self.orient * cross((q.0 - p.0, q.1 - p.1), (x - p.0, y - p.1));
                    if strict {
                        s > 0
                    } else {
                        s >= 0
                    }
                });
                n += u64::from(inside);
            }
        }
        n
    }
}

/// Lattice points in the closed `dilation`-fold dilate of `t`.
pub fn lattice_point_count(t: &Triangle, dilation: i64) -> Result<u64> {
    if dilation < 0 {
        return Err(Error::domain("negative dilation"));
    }
    Ok(Flat::of(t)?.0.count(dilation, false))
}

/// Lattice points strictly inside the `dilation`-fold dilate of `t`.
pub fn interior_count(t: &Triangle, dilation: i64) -> Result<u64> {
    if dilation <= 0 {
        return Err(Error::domain("dilation must be positive"));
    }
    Ok(Flat::of(t)?.0.count(dilation, true))
}

/// Fits the quadratic through the counts at dilations 1, 2, 3 and
/// cross-checks it: counts at 4 and 5, constant term 1, boundary points,
/// area over covolume, reciprocity and Pick's formula.
pub fn ehrhart(t: &Triangle) -> Result<EhrhartPoly> {
    let (flat, pl) = Flat::of(t)?;
    let n = |s: i64| Rational::from_integer(flat.count(s, false) as i64);
    let (n1, n2, n3) = (n(1), n(2), n(3));
    let two = Rational::from_integer(2);
    let c2 = (n3 - two * n2 + n1) / two;
    let c1 = n2 - n1 - Rational::from_integer(3) * c2;
    let c0 = n1 - c1 - c2;
    let poly = EhrhartPoly { c2, c1, c0 };
    for s in [4, 5] {
        ensure_identity!(poly.eval(s) == n(s), "fit {poly} misses dilation {s}: {}", n(s));
    }
    ensure_identity!(c0 == Rational::from_integer(1), "constant term of {poly} is not 1");
    let boundary = t.a.content() + t.b.content() + (t.a - t.b).content();
    ensure_identity!(c1 * 2 == Rational::from_integer(boundary), "linear term of {poly} != {boundary}/2");
    // (area / covolume)^2 with area^2 = 3 D^2 / 16 and covolume^2 = det(gram).
    ensure_identity!(
        c2 * c2 * 16 * pl.det() == Rational::from_integer(3 * t.d * t.d),
        "leading term of {poly} disagrees with the area"
    );
    ensure_identity!(
        Rational::from_integer(cross(flat.a, flat.b).abs()) == two * c2,
        "leading term of {poly} disagrees with the coordinate area"
    );
    for s in [1, 2] {
        let inner = Rational::from_integer(flat.count(s, true) as i64);
        ensure_identity!(poly.eval(-s) == inner, "reciprocity fails at {s}");
    }
    let pick = Rational::from_integer(flat.count(1, true) as i64) + c1 - Rational::from_integer(1);
    ensure_identity!(pick == c2, "Pick's formula fails for {poly}");
    ensure_identity!(!c2.is_zero(), "zero area");
    Ok(poly)
}
