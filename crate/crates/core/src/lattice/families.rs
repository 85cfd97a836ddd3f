use super::zeta::all_frames;
use super::{Tetrahedron, Triangle, Vec4, ZetaFrame};
use crate::arith::{checked_add, checked_mul, checked_sq, gcd, gcd_all};
use crate::diophantine::TripleSolution;
use crate::error::{ensure_identity, Error, Result};
use crate::Rational;

fn sum_sq(xs: &[i64], ctx: &'static str) -> Result<i64> {
    xs.iter().try_fold(0, |acc, &x| checked_add(acc, checked_sq(x, ctx)?, ctx))
}

/// The triangle `A = (a+b, a-b, c+d, c-d)`, `B = (a+c, d-b, c-a, -b-d)`
/// with squared side `2(a^2 + b^2 + c^2 + d^2)`.
pub fn four_param_triangle(a: i64, b: i64, c: i64, d: i64) -> Result<Triangle> {
    if [a, b, c, d] == [0; 4] {
        return Err(Error::Degenerate("seed (0,0,0,0)".into()));
    }
    let side = checked_mul(2, sum_sq(&[a, b, c, d], "four_param_triangle")?, "four_param_triangle")?;
    let t = Triangle::new(Vec4::new(a + b, a - b, c + d, c - d), Vec4::new(a + c, d - b, c - a, -b - d))
        .map_err(|e| Error::internal(e.to_string()))?;
    ensure_identity!(t.d == side, "four-parameter triangle has side {} not {side}", t.d);
    Ok(t)
}

/// [`four_param_triangle`] completed by `C = (b+c, a+d, d-a, c-b)`.
pub fn four_param_tetrahedron(a: i64, b: i64, c: i64, d: i64) -> Result<Tetrahedron> {
    let t = four_param_triangle(a, b, c, d)?;
    Tetrahedron::new(t.a, t.b, Vec4::new(b + c, a + d, d - a, c - b))
        .map_err(|e| Error::internal(e.to_string()))
}

/// The triangle `A = ((m-2n)d, ma, mb, mc)`, `B = ((2m-n)d, na, nb, nc)`
/// built on a solution of `a^2 + b^2 + c^2 = 3d^2`; squared side
/// `4d^2(m^2 - mn + n^2)`.
pub fn solution_triangle(a: i64, b: i64, c: i64, d: i64, m: i64, n: i64) -> Result<Triangle> {
    TripleSolution::new(a, b, c, d)?;
    if d == 0 {
        return Err(Error::Degenerate("zero solution".into()));
    }
    if gcd(m, n) != 1 {
        return Err(Error::domain(format!("gcd({m},{n}) != 1")));
    }
    let ctx = "solution_triangle";
    let form = checked_add(checked_sq(m, ctx)? - m * n, checked_sq(n, ctx)?, ctx)?;
    let side = checked_mul(checked_mul(4, checked_sq(d, ctx)?, ctx)?, form, ctx)?;
    let big = |x: i64, y: i64| checked_mul(x, y, ctx);
    let av = Vec4::new(big(m - 2 * n, d)?, big(m, a)?, big(m, b)?, big(m, c)?);
    let bv = Vec4::new(big(2 * m - n, d)?, big(n, a)?, big(n, b)?, big(n, c)?);
    let t = Triangle::new(av, bv).map_err(|e| Error::internal(e.to_string()))?;
    ensure_identity!(t.d == side, "solution triangle has side {} not {side}", t.d);
    Ok(t)
}

/// Fourth vertex `R = ((m-n)d, x, y, z)` for [`solution_triangle`], where
/// `(x, y, z)` is found in the plane frame of `(a, b, c)`.
pub fn solution_tetrahedron(a: i64, b: i64, c: i64, d: i64, m: i64, n: i64) -> Result<Tetrahedron> {
    let t = solution_triangle(a, b, c, d, m, n)?;
    let g = gcd_all(&[a, b, c]);
    let (pa, pb, pc, pd) = (a / g, b / g, c / g, d / g);
    let mut frames = Vec::new();
    for f in all_frames([pa, pb, pc], pd)? {
        let al = f.aligned(pc);
        for zs in [1, -1] {
            for cand in [al.with_signs(zs, 1), al.with_signs(zs, -1)] {
                if !frames.contains(&cand) {
                    frames.push(cand);
                }
            }
        }
    }
    for f in &frames {
        if let Some(r) = completion_from_frame(f, [pa, pb, pc], pd, m, n) {
            if let Ok(tet) = Tetrahedron::new(t.a, t.b, g * r) {
                return Ok(tet);
            }
        }
    }
    Err(Error::not_found(format!(
        "no integral fourth vertex for ({a},{b},{c}; {d}) with m={m}, n={n} over {} frames",
        frames.len()
    )))
}

fn completion_from_frame(f: &ZetaFrame, abc: [i64; 3], d: i64, m: i64, n: i64) -> Option<Vec4> {
    let cz = Rational::new(2 * m - 4 * n, 3);
    let ce = Rational::new(2 * m + 2 * n, 3);
    let mut xyz = [0i64; 3];
    for i in 0..3 {
        let v = cz * f.zeta[i] + ce * f.eta[i] + Rational::new(abc[i] * (m + n), 3);
        if !v.is_integer() {
            return None;
        }
        xyz[i] = v.to_integer();
    }
    Some(Vec4::new((m - n) * d, xyz[0], xyz[1], xyz[2]))
}

/// A regular tetrahedron with edge `OA`, for any `A` with `|A|^2` even.
///
/// Coordinates are paired so that each pair has equal parity, the
/// four-parameter seed is solved from the pairs, and the result is mapped
/// back to the original coordinate order.
pub fn complete_point(a: Vec4) -> Result<Tetrahedron> {
    let n = a.norm2();
    if n <= 0 || n % 2 != 0 {
        return Err(Error::domain(format!("|{a}|^2 = {n} is not even and positive")));
    }
    let y = a.0;
    let pairing = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]]
        .into_iter()
        .find(|p| (y[p[0]] - y[p[1]]) % 2 == 0 && (y[p[2]] - y[p[3]]) % 2 == 0)
        .ok_or_else(|| Error::internal(format!("no parity pairing for {a}")))?;
    let z = pairing.map(|i| y[i]);
    let tet =
        four_param_tetrahedron((z[0] + z[1]) / 2, (z[0] - z[1]) / 2, (z[2] + z[3]) / 2, (z[2] - z[3]) / 2)?;
    let unpermute = |v: Vec4| {
        let mut out = [0; 4];
        for (i, &p) in pairing.iter().enumerate() {
            out[p] = v.0[i];
        }
        Vec4(out)
    };
    let (ra, rb, rc) = (unpermute(tet.a), unpermute(tet.b), unpermute(tet.c));
    ensure_identity!(ra == a, "completion moved the input vertex {a} to {ra}");
    Tetrahedron::new(ra, rb, rc).map_err(|e| Error::internal(e.to_string()))
}
