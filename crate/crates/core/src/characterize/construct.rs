//! Reconstruction of equilateral triangles inside a plane given by its
//! minor system, via the norm form `|P(v, w)|^2`.

use super::plane::PlaneSystem;
use crate::arith::{checked_mul, div_exact, exact_sqrt, isqrt};
use crate::error::{ensure_identity, Error, Result};
use crate::lattice::{Triangle, Vec4};

/// `|P(v, w)|^2 = (qa v^2 + qb v w + qc w^2) / D23^2`.
///
/// With `w0 = qa` and `v0 = -qb/2` the numerator satisfies
/// `w0 * num = (w0 v - v0 w)^2 + 3 k^2 D23^2 w^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QfData {
    pub qa: i64,
    pub qb: i64,
    pub qc: i64,
    pub v0: i64,
    pub w0: i64,
    pub disc: i64,
    pub k: i64,
    pub d23: i64,
}

impl QfData {
    /// Numerator `qa v^2 + qb v w + qc w^2`.
    pub fn numerator(&self, v: i64, w: i64) -> i64 {
        self.qa * v * v + self.qb * v * w + self.qc * w * w
    }

    /// Right-hand side `2 k w0 ell D23^2` of the critical equation.
    pub fn critical_rhs(&self, ell: i64) -> Result<i64> {
        let ctx = "critical equation";
        checked_mul(checked_mul(2 * self.k * self.w0, ell, ctx)?, self.d23 * self.d23, ctx)
    }

    /// Integer `(v, w)` with `(w0 v - v0 w)^2 + 3k^2 D23^2 w^2 = 2 k w0 ell D23^2`,
    /// ordered by `|w|`, then `|v|`, positive before negative.
    pub fn critical_solutions(&self, ell: i64) -> Result<Vec<(i64, i64)>> {
        let rhs = self.critical_rhs(ell)?;
        let scale = 3 * self.k * self.k * self.d23 * self.d23;
        let wmax = isqrt(rhs / scale);
        let mut out = Vec::new();
        for w in -wmax..=wmax {
            let rest = rhs - scale * w * w;
            let Some(x) = exact_sqrt(rest) else { continue };
            for x in if x == 0 { vec![0] } else { vec![x, -x] } {
                if let Some(v) = div_exact(x + self.v0 * w, self.w0) {
                    out.push((v, w));
                }
            }
        }
        out.sort_by_key(|&(v, w)| (w.abs(), v.abs(), w < 0, v < 0));
        out.dedup();
        Ok(out)
    }

    /// Closure `(v', w')` making `O, P(v, w), P(v', w')` equilateral, when integral.
    pub fn partner(&self, v: i64, w: i64) -> Option<(i64, i64)> {
        let (k, d, v0, w0) = (self.k, self.d23, self.v0, self.w0);
        let vp = div_exact(v0 * v0 * w + (k * d - v0) * w0 * v + 3 * k * k * d * d * w, 2 * k * d * w0)?;
        let wp = div_exact(v0 * w - w0 * v + k * d * w, 2 * k * d)?;
        Some((vp, wp))
    }
}

pub fn build_qf(ps: &PlaneSystem) -> Result<QfData> {
    let ds = &ps.delta;
    if ds.d23 == 0 {
        return Err(Error::domain("D23 = 0"));
    }
    let qa = ds.d34 * ds.d34 + ds.d13 * ds.d13 + ds.d23 * ds.d23;
    let qb = 2 * (ds.d34 * ds.d24 + ds.d13 * ds.d12);
    let qc = ds.d24 * ds.d24 + ds.d12 * ds.d12 + ds.d23 * ds.d23;
    let qf = QfData {
        qa,
        qb,
        qc,
        v0: -(ds.d34 * ds.d24 + ds.d13 * ds.d12),
        w0: qa,
        disc: qb * qb - 4 * qa * qc,
        k: ds.k,
        d23: ds.d23,
    };
    let k2d = 2 * ds.k * ds.d23;
    ensure_identity!(qf.disc == -3 * k2d * k2d, "discriminant {} != -3(2k D23)^2", qf.disc);
    for (v, w) in [(1, 0), (0, 1), (1, 1), (2, -1), (-3, 5)] {
        let lhs = qf.w0 * qf.numerator(v, w);
        let rhs = (qf.w0 * v - qf.v0 * w).pow(2) + 3 * (ds.k * ds.d23 * w).pow(2);
        ensure_identity!(lhs == rhs, "completed square fails at ({v},{w})");
        let p = Vec4::new(-(ds.d13 * v + ds.d12 * w), ds.d23 * v, ds.d23 * w, -(ds.d34 * v + ds.d24 * w));
        ensure_identity!(p.norm2() == qf.numerator(v, w), "norm form disagrees with |P|^2 at ({v},{w})");
    }
    Ok(qf)
}

/// A triangle found by the norm-form search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Construction {
    pub ell: i64,
    pub vw: (i64, i64),
    pub vw_partner: (i64, i64),
    pub triangle: Triangle,
}

/// First candidate at `ell`, starting from `(v, w)` in candidate order,
/// whose point and partner are both integral.
pub fn construct_triangle(ps: &PlaneSystem, ell: i64, v: i64, w: i64) -> Result<Construction> {
    let qf = build_qf(ps)?;
    let cands = qf.critical_solutions(ell)?;
    let start = cands.iter().position(|&c| c == (v, w)).ok_or_else(|| {
        Error::domain(format!("({v},{w}) does not solve the critical equation at ell={ell}"))
    })?;
    cands[start..]
        .iter()
        .find_map(|&(v, w)| try_candidate(ps, &qf, ell, v, w).transpose())
        .unwrap_or_else(|| Err(Error::not_found(format!("no integral triangle at ell={ell} from ({v},{w})"))))
}

fn try_candidate(ps: &PlaneSystem, qf: &QfData, ell: i64, v: i64, w: i64) -> Result<Option<Construction>> {
    let (Some(p), Some((vp, wp))) = (ps.point(v, w), qf.partner(v, w)) else {
        return Ok(None);
    };
    let Some(pp) = ps.point(vp, wp) else {
        return Ok(None);
    };
    let d = 2 * qf.k * ell;
    let t = crate::lattice::is_equilateral(p, pp)
        .ok_or_else(|| Error::internal(format!("closure of ({v},{w}) gave non-equilateral {p}, {pp}")))?;
    ensure_identity!(t.d == d, "constructed side {} != 2k ell = {d}", t.d);
    ensure_identity!(ps.contains(p) && ps.contains(pp), "constructed points leave the plane");
    Ok(Some(Construction { ell, vw: (v, w), vw_partner: (vp, wp), triangle: t }))
}

/// Smallest `ell` in `1..=2k^2` at which some critical solution gives an
/// integral triangle, with that triangle.
pub fn minimal_ell(ps: &PlaneSystem) -> Result<Construction> {
    let qf = build_qf(ps)?;
    let bound = 2 * qf.k * qf.k;
    for ell in 1..=bound {
        for (v, w) in qf.critical_solutions(ell)? {
            if let Some(c) = try_candidate(ps, &qf, ell, v, w)? {
                return Ok(c);
            }
        }
    }
    Err(Error::not_found(format!("no integral triangle for ell <= {bound} (k={}, w0={})", qf.k, qf.w0)))
}
