use crate::arith::{gcd, gcd_all};
use crate::error::{ensure_identity, Error, Result};
use crate::lattice::{SymmetryOp, Triangle, Vec4};

/// The six signed minors `D_ij = (-1)^(i-j) (a_i b_j - a_j b_i)` of a
/// triangle, with the scale split `big_l = k * ell`.
///
/// A raw system has `k = big_l` and `ell = 1`; the sum of the six squares
/// is always `3k^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeltaSystem {
    pub d12: i64,
    pub d34: i64,
    pub d13: i64,
    pub d24: i64,
    pub d14: i64,
    pub d23: i64,
    pub big_l: i64,
    pub k: i64,
    pub ell: i64,
}

impl DeltaSystem {
    /// `(d12, d34, d13, d24, d14, d23)`.
    pub fn values(&self) -> [i64; 6] {
        [self.d12, self.d34, self.d13, self.d24, self.d14, self.d23]
    }

    pub fn plucker(&self) -> i64 {
        self.d12 * self.d34 - self.d13 * self.d24 + self.d14 * self.d23
    }

    pub fn sum_sq(&self) -> i64 {
        self.values().iter().map(|x| x * x).sum()
    }

    fn check(&self) -> Result<()> {
        ensure_identity!(self.plucker() == 0, "bilinear relation fails for {self:?}");
        ensure_identity!(self.sum_sq() == 3 * self.k * self.k, "sum of squared minors != 3k^2 for {self:?}");
        ensure_identity!(self.k * self.ell == self.big_l, "k * ell != L for {self:?}");
        Ok(())
    }

    pub(crate) fn from_values(v: [i64; 6], big_l: i64, k: i64, ell: i64) -> Result<DeltaSystem> {
        let [d12, d34, d13, d24, d14, d23] = v;
        let ds = DeltaSystem { d12, d34, d13, d24, d14, d23, big_l, k, ell };
        ds.check()?;
        Ok(ds)
    }
}

/// Raw minor system of `t`; `big_l = k = D/2`.
pub fn deltas_from_triangle(t: &Triangle) -> Result<DeltaSystem> {
    let (a, b) = (t.a.0, t.b.0);
    let m = |i: usize, j: usize| a[i] * b[j] - a[j] * b[i];
    let l = t.l();
    DeltaSystem::from_values([-m(0, 1), -m(2, 3), m(0, 2), m(1, 3), -m(0, 3), -m(1, 2)], l, l, 1)
}

/// Divides the minors by `g = gcd(minors, k)`, moving `g` from `k` into `ell`.
pub fn simplify_deltas(raw: &DeltaSystem) -> Result<DeltaSystem> {
    let g = gcd(gcd_all(&raw.values()), raw.k);
    DeltaSystem::from_values(raw.values().map(|x| x / g), raw.big_l, raw.k / g, raw.ell * g)
}

/// `alpha = (D12+D34, -D13+D24, D14+D23)`, `beta = (D12-D34, -D13-D24, D14-D23)`;
/// both have squared norm `3k^2`.
pub fn alphas_betas(ds: &DeltaSystem) -> Result<([i64; 3], [i64; 3])> {
    let alpha = [ds.d12 + ds.d34, -ds.d13 + ds.d24, ds.d14 + ds.d23];
    let beta = [ds.d12 - ds.d34, -ds.d13 - ds.d24, ds.d14 - ds.d23];
    let n = |v: [i64; 3]| v.iter().map(|x| x * x).sum::<i64>();
    let target = 3 * ds.k * ds.k;
    ensure_identity!(n(alpha) == target && n(beta) == target, "alpha/beta norms for {ds:?}");
    Ok((alpha, beta))
}

/// Two independent vectors orthogonal to the plane of the triangle:
/// `v = (0, a1-b1, a2-b2, a3-b3)`, `w = (a3-b3, -a2-b2, a1+b1, 0)`.
pub fn orthogonal_vectors(ds: &DeltaSystem) -> Result<(Vec4, Vec4)> {
    if ds.d23 == 0 {
        return Err(Error::internal(format!("D23 = 0 in {ds:?}; normalize the triangle first")));
    }
    let (al, be) = alphas_betas(ds)?;
    Ok((
        Vec4::new(0, al[0] - be[0], al[1] - be[1], al[2] - be[2]),
        Vec4::new(al[2] - be[2], -al[1] - be[1], al[0] + be[0], 0),
    ))
}

/// First symmetry image of `t` (identity first) whose `D23` is nonzero.
pub fn normalize_deltas(t: &Triangle) -> Result<(Triangle, SymmetryOp)> {
    for op in SymmetryOp::all() {
        let img = t.map(op);
        if deltas_from_triangle(&img)?.d23 != 0 {
            return Ok((img, *op));
        }
    }
    Err(Error::internal(format!("all minors vanish for {t}")))
}

/// Gram determinant of the orthogonal vectors equals `48 k^2 D23^2`.
pub fn gram_identity_check(ds: &DeltaSystem) -> Result<bool> {
    let (v, w) = orthogonal_vectors(ds)?;
    let gram = v.norm2() * w.norm2() - v.dot(w) * v.dot(w);
    Ok(gram == 48 * ds.k * ds.k * ds.d23 * ds.d23)
}
