use crate::arith::{ceil_sqrt, div_exact, exact_sqrt, gcd_all};
use crate::diophantine::TripleSolution;
use crate::error::{ensure_identity, Error, Result};

/// Integer frame of the plane `a x + b y + c z = 0`.
///
/// `zeta` and `sigma` are orthogonal with `|zeta|^2 = 2d^2`,
/// `|sigma|^2 = 6d^2`; `eta = (zeta + sigma) / 2`. `r = zeta[2]`,
/// `s = sigma[2]` and `2q = s^2 + 3r^2` with `q = a^2 + b^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZetaFrame {
    pub zeta: [i64; 3],
    pub sigma: [i64; 3],
    pub eta: [i64; 3],
    pub r: i64,
    pub s: i64,
    pub q: i64,
    pub d: i64,
}

impl ZetaFrame {
    /// The frame with `sigma` negated.
    pub fn mirrored(&self) -> ZetaFrame {
        self.with_signs(1, -1)
    }

    /// The frame with `sigma` negated when needed so that `s + c = 0 (mod 3)`.
    pub fn aligned(&self, c: i64) -> ZetaFrame {
        if (self.s + c).rem_euclid(3) == 0 {
            *self
        } else {
            self.mirrored()
        }
    }

    pub(crate) fn with_signs(&self, zs: i64, ss: i64) -> ZetaFrame {
        let zeta = self.zeta.map(|x| zs * x);
        let sigma = self.sigma.map(|x| ss * x);
        ZetaFrame {
            zeta,
            sigma,
            eta: std::array::from_fn(|i| (zeta[i] + sigma[i]) / 2),
            r: zs * self.r,
            s: ss * self.s,
            q: self.q,
            d: self.d,
        }
    }

    fn check(&self, abc: [i64; 3]) -> Result<()> {
        let dot = |u: [i64; 3], v: [i64; 3]| -> i64 { (0..3).map(|i| u[i] * v[i]).sum() };
        let d2 = self.d * self.d;
        ensure_identity!(dot(self.zeta, self.zeta) == 2 * d2, "|zeta|^2 != 2d^2 in {self:?}");
        ensure_identity!(dot(self.sigma, self.sigma) == 6 * d2, "|sigma|^2 != 6d^2 in {self:?}");
        ensure_identity!(dot(self.zeta, self.sigma) == 0, "zeta not orthogonal to sigma in {self:?}");
        ensure_identity!(
            dot(abc, self.zeta) == 0 && dot(abc, self.sigma) == 0,
            "frame leaves the plane in {self:?}"
        );
        ensure_identity!(2 * self.q == self.s * self.s + 3 * self.r * self.r, "2q != s^2+3r^2 in {self:?}");
        Ok(())
    }
}

fn frame_at(abc: [i64; 3], d: i64, r: i64, s: i64) -> Option<ZetaFrame> {
    let [a, b, c] = abc;
    let q = a * a + b * b;
    let zeta = [div_exact(-(r * a * c + d * b * s), q)?, div_exact(d * a * s - b * c * r, q)?, r];
    let sigma = [div_exact(3 * d * b * r - a * c * s, q)?, div_exact(-(3 * d * a * r + b * c * s), q)?, s];
    let eta = [
        div_exact(zeta[0] + sigma[0], 2)?,
        div_exact(zeta[1] + sigma[1], 2)?,
        div_exact(zeta[2] + sigma[2], 2)?,
    ];
    Some(ZetaFrame { zeta, sigma, eta, r, s, q, d })
}

/// Every integral frame in search order: `|s|` ascending, then positive
/// `s` before negative, then positive `r` before negative.
pub(crate) fn all_frames(abc: [i64; 3], d: i64) -> Result<Vec<ZetaFrame>> {
    let sol = TripleSolution::new(abc[0], abc[1], abc[2], d)?;
    if gcd_all(&abc) != 1 {
        return Err(Error::domain(format!("({sol}; {d}) is not primitive")));
    }
    let q = abc[0] * abc[0] + abc[1] * abc[1];
    if q == 0 {
        return Err(Error::domain("a = b = 0 has no frame"));
    }
    let mut out = Vec::new();
    for s_abs in 0..=ceil_sqrt(2 * q) {
        for s in if s_abs == 0 { vec![0] } else { vec![s_abs, -s_abs] } {
            let rest = 2 * q - s * s;
            if rest < 0 || rest % 3 != 0 {
                continue;
            }
            let Some(r_abs) = exact_sqrt(rest / 3) else {
                continue;
            };
            for r in if r_abs == 0 { vec![0] } else { vec![r_abs, -r_abs] } {
                if let Some(f) = frame_at(abc, d, r, s) {
                    f.check(abc)?;
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

/// First integral frame of the plane orthogonal to `(a, b, c)`, for a
/// solution of `a^2 + b^2 + c^2 = 3d^2` with `gcd(a, b, c) = 1`.
///
/// The frame is returned as found; [`ZetaFrame::aligned`] applies the
/// `s + c = 0 (mod 3)` sign convention.
pub fn zeta_frame(a: i64, b: i64, c: i64, d: i64) -> Result<ZetaFrame> {
    all_frames([a, b, c], d)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::not_found(format!("no integral frame for ({a},{b},{c}; {d})")))
}
