use super::delta::{alphas_betas, DeltaSystem};
use super::kernel::{gauss_reduce, integer_kernel};
use crate::arith::gcd_all;
use crate::error::{ensure_identity, Error, Result};
use crate::lattice::{Triangle, Vec4};
use crate::Rational;

/// Two representations `3k^2 = a^2 + b^2 + c^2 = a'^2 + b'^2 + c'^2`
/// with all six entries odd, joint gcd 1 and `c' > c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RepresentationPair {
    pub rep1: [i64; 3],
    pub rep2: [i64; 3],
    pub k: i64,
}

impl RepresentationPair {
    pub fn new(rep1: [i64; 3], rep2: [i64; 3], k: i64) -> Result<RepresentationPair> {
        if k <= 0 || k % 2 == 0 {
            return Err(Error::domain(format!("k = {k} is not odd and positive")));
        }
        let n = |v: [i64; 3]| v.iter().map(|x| x * x).sum::<i64>();
        let target = 3 * k * k;
        if n(rep1) != target || n(rep2) != target {
            return Err(Error::domain(format!("{rep1:?} and {rep2:?} must both have squared norm {target}")));
        }
        if rep1.iter().chain(&rep2).any(|x| x % 2 == 0) {
            return Err(Error::domain("representation entries must all be odd"));
        }
        if gcd_all(&[rep1, rep2].concat()) != 1 {
            return Err(Error::domain("representations share a common factor"));
        }
        if rep2[2] <= rep1[2] {
            return Err(Error::domain(format!("need c' > c, got c = {}, c' = {}", rep1[2], rep2[2])));
        }
        Ok(RepresentationPair { rep1, rep2, k })
    }

    /// The pair read off a simplified minor system with `D23 > 0`:
    /// `rep1 = (-beta1, -beta2, beta3)`, `rep2 = alpha`.
    pub fn from_deltas(ds: &DeltaSystem) -> Result<RepresentationPair> {
        if ds.d23 <= 0 {
            return Err(Error::domain(format!("need D23 > 0, got {}", ds.d23)));
        }
        let (al, be) = alphas_betas(ds)?;
        RepresentationPair::new([-be[0], -be[1], be[2]], al, ds.k)
    }
}

/// The two linear equations `D34 v + D24 w + D23 t = 0` and
/// `D23 u + D13 v + D12 w = 0` cutting out a triangle's plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlaneSystem {
    pub rows: [Vec4; 2],
    pub delta: DeltaSystem,
}

impl PlaneSystem {
    pub fn from_deltas(ds: DeltaSystem) -> Result<PlaneSystem> {
        if ds.d23 == 0 {
            return Err(Error::domain(format!("D23 = 0 gives a rank-deficient system for {ds:?}")));
        }
        Ok(PlaneSystem {
            rows: [Vec4::new(0, ds.d34, ds.d24, ds.d23), Vec4::new(ds.d23, ds.d13, ds.d12, 0)],
            delta: ds,
        })
    }

    pub fn contains(&self, p: Vec4) -> bool {
        self.rows.iter().all(|r| r.dot(p) == 0)
    }

    /// `P(v, w) = (-(D13 v + D12 w)/D23, v, w, -(D34 v + D24 w)/D23)`,
    /// `None` unless both quotients are exact.
    pub fn point(&self, v: i64, w: i64) -> Option<Vec4> {
        let ds = &self.delta;
        let u = crate::arith::div_exact(-(ds.d13 * v + ds.d12 * w), ds.d23)?;
        let t = crate::arith::div_exact(-(ds.d34 * v + ds.d24 * w), ds.d23)?;
        Some(Vec4::new(u, v, w, t))
    }
}

/// Minor system and plane equations from a representation pair:
/// `D12 = (a'-a)/2`, `D34 = (a+a')/2`, `D13 = -(b'-b)/2`, `D24 = (b+b')/2`,
/// `D14 = (c+c')/2`, `D23 = (c'-c)/2`.
pub fn plane_from_reps(reps: &RepresentationPair) -> Result<PlaneSystem> {
    let RepresentationPair { rep1: [a, b, c], rep2: [a2, b2, c2], k } =
        RepresentationPair::new(reps.rep1, reps.rep2, reps.k)?;
    let vals = [(a2 - a) / 2, (a + a2) / 2, -(b2 - b) / 2, (b + b2) / 2, (c + c2) / 2, (c2 - c) / 2];
    let ds = DeltaSystem::from_values(vals, k, k, 1)?;
    PlaneSystem::from_deltas(ds)
}

/// Basis of the integer points of a rational plane in `Z^4`, Gauss-reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlaneLattice {
    pub b1: Vec4,
    pub b2: Vec4,
    pub gram: [[i64; 2]; 2],
}

impl PlaneLattice {
    fn from_basis(b1: Vec4, b2: Vec4) -> PlaneLattice {
        let (b1, b2) = gauss_reduce(b1, b2);
        let gram = [[b1.norm2(), b1.dot(b2)], [b1.dot(b2), b2.norm2()]];
        PlaneLattice { b1, b2, gram }
    }

    /// Lattice of integer points in the plane spanned by `t`.
    pub fn of_triangle(t: &Triangle) -> Result<PlaneLattice> {
        let normals = integer_kernel(&[t.a, t.b]);
        ensure_identity!(normals.len() == 2, "triangle {t} spans rank {}", 4 - normals.len());
        let basis = integer_kernel(&normals);
        ensure_identity!(basis.len() == 2, "plane of {t} has rank {}", basis.len());
        let pl = PlaneLattice::from_basis(basis[0], basis[1]);
        ensure_identity!(
            pl.coords(t.a).is_some() && pl.coords(t.b).is_some(),
            "plane lattice of {t} misses a vertex"
        );
        Ok(pl)
    }

    pub fn det(&self) -> i64 {
        self.gram[0][0] * self.gram[1][1] - self.gram[0][1] * self.gram[1][0]
    }

    /// Exact coordinates of `p` in the basis, `None` if `p` leaves the plane.
    pub fn rational_coords(&self, p: Vec4) -> Option<(Rational, Rational)> {
        let det = self.det();
        let (r1, r2) = (p.dot(self.b1), p.dot(self.b2));
        let x = Rational::new(r1 * self.gram[1][1] - r2 * self.gram[0][1], det);
        let y = Rational::new(r2 * self.gram[0][0] - r1 * self.gram[1][0], det);
        // Projection onto the plane; only accept exact membership.
        let back = |x: Rational, y: Rational, i: usize| x * self.b1.0[i] + y * self.b2.0[i];
        (0..4).all(|i| back(x, y, i) == Rational::from_integer(p.0[i])).then_some((x, y))
    }

    /// Integer coordinates of a lattice point.
    pub fn coords(&self, p: Vec4) -> Option<(i64, i64)> {
        let (x, y) = self.rational_coords(p)?;
        (x.is_integer() && y.is_integer()).then(|| (x.to_integer(), y.to_integer()))
    }

    pub fn point(&self, x: i64, y: i64) -> Vec4 {
        x * self.b1 + y * self.b2
    }

    /// Same set of points: each basis expresses the other with a unimodular matrix.
    pub fn same_lattice(&self, other: &PlaneLattice) -> bool {
        match (self.coords(other.b1), self.coords(other.b2)) {
            (Some((a, b)), Some((c, d))) => (a * d - b * c).abs() == 1,
            _ => false,
        }
    }
}

/// Integer kernel of the plane system, Gauss-reduced.
pub fn plane_lattice_basis(ps: &PlaneSystem) -> Result<PlaneLattice> {
    lattice_of_rows(&ps.rows)
}

/// Integer kernel of two rows in `Z^4`.
pub fn lattice_of_rows(rows: &[Vec4; 2]) -> Result<PlaneLattice> {
    let basis = integer_kernel(rows);
    if basis.len() != 2 {
        return Err(Error::domain(format!("rows {} and {} have rank {}", rows[0], rows[1], 4 - basis.len())));
    }
    Ok(PlaneLattice::from_basis(basis[0], basis[1]))
}

/// Squared area of the fundamental parallelogram.
pub fn fundamental_area_squared(pl: &PlaneLattice) -> i64 {
    pl.det()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_k11() {
        let reps = RepresentationPair::new([1, 1, -19], [5, 7, -17], 11).unwrap();
        let ps = plane_from_reps(&reps).unwrap();
        assert_eq!(ps.delta.values(), [2, 3, -3, 4, -18, 1]);
        assert_eq!(ps.rows, [Vec4::new(0, 3, 4, 1), Vec4::new(1, -3, 2, 0)]);
        let pl = plane_lattice_basis(&ps).unwrap();
        assert_eq!(fundamental_area_squared(&pl), 363);
        assert!(ps.contains(Vec4::new(8, 4, 2, -20)));
        assert!(ps.contains(Vec4::new(21, 5, -3, -3)));
    }

    #[test]
    fn worked_example_k15() {
        // With positive third entries c' < c, so D23 would be negative.
        assert!(RepresentationPair::new([1, 7, 25], [3, 15, 21], 15).is_err());
        let raw = RepresentationPair { rep1: [1, 7, 25], rep2: [3, 15, 21], k: 15 };
        assert!(matches!(plane_from_reps(&raw), Err(Error::Domain(_))));
        let reps = RepresentationPair::new([1, 7, -25], [3, 15, -21], 15).unwrap();
        let ps = plane_from_reps(&reps).unwrap();
        assert_eq!(ps.delta.values(), [1, 2, -4, 11, -23, 2]);
        assert_eq!(ps.rows, [Vec4::new(0, 2, 11, 2), Vec4::new(2, -4, 1, 0)]);
        let pl = plane_lattice_basis(&ps).unwrap();
        assert_eq!(fundamental_area_squared(&pl), 675);
        let paper = lattice_of_rows(&ps.rows).unwrap();
        let given = PlaneLattice::from_basis(Vec4::new(2, 1, 0, -1), Vec4::new(-1, 0, 2, -11));
        assert!(pl.same_lattice(&given) && paper.same_lattice(&given));
    }

    #[test]
    fn axis_plane() {
        let pl = lattice_of_rows(&[Vec4::new(1, 0, 0, 0), Vec4::new(0, 1, 0, 0)]).unwrap();
        assert_eq!(fundamental_area_squared(&pl), 1);
        let mut basis = [pl.b1.map(i64::abs), pl.b2.map(i64::abs)];
        basis.sort();
        assert_eq!(basis, [Vec4::new(0, 0, 0, 1), Vec4::new(0, 0, 1, 0)]);
        assert!(lattice_of_rows(&[Vec4::new(1, 0, 0, 0), Vec4::new(2, 0, 0, 0)]).is_err());
    }

    #[test]
    fn representation_pair_validation() {
        assert!(RepresentationPair::new([1, 1, -1], [1, 1, 1], 1).is_ok());
        assert!(RepresentationPair::new([1, 1, 1], [1, 1, 1], 1).is_err());
        assert!(RepresentationPair::new([1, 1, -19], [5, 7, -17], 12).is_err());
        assert!(RepresentationPair::new([3, 3, -3], [3, 3, 3], 3).is_err());
    }

    #[test]
    fn same_lattice_check() {
        let pl = lattice_of_rows(&[Vec4::new(0, 3, 4, 1), Vec4::new(1, -3, 2, 0)]).unwrap();
        let other = PlaneLattice::from_basis(pl.b1, pl.b1 + pl.b2);
        assert!(pl.same_lattice(&other));
        let sub = PlaneLattice::from_basis(pl.b1, 2 * pl.b2);
        assert!(!pl.same_lattice(&sub));
    }
}
