use std::collections::{BTreeMap, BTreeSet};

use crate::arith::isqrt;
use crate::characterize::{deltas_from_triangle, simplify_deltas, PlaneLattice};
use crate::error::{Error, Result};
use crate::lattice::{Triangle, Vec4};

/// Minimal triangles with squared side `2L`, and the distinct `k` of their
/// minor systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub l: i64,
    pub count: usize,
    pub triangles: Vec<Triangle>,
    pub kvalues: Vec<i64>,
}

/// No equilateral lattice triangle with a smaller side lies in the plane of `t`.
///
/// Every plane-lattice vector with squared norm below `D` is listed from the
/// reduced basis; a smaller triangle exists iff two of them with equal norm
/// `n` have inner product `n/2`.
pub fn is_minimal(t: &Triangle) -> Result<bool> {
    let pl = PlaneLattice::of_triangle(t)?;
    let det = pl.det();
    let [[g11, g12], [_, g22]] = pl.gram;
    // Q(x, y) < D bounds |x| by sqrt(D g22 / det) and |y| by sqrt(D g11 / det).
    let xmax = isqrt(t.d * g22 / det) + 1;
    let ymax = isqrt(t.d * g11 / det) + 1;
    let mut by_norm: BTreeMap<i64, Vec<Vec4>> = BTreeMap::new();
    for x in -xmax..=xmax {
        for y in -ymax..=ymax {
            let n = g11 * x * x + 2 * g12 * x * y + g22 * y * y;
            if n > 0 && n < t.d && n % 2 == 0 {
                by_norm.entry(n).or_default().push(pl.point(x, y));
            }
        }
    }
    for (n, pts) in &by_norm {
        for (i, p) in pts.iter().enumerate() {
            if pts[i + 1..].iter().any(|q| 2 * p.dot(*q) == *n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Census entry for one side `L`.
pub fn census_row(l: i64) -> Result<CensusRow> {
    let mut triangles = Vec::new();
    let mut ks = BTreeSet::new();
    for t in super::enumerate_triangles(l)? {
        if t.is_irreducible() && is_minimal(&t)? {
            ks.insert(simplify_deltas(&deltas_from_triangle(&t)?)?.k);
            triangles.push(t);
        }
    }
    Ok(CensusRow { l, count: triangles.len(), triangles, kvalues: ks.into_iter().collect() })
}

/// Census rows for `L = 1..=l_max`.
pub fn census(l_max: i64) -> Result<Vec<CensusRow>> {
    if l_max <= 0 {
        return Err(Error::domain(format!("L_max must be positive, got {l_max}")));
    }
    (1..=l_max).map(census_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SymmetryOp;

    fn tri(a: [i64; 4], b: [i64; 4]) -> Triangle {
        Triangle::new(Vec4(a), Vec4(b)).unwrap()
    }

    fn generate(t: &Triangle, m: i64, n: i64) -> Triangle {
        Triangle::new(m * t.a - n * t.b, n * t.a + (m - n) * t.b).unwrap()
    }

    #[test]
    fn minimality_examples() {
        let unit = tri([0, 0, 1, 1], [0, 1, 1, 0]);
        assert!(is_minimal(&unit).unwrap());
        assert!(!is_minimal(&generate(&unit, 2, 1)).unwrap());
        assert!(is_minimal(&tri([0, 1, 1, 2], [1, 1, 2, 0])).unwrap());
        assert!(!is_minimal(&tri([0, 0, 2, 2], [0, 2, 2, 0])).unwrap());
        let op = SymmetryOp::all()[200];
        assert!(!is_minimal(&generate(&unit, 3, 1).map(&op)).unwrap());
    }

    #[test]
    fn first_rows() {
        let rows = census(9).unwrap();
        let counts: Vec<usize> = rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![1, 1, 1, 0, 1, 1, 1, 0, 4]);
        assert_eq!(rows[8].kvalues, vec![3, 9]);
        assert!(census(0).is_err());
    }
}
