//! Exhaustive enumeration of triangles by side, one representative per
//! symmetry orbit, plus the census of minimal triangles and the harnesses
//! for the tetrahedron and seed-coverage conjectures.

mod census;
mod conjecture;

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith::{exact_sqrt, isqrt};
use crate::error::{Error, Result};
use crate::lattice::{canonical_form, Triangle, Vec4};

pub use census::{census, census_row, is_minimal, CensusRow};
pub use conjecture::{
    conjecture_tetrahedron, seed_coverage, tetrahedron_witnesses, ConjectureReport, CoverageReport,
    CoverageRow,
};

/// All `v` in `Z^4` with `|v|^2 = n`, sorted.
pub fn norm_vectors(n: i64) -> Vec<Vec4> {
    if n < 0 {
        return Vec::new();
    }
    let r = isqrt(n);
    let mut out = Vec::new();
    for a in -r..=r {
        let ra = n - a * a;
        for b in -r..=r {
            let rb = ra - b * b;
            if rb < 0 {
                continue;
            }
            for c in -r..=r {
                let rc = rb - c * c;
                if rc < 0 {
                    continue;
                }
                if let Some(d) = exact_sqrt(rc) {
                    out.push(Vec4::new(a, b, c, d));
                    if d != 0 {
                        out.push(Vec4::new(a, b, c, -d));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Canonical representatives of every orbit of triangles with squared
/// side `2L`, sorted. Work is split by the sorted-absolute form of `A`.
pub fn enumerate_triangles(l: i64) -> Result<Vec<Triangle>> {
    if l <= 0 {
        return Err(Error::domain(format!("L must be positive, got {l}")));
    }
    let d = 2 * l;
    let sphere = norm_vectors(d);
    let heads: BTreeSet<Vec4> = sphere
        .iter()
        .map(|v| {
            let mut x = v.0.map(i64::abs);
            x.sort_unstable();
            Vec4(x)
        })
        .collect();
    let heads: Vec<Vec4> = heads.into_iter().collect();
    let found: BTreeSet<Triangle> = heads
        .par_iter()
        .map(|&a| {
            sphere
                .iter()
                .filter(|b| a.dot(**b) == l)
                .map(|&b| canonical_form(&Triangle { a, b, d }))
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut x, y| {
            x.extend(y);
            x
        });
    Ok(found.into_iter().collect())
}

/// Canonical orbits of all triangles with squared side `2L`.
pub fn side_orbits(l: i64) -> Result<Vec<Triangle>> {
    enumerate_triangles(l)
}

pub fn count_side_orbits(l: i64) -> Result<usize> {
    Ok(enumerate_triangles(l)?.len())
}
