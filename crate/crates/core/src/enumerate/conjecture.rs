use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{enumerate_triangles, norm_vectors};
use crate::arith::{ceil_sqrt, gcd_all};
use crate::diophantine::{primitive_solutions_3d2, seed_generate, QuadrupleSeed};
use crate::error::{Error, Result};
use crate::lattice::{Triangle, Vec4};

/// Outcome of the tetrahedron-completion search over a range of sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub tested: usize,
    pub witnesses: usize,
    pub counterexamples: Vec<Triangle>,
}

/// Every `C` with `|C|^2 = D` and `<C,A> = <C,B> = D/2`, sorted.
pub fn tetrahedron_witnesses(t: &Triangle) -> Vec<Vec4> {
    norm_vectors(t.d).into_iter().filter(|c| 2 * c.dot(t.a) == t.d && 2 * c.dot(t.b) == t.d).collect()
}

/// Looks for a fourth vertex for every triangle orbit with `L <= l_max`.
pub fn conjecture_tetrahedron(l_max: i64) -> Result<ConjectureReport> {
    if l_max <= 0 {
        return Err(Error::domain(format!("L_max must be positive, got {l_max}")));
    }
    let mut report = ConjectureReport::default();
    for l in 1..=l_max {
        let sphere = norm_vectors(2 * l);
        for t in enumerate_triangles(l)? {
            report.tested += 1;
            if sphere.iter().any(|c| c.dot(t.a) == l && c.dot(t.b) == l) {
                report.witnesses += 1;
            } else {
                report.counterexamples.push(t);
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageRow {
    pub d: i64,
    pub covered: usize,
    pub total: usize,
    pub missing: Vec<[i64; 3]>,
}

/// How much of each primitive-solution table the four-square generator reaches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    /// Seeds range over `|x|, |y|, |z|, |t| <= ceil(sqrt(d)) + margin`.
    pub margin: i64,
    pub rows: Vec<CoverageRow>,
}

impl CoverageReport {
    pub fn complete(&self) -> bool {
        self.rows.iter().all(|r| r.covered == r.total)
    }

    pub fn covered(&self) -> usize {
        self.rows.iter().map(|r| r.covered).sum()
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.total).sum()
    }
}

/// For each odd `d <= d_max`, the primitive solutions reached by the
/// generator from some seed in the grid, after reduction to primitive
/// ordered form.
pub fn seed_coverage(d_max: i64, margin: i64) -> Result<CoverageReport> {
    if d_max <= 0 || margin < 0 {
        return Err(Error::domain(format!("need d_max >= 1 and margin >= 0, got {d_max}, {margin}")));
    }
    let ds: Vec<i64> = (1..=d_max).step_by(2).collect();
    let rows = ds
        .par_iter()
        .map(|&d| -> Result<CoverageRow> {
            let bound = ceil_sqrt(d) + margin;
            let mut reached = BTreeSet::new();
            for x in -bound..=bound {
                for y in -bound..=bound {
                    for z in -bound..=bound {
                        for t in -bound..=bound {
                            let s = seed_generate(QuadrupleSeed { x, y, z, t })?;
                            let g = gcd_all(&s.abc());
                            if g != 0 && s.d % g == 0 && s.d / g == d {
                                if let Some(p) = s.to_primitive() {
                                    reached.insert(p.abc());
                                }
                            }
                        }
                    }
                }
            }
            let table = primitive_solutions_3d2(d)?;
            let missing: Vec<[i64; 3]> =
                table.iter().map(|s| s.abc()).filter(|abc| !reached.contains(abc)).collect();
            Ok(CoverageRow { d, covered: table.len() - missing.len(), total: table.len(), missing })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverageReport { margin, rows })
}
