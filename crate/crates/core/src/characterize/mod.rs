//! Minor systems of triangles, the planes they span, reconstruction of
//! triangles from two representations of `3k^2`, and Ehrhart polynomials.

mod construct;
mod delta;
mod ehrhart;
pub mod kernel;
mod plane;

pub use construct::{build_qf, construct_triangle, minimal_ell, Construction, QfData};
pub use delta::{
    alphas_betas, deltas_from_triangle, gram_identity_check, normalize_deltas, orthogonal_vectors,
    simplify_deltas, DeltaSystem,
};
pub use ehrhart::{ehrhart, interior_count, lattice_point_count, EhrhartPoly};
pub use plane::{
    fundamental_area_squared, lattice_of_rows, plane_from_reps, plane_lattice_basis, PlaneLattice,
    PlaneSystem, RepresentationPair,
};

use crate::error::Result;
use crate::lattice::Triangle;

/// Simplified minor system of `t` after moving it to a symmetry image with
/// `D23 > 0`, together with that image.
pub fn normalized_system(t: &Triangle) -> Result<(Triangle, DeltaSystem)> {
    let (mut img, _) = normalize_deltas(t)?;
    let mut ds = simplify_deltas(&deltas_from_triangle(&img)?)?;
    if ds.d23 < 0 {
        img = Triangle { a: img.b, b: img.a, d: img.d };
        ds = simplify_deltas(&deltas_from_triangle(&img)?)?;
    }
    Ok((img, ds))
}
