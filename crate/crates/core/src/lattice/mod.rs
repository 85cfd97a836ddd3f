//! Points, triangles and tetrahedra in `Z^4`, the signed-permutation
//! symmetry group, and the explicit constructions of triangles and
//! tetrahedra.

mod families;
mod symmetry;
mod triangle;
mod vec4;
mod zeta;

pub use families::{
    complete_point, four_param_tetrahedron, four_param_triangle, solution_tetrahedron, solution_triangle,
};
pub use symmetry::SymmetryOp;
pub use triangle::{admissible_d, canonical_form, generate_mn, is_equilateral, Tetrahedron, Triangle};
pub use vec4::Vec4;
pub use zeta::{zeta_frame, ZetaFrame};
