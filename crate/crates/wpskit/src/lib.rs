//! Exact-arithmetic toolkit for weighted projective spaces: fans and
//! polarized polytopes from weights vectors, recognition of weights,
//! fans and polarizations from raw toric data, equivalence with explicit
//! switching transforms, lattice-point enumeration on simplices, and
//! cohomology dimensions of line bundles and twisted sheaves of forms.
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`); no floating
//! point is used anywhere.

pub mod cohomology;
pub mod equivalence;
pub mod error;
pub mod exact_linalg;
pub mod fan;
pub mod json;
pub mod lattice;
pub mod polytope;
pub mod weights;

pub use cohomology::{
    h_line_bundle, h_omega, weighted_monomial_count, CohomologyAnswer, IndeterminateReason,
};
pub use equivalence::{
    are_equivalent_fans, are_equivalent_polytopes, fan_switch_matrices, polytope_switch_data,
    FanSwitchData, PolytopeSwitchData,
};
pub use error::{Error, Result};
pub use exact_linalg::{apply_column_permutation, perm_match, perm_matrix, IntMatrix, Permutation};
pub use fan::{canonical_fan, fan_from_weights, Fan};
pub use lattice::{
    bounding_box, box_cell_count, contains, contains_strictly, count_lattice_points,
    enumerate_interior_points,
    enumerate_lattice_points, face_dimension, reduce_vertices, reduced_polytope, FacePosition,
    HalfSpaceSystem,
};
pub use polytope::{
    is_admissible_matrix, is_admissible_polytope, polytope_from_fan, polytope_from_weights,
    polytope_fan, polytope_polarization, polytope_weights, qpol_mat, recognize_polytope,
    weighted_transverse, wpp_decompose, SimplexPolytope, WppDecomposition,
};
pub use weights::WeightsVector;
