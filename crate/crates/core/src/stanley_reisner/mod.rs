//! Clique complexes, reduced homology and Betti numbers of `S / I(G^c)`.
//!
//! The quotient ring is never built. Its graded Betti numbers come from
//! Hochster's formula over induced subcomplexes of the clique complex.

mod betti;
mod complex;
mod homology;

pub use betti::{
    betti_table_hochster, check_projdim_kappa_identity, has_linear_resolution, kappa_from_betti, kappa_via_betti,
    linear_strand_chordal, proj_dim, proj_dim_from_strand, BettiTable, ProjdimIdentity, MAX_BETTI_N,
};
pub use complex::{clique_complex, SimplicialComplex};
pub use homology::{reduced_homology_ranks, Field, HomologyRanks};

use crate::graph::Graph;

/// Reduced homology of the clique complex of `g` restricted to `within`.
pub fn induced_homology(g: &Graph, within: crate::graph::VertexSet, field: Field) -> HomologyRanks {
    homology::homology_from_faces(&complex::flag_faces(g, within.mask() & g.vertex_mask()), field)
}
