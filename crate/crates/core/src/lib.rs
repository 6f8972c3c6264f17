//! Cohen–Macaulay tests for independence complexes of simple graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`graphs`] builds triangular graphs `T_n`, complete graphs and complements,
//!   and enumerates independent sets and vertex covers.
//! * [`complexes`] turns graphs into independence/clique complexes and computes
//!   f-vectors, h-vectors and links.
//! * [`homology`] computes reduced simplicial homology over `Q` and `F_p`.
//! * [`cmcheck`] decides Cohen–Macaulayness (h-vector screen, Reisner's
//!   criterion, and the parity-reduced ladder for `T_n`).
//! * [`ideals`] builds edge ideals and homogeneous systems of parameters and
//!   verifies regular sequences degree by degree through Hilbert functions.
//! * [`cli`] is the command-line front end used by the `tricm` binary.

pub mod bitset;
pub mod cli;
pub mod cmcheck;
pub mod combinat;
pub mod complexes;
mod error;
pub mod graphs;
pub mod homology;
pub mod ideals;

pub use error::{Error, Result};

pub use cmcheck::{
    classify_triangular, classify_triangular_with, h_screen, krull_dimension, reisner_check, reisner_triangular,
    CmMethod, CmStatus, CmVerdict, HScreen, KrullDimension, Witness,
};
pub use complexes::{
    clique_complex, f_vector, h_vector, independence_complex, is_connected, link,
    link_triangular_witness, triangular_complex, triangular_f_closed, FVector, HVector,
    SimplicialComplex,
};
pub use graphs::{
    complement, complete, independence_number, independent_sets, is_unmixed,
    maximal_independent_sets, minimal_vertex_covers, triangular, triangular_recursive, Graph,
    VertexPairLabel,
};
pub use homology::{boundary_matrix, rank, reduced_betti_table, BettiTable, FieldSpec, SparseMatrix};
pub use ideals::{
    edge_ideal, expected_artinian_hilbert, hilbert_function, hsop, telescoping_check,
    verify_regular, EdgeIdeal, HsopKind, HsopSequence, RegularityStatus, RegularityVerdict,
};
