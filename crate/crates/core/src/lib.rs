//! Combinatorial pipeline for hyperbolic 4-manifolds built from copies of a
//! rectified 5-cell block.
//!
//! A [`Triangulation`](triangulation::Triangulation) of 4-simplices with
//! facet pairings encodes a cusped hyperbolic 4-manifold; everything here is
//! computed from that combinatorial data. The main entry points:
//!
//! - [`groups`]: finite groups and Cayley graphs;
//! - [`graphs`]: labelled digraphs, automorphism search, the glueing graphs,
//!   Cayley blow-ups and cubic graph enumeration;
//! - [`triangulation`]: triangulations, orientability, automorphisms and the
//!   builders that realise a prescribed automorphism group;
//! - [`cusps`]: face cycles, return maps and cusp monodromy;
//! - [`volumes`]: exact volumes via the orbifold Euler characteristic;
//! - [`lattice`]: exact short-vector certificates for cusp lattices;
//! - [`census`]: many non-isomorphic triangulations with the same group.

pub mod census;
pub mod cusps;
pub mod graphs;
pub mod groups;
pub mod lattice;
pub mod perm;
pub mod triangulation;
pub mod volumes;

pub use graphs::LabeledDigraph;
pub use groups::FiniteGroup;
pub use perm::Perm5;
pub use triangulation::Triangulation;
pub use volumes::ExactVolume;
