//! Matroids, matroidal ideals, and the ideals spanned by the multigraded
//! shifts of their minimal free resolutions.
//!
//! The crate computes, for a squarefree monomial ideal with linear
//! quotients, the shift ideals `J_0, ..., J_p` (one per homological degree
//! of the minimal multigraded resolution), adjacency ideals, and exact
//! multigraded Betti tables, and machine-checks that for matroidal input
//! every shift ideal is again matroidal and coincides with the iterated
//! adjacency ideal. An independent simplicial-homology Betti oracle over
//! exact integer arithmetic cross-validates the tables.

pub mod betti_oracle;
pub mod corpus;
pub mod ideal;
pub mod linear_quotients;
pub mod matroid;
pub mod monomial;

pub use ideal::MonomialIdeal;
pub use linear_quotients::{BettiTable, LinearQuotientsOrder, TheoremReport};
pub use matroid::Matroid;
pub use monomial::{Distance, GroundSet, SquarefreeMonomial};
