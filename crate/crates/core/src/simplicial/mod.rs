//! Finite simplicial complexes, pairs and maps, with the formal (co)homology
//! theory on top: oriented relative chain complexes, homology with
//! coefficients, induced maps, contiguity, and connecting homomorphisms.

pub mod chains;
pub mod complex;
pub mod homology;
pub mod map;

pub use chains::{chain_map_matrix, connecting_matrix, PairChains};
pub use complex::{SimplicialComplex, SimplicialPair};
pub use homology::{
    cohomology, cohomology_subquotient, cohomology_value, homology, homology_subquotient,
    homology_value, induced_hom, induced_hom_on, integral_homology, pair_connecting,
    pair_connecting_on,
};
pub use map::{contiguous, SimplicialMap};
