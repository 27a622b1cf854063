//! Discrete polymatroids attached to bounded powers of edge ideals.
//!
//! Given a simple graph `G` on `[n]` and vertex bounds `c`, the top bounded
//! power of the edge ideal is generated by the degree vectors of maximum
//! capacitated b-matchings. Their divisors form a discrete polymatroid whose
//! convex hull is an integral polymatroid. This crate builds that polytope,
//! counts lattice points in its dilations, and decides the level* and
//! pseudo-Gorenstein* properties, alongside the closed-form criteria known for
//! complete bipartite graphs, Veronese-type polytopes and trees.

pub mod criteria;
pub mod error;
pub mod facets;
pub mod graph;
pub mod lattice;
pub mod levelness;
pub mod oracle;
pub mod powers;
pub mod suite;

pub use error::{Error, Limits, Result};
pub use facets::{
    facets, star_prism, veronese_polytope, Facet, HPolytope, RankOracle, VeroneseSpec,
};
pub use graph::{BoundVector, Family, Graph};
pub use lattice::{DeltaVector, Region};
pub use levelness::{LevelVerdict, LevelnessReport, Witness};
pub use powers::{delta_c, divisor_set, enumerate_bases, realize_degree_sequence, BasisSet};

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponents.
pub type ExponentVector = Vec<u32>;

/// Bitmask of a 1-based subset of `[n]` (bit `i - 1` for element `i`).
pub(crate) fn mask_of(subset: &[usize]) -> u32 {
    subset.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// 1-based elements of a bitmask, ascending.
pub(crate) fn subset_of(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b as usize + 1)
        .collect()
}
