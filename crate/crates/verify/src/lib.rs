//! Independent oracles, bundled fixtures and the acceptance suite.
//!
//! The oracles deliberately avoid the code paths they check: component counts
//! come from petgraph, cover classes from orbit enumeration over all
//! labelings, planarity from exhaustive rotation search.

pub mod acceptance;
pub mod fixtures;
pub mod oracles;
