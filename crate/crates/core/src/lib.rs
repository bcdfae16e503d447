//! Exact combinatorial algorithms for low-dimensional topology.
//!
//! The crate works with finite combinatorial objects only: graphs with loops
//! and multi-edges, 2-schemes (graphs with distinguished closed walks as
//! faces), simplicial complexes, rotation systems, and polygonal drawings with
//! rational coordinates. Every answer is exact: linear algebra runs over GF(2)
//! or over arbitrary-precision integers, and geometric predicates use big
//! rationals.
//!
//! Modules:
//!
//! * [`graph`], [`scheme`], [`complex`]: data model and boundary operators.
//! * [`homology`]: Betti numbers and torsion over Z/2, Z and Q.
//! * [`surfaces`]: surface recognition, orientability, classification and the
//!   mod-2 intersection form.
//! * [`ribbon`]: rotation systems, face tracing, genus (exhaustive and via
//!   interlacement ranks) and thickening counts.
//! * [`vankampen`]: the van Kampen obstruction to planarity and to
//!   approximating a plane path by embeddings.
//! * [`covers`]: double covers of graphs and surfaces.
//! * [`links`]: linking numbers of polygonal curves in space.
//! * [`format`]: the line-oriented text formats.

pub mod complex;
pub mod covers;
pub mod error;
pub mod format;
pub mod geometry;
pub mod gf2;
pub mod graph;
pub mod homology;
pub mod links;
pub mod ribbon;
pub mod scheme;
pub mod snf;
pub mod surfaces;
pub mod vankampen;

pub use complex::{ChainComplex, Ring, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Dart, Graph};
pub use scheme::{Scheme2, Step};
