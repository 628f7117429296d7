//! Face lattices of polytopes and pseudomanifolds, built as explicit graded
//! lattices, with exact checks of f-vector lower bounds.
//!
//! - [`lattice`]: bounded graded lattices, meets and joins, intervals,
//!   pyramids, duals and structural predicates.
//! - [`constructions`]: simplices, joins of simplex boundaries and their
//!   pyramids, prisms, stacking, and the expression syntax in [`PolytopeSpec`].
//! - [`topology`]: order complexes, links, pseudomanifold and normality checks,
//!   GF(2) homology.
//! - [`bounds`]: closed-form face numbers and the verifiers built on them.

pub mod bounds;
pub mod checks;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod fvector;
pub mod io;
pub mod lattice;
pub mod limits;
pub mod report;
pub mod topology;

pub use checks::{run_check, CheckKind};
pub use complex::{SimplicialComplex, Vertex};
pub use constructions::PolytopeSpec;
pub use error::{Error, Result};
pub use fvector::FVector;
pub use lattice::{ElementId, GradedLattice, RankedElement};
pub use report::{CheckReport, Witness};
