//! Topological symmetry bounds for the Heawood family of graphs.
//!
//! The crate builds the family from K7 by triangle-to-star moves, computes
//! automorphism groups, applies exclusion rules to automorphisms and reports
//! which subgroups may still be realized by rigid motions of some embedding.

pub mod autom;
pub mod catalog;
pub mod dot;
pub mod engine;
pub mod canon;
pub mod fixedsub;
pub mod graph;
pub mod group;
pub mod grouptype;
pub mod io;
pub mod moves;
pub mod perm;
pub mod planarity;
pub mod report;

pub use autom::automorphism_group;
pub use canon::{are_isomorphic, canonical_form, isomorphism, CanonicalForm};
pub use fixedsub::{fixed_subgraph, FixedSubgraph, PointCount};
pub use graph::{GraphError, SimpleGraph, VertexMask, MAX_VERTICES};
pub use group::{GroupError, PermGroup, Subgroup};
pub use grouptype::{identify_group_type, GroupType};
pub use perm::{Perm, PermError};
pub use planarity::is_planar;
pub use catalog::build_reference_catalog;
pub use moves::{closure, nabla_y, y_nabla, FamilyCatalog, MoveError, MoveKind, MoveRecord};
pub use engine::{Analysis, Chirality, ChiralityCertificate, ElementStatus, PathTag, RuleId, RuleTrace, Verdict};
pub use report::{AnalysisReport, Comparison};
