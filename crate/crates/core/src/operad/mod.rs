//! Grafting operads on unpainted and painted metric trees.

mod graft;
mod level;
mod relations;

pub use graft::{graft, graft_jk, graft_k, graft_kj, GraftSpec};
pub use level::{is_level_tree, level_decomposition, LevelTester, LevelWitness};
pub use relations::{
    j_points, k_points, verify_graft_relations, Relation, RelationFailure, RelationReport,
};
