//! Metric-tree models of the associahedra K_n and multiplihedra J_n, their
//! grafting operads and level-trees, cellular models with homology checks,
//! and exact arithmetic deciding A_n-triviality of P-localized SU(2) gauge
//! groups over S^4.

mod combinat;
pub mod complex;
pub mod error;
pub mod gauge;
pub mod operad;
pub mod par;
pub mod rational;
pub mod tree;

pub use error::{Error, Result};
pub use par::Exec;
pub use rational::Rational;
pub use tree::{Node, Paint, Tree, VertexKind};
