//! Exact graph toughness, Laplacian spectral bounds, and cut-by-cut
//! numerical certification of `t(G) >= mu2 / (mu_n - delta)` for connected
//! non-complete graphs.
//!
//! Toughness values are exact rationals; everything spectral is `f64` with
//! the named tolerances exported by [`certify`] and [`spectral`].

pub mod atlas;
pub mod certify;
pub mod cli;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod toughness;

pub use error::{Error, Result};
pub use graph::{complete_multipartite, Graph, PartitionSpec, VertexSet};
pub use toughness::{exact_toughness, Toughness, ToughnessCertificate};
