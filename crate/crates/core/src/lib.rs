pub mod dataset;
pub mod distinguisher;
pub mod extensions;
pub mod generators;
pub mod graph;
pub mod rpc;
pub mod wl;

pub use graph::{Graph, GraphError, Permutation};
