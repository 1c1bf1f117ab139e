//! Graphs over opaque labels: intersection graphs, connectivity, spanning
//! trees, Prüfer decoding and antisymmetric edge-weight systems.

mod connectivity;
mod graph;
pub mod prufer;
mod weights;

pub use connectivity::{find_disconnection, intersection_graph, spanning_tree, Disconnection};
pub use graph::Graph;
pub use prufer::prufer_decode;
pub use weights::{solve_weight_system, weight_system_feasible, EdgeWeights, WeightedTree};
