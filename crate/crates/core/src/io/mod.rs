//! Text formats: graph exports, base-graph and bundle files, presets.

mod export;
mod input;

pub use export::{export, from_graph6, from_edge_list, to_graph6, Format};
pub use input::{base_preset, bundle_preset, parse_base_graph, parse_bundle};
