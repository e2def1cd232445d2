//! The top-cell pipeline: canonical graph construction, limit-graph
//! reduction, the cyclic-polygon solver, and the maps phi and psi.

pub mod graph;
pub mod hyper;
pub mod reduce;
pub mod polygon;

pub use graph::{construct_top_cell_graph, realize_bridge_graph, BlackEndpoints, TopCellGraph};
pub use hyper::{grouped_partition, phi, preimage_of, psi, validate_hypersimplex, Seed};
pub use polygon::{cross_ratio_identities, solve_inscribed_polygon, InscribedPolygon};
pub use reduce::{block_face_budget, classify_black_vertices, reduce_limit_graph};
