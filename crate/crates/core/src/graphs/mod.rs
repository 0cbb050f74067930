//! Marked metric graphs: construction, validation, immersed loops, systole,
//! the right action of automorphisms, and the pinch and rose families.

mod families;
mod graph;
mod io;
mod loops;
mod ops;

pub use families::{
    barbell, one_petal_family, rose, subdivided_rose, theta, theta_plus_loop, two_petal_family, uniform_rose,
};
pub use graph::{
    path_length, tighten_cyclic, tighten_path, DirEdge, Edge, GraphParts, MarkedMetricGraph, Violation,
    ViolationKind,
};
pub use io::{graph_from_json, graph_to_json, load_graph, save_graph, EdgeRecord, GraphFile};
pub use loops::{embedded_cycles, immerse, is_thick, loop_length, systole, systole_loop, GraphLoop};
pub use ops::{act, act_with_inverse, pinch_distance_bound, pinch_loop, rescale_loop, substitute};

#[cfg(test)]
mod tests;
