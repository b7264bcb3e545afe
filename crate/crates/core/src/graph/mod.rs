//! Graphs with ordered odd edges, their canonical forms and the graph
//! complexes `ICG(1)` and `GC2`.

mod canon;
mod core;
mod ops;
mod shapes;
mod sum;
mod text;

pub use self::canon::{canonicalize, Canonical};
pub use self::core::{Graph, VertexKind};
pub use self::ops::{
    all_at_least, bowtie, bowtie_difference, filtration_part, gc2_bracket, gc2_bracket_truncated,
    gc2_differential, icg_differential, insert_with, l1_norm, loop_part, mark_one_external,
    min_filtration, pre_lie, pre_lie_graph, vertex_splittings, wheel, wheel_graph,
};
pub use self::shapes::{
    coefficient_of, figure_eight, figure_eight_graph, is_dumbbell, split_theta_part, theta_generator_graph,
    theta_graph, theta_graph_decode, theta_graph_encode, theta_hair_triples, theta_shape,
    theta_sum_encode,
};
pub use self::sum::{GraphClass, GraphSum};
pub use self::text::{read_graph, read_sum, write_graph, write_sum};
