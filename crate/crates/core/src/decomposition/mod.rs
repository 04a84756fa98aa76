//! Connectivity structure: blocks, vertex connectivity, augmented components,
//! triconnected components, wheels, splits and wheel-growth certificates.

mod connectivity;
mod triconnected;
mod wheels;

pub use connectivity::{
    block_vertex_sets, blocks, bridges, cut_vertices, has_bridge, is_biconnected, is_triconnected,
    vertex_connectivity,
};
pub use triconnected::{
    augmented_components, minimum_small_separators, triconnected_components,
    triconnected_components_with, DecompositionError, SeparatorChoice, SeparatorSet, TraceChild,
    TraceNode, TraceSplit, TriconnectedDecomposition,
};
pub use wheels::{is_wheel, split, wheel_certificate, CertificateStep, WheelCertificate};
