//! Cohomology of the boundary line bundles `O(D_i)`, one degree at a time.
//!
//! Two independent routes are provided: the component count of the degree
//! graph, and an explicit Čech complex for the cover by maximal cones.

mod cech;
mod graph;

pub use cech::{
    cech_h_dim, cech_h_dim_with_limit, h1_class_rank, is_coboundary, BundleCochain, CechCell,
    CechSlice, CoboundaryCertificate, Coefficients, DEFAULT_DIM_LIMIT,
};
pub use graph::{gamma_graph, h1_dim_graph, h1_dim_graph_with, DegreeGraph, GraphFlavor};
