pub mod catalog;
pub mod cli_reports;
pub mod deformation;
pub mod cohomology;
pub mod error;
pub mod lattice_fan;
pub mod linalg;
pub mod tangent;
