//! Lattice vectors, smooth complete fans and their classification.

mod classify;
mod fan;
mod lattice;
mod surface;

pub use classify::{detect_a1_cylinder, fano_status, CylinderWitness, FanoStatus};
pub use fan::{validate_fan, Cone, Fan, ValidationReport, Violation, ViolationKind};
pub use lattice::{
    adapted_basis, det2, ext_gcd, gcd_all, integer_inverse, pair, LatticeVector, Unimodular,
    Weight,
};
pub use surface::{
    angle_cmp, canonical_cycle, iso_class, order_surface, self_intersection_cycle,
    surface_from_rays, IsoClass, SurfaceFan,
};
