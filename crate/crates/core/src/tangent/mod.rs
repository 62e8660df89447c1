//! Graded first-order deformations `T¹`, their support, and rigidity.

mod rigidity;
mod t1;

pub use rigidity::{is_rigid, Evidence, RigidityReport, Verdict};
pub use t1::{
    box_recheck, default_box_radius, surface_line_candidates, surface_support_widened,
    t1_dim_degree, t1_dim_degree_with, t1_report_for_degree, t1_support, t1_total, t1_total_with,
    t2_surface_check, SupportMode, SupportRegion, T1Degree, T1Method, T1Report,
};
