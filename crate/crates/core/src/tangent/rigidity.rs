use std::fmt;

use super::t1::{default_box_radius, t1_total, T1Report};
use crate::error::Result;
use crate::lattice_fan::{detect_a1_cylinder, fano_status, CylinderWitness, Fan, FanoStatus, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Rigid,
    NonRigid,
    InconclusiveRigidInBox,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Rigid => "RIGID",
            Verdict::NonRigid => "NON_RIGID",
            Verdict::InconclusiveRigidInBox => "INCONCLUSIVE_RIGID_IN_BOX",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Surface: the exact support has total dimension `total`.
    ExactSupport { total: usize },
    /// Weakly Fano (or Fano) with no midpoint configuration.
    NefWithoutCylinder,
    /// A degree with `T¹(u) ≠ 0`.
    Witness { degree: Weight, dim: usize },
    /// Nothing found in `[-radius, radius]^n`.
    EmptyBox { radius: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub verdict: Verdict,
    pub fano_status: FanoStatus,
    pub cylinders: Vec<CylinderWitness>,
    pub evidence: Evidence,
    pub t1: Option<T1Report>,
}

/// Rigidity decision. Surfaces are decided exactly. In higher dimension a nef
/// anticanonical class without midpoint configurations proves rigidity;
/// otherwise a box search either finds a witness or is inconclusive. Without
/// an explicit radius the default from [`default_box_radius`] is used.
pub fn is_rigid(fan: &Fan, radius: Option<i64>) -> Result<RigidityReport> {
    let status = fano_status(fan);
    let cylinders = detect_a1_cylinder(fan);
    if fan.dim() == 2 {
        let t1 = t1_total(fan, None)?;
        let (verdict, evidence) = match t1.entries.first() {
            None => (Verdict::Rigid, Evidence::ExactSupport { total: 0 }),
            Some(d) => (
                Verdict::NonRigid,
                Evidence::Witness {
                    degree: d.u.clone(),
                    dim: d.dim,
                },
            ),
        };
        return Ok(RigidityReport {
            verdict,
            fano_status: status,
            cylinders,
            evidence,
            t1: Some(t1),
        });
    }
    if status.is_nef() && cylinders.is_empty() {
        let t1 = radius.map(|r| t1_total(fan, Some(r))).transpose()?;
        return Ok(RigidityReport {
            verdict: Verdict::Rigid,
            fano_status: status,
            cylinders,
            evidence: Evidence::NefWithoutCylinder,
            t1,
        });
    }
    let r = radius.unwrap_or_else(|| default_box_radius(fan));
    let t1 = t1_total(fan, Some(r))?;
    let (verdict, evidence) = match t1.entries.first() {
        None => (Verdict::InconclusiveRigidInBox, Evidence::EmptyBox { radius: r }),
        Some(d) => (
            Verdict::NonRigid,
            Evidence::Witness {
                degree: d.u.clone(),
                dim: d.dim,
            },
        ),
    };
    Ok(RigidityReport {
        verdict,
        fano_status: status,
        cylinders,
        evidence,
        t1: Some(t1),
    })
}
