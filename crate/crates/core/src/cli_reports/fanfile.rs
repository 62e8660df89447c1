use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice_fan::{order_surface, surface_from_rays, validate_fan, Fan, LatticeVector};

/// On-disk fan description. Ray indices in `cones` are 0-based; for
/// two-dimensional fans `cones` may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cones: Option<Vec<Vec<usize>>>,
}

fn int_list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn nested<T: ToString>(rows: &[Vec<T>]) -> String {
    let parts: Vec<String> = rows.iter().map(|r| int_list(r)).collect();
    format!("[{}]", parts.join(", "))
}

impl FanFile {
    pub fn parse(text: &str) -> serde_json::Result<FanFile> {
        serde_json::from_str(text)
    }

    /// Canonical text: fixed key order, one key per line, inner arrays inline.
    pub fn to_canonical_string(&self) -> String {
        let mut lines = Vec::new();
        if let Some(name) = &self.name {
            lines.push(format!(
                "  \"name\": {}",
                serde_json::to_string(name).expect("strings serialize")
            ));
        }
        lines.push(format!("  \"dim\": {}", self.dim));
        lines.push(format!("  \"rays\": {}", nested(&self.rays)));
        if let Some(cones) = &self.cones {
            lines.push(format!("  \"cones\": {}", nested(cones)));
        }
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    pub fn from_fan(fan: &Fan, name: Option<String>) -> FanFile {
        FanFile {
            name,
            dim: fan.dim(),
            rays: fan.rays().iter().map(|v| v.0.clone()).collect(),
            cones: Some(fan.max_cones().iter().map(|c| c.rays().to_vec()).collect()),
        }
    }

    pub fn to_fan(&self) -> Result<Fan> {
        let rays: Vec<LatticeVector> = self.rays.iter().cloned().map(LatticeVector).collect();
        match &self.cones {
            Some(cones) => {
                let fan = validate_fan(self.dim, rays, cones.clone())?;
                if fan.dim() == 2 {
                    order_surface(&fan)?;
                }
                Ok(fan)
            }
            None if self.dim == 2 => Ok(surface_from_rays(rays)?.fan().clone()),
            None => Err(crate::error::Error::InvalidFan(missing_cones(self.dim))),
        }
    }
}

fn missing_cones(dim: usize) -> crate::lattice_fan::ValidationReport {
    crate::lattice_fan::ValidationReport {
        violations: vec![crate::lattice_fan::Violation {
            kind: crate::lattice_fan::ViolationKind::NotAFan,
            rays: vec![],
            cones: vec![],
            detail: format!("\"cones\" is required in dimension {dim}"),
        }],
    }
}
