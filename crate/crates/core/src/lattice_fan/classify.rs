use std::fmt;

use super::fan::Fan;
use super::lattice::pair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FanoStatus {
    Fano,
    WeaklyFano,
    Neither,
}

impl FanoStatus {
    /// Fano or weakly Fano (anticanonical divisor nef).
    pub fn is_nef(self) -> bool {
        !matches!(self, FanoStatus::Neither)
    }
}

impl fmt::Display for FanoStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FanoStatus::Fano => "FANO",
            FanoStatus::WeaklyFano => "WEAKLY_FANO",
            FanoStatus::Neither => "NEITHER",
        })
    }
}

/// Strict (Fano) or weak (weakly Fano) convexity of the anticanonical support
/// function: for each maximal cone `σ`, every ray outside `σ` pairs below
/// (resp. at most) 1 with the weight `u_σ` that is 1 on the generators of `σ`.
pub fn fano_status(fan: &Fan) -> FanoStatus {
    let mut max_pairing = i64::MIN;
    for (ci, cone) in fan.max_cones().iter().enumerate() {
        let u = fan.cone_weight(ci);
        for (j, v) in fan.rays().iter().enumerate() {
            if !cone.contains(j) {
                max_pairing = max_pairing.max(pair(v, &u));
            }
        }
    }
    match max_pairing {
        p if p < 1 => FanoStatus::Fano,
        1 => FanoStatus::WeaklyFano,
        _ => FanoStatus::Neither,
    }
}

/// A configuration `ν(ρ_j) + ν(ρ_k) = 2 ν(ρ_i)` where both `ρ_j` and `ρ_k`
/// share a two-dimensional cone with `ρ_i`. Indices are 0-based, `j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylinderWitness {
    pub middle: usize,
    pub first: usize,
    pub second: usize,
}

/// All midpoint configurations, the combinatorial shadow of an equivariant
/// `Ã₁ × (ℂ*)^{n-2}` inside the variety.
pub fn detect_a1_cylinder(fan: &Fan) -> Vec<CylinderWitness> {
    let mut out = Vec::new();
    for i in 0..fan.ray_count() {
        let twice = fan.ray(i).scale(2);
        let nbrs: Vec<usize> = fan.neighbors(i).collect();
        for (a, &j) in nbrs.iter().enumerate() {
            for &k in &nbrs[a + 1..] {
                if (fan.ray(j) + fan.ray(k)) == twice {
                    out.push(CylinderWitness {
                        middle: i,
                        first: j.min(k),
                        second: j.max(k),
                    });
                }
            }
        }
    }
    out.sort();
    out
}
