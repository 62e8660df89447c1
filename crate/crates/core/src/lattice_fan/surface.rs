use std::cmp::Ordering;
use std::fmt;

use super::fan::{validate_fan, Fan, ValidationReport, ViolationKind};
use super::lattice::{det2, LatticeVector};
use crate::error::{Error, Result};

/// A two-dimensional fan together with its counterclockwise ray cycle.
///
/// Ray indices keep the numbering of the underlying [`Fan`]; `cycle[k]` is the
/// index of the `k`-th ray counterclockwise, starting from the smallest angle
/// in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceFan {
    fan: Fan,
    cycle: Vec<usize>,
    position: Vec<usize>,
}

impl SurfaceFan {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Ray index at cyclic position `k` (any integer, taken mod `l`).
    pub fn index_at(&self, k: isize) -> usize {
        let l = self.cycle.len() as isize;
        self.cycle[k.rem_euclid(l) as usize]
    }

    pub fn ray_at(&self, k: isize) -> &LatticeVector {
        self.fan.ray(self.index_at(k))
    }

    /// Cyclic position of ray index `i`.
    pub fn position_of(&self, i: usize) -> usize {
        self.position[i]
    }

    /// Clockwise and counterclockwise neighbours of ray `i`.
    pub fn neighbors_of(&self, i: usize) -> (usize, usize) {
        let k = self.position[i] as isize;
        (self.index_at(k - 1), self.index_at(k + 1))
    }

    /// Rays in counterclockwise order.
    pub fn ordered_rays(&self) -> Vec<LatticeVector> {
        self.cycle.iter().map(|&i| self.fan.ray(i).clone()).collect()
    }
}

fn half(v: &LatticeVector) -> u8 {
    let (x, y) = (v.0[0], v.0[1]);
    if y > 0 || (y == 0 && x > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order starting at the positive first axis.
pub fn angle_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&det2(a, b)))
}

/// Orders the rays of a valid two-dimensional fan counterclockwise.
pub fn order_surface(fan: &Fan) -> Result<SurfaceFan> {
    if fan.dim() != 2 {
        return Err(Error::NotDim2(fan.dim()));
    }
    let mut cycle: Vec<usize> = (0..fan.ray_count()).collect();
    cycle.sort_by(|&a, &b| angle_cmp(fan.ray(a), fan.ray(b)));
    let l = cycle.len();
    let mut report = ValidationReport::default();
    if l < 3 {
        report.violations.push(super::fan::Violation {
            kind: ViolationKind::NotComplete,
            rays: cycle.clone(),
            cones: vec![],
            detail: "a complete surface fan needs at least three rays".into(),
        });
    }
    for k in 0..l {
        let (i, j) = (cycle[k], cycle[(k + 1) % l]);
        let d = det2(fan.ray(i), fan.ray(j));
        let expected = super::fan::Cone::new(vec![i, j]);
        if d != 1 || !fan.max_cones().contains(&expected) {
            report.violations.push(super::fan::Violation {
                kind: if d == 1 {
                    ViolationKind::NotAFan
                } else {
                    ViolationKind::NotSmooth
                },
                rays: vec![i, j],
                cones: vec![],
                detail: format!(
                    "consecutive rays {} and {} do not span a unimodular cone of the fan",
                    i + 1,
                    j + 1
                ),
            });
        }
    }
    if !report.is_valid() {
        return Err(Error::InvalidFan(report));
    }
    let mut position = vec![0; l];
    for (k, &i) in cycle.iter().enumerate() {
        position[i] = k;
    }
    Ok(SurfaceFan {
        fan: fan.clone(),
        cycle,
        position,
    })
}

/// Builds and validates a surface fan from rays alone; the cones are the
/// consecutive pairs in counterclockwise order.
pub fn surface_from_rays(rays: Vec<LatticeVector>) -> Result<SurfaceFan> {
    if let Some(bad) = rays.iter().find(|r| r.dim() != 2) {
        return Err(Error::NotDim2(bad.dim()));
    }
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.retain(|&i| !rays[i].is_zero());
    order.sort_by(|&a, &b| angle_cmp(&rays[a], &rays[b]));
    let l = order.len();
    let cones: Vec<Vec<usize>> = if l < 2 {
        vec![]
    } else {
        (0..l).map(|k| vec![order[k], order[(k + 1) % l]]).collect()
    };
    let fan = validate_fan(2, rays, cones)?;
    order_surface(&fan)
}

/// Self-intersection cycle of a smooth complete surface, in canonical form.
///
/// Entry `a_i` satisfies `ν(ρ_{i-1}) + ν(ρ_{i+1}) = a_i ν(ρ_i)`; `-a_i` is the
/// self-intersection of the divisor `D_i`. The stored cycle is the
/// lexicographically smallest among all rotations and reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoClass {
    pub cycle: Vec<i64>,
}

impl IsoClass {
    /// `Some(r)` if this is the Hirzebruch surface `F_r` (`F_0 = P¹×P¹`).
    pub fn hirzebruch_index(&self) -> Option<u64> {
        match self.cycle.as_slice() {
            [a, 0, b, 0] if *a == -*b => Some(b.unsigned_abs()),
            _ => None,
        }
    }

    pub fn is_projective_plane(&self) -> bool {
        self.cycle == [-1, -1, -1]
    }

    pub fn name(&self) -> String {
        if self.is_projective_plane() {
            return "P2".into();
        }
        match self.hirzebruch_index() {
            Some(0) => "P1xP1".into(),
            Some(r) => format!("F{r}"),
            None => format!("surface{:?}", self.cycle),
        }
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Raw (non-canonical) cycle in the fan's counterclockwise order.
pub fn self_intersection_cycle(s: &SurfaceFan) -> Vec<i64> {
    let l = s.len() as isize;
    (0..l)
        .map(|k| {
            let v = s.ray_at(k);
            let sum = s.ray_at(k - 1) + s.ray_at(k + 1);
            let c = if v.0[0] != 0 { 0 } else { 1 };
            debug_assert_eq!(sum.0[c] % v.0[c], 0);
            sum.0[c] / v.0[c]
        })
        .collect()
}

pub fn canonical_cycle(cycle: &[i64]) -> Vec<i64> {
    let l = cycle.len();
    let mut best: Option<Vec<i64>> = None;
    let reversed: Vec<i64> = cycle.iter().rev().copied().collect();
    for base in [cycle.to_vec(), reversed] {
        for r in 0..l {
            let cand: Vec<i64> = (0..l).map(|k| base[(k + r) % l]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn iso_class(s: &SurfaceFan) -> IsoClass {
    IsoClass {
        cycle: canonical_cycle(&self_intersection_cycle(s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rays(v: &[[i64; 2]]) -> Vec<LatticeVector> {
        v.iter().map(|x| LatticeVector::new(*x)).collect()
    }

    #[test]
    fn hirzebruch_two_is_sorted_by_angle() {
        let s = surface_from_rays(rays(&[[0, -1], [1, 0], [0, 1], [-1, 2]])).unwrap();
        assert_eq!(
            s.ordered_rays(),
            rays(&[[1, 0], [0, 1], [-1, 2], [0, -1]])
        );
        // original numbering survives
        assert_eq!(s.cycle(), &[1, 2, 3, 0]);
    }

    #[test]
    fn product_of_lines_cycle() {
        let s = surface_from_rays(rays(&[[1, 0], [0, 1], [-1, 0], [0, -1]])).unwrap();
        assert_eq!(iso_class(&s).cycle, vec![0, 0, 0, 0]);
        assert_eq!(iso_class(&s).hirzebruch_index(), Some(0));
    }

    #[test]
    fn hirzebruch_cycle() {
        for r in 0..6 {
            let s = surface_from_rays(rays(&[[1, 0], [0, 1], [-1, r], [0, -1]])).unwrap();
            assert_eq!(self_intersection_cycle(&s), vec![0, r, 0, -r]);
            assert_eq!(iso_class(&s).cycle, canonical_cycle(&[0, r, 0, -r]));
            assert_eq!(iso_class(&s).hirzebruch_index(), Some(r as u64));
        }
    }

    #[test]
    fn plane_cycle() {
        let s = surface_from_rays(rays(&[[1, 0], [0, 1], [-1, -1]])).unwrap();
        assert!(iso_class(&s).is_projective_plane());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = canonical_cycle(&[2, -1, 0, 3, 1, 1]);
        assert_eq!(canonical_cycle(&c), c);
    }

    #[test]
    fn not_two_dimensional() {
        let fan = validate_fan(
            1,
            vec![LatticeVector::new([1]), LatticeVector::new([-1])],
            vec![vec![0], vec![1]],
        )
        .unwrap();
        assert!(matches!(order_surface(&fan), Err(Error::NotDim2(1))));
    }
}
