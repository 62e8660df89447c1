use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::lattice::{integer_inverse, LatticeVector, Unimodular};
use crate::error::{Error, Result};
use crate::linalg::{self, q, q_frac, Rational};

/// A cone of a fan, stored as the sorted set of its ray indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone(Vec<usize>);

impl Cone {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Cone(indices)
    }

    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, ray: usize) -> bool {
        self.0.binary_search(&ray).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        Cone(self.0.iter().copied().filter(|r| other.contains(*r)).collect())
    }
}

/// The four families of fan defects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    NonPrimitiveRay,
    NotSmooth,
    NotComplete,
    NotAFan,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::NonPrimitiveRay => "NON_PRIMITIVE_RAY",
            ViolationKind::NotSmooth => "NOT_SMOOTH",
            ViolationKind::NotComplete => "NOT_COMPLETE",
            ViolationKind::NotAFan => "NOT_A_FAN",
        })
    }
}

/// One violated invariant. Ray and cone indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub rays: Vec<usize>,
    pub cones: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn kinds(&self) -> Vec<ViolationKind> {
        let mut k: Vec<ViolationKind> = self.violations.iter().map(|v| v.kind).collect();
        k.sort();
        k.dedup();
        k
    }

    fn push(&mut self, kind: ViolationKind, rays: Vec<usize>, cones: Vec<usize>, detail: String) {
        self.violations.push(Violation {
            kind,
            rays,
            cones,
            detail,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// A complete smooth simplicial fan. Only constructible through [`validate_fan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Cone>,
    adjacent: Vec<Vec<bool>>,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// Whether rays `j` and `k` lie in a common cone.
    pub fn share_cone(&self, j: usize, k: usize) -> bool {
        self.adjacent[j][k]
    }

    /// Indices of the rays sharing a two-dimensional cone with ray `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rays.len()).filter(move |&k| k != i && self.adjacent[i][k])
    }

    /// Applies a lattice automorphism to every ray.
    pub fn transform(&self, t: &Unimodular) -> Fan {
        assert_eq!(t.dim(), self.dim);
        let rays = self.rays.iter().map(|v| t.apply_n(v)).collect();
        Fan::build(self.dim, rays, self.max_cones.clone())
    }

    /// Star subdivision at the cone spanned by `face`: inserts the sum of the
    /// face generators and splits every maximal cone containing the face.
    pub fn star_subdivide(&self, face: &[usize]) -> Result<Fan> {
        let face = Cone::new(face.to_vec());
        let mut new_ray = LatticeVector::zero(self.dim);
        for &j in face.rays() {
            new_ray = &new_ray + &self.rays[j];
        }
        let new_index = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(new_ray);
        let mut cones = Vec::new();
        for c in &self.max_cones {
            if face.rays().iter().all(|&j| c.contains(j)) {
                for &j in face.rays() {
                    let mut idx: Vec<usize> = c.rays().iter().copied().filter(|&k| k != j).collect();
                    idx.push(new_index);
                    cones.push(idx);
                }
            } else {
                cones.push(c.rays().to_vec());
            }
        }
        validate_fan(self.dim, rays, cones)
    }

    fn build(dim: usize, rays: Vec<LatticeVector>, max_cones: Vec<Cone>) -> Fan {
        let l = rays.len();
        let mut adjacent = vec![vec![false; l]; l];
        for c in &max_cones {
            for &j in c.rays() {
                for &k in c.rays() {
                    adjacent[j][k] = true;
                }
            }
        }
        Fan {
            dim,
            rays,
            max_cones,
            adjacent,
        }
    }

    fn cone_matrix(&self, c: &Cone) -> Vec<Vec<i64>> {
        c.rays().iter().map(|&j| self.rays[j].0.clone()).collect()
    }

    /// The unique weight pairing to 1 with every generator of a maximal cone.
    pub fn cone_weight(&self, cone: usize) -> super::lattice::Weight {
        let m = self.cone_matrix(&self.max_cones[cone]);
        let inv = integer_inverse(&m).expect("maximal cones are unimodular");
        let n = self.dim;
        super::lattice::Weight((0..n).map(|i| inv[i].iter().sum()).collect())
    }
}

/// Validates raw fan data and returns the fan or every violated invariant.
pub fn validate_fan(
    dim: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
) -> Result<Fan> {
    let mut report = ValidationReport::default();
    use ViolationKind::*;

    if dim == 0 {
        report.push(NotAFan, vec![], vec![], "dimension must be positive".into());
        return Err(Error::InvalidFan(report));
    }
    for (i, v) in rays.iter().enumerate() {
        if v.dim() != dim {
            report.push(
                NotAFan,
                vec![i],
                vec![],
                format!("ray {} has {} coordinates, expected {}", i + 1, v.dim(), dim),
            );
        } else if v.is_zero() {
            report.push(NonPrimitiveRay, vec![i], vec![], format!("ray {} is zero", i + 1));
        } else if !v.is_primitive() {
            report.push(
                NonPrimitiveRay,
                vec![i],
                vec![],
                format!("ray {} = ({}) is not primitive", i + 1, v),
            );
        }
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                report.push(
                    NotAFan,
                    vec![i, j],
                    vec![],
                    format!("rays {} and {} coincide", i + 1, j + 1),
                );
            }
        }
    }
    if !report.is_valid() {
        // shapes are broken; cone checks would be meaningless
        if report.violations.iter().any(|v| v.kind == NotAFan) {
            return Err(Error::InvalidFan(report));
        }
    }

    let mut max_cones: Vec<Cone> = Vec::new();
    let mut cones_ok = true;
    for (ci, idx) in cones.iter().enumerate() {
        let c = Cone::new(idx.clone());
        if idx.iter().any(|&j| j >= rays.len()) {
            report.push(NotAFan, vec![], vec![ci], format!("cone {} references a missing ray", ci + 1));
            cones_ok = false;
        } else if c.len() != idx.len() || c.len() != dim {
            report.push(
                NotAFan,
                vec![],
                vec![ci],
                format!("cone {} must have {} distinct rays", ci + 1, dim),
            );
            cones_ok = false;
        } else if let Some(prev) = max_cones.iter().position(|p| *p == c) {
            report.push(
                NotAFan,
                vec![],
                vec![prev, ci],
                format!("cones {} and {} coincide", prev + 1, ci + 1),
            );
            cones_ok = false;
        }
        max_cones.push(c);
    }
    if max_cones.is_empty() {
        report.push(NotComplete, vec![], vec![], "fan has no maximal cones".into());
        return Err(Error::InvalidFan(report));
    }
    if !cones_ok {
        return Err(Error::InvalidFan(report));
    }

    let fan = Fan::build(dim, rays, max_cones);
    let mut degenerate = false;
    for (ci, c) in fan.max_cones.iter().enumerate() {
        let det = linalg::int_det(&fan.cone_matrix(c));
        if det.abs() != num_bigint::BigInt::from(1) {
            degenerate |= det.is_zero();
            report.push(
                NotSmooth,
                c.rays().to_vec(),
                vec![ci],
                format!("cone {} has determinant {}", ci + 1, det),
            );
        }
    }
    if degenerate {
        return Err(Error::InvalidFan(report));
    }

    check_walls(&fan, &mut report);
    if !report.has(NotAFan) && !report.has(NotComplete) {
        check_containment(&fan, &mut report);
    }
    if !report.has(NotAFan) && !report.has(NotComplete) {
        check_covering_degree(&fan, &mut report);
    }
    if report.is_valid() {
        Ok(fan)
    } else {
        Err(Error::InvalidFan(report))
    }
}

fn sign_of_det(fan: &Fan, cols: &[usize], extra: &LatticeVector) -> i32 {
    let mut m: Vec<Vec<i64>> = cols.iter().map(|&j| fan.rays[j].0.clone()).collect();
    m.push(extra.0.clone());
    let d = linalg::int_det(&m);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

/// Every wall lies in exactly two maximal cones, on opposite sides of it.
fn check_walls(fan: &Fan, report: &mut ValidationReport) {
    let mut walls: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, c) in fan.max_cones.iter().enumerate() {
        for &opp in c.rays() {
            let wall: Vec<usize> = c.rays().iter().copied().filter(|&j| j != opp).collect();
            walls.entry(wall).or_default().push((ci, opp));
        }
    }
    for (wall, owners) in &walls {
        let wall_names: Vec<String> = wall.iter().map(|j| (j + 1).to_string()).collect();
        match owners.len() {
            1 => report.push(
                ViolationKind::NotComplete,
                wall.clone(),
                vec![owners[0].0],
                format!(
                    "wall {{{}}} of cone {} is not shared by a second cone",
                    wall_names.join(","),
                    owners[0].0 + 1
                ),
            ),
            2 => {
                let s0 = sign_of_det(fan, wall, &fan.rays[owners[0].1]);
                let s1 = sign_of_det(fan, wall, &fan.rays[owners[1].1]);
                if s0 * s1 >= 0 {
                    report.push(
                        ViolationKind::NotAFan,
                        wall.clone(),
                        vec![owners[0].0, owners[1].0],
                        format!(
                            "cones {} and {} overlap across wall {{{}}}",
                            owners[0].0 + 1,
                            owners[1].0 + 1,
                            wall_names.join(",")
                        ),
                    );
                }
            }
            _ => report.push(
                ViolationKind::NotAFan,
                wall.clone(),
                owners.iter().map(|o| o.0).collect(),
                format!("wall {{{}}} lies in {} cones", wall_names.join(","), owners.len()),
            ),
        }
    }
}

/// Coordinates of `v` in the (rational) basis given by the generators of `c`.
fn cone_coordinates(inverse: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    linalg::mat_vec(inverse, v)
}

fn cone_inverse(fan: &Fan, c: &Cone) -> Vec<Vec<Rational>> {
    // columns are the generators; invert via rref on [G | I]
    let n = fan.dim;
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = c.rays().iter().map(|&j| q(fan.rays[j].0[i])).collect();
            row.extend((0..n).map(|k| q(i64::from(i == k))));
            row
        })
        .collect();
    linalg::rref(&mut aug);
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// No ray lies in a maximal cone it does not generate.
fn check_containment(fan: &Fan, report: &mut ValidationReport) {
    for (ci, c) in fan.max_cones.iter().enumerate() {
        let inv = cone_inverse(fan, c);
        for (j, v) in fan.rays.iter().enumerate() {
            if c.contains(j) {
                continue;
            }
            let vq: Vec<Rational> = v.0.iter().map(|&x| q(x)).collect();
            let coords = cone_coordinates(&inv, &vq);
            if coords.iter().all(|x| !x.is_negative()) {
                report.push(
                    ViolationKind::NotAFan,
                    vec![j],
                    vec![ci],
                    format!("ray {} lies inside cone {}", j + 1, ci + 1),
                );
            }
        }
    }
}

/// A generic point must lie in exactly one maximal cone.
fn check_covering_degree(fan: &Fan, report: &mut ValidationReport) {
    let n = fan.dim;
    let inverses: Vec<Vec<Vec<Rational>>> =
        fan.max_cones.iter().map(|c| cone_inverse(fan, c)).collect();
    let first = &fan.max_cones[0];
    for attempt in 0..32i64 {
        let point: Vec<Rational> = (0..n)
            .map(|i| {
                first.rays().iter().enumerate().fold(Rational::zero(), |acc, (k, &j)| {
                    let w = q_frac(1, 2 + k as i64 * (7 + attempt) + (k * k) as i64 * 3);
                    acc + w * q(fan.rays[j].0[i])
                })
            })
            .collect();
        let coords: Vec<Vec<Rational>> = inverses
            .iter()
            .map(|inv| cone_coordinates(inv, &point))
            .collect();
        if coords.iter().any(|c| c.iter().any(|x| x.is_zero())) {
            continue;
        }
        let owners: Vec<usize> = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().all(|x| x.is_positive()))
            .map(|(i, _)| i)
            .collect();
        if owners.len() != 1 {
            report.push(
                ViolationKind::NotAFan,
                vec![],
                owners.clone(),
                format!("cones cover space {} times", owners.len()),
            );
        }
        return;
    }
}
