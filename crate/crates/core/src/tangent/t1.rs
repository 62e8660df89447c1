use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::cohomology::{cech_h_dim, h1_dim_graph};
use crate::error::{Error, Result};
use crate::lattice_fan::{ext_gcd, pair, Fan, Weight};

/// How the per-ray cohomology dimensions are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum T1Method {
    Graph,
    Cech,
}

impl fmt::Display for T1Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            T1Method::Graph => "graph",
            T1Method::Cech => "cech",
        })
    }
}

/// `dim T¹(u)` with its contribution from each ray (0-based indices, only
/// nonzero contributions listed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Degree {
    pub u: Weight,
    pub dim: usize,
    pub per_ray: BTreeMap<usize, usize>,
}

/// Where a support search looked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportMode {
    /// Provably complete surface enumeration.
    Exact,
    /// All degrees with coordinates in `[-radius, radius]`.
    Box { radius: i64 },
    /// A single requested degree.
    Degree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportRegion {
    pub mode: SupportMode,
    pub degrees: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Report {
    pub entries: Vec<T1Degree>,
    pub total: usize,
    pub method: T1Method,
    pub mode: SupportMode,
}

fn surface_fast_count(fan: &Fan, i: usize, u: &Weight) -> usize {
    let on_line = pair(fan.ray(i), u) == -1;
    usize::from(on_line && fan.neighbors(i).all(|j| pair(fan.ray(j), u) < 0))
}

fn per_ray(fan: &Fan, u: &Weight, method: T1Method) -> Result<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for i in 0..fan.ray_count() {
        let h = match method {
            T1Method::Graph if fan.dim() == 2 => {
                let fast = surface_fast_count(fan, i, u);
                debug_assert_eq!(fast, h1_dim_graph(fan, i, u));
                fast
            }
            T1Method::Graph => h1_dim_graph(fan, i, u),
            T1Method::Cech => {
                if pair(fan.ray(i), u) == -1 {
                    cech_h_dim(fan, i, u, 1)?
                } else {
                    0
                }
            }
        };
        if h > 0 {
            out.insert(i, h);
        }
    }
    Ok(out)
}

/// `dim T¹_Y(u) = Σ_i dim H¹(Y, O(D_i))(u)` by the graph formula.
pub fn t1_dim_degree(fan: &Fan, u: &Weight) -> T1Degree {
    t1_dim_degree_with(fan, u, T1Method::Graph).expect("the graph formula does not fail")
}

pub fn t1_dim_degree_with(fan: &Fan, u: &Weight, method: T1Method) -> Result<T1Degree> {
    if u.dim() != fan.dim() {
        return Err(Error::DimensionMismatch {
            expected: fan.dim(),
            got: u.dim(),
        });
    }
    let per_ray = per_ray(fan, u, method)?;
    Ok(T1Degree {
        u: u.clone(),
        dim: per_ray.values().sum(),
        per_ray,
    })
}

/// Integer points `u` on the line `⟨ν(ρ_i), u⟩ = -1` with both neighbours of
/// `ρ_i` pairing to at most `-1`, with the parameter interval widened by
/// `widen` on each side.
pub fn surface_line_candidates(fan: &Fan, i: usize, widen: i64) -> Vec<Weight> {
    assert_eq!(fan.dim(), 2);
    let v = fan.ray(i);
    let (g, s, t) = ext_gcd(v.0[0], v.0[1]);
    debug_assert_eq!(g, 1);
    let u0 = Weight::new([-s, -t]);
    let delta = Weight::new([v.0[1], -v.0[0]]);
    let (mut lo, mut hi) = (i64::MIN, i64::MAX);
    for j in fan.neighbors(i) {
        let w = fan.ray(j);
        let (p0, pd) = (pair(w, &u0), pair(w, &delta));
        let rhs = -1 - p0;
        match pd.signum() {
            1 => hi = hi.min(num_integer::Integer::div_floor(&rhs, &pd)),
            -1 => lo = lo.max(num_integer::Integer::div_ceil(&rhs, &pd)),
            _ if rhs < 0 => return Vec::new(),
            _ => {}
        }
    }
    assert!(
        lo > i64::MIN && hi < i64::MAX,
        "neighbours of a ray in a complete surface fan lie on opposite sides"
    );
    ((lo - widen)..=(hi + widen))
        .map(|k| &u0 + &delta.scale(k))
        .collect()
}

fn box_points(dim: usize, radius: i64) -> Vec<Weight> {
    let side = (2 * radius + 1) as usize;
    let total = side.pow(dim as u32);
    (0..total)
        .map(|mut n| {
            let mut c = vec![0; dim];
            for x in c.iter_mut() {
                *x = (n % side) as i64 - radius;
                n /= side;
            }
            c.reverse();
            Weight(c)
        })
        .collect()
}

/// Default search radius for dimension at least 3: the largest absolute ray
/// coordinate times the dimension.
pub fn default_box_radius(fan: &Fan) -> i64 {
    let m = fan
        .rays()
        .iter()
        .flat_map(|v| v.0.iter().map(|x| x.abs()))
        .max()
        .unwrap_or(1);
    m * fan.dim() as i64
}

fn box_support(fan: &Fan, radius: i64, method: T1Method) -> Result<Vec<T1Degree>> {
    let found: Result<Vec<Option<T1Degree>>> = box_points(fan.dim(), radius)
        .into_par_iter()
        .map(|u| {
            if fan.rays().iter().any(|v| pair(v, &u) == -1) {
                let d = t1_dim_degree_with(fan, &u, method)?;
                Ok((d.dim > 0).then_some(d))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut out: Vec<T1Degree> = found?.into_iter().flatten().collect();
    out.sort_by(|a, b| a.u.cmp(&b.u));
    Ok(out)
}

fn exact_support(fan: &Fan, widen: i64, method: T1Method) -> Result<Vec<T1Degree>> {
    let candidates: BTreeSet<Weight> = (0..fan.ray_count())
        .flat_map(|i| surface_line_candidates(fan, i, widen))
        .collect();
    let found: Result<Vec<T1Degree>> = candidates
        .into_par_iter()
        .map(|u| t1_dim_degree_with(fan, &u, method))
        .collect();
    Ok(found?.into_iter().filter(|d| d.dim > 0).collect())
}

fn support_entries(
    fan: &Fan,
    radius: Option<i64>,
    method: T1Method,
) -> Result<(SupportMode, Vec<T1Degree>)> {
    if fan.dim() == 2 {
        return Ok((SupportMode::Exact, exact_support(fan, 0, method)?));
    }
    let radius = radius.ok_or(Error::BoxRequired(fan.dim()))?;
    Ok((SupportMode::Box { radius }, box_support(fan, radius, method)?))
}

/// Degrees with `T¹(u) ≠ 0`: exact for surfaces, within `[-box, box]^n`
/// otherwise.
pub fn t1_support(fan: &Fan, radius: Option<i64>) -> Result<SupportRegion> {
    let (mode, entries) = support_entries(fan, radius, T1Method::Graph)?;
    Ok(SupportRegion {
        mode,
        degrees: entries.into_iter().map(|d| d.u).collect(),
    })
}

/// Surface support computed from parameter intervals widened by `widen`.
pub fn surface_support_widened(fan: &Fan, widen: i64) -> Result<Vec<Weight>> {
    if fan.dim() != 2 {
        return Err(Error::NotDim2(fan.dim()));
    }
    Ok(exact_support(fan, widen, T1Method::Graph)?
        .into_iter()
        .map(|d| d.u)
        .collect())
}

pub fn t1_total(fan: &Fan, radius: Option<i64>) -> Result<T1Report> {
    t1_total_with(fan, radius, T1Method::Graph)
}

pub fn t1_total_with(fan: &Fan, radius: Option<i64>, method: T1Method) -> Result<T1Report> {
    let (mode, entries) = support_entries(fan, radius, method)?;
    Ok(T1Report {
        total: entries.iter().map(|d| d.dim).sum(),
        entries,
        method,
        mode,
    })
}

/// Report for one degree; `entries` is empty when `T¹(u) = 0`.
pub fn t1_report_for_degree(fan: &Fan, u: &Weight, method: T1Method) -> Result<T1Report> {
    let d = t1_dim_degree_with(fan, u, method)?;
    let total = d.dim;
    Ok(T1Report {
        entries: if total > 0 { vec![d] } else { vec![] },
        total,
        method,
        mode: SupportMode::Degree,
    })
}

/// Degrees found in the box of twice the radius but not in the original box.
pub fn box_recheck(fan: &Fan, radius: i64) -> Result<Vec<Weight>> {
    let inner: BTreeSet<Weight> = t1_support(fan, Some(radius))?.degrees.into_iter().collect();
    Ok(t1_support(fan, Some(2 * radius))?
        .degrees
        .into_iter()
        .filter(|u| !inner.contains(u))
        .collect())
}

/// Checks `H²(Y, O(D_i))(u) = 0` for every ray and every degree in the
/// support together with `sample`.
pub fn t2_surface_check(fan: &Fan, sample: &[Weight]) -> Result<bool> {
    if fan.dim() != 2 {
        return Err(Error::NotDim2(fan.dim()));
    }
    let mut degrees: BTreeSet<Weight> = t1_support(fan, None)?.degrees.into_iter().collect();
    degrees.extend(sample.iter().cloned());
    let checks: Result<Vec<bool>> = degrees
        .into_par_iter()
        .map(|u| {
            for i in 0..fan.ray_count() {
                if cech_h_dim(fan, i, &u, 2)? != 0 {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    Ok(checks?.into_iter().all(|b| b))
}
