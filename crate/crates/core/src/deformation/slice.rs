use super::interval::Interval;
use crate::error::Result;
use crate::lattice_fan::{adapted_basis, pair, LatticeVector, SurfaceFan, Unimodular, Weight};
use crate::linalg::Rational;

/// The subdivision of the line `⟨·, R⟩ = 1` cut out by a surface fan.
///
/// Rays are renumbered `ρ_1, …, ρ_l` counterclockwise so that `ρ_1, …, ρ_{m+1}`
/// are exactly the rays of positive height, with `ρ_1` at the largest
/// breakpoint. `ρ_0` means `ρ_l`, and the cone `σ_i` is spanned by `ρ_i` and
/// `ρ_{i+1}`.
#[derive(Debug, Clone)]
pub struct Slice {
    pub r: Weight,
    pub basis: Unimodular,
    surface: SurfaceFan,
    order: Vec<usize>,
    adapted: Vec<LatticeVector>,
    m: usize,
    breakpoints: Vec<Rational>,
}

pub fn compute_slice(surface: &SurfaceFan, r: &Weight) -> Result<Slice> {
    let basis = adapted_basis(r)?;
    let l = surface.len();
    let heights: Vec<i64> = (0..l)
        .map(|k| pair(surface.ray_at(k as isize), r))
        .collect();
    let start = (0..l)
        .find(|&k| heights[k] > 0 && heights[(k + l - 1) % l] <= 0)
        .expect("a complete fan has rays on both sides of every line");
    let order: Vec<usize> = (0..l)
        .map(|k| surface.index_at((start + k) as isize))
        .collect();
    let adapted: Vec<LatticeVector> = order
        .iter()
        .map(|&i| basis.apply_n(surface.fan().ray(i)))
        .collect();
    let positive = adapted.iter().take_while(|v| v.0[1] > 0).count();
    debug_assert!(adapted[positive..].iter().all(|v| v.0[1] <= 0));
    let breakpoints: Vec<Rational> = adapted[..positive]
        .iter()
        .map(|v| Rational::new(v.0[0].into(), v.0[1].into()))
        .collect();
    debug_assert!(breakpoints.windows(2).all(|w| w[0] > w[1]));
    Ok(Slice {
        r: r.clone(),
        basis,
        surface: surface.clone(),
        order,
        adapted,
        m: positive - 1,
        breakpoints,
    })
}

impl Slice {
    pub fn surface(&self) -> &SurfaceFan {
        &self.surface
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of rays `l`.
    pub fn l(&self) -> usize {
        self.order.len()
    }

    fn slot(&self, k: usize) -> usize {
        let l = self.l();
        assert!(k <= l, "ray label {k} out of range 0..={l}");
        (k + l - 1) % l
    }

    /// Fan index of `ρ_k`, `0 ≤ k ≤ l`.
    pub fn ray_index(&self, k: usize) -> usize {
        self.order[self.slot(k)]
    }

    /// `ν(ρ_k)` in the adapted basis.
    pub fn adapted_ray(&self, k: usize) -> &LatticeVector {
        &self.adapted[self.slot(k)]
    }

    /// `⟨ν(ρ_k), R⟩`.
    pub fn height(&self, k: usize) -> i64 {
        self.adapted_ray(k).0[1]
    }

    /// Breakpoint `b_j`, `1 ≤ j ≤ m+1`, where `ρ_j` crosses height one.
    pub fn breakpoint(&self, j: usize) -> &Rational {
        &self.breakpoints[j - 1]
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn is_lattice_breakpoint(&self, j: usize) -> bool {
        self.height(j) == 1
    }

    /// Segment `Δ_0^i`, `0 ≤ i ≤ m+1`.
    pub fn segment(&self, i: usize) -> Interval {
        let m = self.m;
        assert!(i <= m + 1);
        let lo = (i <= m).then(|| self.breakpoint(i + 1).clone());
        let hi = (i >= 1).then(|| self.breakpoint(i).clone());
        Interval::new(lo, hi)
    }

    pub fn segments(&self) -> Vec<Interval> {
        (0..=self.m + 1).map(|i| self.segment(i)).collect()
    }

    /// Index into the fan's maximal cones of `σ_i`, `0 ≤ i ≤ l` (`σ_l = σ_0`).
    pub fn cone_index(&self, i: usize) -> usize {
        let l = self.l();
        let (a, b) = (self.ray_index(i % l), self.ray_index(i % l + 1));
        let key = crate::lattice_fan::Cone::new(vec![a, b]);
        self.surface
            .fan()
            .max_cones()
            .iter()
            .position(|c| *c == key)
            .expect("consecutive rays span a maximal cone")
    }

    /// Heights of the rays below the line, as `(k, adapted ray)` pairs.
    pub fn negative_rays(&self) -> Vec<(usize, &LatticeVector)> {
        (1..=self.l())
            .filter(|&k| self.height(k) < 0)
            .map(|k| (k, self.adapted_ray(k)))
            .collect()
    }

    /// Whether `Δ_0^i` meets `Δ_0^{i+1}` in a lattice point.
    pub fn junction_is_lattice(&self, i: usize) -> bool {
        self.is_lattice_breakpoint(i + 1)
    }
}
