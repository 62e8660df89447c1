//! Standard fans used throughout the examples and tests.

use std::collections::{BTreeMap, VecDeque};

use crate::lattice_fan::{
    iso_class, order_surface, surface_from_rays, validate_fan, Fan, IsoClass, LatticeVector,
    SurfaceFan,
};

fn rays2(coords: &[[i64; 2]]) -> Vec<LatticeVector> {
    coords.iter().map(|c| LatticeVector::new(*c)).collect()
}

fn surface(coords: &[[i64; 2]]) -> SurfaceFan {
    surface_from_rays(rays2(coords)).expect("catalog fan is smooth and complete")
}

pub fn projective_plane() -> SurfaceFan {
    surface(&[[1, 0], [0, 1], [-1, -1]])
}

pub fn product_of_lines() -> SurfaceFan {
    hirzebruch(0)
}

/// The Hirzebruch surface `F_r` with rays `(1,0), (0,1), (-1,r), (0,-1)`.
pub fn hirzebruch(r: i64) -> SurfaceFan {
    surface(&[[1, 0], [0, 1], [-1, r], [0, -1]])
}

/// `P²` blown up in the three torus-fixed points.
pub fn hexagon() -> SurfaceFan {
    surface(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]])
}

/// `F_1` blown up twice, rays `ρ_1..ρ_6` at indices `0..5`.
pub fn f1_blown_up_twice() -> SurfaceFan {
    surface(&[[1, 1], [1, 2], [0, 1], [-1, 1], [0, -1], [1, 0]])
}

/// A threefold whose slices at heights `±1` are hexagons; rays `ρ_1..ρ_8` at
/// indices `0..7`, with `ρ_7 = (0,0,1)` and `ρ_8 = -ρ_7`.
pub fn threefold_two_slices() -> Fan {
    let ring = [[1, 0, 1], [1, 1, 0], [0, 1, 1], [-1, 0, 0], [-1, -1, 1], [0, -1, 0]];
    let mut rays: Vec<LatticeVector> = ring.iter().map(|c| LatticeVector::new(*c)).collect();
    rays.push(LatticeVector::new([0, 0, 1]));
    rays.push(LatticeVector::new([0, 0, -1]));
    let mut cones = Vec::new();
    for i in 0..6 {
        let j = (i + 1) % 6;
        cones.push(vec![i, j, 6]);
        cones.push(vec![i, j, 7]);
    }
    validate_fan(3, rays, cones).expect("catalog fan is smooth and complete")
}

/// Rays `ρ_0..ρ_4` and cones of the weakly Fano rigid threefold, literally as
/// commonly quoted. These do not form a smooth fan; see
/// [`weakly_fano_threefold`].
pub fn weakly_fano_threefold_literal() -> (Vec<LatticeVector>, Vec<Vec<usize>>) {
    let rays = [[0, 0, -1], [0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]]
        .iter()
        .map(|c| LatticeVector::new(*c))
        .collect();
    let cones = vec![
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![0, 1, 4],
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
    ];
    (rays, cones)
}

/// The weakly Fano, non-Fano rigid threefold with the same combinatorics as
/// [`weakly_fano_threefold_literal`], taking `ρ_0 = (-1,-1,-2)` so that every
/// cone is unimodular. It is `P(O ⊕ O(1) ⊕ O(1))` over `P¹`.
pub fn weakly_fano_threefold() -> Fan {
    let (mut rays, cones) = weakly_fano_threefold_literal();
    rays[0] = LatticeVector::new([-1, -1, -2]);
    validate_fan(3, rays, cones).expect("catalog fan is smooth and complete")
}

/// Projective space `P^n`.
pub fn projective_space(n: usize) -> Fan {
    let mut rays: Vec<LatticeVector> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            LatticeVector(v)
        })
        .collect();
    rays.push(LatticeVector(vec![-1; n]));
    let cones = (0..=n)
        .map(|skip| (0..=n).filter(|&k| k != skip).collect())
        .collect();
    validate_fan(n, rays, cones).expect("catalog fan is smooth and complete")
}

/// Product of two fans, rays of `a` first.
pub fn product(a: &Fan, b: &Fan) -> Fan {
    let (da, db) = (a.dim(), b.dim());
    let mut rays = Vec::new();
    for v in a.rays() {
        let mut c = v.0.clone();
        c.extend(std::iter::repeat_n(0, db));
        rays.push(LatticeVector(c));
    }
    for v in b.rays() {
        let mut c = vec![0; da];
        c.extend_from_slice(&v.0);
        rays.push(LatticeVector(c));
    }
    let shift = a.ray_count();
    let mut cones = Vec::new();
    for ca in a.max_cones() {
        for cb in b.max_cones() {
            let mut c = ca.rays().to_vec();
            c.extend(cb.rays().iter().map(|&k| k + shift));
            cones.push(c);
        }
    }
    validate_fan(da + db, rays, cones).expect("product of smooth complete fans")
}

/// Star subdivision of a surface at the cone between cyclic positions `k`
/// and `k+1`.
pub fn blow_up(s: &SurfaceFan, k: usize) -> SurfaceFan {
    let i = s.index_at(k as isize);
    let j = s.index_at(k as isize + 1);
    let fan = s.fan().star_subdivide(&[i, j]).expect("blow-up of a smooth fan");
    order_surface(&fan).expect("blow-up of a smooth complete surface")
}

/// Smooth complete surfaces with at most `max_rays` rays obtained from
/// `P²`, `P¹×P¹` and `F_1..F_4` by iterated star subdivision, one
/// representative per isomorphism class, ordered by ray count then class.
pub fn surface_corpus(max_rays: usize) -> Vec<SurfaceFan> {
    let mut seen: BTreeMap<(usize, IsoClass), SurfaceFan> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut seeds = vec![projective_plane()];
    seeds.extend((0..=4).map(hirzebruch));
    for s in seeds {
        if s.len() <= max_rays {
            let key = (s.len(), iso_class(&s));
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(s.clone());
                queue.push_back(s);
            }
        }
    }
    while let Some(s) = queue.pop_front() {
        if s.len() >= max_rays {
            continue;
        }
        for k in 0..s.len() {
            let t = blow_up(&s, k);
            let key = (t.len(), iso_class(&t));
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    seen.into_values().collect()
}
