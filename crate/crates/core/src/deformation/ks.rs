use std::collections::BTreeMap;

use super::decomposition::{pi_decomposition, Decomposition};
use super::slice::Slice;
use crate::cohomology::{h1_class_rank, is_coboundary, BundleCochain, CoboundaryCertificate};
use crate::error::Result;
use crate::lattice_fan::{det2, LatticeVector, Weight};
use crate::linalg::q;
use crate::tangent::t1_dim_degree;

/// Coefficients `(c_x, c_y)` of `c_x · x y⁻¹ ∂/∂x + c_y · ∂/∂y`.
pub type TangentEntry = [i64; 2];

/// Coefficients of `y⁻¹ e_{D_k}`, keyed by the fan index `k`.
pub type BundleEntry = BTreeMap<usize, i64>;

/// Kodaira–Spencer class of a decomposition, given on the consecutive
/// overlaps `σ_{i-1} ∩ σ_i = ρ_i`, `i = 1..l` (stored at position `i - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSCocycle {
    /// `-R` in the original coordinates.
    pub degree: Weight,
    /// `d_{i-1,i}` in adapted coordinates.
    pub tangent: Vec<TangentEntry>,
    /// `g_{i-1,i}` with `g_{m+1,m+2}` closing the cycle.
    pub bundle: Vec<BundleEntry>,
    /// The 0-cochain value `f` on `σ_{m+2}, …, σ_{l-1}`.
    pub correction: BundleEntry,
    /// `g + δf`, which maps to `d` entrywise under the Euler map.
    pub bundle_exact: Vec<BundleEntry>,
}

fn add_into(target: &mut BundleEntry, k: usize, c: i64) {
    let v = target.entry(k).or_insert(0);
    *v += c;
    if *v == 0 {
        target.remove(&k);
    }
}

fn euler(slice: &Slice, entry: &BundleEntry) -> TangentEntry {
    let basis = &slice.basis;
    let mut out = [0, 0];
    for (&k, &c) in entry {
        let v = basis.apply_n(slice.surface().fan().ray(k));
        out[0] += c * v.0[0];
        out[1] += c * v.0[1];
    }
    out
}

pub fn ks_cocycle(slice: &Slice, d: &Decomposition) -> KSCocycle {
    let (l, m) = (slice.l(), slice.m());
    let sign = |c: usize| -> i64 {
        let c = if c == l { 0 } else { c };
        if c <= m + 1 {
            i64::from(d.a[c])
        } else {
            1
        }
    };
    let lam = |c: usize| -> i64 {
        let c = if c == l { 0 } else { c };
        if c <= m + 1 {
            d.lambda[c]
        } else {
            0
        }
    };
    let mut tangent = Vec::with_capacity(l);
    for i in 1..=l {
        let (ap, a) = (sign(i - 1), sign(i));
        let (lp, li) = (lam(i - 1), lam(i));
        let entry = if ap != a {
            [ap * (li + lp), ap]
        } else if i == m + 2 || i == l {
            [ap * (lp - li), 0]
        } else {
            [0, 0]
        };
        debug_assert_eq!(entry, [ap * lp - a * li, (ap - a) / 2]);
        tangent.push(entry);
    }

    let mut bundle = vec![BundleEntry::new(); l];
    let mut closing = BundleEntry::new();
    for j in 1..=l {
        if j == m + 2 || j == l {
            continue;
        }
        if sign(j - 1) != sign(j) {
            let k = slice.ray_index(j);
            add_into(&mut bundle[j - 1], k, sign(j - 1));
            add_into(&mut closing, k, -sign(j - 1));
        }
    }
    bundle[m + 1] = closing;

    let mut correction = BundleEntry::new();
    let mut bundle_exact = bundle.clone();
    if m + 2 < l {
        let e = euler(slice, &bundle[m + 1]);
        let target = LatticeVector::new([tangent[m + 1][0] - e[0], tangent[m + 1][1] - e[1]]);
        let (v1, v2) = (slice.adapted_ray(m + 2), slice.adapted_ray(m + 3));
        let alpha = [det2(&target, v2), det2(v1, &target)];
        add_into(&mut correction, slice.ray_index(m + 2), alpha[0]);
        add_into(&mut correction, slice.ray_index(m + 3), alpha[1]);
        for (&k, &c) in &correction {
            add_into(&mut bundle_exact[m + 1], k, c);
            add_into(&mut bundle_exact[l - 1], k, -c);
        }
    }
    let r = &slice.r;
    KSCocycle {
        degree: Weight::new([-r.0[0], -r.0[1]]),
        tangent,
        bundle,
        correction,
        bundle_exact,
    }
}

impl KSCocycle {
    pub fn tangent_sum(&self) -> TangentEntry {
        self.tangent
            .iter()
            .fold([0, 0], |acc, e| [acc[0] + e[0], acc[1] + e[1]])
    }

    pub fn is_zero(&self) -> bool {
        self.tangent.iter().all(|e| *e == [0, 0])
            && self.bundle_exact.iter().all(|e| e.is_empty())
    }

    /// The Euler map sends `g + δf` to `d` on every overlap.
    pub fn euler_compatible(&self, slice: &Slice) -> bool {
        self.bundle_exact
            .iter()
            .zip(&self.tangent)
            .all(|(b, t)| euler(slice, b) == *t)
    }

    /// Entry `d_{i-1,i}` in the original coordinates, as the degree of the
    /// character and the lattice direction of the derivation:
    /// `c_x x y⁻¹ ∂_x + c_y ∂_y = χ^{[0,-1]} (c_x x∂_x + c_y y∂_y)`.
    pub fn tangent_original(&self, slice: &Slice, i: usize) -> (Weight, LatticeVector) {
        let back = slice.basis.inverse();
        let deg = back.apply_m(&Weight::new([0, -1]));
        let v = back.apply_n(&LatticeVector::new(self.tangent[i - 1]));
        (deg, v)
    }

    /// Every entry is homogeneous of degree `-R`.
    pub fn is_homogeneous(&self, slice: &Slice) -> bool {
        (1..=self.tangent.len()).all(|i| self.tangent_original(slice, i).0 == self.degree)
    }

    fn cochain(&self, slice: &Slice, values: &[BundleEntry]) -> BundleCochain {
        let l = slice.l();
        let mut c = BundleCochain::new(self.degree.clone());
        for p in 0..l {
            let mut acc = BundleEntry::new();
            for qpos in p + 1..l {
                for (&k, &v) in &values[qpos - 1] {
                    add_into(&mut acc, k, v);
                }
                for (&k, &v) in &acc {
                    c.add(slice.cone_index(p), slice.cone_index(qpos), k, q(v));
                }
            }
        }
        c
    }

    /// `g + δf` extended from consecutive overlaps to all pairs of cones.
    pub fn bundle_cochain(&self, slice: &Slice) -> BundleCochain {
        self.cochain(slice, &self.bundle_exact)
    }

    /// The form `g` before correction, extended the same way.
    pub fn uncorrected_cochain(&self, slice: &Slice) -> BundleCochain {
        self.cochain(slice, &self.bundle)
    }

    /// The coboundary `δf` relating the two bundle forms.
    pub fn correction_cochain(&self, slice: &Slice) -> BundleCochain {
        self.bundle_cochain(slice).difference(&self.uncorrected_cochain(slice))
    }
}

/// One element `π(i)` of the basis of `T¹(-R)`.
#[derive(Debug, Clone)]
pub struct BasisElement {
    /// Label `i` of the ray `ρ_i` in the slice numbering.
    pub label: usize,
    /// Index of `ρ_i` in the fan.
    pub ray: usize,
    pub decomposition: Decomposition,
    pub cocycle: KSCocycle,
    pub certificate: CoboundaryCertificate,
}

#[derive(Debug, Clone)]
pub struct KsBasis {
    pub degree: Weight,
    pub elements: Vec<BasisElement>,
    pub rank: usize,
    pub t1_dim: usize,
}

impl KsBasis {
    /// Nontrivial classes, linearly independent, spanning `T¹(-R)`.
    pub fn is_certified(&self) -> bool {
        self.elements.iter().all(|e| !e.certificate.is_coboundary())
            && self.rank == self.elements.len()
            && self.rank == self.t1_dim
    }
}

pub fn ks_basis(slice: &Slice) -> Result<KsBasis> {
    let fan = slice.surface().fan();
    let mut elements = Vec::new();
    for i in 2..=slice.m() {
        if slice.height(i) != 1 {
            continue;
        }
        let decomposition = pi_decomposition(slice, i)?;
        let cocycle = ks_cocycle(slice, &decomposition);
        let certificate = is_coboundary(fan, &cocycle.bundle_cochain(slice))?;
        elements.push(BasisElement {
            label: i,
            ray: slice.ray_index(i),
            decomposition,
            cocycle,
            certificate,
        });
    }
    let degree = Weight::new([-slice.r.0[0], -slice.r.0[1]]);
    let cochains: Vec<BundleCochain> = elements
        .iter()
        .map(|e| e.cocycle.bundle_cochain(slice))
        .collect();
    let rank = h1_class_rank(fan, &degree, &cochains)?;
    let t1_dim = t1_dim_degree(fan, &degree).dim;
    Ok(KsBasis {
        degree,
        elements,
        rank,
        t1_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::deformation::{compute_slice, enumerate_decompositions, realize};

    #[test]
    fn blown_up_f1_pi3() {
        let s = compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap();
        let d = realize(&s, &[1, 1, 1, -1, -1], 0).unwrap();
        let ks = ks_cocycle(&s, &d);
        let mut expect = vec![[0, 0]; 6];
        expect[2] = [0, 1];
        expect[4] = [0, -1];
        assert_eq!(ks.tangent, expect);
        assert_eq!(ks.bundle[2], BundleEntry::from([(2, 1)]));
        assert_eq!(ks.bundle[4], BundleEntry::from([(2, -1)]));
        assert!(ks.correction.is_empty());
        assert!(ks.euler_compatible(&s));
        assert!(ks.is_homogeneous(&s));
        let cert = is_coboundary(s.surface().fan(), &ks.bundle_cochain(&s)).unwrap();
        assert!(!cert.is_coboundary());
    }

    #[test]
    fn trivial_is_zero() {
        let s = compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap();
        let d = realize(&s, &[1; 5], 0).unwrap();
        assert!(ks_cocycle(&s, &d).is_zero());
    }

    #[test]
    fn enumerated_cocycles_close_up() {
        for surface in [catalog::f1_blown_up_twice(), catalog::hexagon(), catalog::hirzebruch(3)] {
            for r in [[0, 1], [1, 1], [2, 1], [-1, 2]] {
                let s = compute_slice(&surface, &Weight::new(r)).unwrap();
                for d in enumerate_decompositions(&s) {
                    for shift in [0, 2] {
                        let d = realize(&s, &d.a, shift).unwrap();
                        let ks = ks_cocycle(&s, &d);
                        assert_eq!(ks.tangent_sum(), [0, 0]);
                        assert!(ks.euler_compatible(&s), "{r:?} {:?}", d.a);
                    }
                }
            }
        }
    }

    #[test]
    fn correction_is_a_coboundary() {
        let s = compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap();
        let d = realize(&s, &[1; 5], 1).unwrap();
        let ks = ks_cocycle(&s, &d);
        assert!(!ks.correction.is_empty());
        let cert = is_coboundary(s.surface().fan(), &ks.correction_cochain(&s)).unwrap();
        assert!(cert.is_coboundary());
    }

    #[test]
    fn bases() {
        let s = compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap();
        let b = ks_basis(&s).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert_eq!(b.elements[0].label, 3);
        assert!(b.is_certified());
        for r in 2..6 {
            for alpha in 1..r {
                let s = compute_slice(&catalog::hirzebruch(r), &Weight::new([alpha, 1])).unwrap();
                let b = ks_basis(&s).unwrap();
                assert_eq!(b.elements.len(), 1);
                assert!(b.is_certified());
            }
        }
        let s = compute_slice(&catalog::projective_plane(), &Weight::new([2, 3])).unwrap();
        let b = ks_basis(&s).unwrap();
        assert!(b.elements.is_empty() && b.is_certified());
    }
}
