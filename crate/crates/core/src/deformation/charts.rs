use super::decomposition::Decomposition;
use super::slice::Slice;
use crate::lattice_fan::{LatticeVector, Weight};

/// Exponents of a formal monomial `x^x y^y (y-t)^y_minus_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: i64,
    pub y: i64,
    pub y_minus_t: i64,
}

impl Monomial {
    pub fn inverse(self) -> Monomial {
        Monomial {
            x: -self.x,
            y: -self.y,
            y_minus_t: -self.y_minus_t,
        }
    }

    /// The monomial at `t = 0`, as exponents of `x` and `y`.
    pub fn at_zero(self) -> [i64; 2] {
        [self.x, self.y + self.y_minus_t]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartCone {
    pub index: usize,
    pub a: i8,
    pub lambda: i64,
    pub w: [Weight; 2],
    pub z: [Monomial; 2],
}

/// Generators `Z̃_{i,1}, Z̃_{i,2}` of every chart `σ_0..σ_{l-1}`, in adapted
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartData {
    pub cones: Vec<ChartCone>,
    pub m: usize,
}

/// Dual basis of a unimodular plane cone: `w¹ ⊥ v₂`, `⟨v₁, w¹⟩ = 1` and
/// `w² ⊥ v₁`, `⟨v₂, w²⟩ = 1`.
fn dual_pair(v1: &LatticeVector, v2: &LatticeVector) -> [Weight; 2] {
    let (a, b, c, d) = (v1.0[0], v1.0[1], v2.0[0], v2.0[1]);
    [Weight::new([d, -c]), Weight::new([-b, a])]
}

fn tilde(w: &Weight, a: i8, lambda: i64) -> Monomial {
    let (r, s) = (w.0[0], w.0[1]);
    if a == 1 {
        Monomial {
            x: r,
            y: s + lambda * r,
            y_minus_t: -lambda * r,
        }
    } else {
        Monomial {
            x: r,
            y: -lambda * r,
            y_minus_t: s + lambda * r,
        }
    }
}

pub fn chart_generators(slice: &Slice, d: &Decomposition) -> ChartData {
    let m = slice.m();
    let cones = (0..slice.l())
        .map(|i| {
            let (a, lambda) = if i <= m + 1 { (d.a[i], d.lambda[i]) } else { (1, 0) };
            let w = dual_pair(slice.adapted_ray(i), slice.adapted_ray(i + 1));
            let z = [tilde(&w[0], a, lambda), tilde(&w[1], a, lambda)];
            ChartCone {
                index: i,
                a,
                lambda,
                w,
                z,
            }
        })
        .collect();
    ChartData { cones, m }
}

impl ChartData {
    /// `w_i¹ = -w_{i+1}²` for every cone, cyclically.
    pub fn dual_generators_glue(&self) -> bool {
        let l = self.cones.len();
        (0..l).all(|i| self.cones[i].w[0] == -&self.cones[(i + 1) % l].w[1])
    }

    /// `Z̃_{i-1,1} = Z̃_{i,2}^{-1}` for `1 ≤ i < l`, `i ≠ m+2`.
    pub fn gluing_holds(&self) -> bool {
        (1..self.cones.len())
            .filter(|&i| i != self.m + 2)
            .all(|i| self.cones[i - 1].z[0] == self.cones[i].z[1].inverse())
    }

    /// At `t = 0` every `Z̃_{i,j}` is `x^r y^s` with `[r, s] = w_i^j`.
    pub fn special_fiber_is_original(&self) -> bool {
        self.cones
            .iter()
            .all(|c| (0..2).all(|j| c.z[j].at_zero() == [c.w[j].0[0], c.w[j].0[1]]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::deformation::{compute_slice, enumerate_decompositions, realize};

    #[test]
    fn blown_up_f1_charts() {
        let s = compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap();
        for d in enumerate_decompositions(&s) {
            let c = chart_generators(&s, &d);
            assert!(c.dual_generators_glue());
            assert!(c.gluing_holds());
            assert!(c.special_fiber_is_original());
        }
        let d = realize(&s, &[1, -1, -1, 1, 1], 1).unwrap();
        let c = chart_generators(&s, &d);
        let sigma1 = &c.cones[1];
        for j in 0..2 {
            let (r, sv) = (sigma1.w[j].0[0], sigma1.w[j].0[1]);
            assert_eq!(sigma1.z[j], Monomial { x: r, y: 0, y_minus_t: sv });
        }
    }

    #[test]
    fn trivial_charts_have_no_t() {
        let s = compute_slice(&catalog::hexagon(), &Weight::new([1, 1])).unwrap();
        let d = realize(&s, &vec![1; s.m() + 2], 0).unwrap();
        let c = chart_generators(&s, &d);
        assert!(c.cones.iter().all(|k| k.z.iter().all(|z| z.y_minus_t == 0)));
    }
}
