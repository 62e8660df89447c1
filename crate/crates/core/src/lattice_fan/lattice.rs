use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Rational};

/// An element of the lattice `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

/// An element of the dual lattice `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

macro_rules! coords_impl {
    ($t:ident) => {
        impl $t {
            pub fn new(coords: impl Into<Vec<i64>>) -> Self {
                $t(coords.into())
            }

            pub fn zero(dim: usize) -> Self {
                $t(vec![0; dim])
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn is_primitive(&self) -> bool {
                gcd_all(&self.0) == 1
            }

            /// The primitive vector on the same ray. Panics on the zero vector.
            pub fn primitive(&self) -> Self {
                let g = gcd_all(&self.0);
                assert!(g != 0, "zero vector has no primitive generator");
                $t(self.0.iter().map(|c| c / g).collect())
            }

            pub fn scale(&self, k: i64) -> Self {
                $t(self.0.iter().map(|c| c * k).collect())
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.dim(), rhs.dim());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.dim(), rhs.dim());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|c| -c).collect())
            }
        }

        impl From<Vec<i64>> for $t {
            fn from(v: Vec<i64>) -> Self {
                $t(v)
            }
        }

        impl<const K: usize> From<[i64; K]> for $t {
            fn from(v: [i64; K]) -> Self {
                $t(v.to_vec())
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    };
}

coords_impl!(LatticeVector);
coords_impl!(Weight);

/// The pairing `⟨v, u⟩` between `N` and `M`.
pub fn pair(v: &LatticeVector, u: &Weight) -> i64 {
    assert_eq!(v.dim(), u.dim(), "pairing vectors of different dimension");
    let s: i128 = v.0.iter().zip(&u.0).map(|(&a, &b)| a as i128 * b as i128).sum();
    i64::try_from(s).expect("pairing overflows i64")
}

/// Non-negative gcd of all entries; 0 for the zero vector.
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// `det(a, b)` for two plane vectors.
pub fn det2(a: &LatticeVector, b: &LatticeVector) -> i64 {
    a.0[0] * b.0[1] - a.0[1] * b.0[0]
}

/// A unimodular change of basis: `on_n` acts on `N`, `on_m = on_nᵀ⁻¹` on `M`,
/// so that `⟨P v, Q u⟩ = ⟨v, u⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unimodular {
    pub on_n: Vec<Vec<i64>>,
    pub on_m: Vec<Vec<i64>>,
}

impl Unimodular {
    pub fn identity(dim: usize) -> Self {
        let id: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        Unimodular {
            on_n: id.clone(),
            on_m: id,
        }
    }

    /// Builds the pair from the action on `N`. Returns `None` unless `|det| = 1`.
    pub fn from_n_matrix(p: Vec<Vec<i64>>) -> Option<Self> {
        let inv = integer_inverse(&p)?;
        let n = p.len();
        let on_m = (0..n).map(|i| (0..n).map(|j| inv[j][i]).collect()).collect();
        Some(Unimodular { on_n: p, on_m })
    }

    pub fn dim(&self) -> usize {
        self.on_n.len()
    }

    pub fn det(&self) -> i64 {
        let d = linalg::int_det(&self.on_n);
        i64::try_from(d).expect("unimodular determinant")
    }

    pub fn apply_n(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector(mat_apply(&self.on_n, &v.0))
    }

    pub fn apply_m(&self, u: &Weight) -> Weight {
        Weight(mat_apply(&self.on_m, &u.0))
    }

    pub fn inverse(&self) -> Unimodular {
        let inv = integer_inverse(&self.on_n).expect("unimodular matrices are invertible");
        Unimodular::from_n_matrix(inv).expect("inverse of unimodular is unimodular")
    }

    /// Rational version of the action on `N`, for vectors with rational entries.
    pub fn apply_n_rational(&self, v: &[Rational]) -> Vec<Rational> {
        self.on_n
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, x)| q(a) * x).sum())
            .collect()
    }
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Inverse of an integer matrix if it is unimodular.
pub fn integer_inverse(p: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = p.len();
    if p.iter().any(|r| r.len() != n) || !linalg::abs_le_one(&linalg::int_det(p)) {
        return None;
    }
    let mut aug: Vec<Vec<Rational>> = p
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| q(i64::from(i == j))));
            r
        })
        .collect();
    let pivots = linalg::rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    aug.iter()
        .map(|row| row[n..].iter().map(linalg::to_i64).collect::<Option<Vec<i64>>>())
        .collect()
}

/// A basis of `N ≅ ℤ²` in which the primitive weight `r` becomes `[0, 1]`.
///
/// The second row of the action on `N` is `r` itself, so the second adapted
/// coordinate of `v` is `⟨v, r⟩`. The first row comes from the extended gcd and
/// makes the determinant `+1`, preserving orientation.
pub fn adapted_basis(r: &Weight) -> Result<Unimodular> {
    if r.dim() != 2 {
        return Err(Error::NotDim2(r.dim()));
    }
    if !r.is_primitive() {
        return Err(Error::NotPrimitive(r.0.clone()));
    }
    let (p, qq) = (r.0[0], r.0[1]);
    let (_, s, t) = ext_gcd(p, qq);
    // rows (t, -s), (p, q): det = t q + s p = 1
    let on_n = vec![vec![t, -s], vec![p, qq]];
    Ok(Unimodular::from_n_matrix(on_n).expect("extended gcd completion is unimodular"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_primitive() {
        assert_eq!(gcd_all(&[4, -6]), 2);
        assert_eq!(gcd_all(&[0, 0]), 0);
        assert!(LatticeVector::new([1, 2]).is_primitive());
        assert!(!LatticeVector::new([0, 2]).is_primitive());
        assert_eq!(LatticeVector::new([-4, 6]).primitive(), LatticeVector::new([-2, 3]));
    }

    #[test]
    fn adapted_basis_identity_for_standard_weight() {
        let b = adapted_basis(&Weight::new([0, 1])).unwrap();
        assert_eq!(b, Unimodular::identity(2));
    }

    #[test]
    fn adapted_basis_swaps_for_first_coordinate() {
        let r = Weight::new([1, 0]);
        let b = adapted_basis(&r).unwrap();
        assert_eq!(b.apply_m(&r), Weight::new([0, 1]));
        assert_eq!(b.det(), 1);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(b.on_n[i][j].abs() + b.on_n[i][1 - j].abs(), 1);
            }
        }
    }

    #[test]
    fn adapted_basis_general_weight() {
        let r = Weight::new([2, 1]);
        let b = adapted_basis(&r).unwrap();
        assert_eq!(b.apply_m(&r), Weight::new([0, 1]));
        assert_eq!(b.det(), 1);
        let basis_n = [LatticeVector::new([1, 0]), LatticeVector::new([0, 1])];
        let basis_m = [Weight::new([1, 0]), Weight::new([0, 1])];
        for v in &basis_n {
            for u in &basis_m {
                assert_eq!(pair(&b.apply_n(v), &b.apply_m(u)), pair(v, u));
            }
        }
    }

    #[test]
    fn adapted_basis_rejects_imprimitive() {
        assert!(matches!(
            adapted_basis(&Weight::new([2, 4])),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let u = Unimodular::from_n_matrix(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let v = LatticeVector::new([3, -5]);
        assert_eq!(u.inverse().apply_n(&u.apply_n(&v)), v);
        assert!(Unimodular::from_n_matrix(vec![vec![2, 0], vec![0, 1]]).is_none());
    }
}
