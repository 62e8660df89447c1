use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice_fan::{pair, Cone, Fan, Weight};
use crate::linalg::{int_rank, mat_vec, separating_functional, solve, Rational};

/// Largest fan dimension for which Čech complexes are built by default.
pub const DEFAULT_DIM_LIMIT: usize = 3;

/// Coefficient sheaf of a Čech complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    /// The line bundle `O(D_i)`.
    Divisor(usize),
    /// The direct sum `⊕_i O(D_i)`.
    Sum,
}

/// A basis element of a Čech cochain group: an ordered set of maximal cones
/// and the summand `O(D_k)` it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CechCell {
    pub cones: Vec<usize>,
    pub divisor: usize,
}

/// The degree-`u` part of the Čech complex of `O(D_i)` (or of the sum over
/// all `i`) for the cover by maximal cones, truncated at a top level.
#[derive(Debug, Clone)]
pub struct CechSlice {
    pub degree: Weight,
    pub coefficients: Coefficients,
    levels: Vec<Vec<CechCell>>,
    index: Vec<HashMap<CechCell, usize>>,
    boundaries: Vec<Vec<Vec<i64>>>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn has_section(fan: &Fan, face: &Cone, divisor: usize, u: &Weight) -> bool {
    face.rays()
        .iter()
        .all(|&j| pair(fan.ray(j), u) >= -i64::from(j == divisor))
}

impl CechSlice {
    /// Builds cochain levels `0..=top` and the differentials between them.
    pub fn build(fan: &Fan, coefficients: Coefficients, u: &Weight, top: usize) -> Result<Self> {
        Self::build_with_limit(fan, coefficients, u, top, DEFAULT_DIM_LIMIT)
    }

    pub fn build_with_limit(
        fan: &Fan,
        coefficients: Coefficients,
        u: &Weight,
        top: usize,
        dim_limit: usize,
    ) -> Result<Self> {
        if fan.dim() > dim_limit {
            return Err(Error::DimensionLimit {
                dim: fan.dim(),
                limit: dim_limit,
            });
        }
        if u.dim() != fan.dim() {
            return Err(Error::DimensionMismatch {
                expected: fan.dim(),
                got: u.dim(),
            });
        }
        let divisors: Vec<usize> = match coefficients {
            Coefficients::Divisor(i) => vec![i],
            Coefficients::Sum => (0..fan.ray_count()).collect(),
        };
        let cones = fan.max_cones();
        let mut levels = Vec::with_capacity(top + 1);
        let mut index = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let mut cells = Vec::new();
            for subset in combinations(cones.len(), p + 1) {
                let face = subset[1..]
                    .iter()
                    .fold(cones[subset[0]].clone(), |acc, &c| acc.intersection(&cones[c]));
                for &k in &divisors {
                    if has_section(fan, &face, k, u) {
                        cells.push(CechCell {
                            cones: subset.clone(),
                            divisor: k,
                        });
                    }
                }
            }
            let map: HashMap<CechCell, usize> =
                cells.iter().cloned().enumerate().map(|(n, c)| (c, n)).collect();
            levels.push(cells);
            index.push(map);
        }
        let mut boundaries = Vec::with_capacity(top);
        for p in 0..top {
            let mut matrix = vec![vec![0i64; levels[p].len()]; levels[p + 1].len()];
            for (row, cell) in levels[p + 1].iter().enumerate() {
                for t in 0..cell.cones.len() {
                    let mut face = cell.cones.clone();
                    face.remove(t);
                    let key = CechCell {
                        cones: face,
                        divisor: cell.divisor,
                    };
                    if let Some(&col) = index[p].get(&key) {
                        matrix[row][col] += if t % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            boundaries.push(matrix);
        }
        Ok(CechSlice {
            degree: u.clone(),
            coefficients,
            levels,
            index,
            boundaries,
        })
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn cells(&self, p: usize) -> &[CechCell] {
        &self.levels[p]
    }

    pub fn cochain_dim(&self, p: usize) -> usize {
        self.levels[p].len()
    }

    pub fn cell_index(&self, p: usize, cell: &CechCell) -> Option<usize> {
        self.index[p].get(cell).copied()
    }

    /// The differential `C^p → C^{p+1}` as a matrix with one row per cell of
    /// level `p + 1`.
    pub fn boundary(&self, p: usize) -> &[Vec<i64>] {
        &self.boundaries[p]
    }

    pub fn boundary_rational(&self, p: usize) -> Vec<Vec<Rational>> {
        self.boundaries[p]
            .iter()
            .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect()
    }

    /// `dim H^p`; requires `p < top`.
    pub fn h_dim(&self, p: usize) -> usize {
        assert!(p < self.top(), "level {} needs the complex up to {}", p, p + 1);
        let out = int_rank(&self.boundaries[p]);
        let inc = if p == 0 { 0 } else { int_rank(&self.boundaries[p - 1]) };
        self.cochain_dim(p) - out - inc
    }

    /// Whether `d^{p+1} ∘ d^p` vanishes for every available `p`.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len()).all(|p| {
            let (a, b) = (&self.boundaries[p], &self.boundaries[p - 1]);
            a.iter().all(|row| {
                (0..self.cochain_dim(p - 1)).all(|c| {
                    row.iter().zip(b).map(|(x, brow)| x * brow[c]).sum::<i64>() == 0
                })
            })
        })
    }
}

/// `dim H^p(Y, O(D_i))(u)` from the Čech complex of the maximal-cone cover.
pub fn cech_h_dim(fan: &Fan, i: usize, u: &Weight, p: usize) -> Result<usize> {
    Ok(CechSlice::build(fan, Coefficients::Divisor(i), u, p + 1)?.h_dim(p))
}

pub fn cech_h_dim_with_limit(
    fan: &Fan,
    i: usize,
    u: &Weight,
    p: usize,
    dim_limit: usize,
) -> Result<usize> {
    Ok(CechSlice::build_with_limit(fan, Coefficients::Divisor(i), u, p + 1, dim_limit)?.h_dim(p))
}

/// A homogeneous 1-cochain with values in `⊕ O(D_i)`.
///
/// Entries are keyed by an ordered pair of maximal-cone indices `a < b` and a
/// divisor index; the value is the coefficient of `χ^u e_{D_k}` on the
/// overlap. Adding an entry under `(b, a)` stores its negative under `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleCochain {
    pub degree: Weight,
    entries: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
}

impl BundleCochain {
    pub fn new(degree: Weight) -> Self {
        BundleCochain {
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, a: usize, b: usize, divisor: usize, coefficient: Rational) {
        assert_ne!(a, b, "a cochain entry needs two distinct cones");
        let (key, c) = if a < b {
            ((a, b), coefficient)
        } else {
            ((b, a), -coefficient)
        };
        let slot = self.entries.entry(key).or_default();
        let v = slot.entry(divisor).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            slot.remove(&divisor);
            if slot.is_empty() {
                self.entries.remove(&key);
            }
        }
    }

    /// Coefficient on `(a, b)`, honouring orientation.
    pub fn get(&self, a: usize, b: usize, divisor: usize) -> Rational {
        let (key, sign) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        self.entries
            .get(&key)
            .and_then(|m| m.get(&divisor))
            .map_or_else(Rational::zero, |v| v * Rational::from_integer(sign.into()))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize, &Rational)> + '_ {
        self.entries
            .iter()
            .flat_map(|(&k, m)| m.iter().map(move |(&d, v)| (k, d, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn difference(&self, other: &BundleCochain) -> BundleCochain {
        let mut out = self.clone();
        for ((a, b), d, v) in other.entries() {
            out.add(a, b, d, -v.clone());
        }
        out
    }

    fn to_vector(&self, slice: &CechSlice) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); slice.cochain_dim(1)];
        for ((a, b), d, c) in self.entries() {
            let cell = CechCell {
                cones: vec![a, b],
                divisor: d,
            };
            match slice.cell_index(1, &cell) {
                Some(n) => v[n] = c.clone(),
                None => {
                    return Err(Error::NotACocycle(format!(
                        "entry on cones {} and {} for divisor {} is not a section in degree [{}]",
                        a + 1,
                        b + 1,
                        d + 1,
                        self.degree
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// Outcome of a coboundary test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoboundaryCertificate {
    /// A 0-cochain whose differential is the given cocycle, keyed by
    /// (maximal cone, divisor).
    Coboundary { preimage: BTreeMap<(usize, usize), Rational> },
    /// A functional on 1-cochains, keyed by (cone pair, divisor), that
    /// vanishes on all coboundaries but not on the given cocycle.
    NotCoboundary {
        functional: BTreeMap<((usize, usize), usize), Rational>,
    },
}

impl CoboundaryCertificate {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, CoboundaryCertificate::Coboundary { .. })
    }
}

fn sum_slice(fan: &Fan, u: &Weight) -> Result<CechSlice> {
    CechSlice::build(fan, Coefficients::Sum, u, 2)
}

fn cocycle_vector(fan: &Fan, cochain: &BundleCochain) -> Result<(CechSlice, Vec<Rational>)> {
    let slice = sum_slice(fan, &cochain.degree)?;
    let v = cochain.to_vector(&slice)?;
    let image = mat_vec(&slice.boundary_rational(1), &v);
    if let Some(n) = image.iter().position(|x| !x.is_zero()) {
        let cell = &slice.cells(2)[n];
        let cones: Vec<String> = cell.cones.iter().map(|c| (c + 1).to_string()).collect();
        return Err(Error::NotACocycle(format!(
            "differential is nonzero on cones {{{}}} for divisor {}",
            cones.join(","),
            cell.divisor + 1
        )));
    }
    Ok((slice, v))
}

/// Decides whether a 1-cocycle over `⊕ O(D_i)` is a coboundary and returns an
/// explicit certificate either way.
pub fn is_coboundary(fan: &Fan, cochain: &BundleCochain) -> Result<CoboundaryCertificate> {
    let (slice, v) = cocycle_vector(fan, cochain)?;
    let d0 = slice.boundary_rational(0);
    if let Some(x) = solve(&d0, &v) {
        let preimage = slice
            .cells(0)
            .iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .map(|(cell, c)| ((cell.cones[0], cell.divisor), c))
            .collect();
        return Ok(CoboundaryCertificate::Coboundary { preimage });
    }
    let y = separating_functional(&d0, &v).expect("a vector outside the image has a separating functional");
    let functional = slice
        .cells(1)
        .iter()
        .zip(y)
        .filter(|(_, c)| !c.is_zero())
        .map(|(cell, c)| (((cell.cones[0], cell.cones[1]), cell.divisor), c))
        .collect();
    Ok(CoboundaryCertificate::NotCoboundary { functional })
}

fn integer_row(v: &[Rational]) -> Vec<i64> {
    let lcm = v
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter()
        .map(|x| {
            let n = x.numer() * (&lcm / x.denom());
            i64::try_from(n).expect("cochain coefficients fit in 64 bits")
        })
        .collect()
}

/// Dimension of the span of the classes of the given cocycles in `H¹`.
pub fn h1_class_rank(fan: &Fan, u: &Weight, cocycles: &[BundleCochain]) -> Result<usize> {
    let slice = sum_slice(fan, u)?;
    let d0 = slice.boundary(0);
    let n1 = slice.cochain_dim(1);
    let mut rows: Vec<Vec<i64>> = (0..slice.cochain_dim(0))
        .map(|c| (0..n1).map(|r| d0[r][c]).collect())
        .collect();
    let base = int_rank(&rows);
    for c in cocycles {
        if &c.degree != u {
            return Err(Error::NotACocycle(format!(
                "cocycle of degree [{}] in a rank computation for degree [{}]",
                c.degree, u
            )));
        }
        let (_, v) = cocycle_vector(fan, c)?;
        rows.push(integer_row(&v));
    }
    Ok(int_rank(&rows) - base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::q;

    #[test]
    fn projective_plane_sections() {
        let p2 = catalog::projective_plane();
        let zero = Weight::new([0, 0]);
        assert_eq!(cech_h_dim(p2.fan(), 0, &zero, 0).unwrap(), 1);
        assert_eq!(cech_h_dim(p2.fan(), 0, &zero, 1).unwrap(), 0);
    }

    #[test]
    fn hirzebruch_two_oracle() {
        let f2 = catalog::hirzebruch(2);
        let u = Weight::new([-1, -1]);
        assert_eq!(cech_h_dim(f2.fan(), 1, &u, 1).unwrap(), 1);
        assert_eq!(cech_h_dim(f2.fan(), 1, &u, 2).unwrap(), 0);
    }

    #[test]
    fn threefold_oracle_and_complex() {
        let fan = catalog::threefold_two_slices();
        let u = Weight::new([0, 0, -1]);
        let s = CechSlice::build(&fan, Coefficients::Divisor(6), &u, 2).unwrap();
        assert!(s.is_complex());
        assert_eq!(s.h_dim(1), 2);
    }

    #[test]
    fn dimension_limit() {
        let p4 = catalog::projective_space(4);
        let err = cech_h_dim(&p4, 0, &Weight::zero(4), 1).unwrap_err();
        assert!(matches!(err, Error::DimensionLimit { dim: 4, limit: 3 }));
        assert_eq!(cech_h_dim_with_limit(&p4, 0, &Weight::zero(4), 0, 4).unwrap(), 1);
    }

    #[test]
    fn zero_cochain_is_coboundary() {
        let f = catalog::f1_blown_up_twice();
        let c = BundleCochain::new(Weight::new([0, -1]));
        let cert = is_coboundary(f.fan(), &c).unwrap();
        assert_eq!(
            cert,
            CoboundaryCertificate::Coboundary {
                preimage: BTreeMap::new()
            }
        );
    }

    #[test]
    fn non_cocycle_rejected() {
        let f = catalog::f1_blown_up_twice();
        let mut c = BundleCochain::new(Weight::new([0, -1]));
        // divisor of (1,2) pairs to -2 with [0,-1]: no section on its cone
        c.add(0, 1, 1, q(1));
        assert!(matches!(is_coboundary(f.fan(), &c), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn cochain_orientation() {
        let mut c = BundleCochain::new(Weight::new([0, 0]));
        c.add(3, 1, 0, q(2));
        assert_eq!(c.get(1, 3, 0), q(-2));
        assert_eq!(c.get(3, 1, 0), q(2));
        c.add(1, 3, 0, q(2));
        assert!(c.is_zero());
    }
}
