//! Exact linear algebra over ℤ and ℚ.
//!
//! Ranks of integer matrices use fraction-free (Bareiss) elimination, first in
//! checked `i128` and, on overflow, in arbitrary precision. Solving and
//! certificate extraction run Gauss-Jordan elimination over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

trait Bareiss: Clone {
    fn is_zero(&self) -> bool;
    fn unit() -> Self;
    fn nil() -> Self;
    /// `(a*d - b*c) / e`, `None` on overflow.
    fn step(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self>;
}

impl Bareiss for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn unit() -> Self {
        1
    }
    fn nil() -> Self {
        0
    }
    fn step(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        let ad = a.checked_mul(*d)?;
        let bc = b.checked_mul(*c)?;
        let num = ad.checked_sub(bc)?;
        debug_assert_eq!(num % e, 0);
        Some(num / e)
    }
}

impl Bareiss for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn unit() -> Self {
        One::one()
    }
    fn nil() -> Self {
        Zero::zero()
    }
    fn step(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        Some((a * d - b * c) / e)
    }
}

/// Fraction-free elimination; returns the rank and the last pivot (the
/// determinant, up to sign, when the matrix is square and of full rank).
fn bareiss<T: Bareiss>(mut m: Vec<Vec<T>>, cols: usize) -> Option<(usize, T, bool)> {
    let rows = m.len();
    let mut prev = T::unit();
    let mut rank = 0;
    let mut negated = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negated = !negated;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                m[i][j] = T::step(&m[rank][c], &m[i][j], &m[i][c], &m[rank][j], &prev)?;
            }
            m[i][c] = T::nil();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    Some((rank, prev, negated))
}

/// Rank over ℚ of an integer matrix given as rows.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some((r, _, _)) = bareiss(small, cols) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(big, cols).expect("bigint elimination cannot overflow").0
}

/// Exact determinant of a square integer matrix.
pub fn int_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (rank, last, negated) = bareiss(big, n).expect("bigint elimination cannot overflow");
    if rank < n {
        return BigInt::zero();
    }
    if negated {
        -last
    } else {
        last
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Solve `a x = b` where `a` is given by rows. Returns some solution if one exists.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the kernel `{x : a x = 0}`, where `a` has `cols` columns.
pub fn kernel(a: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = a.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// A vector `y` with `yᵀ a = 0` and `y · b ≠ 0`, if `b` is outside the column
/// space of `a` (`a` given by rows, `b` indexed like the rows).
pub fn separating_functional(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let transposed: Vec<Vec<Rational>> = (0..cols)
        .map(|c| (0..rows).map(|r| a[r][c].clone()).collect())
        .collect();
    kernel(&transposed, rows)
        .into_iter()
        .find(|y| !dot(y, b).is_zero())
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Multiply a row-major matrix by a vector.
pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| dot(row, x)).collect()
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

pub fn abs_le_one(x: &BigInt) -> bool {
    x.abs() <= BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_integer_matrices() {
        assert_eq!(int_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(int_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(int_rank(&[vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]), 2);
        assert_eq!(int_rank(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]), 3);
    }

    #[test]
    fn rank_falls_back_to_bigint() {
        let big = 1i64 << 62;
        let m = vec![vec![big, big - 1, 3], vec![big - 7, big, 5], vec![11, big, big - 3]];
        let rational: Vec<Vec<Rational>> =
            m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        assert_eq!(int_rank(&m), rank(&rational));
    }

    #[test]
    fn determinants() {
        assert_eq!(int_det(&[vec![1, 0], vec![0, 2]]), BigInt::from(2));
        assert_eq!(int_det(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            int_det(&[vec![0, -1, 0], vec![1, 0, 1], vec![0, 0, 1]]),
            BigInt::from(1)
        );
        assert_eq!(int_det(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn solve_and_certificate() {
        let a = vec![vec![q(1), q(0)], vec![q(1), q(0)], vec![q(0), q(1)]];
        let x = solve(&a, &[q(2), q(2), q(3)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        assert!(solve(&a, &[q(2), q(1), q(3)]).is_none());
        let y = separating_functional(&a, &[q(2), q(1), q(3)]).unwrap();
        let zero_on_columns = (0..2).all(|c| {
            let col: Vec<Rational> = a.iter().map(|r| r[c].clone()).collect();
            dot(&y, &col).is_zero()
        });
        assert!(zero_on_columns);
        assert!(separating_functional(&a, &[q(2), q(2), q(3)]).is_none());
    }
}
