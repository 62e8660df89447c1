use super::interval::Interval;
use super::slice::Slice;
use crate::error::{Error, Result};
use crate::linalg::{q, to_i64};

/// A subdivision decomposition, encoded by signs `a_0..a_{m+1}` and the shift
/// `λ_0`, together with the realized summand families.
///
/// For `a_i = 1` the summand `Ξ̃_0^i` is `Δ_0^i - λ_i` and `Ξ̃_t^i = {λ_i}`; for
/// `a_i = -1` the roles are swapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub a: Vec<i8>,
    pub lambda0: i64,
    pub lambda: Vec<i64>,
    pub tilde0: Vec<Interval>,
    pub tilde_t: Vec<Interval>,
}

impl Decomposition {
    pub fn m(&self) -> usize {
        self.a.len() - 2
    }

    /// Both unbounded segments keep their unbounded summand in `Ξ̃_0`.
    pub fn satisfies_covering(&self) -> bool {
        self.a[0] == 1 && self.a[self.a.len() - 1] == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.a.iter().all(|&x| x == 1)
    }

    /// Checks the Minkowski, ordering and admissibility conditions against
    /// the slice.
    pub fn check(&self, slice: &Slice) -> std::result::Result<(), String> {
        let m = slice.m();
        if self.a.len() != m + 2 {
            return Err(format!("expected {} signs, got {}", m + 2, self.a.len()));
        }
        for i in 0..=m + 1 {
            let sum = self.tilde0[i].minkowski(&self.tilde_t[i]);
            if sum != slice.segment(i) {
                return Err(format!(
                    "segment {i}: {} + {} = {sum}, expected {}",
                    self.tilde0[i],
                    self.tilde_t[i],
                    slice.segment(i)
                ));
            }
            if (1..=m).contains(&i)
                && !self.tilde0[i].is_lattice_point()
                && !self.tilde_t[i].is_lattice_point()
            {
                return Err(format!("segment {i} has no lattice-point summand"));
            }
            if i <= m {
                let next_bp = slice.breakpoint(i + 1);
                if self.a[i] == self.a[i + 1] {
                    if self.lambda[i] != self.lambda[i + 1] {
                        return Err(format!("λ jumps between equal signs at {i}"));
                    }
                } else if q(self.lambda[i] + self.lambda[i + 1]) != *next_bp {
                    return Err(format!("λ_{i} + λ_{} ≠ {next_bp}", i + 1));
                }
                for fam in [&self.tilde0, &self.tilde_t] {
                    let (x, y) = (&fam[i], &fam[i + 1]);
                    let ok = match (&x.lo, &y.hi) {
                        (Some(a), Some(b)) => a >= b,
                        // an unbounded summand only occurs at the ends
                        _ => true,
                    };
                    if !ok {
                        return Err(format!("summands {i} and {} are out of order", i + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the decomposition for signs `a` and shift `λ_0`. The covering
/// condition on `a_0`, `a_{m+1}` is not enforced; see
/// [`Decomposition::satisfies_covering`].
pub fn realize(slice: &Slice, a: &[i8], lambda0: i64) -> Result<Decomposition> {
    let m = slice.m();
    if a.len() != m + 2 {
        return Err(Error::TupleLength {
            expected: m + 2,
            got: a.len(),
        });
    }
    if let Some(bad) = a.iter().position(|&x| x != 1 && x != -1) {
        return Err(Error::NotAdmissible {
            segment: bad,
            next: bad,
            breakpoint: format!("sign {} is not ±1", a[bad]),
        });
    }
    let mut lambda = vec![lambda0];
    for i in 0..=m {
        let next = if a[i] == a[i + 1] {
            lambda[i]
        } else {
            let b = slice.breakpoint(i + 1);
            match to_i64(b) {
                Some(b) if slice.is_lattice_breakpoint(i + 1) => b - lambda[i],
                _ => {
                    return Err(Error::NotAdmissible {
                        segment: i,
                        next: i + 1,
                        breakpoint: b.to_string(),
                    })
                }
            }
        };
        lambda.push(next);
    }
    let (mut tilde0, mut tilde_t) = (Vec::new(), Vec::new());
    for i in 0..=m + 1 {
        let shifted = slice.segment(i).shift(&q(-lambda[i]));
        let point = Interval::point(q(lambda[i]));
        if a[i] == 1 {
            tilde0.push(shifted);
            tilde_t.push(point);
        } else {
            tilde0.push(point);
            tilde_t.push(shifted);
        }
    }
    let d = Decomposition {
        a: a.to_vec(),
        lambda0,
        lambda,
        tilde0,
        tilde_t,
    };
    debug_assert_eq!(d.check(slice), Ok(()));
    Ok(d)
}

/// All admissible decompositions with `a_0 = a_{m+1} = 1` and `λ_0 = 0`,
/// in lexicographic order of `a` with `-1 < 1`.
pub fn enumerate_decompositions(slice: &Slice) -> Vec<Decomposition> {
    let m = slice.m();
    let lattice: Vec<usize> = (1..=m + 1)
        .filter(|&j| slice.is_lattice_breakpoint(j))
        .collect();
    let mut tuples: Vec<Vec<i8>> = Vec::new();
    for mask in 0u64..(1u64 << lattice.len()) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let mut a = vec![1i8; m + 2];
        let mut sign = 1i8;
        let mut next_change = lattice.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1);
        let mut change = next_change.next();
        for (i, slot) in a.iter_mut().enumerate() {
            if let Some((_, &j)) = change {
                if j == i {
                    sign = -sign;
                    change = next_change.next();
                }
            }
            *slot = sign;
        }
        tuples.push(a);
    }
    tuples.sort();
    tuples
        .into_iter()
        .map(|a| realize(slice, &a, 0).expect("changes only at lattice breakpoints"))
        .collect()
}

/// The decomposition `π(i)`: `λ_0 = 0`, `a_j = 1` for `j < i` and `-1` for
/// `j ≥ i`. Requires `ρ_i` to have height one.
pub fn pi_decomposition(slice: &Slice, i: usize) -> Result<Decomposition> {
    let a: Vec<i8> = (0..=slice.m() + 1)
        .map(|j| if j < i { 1 } else { -1 })
        .collect();
    realize(slice, &a, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::deformation::compute_slice;
    use crate::lattice_fan::Weight;

    fn blown_up_f1() -> Slice {
        compute_slice(&catalog::f1_blown_up_twice(), &Weight::new([0, 1])).unwrap()
    }

    #[test]
    fn four_decompositions() {
        let got: Vec<Vec<i8>> = enumerate_decompositions(&blown_up_f1()).into_iter().map(|d| d.a).collect();
        assert_eq!(
            got,
            vec![
                vec![1, -1, -1, -1, 1],
                vec![1, -1, -1, 1, 1],
                vec![1, 1, 1, -1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn pictured_decomposition() {
        let s = blown_up_f1();
        let d = realize(&s, &[1, -1, -1, 1, 1], 1).unwrap();
        assert_eq!(d.lambda, vec![1, 0, 0, 0, 0]);
        assert_eq!(d.tilde0[1], Interval::point(q(0)));
        assert_eq!(d.tilde0[2], Interval::point(q(0)));
        assert_eq!(d.tilde_t[3], Interval::point(q(0)));
        assert_eq!(d.check(&s), Ok(()));
    }

    #[test]
    fn trivial_decomposition() {
        let s = blown_up_f1();
        let d = realize(&s, &[1; 5], 0).unwrap();
        assert!(d.tilde_t.iter().all(|x| *x == Interval::point(q(0))));
        assert_eq!(d.tilde0, s.segments());
    }

    #[test]
    fn non_lattice_sign_change() {
        let err = realize(&blown_up_f1(), &[1, -1, 1, 1, 1], 0).unwrap_err();
        match err {
            Error::NotAdmissible { segment, next, breakpoint } => {
                assert_eq!((segment, next), (1, 2));
                assert_eq!(breakpoint, "1/2");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn projective_plane_only_trivial() {
        let s = compute_slice(&catalog::projective_plane(), &Weight::new([0, 1])).unwrap();
        let all = enumerate_decompositions(&s);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].a, vec![1, 1]);
    }

    #[test]
    fn brute_force_count() {
        let s = compute_slice(&catalog::hirzebruch(2), &Weight::new([1, 1])).unwrap();
        let m = s.m();
        let mut brute = 0;
        for mask in 0..(1u32 << (m + 2)) {
            let a: Vec<i8> = (0..m + 2).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
            if a[0] == 1 && a[m + 1] == 1 && realize(&s, &a, 0).is_ok() {
                brute += 1;
            }
        }
        assert_eq!(enumerate_decompositions(&s).len(), brute);
    }
}
