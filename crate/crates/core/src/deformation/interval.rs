use std::fmt;

use num_traits::Zero;

use crate::linalg::Rational;

/// A closed interval of `ℚ`, possibly unbounded on either side
/// (`None` stands for `-∞` below and `+∞` above).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn new(lo: Option<Rational>, hi: Option<Rational>) -> Self {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            assert!(a <= b, "empty interval [{a}, {b}]");
        }
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: Some(x.clone()),
            hi: Some(x),
        }
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lo, &self.hi), (Some(a), Some(b)) if a == b)
    }

    pub fn is_lattice_point(&self) -> bool {
        self.is_point() && self.lo.as_ref().is_some_and(|x| x.is_integer())
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn shift(&self, c: &Rational) -> Self {
        Interval {
            lo: self.lo.as_ref().map(|x| x + c),
            hi: self.hi.as_ref().map(|x| x + c),
        }
    }

    /// Minkowski sum; an infinite end absorbs the other summand.
    pub fn minkowski(&self, other: &Interval) -> Self {
        let add = |a: &Option<Rational>, b: &Option<Rational>| match (a, b) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        Interval {
            lo: add(&self.lo, &other.lo),
            hi: add(&self.hi, &other.hi),
        }
    }

    /// `self ≥ other`: every point of `self` is at least every point of `other`.
    pub fn dominates(&self, other: &Interval) -> bool {
        match (&self.lo, &other.hi) {
            (Some(a), Some(b)) => a >= b,
            _ => false,
        }
    }

    /// Finite endpoints, deduplicated, in decreasing order.
    pub fn finite_endpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.hi.iter().chain(self.lo.iter()).cloned().collect();
        out.dedup();
        out
    }

    pub fn length(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().is_none_or(|a| a <= x) && self.hi.as_ref().is_none_or(|b| x <= b)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo.as_ref().unwrap());
        }
        match &self.lo {
            Some(a) => write!(f, "[{a}, ")?,
            None => f.write_str("(-inf, ")?,
        }
        match &self.hi {
            Some(b) => write!(f, "{b}]"),
            None => f.write_str("+inf)"),
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Interval::point(Rational::zero())
    }
}
