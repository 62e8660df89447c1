//! Homogeneous one-parameter deformations of smooth complete toric surfaces
//! from Minkowski decompositions of a height-one slice.

mod charts;
mod decomposition;
mod fiber;
mod interval;
mod ks;
mod slice;

pub use charts::{chart_generators, ChartCone, ChartData, Monomial};
pub use decomposition::{enumerate_decompositions, pi_decomposition, realize, Decomposition};
pub use fiber::{general_fiber, GeneralFiber};
pub use interval::Interval;
pub use ks::{ks_basis, ks_cocycle, BasisElement, BundleEntry, KSCocycle, KsBasis, TangentEntry};
pub use slice::{compute_slice, Slice};
