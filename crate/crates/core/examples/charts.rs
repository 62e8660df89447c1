//! Chart generators of a realized decomposition and their gluing.

use toric_deform::catalog;
use toric_deform::deformation::{chart_generators, compute_slice, realize};
use toric_deform::lattice_fan::Weight;

fn main() {
    let s = catalog::f1_blown_up_twice();
    let slice = compute_slice(&s, &Weight::new([0, 1])).unwrap();
    let d = realize(&slice, &[1, -1, -1, 1, 1], -2).unwrap();
    let charts = chart_generators(&slice, &d);
    for c in &charts.cones {
        println!("σ_{} a = {:+} λ = {:+} z = {:?}", c.index, c.a, c.lambda, c.z);
    }
    println!(
        "gluing {}, special fiber is the original surface {}",
        charts.gluing_holds(),
        charts.special_fiber_is_original()
    );
}
