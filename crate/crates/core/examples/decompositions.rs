//! Slice of a surface and its admissible decompositions.

use toric_deform::catalog;
use toric_deform::deformation::{compute_slice, enumerate_decompositions, pi_decomposition};
use toric_deform::lattice_fan::Weight;

fn main() {
    let s = catalog::f1_blown_up_twice();
    let slice = compute_slice(&s, &Weight::new([0, 1])).unwrap();
    let bps: Vec<String> = slice.breakpoints().iter().map(ToString::to_string).collect();
    println!("m = {}, breakpoints {}", slice.m(), bps.join(" "));
    for d in enumerate_decompositions(&slice) {
        let xi0: Vec<String> = d.tilde0.iter().map(ToString::to_string).collect();
        let xit: Vec<String> = d.tilde_t.iter().map(ToString::to_string).collect();
        println!("a = {:?}, λ = {:?}", d.a, d.lambda);
        println!("    Ξ~0: {}", xi0.join("  "));
        println!("    Ξ~t: {}", xit.join("  "));
    }

    let f5 = catalog::hirzebruch(5);
    let slice = compute_slice(&f5, &Weight::new([2, 1])).unwrap();
    let d = pi_decomposition(&slice, 2).unwrap();
    println!("F5, R = [2,1], π(2): a = {:?}, covering {}", d.a, d.satisfies_covering());
}
