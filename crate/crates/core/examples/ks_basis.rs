//! Kodaira–Spencer cocycles of the π(i) deformations and their certification.

use toric_deform::catalog;
use toric_deform::deformation::{compute_slice, ks_basis};
use toric_deform::lattice_fan::Weight;
use toric_deform::tangent::t1_dim_degree;

fn main() {
    let s = catalog::hirzebruch(4);
    for alpha in 1..4 {
        let r = Weight::new([alpha, 1]);
        let slice = compute_slice(&s, &r).unwrap();
        let b = ks_basis(&slice).unwrap();
        let expected = t1_dim_degree(s.fan(), &Weight::new([-alpha, -1])).dim;
        println!(
            "F4, R = [{r}]: {} elements, rank {}, dim T¹ {expected}, certified {}",
            b.elements.len(),
            b.rank,
            b.is_certified()
        );
        for e in &b.elements {
            println!(
                "  π({}) tangent {:?} sum {:?} euler {}",
                e.label,
                e.cocycle.tangent,
                e.cocycle.tangent_sum(),
                e.cocycle.euler_compatible(&slice)
            );
        }
    }
}
