//! Validate a few fans and classify them.

use toric_deform::catalog;
use toric_deform::lattice_fan::{fano_status, iso_class, validate_fan, LatticeVector};

fn main() {
    for (name, s) in [
        ("P2", catalog::projective_plane()),
        ("F3", catalog::hirzebruch(3)),
        ("hexagon", catalog::hexagon()),
        ("F1 blown up twice", catalog::f1_blown_up_twice()),
    ] {
        println!(
            "{name:>18}: l = {}, {}, iso class {}",
            s.len(),
            fano_status(s.fan()),
            iso_class(&s).name()
        );
    }

    let half_plane = validate_fan(
        2,
        vec![LatticeVector::new([1, 0]), LatticeVector::new([0, 1]), LatticeVector::new([-1, 0])],
        vec![vec![0, 1], vec![1, 2]],
    );
    match half_plane {
        Ok(_) => println!("half plane accepted?"),
        Err(e) => println!("half plane rejected: {e}"),
    }

    let (rays, cones) = catalog::weakly_fano_threefold_literal();
    if let Err(e) = validate_fan(3, rays, cones) {
        println!("literal threefold data rejected: {e}");
    }
    let x = catalog::weakly_fano_threefold();
    println!("repaired threefold: {}", fano_status(&x));
}
