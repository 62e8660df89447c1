//! General fibers of the one-parameter deformations of Hirzebruch surfaces.

use toric_deform::catalog;
use toric_deform::deformation::{compute_slice, general_fiber, pi_decomposition};
use toric_deform::lattice_fan::Weight;

fn main() {
    for r in 2..=6 {
        let s = catalog::hirzebruch(r);
        let fibers: Vec<String> = (1..r)
            .map(|alpha| {
                let slice = compute_slice(&s, &Weight::new([alpha, 1])).unwrap();
                let d = pi_decomposition(&slice, 2).unwrap();
                let f = general_fiber(&slice, &d).unwrap();
                format!("α={alpha}: {}", f.iso.name())
            })
            .collect();
        println!("F{r} -> {}", fibers.join(", "));
    }
}
