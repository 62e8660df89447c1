//! Write SVG figures of a fan with a degree line and of a slice.

use toric_deform::catalog;
use toric_deform::cli_reports::svg::{fan_svg, slice_svg};
use toric_deform::deformation::{compute_slice, pi_decomposition};
use toric_deform::lattice_fan::Weight;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir();
    let fan = fan_svg(&catalog::f1_blown_up_twice(), Some(&Weight::new([0, -1])));
    let slice = compute_slice(&catalog::hirzebruch(5), &Weight::new([2, 1])).unwrap();
    let pic = slice_svg(&slice, &pi_decomposition(&slice, 2).unwrap());
    for (name, text) in [("fan.svg", fan), ("slice.svg", pic)] {
        let path = dir.join(name);
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
