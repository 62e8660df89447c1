//! Graph formula against the Čech complex on a threefold.

use toric_deform::catalog;
use toric_deform::cohomology::{cech_h_dim, gamma_graph, h1_dim_graph, GraphFlavor};
use toric_deform::lattice_fan::Weight;
use toric_deform::tangent::t1_total;

fn main() {
    let x = catalog::threefold_two_slices();
    let u = Weight::new([0, 0, -1]);
    let g = gamma_graph(&x, 6, &u, GraphFlavor::Full);
    println!(
        "Γ_7([{u}]): {} vertices, {} edges, {} components",
        g.vertices.len(),
        g.edges.len(),
        g.component_count()
    );
    for i in 0..x.ray_count() {
        let graph = h1_dim_graph(&x, i, &u);
        let cech = cech_h_dim(&x, i, &u, 1).unwrap();
        let h2 = cech_h_dim(&x, i, &u, 2).unwrap();
        println!("D{}: graph {graph}, Čech H¹ {cech}, Čech H² {h2}", i + 1);
    }
    let rep = t1_total(&x, Some(3)).unwrap();
    for d in &rep.entries {
        println!("support in [-3,3]^3: [{}] dim {}", d.u, d.dim);
    }
}
