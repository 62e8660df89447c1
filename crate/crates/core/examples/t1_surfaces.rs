//! Degrees and dimensions of T¹ for Hirzebruch surfaces and a blow-up.

use toric_deform::catalog;
use toric_deform::tangent::t1_total;

fn main() {
    for r in 1..=5 {
        let rep = t1_total(catalog::hirzebruch(r).fan(), None).unwrap();
        let degrees: Vec<String> = rep.entries.iter().map(|d| format!("[{}]", d.u)).collect();
        println!("F{r}: total {} in {}", rep.total, degrees.join(" "));
    }
    let s = catalog::f1_blown_up_twice();
    let rep = t1_total(s.fan(), None).unwrap();
    for d in &rep.entries {
        let rays: Vec<String> = d.per_ray.iter().map(|(i, h)| format!("D{}:{h}", i + 1)).collect();
        println!("blown-up F1 u = [{}]: dim {} ({})", d.u, d.dim, rays.join(", "));
    }
}
