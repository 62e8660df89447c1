//! Rigidity verdicts with their evidence.

use toric_deform::catalog;
use toric_deform::lattice_fan::Fan;
use toric_deform::tangent::is_rigid;

fn main() {
    let cases: Vec<(&str, Fan, Option<i64>)> = vec![
        ("hexagon", catalog::hexagon().fan().clone(), None),
        ("F3", catalog::hirzebruch(3).fan().clone(), None),
        ("weakly Fano threefold", catalog::weakly_fano_threefold(), None),
        ("two-slice threefold", catalog::threefold_two_slices(), Some(3)),
        ("P3", catalog::projective_space(3), None),
    ];
    for (name, fan, radius) in cases {
        let rep = is_rigid(&fan, radius).unwrap();
        println!(
            "{name:>22}: {} ({}, {} cylinders) {:?}",
            rep.verdict,
            rep.fano_status,
            rep.cylinders.len(),
            rep.evidence
        );
    }
    let corpus = catalog::surface_corpus(7);
    let rigid = corpus
        .iter()
        .filter(|s| is_rigid(s.fan(), None).unwrap().verdict.to_string() == "RIGID")
        .count();
    println!("{} surfaces with at most 7 rays, {rigid} rigid", corpus.len());
}
