//! Load a fan file, save it canonically and compute its T¹ report.

use toric_deform::catalog;
use toric_deform::cli_reports::{json, FanFile};
use toric_deform::tangent::t1_total;

fn main() {
    let file = FanFile::from_fan(catalog::hirzebruch(3).fan(), Some("F3".into()));
    let text = file.to_canonical_string();
    print!("{text}");
    let back = FanFile::parse(&text).unwrap();
    assert_eq!(back.to_canonical_string(), text);
    let fan = back.to_fan().unwrap();
    let rep = t1_total(&fan, None).unwrap();
    println!("{}", serde_json::to_string(&json::t1_report(&rep, fan.dim())).unwrap());
}
