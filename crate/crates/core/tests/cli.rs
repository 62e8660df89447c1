use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use toric_deform::cli_reports::FanFile;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-deform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn fx(name: &str) -> String {
    fixture(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_reports_and_exit_codes() {
    let out = run(&["validate", &fx("f1_blown_up_twice.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["valid"], true);
    assert_eq!(r["result"]["l"], 6);
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));

    let out = run(&["validate", &fx("missing_dim.json")]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["validate", &fx("not_complete.json")]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["valid"], false);
    assert_eq!(r["result"]["violations"][0]["kind"], "NOT_COMPLETE");

    let out = run(&["validate", "/does/not/exist.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn t1_examples() {
    let r = report(&run(&["t1", &fx("f1_blown_up_twice.json"), "--all"]));
    assert_eq!(r["result"]["total"], 3);
    assert_eq!(r["result"]["degrees"].as_array().unwrap().len(), 3);
    assert_eq!(r["result"]["box"], Value::Null);

    let r = report(&run(&["t1", &fx("f4.json"), "--all"]));
    let us: Vec<Value> = r["result"]["degrees"].as_array().unwrap().iter().map(|d| d["u"].clone()).collect();
    assert_eq!(us, vec![serde_json::json!([-3, -1]), serde_json::json!([-2, -1]), serde_json::json!([-1, -1])]);
    assert_eq!(r["result"]["total"], 3);

    let r = report(&run(&["t1", &fx("threefold_two_slices.json"), "--degree", "0,0,-1"]));
    assert_eq!(r["result"]["degrees"][0]["dim"], 2);
    assert_eq!(r["result"]["degrees"][0]["rays"]["7"], 2);

    let out = run(&["t1", &fx("threefold_two_slices.json"), "--all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BOX_REQUIRED"));

    let r = report(&run(&["t1", &fx("threefold_two_slices.json"), "--all", "--box", "3", "--method", "cech"]));
    assert_eq!(r["result"]["box"], serde_json::json!([3, 3, 3]));
    assert_eq!(r["result"]["method"], "cech");
    assert_eq!(r["result"]["total"], 2);
    assert!(!r["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn rigidity_examples() {
    let r = report(&run(&["rigidity", &fx("hexagon.json")]));
    assert_eq!(r["result"]["verdict"], "RIGID");
    assert_eq!(r["result"]["fano_status"], "FANO");

    let r = report(&run(&["rigidity", &fx("f3.json")]));
    assert_eq!(r["result"]["verdict"], "NON_RIGID");
    assert_eq!(r["result"]["evidence"]["kind"], "witness");

    let r = report(&run(&["rigidity", &fx("weakly_fano_threefold.json")]));
    assert_eq!(r["result"]["verdict"], "RIGID");
    assert_eq!(r["result"]["fano_status"], "WEAKLY_FANO");
    assert_eq!(r["result"]["cylinders"], serde_json::json!([]));
}

#[test]
fn deform_examples() {
    let r = report(&run(&["deform", &fx("f1_blown_up_twice.json"), "--degree", "0,1", "--list"]));
    assert_eq!(r["result"]["decompositions"].as_array().unwrap().len(), 4);

    let r = report(&run(&["deform", &fx("f2.json"), "--degree", "1,1", "--basis", "--fiber"]));
    let basis = &r["result"]["basis"];
    assert_eq!(basis["elements"].as_array().unwrap().len(), 1);
    assert_eq!(basis["elements"][0]["i"], 2);
    assert_eq!(basis["certified"], true);
    assert_eq!(basis["elements"][0]["fiber"]["iso_class"]["name"], "P1xP1");

    let out = run(&["deform", &fx("f1_blown_up_twice.json"), "--degree", "0,1", "--tuple", "1,-1,1,1,1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NOT_ADMISSIBLE"));

    let out = run(&["deform", &fx("hexagon.json"), "--degree", "1,1", "--list", "--fiber"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NONTRIVIAL_TAIL"));

    let out = run(&["deform", &fx("f2.json"), "--degree", "2,2", "--list"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["deform", &fx("threefold_two_slices.json"), "--degree", "0,1", "--list"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plots_are_deterministic() {
    let a = scratch("blown_up_a.svg");
    let b = scratch("blown_up_b.svg");
    for p in [&a, &b] {
        let out = run(&["plot", &fx("f1_blown_up_twice.json"), "--degree", "0,-1", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (sa, sb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(sa, sb);
    assert!(String::from_utf8(sa).unwrap().contains("stroke-dasharray"));

    let s = scratch("f5_slice.svg");
    let out = run(&["--jobs", "2", "plot", &fx("f5.json"), "--slice", "2,1", "--out", s.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&s).unwrap();
    assert!(text.starts_with("<?xml") || text.starts_with("<svg"));
    assert_eq!(report(&out)["result"]["bytes"], text.len());

    let out = run(&["plot", &fx("f5.json"), "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["plot", &fx("threefold_two_slices.json"), "--out", scratch("x.svg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let one = run(&["--jobs", "1", "t1", &fx("threefold_two_slices.json"), "--all", "--box", "3"]);
    let four = run(&["--jobs", "4", "t1", &fx("threefold_two_slices.json"), "--all", "--box", "3"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn fixtures_round_trip_canonically() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let Ok(file) = FanFile::parse(&text) else {
            continue;
        };
        assert_eq!(file.to_canonical_string(), text, "{}", path.display());
    }
}
