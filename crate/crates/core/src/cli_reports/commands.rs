use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::fanfile::FanFile;
use super::json;
use super::svg;
use crate::deformation::{
    chart_generators, compute_slice, enumerate_decompositions, general_fiber, ks_basis,
    ks_cocycle, pi_decomposition, realize, Decomposition, Slice,
};
use crate::error::{Error, ErrorCode};
use crate::lattice_fan::{iso_class, order_surface, Fan, SurfaceFan, Weight};
use crate::tangent::{
    box_recheck, is_rigid, t1_report_for_degree, t1_total_with, SupportMode, T1Method,
};

/// Envelope of every command's output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub warnings: Vec<String>,
    pub version: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// A failed command: exit status, message, and for invalid fans the report
/// listing the violations.
#[derive(Debug)]
pub struct CliFailure {
    pub exit_code: i32,
    pub message: String,
    pub report: Option<Box<Report>>,
}

impl fmt::Display for CliFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub type CmdResult = Result<Report, CliFailure>;

pub fn exit_code(e: &Error) -> i32 {
    match e.code() {
        ErrorCode::InvalidFan => 1,
        ErrorCode::NotDim2
        | ErrorCode::BoxRequired
        | ErrorCode::DimensionLimit
        | ErrorCode::DimensionMismatch => 2,
        ErrorCode::NotPrimitive
        | ErrorCode::NotACocycle
        | ErrorCode::NotAdmissible
        | ErrorCode::NontrivialTail
        | ErrorCode::FiberInvalid => 3,
    }
}

fn fail(e: Error) -> CliFailure {
    CliFailure {
        exit_code: exit_code(&e),
        message: format!("{}: {}", e.code(), e),
        report: None,
    }
}

fn usage(message: String) -> CliFailure {
    CliFailure {
        exit_code: 2,
        message,
        report: None,
    }
}

struct Input {
    file: FanFile,
    digest: String,
}

fn read_input(path: &Path) -> Result<Input, CliFailure> {
    let bytes = std::fs::read(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| usage(format!("{} is not UTF-8", path.display())))?;
    let file = FanFile::parse(&text)
        .map_err(|e| usage(format!("cannot parse {}: {e}", path.display())))?;
    Ok(Input {
        file,
        digest: hex::encode(Sha256::digest(&bytes)),
    })
}

fn report(command: String, input: &Input, result: Value, warnings: Vec<String>) -> Report {
    Report {
        command,
        input_digest: input.digest.clone(),
        result,
        warnings,
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn load_fan(input: &Input) -> Result<Fan, CliFailure> {
    input.file.to_fan().map_err(fail)
}

fn load_surface(input: &Input) -> Result<SurfaceFan, CliFailure> {
    let fan = load_fan(input)?;
    order_surface(&fan).map_err(fail)
}

fn weight_arg(u: &Weight) -> String {
    u.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn check_dim(fan: &Fan, u: &Weight) -> Result<(), CliFailure> {
    if u.dim() != fan.dim() {
        return Err(fail(Error::DimensionMismatch {
            expected: fan.dim(),
            got: u.dim(),
        }));
    }
    Ok(())
}

pub fn cmd_validate(path: &Path) -> CmdResult {
    let input = read_input(path)?;
    let command = format!("validate {}", path.display());
    match input.file.to_fan() {
        Ok(fan) => {
            let mut result = json!({
                "valid": true,
                "dim": fan.dim(),
                "rays": fan.ray_count(),
                "cones": fan.max_cones().len(),
                "violations": [],
            });
            if let Some(name) = &input.file.name {
                result["name"] = json!(name);
            }
            if fan.dim() == 2 {
                let s = order_surface(&fan).map_err(fail)?;
                result["l"] = json!(s.len());
                result["iso_class"] = json::iso(&iso_class(&s));
            }
            Ok(report(command, &input, result, vec![]))
        }
        Err(Error::InvalidFan(v)) => {
            let kinds: Vec<String> = v.kinds().iter().map(ToString::to_string).collect();
            let result = json!({
                "valid": false,
                "dim": input.file.dim,
                "violations": json::validation(&v),
            });
            Err(CliFailure {
                exit_code: 1,
                message: format!("invalid fan: {}", kinds.join(", ")),
                report: Some(Box::new(report(command, &input, result, vec![]))),
            })
        }
        Err(e) => Err(fail(e)),
    }
}

/// What `t1` should compute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum T1Query {
    Degree(Weight),
    All { radius: Option<i64>, recheck: bool },
}

pub fn cmd_t1(path: &Path, query: &T1Query, method: T1Method) -> CmdResult {
    let input = read_input(path)?;
    let fan = load_fan(&input)?;
    let mut warnings = Vec::new();
    let (command, rep) = match query {
        T1Query::Degree(u) => {
            check_dim(&fan, u)?;
            (
                format!("t1 {} --degree {}", path.display(), weight_arg(u)),
                t1_report_for_degree(&fan, u, method).map_err(fail)?,
            )
        }
        T1Query::All { radius, recheck } => {
            let rep = t1_total_with(&fan, *radius, method).map_err(fail)?;
            let mut command = format!("t1 {} --all", path.display());
            if let SupportMode::Box { radius } = rep.mode {
                command.push_str(&format!(" --box {radius}"));
                warnings.push(format!(
                    "box search: only degrees with coordinates in [-{radius}, {radius}] were examined"
                ));
                if *recheck {
                    command.push_str(" --recheck");
                    let extra = box_recheck(&fan, radius).map_err(fail)?;
                    if extra.is_empty() {
                        warnings.push(format!("re-check with radius {} found nothing new", 2 * radius));
                    } else {
                        let list: Vec<String> = extra.iter().map(|u| format!("[{u}]")).collect();
                        warnings.push(format!(
                            "re-check with radius {} found further degrees: {}",
                            2 * radius,
                            list.join(" ")
                        ));
                    }
                }
            }
            (command, rep)
        }
    };
    let command = match method {
        T1Method::Cech => format!("{command} --method cech"),
        T1Method::Graph => command,
    };
    Ok(report(command, &input, json::t1_report(&rep, fan.dim()), warnings))
}

pub fn cmd_rigidity(path: &Path, radius: Option<i64>) -> CmdResult {
    let input = read_input(path)?;
    let fan = load_fan(&input)?;
    let rep = is_rigid(&fan, radius).map_err(fail)?;
    let mut command = format!("rigidity {}", path.display());
    if let Some(r) = radius {
        command.push_str(&format!(" --box {r}"));
    }
    let mut warnings = Vec::new();
    if let Some(t1) = &rep.t1 {
        if let SupportMode::Box { radius } = t1.mode {
            warnings.push(format!(
                "box search: only degrees with coordinates in [-{radius}, {radius}] were examined"
            ));
        }
    }
    Ok(report(command, &input, json::rigidity(&rep, fan.dim()), warnings))
}

/// What `deform` should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformMode {
    List,
    Basis,
    Tuple { a: Vec<i8>, lambda0: i64 },
}

fn decomposition_entry(slice: &Slice, d: &Decomposition, fiber: bool) -> Result<Value, CliFailure> {
    let mut v = json!({
        "decomposition": json::decomposition(slice, d),
        "cocycle": json::ks(slice, &ks_cocycle(slice, d)),
    });
    if fiber {
        v["fiber"] = json::fiber(&general_fiber(slice, d).map_err(fail)?);
    }
    Ok(v)
}

pub fn cmd_deform(path: &Path, r: &Weight, mode: &DeformMode, fiber: bool) -> CmdResult {
    let input = read_input(path)?;
    let surface = load_surface(&input)?;
    check_dim(surface.fan(), r)?;
    let slice = compute_slice(&surface, r).map_err(fail)?;
    let mut command = format!("deform {} --degree {}", path.display(), weight_arg(r));
    let mut warnings = Vec::new();
    let mut result = json!({ "slice": json::slice(&slice) });
    match mode {
        DeformMode::List => {
            command.push_str(" --list");
            let entries: Result<Vec<Value>, CliFailure> = enumerate_decompositions(&slice)
                .iter()
                .map(|d| decomposition_entry(&slice, d, fiber))
                .collect();
            result["decompositions"] = Value::Array(entries?);
        }
        DeformMode::Basis => {
            command.push_str(" --basis");
            let b = ks_basis(&slice).map_err(fail)?;
            if !b.is_certified() {
                warnings.push("basis certification failed".into());
            }
            let mut v = json::basis(&slice, &b);
            if fiber {
                for (k, e) in b.elements.iter().enumerate() {
                    v["elements"][k]["fiber"] =
                        json::fiber(&general_fiber(&slice, &e.decomposition).map_err(fail)?);
                }
            }
            result["basis"] = v;
        }
        DeformMode::Tuple { a, lambda0 } => {
            let list: Vec<String> = a.iter().map(ToString::to_string).collect();
            command.push_str(&format!(" --tuple {} --lambda0 {lambda0}", list.join(",")));
            let d = realize(&slice, a, *lambda0).map_err(fail)?;
            if !d.satisfies_covering() {
                warnings.push("a_0 or a_(m+1) is -1: the summand families do not both cover the line".into());
            }
            let mut v = decomposition_entry(&slice, &d, fiber)?;
            v["charts"] = json::charts(&chart_generators(&slice, &d));
            result["decomposition"] = v;
        }
    }
    if fiber {
        command.push_str(" --fiber");
    }
    Ok(report(command, &input, result, warnings))
}

/// What `plot` should draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlotMode {
    Fan,
    Degree(Weight),
    Slice {
        r: Weight,
        tuple: Option<(Vec<i8>, i64)>,
    },
}

pub fn cmd_plot(path: &Path, mode: &PlotMode, out: &Path) -> CmdResult {
    let input = read_input(path)?;
    let surface = load_surface(&input)?;
    let mut command = format!("plot {}", path.display());
    let svg_text = match mode {
        PlotMode::Fan => svg::fan_svg(&surface, None),
        PlotMode::Degree(u) => {
            check_dim(surface.fan(), u)?;
            command.push_str(&format!(" --degree {}", weight_arg(u)));
            svg::fan_svg(&surface, Some(u))
        }
        PlotMode::Slice { r, tuple } => {
            check_dim(surface.fan(), r)?;
            command.push_str(&format!(" --slice {}", weight_arg(r)));
            let slice = compute_slice(&surface, r).map_err(fail)?;
            let d = match tuple {
                Some((a, l0)) => realize(&slice, a, *l0).map_err(fail)?,
                None => default_pictured(&slice).map_err(fail)?,
            };
            if tuple.is_some() {
                let list: Vec<String> = d.a.iter().map(ToString::to_string).collect();
                command.push_str(&format!(" --tuple {} --lambda0 {}", list.join(","), d.lambda0));
            }
            svg::slice_svg(&slice, &d)
        }
    };
    std::fs::write(out, &svg_text)
        .map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
    command.push_str(&format!(" --out {}", out.display()));
    let result = json!({
        "out": PathBuf::from(out).display().to_string(),
        "bytes": svg_text.len(),
        "sha256": hex::encode(Sha256::digest(svg_text.as_bytes())),
    });
    Ok(report(command, &input, result, vec![]))
}

/// The first basis deformation `π(i)` if there is one, else the trivial
/// decomposition.
fn default_pictured(slice: &Slice) -> crate::error::Result<Decomposition> {
    match (2..=slice.m()).find(|&i| slice.height(i) == 1) {
        Some(i) => pi_decomposition(slice, i),
        None => realize(slice, &vec![1; slice.m() + 2], 0),
    }
}
