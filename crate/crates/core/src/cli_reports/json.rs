//! JSON encodings of library results. Ray indices are 1-based and rationals
//! are `"p/q"` strings.

use serde_json::{json, Map, Value};

use crate::cohomology::CoboundaryCertificate;
use crate::deformation::{
    BundleEntry, ChartData, Decomposition, GeneralFiber, Interval, KSCocycle, KsBasis, Slice,
};
use crate::lattice_fan::{CylinderWitness, Fan, IsoClass, ValidationReport};
use crate::linalg::Rational;
use crate::tangent::{Evidence, RigidityReport, SupportMode, T1Report};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn interval(s: &Interval) -> Value {
    json!({
        "lo": s.lo.as_ref().map(rational),
        "hi": s.hi.as_ref().map(rational),
    })
}

pub fn validation(report: &ValidationReport) -> Value {
    let v: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.to_string(),
                "rays": v.rays.iter().map(|r| r + 1).collect::<Vec<_>>(),
                "cones": v.cones.iter().map(|c| c + 1).collect::<Vec<_>>(),
                "detail": v.detail,
            })
        })
        .collect();
    Value::Array(v)
}

pub fn iso(iso: &IsoClass) -> Value {
    json!({ "cycle": iso.cycle, "name": iso.name() })
}

pub fn fan_summary(fan: &Fan) -> Value {
    json!({
        "dim": fan.dim(),
        "rays": fan.rays().iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        "cones": fan.max_cones().iter().map(|c| c.rays().iter().map(|r| r + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn t1_report(rep: &T1Report, dim: usize) -> Value {
    let degrees: Vec<Value> = rep
        .entries
        .iter()
        .map(|d| {
            let rays: Map<String, Value> = d
                .per_ray
                .iter()
                .map(|(&i, &h)| ((i + 1).to_string(), json!(h)))
                .collect();
            json!({ "u": d.u.0, "dim": d.dim, "rays": rays })
        })
        .collect();
    let boxed = match rep.mode {
        SupportMode::Box { radius } => json!(vec![radius; dim]),
        _ => Value::Null,
    };
    json!({
        "degrees": degrees,
        "total": rep.total,
        "method": rep.method.to_string(),
        "box": boxed,
    })
}

fn cylinders(ws: &[CylinderWitness]) -> Value {
    json!(ws
        .iter()
        .map(|w| [w.middle + 1, w.first + 1, w.second + 1])
        .collect::<Vec<_>>())
}

pub fn rigidity(rep: &RigidityReport, dim: usize) -> Value {
    let evidence = match &rep.evidence {
        Evidence::ExactSupport { total } => json!({ "kind": "exact_support", "total": total }),
        Evidence::NefWithoutCylinder => json!({ "kind": "nef_without_cylinder" }),
        Evidence::Witness { degree, dim } => {
            json!({ "kind": "witness", "degree": degree.0, "dim": dim })
        }
        Evidence::EmptyBox { radius } => json!({ "kind": "empty_box", "radius": radius }),
    };
    json!({
        "verdict": rep.verdict.to_string(),
        "fano_status": rep.fano_status.to_string(),
        "cylinders": cylinders(&rep.cylinders),
        "evidence": evidence,
        "t1": rep.t1.as_ref().map(|t| t1_report(t, dim)),
    })
}

pub fn slice(s: &Slice) -> Value {
    json!({
        "R": s.r.0,
        "m": s.m(),
        "breakpoints": s.breakpoints().iter().map(rational).collect::<Vec<_>>(),
        "crossing_rays": (1..=s.m() + 1).map(|k| s.ray_index(k) + 1).collect::<Vec<_>>(),
        "segments": s.segments().iter().map(interval).collect::<Vec<_>>(),
    })
}

pub fn decomposition(s: &Slice, d: &Decomposition) -> Value {
    json!({
        "R": s.r.0,
        "a": d.a,
        "lambda0": d.lambda0,
        "lambda": d.lambda,
        "breakpoints": s.breakpoints().iter().map(rational).collect::<Vec<_>>(),
        "covering": d.satisfies_covering(),
        "summands": {
            "xi0": d.tilde0.iter().map(interval).collect::<Vec<_>>(),
            "xit": d.tilde_t.iter().map(interval).collect::<Vec<_>>(),
        },
    })
}

fn bundle_entries(s: &Slice, entries: &[BundleEntry]) -> Value {
    let rows: Vec<Value> = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_empty())
        .map(|(pos, e)| {
            let terms: Map<String, Value> =
                e.iter().map(|(&k, &c)| ((k + 1).to_string(), json!(c))).collect();
            json!({ "overlap": s.ray_index(pos + 1) + 1, "terms": terms })
        })
        .collect();
    Value::Array(rows)
}

pub fn ks(s: &Slice, k: &KSCocycle) -> Value {
    let tangent: Vec<Value> = k
        .tangent
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != [0, 0])
        .map(|(pos, e)| json!({ "overlap": s.ray_index(pos + 1) + 1, "x": e[0], "y": e[1] }))
        .collect();
    let correction: Map<String, Value> = k
        .correction
        .iter()
        .map(|(&r, &c)| ((r + 1).to_string(), json!(c)))
        .collect();
    json!({
        "degree": k.degree.0,
        "tangent": tangent,
        "bundle": bundle_entries(s, &k.bundle),
        "correction": correction,
        "bundle_exact": bundle_entries(s, &k.bundle_exact),
        "sum_zero": k.tangent_sum() == [0, 0],
        "euler_compatible": k.euler_compatible(s),
    })
}

pub fn certificate(c: &CoboundaryCertificate) -> Value {
    match c {
        CoboundaryCertificate::Coboundary { preimage } => json!({
            "coboundary": true,
            "preimage": preimage
                .iter()
                .map(|((cone, div), v)| json!({ "cone": cone + 1, "divisor": div + 1, "value": rational(v) }))
                .collect::<Vec<_>>(),
        }),
        CoboundaryCertificate::NotCoboundary { functional } => json!({
            "coboundary": false,
            "functional": functional
                .iter()
                .map(|(((a, b), div), v)| json!({ "cones": [a + 1, b + 1], "divisor": div + 1, "value": rational(v) }))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn basis(s: &Slice, b: &KsBasis) -> Value {
    let elements: Vec<Value> = b
        .elements
        .iter()
        .map(|e| {
            json!({
                "i": e.label,
                "ray": e.ray + 1,
                "decomposition": decomposition(s, &e.decomposition),
                "cocycle": ks(s, &e.cocycle),
                "certificate": certificate(&e.certificate),
            })
        })
        .collect();
    json!({
        "degree": b.degree.0,
        "elements": elements,
        "rank": b.rank,
        "t1_dim": b.t1_dim,
        "certified": b.is_certified(),
    })
}

pub fn charts(c: &ChartData) -> Value {
    let cones: Vec<Value> = c
        .cones
        .iter()
        .map(|k| {
            json!({
                "cone": k.index,
                "a": k.a,
                "lambda": k.lambda,
                "w": [k.w[0].0.clone(), k.w[1].0.clone()],
                "z": k.z.iter().map(|z| [z.x, z.y, z.y_minus_t]).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "cones": cones, "gluing": c.gluing_holds() })
}

pub fn fiber(f: &GeneralFiber) -> Value {
    json!({
        "rays": f.surface.ordered_rays().iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        "iso_class": iso(&f.iso),
    })
}
