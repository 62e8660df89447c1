//! Deterministic SVG figures: a surface fan with an optional degree line, and
//! a slice with its two summand families.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::deformation::{Decomposition, Interval, Slice};
use crate::lattice_fan::{SurfaceFan, Weight};
use crate::linalg::Rational;

const UNIT: f64 = 100.0;

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn header(min_x: f64, min_y: f64, w: f64, h: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">\n\
         <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n",
        num(min_x),
        num(min_y),
        num(w),
        num(h),
        num(w),
        num(h)
    )
}

/// Clips the line `u₁x + u₂y = c` to a rectangle; `None` if it misses.
fn clip_line(u: [f64; 2], c: f64, x: [f64; 2], y: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
    let mut pts: Vec<[f64; 2]> = Vec::new();
    if u[1] != 0.0 {
        for &xx in &x {
            let yy = (c - u[0] * xx) / u[1];
            if yy >= y[0] - 1e-9 && yy <= y[1] + 1e-9 {
                pts.push([xx, yy]);
            }
        }
    }
    if u[0] != 0.0 {
        for &yy in &y {
            let xx = (c - u[1] * yy) / u[0];
            if xx >= x[0] - 1e-9 && xx <= x[1] + 1e-9 {
                pts.push([xx, yy]);
            }
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a[0] - b[0]).abs() < 1e-9 && (a[1] - b[1]).abs() < 1e-9);
    match pts.as_slice() {
        [first, .., last] => Some((*first, *last)),
        _ => None,
    }
}

/// The fan's rays as arrows, labelled by 1-based index, over the lattice
/// points of the view; with a degree `u`, the line `⟨·, u⟩ = -1` is dashed.
pub fn fan_svg(surface: &SurfaceFan, degree: Option<&Weight>) -> String {
    let fan = surface.fan();
    let tips: Vec<[f64; 2]> = fan
        .rays()
        .iter()
        .map(|v| [v.0[0] as f64, v.0[1] as f64])
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for t in &tips {
        x0 = x0.min(t[0]);
        x1 = x1.max(t[0]);
        y0 = y0.min(t[1]);
        y1 = y1.max(t[1]);
    }
    let (mx, my) = (0.1 * (x1 - x0).max(1.0), 0.1 * (y1 - y0).max(1.0));
    let (x0, x1, y0, y1) = (x0 - mx, x1 + mx, y0 - my, y1 + my);
    let mut out = header(x0 * UNIT, -y1 * UNIT, (x1 - x0) * UNIT, (y1 - y0) * UNIT);
    for gx in (x0.ceil() as i64)..=(x1.floor() as i64) {
        for gy in (y0.ceil() as i64)..=(y1.floor() as i64) {
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"#bbbbbb\"/>",
                num(gx as f64 * UNIT),
                num(-gy as f64 * UNIT)
            );
        }
    }
    if let Some(u) = degree {
        let uu = [u.0[0] as f64, u.0[1] as f64];
        if let Some((a, b)) = clip_line(uu, -1.0, [x0, x1], [y0, y1]) {
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>",
                num(a[0] * UNIT),
                num(-a[1] * UNIT),
                num(b[0] * UNIT),
                num(-b[1] * UNIT)
            );
        }
    }
    for &i in surface.cycle() {
        let t = tips[i];
        let _ = writeln!(
            out,
            "<line x1=\"0.00\" y1=\"0.00\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>",
            num(t[0] * UNIT),
            num(-t[1] * UNIT)
        );
        let norm = (t[0] * t[0] + t[1] * t[1]).sqrt();
        let off = 0.12 / norm;
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">ρ{}</text>",
            num(t[0] * (1.0 + off) * UNIT),
            num(-t[1] * (1.0 + off) * UNIT + 5.0),
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("finite rational")
}

struct Row<'a> {
    label: &'a str,
    pieces: &'a [Interval],
}

/// Three rows: the slice `Ξ₀`, and the summand families `Ξ̃₀`, `Ξ̃_t` of
/// the decomposition.
pub fn slice_svg(slice: &Slice, d: &Decomposition) -> String {
    let segments = slice.segments();
    let mut finite: Vec<f64> = Vec::new();
    for fam in [&segments, &d.tilde0, &d.tilde_t] {
        for s in fam.iter() {
            finite.extend(s.finite_endpoints().iter().map(to_f64));
        }
    }
    let lo = finite.iter().cloned().fold(f64::INFINITY, f64::min).floor() - 1.0;
    let hi = finite.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() + 1.0;
    let (left, width) = (80.0, 560.0);
    let scale = width / (hi - lo);
    let xpos = |x: f64| left + (x - lo) * scale;
    let rows = [
        Row { label: "Ξ0", pieces: &segments },
        Row { label: "Ξ~0", pieces: &d.tilde0 },
        Row { label: "Ξ~t", pieces: &d.tilde_t },
    ];
    let mut out = header(0.0, 0.0, left + width + 40.0, 90.0 * rows.len() as f64 + 20.0);
    for (r, row) in rows.iter().enumerate() {
        let y = 60.0 + 90.0 * r as f64;
        let _ = writeln!(
            out,
            "<text x=\"10.00\" y=\"{}\" font-size=\"16\">{}</text>",
            num(y + 5.0),
            row.label
        );
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\" stroke-width=\"1\"/>",
            num(xpos(lo)),
            num(y),
            num(xpos(hi)),
            num(y)
        );
        for k in (lo as i64)..=(hi as i64) {
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" fill=\"#888888\">{}</text>",
                num(xpos(k as f64)),
                num(y + 22.0),
                k
            );
        }
        for (i, s) in row.pieces.iter().enumerate() {
            let a = s.lo.as_ref().map_or(lo, to_f64);
            let b = s.hi.as_ref().map_or(hi, to_f64);
            if s.is_point() {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>",
                    num(xpos(a)),
                    num(y)
                );
            } else {
                let markers = match (s.lo.is_some(), s.hi.is_some()) {
                    (false, _) => " marker-start=\"url(#arrow)\"",
                    (_, false) => " marker-end=\"url(#arrow)\"",
                    _ => "",
                };
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"4\"{}/>",
                    num(xpos(a)),
                    num(y),
                    num(xpos(b)),
                    num(y),
                    markers
                );
                for end in s.finite_endpoints() {
                    let xe = xpos(to_f64(&end));
                    let _ = writeln!(
                        out,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>",
                        num(xe),
                        num(y - 8.0),
                        num(xe),
                        num(y + 8.0)
                    );
                }
            }
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                num(xpos((a + b) / 2.0)),
                num(y - 14.0 - if s.is_point() { 10.0 * (i % 2) as f64 } else { 0.0 }),
                i
            );
        }
        if r == 0 {
            for b in slice.breakpoints() {
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                    num(xpos(to_f64(b))),
                    num(y + 36.0),
                    b
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
