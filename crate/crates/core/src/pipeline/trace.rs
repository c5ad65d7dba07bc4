use std::fmt::Write;

use crate::algebra::scalar::{fmt_scalar, to_f64};
use crate::linkage::{count_bounds, Linkage};
use crate::motion::{Factorization, RationalCurve};
use crate::verify::{configuration_at, Param};

pub const TRACE_HEADER: &str = "t,drawn_x,drawn_y,drawn_z,drawn_x_f64,drawn_y_f64,drawn_z_f64";

/// Drawn point at each parameter as CSV: exact coordinates first, then
/// floating-point renderings with twelve significant digits.
pub fn emit_trace(l: &Linkage, samples: &[Param]) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for t in samples {
        let p = configuration_at(l, t).drawn;
        let exact: Vec<String> = p.iter().map(fmt_scalar).collect();
        let float: Vec<String> = p.iter().map(|x| format!("{:.11e}", to_f64(x))).collect();
        writeln!(out, "{t},{},{}", exact.join(","), float.join(",")).expect("writing to a String");
    }
    out
}

/// Plain-text synthesis summary.
pub fn emit_report(l: &Linkage, x: &RationalCurve, f: &Factorization) -> String {
    let (d, c) = (x.degree(), x.circularity());
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("curve: {x}"));
    line(format!("degree d = {d}, circularity c = {c}"));
    line(format!("motion C = {}", l.motion));
    line(format!("deg C = {}, deg H = {}", l.motion.degree(), l.cofactor.degree()));
    line(format!("cofactor H = {}", l.cofactor));
    line(format!("factorization: {f}"));
    line(format!("frame: {}", l.frame));
    line(format!("mode: {}", l.mode));
    for (i, cell) in l.cells.iter().enumerate() {
        line(format!("cell {}: {} (one dof: {}, components: {})", i + 1, cell.kind, cell.one_dof, cell.components));
    }
    match count_bounds(d as i64, c as i64) {
        Ok((bl, bj)) => line(format!("links {} <= {bl}, joints {} <= {bj}", l.link_count(), l.joint_count())),
        Err(e) => line(format!("bounds unavailable: {e}")),
    }
    for j in l.joints() {
        line(format!("joint {} = {}  axis {}  links {}-{}", j.label, j.value, j.axis, j.links[0], j.links[1]));
    }
    out
}
