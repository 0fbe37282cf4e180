//! DOT, SVG and JSON renderings of patches and contours.

use std::collections::BTreeSet;
use std::fmt::Write;

use dp3::geom::{cartesian, Pt};
use dp3::tiling::{Color, Patch, PatchEdge};
use serde::Serialize;

/// Everything a picture can show. All parts are optional in the sense that
/// an empty patch with no contour still renders as a valid document.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Scene {
    pub title: String,
    pub patch: Patch,
    /// Positions of vertices that survive into the core graph.
    pub core: BTreeSet<Pt>,
    pub forced: Vec<PatchEdge>,
    pub contour: Vec<Pt>,
    pub removed: Vec<Pt>,
    pub covering: String,
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::White => "white",
        Color::Black => "black",
    }
}

pub fn dot(s: &Scene) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", s.title.replace('"', "'"));
    let _ = writeln!(out, "  node [shape=circle, width=0.15, label=\"\"];");
    let forced: BTreeSet<(usize, usize)> = s.forced.iter().map(|e| (e.a, e.b)).collect();
    for (i, v) in s.patch.vertices.iter().enumerate() {
        let (x, y) = cartesian(v.pos);
        let _ = writeln!(
            out,
            "  v{i} [pos=\"{x:.4},{y:.4}!\", style=filled, fillcolor={}, core={}];",
            color_name(v.color),
            s.core.contains(&v.pos)
        );
    }
    for e in &s.patch.edges {
        let style = if forced.contains(&(e.a, e.b)) { ", penwidth=3" } else { "" };
        let _ = writeln!(out, "  v{} -- v{} [label=\"{},{}\"{style}];", e.a, e.b, e.faces.0, e.faces.1);
    }
    out.push_str("}\n");
    out
}

pub fn svg(s: &Scene) -> String {
    let scale = 60.0;
    let mut pts: Vec<(f64, f64)> = s.patch.vertices.iter().map(|v| cartesian(v.pos)).collect();
    pts.extend(s.contour.iter().map(|&p| cartesian(p)));
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad = 0.5;
    // SVG y grows downwards; flip so pictures match the lattice orientation.
    let tx = |x: f64| (x - x0 + pad) * scale;
    let ty = |y: f64| (y1 - y + pad) * scale;
    let w = (x1 - x0 + 2.0 * pad) * scale;
    let h = (y1 - y0 + 2.0 * pad) * scale;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">"
    );
    let _ = writeln!(out, "<title>{}</title>", s.title.replace('&', "&amp;").replace('<', "&lt;"));
    if !s.contour.is_empty() {
        let d: Vec<String> = s
            .contour
            .iter()
            .map(|&p| {
                let (x, y) = cartesian(p);
                format!("{:.2},{:.2}", tx(x), ty(y))
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon class=\"contour\" points=\"{}\" fill=\"#f4d35e\" fill-opacity=\"0.35\" stroke=\"#c1121f\" stroke-width=\"2\"/>",
            d.join(" ")
        );
    }
    let forced: BTreeSet<(usize, usize)> = s.forced.iter().map(|e| (e.a, e.b)).collect();
    for e in &s.patch.edges {
        let (ax, ay) = cartesian(s.patch.vertices[e.a].pos);
        let (bx, by) = cartesian(s.patch.vertices[e.b].pos);
        let (class, width) = if forced.contains(&(e.a, e.b)) { ("forced", 4) } else { ("edge", 1) };
        let _ = writeln!(
            out,
            "<line class=\"{class}\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#333\" stroke-width=\"{width}\"/>",
            tx(ax),
            ty(ay),
            tx(bx),
            ty(by)
        );
    }
    for v in &s.patch.vertices {
        let (x, y) = cartesian(v.pos);
        let fill = if v.color == Color::Black { "#000" } else { "#fff" };
        let op = if s.core.contains(&v.pos) || s.core.is_empty() { 1.0 } else { 0.4 };
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{fill}\" stroke=\"#000\" opacity=\"{op}\"/>",
            tx(x),
            ty(y)
        );
    }
    for &p in &s.removed {
        let (x, y) = cartesian(p);
        let (cx, cy) = (tx(x), ty(y));
        let _ = writeln!(
            out,
            "<path class=\"removed\" d=\"M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}\" stroke=\"#c1121f\" stroke-width=\"2\"/>",
            cx - 5.0,
            cy - 5.0,
            cx + 5.0,
            cy + 5.0,
            cx - 5.0,
            cy + 5.0,
            cx + 5.0,
            cy - 5.0
        );
    }
    if !s.covering.is_empty() {
        let _ = writeln!(out, "<text x=\"4\" y=\"14\" font-size=\"12\">covering {}</text>", s.covering);
    }
    out.push_str("</svg>\n");
    out
}

pub fn json(s: &Scene) -> String {
    serde_json::to_string_pretty(s).expect("scene serializes") + "\n"
}
