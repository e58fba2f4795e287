//! SVG drawings of meanders and decorated complexes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use sturmkit::complex::{CellId, Complex, Decoration};
use sturmkit::Meander;

#[derive(Clone, Copy, Debug)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 900,
            height: 450,
            labels: true,
        }
    }
}

fn header(spec: &RenderSpec) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
        w = spec.width,
        h = spec.height
    )
}

/// Crossings on a horizontal axis in `h₁` order, joined by semicircles in
/// `h₀` order, alternating above and below.
pub fn meander_svg(m: &Meander, spec: &RenderSpec) -> String {
    let n = m.len();
    let (w, h) = (spec.width as f64, spec.height as f64);
    let margin = 30.0;
    let step = if n > 1 {
        (w - 2.0 * margin) / (n - 1) as f64
    } else {
        0.0
    };
    let y = h / 2.0;
    let x_of = |axis: usize| margin + step * (axis - 1) as f64;
    let mut out = header(spec);
    writeln!(
        out,
        "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"#888\" stroke-width=\"1\"/>",
        margin / 2.0,
        w - margin / 2.0
    )
    .unwrap();
    let order = m.order(0);
    let widest = (1..n)
        .map(|k| {
            (m.h_inv(1, order[k]).unwrap() as f64 - m.h_inv(1, order[k - 1]).unwrap() as f64).abs()
                * step
                / 2.0
        })
        .fold(0.0, f64::max);
    // flatten arcs so the widest one stays inside the canvas
    let squash = if widest > 0.0 {
        ((y - 10.0) / widest).min(1.0)
    } else {
        1.0
    };
    for k in 1..n {
        let (a, b) = (
            m.h_inv(1, order[k - 1]).unwrap(),
            m.h_inv(1, order[k]).unwrap(),
        );
        let (xa, xb) = (x_of(a), x_of(b));
        let r = (xb - xa).abs() / 2.0;
        let ry = r * squash;
        // upper arcs for odd k; sweep flag picks the side
        let upper = k % 2 == 1;
        let sweep = if (xb > xa) == upper { 1 } else { 0 };
        writeln!(out, "<path d=\"M {xa:.2} {y:.2} A {r:.2} {ry:.2} 0 0 {sweep} {xb:.2} {y:.2}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>").unwrap();
    }
    for (k, &label) in order.iter().enumerate() {
        let x = x_of(m.h_inv(1, label).unwrap());
        let i = m.morse_raw()[k];
        writeln!(
            out,
            "<circle class=\"crossing\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"black\"/>"
        )
        .unwrap();
        if spec.labels {
            writeln!(out, "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"10\" text-anchor=\"middle\">{label}</text>", y + 14.0).unwrap();
            writeln!(out, "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"8\" fill=\"#36c\" text-anchor=\"middle\">{i}</text>", y + 24.0).unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

type Point = (f64, f64);

struct Layout {
    at: BTreeMap<CellId, Point>,
    // control point of each edge drawn as a quadratic curve
    ctrl: BTreeMap<CellId, Point>,
}

impl Layout {
    fn edge_mid(&self, p: Point, q: Point, e: CellId) -> Point {
        let c = self.ctrl[&e];
        ((p.0 + 2.0 * c.0 + q.0) / 4.0, (p.1 + 2.0 * c.1 + q.1) / 4.0)
    }
}

/// Fixes the boundary cycle (alternating vertices and edges) on a circle and
/// places the other vertices by repeated neighbor averaging. Boundary edges
/// bend through their own point on the circle; parallel interior edges fan out.
fn layout_disk(c: &Complex, boundary: &[CellId], center: Point, radius: f64) -> Layout {
    let mut at: BTreeMap<CellId, Point> = BTreeMap::new();
    let mut on_circle: BTreeMap<CellId, Point> = BTreeMap::new();
    let nb = boundary.len().max(1) as f64;
    for (k, &x) in boundary.iter().enumerate() {
        let t = std::f64::consts::PI * (0.5 - 2.0 * k as f64 / nb);
        on_circle.insert(
            x,
            (center.0 + radius * t.cos(), center.1 - radius * t.sin()),
        );
    }
    let verts = c.cells_of_dim(0);
    for &v in &verts {
        at.insert(v, on_circle.get(&v).copied().unwrap_or(center));
    }
    let inner: Vec<CellId> = verts
        .iter()
        .copied()
        .filter(|v| !on_circle.contains_key(v))
        .collect();
    let mut nbrs: BTreeMap<CellId, Vec<CellId>> = BTreeMap::new();
    for (_, (t, h)) in c.edges() {
        nbrs.entry(t).or_default().push(h);
        nbrs.entry(h).or_default().push(t);
    }
    for _ in 0..400 {
        for &v in &inner {
            let ns = nbrs.get(&v).map(|v| v.as_slice()).unwrap_or(&[]);
            if ns.is_empty() {
                continue;
            }
            let (sx, sy) = ns
                .iter()
                .fold((0.0, 0.0), |(x, y), w| (x + at[w].0, y + at[w].1));
            at.insert(v, (sx / ns.len() as f64, sy / ns.len() as f64));
        }
    }
    let mut groups: BTreeMap<(CellId, CellId), Vec<CellId>> = BTreeMap::new();
    for (e, (t, h)) in c.edges() {
        if !on_circle.contains_key(&e) {
            groups.entry((t.min(h), t.max(h))).or_default().push(e);
        }
    }
    let mut ctrl = BTreeMap::new();
    for (e, (t, h)) in c.edges() {
        let (p, q) = (at[&t], at[&h]);
        let mid = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        if let Some(&m) = on_circle.get(&e) {
            // the curve passes through m at its midpoint
            ctrl.insert(e, (2.0 * m.0 - mid.0, 2.0 * m.1 - mid.1));
            continue;
        }
        let group = &groups[&(t.min(h), t.max(h))];
        let j = group.iter().position(|&x| x == e).unwrap() as f64 - (group.len() - 1) as f64 / 2.0;
        let (a, b) = (t.min(h), t.max(h));
        let (pa, pb) = (at[&a], at[&b]);
        let len = ((pb.0 - pa.0).powi(2) + (pb.1 - pa.1).powi(2))
            .sqrt()
            .max(1e-9);
        let normal = (-(pb.1 - pa.1) / len, (pb.0 - pa.0) / len);
        let off = j * (len / 3.0).min(40.0);
        ctrl.insert(e, (mid.0 + off * normal.0, mid.1 + off * normal.1));
    }
    Layout { at, ctrl }
}

fn draw_disk(
    out: &mut String,
    c: &Complex,
    lay: &Layout,
    highlight: &BTreeMap<CellId, &str>,
    spec: &RenderSpec,
) {
    for (f, circ) in c.faces() {
        let mut pts = Vec::new();
        for pair in circ.chunks(2) {
            let Some(&p) = lay.at.get(&pair[0]) else {
                continue;
            };
            pts.push(p);
            if let Some(&e) = pair.get(1) {
                let (t, h) = c.ends(e).unwrap();
                pts.push(lay.edge_mid(lay.at[&t], lay.at[&h], e));
            }
        }
        if pts.is_empty() {
            continue;
        }
        let (sx, sy) = pts.iter().fold((0.0, 0.0), |(x, y), p| (x + p.0, y + p.1));
        let (cx, cy) = (sx / pts.len() as f64, sy / pts.len() as f64);
        writeln!(out, "<circle class=\"face\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"white\" stroke=\"black\"/>").unwrap();
        if spec.labels {
            writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">{f}</text>",
                cx + 5.0,
                cy - 5.0
            )
            .unwrap();
        }
    }
    for (e, (t, h)) in c.edges() {
        let (Some(&p), Some(&q)) = (lay.at.get(&t), lay.at.get(&h)) else {
            continue;
        };
        let k = lay.ctrl[&e];
        let color = highlight.get(&e).copied().unwrap_or("black");
        let width = if highlight.contains_key(&e) { 3 } else { 1 };
        writeln!(
            out,
            "<path d=\"M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"/>",
            p.0, p.1, k.0, k.1, q.0, q.1
        )
        .unwrap();
        // arrowhead along the curve, pointing with the tangent
        let t = 0.62;
        let b = |a: f64, c: f64, d: f64| {
            (1.0 - t) * (1.0 - t) * a + 2.0 * t * (1.0 - t) * c + t * t * d
        };
        let (ax, ay) = (b(p.0, k.0, q.0), b(p.1, k.1, q.1));
        let (dx, dy) = (
            2.0 * (1.0 - t) * (k.0 - p.0) + 2.0 * t * (q.0 - k.0),
            2.0 * (1.0 - t) * (k.1 - p.1) + 2.0 * t * (q.1 - k.1),
        );
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (ux, uy) = (dx / len, dy / len);
        let size = 7.0;
        writeln!(
            out,
            "<polygon class=\"arrow\" points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\" fill=\"{color}\"/>",
            ax + ux * size,
            ay + uy * size,
            ax - uy * size / 2.0,
            ay + ux * size / 2.0,
            ax + uy * size / 2.0,
            ay - ux * size / 2.0
        )
        .unwrap();
        if spec.labels {
            let (mx, my) = lay.edge_mid(p, q, e);
            writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"9\" fill=\"#555\">{e}</text>",
                mx + 3.0,
                my - 3.0
            )
            .unwrap();
        }
    }
    for v in c.cells_of_dim(0) {
        let Some(&(x, y)) = lay.at.get(&v) else {
            continue;
        };
        writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"black\"/>"
        )
        .unwrap();
        if spec.labels {
            writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" font-weight=\"bold\">{v}</text>",
                x + 6.0,
                y + 12.0
            )
            .unwrap();
        }
    }
}

/// Interleaves a vertex path with the edges joining consecutive vertices.
fn interleave(verts: &[CellId], edges: &[CellId]) -> Vec<CellId> {
    let mut out = Vec::with_capacity(verts.len() + edges.len());
    for (k, &v) in verts.iter().enumerate() {
        out.push(v);
        if let Some(&e) = edges.get(k) {
            out.push(e);
        }
    }
    out
}

fn boundary_cycle(c: &Complex, d: &Decoration, west: bool) -> Vec<CellId> {
    // north, one meridian downwards, south, the other upwards
    let path = |p: &[CellId]| {
        let mut vs = vec![d.north];
        vs.extend(Decoration::meridian_vertices(c, p).unwrap_or_default());
        vs.push(d.south);
        interleave(&vs, p)
    };
    let (first, second) = if west {
        (&d.meridian_we, &d.meridian_ew)
    } else {
        (&d.meridian_ew, &d.meridian_we)
    };
    let mut cyc = path(first);
    cyc.pop();
    let mut back = path(second);
    back.reverse();
    back.pop();
    cyc.extend(back);
    cyc
}

/// A planar disk, or the two closed hemispheres of a decorated 3-cell side by
/// side with the meridians highlighted.
pub fn complex_svg(c: &Complex, d: Option<&Decoration>, spec: &RenderSpec) -> String {
    let (w, h) = (spec.width as f64, spec.height as f64);
    let mut out = header(spec);
    match d {
        Some(d) => {
            let r = (w / 4.0).min(h / 2.0) - 30.0;
            let mut hl: BTreeMap<CellId, &str> = BTreeMap::new();
            for &e in &d.meridian_ew {
                hl.insert(e, "#c33");
            }
            for &e in &d.meridian_we {
                hl.insert(e, "#36c");
            }
            for (west, cx, title) in [(true, w / 4.0, "W"), (false, 3.0 * w / 4.0, "E")] {
                let side = if west { &d.west } else { &d.east };
                let mut keep: BTreeSet<CellId> = side.clone();
                keep.extend(d.meridian_ew.iter().chain(&d.meridian_we));
                keep.extend(Decoration::meridian_vertices(c, &d.meridian_ew).unwrap_or_default());
                keep.extend(Decoration::meridian_vertices(c, &d.meridian_we).unwrap_or_default());
                keep.insert(d.north);
                keep.insert(d.south);
                let disk = c.subcomplex(&keep);
                let lay = layout_disk(&disk, &boundary_cycle(c, d, west), (cx, h / 2.0), r);
                writeln!(out, "<text x=\"{:.2}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{title}</text>", cx).unwrap();
                draw_disk(&mut out, &disk, &lay, &hl, spec);
            }
            if let Some(o) = c.ball() {
                writeln!(out, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">3-cell {o}</text>", w / 2.0, h - 10.0).unwrap();
            }
        }
        None => {
            let r = (w.min(h) / 2.0) - 30.0;
            let boundary = c
                .disk_boundary()
                .map(|(v, e)| interleave(&v, &e))
                .unwrap_or_else(|| c.cells_of_dim(0));
            let lay = layout_disk(c, &boundary, (w / 2.0, h / 2.0), r);
            draw_disk(&mut out, c, &lay, &BTreeMap::new(), spec);
        }
    }
    out.push_str("</svg>\n");
    out
}
