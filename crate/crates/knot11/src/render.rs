//! SVG rendering of diagrams in the fundamental rectangle.

use crate::floer::Bigon;
use crate::geometry::{Realization, ScaledPoint};
use crate::pipeline::Analysis;
use std::fmt::Write as _;

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;

struct Canvas {
    body: String,
    p: f64,
}

impl Canvas {
    fn new(p: usize) -> Canvas {
        Canvas { body: String::new(), p: p as f64 }
    }

    fn x(&self, v: f64) -> f64 {
        MARGIN + v * UNIT
    }

    fn y(&self, v: f64) -> f64 {
        // torus y in [0,1] drawn bottom-up
        MARGIN + (1.0 - v) * UNIT * 8.0
    }

    fn finish(self) -> String {
        let width = 2.0 * MARGIN + self.p * UNIT;
        let height = 2.0 * MARGIN + 8.0 * UNIT + 20.0;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
             viewBox=\"0 0 {width:.0} {height:.0}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn to_unit(real: &Realization, pt: ScaledPoint) -> (f64, f64) {
    let l = real.scale() as f64;
    (pt.0 as f64 / l, pt.1 as f64 / l)
}

/// Split a segment at vertical period boundaries and reduce each piece into
/// the fundamental rectangle horizontally.
fn reduced_segments(real: &Realization, a: ScaledPoint, b: ScaledPoint) -> Vec<((f64, f64), (f64, f64))> {
    let p = real.p() as f64;
    let (ax, ay) = to_unit(real, a);
    let (bx, by) = to_unit(real, b);
    let mut cuts = vec![0.0f64];
    // cut where the segment crosses x = k p
    let (lo, hi) = (ax.min(bx), ax.max(bx));
    let mut k = (lo / p).floor();
    while k * p <= hi {
        if k * p > lo && (bx - ax).abs() > 1e-12 {
            let t = (k * p - ax) / (bx - ax);
            if t > 0.0 && t < 1.0 {
                cuts.push(t);
            }
        }
        k += 1.0;
    }
    cuts.push(1.0);
    cuts.sort_by(f64::total_cmp);
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        if t1 - t0 < 1e-12 {
            continue;
        }
        let mid = 0.5 * (t0 + t1);
        let mx = ax + mid * (bx - ax);
        let shift = (mx / p).floor() * p;
        let s = (ax + t0 * (bx - ax) - shift, ay + t0 * (by - ay));
        let e = (ax + t1 * (bx - ax) - shift, ay + t1 * (by - ay));
        out.push((s, e));
    }
    out
}

/// Draw the diagram: rectangle, the horizontal curve along the bottom edge,
/// every arc of the other curve, labeled slots, and both basepoints.
pub fn render_diagram(a: &Analysis, bigon: Option<&Bigon>) -> String {
    let real = &a.realization;
    let p = real.p();
    let mut c = Canvas::new(p);

    // optional shaded bigon first, under the curves
    if let Some(b) = bigon {
        render_bigon_shading(&mut c, real, b);
    }

    // fundamental rectangle and alpha along the bottom edge
    let (x0, y0) = (c.x(0.0), c.y(1.0));
    let (x1, y1) = (c.x(p as f64), c.y(0.0));
    let _ = writeln!(
        c.body,
        "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>",
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(
        c.body,
        "<line x1=\"{x0:.2}\" y1=\"{y1:.2}\" x2=\"{x1:.2}\" y2=\"{y1:.2}\" stroke=\"red\" stroke-width=\"1.5\"/>"
    );

    // beta arcs, reduced into the rectangle
    for arc in real.arcs() {
        for seg in arc.pts.windows(2) {
            for ((sx, sy), (ex, ey)) in reduced_segments(real, seg[0], seg[1]) {
                let _ = writeln!(
                    c.body,
                    "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"blue\" stroke-width=\"1.2\"/>",
                    c.x(sx),
                    c.y(sy),
                    c.x(ex),
                    c.y(ey)
                );
            }
        }
    }

    // labeled slots along alpha
    for i in 1..=p {
        let x = c.x(i as f64 - 0.5);
        let y = c.y(0.0);
        let _ = writeln!(c.body, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2\" fill=\"black\"/>");
        if p <= 40 || i % 5 == 0 || i == 1 {
            let _ = writeln!(
                c.body,
                "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"9\" text-anchor=\"middle\">x{i}</text>",
                y + 14.0
            );
        }
    }

    // basepoints: w filled, z hollow
    let (zx, zy) = to_unit(real, real.z_scaled());
    let (wx, wy) = to_unit(real, real.w_scaled());
    let _ = writeln!(
        c.body,
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>",
        c.x(zx),
        c.y(zy.clamp(0.03, 0.97))
    );
    let _ = writeln!(
        c.body,
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"black\"/>",
        c.x(wx),
        c.y(wy.clamp(0.03, 0.97))
    );
    let _ = writeln!(
        c.body,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">z</text>",
        c.x(zx) + 6.0,
        c.y(zy.clamp(0.03, 0.97)) - 6.0
    );
    let _ = writeln!(
        c.body,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">w</text>",
        c.x(wx) + 6.0,
        c.y(wy.clamp(0.03, 0.97)) + 12.0
    );

    c.finish()
}

/// Clip the witness polygon to each period cell, translate the pieces into
/// the fundamental rectangle, and fill them with partial opacity so that
/// multiplicity shows as a darker shade.
fn render_bigon_shading(c: &mut Canvas, real: &Realization, b: &Bigon) {
    let p = real.p() as f64;
    let poly: Vec<(f64, f64)> = b.witness.iter().map(|&pt| to_unit(real, pt)).collect();
    let xs: Vec<f64> = poly.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = poly.iter().map(|p| p.1).collect();
    let (x0, x1) = (
        xs.iter().cloned().fold(f64::MAX, f64::min),
        xs.iter().cloned().fold(f64::MIN, f64::max),
    );
    let (y0, y1) = (
        ys.iter().cloned().fold(f64::MAX, f64::min),
        ys.iter().cloned().fold(f64::MIN, f64::max),
    );
    let (kx0, kx1) = ((x0 / p).floor() as i64, (x1 / p).ceil() as i64);
    let (ky0, ky1) = (y0.floor() as i64, y1.ceil() as i64);
    for kx in kx0..kx1 {
        for ky in ky0..ky1 {
            let cell = (kx as f64 * p, ky as f64, (kx + 1) as f64 * p, (ky + 1) as f64);
            let piece = clip_to_rect(&poly, cell);
            if piece.len() < 3 {
                continue;
            }
            let points: Vec<String> = piece
                .iter()
                .map(|&(x, y)| {
                    format!("{:.2},{:.2}", c.x(x - cell.0), c.y(y - cell.1))
                })
                .collect();
            let _ = writeln!(
                c.body,
                "<polygon points=\"{}\" fill=\"#7fbf7f\" fill-opacity=\"0.45\"/>",
                points.join(" ")
            );
        }
    }
}

/// Sutherland–Hodgman clipping against an axis-aligned rectangle.
fn clip_to_rect(poly: &[(f64, f64)], rect: (f64, f64, f64, f64)) -> Vec<(f64, f64)> {
    let (x0, y0, x1, y1) = rect;
    let planes: [(f64, f64, f64); 4] = [
        (1.0, 0.0, -x0),
        (-1.0, 0.0, x1),
        (0.0, 1.0, -y0),
        (0.0, -1.0, y1),
    ];
    let mut current = poly.to_vec();
    for (a, b, cc) in planes {
        if current.is_empty() {
            break;
        }
        let inside = |p: (f64, f64)| a * p.0 + b * p.1 + cc >= 0.0;
        let mut next = Vec::new();
        for i in 0..current.len() {
            let s = current[i];
            let e = current[(i + 1) % current.len()];
            let (si, ei) = (inside(s), inside(e));
            if si {
                next.push(s);
            }
            if si != ei {
                let ds = a * s.0 + b * s.1 + cc;
                let de = a * e.0 + b * e.1 + cc;
                let t = ds / (ds - de);
                next.push((s.0 + t * (e.0 - s.0), s.1 + t * (e.1 - s.1)));
            }
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::RasmussenParams;
    use crate::pipeline::{analyze_family, analyze_params};

    #[test]
    fn unknot_svg() {
        let a = analyze_params(RasmussenParams::new(1, 0, 0, 0), 4).unwrap();
        let svg = render_diagram(&a, None);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(">z<") && svg.contains(">w<"));
    }

    #[test]
    fn family_zero_svg_with_bigon() {
        let a = analyze_family(0, 4).unwrap();
        let bigon = a
            .bigons
            .iter()
            .find(|b| b.from == 12 && b.to == 13)
            .expect("innermost arch disk present");
        let svg = render_diagram(&a, Some(bigon));
        assert!(svg.contains("polygon"));
        // 31 slot markers
        assert_eq!(svg.matches("r=\"2\"").count(), 31);
    }
}
