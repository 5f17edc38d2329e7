//! Deterministic SVG rendering of ghost loci.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::locus::{LocusComplex, Point};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn map(&self, p: &Point) -> (f64, f64) {
        let x = p.0.to_f64().unwrap();
        let y = p.1.to_f64().unwrap();
        let sx = MARGIN + (x - self.x0) / (self.x1 - self.x0) * SIZE;
        let sy = MARGIN + (self.y1 - y) / (self.y1 - self.y0) * SIZE;
        (sx, sy)
    }

    fn path(&self, pts: &[Point], closed: bool) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{:.3} {:.3} ", if i == 0 { "M" } else { "L" }, x, y);
        }
        if closed {
            d.push('Z');
        }
        d.trim_end().to_string()
    }
}

/// Filled paths for 2-dimensional ghost components, closed paths for cycles
/// of the curve part, and open paths for the remaining ghost edges, over a
/// grid with axes.
pub fn render_svg(l: &LocusComplex) -> String {
    let b = &l.bbox;
    let f = Frame {
        x0: b.xmin.to_f64().unwrap(),
        x1: b.xmax.to_f64().unwrap(),
        y0: b.ymin.to_f64().unwrap(),
        y1: b.ymax.to_f64().unwrap(),
    };
    let total = SIZE + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total:.0}" height="{total:.0}" viewBox="0 0 {total:.0} {total:.0}">"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="{MARGIN:.3}" y="{MARGIN:.3}" width="{SIZE:.3}" height="{SIZE:.3}" fill="#ffffff" stroke="#999999"/>"##
    );
    s.push_str("<g class=\"grid\" stroke=\"#eeeeee\" stroke-width=\"0.5\">\n");
    let (gx0, gx1) = (f.x0.ceil() as i64, f.x1.floor() as i64);
    let (gy0, gy1) = (f.y0.ceil() as i64, f.y1.floor() as i64);
    for gx in gx0..=gx1 {
        let (x, _) = f.map(&(num_rational::BigRational::from_integer(gx.into()), b.ymin.clone()));
        let _ = writeln!(s, r#"<line x1="{x:.3}" y1="{MARGIN:.3}" x2="{x:.3}" y2="{:.3}"/>"#, MARGIN + SIZE);
    }
    for gy in gy0..=gy1 {
        let (_, y) = f.map(&(b.xmin.clone(), num_rational::BigRational::from_integer(gy.into())));
        let _ = writeln!(s, r#"<line x1="{MARGIN:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}"/>"#, MARGIN + SIZE);
    }
    s.push_str("</g>\n");
    s.push_str("<g class=\"axes\" stroke=\"#555555\" stroke-width=\"1\">\n");
    let zero = num_rational::BigRational::from_integer(0.into());
    if b.xmin <= zero && zero <= b.xmax {
        let (x, _) = f.map(&(zero.clone(), zero.clone()));
        let _ = writeln!(s, r#"<line x1="{x:.3}" y1="{MARGIN:.3}" x2="{x:.3}" y2="{:.3}"/>"#, MARGIN + SIZE);
    }
    if b.ymin <= zero && zero <= b.ymax {
        let (_, y) = f.map(&(zero.clone(), zero.clone()));
        let _ = writeln!(s, r#"<line x1="{MARGIN:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}"/>"#, MARGIN + SIZE);
    }
    s.push_str("</g>\n");
    for comp in l.ghost_components() {
        let boundary = l.component_boundary(&comp);
        let _ = writeln!(
            s,
            r##"<path class="ghost-face" d="{}" fill="#7799cc" fill-opacity="0.6" stroke="#224488" stroke-width="1.5"/>"##,
            f.path(&boundary, true)
        );
    }
    let cycles = l.curve_cycles();
    for c in &cycles {
        let _ = writeln!(
            s,
            r##"<path class="ghost-cycle" d="{}" fill="none" stroke="#cc3322" stroke-width="2"/>"##,
            f.path(c, true)
        );
    }
    let on_cycle: std::collections::BTreeSet<(Point, Point)> = cycles
        .iter()
        .flat_map(|c| {
            (0..c.len()).map(move |i| {
                let (p, q) = (c[i].clone(), c[(i + 1) % c.len()].clone());
                if p <= q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
        })
        .collect();
    for (a, bb) in l.curve_edges() {
        let (p, q) = (l.vertices[a].clone(), l.vertices[bb].clone());
        let key = if p <= q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
        if on_cycle.contains(&key) {
            continue;
        }
        let _ = writeln!(
            s,
            r##"<path class="ghost-edge" d="{}" fill="none" stroke="#cc3322" stroke-width="2"/>"##,
            f.path(&[p, q], false)
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Number of `Z`-terminated paths in an SVG produced by [`render_svg`].
pub fn closed_path_count(svg: &str, class: &str) -> usize {
    svg.lines()
        .filter(|l| l.contains(&format!("class=\"{class}\"")) && l.contains("Z\""))
        .count()
}
