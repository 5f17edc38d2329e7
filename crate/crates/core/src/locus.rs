//! Ghost loci of sets of bivariate polynomials as labeled planar complexes.
//!
//! The box is cut by every pairwise tie-line of every polynomial; the faces,
//! edges and vertices of that arrangement are labeled by evaluating at an
//! interior witness point. All geometry is exact over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::kernel::{fmt_q, qi, NuElement, RatElem, Q};
use crate::poly::{Exponent, TropPoly};

pub type Point = (Q, Q);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocusError {
    #[error("the polynomial set is empty")]
    EmptySet,
    #[error("locus2d needs bivariate polynomials, got {0} variables")]
    NotBivariate(usize),
    #[error("the bounding box is degenerate")]
    DegenerateBox,
}

/// A closed rational rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Box2 {
    pub xmin: Q,
    pub xmax: Q,
    pub ymin: Q,
    pub ymax: Q,
}

impl Box2 {
    pub fn new(xmin: Q, xmax: Q, ymin: Q, ymax: Q) -> Result<Self, LocusError> {
        if xmin >= xmax || ymin >= ymax {
            return Err(LocusError::DegenerateBox);
        }
        Ok(Box2 { xmin, xmax, ymin, ymax })
    }

    pub fn square(r: Q) -> Result<Self, LocusError> {
        Self::new(-r.clone(), r.clone(), -r.clone(), r)
    }

    /// `[-3M, 3M]^2` with `M` the largest coefficient magnitude (at least 1).
    pub fn default_for(e: &[TropPoly]) -> Box2 {
        let m = e
            .iter()
            .map(|f| f.max_abs_coefficient())
            .max()
            .unwrap_or_else(Q::zero)
            .max(Q::one());
        Self::square(m * qi(3)).unwrap()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.xmin <= p.0 && p.0 <= self.xmax && self.ymin <= p.1 && p.1 <= self.ymax
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.contains(p) && (p.0 == self.xmin || p.0 == self.xmax || p.1 == self.ymin || p.1 == self.ymax)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CellKind {
    Face,
    Edge,
    Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Region {
    GhostRegion,
    TangibleRegion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    /// Face corners counterclockwise, edge endpoints, or the single vertex.
    pub polygon: Vec<Point>,
    pub witness: Point,
    pub label: Region,
    pub attaining: BTreeSet<Exponent>,
    /// Vertex ids into [`LocusComplex::vertices`].
    pub vertex_ids: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LocusComplex {
    pub bbox: Box2,
    pub vertices: Vec<Point>,
    pub cells: Vec<Cell>,
    pub source: Vec<TropPoly>,
}

/// `x ∈ Z(E)`: every polynomial evaluates to a ghost (or zero) at `x`.
pub fn z_member(e: &[TropPoly], x: &[RatElem]) -> bool {
    e.iter()
        .all(|f| f.p_eval(x).map(|v| v.in_ghost_ideal()).unwrap_or(false))
}

fn tangible_point(p: &Point) -> [RatElem; 2] {
    [NuElement::Tangible(p.0.clone()), NuElement::Tangible(p.1.clone())]
}

/// Exponents attaining the maximum of some polynomial at a tangible point.
fn attaining_at(e: &[TropPoly], p: &Point) -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for f in e {
        let vals: Vec<(Exponent, Q)> = f
            .terms()
            .iter()
            .map(|(ex, c)| {
                let v = c.value().unwrap() + qi(ex[0] as i64) * &p.0 + qi(ex[1] as i64) * &p.1;
                (ex.clone(), v)
            })
            .collect();
        if let Some(m) = vals.iter().map(|(_, v)| v.clone()).max() {
            out.extend(vals.into_iter().filter(|(_, v)| *v == m).map(|(e, _)| e));
        }
    }
    out
}

/// `a x + b y + c = 0`, normalized so the first nonzero of `(a, b)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Line {
    a: Q,
    b: Q,
    c: Q,
}

impl Line {
    fn new(a: Q, b: Q, c: Q) -> Option<Line> {
        let lead = if !a.is_zero() { a.clone() } else { b.clone() };
        if lead.is_zero() {
            return None;
        }
        Some(Line { a: a / &lead, b: b / &lead, c: c / &lead })
    }

    fn meet(&self, o: &Line) -> Option<Point> {
        let det = &self.a * &o.b - &o.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &o.c - &o.b * &self.c) / &det;
        let y = (&o.a * &self.c - &self.a * &o.c) / &det;
        Some((x, y))
    }

    fn key(&self, p: &Point) -> Q {
        -&self.b * &p.0 + &self.a * &p.1
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counterclockwise angular order of direction vectors starting at angle 0.
fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let half = |d: &Point| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = &u.0 * &v.1 - &u.1 * &v.0;
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn signed_area2(pts: &[Point]) -> Q {
    let n = pts.len();
    (0..n).fold(Q::zero(), |acc, i| {
        let (p, q) = (&pts[i], &pts[(i + 1) % n]);
        acc + &p.0 * &q.1 - &q.0 * &p.1
    })
}

/// Face cycles of a planar straight-line graph as vertex-id lists, each with
/// twice its signed area (positive for bounded faces).
fn face_cycles(vertices: &[Point], edges: &BTreeSet<(usize, usize)>) -> Vec<(Vec<usize>, Q)> {
    let mut around: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        around.entry(u).or_default().push(v);
        around.entry(v).or_default().push(u);
    }
    for (u, nbrs) in around.iter_mut() {
        let o = &vertices[*u];
        nbrs.sort_by(|a, b| {
            let da = (&vertices[*a].0 - &o.0, &vertices[*a].1 - &o.1);
            let db = (&vertices[*b].0 - &o.0, &vertices[*b].1 - &o.1);
            angle_cmp(&da, &db)
        });
    }
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for &(a, b) in edges {
        for start in [(a, b), (b, a)] {
            if used.contains(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut u, mut v) = start;
            loop {
                used.insert((u, v));
                cycle.push(u);
                let nbrs = &around[&v];
                let i = nbrs.iter().position(|&w| w == u).unwrap();
                let w = nbrs[(i + nbrs.len() - 1) % nbrs.len()];
                u = v;
                v = w;
                if (u, v) == start {
                    break;
                }
            }
            let pts: Vec<Point> = cycle.iter().map(|&i| vertices[i].clone()).collect();
            out.push((cycle, signed_area2(&pts)));
        }
    }
    out
}

fn centroid(pts: &[Point]) -> Point {
    let n = qi(pts.len() as i64);
    let sx = pts.iter().fold(Q::zero(), |a, p| a + &p.0);
    let sy = pts.iter().fold(Q::zero(), |a, p| a + &p.1);
    (sx / &n, sy / n)
}

fn midpoint(p: &Point, q: &Point) -> Point {
    ((&p.0 + &q.0) / qi(2), (&p.1 + &q.1) / qi(2))
}

/// Drops vertices lying on the segment between their neighbours.
pub fn corners(poly: &[Point]) -> Vec<Point> {
    let n = poly.len();
    if n < 3 {
        return poly.to_vec();
    }
    (0..n)
        .filter(|&i| !cross(&poly[(i + n - 1) % n], &poly[i], &poly[(i + 1) % n]).is_zero())
        .map(|i| poly[i].clone())
        .collect()
}

/// The labeled arrangement of `E` inside `bbox`.
pub fn locus2d(e: &[TropPoly], bbox: &Box2) -> Result<LocusComplex, LocusError> {
    if e.is_empty() {
        return Err(LocusError::EmptySet);
    }
    if let Some(f) = e.iter().find(|f| f.nvars() != 2) {
        return Err(LocusError::NotBivariate(f.nvars()));
    }
    let mut lines: BTreeSet<Line> = BTreeSet::new();
    for (a, b, c) in [
        (Q::one(), Q::zero(), -bbox.xmin.clone()),
        (Q::one(), Q::zero(), -bbox.xmax.clone()),
        (Q::zero(), Q::one(), -bbox.ymin.clone()),
        (Q::zero(), Q::one(), -bbox.ymax.clone()),
    ] {
        lines.insert(Line::new(a, b, c).unwrap());
    }
    for f in e {
        let terms: Vec<(&Exponent, &RatElem)> = f.terms().iter().collect();
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                let (ei, ci) = terms[i];
                let (ej, cj) = terms[j];
                let a = qi(ei[0] as i64 - ej[0] as i64);
                let b = qi(ei[1] as i64 - ej[1] as i64);
                if let Some(l) = Line::new(a, b, ci.value().unwrap() - cj.value().unwrap()) {
                    lines.insert(l);
                }
            }
        }
    }
    let lines: Vec<Line> = lines.into_iter().collect();
    let mut on_line: Vec<BTreeSet<Point>> = vec![BTreeSet::new(); lines.len()];
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].meet(&lines[j]) {
                if bbox.contains(&p) {
                    on_line[i].insert(p.clone());
                    on_line[j].insert(p);
                }
            }
        }
    }
    let mut vid: BTreeMap<Point, usize> = BTreeMap::new();
    for pts in &on_line {
        for p in pts {
            let k = vid.len();
            vid.entry(p.clone()).or_insert(k);
        }
    }
    let mut vertices = vec![(Q::zero(), Q::zero()); vid.len()];
    for (p, &i) in &vid {
        vertices[i] = p.clone();
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (l, pts) in lines.iter().zip(&on_line) {
        let mut pts: Vec<&Point> = pts.iter().collect();
        pts.sort_by_key(|p| l.key(p));
        for w in pts.windows(2) {
            let (a, b) = (vid[w[0]], vid[w[1]]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let label = |p: &Point| {
        if z_member(e, &tangible_point(p)) {
            Region::GhostRegion
        } else {
            Region::TangibleRegion
        }
    };
    let mut cells = Vec::new();
    for (cycle, area) in face_cycles(&vertices, &edges) {
        if !area.is_positive() {
            continue;
        }
        let polygon: Vec<Point> = cycle.iter().map(|&i| vertices[i].clone()).collect();
        let w = centroid(&polygon);
        cells.push(Cell {
            kind: CellKind::Face,
            label: label(&w),
            attaining: attaining_at(e, &w),
            witness: w,
            polygon,
            vertex_ids: cycle,
        });
    }
    for &(a, b) in &edges {
        let w = midpoint(&vertices[a], &vertices[b]);
        cells.push(Cell {
            kind: CellKind::Edge,
            label: label(&w),
            attaining: attaining_at(e, &w),
            witness: w,
            polygon: vec![vertices[a].clone(), vertices[b].clone()],
            vertex_ids: vec![a, b],
        });
    }
    for (i, p) in vertices.iter().enumerate() {
        cells.push(Cell {
            kind: CellKind::Vertex,
            label: label(p),
            attaining: attaining_at(e, p),
            witness: p.clone(),
            polygon: vec![p.clone()],
            vertex_ids: vec![i],
        });
    }
    Ok(LocusComplex { bbox: bbox.clone(), vertices, cells, source: e.to_vec() })
}

/// Combinatorial summary of the ghost part of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusSummary {
    pub faces: usize,
    pub edges: usize,
    pub vertices: usize,
    pub ghost_faces: usize,
    /// Ghost faces merged across shared ghost edges.
    pub ghost_components: usize,
    /// Corner counts of the outer boundary of each ghost component.
    pub component_corners: Vec<usize>,
    /// Ghost edges not on the boundary of a ghost face.
    pub curve_edges: usize,
    /// Independent cycles of the curve part (its bounded faces).
    pub curve_cycles: usize,
    /// Curve edges meeting the box boundary.
    pub boundary_hits: usize,
}

impl LocusComplex {
    pub fn cells_of(&self, kind: CellKind) -> impl Iterator<Item = (usize, &Cell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.kind == kind)
    }

    fn edge_key(c: &Cell) -> (usize, usize) {
        let (a, b) = (c.vertex_ids[0], c.vertex_ids[1]);
        (a.min(b), a.max(b))
    }

    fn ghost_edges(&self) -> BTreeMap<(usize, usize), usize> {
        self.cells_of(CellKind::Edge)
            .filter(|(_, c)| c.label == Region::GhostRegion)
            .map(|(i, c)| (Self::edge_key(c), i))
            .collect()
    }

    fn face_edges(c: &Cell) -> Vec<(usize, usize)> {
        let n = c.vertex_ids.len();
        (0..n)
            .map(|i| {
                let (a, b) = (c.vertex_ids[i], c.vertex_ids[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Ghost faces grouped into components across shared ghost edges.
    pub fn ghost_components(&self) -> Vec<Vec<usize>> {
        let faces: Vec<usize> = self
            .cells_of(CellKind::Face)
            .filter(|(_, c)| c.label == Region::GhostRegion)
            .map(|(i, _)| i)
            .collect();
        let ghost_e = self.ghost_edges();
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for &f in &faces {
            for e in Self::face_edges(&self.cells[f]) {
                by_edge.entry(e).or_default().push(f);
            }
        }
        let mut comp: BTreeMap<usize, usize> = faces.iter().map(|&f| (f, f)).collect();
        fn root(comp: &mut BTreeMap<usize, usize>, mut f: usize) -> usize {
            while comp[&f] != f {
                f = comp[&f];
            }
            f
        }
        for (e, fs) in &by_edge {
            if fs.len() == 2 && ghost_e.contains_key(e) {
                let (a, b) = (root(&mut comp, fs[0]), root(&mut comp, fs[1]));
                comp.insert(a.max(b), a.min(b));
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &f in &faces {
            let r = root(&mut comp, f);
            groups.entry(r).or_default().push(f);
        }
        groups.into_values().collect()
    }

    /// Outer boundary of a union of faces, as a closed vertex sequence.
    pub fn component_boundary(&self, faces: &[usize]) -> Vec<Point> {
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut directed: Vec<(usize, usize)> = Vec::new();
        for &f in faces {
            let ids = &self.cells[f].vertex_ids;
            let n = ids.len();
            for i in 0..n {
                let (a, b) = (ids[i], ids[(i + 1) % n]);
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
                directed.push((a, b));
            }
        }
        let boundary: Vec<(usize, usize)> = directed
            .into_iter()
            .filter(|(a, b)| count[&((*a).min(*b), (*a).max(*b))] == 1)
            .collect();
        if boundary.is_empty() {
            return Vec::new();
        }
        let next: BTreeMap<usize, usize> = boundary.iter().copied().collect();
        let start = boundary.iter().map(|e| e.0).min().unwrap();
        let mut out = vec![self.vertices[start].clone()];
        let mut v = next[&start];
        let mut guard = 0;
        while v != start && guard <= boundary.len() {
            out.push(self.vertices[v].clone());
            v = match next.get(&v) {
                Some(&w) => w,
                None => break,
            };
            guard += 1;
        }
        out
    }

    /// Ghost edges that do not bound a ghost face.
    pub fn curve_edges(&self) -> BTreeSet<(usize, usize)> {
        let in_faces: BTreeSet<(usize, usize)> = self
            .cells_of(CellKind::Face)
            .filter(|(_, c)| c.label == Region::GhostRegion)
            .flat_map(|(_, c)| Self::face_edges(c))
            .collect();
        self.ghost_edges()
            .into_keys()
            .filter(|e| !in_faces.contains(e))
            .collect()
    }

    /// Bounded faces of the curve part, after pruning its dangling trees.
    pub fn curve_cycles(&self) -> Vec<Vec<Point>> {
        let mut edges = self.curve_edges();
        loop {
            let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
            for &(a, b) in &edges {
                *deg.entry(a).or_default() += 1;
                *deg.entry(b).or_default() += 1;
            }
            let before = edges.len();
            edges.retain(|(a, b)| deg[a] > 1 && deg[b] > 1);
            if edges.len() == before {
                break;
            }
        }
        face_cycles(&self.vertices, &edges)
            .into_iter()
            .filter(|(_, area)| area.is_positive())
            .map(|(c, _)| c.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn summary(&self) -> LocusSummary {
        let comps = self.ghost_components();
        let curve = self.curve_edges();
        let curve_vertices: BTreeSet<usize> = curve.iter().flat_map(|&(a, b)| [a, b]).collect();
        let boundary_hits = curve
            .iter()
            .filter(|(a, b)| {
                self.bbox.on_boundary(&self.vertices[*a]) != self.bbox.on_boundary(&self.vertices[*b])
            })
            .count();
        let components = curve_components(&curve, &curve_vertices);
        LocusSummary {
            faces: self.cells_of(CellKind::Face).count(),
            edges: self.cells_of(CellKind::Edge).count(),
            vertices: self.vertices.len(),
            ghost_faces: comps.iter().map(|c| c.len()).sum(),
            ghost_components: comps.len(),
            component_corners: comps.iter().map(|c| corners(&self.component_boundary(c)).len()).collect(),
            curve_edges: curve.len(),
            curve_cycles: curve.len() + components - curve_vertices.len(),
            boundary_hits,
        }
    }

    /// The cell whose relative interior contains `p`.
    pub fn locate(&self, p: &Point) -> Option<usize> {
        if let Some((i, _)) = self.cells_of(CellKind::Vertex).find(|(_, c)| c.polygon[0] == *p) {
            return Some(i);
        }
        for (i, c) in self.cells_of(CellKind::Edge) {
            let (a, b) = (&c.polygon[0], &c.polygon[1]);
            if cross(a, b, p).is_zero() {
                let t = (&p.0 - &a.0) * (&b.0 - &a.0) + (&p.1 - &a.1) * (&b.1 - &a.1);
                let len = (&b.0 - &a.0) * (&b.0 - &a.0) + (&b.1 - &a.1) * (&b.1 - &a.1);
                if t.is_positive() && t < len {
                    return Some(i);
                }
            }
        }
        self.cells_of(CellKind::Face)
            .find(|(_, c)| {
                let n = c.polygon.len();
                (0..n).all(|k| cross(&c.polygon[k], &c.polygon[(k + 1) % n], p).is_positive())
            })
            .map(|(i, _)| i)
    }

    /// Grid points (`k` per axis) whose located cell label disagrees with
    /// direct membership, plus points that fall in no cell.
    pub fn grid_disagreements(&self, k: usize) -> usize {
        let b = &self.bbox;
        let steps = qi(k as i64 - 1);
        let mut bad = 0;
        for i in 0..k {
            for j in 0..k {
                let x = &b.xmin + (&b.xmax - &b.xmin) * qi(i as i64) / &steps;
                let y = &b.ymin + (&b.ymax - &b.ymin) * qi(j as i64) / &steps;
                let p = (x, y);
                let direct = z_member(&self.source, &tangible_point(&p));
                match self.locate(&p) {
                    Some(c) if (self.cells[c].label == Region::GhostRegion) == direct => {}
                    _ => bad += 1,
                }
            }
        }
        bad
    }

    pub fn to_json(&self) -> LocusJson {
        let pt = |p: &Point| [fmt_q(&p.0), fmt_q(&p.1)];
        LocusJson {
            cells: self
                .cells
                .iter()
                .map(|c| CellJson {
                    kind: match c.kind {
                        CellKind::Face => "face",
                        CellKind::Edge => "edge",
                        CellKind::Vertex => "vertex",
                    },
                    polygon: c.polygon.iter().map(pt).collect(),
                    label: c.label,
                    attaining: c.attaining.iter().cloned().collect(),
                })
                .collect(),
            bbox: [
                fmt_q(&self.bbox.xmin),
                fmt_q(&self.bbox.xmax),
                fmt_q(&self.bbox.ymin),
                fmt_q(&self.bbox.ymax),
            ],
            source: self.source.iter().map(|f| f.to_string()).collect(),
            summary: self.summary(),
        }
    }
}

fn curve_components(edges: &BTreeSet<(usize, usize)>, vertices: &BTreeSet<usize>) -> usize {
    let mut parent: BTreeMap<usize, usize> = vertices.iter().map(|&v| (v, v)).collect();
    fn root(p: &BTreeMap<usize, usize>, mut v: usize) -> usize {
        while p[&v] != v {
            v = p[&v];
        }
        v
    }
    for &(a, b) in edges {
        let (ra, rb) = (root(&parent, a), root(&parent, b));
        if ra != rb {
            parent.insert(ra.max(rb), ra.min(rb));
        }
    }
    vertices.iter().filter(|&&v| root(&parent, v) == v).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct CellJson {
    pub kind: &'static str,
    pub polygon: Vec<[String; 2]>,
    pub label: Region,
    pub attaining: Vec<Exponent>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusJson {
    pub cells: Vec<CellJson>,
    #[serde(rename = "box")]
    pub bbox: [String; 4],
    pub source: Vec<String>,
    pub summary: LocusSummary,
}
