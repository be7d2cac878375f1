//! Marching-squares tracing of the cubic in the cartesian plane.

use std::collections::HashMap;

use thiserror::Error;

use super::LocusPolynomial;
use crate::plane::{CartesianPlacement, CartesianPoint};
use crate::{Rational, TriangleShape};

pub const DEFAULT_RESOLUTION: usize = 256;
pub const MIN_RESOLUTION: usize = 2;
pub const MAX_RESOLUTION: usize = 8192;
/// The default box is the triangle's bounding box scaled by this factor
/// about its center.
pub const DEFAULT_EXPANSION: f64 = 1.5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("resolution out of range ({MIN_RESOLUTION}..={MAX_RESOLUTION})")]
    Resolution,
    #[error("bounding box is degenerate")]
    DegenerateBox,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl BoundingBox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self, TraceError> {
        let ok = [x0, y0, x1, y1].iter().all(|v| v.is_finite()) && x1 > x0 && y1 > y0;
        if !ok {
            return Err(TraceError::DegenerateBox);
        }
        Ok(Self { x0, y0, x1, y1 })
    }

    /// Vertex bounding box scaled by `factor` about its center.
    pub fn around(placement: &CartesianPlacement, factor: f64) -> Self {
        let vs = placement.vertices();
        let min_x = vs.iter().map(|v| v.x).fold(f64::INFINITY, f64::min);
        let max_x = vs.iter().map(|v| v.x).fold(f64::NEG_INFINITY, f64::max);
        let min_y = vs.iter().map(|v| v.y).fold(f64::INFINITY, f64::min);
        let max_y = vs.iter().map(|v| v.y).fold(f64::NEG_INFINITY, f64::max);
        let (cx, cy) = ((min_x + max_x) / 2.0, (min_y + max_y) / 2.0);
        let (hw, hh) = ((max_x - min_x) / 2.0 * factor, (max_y - min_y) / 2.0 * factor);
        Self {
            x0: cx - hw,
            y0: cy - hh,
            x1: cx + hw,
            y1: cy + hh,
        }
    }

    pub fn default_for(placement: &CartesianPlacement) -> Self {
        Self::around(placement, DEFAULT_EXPANSION)
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn contains(&self, p: &CartesianPoint) -> bool {
        (self.x0..=self.x1).contains(&p.x) && (self.y0..=self.y1).contains(&p.y)
    }
}

/// Zero set of the cubic inside a box, as polylines in cartesian
/// coordinates. Closed loops repeat their first point at the end.
#[derive(Clone, Debug, PartialEq)]
pub struct TracedCurve {
    pub polylines: Vec<Vec<CartesianPoint>>,
    pub bbox: BoundingBox,
    /// Grid nodes per axis.
    pub resolution: usize,
    pub sides: [Rational; 3],
}

impl TracedCurve {
    /// Larger of the two grid spacings.
    pub fn cell_size(&self) -> f64 {
        let n = (self.resolution - 1) as f64;
        (self.bbox.width() / n).max(self.bbox.height() / n)
    }

    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.polylines.is_empty()
    }
}

/// Traces the cubic over the canonical placement of `t`.
pub fn trace(t: &TriangleShape, bbox: BoundingBox, resolution: usize) -> Result<TracedCurve, TraceError> {
    trace_with_placement(t, &t.placement(), bbox, resolution)
}

// Edge keys: horizontal edge from node (i, j) to (i+1, j) and vertical edge
// from (i, j) to (i, j+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Edge {
    H(usize, usize),
    V(usize, usize),
}

struct Segment {
    cell: (usize, usize),
    edges: [Edge; 2],
}

pub fn trace_with_placement(
    t: &TriangleShape,
    placement: &CartesianPlacement,
    bbox: BoundingBox,
    resolution: usize,
) -> Result<TracedCurve, TraceError> {
    if !(MIN_RESOLUTION..=MAX_RESOLUTION).contains(&resolution) {
        return Err(TraceError::Resolution);
    }
    let bbox = BoundingBox::new(bbox.x0, bbox.y0, bbox.x1, bbox.y1)?;
    let poly = LocusPolynomial::<f64>::new(t);
    let n = resolution;
    let dx = bbox.width() / (n - 1) as f64;
    let dy = bbox.height() / (n - 1) as f64;
    let node = |i: usize, j: usize| CartesianPoint::new(bbox.x0 + i as f64 * dx, bbox.y0 + j as f64 * dy);
    let field = |p: CartesianPoint| poly.eval(&placement.from_cartesian(&p));

    // values[j * n + i] at node (i, j)
    let values: Vec<f64> = (0..n)
        .flat_map(|j| (0..n).map(move |i| (i, j)))
        .map(|(i, j)| field(node(i, j)))
        .collect();
    let value = |i: usize, j: usize| values[j * n + i];
    let positive = |i: usize, j: usize| value(i, j) > 0.0;

    let mut crossings: HashMap<Edge, CartesianPoint> = HashMap::new();
    let mut crossing = |edge: Edge| -> Edge {
        crossings.entry(edge).or_insert_with(|| {
            let ((i0, j0), (i1, j1)) = match edge {
                Edge::H(i, j) => ((i, j), (i + 1, j)),
                Edge::V(i, j) => ((i, j), (i, j + 1)),
            };
            let (v0, v1) = (value(i0, j0), value(i1, j1));
            let s = v0 / (v0 - v1);
            let (p0, p1) = (node(i0, j0), node(i1, j1));
            CartesianPoint::new(p0.x + s * (p1.x - p0.x), p0.y + s * (p1.y - p0.y))
        });
        edge
    };

    let mut segments: Vec<Segment> = Vec::new();
    for j in 0..n - 1 {
        for i in 0..n - 1 {
            let s00 = positive(i, j);
            let s10 = positive(i + 1, j);
            let s11 = positive(i + 1, j + 1);
            let s01 = positive(i, j + 1);
            let bottom = Edge::H(i, j);
            let right = Edge::V(i + 1, j);
            let top = Edge::H(i, j + 1);
            let left = Edge::V(i, j);
            let cut: Vec<Edge> = [(bottom, s00 != s10), (right, s10 != s11), (top, s11 != s01), (left, s01 != s00)]
                .into_iter()
                .filter(|(_, c)| *c)
                .map(|(e, _)| e)
                .collect();
            let mut push = |a: Edge, b: Edge| {
                segments.push(Segment {
                    cell: (j, i),
                    edges: [crossing(a), crossing(b)],
                })
            };
            match cut.len() {
                0 => {}
                2 => push(cut[0], cut[1]),
                4 => {
                    // Saddle: decide connectivity by the sign at the center.
                    let center = CartesianPoint::new(bbox.x0 + (i as f64 + 0.5) * dx, bbox.y0 + (j as f64 + 0.5) * dy);
                    if (field(center) > 0.0) == s00 {
                        push(bottom, right);
                        push(top, left);
                    } else {
                        push(left, bottom);
                        push(right, top);
                    }
                }
                _ => unreachable!("a cell has an even number of sign changes"),
            }
        }
    }

    let mut polylines = assemble(&segments, &crossings);
    polylines.sort_by_key(|(cell, _)| *cell);
    Ok(TracedCurve {
        polylines: polylines.into_iter().map(|(_, p)| p).collect(),
        bbox,
        resolution,
        sides: t.sides().clone(),
    })
}

/// Links segments sharing an edge crossing into polylines, keyed by the
/// cell of their first segment. Open chains start at the end whose cell
/// comes first in row-major order.
fn assemble(
    segments: &[Segment],
    crossings: &HashMap<Edge, CartesianPoint>,
) -> Vec<((usize, usize), Vec<CartesianPoint>)> {
    let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (idx, s) in segments.iter().enumerate() {
        for e in s.edges {
            by_edge.entry(e).or_default().push(idx);
        }
    }
    let other = |idx: usize, e: Edge| by_edge[&e].iter().copied().find(|&o| o != idx);
    let dangling = |idx: usize| segments[idx].edges.into_iter().find(|e| by_edge[e].len() == 1);

    let mut visited = vec![false; segments.len()];
    let mut out = Vec::new();
    let walk = |start: usize, entry: Edge, visited: &mut Vec<bool>| {
        let mut points = vec![crossings[&entry]];
        let (mut idx, mut entry) = (start, entry);
        loop {
            visited[idx] = true;
            let s = &segments[idx];
            let exit = if s.edges[0] == entry { s.edges[1] } else { s.edges[0] };
            points.push(crossings[&exit]);
            match other(idx, exit) {
                Some(next) if !visited[next] => {
                    idx = next;
                    entry = exit;
                }
                _ => break,
            }
        }
        points
    };

    // Segment order is already row-major by cell.
    for idx in 0..segments.len() {
        if visited[idx] {
            continue;
        }
        if let Some(entry) = dangling(idx) {
            out.push((segments[idx].cell, walk(idx, entry, &mut visited)));
        }
    }
    for idx in 0..segments.len() {
        if !visited[idx] {
            let entry = segments[idx].edges[0];
            out.push((segments[idx].cell, walk(idx, entry, &mut visited)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locus::{known_center, Center};

    #[test]
    fn rejects_bad_parameters() {
        let t = TriangleShape::from_integers(6, 5, 4).unwrap();
        let bbox = BoundingBox::default_for(&t.placement());
        assert_eq!(trace(&t, bbox, 1).unwrap_err(), TraceError::Resolution);
        assert_eq!(trace(&t, bbox, MAX_RESOLUTION + 1).unwrap_err(), TraceError::Resolution);
        assert_eq!(BoundingBox::new(0.0, 0.0, 0.0, 1.0).unwrap_err(), TraceError::DegenerateBox);
    }

    #[test]
    fn constant_sign_corners_give_empty_curve() {
        let t = TriangleShape::from_integers(6, 5, 4).unwrap();
        // A small box around the centroid, where F̃ < 0.
        let g = t.placement().to_cartesian(&known_center(&t, Center::Centroid)).unwrap();
        let bbox = BoundingBox::new(g.x - 0.01, g.y - 0.01, g.x + 0.01, g.y + 0.01).unwrap();
        let curve = trace(&t, bbox, 2).unwrap();
        assert!(curve.is_empty());
    }

    #[test]
    fn emitted_vertices_respect_the_edge_bound() {
        let t = TriangleShape::from_integers(6, 5, 4).unwrap();
        let pl = t.placement();
        let bbox = BoundingBox::default_for(&pl);
        let curve = trace(&t, bbox, 64).unwrap();
        assert!(!curve.is_empty());
        let poly = LocusPolynomial::<f64>::new(&t);
        let f = |p: &CartesianPoint| poly.eval(&pl.from_cartesian(p));
        let n = curve.resolution;
        let dx = bbox.width() / (n - 1) as f64;
        let dy = bbox.height() / (n - 1) as f64;
        for p in curve.polylines.iter().flatten() {
            let fi = ((p.x - bbox.x0) / dx).floor().clamp(0.0, (n - 2) as f64);
            let fj = ((p.y - bbox.y0) / dy).floor().clamp(0.0, (n - 2) as f64);
            let corners = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)].map(|(a, b)| {
                f(&CartesianPoint::new(bbox.x0 + (fi + a) * dx, bbox.y0 + (fj + b) * dy)).abs()
            });
            let bound = corners.into_iter().fold(0.0, f64::max);
            assert!(f(p).abs() <= bound * (1.0 + 1e-9));
        }
    }

    #[test]
    fn polylines_are_deterministic_and_connected() {
        let t = TriangleShape::from_integers(7, 8, 11).unwrap();
        let bbox = BoundingBox::default_for(&t.placement());
        let a = trace(&t, bbox, 80).unwrap();
        let b = trace(&t, bbox, 80).unwrap();
        assert_eq!(a, b);
        let step = a.cell_size() * 2f64.sqrt() * 1.0001;
        for line in &a.polylines {
            assert!(line.len() >= 2);
            for w in line.windows(2) {
                assert!(w[0].distance(&w[1]) <= step);
            }
        }
    }
}
