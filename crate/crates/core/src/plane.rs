//! Cartesian embedding of the reference triangle.

use crate::bary::{BaryPoint, Scalar};
use crate::{GeometryError, TriangleShape};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

impl CartesianPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Twice the signed area of `pqr` (positive when counter-clockwise).
pub(crate) fn signed_area2(p: &CartesianPoint, q: &CartesianPoint, r: &CartesianPoint) -> f64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// Cartesian positions of the vertices `A`, `B`, `C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartesianPlacement {
    vertices: [CartesianPoint; 3],
}

impl CartesianPlacement {
    /// `B` at the origin, `C = (a, 0)`, `A` above the x-axis.
    pub fn canonical(t: &TriangleShape) -> Self {
        let [a, _, _] = t.sides_f64();
        let [a2, b2, c2] = t.squares_as::<f64>();
        let ax = (a2 + c2 - b2) / (2.0 * a);
        let h = 2.0 * t.area() / a;
        Self {
            vertices: [
                CartesianPoint::new(ax, h),
                CartesianPoint::new(0.0, 0.0),
                CartesianPoint::new(a, 0.0),
            ],
        }
    }

    /// Arbitrary vertex positions; rejects collinear input.
    pub fn from_vertices(
        a: CartesianPoint,
        b: CartesianPoint,
        c: CartesianPoint,
    ) -> Result<Self, GeometryError> {
        let area2 = signed_area2(&a, &b, &c);
        if area2 == 0.0 || !area2.is_finite() {
            return Err(crate::TriangleError::Collinear.into());
        }
        Ok(Self {
            vertices: [a, b, c],
        })
    }

    pub fn vertices(&self) -> &[CartesianPoint; 3] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> CartesianPoint {
        self.vertices[index]
    }

    /// Side lengths `(|BC|, |CA|, |AB|)`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [a, b, c] = &self.vertices;
        [b.distance(c), c.distance(a), a.distance(b)]
    }

    pub fn diameter(&self) -> f64 {
        self.side_lengths().into_iter().fold(0.0, f64::max)
    }

    pub fn to_cartesian<S: Scalar>(&self, p: &BaryPoint<S>) -> Result<CartesianPoint, GeometryError> {
        let [al, be, ga] = p.coords().clone().map(|c| c.to_f64());
        let sum = al + be + ga;
        if p.sum().is_zero() || sum == 0.0 {
            return Err(GeometryError::PointAtInfinity);
        }
        let [a, b, c] = &self.vertices;
        Ok(CartesianPoint::new(
            (al * a.x + be * b.x + ga * c.x) / sum,
            (al * a.y + be * b.y + ga * c.y) / sum,
        ))
    }

    /// Absolute barycentrics from signed sub-triangle areas.
    pub fn from_cartesian(&self, pt: &CartesianPoint) -> BaryPoint<f64> {
        let [a, b, c] = &self.vertices;
        let total = signed_area2(a, b, c);
        BaryPoint::from_raw([
            signed_area2(pt, b, c) / total,
            signed_area2(a, pt, c) / total,
            signed_area2(a, b, pt) / total,
        ])
    }
}
