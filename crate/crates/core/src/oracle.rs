//! Cartesian floating-point referee.
//!
//! Nothing here uses barycentric formulas beyond placing a point: feet are
//! orthogonal projections and concurrency is a determinant of unit-normal
//! line equations.

use crate::bary::{BaryPoint, Scalar};
use crate::plane::{CartesianPlacement, CartesianPoint};
use crate::GeometryError;

/// `p·x + q·y + r = 0` with `p² + q² = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartesianLine {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl CartesianLine {
    pub fn through(a: &CartesianPoint, b: &CartesianPoint) -> Result<Self, GeometryError> {
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let len = dx.hypot(dy);
        if len == 0.0 {
            return Err(GeometryError::DegenerateSegment);
        }
        let (p, q) = (-dy / len, dx / len);
        Ok(Self { p, q, r: -(p * a.x + q * a.y) })
    }

    pub fn eval(&self, pt: &CartesianPoint) -> f64 {
        self.p * pt.x + self.q * pt.y + self.r
    }
}

/// Orthogonal projection of `p` onto the line through `a` and `b`.
pub fn cart_foot(a: &CartesianPoint, b: &CartesianPoint, p: &CartesianPoint) -> Result<CartesianPoint, GeometryError> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return Err(GeometryError::DegenerateSegment);
    }
    let s = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    Ok(CartesianPoint::new(a.x + s * dx, a.y + s * dy))
}

/// `|det|` of the three unit-normal cevian lines `A→A_i`, `B→B_i`, `C→C_i`,
/// where the feet are cartesian projections of `p` onto the side lines.
pub fn cart_concurrency_residual<S: Scalar>(
    placement: &CartesianPlacement,
    p: &BaryPoint<S>,
) -> Result<f64, GeometryError> {
    let pt = placement.to_cartesian(p)?;
    let v = placement.vertices();
    let eps = 1e-12 * placement.diameter();
    if v.iter().any(|vertex| vertex.distance(&pt) <= eps) {
        return Err(GeometryError::DegenerateCevian);
    }
    let mut lines = [CartesianLine { p: 0.0, q: 0.0, r: 0.0 }; 3];
    for (i, line) in lines.iter_mut().enumerate() {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let foot = cart_foot(&v[j], &v[k], &pt)?;
        *line = CartesianLine::through(&v[i], &foot).map_err(|_| GeometryError::DegenerateCevian)?;
    }
    let [l1, l2, l3] = lines;
    let det = l1.p * (l2.q * l3.r - l2.r * l3.q) - l1.q * (l2.p * l3.r - l2.r * l3.p)
        + l1.r * (l2.p * l3.q - l2.q * l3.p);
    Ok(det.abs())
}

pub fn oracle_is_perspective<S: Scalar>(
    placement: &CartesianPlacement,
    p: &BaryPoint<S>,
    tol: f64,
) -> Result<bool, GeometryError> {
    Ok(cart_concurrency_residual(placement, p)? <= tol)
}
