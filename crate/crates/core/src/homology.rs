//! Signed cevian ratios, the Ceva test and the perspector of a pedal
//! triangle.
//!
//! Ratios are directed: for side `BC` the ratio is `A_iB / A_iC` where
//! `A_i` is the foot on `BC`; the feet split their sides with a negative
//! ratio when interior. With this convention the cevians `AA_i`, `BB_i`,
//! `CC_i` concur iff the product of the three ratios is `−1` (the classical
//! unsigned form of Ceva's theorem states `+1` for `A_iB/A_iC` taken as
//! lengths).

use crate::bary::{line_intersection, line_through, BaryPoint, Scalar};
use crate::pedal::{foot_homogeneous, pedal_triangle, Side};
use crate::{GeometryError, TriangleShape};

/// Directed division ratio of a foot on its side.
#[derive(Clone, Debug, PartialEq)]
pub struct CevaRatio<S = crate::Rational>(pub S);

impl<S> CevaRatio<S> {
    pub fn value(&self) -> &S {
        &self.0
    }
}

/// Cleared numerator and denominator of the ratio on `side`.
///
/// For `BC`: `A_iB/A_iC = −(α(a²+c²−b²) + 2a²γ) / (α(a²+b²−c²) + 2a²β)`.
pub(crate) fn ratio_parts<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>, side: Side) -> (S, S) {
    let foot = foot_homogeneous(t, p, side);
    let (_, j, k) = side.cyclic();
    (foot[k].clone(), foot[j].clone())
}

pub fn cevian_ratio<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
    side: Side,
) -> Result<CevaRatio<S>, GeometryError> {
    if !p.is_finite() {
        return Err(GeometryError::PointAtInfinity);
    }
    let (num, den) = ratio_parts(t, p, side);
    if num.is_zero() || den.is_zero() {
        return Err(GeometryError::FootAtVertex);
    }
    Ok(CevaRatio(-num / den))
}

/// Product of the three directed ratios; `−1` iff the cevians concur.
pub fn ceva_product<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>) -> Result<S, GeometryError> {
    let mut product = S::one();
    for side in Side::ALL {
        product = product * cevian_ratio(t, p, side)?.0;
    }
    Ok(product)
}

/// Common point of `AA_i`, `BB_i`, `CC_i`.
///
/// The first two cevians are intersected and the third is checked for
/// incidence (exactly on rationals).
pub fn perspector(t: &TriangleShape, p: &BaryPoint) -> Result<BaryPoint, GeometryError> {
    if (0..3).any(|i| p.is_proportional(&BaryPoint::vertex(i))) {
        return Err(GeometryError::DegenerateCevian);
    }
    let feet = pedal_triangle(t, p)?;
    let cevian = |side: Side| line_through(&BaryPoint::vertex(side.index()), feet.foot(side));
    let (ca, cb, cc) = (cevian(Side::BC)?, cevian(Side::CA)?, cevian(Side::AB)?);
    let x = line_intersection(&ca, &cb).map_err(|_| GeometryError::NotPerspective)?;
    if !cc.contains(&x) {
        return Err(GeometryError::NotPerspective);
    }
    Ok(x.primitive())
}

/// Outcome of the perspectivity test for one point.
#[derive(Clone, Debug, PartialEq)]
pub enum Homology {
    Perspective,
    NotPerspective,
    /// Ceva product undefined; carries the reason.
    Degenerate(GeometryError),
}

/// Decides the Ceva condition; exact on rationals, `|product + 1| <= tol`
/// on floats.
pub fn classify<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>, tol: f64) -> Homology {
    match ceva_product(t, p) {
        Ok(product) if product.is_near(&-S::one(), tol) => Homology::Perspective,
        Ok(_) => Homology::NotPerspective,
        Err(e) => Homology::Degenerate(e),
    }
}

/// Default float tolerance on the Ceva product.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Whether the pedal triangle of `p` is perspective with `ABC` (pedal
/// triangles are always orthologic with center `p`). Degenerate points
/// report `false`; use [`classify`] for the reason.
pub fn is_orthohomological<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>, tol: f64) -> bool {
    classify(t, p, tol) == Homology::Perspective
}
