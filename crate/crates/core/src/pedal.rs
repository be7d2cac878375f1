//! Perpendicular directions, perpendicular lines and pedal feet.

use crate::bary::{cross, line_intersection, BaryLine, BaryPoint, Scalar};
use crate::{GeometryError, TriangleShape};

/// A side of the reference triangle, named by its endpoints. The side with
/// index `i` is opposite vertex `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    BC,
    CA,
    AB,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::BC, Side::CA, Side::AB];

    /// Index of the opposite vertex (and of the coordinate that vanishes on
    /// the side line).
    pub fn index(self) -> usize {
        match self {
            Side::BC => 0,
            Side::CA => 1,
            Side::AB => 2,
        }
    }

    /// The two following indices in cyclic order `(i+1, i+2)`.
    pub(crate) fn cyclic(self) -> (usize, usize, usize) {
        let i = self.index();
        (i, (i + 1) % 3, (i + 2) % 3)
    }

    /// `x = 0`, `y = 0` or `z = 0`.
    pub fn line<S: Scalar>(self) -> BaryLine<S> {
        let mut coeffs = [S::zero(), S::zero(), S::zero()];
        coeffs[self.index()] = S::one();
        BaryLine::from_raw(coeffs)
    }
}

/// Homogeneous triple with zero coordinate sum: a direction (point at
/// infinity).
#[derive(Clone, Debug, PartialEq)]
pub struct DirectionVector<S> {
    coords: [S; 3],
}

impl<S: Scalar> DirectionVector<S> {
    pub fn coords(&self) -> &[S; 3] {
        &self.coords
    }

    pub fn as_point(&self) -> BaryPoint<S> {
        BaryPoint::from_raw(self.coords.clone())
    }
}

/// Direction perpendicular to a side: for `BC`,
/// `(2a², −a²−b²+c², −a²+b²−c²)`, and cyclically.
pub fn perp_direction<S: Scalar>(t: &TriangleShape, side: Side) -> DirectionVector<S> {
    let sq = t.squares_as::<S>();
    let (i, j, k) = side.cyclic();
    let mut coords = [S::zero(), S::zero(), S::zero()];
    coords[i] = S::from_int(2) * sq[i].clone();
    coords[j] = -sq[i].clone() - sq[j].clone() + sq[k].clone();
    coords[k] = -sq[i].clone() + sq[j].clone() - sq[k].clone();
    DirectionVector { coords }
}

/// The line through `p` perpendicular to `side`: the determinant
/// `|x y z; p; U⊥| = 0` expanded into line coefficients.
pub fn perpendicular_line<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
    side: Side,
) -> Result<BaryLine<S>, GeometryError> {
    let dir = perp_direction::<S>(t, side);
    let coeffs = cross(p.coords(), dir.coords());
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(GeometryError::DegenerateDeterminant);
    }
    Ok(BaryLine::from_raw(coeffs))
}

/// Homogeneous foot of the perpendicular from `p` onto `side`, before
/// normalization. For `BC`:
/// `(0, α(a²+b²−c²) + 2a²β, α(a²−b²+c²) + 2a²γ)`, whose sum is
/// `2a²(α+β+γ)`.
pub(crate) fn foot_homogeneous<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>, side: Side) -> [S; 3] {
    let sq = t.squares_as::<S>();
    let c = p.coords();
    let (i, j, k) = side.cyclic();
    let two_sq = S::from_int(2) * sq[i].clone();
    let mut foot = [S::zero(), S::zero(), S::zero()];
    foot[j] = c[i].clone() * (sq[i].clone() + sq[j].clone() - sq[k].clone()) + two_sq.clone() * c[j].clone();
    foot[k] = c[i].clone() * (sq[i].clone() - sq[j].clone() + sq[k].clone()) + two_sq * c[k].clone();
    foot
}

/// Normalized foot of the perpendicular from `p` onto `side`.
pub fn pedal_foot<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
    side: Side,
) -> Result<BaryPoint<S>, GeometryError> {
    let foot = foot_homogeneous(t, p, side);
    let sum = foot.iter().cloned().fold(S::zero(), |acc, v| acc + v);
    if sum.is_zero() {
        return Err(GeometryError::PointAtInfinity);
    }
    Ok(BaryPoint::from_raw(foot.map(|v| v / sum.clone())))
}

/// Same foot obtained by intersecting the perpendicular line with the side
/// line. Kept as an independent cross-check of [`pedal_foot`].
pub fn pedal_foot_by_intersection<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
    side: Side,
) -> Result<BaryPoint<S>, GeometryError> {
    let perp = perpendicular_line(t, p, side)?;
    line_intersection(&perp, &side.line())?.normalized()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PedalTriangle<S = crate::Rational> {
    pub foot_a: BaryPoint<S>,
    pub foot_b: BaryPoint<S>,
    pub foot_c: BaryPoint<S>,
}

impl<S: Scalar> PedalTriangle<S> {
    pub fn foot(&self, side: Side) -> &BaryPoint<S> {
        match side {
            Side::BC => &self.foot_a,
            Side::CA => &self.foot_b,
            Side::AB => &self.foot_c,
        }
    }
}

pub fn pedal_triangle<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
) -> Result<PedalTriangle<S>, GeometryError> {
    if !p.is_finite() {
        return Err(GeometryError::PointAtInfinity);
    }
    Ok(PedalTriangle {
        foot_a: pedal_foot(t, p, Side::BC)?,
        foot_b: pedal_foot(t, p, Side::CA)?,
        foot_c: pedal_foot(t, p, Side::AB)?,
    })
}
