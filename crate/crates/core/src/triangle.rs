//! Reference triangle given by exact side lengths.

use num_traits::{Signed, Zero};

use crate::bary::{BaryPoint, Rational, Scalar};
use crate::{GeometryError, TriangleError};

/// Triangle `ABC` with `a = |BC|`, `b = |CA|`, `c = |AB|`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleShape {
    sides: [Rational; 3],
    squares: [Rational; 3],
}

impl TriangleShape {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(TriangleError::NonPositiveSide.into());
        }
        if &a + &b <= c || &b + &c <= a || &c + &a <= b {
            return Err(TriangleError::TriangleInequality.into());
        }
        let squares = [&a * &a, &b * &b, &c * &c];
        Ok(Self {
            sides: [a, b, c],
            squares,
        })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self, GeometryError> {
        Self::new(Rational::from_int(a), Rational::from_int(b), Rational::from_int(c))
    }

    pub fn sides(&self) -> &[Rational; 3] {
        &self.sides
    }

    pub fn squares(&self) -> &[Rational; 3] {
        &self.squares
    }

    pub fn sides_f64(&self) -> [f64; 3] {
        self.sides.clone().map(|s| s.to_f64())
    }

    pub fn squares_as<S: Scalar>(&self) -> [S; 3] {
        self.squares.clone().map(|s| S::from_rational(&s))
    }

    pub fn is_equilateral(&self) -> bool {
        self.sides[0] == self.sides[1] && self.sides[1] == self.sides[2]
    }

    /// `16·Area² = 2a²b² + 2b²c² + 2c²a² − a⁴ − b⁴ − c⁴`.
    pub fn area_sq16(&self) -> Rational {
        let [a2, b2, c2] = &self.squares;
        let two = Rational::from_int(2);
        &two * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2
    }

    pub fn area(&self) -> f64 {
        self.area_sq16().to_f64().sqrt() / 4.0
    }

    /// `cos A = (b² + c² − a²)/(2bc)` and cyclic; exact since the sides are
    /// rational.
    pub fn cosines_exact(&self) -> [Rational; 3] {
        let [a, b, c] = &self.sides;
        let [a2, b2, c2] = &self.squares;
        let two = Rational::from_int(2);
        [
            (b2 + c2 - a2) / (&two * b * c),
            (c2 + a2 - b2) / (&two * c * a),
            (a2 + b2 - c2) / (&two * a * b),
        ]
    }

    pub fn cosines(&self) -> (f64, f64, f64) {
        let [ca, cb, cc] = self.cosines_exact().map(|c| c.to_f64());
        (ca, cb, cc)
    }

    pub fn diameter(&self) -> f64 {
        self.sides_f64().into_iter().fold(0.0, f64::max)
    }

    /// Product `abc`.
    pub fn side_product(&self) -> Rational {
        &self.sides[0] * &self.sides[1] * &self.sides[2]
    }

    pub fn placement(&self) -> crate::CartesianPlacement {
        crate::CartesianPlacement::canonical(self)
    }
}

/// Signed distances from a point to the lines `BC`, `CA`, `AB`, positive on
/// the interior side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedDistances {
    pub d_a: f64,
    pub d_b: f64,
    pub d_c: f64,
}

impl OrientedDistances {
    pub fn as_array(&self) -> [f64; 3] {
        [self.d_a, self.d_b, self.d_c]
    }
}

/// Exact weights `w` with `d = 2·Area·w`: `w_A = α/(a·(α+β+γ))` and cyclic.
/// They satisfy `a·w_A + b·w_B + c·w_C = 1`.
pub fn distance_weights(t: &TriangleShape, p: &BaryPoint) -> Result<[Rational; 3], GeometryError> {
    let sum = p.sum();
    if sum.is_zero() {
        return Err(GeometryError::PointAtInfinity);
    }
    let c = p.coords();
    let s = t.sides();
    Ok([0, 1, 2].map(|i| &c[i] / (&s[i] * &sum)))
}

/// Oriented distances `d_A = 2·Area·α/(a·(α+β+γ))`, where "Area" is the
/// triangle's area (the `s` of the normalized-coordinate relation).
pub fn oriented_distances<S: Scalar>(
    t: &TriangleShape,
    p: &BaryPoint<S>,
) -> Result<OrientedDistances, GeometryError> {
    if p.sum().is_zero() {
        return Err(GeometryError::PointAtInfinity);
    }
    let [al, be, ga] = p.coords().clone().map(|c| c.to_f64());
    let sum = al + be + ga;
    let twice_area = 2.0 * t.area();
    let [a, b, c] = t.sides_f64();
    Ok(OrientedDistances {
        d_a: twice_area * al / (a * sum),
        d_b: twice_area * be / (b * sum),
        d_c: twice_area * ga / (c * sum),
    })
}
