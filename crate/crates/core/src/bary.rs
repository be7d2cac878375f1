//! Homogeneous barycentric points and lines over an exact or float scalar.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::GeometryError;

/// Exact rational number. Serialized as `"p/q"`, or `"p"` when `q = 1`.
pub type Rational = BigRational;

/// A field the geometry can be evaluated over.
///
/// Implemented for [`Rational`] (exact path) and `f64` (float path).
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_rational(r: &Rational) -> Self;

    fn from_int(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Equality used when deciding incidence. Exact for rationals; for
    /// floats `|self - other| <= tol`.
    fn is_near(&self, other: &Self, tol: f64) -> bool;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_near(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_near(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }
}

pub(crate) fn cross<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> [S; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

pub(crate) fn dot<S: Scalar>(u: &[S; 3], v: &[S; 3]) -> S {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

fn all_zero<S: Scalar>(v: &[S; 3]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"-2.75"` into an exact
/// rational. Decimals are converted exactly (no float round trip).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{int_digits}{frac}");
        let mut num: BigInt = digits.parse().ok()?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10u8), frac.len());
        return Some(Rational::new(num, den));
    }
    let num: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(num))
}

/// Homogeneous barycentric coordinates `(alpha : beta : gamma)` with respect
/// to the reference triangle `ABC`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaryPoint<S = Rational> {
    coords: [S; 3],
}

impl<S: Scalar> BaryPoint<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Result<Self, GeometryError> {
        Self::from_array([alpha, beta, gamma])
    }

    pub fn from_array(coords: [S; 3]) -> Result<Self, GeometryError> {
        if all_zero(&coords) {
            return Err(GeometryError::ZeroPoint);
        }
        Ok(Self { coords })
    }

    pub fn vertex(index: usize) -> Self {
        let mut coords = [S::zero(), S::zero(), S::zero()];
        coords[index] = S::one();
        Self { coords }
    }

    pub fn alpha(&self) -> &S {
        &self.coords[0]
    }

    pub fn beta(&self) -> &S {
        &self.coords[1]
    }

    pub fn gamma(&self) -> &S {
        &self.coords[2]
    }

    pub fn coords(&self) -> &[S; 3] {
        &self.coords
    }

    pub fn sum(&self) -> S {
        self.coords[0].clone() + self.coords[1].clone() + self.coords[2].clone()
    }

    pub fn is_finite(&self) -> bool {
        !self.sum().is_zero()
    }

    /// Absolute barycentric form: the projectively equal triple summing to 1.
    pub fn normalized(&self) -> Result<Self, GeometryError> {
        let s = self.sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        Ok(Self {
            coords: self.coords.clone().map(|c| c / s.clone()),
        })
    }

    /// Multiplies every coordinate by a nonzero factor.
    pub fn scaled(&self, t: &S) -> Self {
        assert!(!t.is_zero(), "scaling a homogeneous point by zero");
        Self {
            coords: self.coords.clone().map(|c| c * t.clone()),
        }
    }

    /// Projective equality (the triples are proportional).
    pub fn is_proportional(&self, other: &Self) -> bool {
        all_zero(&cross(&self.coords, &other.coords))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<BaryPoint<T>, GeometryError> {
        BaryPoint::from_array([f(&self.coords[0]), f(&self.coords[1]), f(&self.coords[2])])
    }

    pub fn to_f64(&self) -> BaryPoint<f64> {
        BaryPoint {
            coords: [
                self.coords[0].to_f64(),
                self.coords[1].to_f64(),
                self.coords[2].to_f64(),
            ],
        }
    }

    pub(crate) fn from_raw(coords: [S; 3]) -> Self {
        debug_assert!(!all_zero(&coords));
        Self { coords }
    }
}

impl BaryPoint<Rational> {
    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Result<Self, GeometryError> {
        Self::new(
            Rational::from_int(alpha),
            Rational::from_int(beta),
            Rational::from_int(gamma),
        )
    }

    /// Exact conversion of float coordinates (every finite `f64` is a dyadic
    /// rational).
    pub fn from_f64_exact(p: &BaryPoint<f64>) -> Result<Self, GeometryError> {
        let conv = |v: f64| Rational::from_float(v).ok_or(GeometryError::PointAtInfinity);
        Self::new(conv(p.coords[0])?, conv(p.coords[1])?, conv(p.coords[2])?)
    }

    /// The proportional triple of coprime integers, signed so that the
    /// coordinate sum is positive (or the first nonzero coordinate when the
    /// sum vanishes).
    pub fn primitive_integers(&self) -> [BigInt; 3] {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints = self
            .coords
            .clone()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer());
        let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for v in ints.iter_mut() {
            *v = &*v / &gcd;
        }
        let sum: BigInt = ints.iter().sum();
        let flip = if sum.is_zero() {
            ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative())
        } else {
            sum.is_negative()
        };
        if flip {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
        ints
    }

    /// Primitive integer form as `"p:q:r"`.
    pub fn ratio_string(&self) -> String {
        let [x, y, z] = self.primitive_integers();
        format!("{x}:{y}:{z}")
    }

    /// Canonical representative with integer coordinates.
    pub fn primitive(&self) -> Self {
        Self::from_raw(self.primitive_integers().map(Rational::from_integer))
    }
}

/// Homogeneous line `l·x + m·y + n·z = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaryLine<S = Rational> {
    coeffs: [S; 3],
}

impl<S: Scalar> BaryLine<S> {
    pub fn new(l: S, m: S, n: S) -> Result<Self, GeometryError> {
        let coeffs = [l, m, n];
        if all_zero(&coeffs) {
            return Err(GeometryError::ZeroLine);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[S; 3] {
        &self.coeffs
    }

    /// Value of the line form at `p`; zero iff `p` is incident.
    pub fn eval(&self, p: &BaryPoint<S>) -> S {
        dot(&self.coeffs, p.coords())
    }

    pub fn contains(&self, p: &BaryPoint<S>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_proportional(&self, other: &Self) -> bool {
        all_zero(&cross(&self.coeffs, &other.coeffs))
    }

    pub fn scaled(&self, t: &S) -> Self {
        assert!(!t.is_zero(), "scaling a homogeneous line by zero");
        Self {
            coeffs: self.coeffs.clone().map(|c| c * t.clone()),
        }
    }

    pub(crate) fn from_raw(coeffs: [S; 3]) -> Self {
        debug_assert!(!all_zero(&coeffs));
        Self { coeffs }
    }
}

/// Line joining two projectively distinct points.
pub fn line_through<S: Scalar>(
    p: &BaryPoint<S>,
    q: &BaryPoint<S>,
) -> Result<BaryLine<S>, GeometryError> {
    let coeffs = cross(p.coords(), q.coords());
    if all_zero(&coeffs) {
        return Err(GeometryError::CoincidentPoints);
    }
    Ok(BaryLine { coeffs })
}

/// Common point of two projectively distinct lines.
pub fn line_intersection<S: Scalar>(
    l1: &BaryLine<S>,
    l2: &BaryLine<S>,
) -> Result<BaryPoint<S>, GeometryError> {
    let coords = cross(l1.coeffs(), l2.coeffs());
    if all_zero(&coords) {
        return Err(GeometryError::CoincidentLines);
    }
    Ok(BaryPoint { coords })
}

/// Determinant of the 3×3 coefficient matrix; zero iff the lines are
/// concurrent (or two of them coincide).
pub fn concurrency_det<S: Scalar>(l1: &BaryLine<S>, l2: &BaryLine<S>, l3: &BaryLine<S>) -> S {
    dot(l1.coeffs(), &cross(l2.coeffs(), l3.coeffs()))
}
