//! The cubic of points whose pedal triangle is perspective with `ABC`.
//!
//! With the side squares `a², b², c²` and the pivot coefficients
//!
//! ```text
//! kA = 2a²(b²+c²−a²) − (a²+c²−b²)(a²+b²−c²)      (and cyclic)
//! ```
//!
//! the curve is `F̃ = 0` for
//!
//! ```text
//! F̃(α,β,γ) = α(b²γ² − c²β²)·kA + β(c²α² − a²γ²)·kB + γ(a²β² − b²α²)·kC.
//! ```
//!
//! Since `kA = 4a²bc·(cos A − cos B·cos C)`, the cosine form of the curve is
//! `F̃ / (4(abc)³)`, and the oriented-distance form is that times
//! `(2·Area)³` on normalized coordinates.

mod chords;
mod export;
mod trace;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::bary::{BaryPoint, Rational, Scalar};
use crate::triangle::OrientedDistances;
use crate::{GeometryError, TriangleShape};

pub use chords::{chord_points, default_seeds};
pub use export::{to_csv, to_svg, Marker};
pub use trace::{
    trace, trace_with_placement, BoundingBox, TraceError, TracedCurve, DEFAULT_EXPANSION,
    DEFAULT_RESOLUTION, MAX_RESOLUTION, MIN_RESOLUTION,
};

/// The factors `kA, kB, kC` of the cubic.
#[derive(Clone, Debug, PartialEq)]
pub struct PivotCoefficients<S = Rational> {
    pub k_a: S,
    pub k_b: S,
    pub k_c: S,
}

impl<S: Scalar> PivotCoefficients<S> {
    pub fn as_array(&self) -> [S; 3] {
        [self.k_a.clone(), self.k_b.clone(), self.k_c.clone()]
    }
}

fn pivot_array<S: Scalar>(sq: &[S; 3]) -> [S; 3] {
    [0, 1, 2].map(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        S::from_int(2) * sq[i].clone() * (sq[j].clone() + sq[k].clone() - sq[i].clone())
            - (sq[i].clone() + sq[k].clone() - sq[j].clone())
                * (sq[i].clone() + sq[j].clone() - sq[k].clone())
    })
}

pub fn pivot_coefficients(t: &TriangleShape) -> PivotCoefficients {
    let [k_a, k_b, k_c] = pivot_array(t.squares());
    PivotCoefficients { k_a, k_b, k_c }
}

/// `F̃` with its coefficients precomputed for one triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct LocusPolynomial<S = Rational> {
    squares: [S; 3],
    pivot: [S; 3],
}

impl<S: Scalar> LocusPolynomial<S> {
    pub fn new(t: &TriangleShape) -> Self {
        let squares = t.squares_as::<S>();
        let pivot = pivot_array(&squares);
        Self { squares, pivot }
    }

    pub fn eval_coords(&self, p: &[S; 3]) -> S {
        let sq = &self.squares;
        let mut total = S::zero();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let bracket = sq[j].clone() * p[k].clone() * p[k].clone()
                - sq[k].clone() * p[j].clone() * p[j].clone();
            total = total + p[i].clone() * bracket * self.pivot[i].clone();
        }
        total
    }

    pub fn eval(&self, p: &BaryPoint<S>) -> S {
        self.eval_coords(p.coords())
    }
}

/// Exact value of `F̃` at the given representative; zero iff `p` is on the
/// curve.
pub fn locus_value<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>) -> S {
    LocusPolynomial::new(t).eval(p)
}

/// Cosine form
/// `Σ (α/a)(γ²/c² − β²/b²)(cos A − cos B·cos C)` at the given representative.
pub fn locus_value_cosine<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>) -> f64 {
    let sides = t.sides_f64();
    let (ca, cb, cc) = t.cosines();
    let cos = [ca, cb, cc];
    let x = p.coords().clone().map(|c| c.to_f64());
    let u = [0, 1, 2].map(|i| x[i] / sides[i]);
    (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            u[i] * (u[k] * u[k] - u[j] * u[j]) * (cos[i] - cos[j] * cos[k])
        })
        .sum()
}

/// Distance form `Σ d_A(d_C² − d_B²)(cos A − cos B·cos C)`.
pub fn locus_value_distances(t: &TriangleShape, d: &OrientedDistances) -> f64 {
    let (ca, cb, cc) = t.cosines();
    let cos = [ca, cb, cc];
    let d = d.as_array();
    (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            d[i] * (d[k] * d[k] - d[j] * d[j]) * (cos[i] - cos[j] * cos[k])
        })
        .sum()
}

/// `4(abc)³`: the factor between `F̃` and the cosine form.
pub fn cosine_form_scale(t: &TriangleShape) -> Rational {
    let abc = t.side_product();
    Rational::from_int(4) * &abc * &abc * &abc
}

/// Ratio between the distance form and `F̃` on normalized coordinates:
/// `(2·Area)³ / (4(abc)³)`.
pub fn distance_form_scale(t: &TriangleShape) -> f64 {
    (2.0 * t.area()).powi(3) / cosine_form_scale(t).to_f64()
}

/// Isogonal conjugate `(a²βγ : b²γα : c²αβ)`.
pub fn isogonal<S: Scalar>(t: &TriangleShape, p: &BaryPoint<S>) -> Result<BaryPoint<S>, GeometryError> {
    let sq = t.squares_as::<S>();
    let [al, be, ga] = p.coords().clone();
    BaryPoint::new(
        sq[0].clone() * be.clone() * ga.clone(),
        sq[1].clone() * ga * al.clone(),
        sq[2].clone() * al * be,
    )
    .map_err(|_| GeometryError::UndefinedAtVertex)
}

/// `λ(T) = −a²b²c²`, the constant in
/// `F̃(isogonal(P)) = λ·αβγ·F̃(P)`.
pub fn isogonal_transfer_constant(t: &TriangleShape) -> Rational {
    let [a2, b2, c2] = t.squares();
    -(a2 * b2 * c2)
}

/// Third point where the line `PQ` meets the cubic, for `P`, `Q` on it.
///
/// Along `X(t) = P + tQ` the restriction is `c₂t² + c₁t` (the constant and
/// cubic terms are `F̃(P)` and `F̃(Q)`, both zero); the third point is
/// `X(−c₁/c₂) ∝ c₂P − c₁Q`.
pub fn third_intersection(
    t: &TriangleShape,
    p: &BaryPoint,
    q: &BaryPoint,
) -> Result<BaryPoint, GeometryError> {
    third_intersection_with(&LocusPolynomial::new(t), p, q)
}

pub(crate) fn third_intersection_with(
    poly: &LocusPolynomial,
    p: &BaryPoint,
    q: &BaryPoint,
) -> Result<BaryPoint, GeometryError> {
    if p.is_proportional(q) {
        return Err(GeometryError::CoincidentPoints);
    }
    if !poly.eval(p).is_zero() || !poly.eval(q).is_zero() {
        return Err(GeometryError::NotOnLocus);
    }
    let (pc, qc) = (p.coords(), q.coords());
    let plus = [0, 1, 2].map(|i| &pc[i] + &qc[i]);
    let minus = [0, 1, 2].map(|i| &pc[i] - &qc[i]);
    let (f_plus, f_minus) = (poly.eval_coords(&plus), poly.eval_coords(&minus));
    let two = Rational::from_int(2);
    let c2 = (&f_plus + &f_minus) / &two;
    let c1 = (f_plus - f_minus) / two;
    if c2.is_zero() {
        return Err(GeometryError::ChordDegenerate);
    }
    let x = [0, 1, 2].map(|i| &c2 * &pc[i] - &c1 * &qc[i]);
    Ok(BaryPoint::from_raw(x).primitive())
}

/// `(β−α)(α−γ)(γ−β)`: the cubic of the unit equilateral triangle, which
/// splits into the three medians.
pub fn equilateral_locus_value<S: Scalar>(p: &BaryPoint<S>) -> S {
    let [al, be, ga] = p.coords().clone();
    (be.clone() - al.clone()) * (al - ga.clone()) * (ga - be)
}

/// Named points with exact barycentrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Center {
    VertexA,
    VertexB,
    VertexC,
    Centroid,
    Incenter,
    ExcenterA,
    ExcenterB,
    ExcenterC,
    Orthocenter,
    Circumcenter,
    /// `(kA : kB : kC)`.
    Pivot,
}

impl Center {
    pub const ALL: [Center; 11] = [
        Center::VertexA,
        Center::VertexB,
        Center::VertexC,
        Center::Centroid,
        Center::Incenter,
        Center::ExcenterA,
        Center::ExcenterB,
        Center::ExcenterC,
        Center::Orthocenter,
        Center::Circumcenter,
        Center::Pivot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Center::VertexA => "vertex-a",
            Center::VertexB => "vertex-b",
            Center::VertexC => "vertex-c",
            Center::Centroid => "centroid",
            Center::Incenter => "incenter",
            Center::ExcenterA => "excenter-a",
            Center::ExcenterB => "excenter-b",
            Center::ExcenterC => "excenter-c",
            Center::Orthocenter => "orthocenter",
            Center::Circumcenter => "circumcenter",
            Center::Pivot => "pivot",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Center::VertexA => "A",
            Center::VertexB => "B",
            Center::VertexC => "C",
            Center::Centroid => "G",
            Center::Incenter => "I",
            Center::ExcenterA => "Ia",
            Center::ExcenterB => "Ib",
            Center::ExcenterC => "Ic",
            Center::Orthocenter => "H",
            Center::Circumcenter => "O",
            Center::Pivot => "K*",
        }
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Center {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        Center::ALL
            .into_iter()
            .find(|c| c.name() == key || c.label().to_ascii_lowercase() == key)
            .ok_or_else(|| GeometryError::UnknownCenter(s.to_string()))
    }
}

/// Exact homogeneous coordinates of a catalog center.
///
/// The orthocenter uses the product form
/// `((a²+b²−c²)(a²+c²−b²) : (a²+b²−c²)(b²+c²−a²) : (b²+c²−a²)(a²+c²−b²))`,
/// which yields the right-angle vertex for right triangles.
pub fn known_center(t: &TriangleShape, center: Center) -> BaryPoint {
    let [a, b, c] = t.sides().clone();
    let [a2, b2, c2] = t.squares().clone();
    let from = |x: Rational, y: Rational, z: Rational| {
        BaryPoint::new(x, y, z).expect("catalog center of a valid triangle is nonzero")
    };
    let one = || Rational::from_int(1);
    match center {
        Center::VertexA => BaryPoint::vertex(0),
        Center::VertexB => BaryPoint::vertex(1),
        Center::VertexC => BaryPoint::vertex(2),
        Center::Centroid => from(one(), one(), one()),
        Center::Incenter => from(a, b, c),
        Center::ExcenterA => from(-a, b, c),
        Center::ExcenterB => from(a, -b, c),
        Center::ExcenterC => from(a, b, -c),
        Center::Orthocenter => {
            let sa = &b2 + &c2 - &a2;
            let sb = &c2 + &a2 - &b2;
            let sc = &a2 + &b2 - &c2;
            from(&sc * &sb, &sc * &sa, &sa * &sb)
        }
        Center::Circumcenter => from(
            &a2 * (&b2 + &c2 - &a2),
            &b2 * (&c2 + &a2 - &b2),
            &c2 * (&a2 + &b2 - &c2),
        ),
        Center::Pivot => {
            let k = pivot_coefficients(t);
            from(k.k_a, k.k_b, k.k_c)
        }
    }
}

/// Catalog lookup by name or label.
pub fn known_center_by_name(t: &TriangleShape, name: &str) -> Result<BaryPoint, GeometryError> {
    Ok(known_center(t, name.parse()?))
}
