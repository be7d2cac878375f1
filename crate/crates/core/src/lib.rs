//! Barycentric machinery for pedal triangles that are perspective with their
//! reference triangle.
//!
//! A point `P` has a pedal triangle (the feet of the perpendiculars from `P`
//! to the three side lines). The pedal triangle is always orthologic to the
//! reference triangle with center `P`; it is also perspective (homologic)
//! with it exactly when `P` lies on a triangle cubic. This crate evaluates
//! that cubic exactly over rationals, checks the Ceva condition, computes
//! perspectors and isogonal conjugates, generates exact rational points on
//! the cubic by the chord construction, and traces the curve for plotting.
//!
//! Every identity is available on exact [`Rational`] coordinates; the float
//! path (`f64`) is used where square roots appear (cosines, distances, the
//! cartesian embedding) and by the independent [`oracle`].

pub mod bary;
pub mod cli;
mod error;
pub mod homology;
pub mod locus;
pub mod oracle;
pub mod pedal;
pub mod plane;
pub mod sampling;
pub mod triangle;
pub mod verify;

pub use bary::{
    concurrency_det, line_intersection, line_through, parse_rational, BaryLine, BaryPoint,
    Rational, Scalar,
};
pub use error::{GeometryError, TriangleError};
pub use homology::{
    ceva_product, cevian_ratio, classify, is_orthohomological, perspector, CevaRatio, Homology,
};
pub use locus::{
    equilateral_locus_value, isogonal, known_center, locus_value, locus_value_distances,
    locus_value_cosine, pivot_coefficients, third_intersection, Center, LocusPolynomial,
    PivotCoefficients,
};
pub use pedal::{pedal_foot, pedal_triangle, perp_direction, perpendicular_line, PedalTriangle, Side};
pub use plane::{CartesianPlacement, CartesianPoint};
pub use triangle::{oriented_distances, OrientedDistances, TriangleShape};
