use thiserror::Error;

/// Why a triple of side lengths does not describe a triangle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("triangle inequality violated")]
    TriangleInequality,
    #[error("vertices are collinear")]
    Collinear,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid triangle: {0}")]
    InvalidTriangle(#[from] TriangleError),
    #[error("homogeneous coordinates are all zero")]
    ZeroPoint,
    #[error("homogeneous line coefficients are all zero")]
    ZeroLine,
    #[error("point at infinity (coordinate sum is zero)")]
    PointAtInfinity,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("point coincides with the perpendicular direction; determinant vanishes")]
    DegenerateDeterminant,
    #[error("pedal foot falls on a vertex; cevian ratio undefined")]
    FootAtVertex,
    #[error("pedal triangle is not perspective with the reference triangle")]
    NotPerspective,
    #[error("cevian undefined: point is a vertex")]
    DegenerateCevian,
    #[error("isogonal conjugate undefined: two coordinates vanish")]
    UndefinedAtVertex,
    #[error("chord degenerate: line is tangent at the second point or lies on the curve")]
    ChordDegenerate,
    #[error("unknown center `{0}`")]
    UnknownCenter(String),
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("point is not on the locus")]
    NotOnLocus,
}

impl GeometryError {
    /// Stable snake_case code used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            GeometryError::InvalidTriangle(_) => "invalid_triangle",
            GeometryError::ZeroPoint => "zero_point",
            GeometryError::ZeroLine => "zero_line",
            GeometryError::PointAtInfinity => "point_at_infinity",
            GeometryError::CoincidentPoints => "coincident_points",
            GeometryError::CoincidentLines => "coincident_lines",
            GeometryError::DegenerateDeterminant => "degenerate_determinant",
            GeometryError::FootAtVertex => "foot_at_vertex",
            GeometryError::NotPerspective => "not_perspective",
            GeometryError::DegenerateCevian => "degenerate_cevian",
            GeometryError::UndefinedAtVertex => "undefined_at_vertex",
            GeometryError::ChordDegenerate => "chord_degenerate",
            GeometryError::UnknownCenter(_) => "unknown_center",
            GeometryError::DegenerateSegment => "degenerate_segment",
            GeometryError::NotOnLocus => "not_on_locus",
        }
    }
}
