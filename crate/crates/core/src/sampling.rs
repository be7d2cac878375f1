//! Seeded random triangles and points for sweeps and tests.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bary::{BaryPoint, Rational, Scalar};
use crate::locus::LocusPolynomial;
use crate::plane::{CartesianPlacement, CartesianPoint};
use crate::TriangleShape;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Triangle with rational sides `p/q`, `q ≤ 6`, `p/q ∈ [1, 20]`, rejecting
/// degenerate and isosceles draws.
pub fn random_triangle(rng: &mut impl Rng) -> TriangleShape {
    loop {
        let mut side = || {
            let den = rng.gen_range(1..=6);
            ratio(rng.gen_range(den..=20 * den), den)
        };
        let (a, b, c) = (side(), side(), side());
        if a == b || b == c || c == a {
            continue;
        }
        if let Ok(t) = TriangleShape::new(a, b, c) {
            return t;
        }
    }
}

/// Absolute barycentrics `(α, β, 1−α−β)` with `α, β` rationals of
/// denominator at most 64 in `[−1/2, 3/2]`.
pub fn random_point(rng: &mut impl Rng) -> BaryPoint {
    let mut coord = || {
        let den = rng.gen_range(1..=64);
        ratio(rng.gen_range(-den / 2..=3 * den / 2), den)
    };
    let (alpha, beta) = (coord(), coord());
    let gamma = Rational::from_int(1) - &alpha - &beta;
    BaryPoint::new(alpha, beta, gamma).expect("coordinates sum to one")
}

/// Float points on the cubic near `base` (itself on the cubic): the other
/// two intersections of random lines through `base`, polished by Newton
/// steps along the line. Only points inside `within` are kept.
pub fn random_float_members(
    t: &TriangleShape,
    placement: &CartesianPlacement,
    base: &BaryPoint,
    within: &crate::locus::BoundingBox,
    count: usize,
    rng: &mut impl Rng,
) -> Vec<BaryPoint<f64>> {
    let poly = LocusPolynomial::<f64>::new(t);
    let Ok(origin) = placement.to_cartesian(base) else {
        return Vec::new();
    };
    let scale = placement.diameter();
    let b0 = placement.from_cartesian(&origin);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let unit = CartesianPoint::new(origin.x + scale * theta.cos(), origin.y + scale * theta.sin());
        let b1 = placement.from_cartesian(&unit);
        let d = [0, 1, 2].map(|i| b1.coords()[i] - b0.coords()[i]);
        let at = |s: f64| {
            let c = [0, 1, 2].map(|i| b0.coords()[i] + s * d[i]);
            poly.eval_coords(&c)
        };
        let (f0, fp, fm, c3) = (at(0.0), at(1.0), at(-1.0), poly.eval_coords(&d));
        let c2 = (fp + fm) / 2.0 - f0;
        let c1 = (fp - fm) / 2.0 - c3;
        let disc = c2 * c2 - 4.0 * c3 * c1;
        if disc < 0.0 || c3 == 0.0 {
            continue;
        }
        for root in [(-c2 + disc.sqrt()) / (2.0 * c3), (-c2 - disc.sqrt()) / (2.0 * c3)] {
            let mut s = root;
            for _ in 0..4 {
                let h = 1e-7 * s.abs().max(1.0);
                let slope = (at(s + h) - at(s - h)) / (2.0 * h);
                if slope == 0.0 {
                    break;
                }
                s -= at(s) / slope;
            }
            let pt = CartesianPoint::new(origin.x + s * scale * theta.cos(), origin.y + s * scale * theta.sin());
            let near_vertex = placement.vertices().iter().any(|v| v.distance(&pt) < 1e-3 * scale);
            if s.abs() > 1e-3 && within.contains(&pt) && !near_vertex && out.len() < count {
                out.push(placement.from_cartesian(&pt));
            }
        }
    }
    out
}
