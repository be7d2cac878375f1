//! Exact rational points on the cubic by repeated chord construction.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{known_center, Center, LocusPolynomial};
use crate::bary::{BaryPoint, Rational};
use crate::TriangleShape;

/// Catalog points that lie on every cubic of the family: vertices, incenter,
/// excenters, orthocenter, circumcenter and the pivot point. Duplicates
/// (equilateral or right triangles) are dropped.
pub fn default_seeds(t: &TriangleShape) -> Vec<BaryPoint> {
    let mut seen = HashSet::new();
    Center::ALL
        .into_iter()
        .filter(|c| *c != Center::Centroid || t.is_equilateral())
        .map(|c| known_center(t, c).primitive())
        .filter(|p| seen.insert(p.primitive_integers()))
        .collect()
}

/// The cubic with integer coefficients: side squares scaled by the lcm of
/// their denominators. This multiplies `F̃` by a nonzero constant, which
/// changes neither its zeros nor the chord construction.
struct IntegerCubic {
    squares: [BigInt; 3],
    pivot: [BigInt; 3],
}

impl IntegerCubic {
    fn new(t: &TriangleShape) -> Self {
        let sq = t.squares();
        let lcm = sq.iter().fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
        let squares = [0, 1, 2].map(|i| (&sq[i] * Rational::from_integer(lcm.clone())).to_integer());
        let pivot = [0, 1, 2].map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let (a, b, c) = (&squares[i], &squares[j], &squares[k]);
            BigInt::from(2) * a * (b + c - a) - (a + c - b) * (a + b - c)
        });
        Self { squares, pivot }
    }

    fn eval(&self, p: &[BigInt; 3]) -> BigInt {
        let sq = &self.squares;
        let mut total = BigInt::zero();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let bracket = &sq[j] * &p[k] * &p[k] - &sq[k] * &p[j] * &p[j];
            total += &p[i] * bracket * &self.pivot[i];
        }
        total
    }

    /// Same construction as [`super::third_intersection`], on integer
    /// triples already known to be on the cubic.
    fn third(&self, p: &[BigInt; 3], q: &[BigInt; 3]) -> Option<[BigInt; 3]> {
        let cross = [0, 1, 2].map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &p[j] * &q[k] - &p[k] * &q[j]
        });
        if cross.iter().all(|c| c.is_zero()) {
            return None;
        }
        let f_plus = self.eval(&[0, 1, 2].map(|i| &p[i] + &q[i]));
        let f_minus = self.eval(&[0, 1, 2].map(|i| &p[i] - &q[i]));
        let c2 = &f_plus + &f_minus;
        let c1 = f_plus - f_minus;
        if c2.is_zero() {
            return None;
        }
        let x = [0, 1, 2].map(|i| &c2 * &p[i] - &c1 * &q[i]);
        let point = BaryPoint::new(
            Rational::from_integer(x[0].clone()),
            Rational::from_integer(x[1].clone()),
            Rational::from_integer(x[2].clone()),
        )
        .ok()?;
        Some(point.primitive_integers())
    }
}

/// Up to `count` distinct points produced by chords among `seeds` and the
/// points generated so far. Seeds are not included in the result; seeds off
/// the cubic are ignored. Deterministic for fixed inputs.
///
/// Pairs are visited in order `(i, j)` with `j < i` over the growing pool,
/// so each new point is combined with the earliest (smallest) points first.
pub fn chord_points(t: &TriangleShape, seeds: &[BaryPoint], count: usize) -> Vec<BaryPoint> {
    let poly = LocusPolynomial::new(t);
    let cubic = IntegerCubic::new(t);
    let mut seen: HashSet<[BigInt; 3]> = HashSet::new();
    let mut pool: Vec<[BigInt; 3]> = Vec::new();
    for s in seeds {
        if poly.eval(s).is_zero() {
            let s = s.primitive_integers();
            if seen.insert(s.clone()) {
                pool.push(s);
            }
        }
    }
    let n_seeds = pool.len();
    let mut i = 1;
    while i < pool.len() && pool.len() - n_seeds < count {
        for j in 0..i {
            if pool.len() - n_seeds >= count {
                break;
            }
            if let Some(x) = cubic.third(&pool[i], &pool[j]) {
                if seen.insert(x.clone()) {
                    pool.push(x);
                }
            }
        }
        i += 1;
    }
    pool.split_off(n_seeds)
        .into_iter()
        .map(|[a, b, c]| {
            BaryPoint::new(Rational::from_integer(a), Rational::from_integer(b), Rational::from_integer(c))
                .expect("nonzero triple")
        })
        .collect()
}
