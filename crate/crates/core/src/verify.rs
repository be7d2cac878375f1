//! Sweep that checks the perspectivity identities on one triangle.

use std::fmt;

use num_traits::{One, Zero};

use crate::bary::{BaryPoint, Rational};
use crate::homology::{ceva_product, is_orthohomological, DEFAULT_TOLERANCE};
use crate::locus::{
    chord_points, default_seeds, equilateral_locus_value, isogonal, isogonal_transfer_constant,
    LocusPolynomial,
};
use crate::oracle::{cart_concurrency_residual, oracle_is_perspective};
use crate::plane::CartesianPlacement;
use crate::sampling::{random_point, rng};
use crate::TriangleShape;

/// Chord points farther than this many diameters from the centroid are not
/// refereed by the float oracle.
pub const ORACLE_RANGE: f64 = 100.0;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, ..Default::default() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifySummary {
    pub checks: Vec<Check>,
    pub members: usize,
    pub non_members: usize,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chord-generated members: {}", self.members)?;
        writeln!(f, "random non-members: {}", self.non_members)?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<32} pass {:>5}  fail {:>5}  skip {:>5}",
                c.name, c.passed, c.failed, c.skipped
            )?;
        }
        for c in self.checks.iter().filter(|c| c.failed > 0) {
            if let Some(detail) = &c.first_failure {
                writeln!(f, "first counterexample ({}): {detail}", c.name)?;
            }
        }
        write!(f, "result: {}", if self.all_passed() { "PASS" } else { "FAIL" })
    }
}

fn show(p: &BaryPoint) -> String {
    let [x, y, z] = p.coords();
    format!("({x} : {y} : {z})")
}

fn product(p: &BaryPoint) -> Rational {
    p.coords().iter().fold(Rational::one(), |acc, c| acc * c)
}

/// Runs every check over `samples` chord-generated members and `samples`
/// seeded random non-members (random points with `F̃ ≠ 0`).
pub fn verify(t: &TriangleShape, placement: &CartesianPlacement, samples: usize, seed: u64) -> VerifySummary {
    let poly = LocusPolynomial::<Rational>::new(t);
    let members = chord_points(t, &default_seeds(t), samples);
    let mut rng = rng(seed);
    let mut randoms: Vec<BaryPoint> = Vec::with_capacity(samples);
    while randoms.len() < samples {
        let p = random_point(&mut rng);
        if !poly.eval(&p).is_zero() {
            randoms.push(p);
        }
    }
    let lambda = isogonal_transfer_constant(t);
    let centroid = placement.to_cartesian(&BaryPoint::<Rational>::from_ints(1, 1, 1).unwrap()).unwrap();
    let range = ORACLE_RANGE * placement.diameter();

    let mut on_locus = Check::new("members on locus");
    let mut member_ceva = Check::new("members: ceva product = -1");
    let mut closure = Check::new("members: isogonal on locus");
    let mut member_oracle = Check::new("members: oracle concurrent");
    let mut equivalence = Check::new("non-members: ceva product != -1");
    let mut agreement = Check::new("non-members: oracle agreement");
    let mut transfer = Check::new("isogonal transfer identity");

    for p in &members {
        on_locus.record(poly.eval(p).is_zero(), || show(p));
        match ceva_product(t, p) {
            Ok(v) => member_ceva.record(v == -Rational::one(), || format!("{} product {v}", show(p))),
            Err(_) => member_ceva.skipped += 1,
        }
        match isogonal(t, p) {
            Ok(iso) if !product(p).is_zero() => {
                closure.record(poly.eval(&iso).is_zero(), || format!("{} -> {}", show(p), show(&iso)))
            }
            _ => closure.skipped += 1,
        }
        let near = placement
            .to_cartesian(p)
            .map(|c| c.distance(&centroid) <= range)
            .unwrap_or(false);
        match cart_concurrency_residual(placement, p) {
            Ok(res) if near => member_oracle.record(res <= DEFAULT_TOLERANCE, || format!("{} residual {res:e}", show(p))),
            _ => member_oracle.skipped += 1,
        }
    }

    for p in &randoms {
        let value = poly.eval(p);
        let ceva = ceva_product(t, p);
        match &ceva {
            Ok(v) => equivalence.record(*v != -Rational::one(), || {
                format!("{} value {value} product {v}", show(p))
            }),
            Err(_) => equivalence.skipped += 1,
        }
        match oracle_is_perspective(placement, p, DEFAULT_TOLERANCE) {
            Ok(oracle) => {
                let exact = is_orthohomological(t, &p.to_f64(), DEFAULT_TOLERANCE);
                agreement.record(oracle == exact, || format!("{} oracle {oracle} ceva {exact}", show(p)))
            }
            Err(_) => agreement.skipped += 1,
        }
        match isogonal(t, p) {
            Ok(iso) => {
                let expected = &lambda * product(p) * &value;
                transfer.record(poly.eval(&iso) == expected, || show(p))
            }
            Err(_) => transfer.skipped += 1,
        }
    }

    let mut checks = vec![on_locus, member_ceva, closure, member_oracle, equivalence, agreement, transfer];

    if t.is_equilateral() {
        let mut factor = Check::new("equilateral factorization");
        let a2 = &t.squares()[0];
        let k = a2 * a2 * a2;
        for p in randoms.iter().chain(&members) {
            factor.record(poly.eval(p) == &k * equilateral_locus_value(p), || show(p));
        }
        checks.push(factor);
    }

    VerifySummary {
        checks,
        members: members.len(),
        non_members: randoms.len(),
    }
}
