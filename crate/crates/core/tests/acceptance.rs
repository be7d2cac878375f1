//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints one line, pass or fail, on every run.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use pedal_locus::locus::{
    chord_points, default_seeds, distance_form_scale, isogonal_transfer_constant, cosine_form_scale, trace,
    BoundingBox,
};
use pedal_locus::oracle::{cart_concurrency_residual, cart_foot, oracle_is_perspective};
use pedal_locus::pedal::pedal_foot_by_intersection;
use pedal_locus::sampling::{random_float_members, random_point, random_triangle, rng};
use pedal_locus::{
    ceva_product, equilateral_locus_value, is_orthohomological, isogonal, known_center, locus_value,
    locus_value_distances, locus_value_cosine, oriented_distances, pedal_foot, perspector, BaryPoint,
    CartesianPoint, Center, GeometryError, Rational, Side, TriangleShape,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn bary(a: i64, b: i64, c: i64) -> BaryPoint {
    BaryPoint::from_ints(a, b, c).unwrap()
}

fn show(p: &BaryPoint) -> String {
    p.ratio_string()
}

fn t654() -> TriangleShape {
    TriangleShape::from_integers(6, 5, 4).unwrap()
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:.2?}, limit {limit:.0?}"))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

const MEMBERS: [Center; 10] = [
    Center::Orthocenter,
    Center::Incenter,
    Center::Circumcenter,
    Center::ExcenterA,
    Center::ExcenterB,
    Center::ExcenterC,
    Center::VertexA,
    Center::VertexB,
    Center::VertexC,
    Center::Pivot,
];

fn named_centers() -> Outcome {
    let start = Instant::now();
    let mut r = rng(101);
    let mut triangles = vec![t654()];
    triangles.extend((0..100).map(|_| random_triangle(&mut r)));
    for t in &triangles {
        for c in MEMBERS {
            let v = locus_value(t, &known_center(t, c));
            ensure(v.is_zero(), || format!("{c} of {:?} gives {v}", t.sides()))?;
        }
    }
    let g = locus_value(&triangles[0], &bary(1, 1, 1));
    ensure(g == q(-15840), || format!("centroid value {g}, expected -15840"))?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("{} triangles x {} centers, centroid -15840, {took:.2?}", triangles.len(), MEMBERS.len()))
}

fn ceva_equivalence() -> Outcome {
    let start = Instant::now();
    let mut r = rng(202);
    let mut triangles = vec![t654()];
    triangles.extend((0..2).map(|_| random_triangle(&mut r)));
    let mut member_checks = 0;
    for t in &triangles {
        // Chord points on a side line or at infinity have no defined ratios.
        let points = chord_points(t, &default_seeds(t), 130);
        let mut defined = 0;
        for p in &points {
            ensure(locus_value(t, p).is_zero(), || format!("chord point {} is off the cubic", show(p)))?;
            match ceva_product(t, p) {
                Ok(v) => {
                    ensure(v == -Rational::one(), || format!("chord point {} has product {v}", show(p)))?;
                    defined += 1;
                }
                Err(GeometryError::FootAtVertex | GeometryError::PointAtInfinity) => {}
                Err(e) => return Err(format!("chord point {}: {e}", show(p))),
            }
        }
        ensure(defined >= 100, || format!("only {defined} chord points with a defined product"))?;
        member_checks += defined;
    }

    // Random points whose ratios are undefined (a foot at a vertex) are
    // counted and redrawn.
    let t = t654();
    let mut non_members = 0;
    let mut undefined = 0;
    while non_members < 1000 {
        let p = random_point(&mut r);
        let value = locus_value(&t, &p);
        match ceva_product(&t, &p) {
            Ok(v) => {
                let by_ceva = v == -Rational::one();
                ensure(by_ceva == value.is_zero(), || format!("{}: value {value}, product {v}", show(&p)))?;
                ensure(!by_ceva, || format!("random point {} is on the cubic", show(&p)))?;
                non_members += 1;
            }
            Err(_) => undefined += 1,
        }
    }
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "{member_checks} chord points over {} triangles at -1, {non_members} non-members agree ({undefined} undefined redrawn), {took:.2?}",
        triangles.len()
    ))
}

fn isogonal_closure() -> Outcome {
    let t = t654();
    let mut closed = 0;
    for p in chord_points(&t, &default_seeds(&t), 100) {
        if p.coords().iter().any(|c| c.is_zero()) {
            continue;
        }
        let iso = isogonal(&t, &p).map_err(|e| e.to_string())?;
        ensure(locus_value(&t, &iso).is_zero(), || format!("isogonal of {} is off the cubic", show(&p)))?;
        closed += 1;
    }

    let mut r = rng(303);
    let generic = |t: &TriangleShape, p: &BaryPoint| {
        let iso = isogonal(t, p).unwrap();
        let prod = p.coords().iter().fold(Rational::one(), |acc, c| acc * c);
        locus_value(t, &iso) / (prod * locus_value(t, p))
    };
    let lambda = generic(&t, &bary(2, 3, 7));
    ensure(lambda == isogonal_transfer_constant(&t), || format!("fitted constant {lambda}"))?;
    let mut transfers = 0;
    while transfers < 100 {
        let p = random_point(&mut r);
        let Ok(iso) = isogonal(&t, &p) else {
            continue;
        };
        transfers += 1;
        let prod = p.coords().iter().fold(Rational::one(), |acc, c| acc * c);
        let expected = &lambda * prod * locus_value(&t, &p);
        ensure(locus_value(&t, &iso) == expected, || format!("transfer identity fails at {}", show(&p)))?;
    }
    let unit = TriangleShape::from_integers(1, 1, 1).unwrap();
    let unit_lambda = generic(&unit, &bary(2, 3, 7));
    ensure(unit_lambda == q(-1), || format!("unit equilateral constant {unit_lambda}"))?;
    Ok(format!("{closed} conjugates on the cubic, transfer identity at 100 points, lambda = {lambda}, unit lambda = -1"))
}

/// Distance from `p` to the line through `a` and `b`.
fn line_distance(a: CartesianPoint, b: CartesianPoint, p: CartesianPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    ((p.x - a.x) * dy - (p.y - a.y) * dx).abs() / dx.hypot(dy)
}

fn segment_distance(a: CartesianPoint, b: CartesianPoint, p: CartesianPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let s = if len2 == 0.0 { 0.0 } else { (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0) };
    p.distance(&CartesianPoint::new(a.x + s * dx, a.y + s * dy))
}

fn equilateral() -> Outcome {
    let mut r = rng(404);
    for side in [1, 3] {
        let t = TriangleShape::from_integers(side, side, side).unwrap();
        let probe = bary(2, 3, 7);
        let k = locus_value(&t, &probe) / equilateral_locus_value(&probe);
        ensure(k == q(side.pow(6)), || format!("side {side}: k = {k}"))?;
        for _ in 0..1000 {
            let p = random_point(&mut r);
            ensure(locus_value(&t, &p) == &k * equilateral_locus_value(&p), || format!("side {side}: fails at {}", show(&p)))?;
        }
    }

    let t = TriangleShape::from_integers(1, 1, 1).unwrap();
    let pl = t.placement();
    let curve = trace(&t, BoundingBox::default_for(&pl), 256).map_err(|e| e.to_string())?;
    let cell = curve.cell_size();
    let tol = cell * std::f64::consts::SQRT_2;
    let g = pl.to_cartesian(&bary(1, 1, 1)).unwrap();
    let medians = [0, 1, 2].map(|i| (pl.vertex(i), g));
    let mut worst: f64 = 0.0;
    for line in &curve.polylines {
        for p in line {
            let d = medians.iter().map(|&(a, b)| line_distance(a, b, *p)).fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    ensure(worst <= tol, || format!("traced vertex {worst:.3e} from the medians, cell {cell:.3e}"))?;

    // Every median point inside the box, one cell in from the edge, is near the trace.
    let b = curve.bbox;
    let inner = BoundingBox::new(b.x0 + cell, b.y0 + cell, b.x1 - cell, b.y1 - cell).unwrap();
    let mut probes = 0;
    for &(a, m) in &medians {
        let (dx, dy) = (m.x - a.x, m.y - a.y);
        for step in -2000..=2000 {
            let s = step as f64 / 400.0;
            let p = CartesianPoint::new(a.x + s * dx, a.y + s * dy);
            if !inner.contains(&p) {
                continue;
            }
            probes += 1;
            let d = curve
                .polylines
                .iter()
                .flat_map(|l| l.windows(2))
                .map(|w| segment_distance(w[0], w[1], p))
                .fold(f64::INFINITY, f64::min);
            ensure(d <= tol, || format!("median point ({:.4}, {:.4}) is {d:.3e} from the trace", p.x, p.y))?;
        }
    }
    Ok(format!(
        "k(1) = 1 and k(3) = 729 at 1000 points each; trace within {worst:.2e} of the medians (cell {cell:.2e}), {probes} coverage probes"
    ))
}

/// 1000 random rational points spread over (6,5,4) and four random triangles.
fn float_workload() -> Vec<(TriangleShape, BaryPoint)> {
    let mut r = rng(505);
    let mut triangles = vec![t654()];
    triangles.extend((0..4).map(|_| random_triangle(&mut r)));
    (0..1000).map(|i| (triangles[i % triangles.len()].clone(), random_point(&mut r))).collect()
}

fn pedal_correctness() -> Outcome {
    let mut worst: f64 = 0.0;
    for (t, p) in float_workload() {
        let pl = t.placement();
        let tol = 1e-12 * pl.diameter();
        let pt = pl.to_cartesian(&p).map_err(|e| e.to_string())?;
        for side in Side::ALL {
            let i = side.index();
            let exact = pedal_foot(&t, &p, side).map_err(|e| e.to_string())?;
            let routed = pedal_foot_by_intersection(&t, &p, side).map_err(|e| e.to_string())?;
            ensure(exact.is_proportional(&routed), || format!("routes disagree at {}", show(&p)))?;
            let projected = cart_foot(&pl.vertex((i + 1) % 3), &pl.vertex((i + 2) % 3), &pt).unwrap();
            let foot_f = pedal_foot(&t, &p.to_f64(), side).map_err(|e| e.to_string())?;
            let placed = pl.to_cartesian(&foot_f).map_err(|e| e.to_string())?;
            let d = placed.distance(&projected);
            worst = worst.max(d / pl.diameter());
            ensure(d <= tol, || format!("float foot off by {d:.3e} at {}", show(&p)))?;
        }
    }
    Ok(format!("3000 feet, worst {worst:.2e} x diameter; exact routes agree"))
}

fn oracle_agreement() -> Outcome {
    const TOL: f64 = 1e-9;
    let mut disagreements = Vec::new();
    let mut compared = 0;
    let mut perspective = 0;
    let mut compare = |t: &TriangleShape, p: &BaryPoint<f64>, label: &str| {
        let pl = t.placement();
        let Ok(oracle) = oracle_is_perspective(&pl, p, TOL) else {
            return;
        };
        let ceva = is_orthohomological(t, p, TOL);
        compared += 1;
        perspective += usize::from(ceva);
        if ceva != oracle {
            let res = cart_concurrency_residual(&pl, p).unwrap();
            disagreements.push(format!("{label} {:?}: ceva {ceva}, oracle {oracle} (residual {res:.2e})", p.coords()));
        }
    };
    for (t, p) in float_workload() {
        compare(&t, &p.to_f64(), "random");
    }
    let mut r = rng(606);
    let t = t654();
    let pl = t.placement();
    let bbox = BoundingBox::default_for(&pl);
    for c in [Center::Orthocenter, Center::Incenter, Center::Circumcenter] {
        for p in random_float_members(&t, &pl, &known_center(&t, c), &bbox, 100, &mut r) {
            compare(&t, &p, "on-curve");
        }
    }
    if disagreements.is_empty() {
        Ok(format!("{compared} points ({perspective} perspective), zero disagreements"))
    } else {
        Err(format!("{} disagreements, first: {}", disagreements.len(), disagreements[0]))
    }
}

fn form_proportionality() -> Outcome {
    let mut r = rng(707);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let t = random_triangle(&mut r);
        let scale = cosine_form_scale(&t);
        let mu = distance_form_scale(&t);
        let mut fitted: Vec<f64> = Vec::new();
        let mut used = 0;
        while used < 100 {
            let p = random_point(&mut r);
            // Relative error is undefined where the cubic vanishes.
            if locus_value(&t, &p).is_zero() {
                continue;
            }
            used += 1;
            let cosine_form = locus_value_cosine(&t, &p);
            let exact_f = locus_value(&t, &p.to_f64());
            let rel = (cosine_form * pedal_locus::Scalar::to_f64(&scale) - exact_f).abs() / exact_f.abs();
            worst = worst.max(rel);
            ensure(rel <= 1e-9, || format!("cosine form off by {rel:.2e} at {}", show(&p)))?;
            let d = oriented_distances(&t, &p).map_err(|e| e.to_string())?;
            let normalized = p.normalized().unwrap();
            let base = locus_value(&t, &normalized.to_f64());
            let dist = locus_value_distances(&t, &d);
            let rel = (dist - mu * base).abs() / (mu * base).abs();
            worst = worst.max(rel);
            ensure(rel <= 1e-9, || format!("distance form off by {rel:.2e} at {}", show(&p)))?;
            fitted.push(dist / base);
        }
        let spread = fitted.iter().map(|m| (m - mu).abs() / mu).fold(0.0, f64::max);
        ensure(spread <= 1e-9, || format!("fitted mu varies by {spread:.2e}"))?;
    }
    Ok(format!("5 triangles x 100 points, worst relative error {worst:.2e}"))
}

fn perspectors() -> Outcome {
    let t = t654();
    let x = |c| perspector(&t, &known_center(&t, c)).map_err(|e: GeometryError| e.to_string());
    let incenter = x(Center::Incenter)?;
    ensure(incenter.is_proportional(&bary(35, 21, 15)), || format!("incenter gives {}", incenter.ratio_string()))?;
    let h = x(Center::Orthocenter)?;
    ensure(h.is_proportional(&known_center(&t, Center::Orthocenter)), || format!("orthocenter gives {}", h.ratio_string()))?;
    let o = x(Center::Circumcenter)?;
    ensure(o.is_proportional(&bary(1, 1, 1)), || format!("circumcenter gives {}", o.ratio_string()))?;
    Ok(format!("I -> {}, H -> {}, O -> {}", incenter.ratio_string(), h.ratio_string(), o.ratio_string()))
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pedal-locus"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("pedal-locus-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = |name: &str| -> PathBuf { dir.join(name) };
    let result = (|| {
        let mut runs = 0;
        for round in 0..2 {
            let svg = file(&format!("curve{round}.svg"));
            let csv = file(&format!("curve{round}.csv"));
            let (svg_s, csv_s) = (svg.to_str().unwrap().to_string(), csv.to_str().unwrap().to_string());
            let commands: Vec<Vec<&str>> = vec![
                vec!["report", "--sides", "6", "5", "4", "--bary", "1", "1", "1", "--json"],
                vec!["report", "--vertices", "0", "0", "4", "0", "1", "3", "--cart", "1.5", "1", "--text"],
                vec!["verify", "--sides", "6", "5", "4", "--samples", "100", "--seed", "7"],
                vec!["trace", "--sides", "6", "5", "4", "--res", "256", "--svg", &svg_s, "--csv", &csv_s],
                vec!["centers", "--sides", "6", "5", "4"],
            ];
            let mut outputs = Vec::new();
            for args in &commands {
                let (code, stdout) = run_cli(args)?;
                ensure(code == 0, || format!("`{}` exited {code}", args.join(" ")))?;
                outputs.push(stdout);
                runs += 1;
            }
            let files = [std::fs::read(&svg).map_err(|e| e.to_string())?, std::fs::read(&csv).map_err(|e| e.to_string())?];
            if round == 0 {
                std::fs::write(file("stdout0"), outputs.concat()).map_err(|e| e.to_string())?;
            } else {
                let first = std::fs::read(file("stdout0")).map_err(|e| e.to_string())?;
                ensure(first == outputs.concat(), || "stdout differs between runs".into())?;
                let prev = [std::fs::read(file("curve0.svg")).unwrap(), std::fs::read(file("curve0.csv")).unwrap()];
                ensure(prev == files, || "SVG or CSV output differs between runs".into())?;
                ensure(!files[0].is_empty() && !files[1].is_empty(), || "empty output file".into())?;
            }
        }
        Ok(format!("{runs} runs, stdout and files byte-identical; verify --sides 6 5 4 --samples 100 --seed 7 exits 0"))
    })();
    let _ = std::fs::remove_dir_all(&dir);
    result
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("named-center membership", named_centers),
        ("locus and Ceva equivalence", ceva_equivalence),
        ("isogonal closure", isogonal_closure),
        ("equilateral factorization", equilateral),
        ("pedal correctness", pedal_correctness),
        ("oracle agreement", oracle_agreement),
        ("form proportionality", form_proportionality),
        ("perspector values", perspectors),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", n + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({reason})", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
