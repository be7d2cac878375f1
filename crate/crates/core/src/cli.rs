//! `pedal-locus` command-line interface.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 invalid triangle or
//! argument, 3 invalid point, 4 I/O error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bary::{parse_rational, BaryPoint, Rational, Scalar};
use crate::homology::{ceva_product, perspector};
use crate::locus::{
    isogonal, known_center, locus_value, to_csv, to_svg, trace_with_placement, BoundingBox, Center, Marker,
    DEFAULT_RESOLUTION, MAX_RESOLUTION, MIN_RESOLUTION,
};
use crate::oracle::cart_concurrency_residual;
use crate::plane::{CartesianPlacement, CartesianPoint};
use crate::triangle::oriented_distances;
use crate::verify::verify;
use crate::{GeometryError, TriangleShape};

#[derive(Debug, Parser)]
#[command(name = "pedal-locus", version, about = "Pedal triangles perspective with their reference triangle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Everything known about one point.
    Report(ReportArgs),
    /// Identity sweep over chord-generated members and random points.
    Verify(VerifyArgs),
    /// Trace the cubic and write SVG and/or CSV.
    Trace(TraceArgs),
    /// Catalog centers with exact coordinates and cubic values.
    Centers(CentersArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct TriangleArgs {
    /// Side lengths a = |BC|, b = |CA|, c = |AB| ("p/q", integer or decimal).
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true)]
    sides: Option<Vec<String>>,
    /// Vertex coordinates of A, B, C.
    #[arg(long, num_args = 6, value_names = ["X1", "Y1", "X2", "Y2", "X3", "Y3"], allow_hyphen_values = true)]
    vertices: Option<Vec<String>>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PointArgs {
    /// Homogeneous barycentrics.
    #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true)]
    bary: Option<Vec<String>>,
    /// Cartesian coordinates in the triangle's placement.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
    cart: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    /// Explicit box x0 y0 x1 y1.
    #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"], allow_hyphen_values = true, conflicts_with = "auto")]
    bbox: Option<Vec<f64>>,
    /// Triangle bounding box expanded 1.5× (the default).
    #[arg(long)]
    auto: bool,
    /// Grid nodes per axis.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    res: usize,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CentersArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    InvalidTriangle(String),
    InvalidPoint(String),
    Io(String),
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Usage(_) | CliError::InvalidTriangle(_) => 2,
            CliError::InvalidPoint(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::InvalidTriangle(m) | CliError::InvalidPoint(m) | CliError::Io(m) => {
                m.clone()
            }
            CliError::VerificationFailed => "verification failed".into(),
        }
    }
}

/// Triangle as given on the command line.
struct Input {
    shape: TriangleShape,
    placement: CartesianPlacement,
    /// Exact vertex coordinates when given with `--vertices`.
    vertices: Option<[[Rational; 2]; 3]>,
    exact: bool,
}

impl Input {
    fn mode(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "float"
        }
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root = |v: &BigInt| {
        let s = v.sqrt();
        (&s * &s == *v).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

fn parse_all(values: &[String], what: &str) -> Result<Vec<Rational>, String> {
    values
        .iter()
        .map(|v| parse_rational(v).ok_or_else(|| format!("cannot parse {what} `{v}`")))
        .collect()
}

fn read_triangle(args: &TriangleArgs) -> Result<Input, CliError> {
    let invalid = |e: GeometryError| match e {
        GeometryError::InvalidTriangle(inner) => CliError::InvalidTriangle(inner.to_string()),
        other => CliError::InvalidTriangle(other.to_string()),
    };
    if let Some(sides) = &args.sides {
        let s = parse_all(sides, "side length").map_err(CliError::Usage)?;
        let shape = TriangleShape::new(s[0].clone(), s[1].clone(), s[2].clone()).map_err(invalid)?;
        let placement = shape.placement();
        return Ok(Input { shape, placement, vertices: None, exact: true });
    }
    let raw = args.vertices.as_ref().expect("clap requires --sides or --vertices");
    let v = parse_all(raw, "coordinate").map_err(CliError::Usage)?;
    let pts = [[v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()], [v[4].clone(), v[5].clone()]];
    let dist2 = |p: &[Rational; 2], q: &[Rational; 2]| {
        let (dx, dy) = (&p[0] - &q[0], &p[1] - &q[1]);
        &dx * &dx + &dy * &dy
    };
    let area2 = (&pts[1][0] - &pts[0][0]) * (&pts[2][1] - &pts[0][1]) - (&pts[1][1] - &pts[0][1]) * (&pts[2][0] - &pts[0][0]);
    if area2.is_zero() {
        return Err(CliError::InvalidTriangle(crate::TriangleError::Collinear.to_string()));
    }
    let squares = [dist2(&pts[1], &pts[2]), dist2(&pts[2], &pts[0]), dist2(&pts[0], &pts[1])];
    let roots: Option<Vec<Rational>> = squares.iter().map(rational_sqrt).collect();
    let (sides, exact) = match roots {
        Some(r) => (r, true),
        None => {
            let approx = squares
                .iter()
                .map(|s| Rational::from_float(s.to_f64().sqrt()).ok_or(GeometryError::PointAtInfinity))
                .collect::<Result<Vec<_>, _>>()
                .map_err(invalid)?;
            (approx, false)
        }
    };
    let shape = TriangleShape::new(sides[0].clone(), sides[1].clone(), sides[2].clone()).map_err(invalid)?;
    let cart = |p: &[Rational; 2]| CartesianPoint::new(p[0].to_f64(), p[1].to_f64());
    let placement = CartesianPlacement::from_vertices(cart(&pts[0]), cart(&pts[1]), cart(&pts[2])).map_err(invalid)?;
    Ok(Input { shape, placement, vertices: Some(pts), exact })
}

fn read_point(args: &PointArgs, input: &Input) -> Result<(BaryPoint, &'static str), CliError> {
    let bad = |m: String| CliError::InvalidPoint(m);
    if let Some(b) = &args.bary {
        let c = parse_all(b, "coordinate").map_err(bad)?;
        let p = BaryPoint::new(c[0].clone(), c[1].clone(), c[2].clone()).map_err(|e| bad(e.to_string()))?;
        return Ok((p, "barycentric"));
    }
    let raw = args.cart.as_ref().expect("clap requires --bary or --cart");
    let c = parse_all(raw, "coordinate").map_err(bad)?;
    if let Some(v) = &input.vertices {
        // Signed sub-triangle areas, exact on rational input.
        let area2 = |p: &[Rational; 2], q: &[Rational; 2], r: &[Rational; 2]| {
            (&q[0] - &p[0]) * (&r[1] - &p[1]) - (&q[1] - &p[1]) * (&r[0] - &p[0])
        };
        let pt = [c[0].clone(), c[1].clone()];
        let p = BaryPoint::new(area2(&pt, &v[1], &v[2]), area2(&v[0], &pt, &v[2]), area2(&v[0], &v[1], &pt))
            .map_err(|e| bad(e.to_string()))?;
        return Ok((p, "cartesian (exact)"));
    }
    let pt = CartesianPoint::new(c[0].to_f64(), c[1].to_f64());
    let b = input.placement.from_cartesian(&pt);
    let p = BaryPoint::from_f64_exact(&b).map_err(|e| bad(e.to_string()))?;
    Ok((p, "cartesian (float)"))
}

#[derive(Serialize)]
struct TriangleEcho {
    mode: &'static str,
    sides: [String; 3],
}

#[derive(Serialize)]
struct PointReport {
    triangle: TriangleEcho,
    point_source: &'static str,
    point: [String; 3],
    normalized: [String; 3],
    locus_value: String,
    on_locus: bool,
    ceva_product: Option<String>,
    perspector: Option<String>,
    isogonal: Option<String>,
    oriented_distances: [f64; 3],
    oracle_residual: Option<f64>,
    /// Reason codes for every null field.
    undefined: BTreeMap<&'static str, &'static str>,
}

fn strings(v: &[Rational; 3]) -> [String; 3] {
    v.clone().map(|c| c.to_string())
}

fn build_report(input: &Input, p: &BaryPoint, source: &'static str) -> Result<PointReport, CliError> {
    let t = &input.shape;
    let normalized = p.normalized().map_err(|e| CliError::InvalidPoint(e.to_string()))?;
    let value = locus_value(t, p);
    let mut undefined = BTreeMap::new();
    let mut keep = |field: &'static str, r: Result<String, GeometryError>| match r {
        Ok(v) => Some(v),
        Err(e) => {
            undefined.insert(field, e.code());
            None
        }
    };
    let ceva = keep("ceva_product", ceva_product(t, p).map(|v| v.to_string()));
    let persp = keep("perspector", perspector(t, p).map(|x| x.ratio_string()));
    let iso = keep("isogonal", isogonal(t, p).map(|x| x.ratio_string()));
    let residual = match cart_concurrency_residual(&input.placement, p) {
        Ok(r) => Some(r),
        Err(e) => {
            undefined.insert("oracle_residual", e.code());
            None
        }
    };
    let d = oriented_distances(t, p).map_err(|e| CliError::InvalidPoint(e.to_string()))?;
    Ok(PointReport {
        triangle: TriangleEcho {
            mode: input.mode(),
            sides: strings(t.sides()),
        },
        point_source: source,
        point: strings(p.coords()),
        normalized: strings(normalized.coords()),
        on_locus: value.is_zero(),
        locus_value: value.to_string(),
        ceva_product: ceva,
        perspector: persp,
        isogonal: iso,
        oriented_distances: d.as_array(),
        oracle_residual: residual,
        undefined,
    })
}

fn render_text(r: &PointReport) -> String {
    let mut out = String::new();
    let opt = |v: &Option<String>, key: &str| match v {
        Some(s) => s.clone(),
        None => format!("null ({})", r.undefined.get(key).copied().unwrap_or("undefined")),
    };
    if r.triangle.mode == "float" {
        writeln!(out, "mode: float (side lengths approximated from vertex coordinates)").unwrap();
    } else {
        writeln!(out, "mode: exact").unwrap();
    }
    writeln!(out, "sides: {}", r.triangle.sides.join(" ")).unwrap();
    writeln!(out, "point ({}): {}", r.point_source, r.point.join(" : ")).unwrap();
    writeln!(out, "normalized: {}", r.normalized.join(", ")).unwrap();
    writeln!(out, "locus_value: {}", r.locus_value).unwrap();
    writeln!(out, "on_locus: {}", r.on_locus).unwrap();
    writeln!(out, "ceva_product: {}", opt(&r.ceva_product, "ceva_product")).unwrap();
    writeln!(out, "perspector: {}", opt(&r.perspector, "perspector")).unwrap();
    writeln!(out, "isogonal: {}", opt(&r.isogonal, "isogonal")).unwrap();
    let [da, db, dc] = r.oriented_distances;
    writeln!(out, "oriented_distances: {da} {db} {dc}").unwrap();
    match r.oracle_residual {
        Some(v) => writeln!(out, "oracle_residual: {v:e}").unwrap(),
        None => writeln!(
            out,
            "oracle_residual: null ({})",
            r.undefined.get("oracle_residual").copied().unwrap_or("undefined")
        )
        .unwrap(),
    }
    out
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = read_triangle(&args.triangle)?;
    let (p, source) = read_point(&args.point, &input)?;
    let report = build_report(&input, &p, source)?;
    if args.json {
        let s = serde_json::to_string_pretty(&report).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(out, "{s}").map_err(io_err)
    } else {
        out.write_all(render_text(&report).as_bytes()).map_err(io_err)
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = read_triangle(&args.triangle)?;
    if args.samples == 0 {
        return Err(CliError::Usage("samples must be at least 1".into()));
    }
    let summary = verify(&input.shape, &input.placement, args.samples, args.seed);
    writeln!(out, "mode: {}", input.mode()).map_err(io_err)?;
    writeln!(out, "sides: {}", strings(input.shape.sides()).join(" ")).map_err(io_err)?;
    writeln!(out, "seed: {}", args.seed).map_err(io_err)?;
    writeln!(out, "{summary}").map_err(io_err)?;
    if summary.all_passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn cmd_trace(args: &TraceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = read_triangle(&args.triangle)?;
    if !(MIN_RESOLUTION..=MAX_RESOLUTION).contains(&args.res) {
        return Err(CliError::Usage("resolution out of range".into()));
    }
    let bbox = match &args.bbox {
        Some(b) => BoundingBox::new(b[0], b[1], b[2], b[3]).map_err(|e| CliError::Usage(e.to_string()))?,
        None => BoundingBox::default_for(&input.placement),
    };
    let t = &input.shape;
    let curve = trace_with_placement(t, &input.placement, bbox, args.res).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut markers: Vec<Marker> = (0..3)
        .map(|i| Marker {
            label: ["A", "B", "C"][i].to_string(),
            at: input.placement.vertex(i),
        })
        .collect();
    for c in [Center::Orthocenter, Center::Incenter, Center::Circumcenter, Center::Centroid] {
        if let Ok(at) = input.placement.to_cartesian(&known_center(t, c)) {
            markers.push(Marker { label: c.label().to_string(), at });
        }
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, to_svg(&curve, &input.placement, &markers))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.csv {
        std::fs::write(path, to_csv(&curve)).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    let b = curve.bbox;
    writeln!(out, "mode: {}", input.mode()).map_err(io_err)?;
    writeln!(out, "sides: {}", strings(t.sides()).join(" ")).map_err(io_err)?;
    writeln!(out, "bbox: {} {} {} {}", b.x0, b.y0, b.x1, b.y1).map_err(io_err)?;
    writeln!(out, "resolution: {}", curve.resolution).map_err(io_err)?;
    writeln!(out, "polylines: {}", curve.polylines.len()).map_err(io_err)?;
    writeln!(out, "vertices: {}", curve.vertex_count()).map_err(io_err)
}

fn cmd_centers(args: &CentersArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = read_triangle(&args.triangle)?;
    let t = &input.shape;
    let mut table = String::new();
    writeln!(table, "mode: {}", input.mode()).unwrap();
    writeln!(table, "sides: {}", strings(t.sides()).join(" ")).unwrap();
    writeln!(table, "{:<14} {:<6} {:<36} {:>14}  on_locus", "center", "label", "barycentrics", "locus_value").unwrap();
    for c in Center::ALL {
        let p = known_center(t, c);
        let v = locus_value(t, &p);
        writeln!(
            table,
            "{:<14} {:<6} {:<36} {:>14}  {}",
            c.name(),
            c.label(),
            p.ratio_string(),
            v.to_string(),
            v.is_zero()
        )
        .unwrap();
    }
    out.write_all(table.as_bytes()).map_err(io_err)
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing regular output to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(out, "{e}").map_err(io_err)
                }
                _ => Err(CliError::Usage(e.render().to_string())),
            };
        }
    };
    match &cli.command {
        Command::Report(a) => cmd_report(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Trace(a) => cmd_trace(a, out),
        Command::Centers(a) => cmd_centers(a, out),
    }
}
