//! CSV and SVG serialization of traced curves.

use std::fmt::Write;

use super::TracedCurve;
use crate::plane::{CartesianPlacement, CartesianPoint};

/// A labelled point drawn on top of the curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Marker {
    pub label: String,
    pub at: CartesianPoint,
}

/// `polyline_id,x,y` rows with a header and LF line endings.
pub fn to_csv(curve: &TracedCurve) -> String {
    let mut out = String::from("polyline_id,x,y\n");
    for (id, line) in curve.polylines.iter().enumerate() {
        for p in line {
            writeln!(out, "{id},{},{}", p.x, p.y).unwrap();
        }
    }
    out
}

/// SVG 1.1 document whose viewBox equals the curve's bounding box. The y
/// axis is flipped so that the picture is upright.
pub fn to_svg(curve: &TracedCurve, placement: &CartesianPlacement, markers: &[Marker]) -> String {
    let b = curve.bbox;
    let flip = |p: &CartesianPoint| (p.x, b.y0 + b.y1 - p.y);
    let scale = b.width().max(b.height());
    let stroke = scale / 400.0;
    let radius = scale / 150.0;
    let font = scale / 30.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\" width=\"800\" height=\"{:.0}\">",
        b.x0,
        b.y0,
        b.width(),
        b.height(),
        800.0 * b.height() / b.width()
    )
    .unwrap();
    let sides = curve.sides.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(
        out,
        "  <title>pedal perspectivity cubic, sides {sides}, resolution {}</title>",
        curve.resolution
    )
    .unwrap();

    let tri = placement
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = flip(v);
            format!("{x:.6},{y:.6}")
        })
        .collect::<Vec<_>>()
        .join(" ");
    writeln!(
        out,
        "  <polygon class=\"triangle\" points=\"{tri}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"{stroke:.6}\"/>"
    )
    .unwrap();

    for (id, line) in curve.polylines.iter().enumerate() {
        let mut d = String::new();
        for (k, p) in line.iter().enumerate() {
            let (x, y) = flip(p);
            let cmd = if k == 0 { 'M' } else { 'L' };
            if k > 0 {
                d.push(' ');
            }
            write!(d, "{cmd}{x:.6} {y:.6}").unwrap();
        }
        writeln!(
            out,
            "  <path id=\"locus-{id}\" class=\"locus\" d=\"{d}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{stroke:.6}\"/>"
        )
        .unwrap();
    }

    for m in markers {
        let (x, y) = flip(&m.at);
        writeln!(
            out,
            "  <g class=\"marker\"><circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"{radius:.6}\" fill=\"#1f4e79\"/><text x=\"{:.6}\" y=\"{:.6}\" font-size=\"{font:.6}\" font-family=\"sans-serif\">{}</text></g>",
            x + radius * 1.5,
            y - radius * 1.5,
            escape(&m.label)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locus::{trace, BoundingBox};
    use crate::TriangleShape;

    #[test]
    fn csv_has_header_and_rows() {
        let t = TriangleShape::from_integers(6, 5, 4).unwrap();
        let curve = trace(&t, BoundingBox::default_for(&t.placement()), 32).unwrap();
        let csv = to_csv(&curve);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("polyline_id,x,y"));
        assert_eq!(csv.lines().count(), 1 + curve.vertex_count());
        assert!(!csv.contains('\r'));
        for row in lines {
            let fields: Vec<_> = row.split(',').collect();
            assert_eq!(fields.len(), 3);
            assert!(fields[1].parse::<f64>().is_ok() && fields[2].parse::<f64>().is_ok());
        }
    }

    #[test]
    fn svg_has_one_path_per_polyline() {
        let t = TriangleShape::from_integers(6, 5, 4).unwrap();
        let pl = t.placement();
        let curve = trace(&t, BoundingBox::default_for(&pl), 32).unwrap();
        let markers = vec![Marker { label: "H".into(), at: pl.vertex(0) }];
        let svg = to_svg(&curve, &pl, &markers);
        assert_eq!(svg.matches("<path ").count(), curve.polylines.len());
        assert!(svg.contains("version=\"1.1\""));
        assert!(svg.contains(&format!("viewBox=\"{:.6} {:.6}", curve.bbox.x0, curve.bbox.y0)));
        assert!(svg.contains(">H</text>"));
        assert_eq!(svg, to_svg(&curve, &pl, &markers));
    }
}
