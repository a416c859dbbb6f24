//! Deterministic SVG rendering of two-dimensional witness reports.
//!
//! Geometry stays rational until the last step: lines are clipped to an
//! exact world window around the witness, and only the final screen
//! coordinates are converted to fixed-precision decimals. Identical reports
//! therefore render to identical bytes.

use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use ridgepath::geometry::{Line2D, PlanarPoint};
use ridgepath::rational::{int, parse_rational, Rational};

use crate::report::WitnessReport;

const SIZE: f64 = 800.0;
/// 5% of the viewbox kept clear on every side.
const MARGIN: f64 = 40.0;

/// Clips a line to the rectangle `[x0, x1] x [y0, y1]` exactly, returning
/// the segment endpoints (or `None` when the line misses the rectangle).
fn clip_line(
    line: &Line2D,
    x0: &Rational,
    x1: &Rational,
    y0: &Rational,
    y1: &Rational,
) -> Option<(PlanarPoint, PlanarPoint)> {
    let p = line.point_on();
    let d = line.direction();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (pc, dc, low, high) in [(&p[0], &d[0], x0, x1), (&p[1], &d[1], y0, y1)] {
        if dc.is_zero() {
            if pc < low || pc > high {
                return None;
            }
        } else {
            let a = (low - pc) / dc;
            let b = (high - pc) / dc;
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            lo = Some(match lo {
                None => a,
                Some(c) => c.max(a),
            });
            hi = Some(match hi {
                None => b,
                Some(c) => c.min(b),
            });
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        unreachable!("a line direction has a nonzero component");
    };
    if lo > hi {
        return None;
    }
    let at = |t: &Rational| -> PlanarPoint { [&p[0] + t * &d[0], &p[1] + t * &d[1]] };
    Some((at(&lo), at(&hi)))
}

/// Fixed two-decimal formatting without a negative zero.
fn fmt(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

pub fn render(report: &WitnessReport) -> Result<String, String> {
    if report.scene.dimension != 2 {
        return Err(format!(
            "svg needs a two-dimensional witness report, scene has dimension {}",
            report.scene.dimension
        ));
    }
    let mut points: Vec<PlanarPoint> = Vec::with_capacity(report.points.len());
    for (i, row) in report.points.iter().enumerate() {
        if row.len() != 2 {
            return Err(format!(
                "points[{i}]: expected 2 coordinates, found {}",
                row.len()
            ));
        }
        let x = parse_rational(&row[0]).map_err(|e| format!("points[{i}][0]: {e}"))?;
        let y = parse_rational(&row[1]).map_err(|e| format!("points[{i}][1]: {e}"))?;
        points.push([x, y]);
    }
    if points.len() < 2 {
        return Err("witness reports carry at least two points".into());
    }
    let mut lines: Vec<Line2D> = Vec::with_capacity(report.scene.lines.len());
    for (i, raw) in report.scene.lines.iter().enumerate() {
        if raw.base.len() != 2 || raw.dir.len() != 2 {
            return Err(format!("lines[{i}]: expected 2 coordinates per vector"));
        }
        let parse = |texts: &[String], field: &str| -> Result<PlanarPoint, String> {
            Ok([
                parse_rational(&texts[0]).map_err(|e| format!("lines[{i}].{field}[0]: {e}"))?,
                parse_rational(&texts[1]).map_err(|e| format!("lines[{i}].{field}[1]: {e}"))?,
            ])
        };
        let base = parse(&raw.base, "base")?;
        let dir = parse(&raw.dir, "dir")?;
        lines.push(Line2D::from_point_dir(&base, &dir).map_err(|e| format!("lines[{i}]: {e}"))?);
    }

    // Exact bounding box of the witness, opened up when degenerate.
    let mut min_x = points[0][0].clone();
    let mut max_x = points[0][0].clone();
    let mut min_y = points[0][1].clone();
    let mut max_y = points[0][1].clone();
    for p in &points[1..] {
        min_x = min_x.min(p[0].clone());
        max_x = max_x.max(p[0].clone());
        min_y = min_y.min(p[1].clone());
        max_y = max_y.max(p[1].clone());
    }
    if min_x == max_x {
        min_x -= int(1);
        max_x += int(1);
    }
    if min_y == max_y {
        min_y -= int(1);
        max_y += int(1);
    }

    // World window for exact clipping: the bounding box inflated by its own
    // size on every side. The visible area exceeds the box by at most a
    // ninth (the 5% screen margin), so clipped segments always span the
    // whole picture; overshoot past the viewbox is cropped by the viewer.
    let pad_x = &max_x - &min_x;
    let pad_y = &max_y - &min_y;
    let win_x0 = &min_x - &pad_x;
    let win_x1 = &max_x + &pad_x;
    let win_y0 = &min_y - &pad_y;
    let win_y1 = &max_y + &pad_y;

    // Screen transform: uniform scale, centered, y flipped. Display only.
    let w = pad_x.to_f64().expect("finite box");
    let h = pad_y.to_f64().expect("finite box");
    let min_x_f = min_x.to_f64().expect("finite box");
    let min_y_f = min_y.to_f64().expect("finite box");
    let inner = SIZE - 2.0 * MARGIN;
    let scale = (inner / w).min(inner / h);
    let off_x = MARGIN + (inner - w * scale) / 2.0;
    let off_y = MARGIN + (inner - h * scale) / 2.0;
    let sx = |x: &Rational| off_x + (x.to_f64().expect("finite") - min_x_f) * scale;
    let sy = |y: &Rational| SIZE - (off_y + (y.to_f64().expect("finite") - min_y_f) * scale);

    let mut doc = String::new();
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">"
    );
    let _ = writeln!(
        doc,
        "  <title>closed path (case: {})</title>",
        report.case
    );
    doc.push_str("  <style>\n");
    doc.push_str("    .bg { fill: #ffffff; }\n");
    doc.push_str("    .scene-line { stroke: #9aa0a6; stroke-width: 1.5; }\n");
    doc.push_str("    .step { stroke: #1a6fc4; stroke-width: 2.5; }\n");
    doc.push_str("    .vertex { fill: #c62828; }\n");
    doc.push_str("    .label { font-family: sans-serif; font-size: 14px; fill: #202124; }\n");
    doc.push_str("  </style>\n");
    doc.push_str("  <rect class=\"bg\" x=\"0\" y=\"0\" width=\"800\" height=\"800\"/>\n");

    for line in &lines {
        if let Some((a, b)) = clip_line(line, &win_x0, &win_x1, &win_y0, &win_y1) {
            let _ = writeln!(
                doc,
                "  <line class=\"scene-line\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt(sx(&a[0])),
                fmt(sy(&a[1])),
                fmt(sx(&b[0])),
                fmt(sy(&b[1])),
            );
        }
    }

    // A two-point witness travels one segment; longer paths wrap around.
    let segments = if points.len() == 2 { 1 } else { points.len() };
    for i in 0..segments {
        let a = &points[i];
        let b = &points[(i + 1) % points.len()];
        let _ = writeln!(
            doc,
            "  <line class=\"step\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt(sx(&a[0])),
            fmt(sy(&a[1])),
            fmt(sx(&b[0])),
            fmt(sy(&b[1])),
        );
    }

    for (i, p) in points.iter().enumerate() {
        let _ = writeln!(
            doc,
            "  <circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"5\"/>",
            fmt(sx(&p[0])),
            fmt(sy(&p[1])),
        );
        let _ = writeln!(
            doc,
            "  <text class=\"label\" x=\"{}\" y=\"{}\">P{}</text>",
            fmt(sx(&p[0]) + 8.0),
            fmt(sy(&p[1]) - 8.0),
            i + 1,
        );
    }
    doc.push_str("</svg>\n");
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{SceneFile, SceneLine};

    fn hexagon_report() -> WitnessReport {
        let strings = |rows: &[[&str; 2]]| -> Vec<Vec<String>> {
            rows.iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect()
        };
        let points = strings(&[
            ["1", "1"],
            ["1", "2"],
            ["2", "2"],
            ["2", "6"],
            ["3", "6"],
            ["3", "1"],
        ]);
        WitnessReport {
            verdict: "closed-path".into(),
            case: "concurrent".into(),
            start_axis: "first".into(),
            points: points.clone(),
            lambda: vec!["-1", "1", "-1", "1", "-1", "1"]
                .into_iter()
                .map(String::from)
                .collect(),
            line_assignment: vec![0, 1, 2, 0, 1, 2],
            trace: vec![],
            scene: SceneFile {
                dimension: 2,
                directions: strings(&[["1", "0"], ["0", "1"]]),
                lines: vec![
                    SceneLine {
                        base: vec!["0".into(), "0".into()],
                        dir: vec!["1".into(), "1".into()],
                    },
                    SceneLine {
                        base: vec!["0".into(), "0".into()],
                        dir: vec!["1".into(), "2".into()],
                    },
                    SceneLine {
                        base: vec!["0".into(), "0".into()],
                        dir: vec!["1".into(), "3".into()],
                    },
                ],
                points: Some(points),
                data: None,
            },
        }
    }

    #[test]
    fn hexagon_renders_six_dots_and_segments() {
        let doc = render(&hexagon_report()).expect("2d report");
        assert_eq!(doc.matches("class=\"vertex\"").count(), 6);
        assert_eq!(doc.matches("class=\"step\"").count(), 6);
        assert_eq!(doc.matches("class=\"scene-line\"").count(), 3);
        assert!(doc.contains(">P1<") && doc.contains(">P6<"));
        assert!(doc.starts_with("<svg "));
        assert!(doc.ends_with("</svg>\n"));
    }

    #[test]
    fn two_point_witness_renders_one_segment() {
        let mut report = hexagon_report();
        report.points.truncate(2);
        report.lambda.truncate(2);
        report.line_assignment.truncate(2);
        let doc = render(&report).expect("2d report");
        assert_eq!(doc.matches("class=\"vertex\"").count(), 2);
        assert_eq!(doc.matches("class=\"step\"").count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let report = hexagon_report();
        assert_eq!(
            render(&report).expect("2d report"),
            render(&report).expect("2d report")
        );
    }

    #[test]
    fn non_planar_reports_are_rejected() {
        let mut report = hexagon_report();
        report.scene.dimension = 3;
        assert!(render(&report).is_err());
    }

    #[test]
    fn clipping_is_exact() {
        let diag = Line2D::from_point_dir(&[int(0), int(0)], &[int(1), int(1)])
            .expect("nonzero direction");
        let (a, b) = clip_line(&diag, &int(-2), &int(5), &int(-1), &int(3))
            .expect("diagonal crosses the window");
        // Endpoint order follows the canonical direction vector; compare as
        // a set.
        let expected = [[int(-1), int(-1)], [int(3), int(3)]];
        assert!(
            (a == expected[0] && b == expected[1]) || (a == expected[1] && b == expected[0]),
            "got {a:?} .. {b:?}"
        );
        let horizontal = Line2D::from_point_dir(&[int(0), int(10)], &[int(1), int(0)])
            .expect("nonzero direction");
        assert!(clip_line(&horizontal, &int(-2), &int(5), &int(-1), &int(3)).is_none());
    }
}
