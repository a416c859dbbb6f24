//! Scene files: the single JSON input format shared by every subcommand.
//!
//! All rationals travel as strings ("p/q" or an integer string) so no binary
//! floating point can creep in, and unknown fields are rejected so typos
//! fail loudly instead of being ignored.

use serde::{Deserialize, Serialize};

use ridgepath::geometry::{Direction, Line, Point};
use ridgepath::rational::{parse_rational, Rational};

/// On-disk scene description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub dimension: usize,
    pub directions: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<SceneLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Vec<String>>,
}

/// A straight line `base + t * dir`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneLine {
    pub base: Vec<String>,
    pub dir: Vec<String>,
}

/// Fully parsed and validated scene. The dimension survives as the length
/// of every vector, so it is not repeated here.
#[derive(Debug, Clone)]
pub struct Scene {
    pub directions: Vec<Direction>,
    pub lines: Vec<Line>,
    pub points: Option<Vec<Point>>,
    pub data: Option<Vec<Rational>>,
}

fn parse_vector(field: &str, expected: usize, raw: &[String]) -> Result<Vec<Rational>, String> {
    if raw.len() != expected {
        return Err(format!(
            "{field}: expected {expected} coordinates, found {}",
            raw.len()
        ));
    }
    raw.iter()
        .enumerate()
        .map(|(j, text)| parse_rational(text).map_err(|e| format!("{field}[{j}]: {e}")))
        .collect()
}

impl SceneFile {
    /// Semantic validation; every error names the offending field.
    pub fn parse(&self) -> Result<Scene, String> {
        let n = self.dimension;
        if n == 0 {
            return Err("dimension: must be at least 1".into());
        }
        if self.directions.is_empty() {
            return Err("directions: at least one direction is required".into());
        }
        let mut directions = Vec::with_capacity(self.directions.len());
        for (i, raw) in self.directions.iter().enumerate() {
            let v = parse_vector(&format!("directions[{i}]"), n, raw)?;
            directions.push(Direction::new(v).map_err(|e| format!("directions[{i}]: {e}"))?);
        }
        let mut lines = Vec::with_capacity(self.lines.len());
        for (i, raw) in self.lines.iter().enumerate() {
            let base = parse_vector(&format!("lines[{i}].base"), n, &raw.base)?;
            let dir = parse_vector(&format!("lines[{i}].dir"), n, &raw.dir)?;
            lines.push(Line::new(base, dir).map_err(|e| format!("lines[{i}]: {e}"))?);
        }
        let points = match &self.points {
            None => None,
            Some(rows) => {
                let mut points: Vec<Point> = Vec::with_capacity(rows.len());
                for (i, raw) in rows.iter().enumerate() {
                    points.push(parse_vector(&format!("points[{i}]"), n, raw)?);
                }
                Some(points)
            }
        };
        let data = match &self.data {
            None => None,
            Some(raw) => {
                let points = points
                    .as_ref()
                    .ok_or("data: requires points in the same scene")?;
                if raw.len() != points.len() {
                    return Err(format!(
                        "data: expected one value per point ({} points, {} values)",
                        points.len(),
                        raw.len()
                    ));
                }
                let mut data = Vec::with_capacity(raw.len());
                for (i, text) in raw.iter().enumerate() {
                    data.push(parse_rational(text).map_err(|e| format!("data[{i}]: {e}"))?);
                }
                Some(data)
            }
        };
        Ok(Scene {
            directions,
            lines,
            points,
            data,
        })
    }

    /// The same scene with its point list replaced (used when embedding a
    /// witness or certificate back into a report).
    pub fn with_points(&self, points: &[Point]) -> SceneFile {
        SceneFile {
            dimension: self.dimension,
            directions: self.directions.clone(),
            lines: self.lines.clone(),
            points: Some(point_rows(points)),
            data: None,
        }
    }
}

/// Renders rationals back to their canonical string form.
pub fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// One row of strings per point.
pub fn point_rows(points: &[Point]) -> Vec<Vec<String>> {
    points.iter().map(|p| rational_strings(p)).collect()
}

/// Human-readable tuple like `(0, -7/5)`.
pub fn point_text(coords: &[Rational]) -> String {
    let inner: Vec<String> = coords.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(", "))
}
