//! Machine-checkable JSON reports emitted by the subcommands.
//!
//! Every report that certifies something embeds a complete scene whose
//! `points` are the certified vertices, so feeding the report file back into
//! `check` or `cycle` re-validates it independently.

use serde::{Deserialize, Serialize};

use ridgepath::cycles::Cycle;
use ridgepath::geometry::Direction;
use ridgepath::paths::{CaseTag, StartAxis, ThreeLineWitness};
use ridgepath::rational::Rational;

use crate::scene::{point_rows, point_text, rational_strings, SceneFile};

pub fn case_name(tag: CaseTag) -> &'static str {
    match tag {
        CaseTag::PointProjection => "point-projection",
        CaseTag::CoincidentProjections => "coincident-projections",
        CaseTag::RepeatedPreimage => "repeated-preimage",
        CaseTag::AxisParallel => "axis-parallel",
        CaseTag::AllParallel => "all-parallel",
        CaseTag::Concurrent => "concurrent",
        CaseTag::Generic => "generic",
    }
}

pub fn axis_name(axis: StartAxis) -> &'static str {
    match axis {
        StartAxis::First => "first",
        StartAxis::Second => "second",
    }
}

/// Closed-path witness in the union of three lines.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessReport {
    pub verdict: String,
    pub case: String,
    pub start_axis: String,
    pub points: Vec<Vec<String>>,
    pub lambda: Vec<String>,
    pub line_assignment: Vec<usize>,
    pub trace: Vec<String>,
    pub scene: SceneFile,
}

pub fn witness_report(
    input: &SceneFile,
    directions: &[Direction],
    witness: &ThreeLineWitness,
) -> WitnessReport {
    let points = witness.path.points();
    let trace = vec![
        format!(
            "scene: 3 lines in R^{}, directions {} and {}",
            input.dimension,
            point_text(directions[0].components()),
            point_text(directions[1].components()),
        ),
        format!("construction case: {}", case_name(witness.case)),
        format!(
            "closed path with {} vertices; checker accepted (start axis: {})",
            points.len(),
            axis_name(witness.path.start_axis()),
        ),
    ];
    WitnessReport {
        verdict: "closed-path".into(),
        case: case_name(witness.case).into(),
        start_axis: axis_name(witness.path.start_axis()).into(),
        points: point_rows(points),
        lambda: rational_strings(&witness.path.alternating_weights()),
        line_assignment: witness.assignment.clone(),
        trace,
        scene: input.with_points(points),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: String,
    pub mode: String,
    pub vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start_axis: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleReport {
    pub verdict: String,
    pub full_support: bool,
    pub minimal: bool,
    pub points: Vec<Vec<String>>,
    pub lambda: Vec<String>,
    pub scene: SceneFile,
}

pub fn cycle_report(
    input: &SceneFile,
    full_support: bool,
    minimal: bool,
    found: Option<&Cycle>,
) -> CycleReport {
    match found {
        Some(cycle) => CycleReport {
            verdict: "cycle".into(),
            full_support,
            minimal,
            points: point_rows(&cycle.points),
            lambda: rational_strings(&cycle.lambda),
            scene: input.with_points(&cycle.points),
        },
        None => CycleReport {
            verdict: "no-cycle".into(),
            full_support,
            minimal,
            points: Vec::new(),
            lambda: Vec::new(),
            scene: input.clone(),
        },
    }
}

/// A cycle paired against concrete data values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub points: Vec<Vec<String>>,
    pub lambda: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<String>,
}

pub fn cycle_certificate(cycle: &Cycle, pairing: Option<&Rational>) -> CycleCertificate {
    CycleCertificate {
        points: point_rows(&cycle.points),
        lambda: rational_strings(&cycle.lambda),
        pairing: pairing.map(ToString::to_string),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelValue {
    pub level: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DirectionTable {
    pub direction: Vec<String>,
    pub values: Vec<LevelValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InterpolateReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<DirectionTable>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CycleCertificate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub verdict: String,
    pub lines: usize,
    pub samples_per_line: usize,
    pub seed: u64,
    pub points_examined: usize,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CycleCertificate>,
}

/// The disclaimer attached to every search outcome.
pub const SEARCH_NOTE: &str =
    "empirical — absence on samples does not prove absence on lines";
