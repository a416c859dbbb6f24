//! `ridgepath` — scene-file front end for the closed-path / cycle library.
//!
//! Every subcommand reads one JSON scene (or a previously emitted report,
//! whose embedded scene is then used), prints a human-readable verdict, and
//! optionally writes a machine-checkable JSON report. Exit codes: 0 for
//! success or "witness found", 1 for a negative verdict (no cycle, reject,
//! obstructed, nothing found), 2 for input errors.

mod report;
mod scene;
mod search;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use ridgepath::cycles::{
    contains_cycle, extract_inclusion_minimal_cycle, is_cycle, Cycle,
};
use ridgepath::geometry::{Line, Point};
use ridgepath::interp::{
    obstruction_for_data, obstruction_pairing, solve_interpolation, verify_representation,
    InterpolationProblem,
};
use ridgepath::paths::{check_closed_path, check_path, three_line_witness, ClosedPath};
use ridgepath::rational::Rational;

use report::{
    axis_name, case_name, cycle_certificate, cycle_report, witness_report, CheckReport,
    DirectionTable, InterpolateReport, LevelValue, SearchReport, WitnessReport, SEARCH_NOTE,
};
use scene::{point_text, SceneFile};

/// Exact closed-path and cycle certificates for ridge-function
/// interpolation on unions of lines and finite point sets.
#[derive(Parser)]
#[command(name = "ridgepath", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a closed path in the union of three lines (two directions)
    Witness {
        /// Scene file (JSON)
        scene: PathBuf,
        /// Also write the JSON witness report here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a point sequence as a path or a closed path
    Check {
        /// Scene file or previously emitted report (JSON)
        scene: PathBuf,
        /// What to check the sequence as
        #[arg(long, value_enum, default_value_t = CheckMode::Closed)]
        mode: CheckMode,
        /// Also write the JSON verdict here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Find a cycle inside a finite point set
    Cycle {
        /// Scene file or previously emitted report (JSON)
        scene: PathBuf,
        /// Demand a full-support certificate on the whole point set
        #[arg(long, conflicts_with = "minimal")]
        full_support: bool,
        /// Shrink the certificate to an inclusion-minimal cycle
        #[arg(long)]
        minimal: bool,
        /// Also write the JSON certificate here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve one interpolation instance or certify the obstruction
    Interpolate {
        /// Scene file with points and data (JSON)
        scene: PathBuf,
        /// Also write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample the scene's lines and look for cycles empirically
    Search {
        /// Scene file with at least one line (JSON)
        scene: PathBuf,
        /// Points sampled per line
        #[arg(long, default_value_t = 8)]
        samples_per_line: usize,
        /// Seed of the deterministic sample sequence
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render a two-dimensional witness report as a standalone SVG
    Svg {
        /// Witness report emitted by `witness --output` (JSON)
        report: PathBuf,
        /// Write the SVG here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    Path,
    Closed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Witness { scene, output } => cmd_witness(scene, output.as_deref()),
        Command::Check {
            scene,
            mode,
            output,
        } => cmd_check(scene, *mode, output.as_deref()),
        Command::Cycle {
            scene,
            full_support,
            minimal,
            output,
        } => cmd_cycle(scene, *full_support, *minimal, output.as_deref()),
        Command::Interpolate { scene, output } => cmd_interpolate(scene, output.as_deref()),
        Command::Search {
            scene,
            samples_per_line,
            seed,
            output,
        } => cmd_search(scene, *samples_per_line, *seed, output.as_deref()),
        Command::Svg { report, output } => cmd_svg(report, output.as_deref()),
    }
}

/// Reads a scene file; report files are recognized by their embedded
/// `scene` object, which is then used directly (its points are the
/// certified vertices).
fn load_scene_file(path: &Path) -> Result<SceneFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(embedded) = value.get("scene") {
        serde_json::from_value(embedded.clone())
            .map_err(|e| format!("{}: scene: {e}", path.display()))
    } else {
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn write_report<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), String> {
    let Some(path) = output else {
        return Ok(());
    };
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn print_cycle(cycle: &Cycle) {
    for (i, (lam, p)) in cycle.lambda.iter().zip(&cycle.points).enumerate() {
        println!("  λ[{}] = {} at {}", i + 1, lam, point_text(p));
    }
}

/// Data values of the cycle's own points, in cycle order.
fn cycle_local_data(cycle: &Cycle, points: &[Point], data: &[Rational]) -> Vec<Rational> {
    cycle
        .points
        .iter()
        .map(|p| {
            let j = points
                .iter()
                .position(|q| q == p)
                .expect("certificate points come from the scene");
            data[j].clone()
        })
        .collect()
}

fn cmd_witness(path: &Path, output: Option<&Path>) -> Result<ExitCode, String> {
    let file = load_scene_file(path)?;
    let parsed = file.parse()?;
    if parsed.lines.len() != 3 {
        return Err(format!(
            "witness needs exactly 3 lines, scene has {}",
            parsed.lines.len()
        ));
    }
    if parsed.directions.len() != 2 {
        return Err(format!(
            "witness needs exactly 2 directions, scene has {}",
            parsed.directions.len()
        ));
    }
    let lines: [Line; 3] = [
        parsed.lines[0].clone(),
        parsed.lines[1].clone(),
        parsed.lines[2].clone(),
    ];
    let witness = three_line_witness(&lines, &parsed.directions[0], &parsed.directions[1])
        .map_err(|e| e.to_string())?;
    let points = witness.path.points();
    println!(
        "closed path with {} vertices (case: {})",
        points.len(),
        case_name(witness.case)
    );
    for (i, (p, &li)) in points.iter().zip(&witness.assignment).enumerate() {
        println!("  P{} = {} on line {}", i + 1, point_text(p), li + 1);
    }
    println!(
        "checker: accepted (start axis: {})",
        axis_name(witness.path.start_axis())
    );
    write_report(&witness_report(&file, &parsed.directions, &witness), output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(path: &Path, mode: CheckMode, output: Option<&Path>) -> Result<ExitCode, String> {
    let file = load_scene_file(path)?;
    let parsed = file.parse()?;
    let points = parsed
        .points
        .as_ref()
        .ok_or("check needs points in the scene")?;
    if parsed.directions.len() != 2 {
        return Err(format!(
            "check needs exactly 2 directions, scene has {}",
            parsed.directions.len()
        ));
    }
    let (d1, d2) = (&parsed.directions[0], &parsed.directions[1]);
    let (what, mode_name, axis) = match mode {
        CheckMode::Path => ("path", "path", check_path(points, d1, d2)),
        CheckMode::Closed => (
            "closed path",
            "closed",
            if check_closed_path(points, d1, d2) {
                let path = ClosedPath::new(points.clone(), d1.clone(), d2.clone())
                    .expect("just checked");
                Some(path.start_axis())
            } else {
                None
            },
        ),
    };
    let verdict = match axis {
        Some(axis) => {
            println!(
                "accept: {what} with {} vertices (start axis: {})",
                points.len(),
                axis_name(axis)
            );
            CheckReport {
                verdict: "accept".into(),
                mode: mode_name.into(),
                vertices: points.len(),
                start_axis: Some(axis_name(axis).into()),
            }
        }
        None => {
            println!("reject: not a {what} for these directions");
            CheckReport {
                verdict: "reject".into(),
                mode: mode_name.into(),
                vertices: points.len(),
                start_axis: None,
            }
        }
    };
    write_report(&verdict, output)?;
    Ok(if verdict.start_axis.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_cycle(
    path: &Path,
    full_support: bool,
    minimal: bool,
    output: Option<&Path>,
) -> Result<ExitCode, String> {
    let file = load_scene_file(path)?;
    let parsed = file.parse()?;
    let points = parsed
        .points
        .as_ref()
        .ok_or("cycle needs points in the scene")?;
    let found = if full_support {
        is_cycle(points, &parsed.directions).map_err(|e| e.to_string())?
    } else {
        match contains_cycle(points, &parsed.directions).map_err(|e| e.to_string())? {
            Some(cycle) if minimal => Some(
                extract_inclusion_minimal_cycle(&cycle, &parsed.directions)
                    .map_err(|e| e.to_string())?,
            ),
            other => other,
        }
    };
    write_report(
        &cycle_report(&file, full_support, minimal, found.as_ref()),
        output,
    )?;
    match found {
        Some(cycle) => {
            println!("cycle with {} points:", cycle.points.len());
            print_cycle(&cycle);
            println!("verified: all level-group sums vanish");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            if full_support {
                println!("not a cycle: the whole set admits no full-support coefficients");
            } else {
                println!("no cycle: the incidence kernel is trivial");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_interpolate(path: &Path, output: Option<&Path>) -> Result<ExitCode, String> {
    let file = load_scene_file(path)?;
    let parsed = file.parse()?;
    let points = parsed
        .points
        .clone()
        .ok_or("interpolate needs points in the scene")?;
    let data = parsed
        .data
        .clone()
        .ok_or("interpolate needs data in the scene")?;
    let problem = InterpolationProblem::new(points.clone(), parsed.directions.clone(), data.clone())
        .map_err(|e| e.to_string())?;
    match solve_interpolation(&problem).map_err(|e| e.to_string())? {
        Some(assignment) => {
            let verified =
                verify_representation(&assignment, &problem).map_err(|e| e.to_string())?;
            assert!(verified, "solver output must verify");
            println!("representable: exact ridge assignment found");
            let mut tables = Vec::new();
            for (i, table) in assignment.per_direction().iter().enumerate() {
                println!(
                    "direction {} = {}:",
                    i + 1,
                    point_text(parsed.directions[i].components())
                );
                let mut values = Vec::new();
                for (level, value) in table {
                    println!("  g({level}) = {value}");
                    values.push(LevelValue {
                        level: level.to_string(),
                        value: value.to_string(),
                    });
                }
                tables.push(DirectionTable {
                    direction: scene::rational_strings(parsed.directions[i].components()),
                    values,
                });
            }
            println!("verified: assignment reproduces the data exactly");
            write_report(
                &InterpolateReport {
                    verdict: "representable".into(),
                    assignment: Some(tables),
                    certificate: None,
                },
                output,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            let cycle = obstruction_for_data(&points, &parsed.directions, &data)
                .map_err(|e| e.to_string())?
                .expect("unsolvable instances pair nontrivially with some cycle");
            let local = cycle_local_data(&cycle, &points, &data);
            let pairing = obstruction_pairing(&cycle, &local);
            assert!(!pairing.is_zero(), "refuting pairing must be nonzero");
            println!("obstructed: the data is not a ridge sum on these points");
            println!("cycle certificate with {} points:", cycle.points.len());
            print_cycle(&cycle);
            println!("pairing <λ, data> = {pairing} (nonzero refutes representability)");
            write_report(
                &InterpolateReport {
                    verdict: "obstructed".into(),
                    assignment: None,
                    certificate: Some(cycle_certificate(&cycle, Some(&pairing))),
                },
                output,
            )?;
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_search(
    path: &Path,
    samples_per_line: usize,
    seed: u64,
    output: Option<&Path>,
) -> Result<ExitCode, String> {
    let file = load_scene_file(path)?;
    let parsed = file.parse()?;
    let outcome = search::run(&parsed, samples_per_line, seed)?;
    println!(
        "searched {} on {} ({}, {} per line, seed {})",
        plural(outcome.points.len(), "sample point"),
        plural(parsed.lines.len(), "line"),
        plural(parsed.directions.len(), "direction"),
        plural(samples_per_line, "sample"),
        seed
    );
    let (verdict, code) = match &outcome.certificate {
        Some(cycle) => {
            println!("cycle found with {} points:", cycle.points.len());
            print_cycle(cycle);
            ("cycle-found", ExitCode::SUCCESS)
        }
        None => {
            println!("no cycle found among the samples");
            ("none-found", ExitCode::from(1))
        }
    };
    println!("note: {SEARCH_NOTE}");
    write_report(
        &SearchReport {
            verdict: verdict.into(),
            lines: parsed.lines.len(),
            samples_per_line,
            seed,
            points_examined: outcome.points.len(),
            note: SEARCH_NOTE.into(),
            certificate: outcome
                .certificate
                .as_ref()
                .map(|c| cycle_certificate(c, None)),
        },
        output,
    )?;
    Ok(code)
}

fn cmd_svg(path: &Path, output: Option<&Path>) -> Result<ExitCode, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let witness: WitnessReport = serde_json::from_str(&text)
        .map_err(|e| format!("{}: not a witness report: {e}", path.display()))?;
    let doc = svg::render(&witness)?;
    match output {
        Some(target) => {
            fs::write(target, doc).map_err(|e| format!("{}: {e}", target.display()))?
        }
        None => print!("{doc}"),
    }
    Ok(ExitCode::SUCCESS)
}
