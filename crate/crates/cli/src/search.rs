//! Empirical cycle search over discretized lines.
//!
//! Lines are sampled at deterministic rational parameters derived from the
//! seed, so identical invocations examine identical point sets. For two
//! directions and at least three lines, the closed-path witness of every
//! line triple is injected into the sample set: whenever a triple admits a
//! witness at all, detection is then guaranteed rather than left to sampling
//! luck. Absence of a cycle among the samples proves nothing about the full
//! (infinite) lines, and the report says so.

use std::collections::BTreeSet;

use ridgepath::cycles::{contains_cycle, Cycle};
use ridgepath::geometry::{Line, Point};
use ridgepath::paths::three_line_witness;
use ridgepath::rational::{rat, Rational};

use crate::scene::Scene;

pub struct SearchOutcome {
    pub points: Vec<Point>,
    pub certificate: Option<Cycle>,
}

/// Deterministic rational parameter for sample `k` of line `line_index`.
///
/// A 16-bit multiplicative scramble (multiplier 40503, the classic Fibonacci
/// hashing constant for 16 bits) spreads consecutive samples over the range;
/// the parameter has denominator 64 and magnitude at most 512.
fn sample_parameter(seed: u64, line_index: usize, k: usize) -> Rational {
    let mixed = 40503u64
        .wrapping_mul(seed.wrapping_add(k as u64).wrapping_add(1))
        .wrapping_add(9973u64.wrapping_mul(line_index as u64 + 1));
    let n = (mixed % 65536) as i64;
    rat(n - 32768, 64)
}

pub fn run(scene: &Scene, samples_per_line: usize, seed: u64) -> Result<SearchOutcome, String> {
    if scene.lines.is_empty() {
        return Err("search needs at least one line in the scene".into());
    }
    let mut points: Vec<Point> = Vec::new();
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut add = |p: Point, points: &mut Vec<Point>| {
        if seen.insert(p.clone()) {
            points.push(p);
        }
    };

    if let Some(given) = &scene.points {
        for p in given {
            add(p.clone(), &mut points);
        }
    }
    for (li, line) in scene.lines.iter().enumerate() {
        for k in 0..samples_per_line {
            add(line.point_at(&sample_parameter(seed, li, k)), &mut points);
        }
    }
    if scene.directions.len() == 2 && scene.lines.len() >= 3 {
        let m = scene.lines.len();
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let triple: [Line; 3] = [
                        scene.lines[i].clone(),
                        scene.lines[j].clone(),
                        scene.lines[k].clone(),
                    ];
                    // Triples without a witness (coinciding lines, dependent
                    // directions) are simply skipped.
                    if let Ok(witness) =
                        three_line_witness(&triple, &scene.directions[0], &scene.directions[1])
                    {
                        for p in witness.path.points() {
                            add(p.clone(), &mut points);
                        }
                    }
                }
            }
        }
    }

    let certificate = contains_cycle(&points, &scene.directions).map_err(|e| e.to_string())?;
    Ok(SearchOutcome {
        points,
        certificate,
    })
}
