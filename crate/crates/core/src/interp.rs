//! Interpolation by sums of ridge functions on finite point sets.
//!
//! A ridge sum `x -> g_1(a^1 . x) + ... + g_r(a^r . x)` only sees each
//! point's levels, so matching prescribed data is a linear system: one
//! unknown per `(direction, level)` pair, one equation per point — the
//! transpose of the cycle incidence matrix. Every data vector is matchable
//! exactly when that matrix has trivial kernel, i.e. the points contain no
//! cycle; otherwise any cycle pairs nontrivially with some data vector and
//! certifies the failure.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cycles::{build_incidence, contains_cycle, Cycle, LevelIndex};
use crate::error::Error;
use crate::geometry::{Direction, Point};
use crate::matrix::{solve_linear, LinearSolution};
use crate::rational::Rational;

/// One finite interpolation instance: match `data[j]` at `points[j]` by a
/// ridge sum over the given directions.
#[derive(Debug, Clone)]
pub struct InterpolationProblem {
    points: Vec<Point>,
    directions: Vec<Direction>,
    data: Vec<Rational>,
}

impl InterpolationProblem {
    /// Validates dimensions, pairwise distinctness of the points, and that
    /// the data aligns with the points.
    pub fn new(
        points: Vec<Point>,
        directions: Vec<Direction>,
        data: Vec<Rational>,
    ) -> Result<Self, Error> {
        if data.len() != points.len() {
            return Err(Error::DimensionMismatch {
                expected: points.len(),
                found: data.len(),
            });
        }
        build_incidence(&points, &directions)?;
        Ok(InterpolationProblem {
            points,
            directions,
            data,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }
}

/// Values of the ridge summands on the finitely many levels present: for
/// each direction, a map `level -> g_i(level)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RidgeAssignment {
    per_direction: Vec<BTreeMap<Rational, Rational>>,
}

impl RidgeAssignment {
    pub fn per_direction(&self) -> &[BTreeMap<Rational, Rational>] {
        &self.per_direction
    }

    pub fn value_at(&self, direction: usize, level: &Rational) -> Option<&Rational> {
        self.per_direction.get(direction)?.get(level)
    }
}

/// Decides whether every possible data vector on `points` is matchable by a
/// ridge sum; when not, returns the cycle certificate.
///
/// Matchability for all data means the evaluation map from per-level ridge
/// values onto point values is surjective, which holds iff the incidence
/// matrix has trivial kernel — iff the points contain no cycle.
pub fn interpolable_for_all_data(
    points: &[Point],
    directions: &[Direction],
) -> Result<(bool, Option<Cycle>), Error> {
    match contains_cycle(points, directions)? {
        Some(cycle) => Ok((false, Some(cycle))),
        None => Ok((true, None)),
    }
}

/// Solves one instance exactly, or reports inconsistency.
///
/// Unknowns are ordered like the incidence rows (directions in order, levels
/// ascending); free unknowns are pinned to zero so the output is
/// reproducible.
pub fn solve_interpolation(
    problem: &InterpolationProblem,
) -> Result<Option<RidgeAssignment>, Error> {
    let (incidence, index) = build_incidence(&problem.points, &problem.directions)?;
    let system = incidence.transpose();
    let solution = match solve_linear(&system, &problem.data)? {
        LinearSolution::Inconsistent => return Ok(None),
        LinearSolution::Unique(values) => values,
        LinearSolution::Parametric { particular, .. } => particular,
    };
    Ok(Some(assignment_from(&index, &solution)))
}

fn assignment_from(index: &LevelIndex, values: &[Rational]) -> RidgeAssignment {
    let mut per_direction = Vec::with_capacity(index.direction_count());
    let mut next = 0;
    for direction in 0..index.direction_count() {
        let mut map = BTreeMap::new();
        for (level, _) in index.groups_of(direction) {
            map.insert(level.clone(), values[next].clone());
            next += 1;
        }
        per_direction.push(map);
    }
    RidgeAssignment { per_direction }
}

/// Checks `sum_i g_i(a^i . x_j) = data[j]` for every point, exactly.
/// A level of some point absent from the assignment is an error, not a
/// mismatch.
pub fn verify_representation(
    assignment: &RidgeAssignment,
    problem: &InterpolationProblem,
) -> Result<bool, Error> {
    if assignment.per_direction.len() != problem.directions.len() {
        return Err(Error::DimensionMismatch {
            expected: problem.directions.len(),
            found: assignment.per_direction.len(),
        });
    }
    for (point, expected) in problem.points.iter().zip(&problem.data) {
        let mut sum = Rational::zero();
        for (i, direction) in problem.directions.iter().enumerate() {
            let level = direction.level_of(point);
            match assignment.per_direction[i].get(&level) {
                Some(value) => sum += value,
                None => return Err(Error::MissingLevel { direction: i, level }),
            }
        }
        if &sum != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pairing `sum_j lambda_j F(x_j)` of a cycle against data given on the
/// cycle's own points. It vanishes on every ridge sum (group the terms by
/// level; each group sum is zero), so a nonzero value refutes
/// representability.
pub fn obstruction_pairing(cycle: &Cycle, data: &[Rational]) -> Rational {
    assert_eq!(data.len(), cycle.lambda.len(), "one value per cycle point");
    cycle
        .lambda
        .iter()
        .zip(data)
        .map(|(coefficient, value)| coefficient * value)
        .sum()
}

/// A cycle certificate whose pairing against `data` is nonzero, or `None`
/// when `data` is a ridge sum on `points`.
///
/// Data is representable iff it is orthogonal to the whole incidence kernel,
/// so scanning the deterministic certificate first and then the kernel basis
/// (each restricted to its support) either finds a refuting cycle or proves
/// representability.
pub fn obstruction_for_data(
    points: &[Point],
    directions: &[Direction],
    data: &[Rational],
) -> Result<Option<Cycle>, Error> {
    assert_eq!(data.len(), points.len(), "one value per point");
    let data_at = |cycle: &Cycle| -> Vec<Rational> {
        cycle
            .points
            .iter()
            .map(|p| {
                let j = points
                    .iter()
                    .position(|q| q == p)
                    .expect("cycle points come from the input");
                data[j].clone()
            })
            .collect()
    };
    let preferred = match contains_cycle(points, directions)? {
        None => return Ok(None),
        Some(cycle) => cycle,
    };
    if !obstruction_pairing(&preferred, &data_at(&preferred)).is_zero() {
        return Ok(Some(preferred));
    }
    let (matrix, _) = build_incidence(points, directions)?;
    for vector in matrix.nullspace_basis() {
        let pairing: Rational = vector
            .iter()
            .zip(data)
            .map(|(coefficient, value)| coefficient * value)
            .sum();
        if !pairing.is_zero() {
            let mut support_points = Vec::new();
            let mut lambda = Vec::new();
            for (j, coefficient) in vector.iter().enumerate() {
                if !coefficient.is_zero() {
                    support_points.push(points[j].clone());
                    lambda.push(coefficient.clone());
                }
            }
            return Ok(Some(Cycle {
                points: support_points,
                lambda,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pt(xs: &[i64]) -> Point {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn coordinate_dirs(n: usize) -> Vec<Direction> {
        (0..n)
            .map(|i| {
                let mut v = vec![int(0); n];
                v[i] = int(1);
                Direction::new(v).unwrap()
            })
            .collect()
    }

    fn rectangle() -> Vec<Point> {
        vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 1]), pt(&[1, 0])]
    }

    fn staircase() -> Vec<Point> {
        vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 1]), pt(&[1, 2]), pt(&[2, 2])]
    }

    #[test]
    fn staircase_admits_all_data() {
        let (ok, certificate) =
            interpolable_for_all_data(&staircase(), &coordinate_dirs(2)).unwrap();
        assert!(ok);
        assert!(certificate.is_none());
    }

    #[test]
    fn rectangle_refuses_some_data() {
        let (ok, certificate) =
            interpolable_for_all_data(&rectangle(), &coordinate_dirs(2)).unwrap();
        assert!(!ok);
        let cycle = certificate.unwrap();
        assert_eq!(cycle.lambda, vec![int(-1), int(1), int(-1), int(1)]);
    }

    #[test]
    fn five_point_set_refuses_some_data() {
        let points = vec![
            pt(&[0, 0, 0]),
            pt(&[0, 0, 1]),
            pt(&[0, 1, 0]),
            pt(&[1, 0, 0]),
            pt(&[1, 1, 1]),
        ];
        let (ok, certificate) =
            interpolable_for_all_data(&points, &coordinate_dirs(3)).unwrap();
        assert!(!ok);
        assert_eq!(
            certificate.unwrap().lambda,
            vec![int(2), int(-1), int(-1), int(-1), int(1)]
        );
    }

    #[test]
    fn zero_data_on_the_rectangle_gets_the_zero_assignment() {
        let problem = InterpolationProblem::new(
            rectangle(),
            coordinate_dirs(2),
            vec![int(0); 4],
        )
        .unwrap();
        let assignment = solve_interpolation(&problem).unwrap().unwrap();
        for map in assignment.per_direction() {
            for value in map.values() {
                assert!(value.is_zero());
            }
        }
        assert!(verify_representation(&assignment, &problem).unwrap());
    }

    #[test]
    fn spiked_data_on_the_rectangle_is_unsolvable_with_pairing_one() {
        let data = vec![int(1), int(0), int(0), int(0)];
        let problem =
            InterpolationProblem::new(rectangle(), coordinate_dirs(2), data.clone()).unwrap();
        assert!(solve_interpolation(&problem).unwrap().is_none());
        let cycle = obstruction_for_data(&rectangle(), &coordinate_dirs(2), &data)
            .unwrap()
            .expect("a refuting cycle exists");
        let pairing = obstruction_pairing(&cycle, &data);
        assert_eq!(pairing, int(-1), "deterministic lambda starts at -1");
    }

    #[test]
    fn staircase_solves_and_verifies_arbitrary_data() {
        let data = vec![int(3), rat(1, 2), int(-7), int(0), rat(22, 7)];
        let problem =
            InterpolationProblem::new(staircase(), coordinate_dirs(2), data).unwrap();
        let assignment = solve_interpolation(&problem).unwrap().expect("no cycles");
        assert!(verify_representation(&assignment, &problem).unwrap());
    }

    #[test]
    fn perturbed_assignments_are_rejected() {
        let data = vec![int(1), int(2), int(3), int(4), int(5)];
        let problem =
            InterpolationProblem::new(staircase(), coordinate_dirs(2), data).unwrap();
        let assignment = solve_interpolation(&problem).unwrap().unwrap();
        let mut broken = assignment.per_direction().to_vec();
        let (level, value) = broken[0].iter().next().map(|(l, v)| (l.clone(), v.clone())).unwrap();
        broken[0].insert(level, value + int(1));
        let broken = RidgeAssignment {
            per_direction: broken,
        };
        assert_eq!(verify_representation(&broken, &problem), Ok(false));
    }

    #[test]
    fn missing_level_is_an_error_not_a_mismatch() {
        let data = vec![int(1), int(2), int(3), int(4), int(5)];
        let problem =
            InterpolationProblem::new(staircase(), coordinate_dirs(2), data).unwrap();
        let assignment = solve_interpolation(&problem).unwrap().unwrap();
        let mut points = staircase();
        points.push(pt(&[9, 9]));
        let bigger = InterpolationProblem::new(
            points,
            coordinate_dirs(2),
            vec![int(1), int(2), int(3), int(4), int(5), int(6)],
        )
        .unwrap();
        assert_eq!(
            verify_representation(&assignment, &bigger),
            Err(Error::MissingLevel {
                direction: 0,
                level: int(9)
            })
        );
    }

    #[test]
    fn ridge_sums_are_annihilated_by_the_pairing() {
        // data_j = g1(x_j) + g2(y_j) for arbitrary level values.
        let g1 = |x: &Rational| x * int(3) + int(1);
        let g2 = |y: &Rational| y * y - int(4);
        let points = rectangle();
        let dirs = coordinate_dirs(2);
        let data: Vec<Rational> = points
            .iter()
            .map(|p| g1(&dirs[0].level_of(p)) + g2(&dirs[1].level_of(p)))
            .collect();
        assert_eq!(obstruction_for_data(&points, &dirs, &data).unwrap(), None);
        let cycle = contains_cycle(&points, &dirs).unwrap().unwrap();
        let on_cycle: Vec<Rational> = data.clone();
        assert!(obstruction_pairing(&cycle, &on_cycle).is_zero());
    }

    #[test]
    fn data_length_must_match() {
        let err = InterpolationProblem::new(rectangle(), coordinate_dirs(2), vec![int(1)])
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 4, found: 1 });
    }
}
