//! Randomized invariants tying cycles, closed paths, and interpolation
//! together on finite point sets.

use num_traits::Zero;
use proptest::prelude::*;

use ridgepath::cycles::{
    build_incidence, contains_cycle, decompose_two_direction_cycle,
    extract_inclusion_minimal_cycle, is_cycle, Cycle,
};
use ridgepath::geometry::{complete_to_basis, Direction, Point};
use ridgepath::interp::{
    interpolable_for_all_data, obstruction_for_data, obstruction_pairing, solve_interpolation,
    verify_representation, InterpolationProblem,
};
use ridgepath::paths::{check_closed_path, find_closed_path_finite};
use ridgepath::rational::{int, rat, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Up to `max_k` pairwise-distinct integer points in `[-3, 3]^n`.
fn point_set(n: usize, max_k: usize) -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::btree_set(proptest::collection::vec(-3i64..=3, n), 1..=max_k)
        .prop_map(|set| {
            set.into_iter()
                .map(|coords| coords.into_iter().map(int).collect())
                .collect()
        })
}

/// `r` pairwise-distinct nonzero integer directions in `R^n`.
fn directions(n: usize, r: usize) -> impl Strategy<Value = Vec<Direction>> {
    proptest::collection::vec(
        proptest::collection::vec(-3i64..=3, n)
            .prop_filter("nonzero direction", |v| v.iter().any(|&x| x != 0)),
        r,
    )
    .prop_filter("pairwise distinct directions", |vs| {
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if vs[i] == vs[j] {
                    return false;
                }
            }
        }
        true
    })
    .prop_map(|vs| {
        vs.into_iter()
            .map(|v| {
                Direction::new(v.into_iter().map(int).collect()).expect("filtered nonzero")
            })
            .collect()
    })
}

fn instance() -> impl Strategy<Value = (Vec<Point>, Vec<Direction>)> {
    (2usize..=3, 2usize..=3)
        .prop_flat_map(|(n, r)| (point_set(n, 8), directions(n, r)))
}

fn instance_with_data() -> impl Strategy<Value = (Vec<Point>, Vec<Direction>, Vec<Rational>)> {
    instance().prop_flat_map(|(points, dirs)| {
        let k = points.len();
        (
            Just(points),
            Just(dirs),
            proptest::collection::vec(small_rational(), k),
        )
    })
}

/// Data values of one cycle's points, pulled out of the full data vector.
fn cycle_local_data(cycle: &Cycle, points: &[Point], data: &[Rational]) -> Vec<Rational> {
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
}

/// Axis-aligned rectangles in level space with pairwise-disjoint level
/// ranges, pulled back through a random basis change. Their union is a
/// cycle for the chosen directions, and rectangle `i` keeps its levels in
/// `[10i, 10i + 9]`, so distinct rectangles never share a level.
fn disjoint_rectangles() -> impl Strategy<Value = (Vec<Point>, Vec<Direction>)> {
    let pair = (
        proptest::collection::vec(small_rational(), 2)
            .prop_filter("nonzero direction", |v| v.iter().any(|x| !x.is_zero())),
        proptest::collection::vec(small_rational(), 2)
            .prop_filter("nonzero direction", |v| v.iter().any(|x| !x.is_zero())),
    )
        .prop_filter("independent directions", |(a, b)| {
            &a[0] * &b[1] != &a[1] * &b[0]
        });
    let rects = proptest::collection::vec((0i64..=3, 0i64..=3, 1i64..=5, 1i64..=5), 1..=3);
    (pair, rects).prop_map(|((a1, a2), rects)| {
        let a1 = Direction::new(a1).expect("filtered nonzero");
        let a2 = Direction::new(a2).expect("filtered nonzero");
        let map = complete_to_basis(&a1, &a2).expect("filtered independent");
        let mut points = Vec::new();
        for (i, (x0, y0, dx, dy)) in rects.into_iter().enumerate() {
            let base = 10 * i as i64;
            let (u, v) = (int(base + x0), int(base + x0 + dx));
            let (s, t) = (int(base + y0), int(base + y0 + dy));
            for corner in [
                vec![u.clone(), s.clone()],
                vec![u.clone(), t.clone()],
                vec![v.clone(), t.clone()],
                vec![v.clone(), s.clone()],
            ] {
                points.push(map.inverse_transform_point(&corner));
            }
        }
        (points, vec![a1, a2])
    })
}

proptest! {
    #[test]
    fn incidence_columns_sum_to_the_direction_count((points, dirs) in instance()) {
        let (matrix, index) = build_incidence(&points, &dirs).expect("distinct points");
        prop_assert_eq!(matrix.rows(), index.row_count());
        prop_assert_eq!(matrix.cols(), points.len());
        for c in 0..matrix.cols() {
            let mut sum = Rational::zero();
            for r in 0..matrix.rows() {
                sum += matrix.get(r, c);
            }
            prop_assert_eq!(sum, int(dirs.len() as i64));
        }
    }

    #[test]
    fn cycle_certificates_verify((points, dirs) in instance()) {
        if let Some(cycle) = contains_cycle(&points, &dirs).expect("distinct points") {
            prop_assert!(cycle.verify(&dirs));
            prop_assert!(!cycle.points.is_empty());
            for p in &cycle.points {
                prop_assert!(points.contains(p), "certificate point outside the input");
            }
        }
    }

    /// For two directions, cycles and closed paths exist together.
    #[test]
    fn cycles_match_closed_paths_for_two_directions(
        (n, points, dirs) in (2usize..=3)
            .prop_flat_map(|n| (Just(n), point_set(n, 8), directions(n, 2))),
    ) {
        let _ = n;
        let cycle = contains_cycle(&points, &dirs).expect("distinct points");
        let path = find_closed_path_finite(&points, &dirs[0], &dirs[1])
            .expect("distinct points");
        prop_assert_eq!(cycle.is_some(), path.is_some());
        if let Some(path) = path {
            prop_assert!(check_closed_path(path.points(), &dirs[0], &dirs[1]));
            // The path's alternating weights certify its vertex set as a
            // cycle in its own right.
            let from_path = Cycle {
                points: path.points().to_vec(),
                lambda: path.alternating_weights(),
            };
            prop_assert!(from_path.verify(&dirs));
        }
    }

    /// Adding points never destroys a cycle.
    #[test]
    fn contains_cycle_is_monotone(
        ((points, dirs), extra) in (2usize..=3, 2usize..=3)
            .prop_flat_map(|(n, r)| {
                ((point_set(n, 6), directions(n, r)), point_set(n, 4))
            }),
    ) {
        let smaller = contains_cycle(&points, &dirs).expect("distinct points");
        let mut union = points.clone();
        for p in extra {
            if !union.contains(&p) {
                union.push(p);
            }
        }
        let larger = contains_cycle(&union, &dirs).expect("deduplicated union");
        if smaller.is_some() {
            prop_assert!(larger.is_some());
        }
    }

    /// Rescaling directions by nonzero rationals (sign flips included)
    /// changes neither the verdict nor the deterministic certificate.
    #[test]
    fn certificates_ignore_direction_scaling(
        ((points, dirs), scales) in (2usize..=3, 2usize..=3)
            .prop_flat_map(|(n, r)| {
                (
                    (point_set(n, 8), directions(n, r)),
                    proptest::collection::vec(
                        (-4i64..=4, 1i64..=3).prop_map(|(a, b)| rat(a, b))
                            .prop_filter("nonzero scale", |x| !x.is_zero()),
                        r,
                    ),
                )
            }),
    ) {
        let scaled: Vec<Direction> = dirs
            .iter()
            .zip(&scales)
            .map(|(d, c)| {
                Direction::new(d.components().iter().map(|x| x * c).collect())
                    .expect("nonzero scale keeps the direction nonzero")
            })
            .collect();
        let original = contains_cycle(&points, &dirs).expect("distinct points");
        let rescaled = contains_cycle(&points, &scaled).expect("distinct points");
        prop_assert_eq!(original, rescaled);
    }

    /// Inclusion-minimal means: the certificate survives, and dropping any
    /// single point of it kills every cycle.
    #[test]
    fn minimal_cycles_are_inclusion_minimal((points, dirs) in instance()) {
        if let Some(cycle) = contains_cycle(&points, &dirs).expect("distinct points") {
            let minimal = extract_inclusion_minimal_cycle(&cycle, &dirs)
                .expect("certificate verifies");
            prop_assert!(minimal.verify(&dirs));
            for p in &minimal.points {
                prop_assert!(cycle.points.contains(p));
            }
            for drop in 0..minimal.points.len() {
                let rest: Vec<Point> = minimal
                    .points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, p)| p.clone())
                    .collect();
                if rest.is_empty() {
                    continue;
                }
                prop_assert!(
                    contains_cycle(&rest, &dirs).expect("distinct points").is_none(),
                    "dropping a point must break an inclusion-minimal cycle"
                );
            }
        }
    }

    /// Unions of level-disjoint rectangles are cycles, and the two-direction
    /// decomposition returns checker-accepted closed paths covering every
    /// point exactly once.
    #[test]
    fn rectangle_unions_decompose_into_closed_paths(
        (points, dirs) in disjoint_rectangles(),
    ) {
        let cycle = is_cycle(&points, &dirs)
            .expect("distinct points")
            .expect("rectangle unions carry full support");
        prop_assert!(cycle.verify(&dirs));
        let paths = decompose_two_direction_cycle(&cycle, &dirs).expect("two directions");
        let mut covered: Vec<Point> = Vec::new();
        for path in &paths {
            prop_assert!(check_closed_path(path.points(), &dirs[0], &dirs[1]));
            covered.extend(path.points().iter().cloned());
        }
        let mut expected = cycle.points.clone();
        covered.sort();
        expected.sort();
        prop_assert_eq!(covered, expected);
    }

    /// Interpolability for all data is exactly the absence of a cycle.
    #[test]
    fn interpolability_is_cycle_freeness((points, dirs) in instance()) {
        let (interpolable, certificate) =
            interpolable_for_all_data(&points, &dirs).expect("distinct points");
        let cycle = contains_cycle(&points, &dirs).expect("distinct points");
        prop_assert_eq!(interpolable, cycle.is_none());
        prop_assert_eq!(certificate.is_some(), cycle.is_some());
        if let Some(c) = certificate {
            prop_assert!(c.verify(&dirs));
        }
    }

    /// Whatever the solver returns is real: solutions verify, refusals come
    /// with a refuting certificate.
    #[test]
    fn solutions_verify_and_refusals_certify(
        (points, dirs, data) in instance_with_data(),
    ) {
        let problem = InterpolationProblem::new(points.clone(), dirs.clone(), data.clone())
            .expect("aligned data");
        match solve_interpolation(&problem).expect("aligned data") {
            Some(assignment) => {
                prop_assert!(verify_representation(&assignment, &problem)
                    .expect("assignment covers every level"));
            }
            None => {
                let cycle = obstruction_for_data(&points, &dirs, &data)
                    .expect("aligned data")
                    .expect("unsolvable instances pair nontrivially with some cycle");
                prop_assert!(cycle.verify(&dirs));
                let local = cycle_local_data(&cycle, &points, &data);
                prop_assert!(!obstruction_pairing(&cycle, &local).is_zero());
            }
        }
    }

    /// Data that already is a ridge sum is never obstructed, and every
    /// cycle pairs to zero against it.
    #[test]
    fn ridge_sums_are_never_obstructed(
        ((points, dirs), coeffs) in (
            instance(),
            proptest::collection::vec(small_rational(), 24),
        ),
    ) {
        // Build data = sum over directions of g_i(a_i . x), with g_i taking
        // pseudo-random rational values on the levels that occur.
        let (_, index) = build_incidence(&points, &dirs).expect("distinct points");
        let mut data = vec![Rational::zero(); points.len()];
        let mut counter = 0usize;
        for i in 0..dirs.len() {
            for (_, members) in index.groups_of(i) {
                let value = &coeffs[counter % coeffs.len()];
                counter += 1;
                for &j in members {
                    data[j] += value;
                }
            }
        }
        prop_assert!(obstruction_for_data(&points, &dirs, &data)
            .expect("aligned data")
            .is_none());
        let problem = InterpolationProblem::new(points.clone(), dirs.clone(), data.clone())
            .expect("aligned data");
        let assignment = solve_interpolation(&problem)
            .expect("aligned data")
            .expect("ridge sums are solvable");
        prop_assert!(verify_representation(&assignment, &problem)
            .expect("assignment covers every level"));
        if let Some(cycle) = contains_cycle(&points, &dirs).expect("distinct points") {
            let local = cycle_local_data(&cycle, &points, &data);
            prop_assert!(obstruction_pairing(&cycle, &local).is_zero());
        }
    }
}
