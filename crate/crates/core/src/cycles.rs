//! Cycles: the obstruction to interpolation by sums of ridge functions in
//! arbitrarily many directions.
//!
//! A finite point set is a cycle for directions `a^1, ..., a^r` when nonzero
//! coefficients λ exist whose sums vanish over every level group of every
//! direction. Grouping points by their `a^i`-levels turns that condition into
//! a homogeneous linear system whose 0/1 coefficient matrix is the incidence
//! matrix built here: rows are `(direction, level)` pairs, columns are
//! points, and cycles are exactly the full-support kernel vectors. Because
//! restricting a kernel vector to its support keeps every group sum intact, a
//! point set contains a cycle iff that kernel is nontrivial.
//!
//! For two directions, cycles and closed paths describe the same obstruction:
//! [`decompose_two_direction_cycle`] splits any two-direction cycle into
//! closed paths covering all of its points.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::geometry::{Direction, Point};
use crate::matrix::{full_support_combination, full_support_nullvector, Matrix};
use crate::paths::{level_multigraph, ClosedPath};
use crate::rational::Rational;

/// Distinct levels of each direction, ascending, with the indices of the
/// points lying at each level. Every point index appears exactly once per
/// direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelIndex {
    groups: Vec<Vec<(Rational, Vec<usize>)>>,
}

impl LevelIndex {
    pub fn direction_count(&self) -> usize {
        self.groups.len()
    }

    /// The `(level, point indices)` groups of one direction, levels ascending.
    pub fn groups_of(&self, direction: usize) -> &[(Rational, Vec<usize>)] {
        &self.groups[direction]
    }

    /// Total number of `(direction, level)` pairs, i.e. incidence rows.
    pub fn row_count(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }
}

/// Builds the 0/1 incidence matrix of a point set under the given directions.
///
/// Row order is deterministic: directions in input order, levels ascending
/// within each. Entry `(row, j)` is 1 iff point `j` lies at that row's level.
/// Column sums equal the number of directions. The kernel vectors of this
/// matrix are precisely the coefficient vectors λ of the cycle equations.
pub fn build_incidence(
    points: &[Point],
    directions: &[Direction],
) -> Result<(Matrix, LevelIndex), Error> {
    assert!(!directions.is_empty(), "at least one direction is required");
    let n = directions[0].dim();
    for d in directions {
        if d.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.dim(),
            });
        }
    }
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint { first: i, second: j });
            }
        }
    }
    let mut groups: Vec<Vec<(Rational, Vec<usize>)>> = Vec::with_capacity(directions.len());
    for d in directions {
        let mut by_level: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for (j, p) in points.iter().enumerate() {
            by_level.entry(d.level_of(p)).or_default().push(j);
        }
        groups.push(by_level.into_iter().collect());
    }
    let index = LevelIndex { groups };
    let mut matrix = Matrix::zeros(index.row_count(), points.len());
    let mut row = 0;
    for direction_groups in &index.groups {
        for (_, members) in direction_groups {
            for &j in members {
                matrix.set(row, j, Rational::one());
            }
            row += 1;
        }
    }
    Ok((matrix, index))
}

/// A certified cycle: points together with a full-support λ annihilating
/// every level group of every direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub points: Vec<Point>,
    pub lambda: Vec<Rational>,
}

impl Cycle {
    /// Re-checks the defining equations from scratch; any independent party
    /// can do the same with exact arithmetic.
    pub fn verify(&self, directions: &[Direction]) -> bool {
        if self.points.is_empty() || self.points.len() != self.lambda.len() {
            return false;
        }
        if self.lambda.iter().any(Rational::is_zero) {
            return false;
        }
        match build_incidence(&self.points, directions) {
            Ok((matrix, _)) => matrix.mul_vec(&self.lambda).iter().all(Rational::is_zero),
            Err(_) => false,
        }
    }
}

/// Decides whether some subset of `points` is a cycle, and returns one.
///
/// Existence is equivalent to a nontrivial incidence kernel: restricting a
/// kernel vector to its support preserves all level-group sums, so the
/// support is a cycle. The certificate is deterministic, preferring a
/// full-support combination of the kernel basis over the whole input set
/// (when the basis covers every coordinate) — in particular a closed path
/// comes back carrying its alternating λ — and falling back to the first
/// reduced-basis vector restricted to its support.
pub fn contains_cycle(
    points: &[Point],
    directions: &[Direction],
) -> Result<Option<Cycle>, Error> {
    let (matrix, _) = build_incidence(points, directions)?;
    let basis = matrix.nullspace_basis();
    if basis.is_empty() {
        return Ok(None);
    }
    if let Some(lambda) = full_support_combination(&basis, points.len()) {
        return Ok(Some(Cycle {
            points: points.to_vec(),
            lambda,
        }));
    }
    let vector = &basis[0];
    let mut support_points = Vec::new();
    let mut lambda = Vec::new();
    for (j, coefficient) in vector.iter().enumerate() {
        if !coefficient.is_zero() {
            support_points.push(points[j].clone());
            lambda.push(coefficient.clone());
        }
    }
    Ok(Some(Cycle {
        points: support_points,
        lambda,
    }))
}

/// Certifies the whole set as a cycle (full-support λ), or reports that it is
/// not one — even when a proper subset is.
pub fn is_cycle(points: &[Point], directions: &[Direction]) -> Result<Option<Cycle>, Error> {
    let (matrix, _) = build_incidence(points, directions)?;
    Ok(full_support_nullvector(&matrix).map(|lambda| Cycle {
        points: points.to_vec(),
        lambda,
    }))
}

/// Shrinks a cycle until dropping any single point leaves a set without
/// cycles.
///
/// Drop candidates are tried in input order; when a remainder still contains
/// a cycle, the search continues from that (possibly much smaller) sub-cycle.
/// The result is inclusion-minimal: no proper subset of its points supports a
/// cycle, since such a subset would survive the removal of some point.
pub fn extract_inclusion_minimal_cycle(
    cycle: &Cycle,
    directions: &[Direction],
) -> Result<Cycle, Error> {
    assert!(cycle.verify(directions), "input must be a verified cycle");
    let mut current = cycle.clone();
    'shrink: loop {
        for drop in 0..current.points.len() {
            let remainder: Vec<Point> = current
                .points
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, p)| p.clone())
                .collect();
            if let Some(sub) = contains_cycle(&remainder, directions)? {
                current = sub;
                continue 'shrink;
            }
        }
        return Ok(current);
    }
}

/// Splits a two-direction cycle into closed paths that jointly cover all of
/// its points.
///
/// In the bipartite level multigraph the cycle's points are edges. A
/// full-support λ forbids bridges: summing the per-vertex balance equations
/// over one shore of a bridge cut leaves exactly the bridge coefficient,
/// forcing it to zero. Every edge therefore lies on a simple graph cycle, and
/// for each point not yet covered (in input order) the emitted closed path is
/// its edge plus a shortest path between the edge's endpoints avoiding it.
/// Paths may share vertices (a cycle with an odd number of points must reuse
/// one), but their union is the whole point set.
pub fn decompose_two_direction_cycle(
    cycle: &Cycle,
    directions: &[Direction],
) -> Result<Vec<ClosedPath>, Error> {
    if directions.len() != 2 {
        return Err(Error::NotTwoDirections {
            found: directions.len(),
        });
    }
    assert!(cycle.verify(directions), "input must be a verified cycle");
    let (a1, a2) = (&directions[0], &directions[1]);
    let points = &cycle.points;
    let graph = level_multigraph(points, a1, a2);
    let mut covered = vec![false; points.len()];
    let mut paths = Vec::new();
    for e in 0..points.len() {
        if covered[e] {
            continue;
        }
        let (u, v) = graph.endpoints[e];
        // Breadth-first search from v back to u, never crossing e itself.
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; graph.adj.len()];
        let mut visited = vec![false; graph.adj.len()];
        visited[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x == u {
                break;
            }
            for &(y, f) in &graph.adj[x] {
                if f == e || visited[y] {
                    continue;
                }
                visited[y] = true;
                parent[y] = Some((x, f));
                queue.push_back(y);
            }
        }
        assert!(visited[u], "full-support cycles have no bridges");
        let mut back_edges = Vec::new();
        let mut x = u;
        while x != v {
            let (px, f) = parent[x].expect("walked only visited vertices");
            back_edges.push(f);
            x = px;
        }
        // Cyclic edge order: e runs u -> v, then the found path v -> ... -> u.
        let mut sequence = vec![e];
        sequence.extend(back_edges.into_iter().rev());
        for &f in &sequence {
            covered[f] = true;
        }
        let path_points: Vec<Point> = sequence.iter().map(|&f| points[f].clone()).collect();
        paths.push(
            ClosedPath::new(path_points, a1.clone(), a2.clone())
                .expect("graph cycles read off as closed paths"),
        );
    }
    Ok(paths)
}
