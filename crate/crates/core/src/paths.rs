//! Paths, closed paths, and the closed-path constructions for three lines.
//!
//! A path with respect to directions `a1, a2` is a point sequence whose
//! consecutive differences are orthogonal to `a1` and `a2` alternately, i.e.
//! consecutive points share the `a1`-level and the `a2`-level in turn. A
//! closed path has even length and wraps around. Two-point sequences whose
//! difference is orthogonal to both directions count as closed paths.
//!
//! The pairing `sum_i (-1)^i f(x_i)` over a closed path annihilates every sum
//! of ridge functions in the two directions, which is what makes closed paths
//! interpolation obstructions, and a union of three pairwise distinct straight
//! lines always contains one. [`three_line_witness`] constructs it: reduce to
//! the plane, split by planar configuration, build the planar witness, lift.

use crate::error::Error;
use crate::geometry::{
    classify_projected, complete_to_basis, lift_path, preimage_on, project_line, Direction,
    LiftOutcome, Line, Line2D, PlanarPoint, Point, Preimage, ProjectedLine, ThreeLineClass,
};
use crate::matrix::{solve_linear, LinearSolution, Matrix};
use crate::rational::{int, Rational};

/// Which direction the first step of a path is orthogonal to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartAxis {
    First,
    Second,
}

fn alternation_holds(points: &[Point], a1: &Direction, a2: &Direction, start: StartAxis) -> bool {
    for i in 0..points.len() - 1 {
        if points[i] == points[i + 1] {
            return false;
        }
        let first = (i % 2 == 0) == (start == StartAxis::First);
        let d = if first { a1 } else { a2 };
        if d.level_of(&points[i]) != d.level_of(&points[i + 1]) {
            return false;
        }
    }
    true
}

/// Checks the path property, trying both alternation parities; `First` wins
/// when both fit (consecutive differences orthogonal to both directions).
/// Sequences shorter than two points are not paths.
pub fn check_path(points: &[Point], a1: &Direction, a2: &Direction) -> Option<StartAxis> {
    if points.len() < 2 {
        return None;
    }
    if alternation_holds(points, a1, a2, StartAxis::First) {
        Some(StartAxis::First)
    } else if alternation_holds(points, a1, a2, StartAxis::Second) {
        Some(StartAxis::Second)
    } else {
        None
    }
}

/// True when `points` has even length and `(x_1, ..., x_k, x_1)` is a path.
pub fn check_closed_path(points: &[Point], a1: &Direction, a2: &Direction) -> bool {
    if points.len() < 2 || points.len() % 2 != 0 {
        return false;
    }
    let mut wrapped = points.to_vec();
    wrapped.push(points[0].clone());
    check_path(&wrapped, a1, a2).is_some()
}

/// A verified closed path: constructing one re-runs [`check_closed_path`],
/// so every value of this type is a valid certificate.
#[derive(Debug, Clone)]
pub struct ClosedPath {
    points: Vec<Point>,
    directions: [Direction; 2],
    start_axis: StartAxis,
}

impl ClosedPath {
    pub fn new(points: Vec<Point>, a1: Direction, a2: Direction) -> Result<Self, Error> {
        if points.len() < 2 || points.len() % 2 != 0 {
            return Err(Error::NotAClosedPath);
        }
        let mut wrapped = points.clone();
        wrapped.push(points[0].clone());
        match check_path(&wrapped, &a1, &a2) {
            Some(start_axis) => Ok(ClosedPath {
                points,
                directions: [a1, a2],
                start_axis,
            }),
            None => Err(Error::NotAClosedPath),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn directions(&self) -> &[Direction; 2] {
        &self.directions
    }

    pub fn start_axis(&self) -> StartAxis {
        self.start_axis
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The alternating weights `(-1)^i`, one per vertex: paired with any data
    /// they form the obstruction functional of this closed path.
    pub fn alternating_weights(&self) -> Vec<Rational> {
        (0..self.points.len())
            .map(|i| if i % 2 == 0 { int(-1) } else { int(1) })
            .collect()
    }
}

/// Bipartite level multigraph of a point set under two directions: one vertex
/// per distinct `a1`-level, then one per distinct `a2`-level (each side in
/// ascending level order); each point is an edge joining its two level
/// vertices. Adjacency lists follow point order.
pub(crate) struct LevelMultigraph {
    /// `adj[v]` lists `(other_vertex, point_index)`.
    pub adj: Vec<Vec<(usize, usize)>>,
    /// Per point: its `(a1-level vertex, a2-level vertex)`.
    pub endpoints: Vec<(usize, usize)>,
}

pub(crate) fn level_multigraph(points: &[Point], a1: &Direction, a2: &Direction) -> LevelMultigraph {
    let levels = |d: &Direction| -> Vec<Rational> {
        let mut ls: Vec<Rational> = points.iter().map(|p| d.level_of(p)).collect();
        ls.sort();
        ls.dedup();
        ls
    };
    let l1 = levels(a1);
    let l2 = levels(a2);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); l1.len() + l2.len()];
    let mut endpoints = Vec::with_capacity(points.len());
    for (e, p) in points.iter().enumerate() {
        let u = l1.binary_search(&a1.level_of(p)).expect("level collected above");
        let v = l1.len() + l2.binary_search(&a2.level_of(p)).expect("level collected above");
        adj[u].push((v, e));
        adj[v].push((u, e));
        endpoints.push((u, v));
    }
    LevelMultigraph { adj, endpoints }
}

/// Searches a finite point set (pairwise distinct) for a closed path.
///
/// The points are the edges of a bipartite multigraph whose two vertex
/// classes are the distinct `a1`-levels and `a2`-levels; a point joins its two
/// level vertices. Any simple graph cycle reads off as a closed path (edges in
/// cyclic order; consecutive edges share a level vertex, and sides alternate
/// because the graph is bipartite), and two points sharing both levels are a
/// double edge, i.e. a two-point closed path. A forest means no closed path
/// exists.
pub fn find_closed_path_finite(
    points: &[Point],
    a1: &Direction,
    a2: &Direction,
) -> Result<Option<ClosedPath>, Error> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint { first: i, second: j });
            }
        }
    }
    let graph = level_multigraph(points, a1, a2);
    let adj = &graph.adj;
    let vertex_count = adj.len();

    // Iterative DFS; an unseen edge to an already visited vertex closes a
    // cycle through the parent chain. Marking edges as seen makes tree edges
    // harmless when re-encountered from the child side and keeps parallel
    // edges (distinct ids) detectable.
    let mut state = vec![0u8; vertex_count]; // 0 new, 1 active, 2 done
    let mut parent_vertex = vec![usize::MAX; vertex_count];
    let mut parent_edge = vec![usize::MAX; vertex_count];
    let mut edge_seen = vec![false; points.len()];
    for root in 0..vertex_count {
        if state[root] != 0 {
            continue;
        }
        state[root] = 1;
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(frame) = stack.last_mut() {
            let u = frame.0;
            if frame.1 >= adj[u].len() {
                state[u] = 2;
                stack.pop();
                continue;
            }
            let (w, e) = adj[u][frame.1];
            frame.1 += 1;
            if edge_seen[e] {
                continue;
            }
            edge_seen[e] = true;
            if state[w] == 0 {
                state[w] = 1;
                parent_vertex[w] = u;
                parent_edge[w] = e;
                stack.push((w, 0));
            } else {
                // w is an ancestor of u; collect the chain u -> w, then close
                // with e. Edge order around the cycle = point order.
                let mut chain = Vec::new();
                let mut x = u;
                while x != w {
                    chain.push(parent_edge[x]);
                    x = parent_vertex[x];
                }
                chain.reverse();
                chain.push(e);
                let cycle_points: Vec<Point> =
                    chain.into_iter().map(|eid| points[eid].clone()).collect();
                let path = ClosedPath::new(cycle_points, a1.clone(), a2.clone())
                    .expect("graph cycles read off as closed paths");
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

/// Which construction produced a three-line witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// One line is orthogonal to both directions; two of its points suffice.
    PointProjection,
    /// Two lines project onto the same planar line; two stacked preimages.
    CoincidentProjections,
    /// Lifting found a planar vertex with two preimages in the union.
    RepeatedPreimage,
    /// Some projection is axis-parallel: four-point rectangle.
    AxisParallel,
    /// All three projections parallel: six-point alternating walk.
    AllParallel,
    /// Concurrent projections: six points from the three slopes.
    Concurrent,
    /// General position: rectangle from one 4x4 linear system.
    Generic,
}

/// Planar closed-path witness on three projected lines, before lifting.
#[derive(Debug, Clone)]
pub struct PlanarWitness {
    pub vertices: Vec<PlanarPoint>,
    /// Index of the carrier line for each vertex.
    pub assignment: Vec<usize>,
    pub case: CaseTag,
}

/// Closed path in the union of three lines, with carrier bookkeeping.
#[derive(Debug, Clone)]
pub struct ThreeLineWitness {
    pub path: ClosedPath,
    pub case: CaseTag,
    /// Index of the line carrying each path vertex.
    pub assignment: Vec<usize>,
}

fn smallest_nonneg_integer_avoiding(avoid: &[Rational]) -> Rational {
    let mut c = 0i64;
    while avoid.contains(&int(c)) {
        c += 1;
    }
    int(c)
}

/// Rectangle witness when at least one projection is axis-parallel.
///
/// Subcases, in order:
/// 1. two lines parallel to the same axis: a rectangle with one side pair on
///    them, at abscissas (ordinates) 0 and 1;
/// 2. a horizontal and a vertical line: their crossing plus one point of the
///    third line off the crossing row and column, completed to a rectangle;
/// 3. exactly one axis-parallel line: one rectangle side on it, the opposite
///    side at a height (abscissa) picked to meet the other two lines at
///    distinct points.
///
/// Lines must be pairwise distinct with at least one axis-parallel (panics
/// otherwise; the classifier guarantees both).
pub fn witness_axis_parallel(lines: &[Line2D; 3]) -> PlanarWitness {
    let horizontal: Vec<usize> = (0..3).filter(|&i| lines[i].is_horizontal()).collect();
    let vertical: Vec<usize> = (0..3).filter(|&i| lines[i].is_vertical()).collect();
    assert!(
        !horizontal.is_empty() || !vertical.is_empty(),
        "axis-parallel witness needs an axis-parallel line"
    );
    let zero = int(0);
    let one = int(1);

    if horizontal.len() >= 2 {
        let (i, j) = (horizontal[0], horizontal[1]);
        let k1 = lines[i].y_at_abscissa(&zero).expect("horizontal line");
        let k2 = lines[j].y_at_abscissa(&zero).expect("horizontal line");
        return PlanarWitness {
            vertices: vec![
                [zero.clone(), k1.clone()],
                [zero.clone(), k2.clone()],
                [one.clone(), k2],
                [one, k1],
            ],
            assignment: vec![i, j, j, i],
            case: CaseTag::AxisParallel,
        };
    }
    if vertical.len() >= 2 {
        let (i, j) = (vertical[0], vertical[1]);
        let k1 = lines[i].x_at_height(&zero).expect("vertical line");
        let k2 = lines[j].x_at_height(&zero).expect("vertical line");
        return PlanarWitness {
            vertices: vec![
                [k1.clone(), zero.clone()],
                [k2.clone(), zero.clone()],
                [k2, one.clone()],
                [k1, one],
            ],
            assignment: vec![i, j, j, i],
            case: CaseTag::AxisParallel,
        };
    }
    if !horizontal.is_empty() && !vertical.is_empty() {
        let h = horizontal[0];
        let v = vertical[0];
        let o = 3 - h - v;
        let k = lines[h].y_at_abscissa(&zero).expect("horizontal line");
        let hx = lines[v].x_at_height(&zero).expect("vertical line");
        // The remaining line is off-axis here, so both queries below exist.
        // Bad abscissas: the crossing column, and where the third line meets
        // the horizontal line's row.
        let avoid = vec![
            hx.clone(),
            lines[o].x_at_height(&k).expect("off-axis line"),
        ];
        let x3 = smallest_nonneg_integer_avoiding(&avoid);
        let y3 = lines[o].y_at_abscissa(&x3).expect("off-axis line");
        return PlanarWitness {
            vertices: vec![
                [x3.clone(), y3.clone()],
                [x3, k.clone()],
                [hx.clone(), k],
                [hx, y3],
            ],
            assignment: vec![o, h, v, v],
            case: CaseTag::AxisParallel,
        };
    }

    // Exactly one axis-parallel line; the other two are off-axis.
    let others: Vec<usize> = (0..3).filter(|&i| !lines[i].is_axis_parallel()).collect();
    let (o1, o2) = (others[0], others[1]);
    let (alpha1, beta1, gamma1) = lines[o1].coefficients();
    let (alpha2, beta2, gamma2) = lines[o2].coefficients();

    if let Some(&h) = horizontal.first() {
        let k = lines[h].y_at_abscissa(&zero).expect("horizontal line");
        // Avoid the carrier height and the height where the off-axis lines
        // cross (equal abscissas there would flatten the rectangle).
        let mut avoid = vec![k.clone()];
        let coef = alpha1 * beta2 - alpha2 * beta1;
        if !num_traits::Zero::is_zero(&coef) {
            avoid.push((alpha1 * gamma2 - alpha2 * gamma1) / coef);
        }
        let w = smallest_nonneg_integer_avoiding(&avoid);
        let s1 = lines[o1].x_at_height(&w).expect("off-axis line");
        let s2 = lines[o2].x_at_height(&w).expect("off-axis line");
        PlanarWitness {
            vertices: vec![
                [s1.clone(), k.clone()],
                [s2.clone(), k],
                [s2, w.clone()],
                [s1, w],
            ],
            assignment: vec![h, h, o2, o1],
            case: CaseTag::AxisParallel,
        }
    } else {
        let v = vertical[0];
        let kx = lines[v].x_at_height(&zero).expect("vertical line");
        let mut avoid = vec![kx.clone()];
        let coef = beta1 * alpha2 - beta2 * alpha1;
        if !num_traits::Zero::is_zero(&coef) {
            avoid.push((beta1 * gamma2 - beta2 * gamma1) / coef);
        }
        let w = smallest_nonneg_integer_avoiding(&avoid);
        let s1 = lines[o1].y_at_abscissa(&w).expect("off-axis line");
        let s2 = lines[o2].y_at_abscissa(&w).expect("off-axis line");
        PlanarWitness {
            vertices: vec![
                [kx.clone(), s1.clone()],
                [kx, s2.clone()],
                [w.clone(), s2],
                [w, s1],
            ],
            assignment: vec![v, v, o2, o1],
            case: CaseTag::AxisParallel,
        }
    }
}

/// Six-point witness for three parallel lines `t b + c_k`, via the closing
/// linear system in the six parameters.
///
/// The six equations tie coordinates of consecutive vertices (x, y, x, y, x,
/// y); their alternating differences telescope to zero, so the system is
/// consistent with a one-dimensional solution family `t + alpha (1, ..., 1)`.
/// The returned witness is normalized to `t_1 = 0`, i.e. the first vertex is
/// `c_1` itself. Both components of `b` must be nonzero (axis-parallel
/// configurations take the rectangle construction instead).
pub fn witness_all_parallel_system(
    b: &PlanarPoint,
    offsets: &[PlanarPoint; 3],
) -> PlanarWitness {
    assert!(
        !num_traits::Zero::is_zero(&b[0]) && !num_traits::Zero::is_zero(&b[1]),
        "parallel witness needs a direction off both axes"
    );
    let zero = int(0);
    let mut rows = vec![vec![zero.clone(); 6]; 6];
    let mut rhs = vec![zero; 6];
    for step in 0..6 {
        let i = step;
        let j = (step + 1) % 6;
        // Even steps equate x-coordinates, odd steps y-coordinates.
        let coord = step % 2;
        rows[step][i] = b[coord].clone();
        rows[step][j] = -b[coord].clone();
        rhs[step] = &offsets[j % 3][coord] - &offsets[i % 3][coord];
    }
    let system = Matrix::from_rows(&rows).expect("fixed shape");
    let ts = match solve_linear(&system, &rhs).expect("matching dimensions") {
        LinearSolution::Parametric { particular, kernel } => {
            assert_eq!(kernel.len(), 1, "closing system has a line of solutions");
            let k = &kernel[0];
            let shift = &particular[0] / &k[0];
            (0..6)
                .map(|i| &particular[i] - &shift * &k[i])
                .collect::<Vec<Rational>>()
        }
        other => panic!("closing system cannot be {other:?}"),
    };
    let vertices: Vec<PlanarPoint> = ts
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let c = &offsets[i % 3];
            [&c[0] + t * &b[0], &c[1] + t * &b[1]]
        })
        .collect();
    PlanarWitness {
        vertices,
        assignment: vec![0, 1, 2, 0, 1, 2],
        case: CaseTag::AllParallel,
    }
}

/// Six-point witness for three parallel lines by walking: from `start` on the
/// first line, alternately jump to the next line keeping the x-coordinate,
/// then the y-coordinate. After six steps the walk provably returns to
/// `start` (the step vectors telescope), which is asserted.
///
/// A degenerate step (two coinciding consecutive points) cannot occur for
/// pairwise distinct parallel lines, but the walk defensively restarts once
/// from `start + b` and reports [`Error::DegenerateStep`] if that also fails.
pub fn witness_all_parallel_greedy(
    b: &PlanarPoint,
    offsets: &[PlanarPoint; 3],
    start: &PlanarPoint,
) -> Result<PlanarWitness, Error> {
    assert!(
        !num_traits::Zero::is_zero(&b[0]) && !num_traits::Zero::is_zero(&b[1]),
        "parallel witness needs a direction off both axes"
    );
    let on_first = {
        let d = [&start[0] - &offsets[0][0], &start[1] - &offsets[0][1]];
        &d[0] * &b[1] == &d[1] * &b[0]
    };
    assert!(on_first, "walk must start on the first line");

    // Point of line `c + t b` with the given x (resp. y) coordinate.
    let with_x = |c: &PlanarPoint, x: &Rational| -> PlanarPoint {
        let t = (x - &c[0]) / &b[0];
        [x.clone(), &c[1] + &t * &b[1]]
    };
    let with_y = |c: &PlanarPoint, y: &Rational| -> PlanarPoint {
        let t = (y - &c[1]) / &b[1];
        [&c[0] + &t * &b[0], y.clone()]
    };

    let attempt = |a: PlanarPoint| -> Result<Vec<PlanarPoint>, Error> {
        let p2 = with_x(&offsets[1], &a[0]);
        let p3 = with_y(&offsets[2], &p2[1]);
        let p4 = with_x(&offsets[0], &p3[0]);
        let p5 = with_y(&offsets[1], &p4[1]);
        let p6 = with_x(&offsets[2], &p5[0]);
        let close = with_y(&offsets[0], &p6[1]);
        let seq = vec![a, p2, p3, p4, p5, p6];
        for i in 0..6 {
            if seq[i] == seq[(i + 1) % 6] {
                return Err(Error::DegenerateStep);
            }
        }
        assert_eq!(close, seq[0], "six-step walk must close");
        Ok(seq)
    };

    let vertices = match attempt(start.clone()) {
        Ok(seq) => seq,
        Err(_) => attempt([&start[0] + &b[0], &start[1] + &b[1]])?,
    };
    Ok(PlanarWitness {
        vertices,
        assignment: vec![0, 1, 2, 0, 1, 2],
        case: CaseTag::AllParallel,
    })
}

/// Six-point witness for three concurrent lines with pairwise distinct
/// nonzero slopes `p, q, r`, translated so they meet at `meet`.
///
/// Around the meet the six products of slope pairs give the vertex set
/// `(p, pq), (p, pr), (r, pr), (r, qr), (q, qr), (q, pq)`: consecutive
/// vertices share a coordinate alternately and each lies on the line whose
/// slope divides the shared product.
pub fn witness_concurrent(slopes: &[Rational; 3], meet: &PlanarPoint) -> PlanarWitness {
    let [p, q, r] = slopes;
    assert!(
        !num_traits::Zero::is_zero(p)
            && !num_traits::Zero::is_zero(q)
            && !num_traits::Zero::is_zero(r),
        "concurrent witness needs nonzero slopes"
    );
    assert!(p != q && q != r && p != r, "slopes must be pairwise distinct");
    let raw: [(Rational, Rational); 6] = [
        (p.clone(), p * q),
        (p.clone(), p * r),
        (r.clone(), p * r),
        (r.clone(), q * r),
        (q.clone(), q * r),
        (q.clone(), p * q),
    ];
    let vertices: Vec<PlanarPoint> = raw
        .into_iter()
        .map(|(x, y)| [&meet[0] + x, &meet[1] + y])
        .collect();
    PlanarWitness {
        vertices,
        // (p, pq) lies on the slope-q line, and so on around.
        assignment: vec![1, 2, 0, 1, 2, 0],
        case: CaseTag::Concurrent,
    }
}

/// Rectangle witness for three lines `y = s_k x + i_k` in general position
/// (not all parallel, not concurrent, none axis-parallel).
///
/// Three candidate 4x4 systems put both `u = (u1, u2)` and `v = (v1, v2)` on
/// one main line and the mixed corners `(u1, v2)`, `(v1, u2)` on the other
/// two; their determinants are (up to sign) `s2 s3 - s1^2`, `s1 s3 - s2^2`,
/// `s1 s2 - s3^2`, checked in that order, and at least one is nonzero unless
/// all slopes coincide. Degenerate rectangles (`u1 = v1` or `u2 = v2`) happen
/// exactly for concurrent lines, which the precondition excludes.
pub fn witness_generic(coeffs: &[(Rational, Rational); 3]) -> PlanarWitness {
    let s = |i: usize| &coeffs[i].0;
    let dets = [
        s(1) * s(2) - s(0) * s(0),
        s(0) * s(2) - s(1) * s(1),
        s(0) * s(1) - s(2) * s(2),
    ];
    let variant = dets
        .iter()
        .position(|d| !num_traits::Zero::is_zero(d))
        .expect("identical slopes are excluded by the parallel case");
    let (main, cross_u, cross_v) = match variant {
        0 => (0, 1, 2),
        1 => (1, 0, 2),
        _ => (2, 0, 1),
    };
    let (ms, mi) = &coeffs[main];
    let (ps, pi) = &coeffs[cross_u];
    let (qs, qi) = &coeffs[cross_v];
    let zero = int(0);
    let one = int(1);
    // Unknowns (u1, u2, v1, v2).
    let rows = vec![
        vec![-ms.clone(), one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), -ms.clone(), one.clone()],
        vec![-ps.clone(), zero.clone(), zero.clone(), one.clone()],
        vec![zero.clone(), one.clone(), -qs.clone(), zero.clone()],
    ];
    let rhs = vec![mi.clone(), mi.clone(), pi.clone(), qi.clone()];
    let system = Matrix::from_rows(&rows).expect("fixed shape");
    let sol = match solve_linear(&system, &rhs).expect("matching dimensions") {
        LinearSolution::Unique(x) => x,
        other => panic!("nonzero determinant cannot yield {other:?}"),
    };
    let (u1, u2, v1, v2) = (&sol[0], &sol[1], &sol[2], &sol[3]);
    assert!(
        u1 != v1 && u2 != v2,
        "degenerate rectangle implies concurrent lines, excluded here"
    );
    PlanarWitness {
        vertices: vec![
            [u1.clone(), u2.clone()],
            [u1.clone(), v2.clone()],
            [v1.clone(), v2.clone()],
            [v1.clone(), u2.clone()],
        ],
        assignment: vec![main, cross_u, main, cross_v],
        case: CaseTag::Generic,
    }
}

/// Constructs a closed path inside the union of three pairwise distinct lines
/// in R^n, with respect to two independent directions.
///
/// Pipeline: complete the directions to a basis, transform so levels become
/// the two leading coordinates, project the lines onto the plane, build the
/// planar witness per configuration, lift back. Degenerate projections
/// (a line collapsing to a point, or two lines sharing a projection) are
/// handled before the planar case split and produce two-point witnesses, as
/// does a repeated preimage during lifting.
///
/// The returned witness is re-validated: the path passes
/// [`check_closed_path`] against the original directions, and every vertex
/// lies on its assigned line.
pub fn three_line_witness(
    lines: &[Line; 3],
    a1: &Direction,
    a2: &Direction,
) -> Result<ThreeLineWitness, Error> {
    let n = a1.dim();
    if a2.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a2.dim(),
        });
    }
    for line in lines {
        if line.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: line.dim(),
            });
        }
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            if lines[i].same_line_as(&lines[j]) {
                return Err(Error::NotThreeDistinctLines);
            }
        }
    }
    let map = complete_to_basis(a1, a2)?;
    let tlines = [
        map.transform_line(&lines[0]),
        map.transform_line(&lines[1]),
        map.transform_line(&lines[2]),
    ];
    let projections = [
        project_line(&tlines[0]),
        project_line(&tlines[1]),
        project_line(&tlines[2]),
    ];

    let finish = |points: Vec<Point>, case: CaseTag, assignment: Vec<usize>| {
        let witness = ThreeLineWitness {
            path: ClosedPath::new(points, a1.clone(), a2.clone())
                .expect("construction yields a closed path"),
            case,
            assignment,
        };
        for (p, &li) in witness.path.points().iter().zip(&witness.assignment) {
            assert!(
                lines[li].contains(p),
                "witness vertex must lie on its assigned line"
            );
        }
        Ok(witness)
    };

    match classify_projected(&projections) {
        ThreeLineClass::ProjectsToPoint { line } => {
            // The line is orthogonal to both directions: any two of its
            // points share both levels.
            let points = vec![lines[line].point_at(&int(0)), lines[line].point_at(&int(1))];
            finish(points, CaseTag::PointProjection, vec![line, line])
        }
        ThreeLineClass::CoincidentProjections { first, second } => {
            // The two lines are distinct, so they share at most one point and
            // at most one of the two candidate planar spots can collide.
            for t in [int(0), int(1)] {
                let y = tlines[first].point_at(&t);
                let w: PlanarPoint = [y[0].clone(), y[1].clone()];
                if let Preimage::Unique(z) = preimage_on(&tlines[second], &w) {
                    if z != y {
                        let points = vec![
                            map.inverse_transform_point(&y),
                            map.inverse_transform_point(&z),
                        ];
                        return finish(
                            points,
                            CaseTag::CoincidentProjections,
                            vec![first, second],
                        );
                    }
                }
            }
            unreachable!("distinct lines cannot collide over two planar points")
        }
        class => {
            let planar_lines: [Line2D; 3] = {
                let get = |i: usize| match &projections[i] {
                    ProjectedLine::Line(l) => l.clone(),
                    ProjectedLine::Point(_) => unreachable!("handled above"),
                };
                [get(0), get(1), get(2)]
            };
            let planar = match class {
                ThreeLineClass::AxisParallel => witness_axis_parallel(&planar_lines),
                ThreeLineClass::AllParallel => {
                    let b = planar_lines[0].direction();
                    let offsets = [
                        planar_lines[0].point_on(),
                        planar_lines[1].point_on(),
                        planar_lines[2].point_on(),
                    ];
                    witness_all_parallel_system(&b, &offsets)
                }
                ThreeLineClass::Concurrent { meet } => {
                    let slope = |i: usize| {
                        planar_lines[i]
                            .slope_intercept()
                            .expect("concurrent lines are off-axis")
                            .0
                    };
                    witness_concurrent(&[slope(0), slope(1), slope(2)], &meet)
                }
                ThreeLineClass::Generic => {
                    let si = |i: usize| {
                        planar_lines[i]
                            .slope_intercept()
                            .expect("generic lines are off-axis")
                    };
                    witness_generic(&[si(0), si(1), si(2)])
                }
                _ => unreachable!("degenerate classes handled above"),
            };
            match lift_path(&planar.vertices, &planar.assignment, &tlines, &map)? {
                LiftOutcome::Lifted(points) => finish(points, planar.case, planar.assignment),
                LiftOutcome::PreimagePair { points, lines: pair } => {
                    let [a, b] = points;
                    finish(vec![a, b], CaseTag::RepeatedPreimage, pair.to_vec())
                }
            }
        }
    }
}
