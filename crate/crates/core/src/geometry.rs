//! Directions, lines, and the reduction of a two-direction problem to the
//! first two coordinates of a transformed space.
//!
//! The reduction works like this: complete the two independent directions
//! `a1, a2` to a basis of R^n, with the extra rows chosen as unit vectors at
//! the non-pivot columns of `[a1; a2]`. The resulting invertible matrix `S`
//! sends `x` to `y` with `y_1 = a1 . x` and `y_2 = a2 . x`, so paths with
//! respect to `a1, a2` become paths with respect to the coordinate directions
//! `e1, e2`, and dropping the remaining coordinates is an orthogonal
//! projection onto the plane where all the planar constructions happen.
//! Each straight line projects to a straight line or to a single point.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Point in R^n.
pub type Point = Vec<Rational>;

/// Point in the projection plane.
pub type PlanarPoint = [Rational; 2];

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product needs equal dimensions");
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// True when `u` and `v` are linearly dependent (all 2x2 minors vanish).
/// The zero vector is parallel to everything.
pub fn vectors_parallel(u: &[Rational], v: &[Rational]) -> bool {
    assert_eq!(u.len(), v.len(), "parallelism needs equal dimensions");
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            if &u[i] * &v[j] != &u[j] * &v[i] {
                return false;
            }
        }
    }
    true
}

/// Nonzero vector used as a ridge-function direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction(Vec<Rational>);

impl Direction {
    pub fn new(components: Vec<Rational>) -> Result<Self, Error> {
        if components.is_empty() || components.iter().all(Rational::is_zero) {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(components))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    /// The level `a . x` of a point: the only thing a ridge function sees.
    pub fn level_of(&self, point: &[Rational]) -> Rational {
        dot(&self.0, point)
    }

    pub fn is_parallel_to(&self, other: &Direction) -> bool {
        vectors_parallel(&self.0, &other.0)
    }
}

/// Straight line `base + t * dir` in R^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    base: Point,
    dir: Vec<Rational>,
}

impl Line {
    pub fn new(base: Point, dir: Vec<Rational>) -> Result<Self, Error> {
        if dir.iter().all(Rational::is_zero) {
            return Err(Error::ZeroDirection);
        }
        if base.len() != dir.len() {
            return Err(Error::DimensionMismatch {
                expected: base.len(),
                found: dir.len(),
            });
        }
        Ok(Line { base, dir })
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn dir(&self) -> &[Rational] {
        &self.dir
    }

    pub fn point_at(&self, t: &Rational) -> Point {
        self.base
            .iter()
            .zip(&self.dir)
            .map(|(b, d)| b + t * d)
            .collect()
    }

    /// Parameter `t` with `base + t * dir = p`, when `p` lies on the line.
    pub fn parameter_of(&self, p: &[Rational]) -> Option<Rational> {
        assert_eq!(p.len(), self.dim(), "point dimension must match the line");
        let k = self.dir.iter().position(|d| !d.is_zero()).expect("dir is nonzero");
        let t = (&p[k] - &self.base[k]) / &self.dir[k];
        let candidate = self.point_at(&t);
        if candidate == p {
            Some(t)
        } else {
            None
        }
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        self.parameter_of(p).is_some()
    }

    /// Set equality: parallel direction vectors and a shared point.
    pub fn same_line_as(&self, other: &Line) -> bool {
        self.dim() == other.dim()
            && vectors_parallel(&self.dir, &other.dir)
            && self.contains(&other.base)
    }
}

/// Planar line in implicit form `alpha * x + beta * y = gamma`, normalized so
/// the first nonzero of `(alpha, beta)` is 1. Equality of the coefficient
/// triple is then equality of point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line2D {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

impl Line2D {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self, Error> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let scale = if alpha.is_zero() { beta.clone() } else { alpha.clone() };
        Ok(Line2D {
            alpha: alpha / &scale,
            beta: beta / &scale,
            gamma: gamma / &scale,
        })
    }

    /// Line through `p` with direction `d`.
    pub fn from_point_dir(p: &PlanarPoint, d: &PlanarPoint) -> Result<Self, Error> {
        // (x, y) is on the line iff (x - p, y - p) and d are parallel:
        // d_y * x - d_x * y = d_y * p_x - d_x * p_y.
        Line2D::new(
            d[1].clone(),
            -d[0].clone(),
            &d[1] * &p[0] - &d[0] * &p[1],
        )
    }

    pub fn coefficients(&self) -> (&Rational, &Rational, &Rational) {
        (&self.alpha, &self.beta, &self.gamma)
    }

    pub fn contains(&self, p: &PlanarPoint) -> bool {
        &self.alpha * &p[0] + &self.beta * &p[1] == self.gamma
    }

    /// Parallel to the x-axis.
    pub fn is_horizontal(&self) -> bool {
        self.alpha.is_zero()
    }

    /// Parallel to the y-axis.
    pub fn is_vertical(&self) -> bool {
        self.beta.is_zero()
    }

    pub fn is_axis_parallel(&self) -> bool {
        self.is_horizontal() || self.is_vertical()
    }

    /// `(slope, intercept)` of `y = slope * x + intercept`; `None` for a
    /// vertical line.
    pub fn slope_intercept(&self) -> Option<(Rational, Rational)> {
        if self.beta.is_zero() {
            return None;
        }
        Some((-(&self.alpha / &self.beta), &self.gamma / &self.beta))
    }

    /// A direction vector of the line.
    pub fn direction(&self) -> PlanarPoint {
        [self.beta.clone(), -self.alpha.clone()]
    }

    /// Some point on the line.
    pub fn point_on(&self) -> PlanarPoint {
        if self.alpha.is_zero() {
            [Rational::zero(), &self.gamma / &self.beta]
        } else {
            [&self.gamma / &self.alpha, Rational::zero()]
        }
    }

    pub fn is_parallel_to(&self, other: &Line2D) -> bool {
        &self.alpha * &other.beta == &self.beta * &other.alpha
    }

    /// Intersection point; `None` for parallel (or equal) lines.
    pub fn intersect(&self, other: &Line2D) -> Option<PlanarPoint> {
        let det = &self.alpha * &other.beta - &self.beta * &other.alpha;
        if det.is_zero() {
            return None;
        }
        let x = (&self.gamma * &other.beta - &self.beta * &other.gamma) / &det;
        let y = (&self.alpha * &other.gamma - &self.gamma * &other.alpha) / &det;
        Some([x, y])
    }

    /// x-coordinate where the line crosses height `y`; `None` when horizontal.
    pub fn x_at_height(&self, y: &Rational) -> Option<Rational> {
        if self.alpha.is_zero() {
            return None;
        }
        Some((&self.gamma - &self.beta * y) / &self.alpha)
    }

    /// y-coordinate above abscissa `x`; `None` when vertical.
    pub fn y_at_abscissa(&self, x: &Rational) -> Option<Rational> {
        if self.beta.is_zero() {
            return None;
        }
        Some((&self.gamma - &self.alpha * x) / &self.beta)
    }
}

/// Invertible change of coordinates whose first two rows are the two
/// directions, produced by [`complete_to_basis`].
#[derive(Debug, Clone)]
pub struct ReductionMap {
    s: Matrix,
    s_inv: Matrix,
}

/// Completes independent `a1, a2` to a basis of R^n.
///
/// The completion rows are the unit vectors at the non-pivot columns of
/// `[a1; a2]`, lowest index first. In block form (pivot columns, then the
/// rest) the matrix is [[A, B], [0, I]] with A the invertible 2x2 pivot
/// minor, so the construction never needs a fallback.
pub fn complete_to_basis(a1: &Direction, a2: &Direction) -> Result<ReductionMap, Error> {
    if a1.dim() != a2.dim() {
        return Err(Error::DimensionMismatch {
            expected: a1.dim(),
            found: a2.dim(),
        });
    }
    let n = a1.dim();
    let top = Matrix::from_rows(&[a1.components().to_vec(), a2.components().to_vec()])?;
    let rref = top.rref();
    if rref.rank < 2 {
        return Err(Error::DependentDirections);
    }
    let mut rows = vec![a1.components().to_vec(), a2.components().to_vec()];
    for col in 0..n {
        if !rref.pivot_cols.contains(&col) {
            let mut unit = vec![Rational::zero(); n];
            unit[col] = Rational::one();
            rows.push(unit);
        }
    }
    let s = Matrix::from_rows(&rows)?;
    let s_inv = s.inverse().expect("completion by non-pivot unit rows is invertible");
    Ok(ReductionMap { s, s_inv })
}

impl ReductionMap {
    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.s
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.s_inv
    }

    /// `y = S x`; the first two coordinates of the image are the two levels.
    pub fn transform_point(&self, x: &[Rational]) -> Point {
        self.s.mul_vec(x)
    }

    pub fn inverse_transform_point(&self, y: &[Rational]) -> Point {
        self.s_inv.mul_vec(y)
    }

    pub fn transform_line(&self, line: &Line) -> Line {
        Line::new(
            self.transform_point(line.base()),
            self.s.mul_vec(line.dir()),
        )
        .expect("invertible maps preserve nonzero directions")
    }
}

/// Image of a line under projection onto the first two coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectedLine {
    /// The line is orthogonal to the plane: its shadow is one point.
    Point(PlanarPoint),
    Line(Line2D),
}

/// Projects a line (in transformed coordinates, dimension >= 2) onto the
/// first two coordinates.
pub fn project_line(line: &Line) -> ProjectedLine {
    assert!(line.dim() >= 2, "projection needs at least two coordinates");
    let b = [line.base()[0].clone(), line.base()[1].clone()];
    let d = [line.dir()[0].clone(), line.dir()[1].clone()];
    if d[0].is_zero() && d[1].is_zero() {
        ProjectedLine::Point(b)
    } else {
        ProjectedLine::Line(Line2D::from_point_dir(&b, &d).expect("nonzero planar direction"))
    }
}

/// Geometric configuration of three projected lines, checked in a fixed
/// precedence order. Degenerate projections short-circuit the planar case
/// analysis entirely; among genuine planar triples, an axis-parallel line
/// wins over joint parallelism, which wins over concurrency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreeLineClass {
    /// Projection `line` collapses to a point.
    ProjectsToPoint { line: usize },
    /// Projections `first` and `second` are the same planar line.
    CoincidentProjections { first: usize, second: usize },
    /// Some projection is parallel to a coordinate axis.
    AxisParallel,
    /// All three projections are parallel (and off-axis).
    AllParallel,
    /// All three pass through one point, none axis-parallel.
    Concurrent { meet: PlanarPoint },
    /// None of the above.
    Generic,
}

pub fn classify_projected(projections: &[ProjectedLine; 3]) -> ThreeLineClass {
    for (i, p) in projections.iter().enumerate() {
        if matches!(p, ProjectedLine::Point(_)) {
            return ThreeLineClass::ProjectsToPoint { line: i };
        }
    }
    let lines: Vec<&Line2D> = projections
        .iter()
        .map(|p| match p {
            ProjectedLine::Line(l) => l,
            ProjectedLine::Point(_) => unreachable!("points handled above"),
        })
        .collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            if lines[i] == lines[j] {
                return ThreeLineClass::CoincidentProjections { first: i, second: j };
            }
        }
    }
    if lines.iter().any(|l| l.is_axis_parallel()) {
        return ThreeLineClass::AxisParallel;
    }
    if lines[0].is_parallel_to(lines[1]) && lines[0].is_parallel_to(lines[2]) {
        return ThreeLineClass::AllParallel;
    }
    // All three are concurrent iff some crossing pair's meet lies on the
    // remaining line; parallel pairs (the lines are distinct) rule it out.
    if let Some(meet) = lines[0].intersect(lines[1]) {
        if lines[2].contains(&meet) {
            return ThreeLineClass::Concurrent { meet };
        }
    }
    ThreeLineClass::Generic
}

/// Result of lifting a planar path back through the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftOutcome {
    /// One preimage per planar vertex, in original coordinates.
    Lifted(Vec<Point>),
    /// Two distinct preimages of one planar vertex were found in the line
    /// union. They share both levels, so they already form a two-point
    /// closed path (in original coordinates); `lines` names their carriers.
    PreimagePair { points: [Point; 2], lines: [usize; 2] },
}

/// Lifts planar path vertices to the union of three lines.
///
/// `vertices[i]` must lie on the projection of `transformed[assignment[i]]`
/// (error [`Error::PointNotOnProjection`] otherwise). While lifting, every
/// other line is scanned for a second preimage of the same planar vertex; the
/// first hit (vertex order, then line order) short-circuits into
/// [`LiftOutcome::PreimagePair`]. A line whose projection is a single point
/// yields the pair at parameters 0 and 1 directly.
pub fn lift_path(
    vertices: &[PlanarPoint],
    assignment: &[usize],
    transformed: &[Line; 3],
    map: &ReductionMap,
) -> Result<LiftOutcome, Error> {
    assert_eq!(vertices.len(), assignment.len(), "one line per vertex");
    let mut lifted = Vec::with_capacity(vertices.len());
    for (w, &li) in vertices.iter().zip(assignment) {
        let line = &transformed[li];
        let two_point = |a: Point, b: Point, la: usize, lb: usize| LiftOutcome::PreimagePair {
            points: [map.inverse_transform_point(&a), map.inverse_transform_point(&b)],
            lines: [la, lb],
        };
        match preimage_on(line, w) {
            Preimage::NotOnLine => return Err(Error::PointNotOnProjection),
            Preimage::WholeLine => {
                // Projection is a point: any two parameters give a pair.
                let a = line.point_at(&Rational::zero());
                let b = line.point_at(&Rational::one());
                return Ok(two_point(a, b, li, li));
            }
            Preimage::Unique(y) => {
                for (lj, other) in transformed.iter().enumerate() {
                    if lj == li {
                        continue;
                    }
                    if let Preimage::Unique(z) = preimage_on(other, w) {
                        if z != y {
                            return Ok(two_point(y, z, li, lj));
                        }
                    }
                }
                lifted.push(map.inverse_transform_point(&y));
            }
        }
    }
    Ok(LiftOutcome::Lifted(lifted))
}

pub(crate) enum Preimage {
    NotOnLine,
    /// The whole line projects onto this single planar point.
    WholeLine,
    Unique(Point),
}

/// Preimage of planar point `w` on a line in transformed coordinates.
pub(crate) fn preimage_on(line: &Line, w: &PlanarPoint) -> Preimage {
    let d0 = &line.dir()[0];
    let d1 = &line.dir()[1];
    let b0 = &line.base()[0];
    let b1 = &line.base()[1];
    if d0.is_zero() && d1.is_zero() {
        if b0 == &w[0] && b1 == &w[1] {
            return Preimage::WholeLine;
        }
        return Preimage::NotOnLine;
    }
    let t = if !d0.is_zero() {
        (&w[0] - b0) / d0
    } else {
        (&w[1] - b1) / d1
    };
    if &(b0 + &t * d0) == &w[0] && &(b1 + &t * d1) == &w[1] {
        Preimage::Unique(line.point_at(&t))
    } else {
        Preimage::NotOnLine
    }
}
