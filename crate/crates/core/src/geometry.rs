//! Exact rational 2D geometry: points, convex polygons, areas, dilation,
//! lattice-point counting, integer hulls and lattice distances.
//!
//! Lattice points are counted by sweeping integer horizontal lines and
//! intersecting them with the polygon, so every count is exact and costs
//! O(height * edges). Boundary points are counted per edge via the primitive
//! direction of the edge's affine hull.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{
    ceil_int, floor_int, int, integers_in_closed_interval, is_integer, lcm, rat_int, Int, Rational,
};

/// A point of the rational plane. Components are stored reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(rat_int(x), rat_int(y))
    }

    pub fn from_int_pair(x: Int, y: Int) -> Self {
        Self::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_lattice(&self) -> bool {
        is_integer(&self.x) && is_integer(&self.y)
    }

    /// Lexicographic comparison, x before y.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl std::fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{})",
            crate::rational::format_rational(&self.x),
            crate::rational::format_rational(&self.y)
        )
    }
}

/// `(a - o) x (b - o)`.
pub(crate) fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Primitive integer vector parallel to the rational vector `(dx, dy)`,
/// pointing the same way. Panics on the zero vector.
pub(crate) fn primitive_direction(dx: &Rational, dy: &Rational) -> (Int, Int) {
    assert!(!dx.is_zero() || !dy.is_zero(), "zero direction");
    let l = lcm(dx.denom(), dy.denom());
    let ix = dx.numer() * (&l / dx.denom());
    let iy = dy.numer() * (&l / dy.denom());
    let g = ix.gcd(&iy);
    (ix / &g, iy / g)
}

/// The affine hull of the segment `a`-`b` written as `<n, x> = c` with `n`
/// primitive integral and oriented so that, for a counterclockwise edge
/// `a -> b`, `n` is the outward normal (the polygon lies in `<n, x> <= c`).
pub(crate) fn edge_outward_line(
    a: &RationalPoint,
    b: &RationalPoint,
) -> ((Int, Int), Rational) {
    let (ux, uy) = primitive_direction(&(&b.x - &a.x), &(&b.y - &a.y));
    let n = (uy, -ux);
    let c = Rational::from_integer(n.0.clone()) * &a.x + Rational::from_integer(n.1.clone()) * &a.y;
    (n, c)
}

/// Per-edge lattice data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSegmentInfo {
    pub start: RationalPoint,
    pub end: RationalPoint,
    /// Lattice points on the closed segment.
    pub lattice_point_count: u64,
    /// Length of the segment measured in steps of the primitive direction of
    /// its affine hull. For a lattice edge this is `lattice_point_count - 1`.
    pub lattice_length: Rational,
    /// Whether the affine hull of the edge contains lattice points at all.
    pub affine_hull_has_lattice_points: bool,
}

/// Lattice point counts of a polygon, split by location.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeCounts {
    pub total: u64,
    pub interior: u64,
    pub boundary: u64,
}

/// Integer hull of a rational polygon; the hull may drop in dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerHull {
    Polygon(ConvexPolygon),
    Segment(RationalPoint, RationalPoint),
    Point(RationalPoint),
    Empty,
}

impl IntegerHull {
    pub fn dimension(&self) -> Option<u32> {
        match self {
            IntegerHull::Polygon(_) => Some(2),
            IntegerHull::Segment(..) => Some(1),
            IntegerHull::Point(_) => Some(0),
            IntegerHull::Empty => None,
        }
    }
}

/// A full-dimensional convex polygon with rational vertices.
///
/// Normalized at construction: duplicate and collinear points are dropped,
/// orientation is counterclockwise, and the vertex list starts at the
/// lexicographically least vertex, so equal polygons compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<RationalPoint>,
    denominator: Int,
}

/// Convex hull of a point set; errors unless the hull is full-dimensional.
pub fn convex_hull(points: impl IntoIterator<Item = RationalPoint>) -> Result<ConvexPolygon> {
    ConvexPolygon::from_points(points)
}

impl ConvexPolygon {
    pub fn from_points(points: impl IntoIterator<Item = RationalPoint>) -> Result<Self> {
        let mut pts: Vec<RationalPoint> = points.into_iter().collect();
        pts.sort_by(|a, b| a.lex_cmp(b));
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "need at least 3 distinct points, got {}",
                pts.len()
            )));
        }
        // Andrew's monotone chain, strict (collinear points dropped).
        let mut lower: Vec<RationalPoint> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<RationalPoint> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() < 3 {
            return Err(Error::DegenerateInput("all points are collinear".into()));
        }
        let mut denominator = Int::one();
        for v in &lower {
            denominator = lcm(&denominator, v.x.denom());
            denominator = lcm(&denominator, v.y.denom());
        }
        // Monotone chain starts at the lex-least point already; keep it that way.
        Ok(Self {
            vertices: lower,
            denominator,
        })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Least `d >= 1` such that `d * P` is a lattice polygon.
    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    pub fn denominator_u64(&self) -> u64 {
        u64::try_from(&self.denominator).expect("denominator fits in u64")
    }

    pub fn is_lattice(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&RationalPoint, &RationalPoint)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Exact shoelace area; positive by construction.
    pub fn area(&self) -> Rational {
        let mut twice = Rational::zero();
        for (a, b) in self.edges() {
            twice += &a.x * &b.y - &a.y * &b.x;
        }
        twice / rat_int(2)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Self {
        let vs = self
            .vertices
            .iter()
            .map(|v| RationalPoint::new(&v.x + dx, &v.y + dy));
        Self::from_points(vs).expect("translate preserves validity")
    }

    /// Scales by a positive rational factor.
    pub fn scale(&self, k: &Rational) -> Self {
        assert!(k.is_positive(), "scale factor must be positive");
        let vs = self
            .vertices
            .iter()
            .map(|v| RationalPoint::new(&v.x * k, &v.y * k));
        Self::from_points(vs).expect("scaling preserves validity")
    }

    /// `k * P` for an integer `k >= 1`.
    pub fn dilate(&self, k: u64) -> Self {
        assert!(k >= 1, "dilation factor must be >= 1");
        self.scale(&rat_int(k as i64))
    }

    pub fn bounding_box(&self) -> (Rational, Rational, Rational, Rational) {
        let mut xmin = self.vertices[0].x.clone();
        let mut xmax = xmin.clone();
        let mut ymin = self.vertices[0].y.clone();
        let mut ymax = ymin.clone();
        for v in &self.vertices[1..] {
            if v.x < xmin {
                xmin = v.x.clone();
            }
            if v.x > xmax {
                xmax = v.x.clone();
            }
            if v.y < ymin {
                ymin = v.y.clone();
            }
            if v.y > ymax {
                ymax = v.y.clone();
            }
        }
        (xmin, xmax, ymin, ymax)
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.edges().all(|(a, b)| !cross(a, b, p).is_negative())
    }

    pub fn contains_strictly(&self, p: &RationalPoint) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p).is_positive())
    }

    pub fn on_boundary(&self, p: &RationalPoint) -> bool {
        self.contains(p) && !self.contains_strictly(p)
    }

    /// The x-interval of `P` intersected with the horizontal line at height
    /// `y`, or `None` when they do not meet.
    fn row_interval(&self, y: &Rational) -> Option<(Rational, Rational)> {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        let mut add = |x: Rational| {
            if lo.as_ref().map_or(true, |l| &x < l) {
                lo = Some(x.clone());
            }
            if hi.as_ref().map_or(true, |h| &x > h) {
                hi = Some(x);
            }
        };
        for (a, b) in self.edges() {
            let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
            if y < ylo || y > yhi {
                continue;
            }
            if a.y == b.y {
                add(a.x.clone());
                add(b.x.clone());
            } else {
                let t = (y - &a.y) / (&b.y - &a.y);
                add(&a.x + t * (&b.x - &a.x));
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) => Some((l, h)),
            _ => None,
        }
    }

    /// Exact `(total, interior, boundary)` lattice point counts.
    pub fn lattice_point_counts(&self) -> LatticeCounts {
        let (_, _, ymin, ymax) = self.bounding_box();
        let mut total = Int::zero();
        let mut y = ceil_int(&ymin);
        let ytop = floor_int(&ymax);
        while y <= ytop {
            let yr = Rational::from_integer(y.clone());
            if let Some((lo, hi)) = self.row_interval(&yr) {
                total += integers_in_closed_interval(&lo, &hi);
            }
            y += 1;
        }
        let mut boundary = Int::zero();
        for (a, b) in self.edges() {
            boundary += int(segment_lattice_point_count(a, b) as i64);
            if a.is_lattice() {
                // Each lattice vertex is shared by two closed edges.
                boundary -= 1;
            }
        }
        let total: u64 = u64::try_from(&total).expect("count fits in u64");
        let boundary: u64 = u64::try_from(&boundary).expect("count fits in u64");
        LatticeCounts {
            total,
            interior: total - boundary,
            boundary,
        }
    }

    /// All lattice points of the closed polygon.
    pub fn lattice_points(&self) -> Vec<(Int, Int)> {
        let (_, _, ymin, ymax) = self.bounding_box();
        let mut out = Vec::new();
        let mut y = ceil_int(&ymin);
        let ytop = floor_int(&ymax);
        while y <= ytop {
            let yr = Rational::from_integer(y.clone());
            if let Some((lo, hi)) = self.row_interval(&yr) {
                let mut x = ceil_int(&lo);
                let xhi = floor_int(&hi);
                while x <= xhi {
                    out.push((x.clone(), y.clone()));
                    x += 1;
                }
            }
            y += 1;
        }
        out
    }

    pub fn interior_lattice_points(&self) -> Vec<(Int, Int)> {
        self.lattice_points()
            .into_iter()
            .filter(|(x, y)| {
                self.contains_strictly(&RationalPoint::from_int_pair(x.clone(), y.clone()))
            })
            .collect()
    }

    /// Convex hull of `P` intersected with the lattice, with its dimension.
    pub fn integer_hull(&self) -> IntegerHull {
        // Row extremes generate the hull; no need for every interior point.
        let (_, _, ymin, ymax) = self.bounding_box();
        let mut pts: Vec<RationalPoint> = Vec::new();
        let mut y = ceil_int(&ymin);
        let ytop = floor_int(&ymax);
        while y <= ytop {
            let yr = Rational::from_integer(y.clone());
            if let Some((lo, hi)) = self.row_interval(&yr) {
                let xl = ceil_int(&lo);
                let xr = floor_int(&hi);
                if xl <= xr {
                    pts.push(RationalPoint::from_int_pair(xl.clone(), y.clone()));
                    if xr != xl {
                        pts.push(RationalPoint::from_int_pair(xr, y.clone()));
                    }
                }
            }
            y += 1;
        }
        pts.sort_by(|a, b| a.lex_cmp(b));
        pts.dedup();
        match pts.len() {
            0 => IntegerHull::Empty,
            1 => IntegerHull::Point(pts.pop().unwrap()),
            _ => {
                let collinear = pts[2..]
                    .iter()
                    .all(|p| cross(&pts[0], &pts[1], p).is_zero());
                if collinear {
                    // Sorted lexicographically, so the extremes are first/last.
                    let last = pts.pop().unwrap();
                    IntegerHull::Segment(pts.swap_remove(0), last)
                } else {
                    IntegerHull::Polygon(
                        ConvexPolygon::from_points(pts).expect("full-dimensional hull"),
                    )
                }
            }
        }
    }

    /// Per-edge lattice information in edge order.
    pub fn edge_lattice_info(&self) -> Vec<LatticeSegmentInfo> {
        self.edges()
            .map(|(a, b)| {
                let (n, c) = edge_outward_line(a, b);
                let _ = n;
                let (ux, uy) = primitive_direction(&(&b.x - &a.x), &(&b.y - &a.y));
                let length = if ux.is_zero() {
                    (&b.y - &a.y) / Rational::from_integer(uy)
                } else {
                    (&b.x - &a.x) / Rational::from_integer(ux)
                };
                LatticeSegmentInfo {
                    start: a.clone(),
                    end: b.clone(),
                    lattice_point_count: segment_lattice_point_count(a, b),
                    lattice_length: length,
                    affine_hull_has_lattice_points: is_integer(&c),
                }
            })
            .collect()
    }

    /// True when every edge contains at least one lattice point.
    pub fn lattice_point_on_every_edge(&self) -> bool {
        self.edge_lattice_info()
            .iter()
            .all(|e| e.lattice_point_count >= 1)
    }
}

impl std::fmt::Display for ConvexPolygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Number of lattice points on the closed segment from `a` to `b`.
pub fn segment_lattice_point_count(a: &RationalPoint, b: &RationalPoint) -> u64 {
    if a == b {
        return u64::from(a.is_lattice());
    }
    let (n, c) = edge_outward_line(a, b);
    if !is_integer(&c) {
        return 0;
    }
    let c = c.to_integer();
    // A lattice point p0 on the line <n, x> = c, from a Bezout pair.
    let e = n.0.extended_gcd(&n.1);
    debug_assert!(e.gcd.is_one());
    let p0 = (&e.x * &c, &e.y * &c);
    let (ux, uy) = primitive_direction(&(&b.x - &a.x), &(&b.y - &a.y));
    // Lattice points on the line are p0 + k (ux, uy); project the endpoints.
    let param = |p: &RationalPoint| -> Rational {
        if !ux.is_zero() {
            (&p.x - Rational::from_integer(p0.0.clone())) / Rational::from_integer(ux.clone())
        } else {
            (&p.y - Rational::from_integer(p0.1.clone())) / Rational::from_integer(uy.clone())
        }
    };
    let (ta, tb) = (param(a), param(b));
    let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
    u64::try_from(&integers_in_closed_interval(&lo, &hi)).expect("count fits in u64")
}

/// Lattice distance from `p` to the rational line through `a` and `b`:
/// `|<p, n> - c|` for the primitive integral normal form `<x, n> = c`.
pub fn lattice_distance(a: &RationalPoint, b: &RationalPoint, p: &RationalPoint) -> Result<Rational> {
    if a == b {
        return Err(Error::DegenerateInput(
            "lattice distance needs two distinct points on the line".into(),
        ));
    }
    let (n, c) = edge_outward_line(a, b);
    let v = Rational::from_integer(n.0) * &p.x + Rational::from_integer(n.1) * &p.y - c;
    Ok(v.abs())
}

/// The three integer-hull identities for a pseudo-integral non-lattice
/// polygon with a full-dimensional integer hull, both sides evaluated.
#[derive(Clone, Debug)]
pub struct IntegerHullRelations {
    pub hull: ConvexPolygon,
    /// `i(P) > i(hull)`.
    pub interior_drop: (u64, u64),
    /// `b(P)` vs `b(hull) - (i(P) - i(hull))`.
    pub boundary_identity: (u64, u64),
    /// `area(P)` vs `area(hull) + (i(P) - i(hull)) / 2`.
    pub area_identity: (Rational, Rational),
}

impl IntegerHullRelations {
    pub fn all_hold(&self) -> bool {
        self.interior_drop.0 > self.interior_drop.1
            && self.boundary_identity.0 == self.boundary_identity.1
            && self.area_identity.0 == self.area_identity.1
    }
}

pub fn integer_hull_relations(p: &ConvexPolygon) -> Result<IntegerHullRelations> {
    if p.is_lattice() {
        return Err(Error::PreconditionViolated(
            "polygon is a lattice polygon".into(),
        ));
    }
    if !crate::ehrhart::pseudo_integrality(p).is_pseudo_integral {
        return Err(Error::PreconditionViolated(
            "polygon is not pseudo-integral".into(),
        ));
    }
    let hull = match p.integer_hull() {
        IntegerHull::Polygon(h) => h,
        other => {
            return Err(Error::PreconditionViolated(format!(
                "integer hull is not 2-dimensional (dimension {:?})",
                other.dimension()
            )))
        }
    };
    let cp = p.lattice_point_counts();
    let ch = hull.lattice_point_counts();
    let drop = cp.interior - ch.interior;
    Ok(IntegerHullRelations {
        interior_drop: (cp.interior, ch.interior),
        boundary_identity: (cp.boundary, ch.boundary - drop),
        area_identity: (p.area(), hull.area() + rat_int(drop as i64) / rat_int(2)),
        hull,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::from_points(pts.iter().map(|&(x, y)| RationalPoint::from_ints(x, y)))
            .unwrap()
    }

    pub(crate) fn polyr(pts: &[((i64, i64), (i64, i64))]) -> ConvexPolygon {
        ConvexPolygon::from_points(
            pts.iter()
                .map(|&((xn, xd), (yn, yd))| RationalPoint::new(rat(xn, xd), rat(yn, yd))),
        )
        .unwrap()
    }

    fn t2_03() -> ConvexPolygon {
        polyr(&[((0, 1), (0, 1)), ((2, 1), (0, 1)), ((0, 1), (1, 2))])
    }

    fn t2_12() -> ConvexPolygon {
        polyr(&[((0, 1), (1, 1)), ((1, 1), (-1, 1)), ((3, 2), (0, 1))])
    }

    #[test]
    fn hull_examples() {
        let square = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(square.vertices().len(), 4);

        let tri = ConvexPolygon::from_points([
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(2, 0),
            RationalPoint::from_ints(1, 0),
            RationalPoint::new(rat(0, 1), rat(1, 2)),
        ])
        .unwrap();
        assert_eq!(tri.vertices().len(), 3);
        assert_eq!(tri, t2_03());

        let t = t2_12();
        assert_eq!(t.vertices().len(), 3);
        // CCW with positive shoelace sum and lex-least start.
        assert!(t.area().is_positive());
        assert_eq!(t.vertices()[0], RationalPoint::from_ints(0, 1));
    }

    #[test]
    fn hull_rejects_degenerate() {
        assert!(matches!(
            ConvexPolygon::from_points([
                RationalPoint::from_ints(0, 0),
                RationalPoint::from_ints(1, 1),
                RationalPoint::from_ints(2, 2),
            ]),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            ConvexPolygon::from_points([
                RationalPoint::from_ints(0, 0),
                RationalPoint::from_ints(1, 0),
            ]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn area_examples() {
        assert_eq!(t2_03().area(), rat(1, 2));
        // i = 3 member of the two-boundary-point triangle family.
        let t = polyr(&[((0, 1), (1, 1)), ((1, 1), (-1, 1)), ((7, 2), (0, 1))]);
        assert_eq!(t.area(), rat_int(3));
        // Pentagon family member with (i, b) = (2, 3).
        let p = polyr(&[
            ((0, 1), (3, 2)),
            ((0, 1), (1, 1)),
            ((8, 1), (0, 1)),
            ((8, 1), (0, 1)),
            ((6, 1), (1, 2)),
        ]);
        assert_eq!(p.area(), rat(5, 2));
    }

    #[test]
    fn count_examples() {
        let c = t2_03().lattice_point_counts();
        assert_eq!((c.total, c.interior, c.boundary), (3, 0, 3));
        let c = t2_12().lattice_point_counts();
        assert_eq!((c.total, c.interior, c.boundary), (3, 1, 2));
        let c = poly(&[(0, 0), (3, 0), (0, 3)]).lattice_point_counts();
        assert_eq!((c.total, c.interior, c.boundary), (10, 1, 9));
    }

    #[test]
    fn dilate_examples() {
        let t = t2_03();
        assert_eq!(
            t.dilate(2),
            poly(&[(0, 0), (4, 0), (0, 1)])
        );
        assert_eq!(t.dilate(1), t);
        let d = t2_12().dilate(2);
        assert_eq!(d.lattice_point_counts().boundary, 4);
        assert!(d.denominator().is_one());
    }

    #[test]
    fn integer_hull_examples() {
        match t2_03().integer_hull() {
            IntegerHull::Segment(a, b) => {
                assert_eq!(a, RationalPoint::from_ints(0, 0));
                assert_eq!(b, RationalPoint::from_ints(2, 0));
            }
            other => panic!("expected segment, got {other:?}"),
        }
        let sq = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(sq.integer_hull(), IntegerHull::Polygon(sq.clone()));
        let small = polyr(&[((1, 2), (1, 2)), ((3, 2), (1, 2)), ((1, 2), (3, 2))]);
        assert_eq!(
            small.integer_hull(),
            IntegerHull::Point(RationalPoint::from_ints(1, 1))
        );
    }

    #[test]
    fn integer_hull_relation_examples() {
        // Pentagon with (i, b) = (2, 3): all three identities hold.
        let p = polyr(&[
            ((0, 1), (3, 2)),
            ((0, 1), (1, 1)),
            ((8, 1), (0, 1)),
            ((6, 1), (1, 2)),
        ]);
        let rel = integer_hull_relations(&p).unwrap();
        assert!(rel.all_hold());

        let lattice = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(
            integer_hull_relations(&lattice),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            integer_hull_relations(&t2_03()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn lattice_distance_examples() {
        let d = lattice_distance(
            &RationalPoint::from_ints(0, 1),
            &RationalPoint::from_ints(1, 1),
            &RationalPoint::origin(),
        )
        .unwrap();
        assert_eq!(d, rat_int(1));

        // Edge of the centered two-boundary-point triangle.
        let d = lattice_distance(
            &RationalPoint::from_ints(0, -1),
            &RationalPoint::new(rat(1, 2), rat(0, 1)),
            &RationalPoint::origin(),
        )
        .unwrap();
        assert_eq!(d, rat_int(1));

        let d = lattice_distance(
            &RationalPoint::new(rat(3, 2), rat(0, 1)),
            &RationalPoint::new(rat(3, 2), rat(1, 1)),
            &RationalPoint::origin(),
        )
        .unwrap();
        assert_eq!(d, rat(3, 2));

        assert!(matches!(
            lattice_distance(
                &RationalPoint::from_ints(1, 1),
                &RationalPoint::from_ints(1, 1),
                &RationalPoint::origin()
            ),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn edge_lattice_info_examples() {
        assert!(t2_03().lattice_point_on_every_edge());

        let t = polyr(&[((0, 1), (0, 1)), ((1, 1), (0, 1)), ((1, 2), (1, 2))]);
        let info = t.edge_lattice_info();
        // Edge from (1,0) to (1/2,1/2) contains exactly its lattice endpoint.
        let e = info
            .iter()
            .find(|e| e.start == RationalPoint::from_ints(1, 0))
            .unwrap();
        assert_eq!(e.lattice_point_count, 1);
        assert!(e.affine_hull_has_lattice_points);

        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        for e in sq.edge_lattice_info() {
            assert_eq!(e.lattice_point_count, 2);
            assert_eq!(e.lattice_length, rat_int(1));
        }
    }

    #[test]
    fn edge_without_lattice_points_on_hull() {
        // Edge from (1/2,0) to (0,1/2): affine hull x + y = 1/2 misses the lattice.
        let t = polyr(&[((0, 1), (0, 1)), ((1, 2), (0, 1)), ((0, 1), (1, 2))]);
        let info = t.edge_lattice_info();
        let e = info
            .iter()
            .find(|e| !e.affine_hull_has_lattice_points)
            .unwrap();
        assert_eq!(e.lattice_point_count, 0);
        assert!(!t.lattice_point_on_every_edge());
    }
}
