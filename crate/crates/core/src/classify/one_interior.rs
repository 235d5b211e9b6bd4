//! Constructive classification of the half-integral pseudo-integral
//! polygons with exactly one interior lattice point.
//!
//! The construction follows the case split on the dimension of the integer
//! hull. When the hull is a segment it carries three lattice points and two
//! half-integral apexes at lattice distance 1/2, one per side. When the hull
//! is a polygon it is hollow, and the polygon is its convex hull with a
//! single half-integral apex that either sits over an edge with exactly
//! three lattice points (swallowing the edge midpoint) or over a corner
//! whose two edges have two lattice points each (swallowing the corner).
//! Every candidate list below is finite; measuring and deduping the
//! candidates yields the classification.

use num_traits::Zero;

use crate::classify::{dedupe, records_from, ClassificationRecord, Provenance};
use crate::ehrhart::pseudo_integrality;
use crate::geometry::{segment_lattice_point_count, ConvexPolygon, RationalPoint};
use crate::rational::{rat, rat_int, Rational};
use crate::unimodular::canonical_form;

fn polyr(pts: &[(Rational, Rational)]) -> ConvexPolygon {
    ConvexPolygon::from_points(pts.iter().map(|(x, y)| RationalPoint::new(x.clone(), y.clone())))
        .expect("candidate polygon is full-dimensional")
}

fn segment_hull_candidates(out: &mut Vec<ConvexPolygon>) {
    // Hull = segment with 3 lattice points; apexes (1/2,-1) and
    // (-1/2, l/2 - 1) with l = 0..4 after normalization.
    for l in 0..=4i64 {
        out.push(polyr(&[
            (rat_int(0), rat_int(1)),
            (rat_int(0), rat_int(-1)),
            (rat(1, 2), rat_int(-1)),
            (rat(-1, 2), rat(l - 2, 2)),
        ]));
    }
}

fn edge_apex_candidates(out: &mut Vec<ConvexPolygon>) {
    // Apex normalized to (0,1/2) over the 3-point edge (0,0)-(2,0); the rest
    // of the hull is a bottom row from (a,-1) to (w,-1) inside [0,6].
    for a in 0..=6i64 {
        for w in a..=6 {
            out.push(polyr(&[
                (rat_int(0), rat(1, 2)),
                (rat_int(0), rat_int(0)),
                (rat_int(2), rat_int(0)),
                (rat_int(a), rat_int(-1)),
                (rat_int(w), rat_int(-1)),
            ]));
        }
    }
    // Hull = twice the standard triangle, apex below its bottom edge.
    for l in 0..=5i64 {
        out.push(polyr(&[
            (rat_int(0), rat_int(0)),
            (rat_int(2), rat_int(0)),
            (rat_int(0), rat_int(2)),
            (rat(l, 2), rat(-1, 2)),
        ]));
    }
}

fn corner_apex_candidates(out: &mut Vec<ConvexPolygon>) {
    // For every hollow hull and every corner whose two edges carry exactly
    // two lattice points, the apex at lattice distance 1/2 outside both edge
    // lines is unique; keep it when it is half-integral.
    for bh in 3..=10u64 {
        for hull in crate::classify::hollow_lattice_polygons(bh) {
            let verts = hull.vertices();
            let n = verts.len();
            for c in 0..n {
                let prev = &verts[(c + n - 1) % n];
                let corner = &verts[c];
                let next = &verts[(c + 1) % n];
                if segment_lattice_point_count(prev, corner) != 2
                    || segment_lattice_point_count(corner, next) != 2
                {
                    continue;
                }
                let (n1, c1) = crate::geometry::edge_outward_line(prev, corner);
                let (n2, c2) = crate::geometry::edge_outward_line(corner, next);
                let det = rat_int(0)
                    + Rational::from_integer(&n1.0 * &n2.1 - &n1.1 * &n2.0);
                if det.is_zero() {
                    continue;
                }
                let r1 = c1 + rat(1, 2);
                let r2 = c2 + rat(1, 2);
                let vx = (&r1 * Rational::from_integer(n2.1.clone())
                    - &r2 * Rational::from_integer(n1.1.clone()))
                    / &det;
                let vy = (Rational::from_integer(n1.0.clone()) * &r2
                    - Rational::from_integer(n2.0.clone()) * &r1)
                    / &det;
                let half_integral = |r: &Rational| (r * rat_int(2)).is_integer();
                if !half_integral(&vx) || !half_integral(&vy) {
                    continue;
                }
                let mut pts: Vec<RationalPoint> = verts.to_vec();
                pts.push(RationalPoint::new(vx, vy));
                if let Ok(p) = ConvexPolygon::from_points(pts) {
                    out.push(p);
                }
            }
        }
    }
}

/// The half-integral pseudo-integral polygons with exactly one interior
/// lattice point, up to affine unimodular equivalence.
pub fn classify_one_interior() -> Vec<ClassificationRecord> {
    let mut candidates = Vec::new();
    segment_hull_candidates(&mut candidates);
    edge_apex_candidates(&mut candidates);
    corner_apex_candidates(&mut candidates);

    let kept: Vec<ConvexPolygon> = candidates
        .into_iter()
        .filter(|p| {
            p.denominator_u64() == 2
                && p.lattice_point_counts().interior == 1
                && pseudo_integrality(p).is_pseudo_integral
        })
        .map(|p| canonical_form(&p).polygon)
        .collect();
    records_from(dedupe(kept), Provenance::ConstructiveI1)
}
