//! Affine unimodular transformations, canonical forms and equivalence
//! testing for rational polygons.
//!
//! Two rational polygons are equivalent when an integer-matrix map with
//! determinant +-1 plus an integer translation carries one onto the other.
//! The canonical form is computed on the lattice polygon `denom(P) * P`,
//! with translations restricted to `denom(P) * Z^2` so that polygons that
//! differ by a fractional translation stay in distinct classes.

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, RationalPoint};
use crate::rational::{Int, Rational};

/// `x -> Ax + b` with integer `A`, `|det A| = 1`, and integer `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    a: [[Int; 2]; 2],
    b: [Int; 2],
}

impl UnimodularMap {
    pub fn new(a: [[Int; 2]; 2], b: [Int; 2]) -> Result<Self> {
        let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
        if !det.clone().abs().is_one() {
            return Err(Error::InvalidMap(det));
        }
        Ok(Self { a, b })
    }

    pub fn from_i64(a: [[i64; 2]; 2], b: [i64; 2]) -> Result<Self> {
        Self::new(
            [
                [Int::from(a[0][0]), Int::from(a[0][1])],
                [Int::from(a[1][0]), Int::from(a[1][1])],
            ],
            [Int::from(b[0]), Int::from(b[1])],
        )
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]], [0, 0]).unwrap()
    }

    pub fn matrix(&self) -> &[[Int; 2]; 2] {
        &self.a
    }

    pub fn translation(&self) -> &[Int; 2] {
        &self.b
    }

    pub fn det(&self) -> Int {
        &self.a[0][0] * &self.a[1][1] - &self.a[0][1] * &self.a[1][0]
    }

    pub fn apply_point(&self, p: &RationalPoint) -> RationalPoint {
        let x = Rational::from_integer(self.a[0][0].clone()) * &p.x
            + Rational::from_integer(self.a[0][1].clone()) * &p.y
            + Rational::from_integer(self.b[0].clone());
        let y = Rational::from_integer(self.a[1][0].clone()) * &p.x
            + Rational::from_integer(self.a[1][1].clone()) * &p.y
            + Rational::from_integer(self.b[1].clone());
        RationalPoint::new(x, y)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = [
            [
                &self.a[0][0] * &other.a[0][0] + &self.a[0][1] * &other.a[1][0],
                &self.a[0][0] * &other.a[0][1] + &self.a[0][1] * &other.a[1][1],
            ],
            [
                &self.a[1][0] * &other.a[0][0] + &self.a[1][1] * &other.a[1][0],
                &self.a[1][0] * &other.a[0][1] + &self.a[1][1] * &other.a[1][1],
            ],
        ];
        let b = [
            &self.a[0][0] * &other.b[0] + &self.a[0][1] * &other.b[1] + &self.b[0],
            &self.a[1][0] * &other.b[0] + &self.a[1][1] * &other.b[1] + &self.b[1],
        ];
        Self { a, b }
    }

    pub fn inverse(&self) -> Self {
        let det = self.det(); // +1 or -1, so the inverse stays integral
        let inv = [
            [&self.a[1][1] / &det, -(&self.a[0][1]) / &det],
            [-(&self.a[1][0]) / &det, &self.a[0][0] / &det],
        ];
        let b = [
            -(&inv[0][0] * &self.b[0] + &inv[0][1] * &self.b[1]),
            -(&inv[1][0] * &self.b[0] + &inv[1][1] * &self.b[1]),
        ];
        Self { a: inv, b }
    }
}

/// Image of a polygon under an affine unimodular map.
pub fn apply(map: &UnimodularMap, p: &ConvexPolygon) -> ConvexPolygon {
    ConvexPolygon::from_points(p.vertices().iter().map(|v| map.apply_point(v)))
        .expect("unimodular image of a polygon is a polygon")
}

/// A canonical representative of an equivalence class together with a
/// witness map carrying the input onto it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub polygon: ConvexPolygon,
    pub witness: UnimodularMap,
}

type IntPt = (Int, Int);

fn bezout(u: &IntPt) -> (Int, Int) {
    let e = u.0.extended_gcd(&u.1);
    debug_assert!(e.gcd.is_one(), "direction must be primitive");
    (e.x, e.y)
}

/// One normalized candidate per (directed edge, reflection) pair. The linear
/// part sends the edge direction to (1,0) with the polygon in the upper half
/// plane; the residual shear is pinned by moving the leftmost top-row vertex
/// into `[0, y_top)`, and the translation is the unique vector in `step*Z^2`
/// that puts the lexicographically least vertex into `[0, step)^2`.
fn candidate(
    verts: &[IntPt],
    edge: usize,
    step: &Int,
) -> (Vec<IntPt>, [[Int; 2]; 2], [Int; 2]) {
    let n = verts.len();
    let a = &verts[edge];
    let b = &verts[(edge + 1) % n];
    let d = (&b.0 - &a.0, &b.1 - &a.1);
    let g = d.0.gcd(&d.1);
    let u = (&d.0 / &g, &d.1 / &g);
    let (s, t) = bezout(&u);
    // Rows: r1 = (s, t) with r1.u = 1, r2 = (-uy, ux) with r2.u = 0, det = +1.
    let mut m = [[s, t], [-(&u.1), u.0.clone()]];

    // Shear pin, computed in the edge-start frame so it is translation-free.
    let rel: Vec<IntPt> = verts
        .iter()
        .map(|v| {
            (
                &m[0][0] * (&v.0 - &a.0) + &m[0][1] * (&v.1 - &a.1),
                &m[1][0] * (&v.0 - &a.0) + &m[1][1] * (&v.1 - &a.1),
            )
        })
        .collect();
    let ytop = rel.iter().map(|p| p.1.clone()).max().expect("nonempty");
    debug_assert!(ytop.is_positive());
    let xtop = rel
        .iter()
        .filter(|p| p.1 == ytop)
        .map(|p| p.0.clone())
        .min()
        .expect("nonempty");
    let k = -xtop.div_floor(&ytop);
    // Compose the shear [[1, k], [0, 1]] on the left.
    m[0][0] = &m[0][0] + &k * &m[1][0];
    m[0][1] = &m[0][1] + &k * &m[1][1];

    let mapped: Vec<IntPt> = verts
        .iter()
        .map(|v| {
            (
                &m[0][0] * &v.0 + &m[0][1] * &v.1,
                &m[1][0] * &v.0 + &m[1][1] * &v.1,
            )
        })
        .collect();
    let start = (0..n)
        .min_by(|&i, &j| {
            mapped[i]
                .0
                .cmp(&mapped[j].0)
                .then_with(|| mapped[i].1.cmp(&mapped[j].1))
        })
        .expect("nonempty");
    let tv = [
        -mapped[start].0.div_floor(step) * step,
        -mapped[start].1.div_floor(step) * step,
    ];
    let out: Vec<IntPt> = (0..n)
        .map(|i| {
            let p = &mapped[(start + i) % n];
            (&p.0 + &tv[0], &p.1 + &tv[1])
        })
        .collect();
    (out, m, tv)
}

fn seq_cmp(a: &[IntPt], b: &[IntPt]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (p, q) in a.iter().zip(b) {
            let c = p.0.cmp(&q.0).then_with(|| p.1.cmp(&q.1));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Deterministic canonical representative of the equivalence class of `P`.
pub fn canonical_form(p: &ConvexPolygon) -> CanonicalForm {
    let d = p.denominator().clone();
    let dr = Rational::from_integer(d.clone());
    let scaled: Vec<IntPt> = p
        .vertices()
        .iter()
        .map(|v| ((&v.x * &dr).to_integer(), (&v.y * &dr).to_integer()))
        .collect();

    let mut best: Option<(Vec<IntPt>, [[Int; 2]; 2], [Int; 2])> = None;
    for reflect in [false, true] {
        let verts: Vec<IntPt> = if reflect {
            // Mirror x and reverse to restore counterclockwise order.
            let mut v: Vec<IntPt> = scaled.iter().map(|p| (-(&p.0), p.1.clone())).collect();
            v.reverse();
            v
        } else {
            scaled.clone()
        };
        for e in 0..verts.len() {
            let (seq, mut m, tv) = candidate(&verts, e, &d);
            if reflect {
                // Fold the mirror into the linear part.
                m[0][0] = -(&m[0][0]);
                m[1][0] = -(&m[1][0]);
            }
            if best
                .as_ref()
                .map_or(true, |(bs, _, _)| seq_cmp(&seq, bs) == std::cmp::Ordering::Less)
            {
                best = Some((seq, m, tv));
            }
        }
    }
    let (seq, m, tv) = best.expect("polygon has at least one edge");
    let polygon = ConvexPolygon::from_points(seq.iter().map(|(x, y)| {
        RationalPoint::new(
            Rational::new(x.clone(), d.clone()),
            Rational::new(y.clone(), d.clone()),
        )
    }))
    .expect("canonical image is a polygon");
    // Translation is in d*Z^2 on the scaled polygon, hence integral on P.
    let witness = UnimodularMap::new(m, [&tv[0] / &d, &tv[1] / &d])
        .expect("candidate maps are unimodular");
    debug_assert_eq!(apply(&witness, p), polygon);
    CanonicalForm { polygon, witness }
}

/// Whether two polygons are related by an affine unimodular map.
pub fn are_equivalent(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    if p.denominator() != q.denominator()
        || p.vertices().len() != q.vertices().len()
        || p.area() != q.area()
    {
        return false;
    }
    canonical_form(p).polygon == canonical_form(q).polygon
}
