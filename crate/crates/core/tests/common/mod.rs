//! Shared helpers for the integration suites: seeded samplers and a naive
//! counting oracle that stays independent of the row-sweep implementation.

use pipoly::geometry::{ConvexPolygon, RationalPoint};
use pipoly::rational::{rat, Rational};
use pipoly::unimodular::UnimodularMap;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exact point-in-polygon classification from edge cross products only.
fn classify_point(p: &ConvexPolygon, x: i64, y: i64) -> Option<bool> {
    use num_traits::{Signed, Zero};
    let pt = RationalPoint::from_ints(x, y);
    let mut on_edge = false;
    for (a, b) in p.edges() {
        let c = (&b.x - &a.x) * (&pt.y - &a.y) - (&b.y - &a.y) * (&pt.x - &a.x);
        if c.is_negative() {
            return None;
        }
        if c.is_zero() {
            on_edge = true;
        }
    }
    Some(on_edge)
}

/// `(total, interior, boundary)` by scanning every lattice point of the
/// bounding box.
pub fn naive_counts(p: &ConvexPolygon) -> (u64, u64, u64) {
    use pipoly::rational::{ceil_int, floor_int};
    let (xmin, xmax, ymin, ymax) = p.bounding_box();
    let (x0, x1) = (ceil_int(&xmin), floor_int(&xmax));
    let (y0, y1) = (ceil_int(&ymin), floor_int(&ymax));
    let (mut total, mut boundary) = (0u64, 0u64);
    let mut x = x0.clone();
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let xi = i64::try_from(&x).unwrap();
            let yi = i64::try_from(&y).unwrap();
            if let Some(on_edge) = classify_point(p, xi, yi) {
                total += 1;
                if on_edge {
                    boundary += 1;
                }
            }
            y += 1;
        }
        x += 1;
    }
    (total, total - boundary, boundary)
}

/// Random full-dimensional polygon with vertex coordinates `k/d`,
/// `|k/d| <= range`, for a random denominator `d <= denom_max`.
pub fn random_polygon(rng: &mut ChaCha8Rng, denom_max: i64, range: i64) -> ConvexPolygon {
    loop {
        let d = rng.gen_range(1..=denom_max);
        let n = rng.gen_range(3..=7);
        let pts: Vec<RationalPoint> = (0..n)
            .map(|_| {
                RationalPoint::new(
                    rat(rng.gen_range(-range * d..=range * d), d),
                    rat(rng.gen_range(-range * d..=range * d), d),
                )
            })
            .collect();
        if let Ok(p) = ConvexPolygon::from_points(pts) {
            return p;
        }
    }
}

/// Random polygon with the origin strictly interior.
pub fn random_centered_polygon(rng: &mut ChaCha8Rng, denom_max: i64, range: i64) -> ConvexPolygon {
    loop {
        let p = random_polygon(rng, denom_max, range);
        if p.contains_strictly(&RationalPoint::origin()) {
            return p;
        }
    }
}

/// Random affine unimodular map built from shears, axis swaps and flips.
pub fn random_map(rng: &mut ChaCha8Rng) -> UnimodularMap {
    let mut m = UnimodularMap::identity();
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(-3..=3i64);
        let step = match rng.gen_range(0..4) {
            0 => UnimodularMap::from_i64([[1, k], [0, 1]], [0, 0]).unwrap(),
            1 => UnimodularMap::from_i64([[1, 0], [k, 1]], [0, 0]).unwrap(),
            2 => UnimodularMap::from_i64([[0, 1], [1, 0]], [0, 0]).unwrap(),
            _ => UnimodularMap::from_i64([[-1, 0], [0, 1]], [0, 0]).unwrap(),
        };
        m = step.compose(&m);
    }
    let t = [rng.gen_range(-5..=5), rng.gen_range(-5..=5)];
    UnimodularMap::new(m.matrix().clone(), [t[0].into(), t[1].into()]).unwrap()
}

/// Exact `k/1` helper for tests.
pub fn rint(k: i64) -> Rational {
    rat(k, 1)
}
