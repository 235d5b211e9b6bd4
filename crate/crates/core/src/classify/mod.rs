//! Classification pipelines: enumeration of lattice polygons with prescribed
//! interior/boundary counts up to equivalence, the half-integral
//! pseudo-integral classification by `(i, b)`, the constructive
//! one-interior-point classification, and the extremal `b = 2i+7` family.

mod one_interior;
mod search;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::ehrhart::{ehrhart_general, pseudo_integrality};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::geometry::{ConvexPolygon, RationalPoint};
use crate::rational::{rat, Rational};
use crate::unimodular::canonical_form;

pub use one_interior::classify_one_interior;

/// Resource limits for enumeration runs.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget {
    /// Cap on the number of lattice points of the (scaled) polygon being
    /// searched for; cells above the cap fail with `BudgetExceeded`.
    pub max_lattice_points: u64,
    /// Overrides the derived search box side; must not be below it.
    pub box_side: Option<i64>,
    pub time_limit: Option<Duration>,
    /// Re-run the search in a grown box and require identical classes.
    pub confirm_stability: bool,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_lattice_points: 24,
            box_side: None,
            time_limit: None,
            confirm_stability: true,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_points(max_lattice_points: u64) -> Self {
        Self {
            max_lattice_points,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Enumerated,
    ConstructiveI1,
    Extremal,
    Family,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Enumerated => "enumerated",
            Provenance::ConstructiveI1 => "constructive_i1",
            Provenance::Extremal => "extremal",
            Provenance::Family => "family",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        Some(match s {
            "enumerated" => Provenance::Enumerated,
            "constructive_i1" => Provenance::ConstructiveI1,
            "extremal" => Provenance::Extremal,
            "family" => Provenance::Family,
            _ => return None,
        })
    }
}

/// A canonical polygon together with its measured invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    /// Canonical representative; equals its own canonical form.
    pub polygon: ConvexPolygon,
    pub denominator: u64,
    pub interior: u64,
    pub boundary: u64,
    pub area: Rational,
    pub period_sequence: [u64; 3],
    pub pseudo_integral: bool,
    pub provenance: Provenance,
}

pub(crate) fn polygon_cmp(a: &ConvexPolygon, b: &ConvexPolygon) -> std::cmp::Ordering {
    a.vertices()
        .len()
        .cmp(&b.vertices().len())
        .then_with(|| {
            for (p, q) in a.vertices().iter().zip(b.vertices()) {
                let c = p.lex_cmp(q);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
}

fn make_record(polygon: ConvexPolygon, provenance: Provenance) -> ClassificationRecord {
    let counts = polygon.lattice_point_counts();
    let rep = pseudo_integrality(&polygon);
    ClassificationRecord {
        denominator: polygon.denominator_u64(),
        interior: counts.interior,
        boundary: counts.boundary,
        area: polygon.area(),
        period_sequence: rep.period_sequence,
        pseudo_integral: rep.is_pseudo_integral,
        provenance,
        polygon,
    }
}

/// Sorts canonically and drops duplicates.
fn dedupe(mut polys: Vec<ConvexPolygon>) -> Vec<ConvexPolygon> {
    polys.sort_by(polygon_cmp);
    polys.dedup();
    polys
}

fn records_from(polys: Vec<ConvexPolygon>, provenance: Provenance) -> Vec<ClassificationRecord> {
    polys
        .into_par_iter()
        .map(|p| make_record(p, provenance))
        .collect()
}

/// The closed classification of lattice polygons without interior lattice
/// points and `b` boundary points: the twice-dilated standard triangle when
/// `b = 6`, plus one trapezoid per pair `u + d = b`, `1 <= u <= d`, `d > 1`.
pub fn hollow_lattice_polygons(b: u64) -> Vec<ConvexPolygon> {
    let b = b as i64;
    let mut out = Vec::new();
    if b < 3 {
        return out;
    }
    if b == 6 {
        out.push(
            ConvexPolygon::from_points([
                RationalPoint::from_ints(0, 0),
                RationalPoint::from_ints(2, 0),
                RationalPoint::from_ints(0, 2),
            ])
            .expect("valid triangle"),
        );
    }
    let mut u = 1;
    while 2 * u <= b && b - u >= 2 {
        let d = b - u;
        out.push(
            ConvexPolygon::from_points([
                RationalPoint::from_ints(1, 0),
                RationalPoint::from_ints(d, 0),
                RationalPoint::from_ints(u, 1),
                RationalPoint::from_ints(1, 1),
            ])
            .expect("valid trapezoid"),
        );
        u += 1;
    }
    out
}

fn deadline_from(budget: &EnumerationBudget) -> Option<Instant> {
    budget.time_limit.map(|t| Instant::now() + t)
}

/// Height cap for the search box: every class has a representative whose
/// vertical extent is its lattice width, and the lattice width of a convex
/// region of doubled area `t` is at most `sqrt(4t/3)`.
fn lattice_width_bound(area2: i64) -> i64 {
    let mut h = 1i64;
    while 3 * (h + 1) * (h + 1) <= 4 * area2 {
        h += 1;
    }
    h + 1
}

fn search_classes(
    boundary: i64,
    area2: i64,
    box_w: i64,
    box_h: i64,
    deadline: Option<Instant>,
) -> Result<Vec<Vec<search::Pt>>> {
    let raw = search::enumerate_polygons(
        search::SearchSpec {
            boundary,
            area2,
            box_w,
            box_h,
        },
        deadline,
    )?;
    let mut keys: Vec<Vec<search::Pt>> = raw
        .into_par_iter()
        .map(|verts| search::canonical_key(&verts))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys)
}

/// All equivalence classes of lattice polygons with exactly `i` interior and
/// `b` boundary lattice points.
///
/// Hollow cells (`i = 0`) come from the closed classification; cells that
/// are infeasible by the boundary bound for lattice polygons return empty.
/// Searched cells run in a box derived from the area (side `2*area + 2`),
/// and by default are re-run in a grown box to confirm the class set is
/// stable.
pub fn enumerate_lattice_polygons(
    i: u64,
    b: u64,
    budget: &EnumerationBudget,
) -> Result<Vec<ClassificationRecord>> {
    if b < 3 {
        return Ok(Vec::new());
    }
    if i == 0 {
        let canon = dedupe(
            hollow_lattice_polygons(b)
                .into_iter()
                .map(|p| canonical_form(&p).polygon)
                .collect(),
        );
        return Ok(records_from(canon, Provenance::Enumerated));
    }
    let feasible = (3 <= b && b <= 2 * i + 6) || (i, b) == (1, 9);
    if !feasible {
        return Ok(Vec::new());
    }
    if i + b > budget.max_lattice_points {
        return Err(Error::BudgetExceeded(format!(
            "cell ({i}, {b}) needs {} lattice points, budget allows {}",
            i + b,
            budget.max_lattice_points
        )));
    }
    let area2 = (2 * i + b - 2) as i64;
    let derived = area2 + 2;
    let box_w = match budget.box_side {
        None => derived,
        Some(s) if s >= derived => s,
        Some(s) => {
            return Err(Error::ParameterOutOfRange(format!(
                "box side {s} is below the derived minimum {derived} for cell ({i}, {b})"
            )))
        }
    };
    let box_h = (lattice_width_bound(area2) + (box_w - derived)).min(box_w);
    let deadline = deadline_from(budget);
    let keys = search_classes(b as i64, area2, box_w, box_h, deadline)?;
    if budget.confirm_stability {
        let grown = search_classes(b as i64, area2, box_w + 1, box_h + 1, deadline)?;
        if keys != grown {
            return Err(Error::InternalCheckFailed(format!(
                "cell ({i}, {b}): class set changed when the box grew from {box_w}x{box_h} to {}x{}",
                box_w + 1,
                box_h + 1
            )));
        }
    }
    let classes: Vec<ConvexPolygon> = keys
        .into_par_iter()
        .map(|verts| {
            let poly = ConvexPolygon::from_points(
                verts.into_iter().map(|(x, y)| RationalPoint::from_ints(x, y)),
            )
            .expect("canonical key is a valid polygon");
            debug_assert_eq!(canonical_form(&poly).polygon, poly);
            poly
        })
        .collect();
    Ok(records_from(classes, Provenance::Enumerated))
}

const HALF_SHIFTS: [(i64, i64); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// All equivalence classes of half-integral (non-lattice) pseudo-integral
/// polygons with exactly `i` interior and `b` boundary lattice points.
///
/// Such a polygon is a half-shifted half of a lattice polygon with
/// `4i + b - 3` interior and `2b` boundary points; candidates outside the
/// realizable region return empty immediately.
pub fn classify_half_integral_pips(
    i: u64,
    b: u64,
    budget: &EnumerationBudget,
) -> Result<Vec<ClassificationRecord>> {
    let realizable = (i, b) == (0, 3) || (i >= 1 && 2 <= b && b <= 2 * i + 7);
    if !realizable {
        return Ok(Vec::new());
    }
    let iq = 4 * i + b - 3;
    let bq = 2 * b;
    if iq + bq > budget.max_lattice_points {
        return Err(Error::BudgetExceeded(format!(
            "cell ({i}, {b}) scales to {} lattice points, budget allows {}",
            iq + bq,
            budget.max_lattice_points
        )));
    }
    let qs = enumerate_lattice_polygons(iq, bq, budget)?;
    let half = rat(1, 2);
    let candidates: Vec<ConvexPolygon> = qs
        .par_iter()
        .flat_map_iter(|q| {
            let verts: Vec<RationalPoint> = q.polygon.vertices().to_vec();
            let half = half.clone();
            HALF_SHIFTS.into_iter().filter_map(move |(sx, sy)| {
                let shifted = verts.iter().map(|v| {
                    RationalPoint::new(
                        &v.x * &half - rat(sx, 2),
                        &v.y * &half - rat(sy, 2),
                    )
                });
                let p = ConvexPolygon::from_points(shifted).expect("half of a polygon");
                if p.denominator_u64() != 2 {
                    return None;
                }
                if !pseudo_integrality(&p).is_pseudo_integral {
                    return None;
                }
                let c = p.lattice_point_counts();
                debug_assert_eq!((c.interior, c.boundary), (i, b));
                Some(canonical_form(&p).polygon)
            })
        })
        .collect();
    Ok(records_from(dedupe(candidates), Provenance::Enumerated))
}

/// The extremal classes with `b = 2i + 7`: the two-parameter pentagons plus
/// the sporadic shapes at `i > 1` and `i = 3`.
pub fn classify_extremal(i: u64) -> Vec<ClassificationRecord> {
    assert!(i >= 1, "extremal classification needs i >= 1");
    let i = i as i64;
    let mut specs: Vec<FamilySpec> = (0..=(i - 1) / 2)
        .map(|a| FamilySpec::P2ExtA { i, a })
        .collect();
    if i > 1 {
        specs.push(FamilySpec::P2ExtS { i });
    }
    if i == 3 {
        specs.push(FamilySpec::P2ExtS3);
    }
    let canon: Vec<ConvexPolygon> = specs
        .iter()
        .map(|s| {
            let report = crate::families::verify_family(s).expect("valid extremal spec");
            assert!(
                report.ok,
                "extremal member {:?} fails its claimed invariants",
                s
            );
            canonical_form(&report.polygon).polygon
        })
        .collect();
    let deduped = dedupe(canon);
    assert_eq!(
        deduped.len(),
        specs.len(),
        "extremal members must be pairwise inequivalent"
    );
    records_from(deduped, Provenance::Extremal)
}

/// The realizable `(i, b)` pairs for half-integral non-lattice
/// pseudo-integral polygons up to `i_max`, each with a witness family.
pub fn realizable_pairs(i_max: u64) -> Vec<((u64, u64), FamilySpec)> {
    let mut out = vec![((0, 3), FamilySpec::T2Hollow)];
    for i in 1..=i_max {
        out.push(((i, 2), FamilySpec::T2I2 { i: i as i64 }));
        for b in 3..=(2 * i + 7) {
            out.push(((i, b), FamilySpec::P2Ib {
                i: i as i64,
                b: b as i64,
            }));
        }
    }
    out
}

/// Ehrhart data consistency for a record set; used by verification flows.
pub fn record_invariants_hold(r: &ClassificationRecord) -> bool {
    let counts = r.polygon.lattice_point_counts();
    let qp = match ehrhart_general(&r.polygon) {
        Ok(qp) => qp,
        Err(_) => return false,
    };
    canonical_form(&r.polygon).polygon == r.polygon
        && r.polygon.denominator_u64() == r.denominator
        && counts.interior == r.interior
        && counts.boundary == r.boundary
        && r.polygon.area() == r.area
        && qp.period_sequence() == r.period_sequence
        && qp.is_polynomial() == r.pseudo_integral
}
