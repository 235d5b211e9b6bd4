//! Generators for the explicit polygon families, each shipping its claimed
//! invariants so that verification is a genuine cross-check and not a
//! recomputation of the same formula.

use crate::ehrhart::pseudo_integrality;
use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, RationalPoint};
use crate::rational::{rat, rat_int, Rational};

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Lattice triangle with `i` interior and 3 boundary points.
    P1I3 { i: i64 },
    /// Lattice quadrilateral with `i >= 1` interior and `4 <= b <= 2i+6`
    /// boundary points. `b = 3` is served by `P1I3`.
    P1Ib { i: i64, b: i64 },
    /// Hollow lattice triangle with `b >= 3` boundary points.
    P1Hollow { b: i64 },
    /// Half-integral triangle with `i >= 1` interior and 2 boundary points.
    T2I2 { i: i64 },
    /// The unique hollow half-integral pseudo-integral triangle.
    T2Hollow,
    /// Denominator-3 triangle with `i >= 1` interior and 1 boundary point.
    T3I1 { i: i64 },
    /// Hollow denominator-3 quadrilateral with `b >= 4` boundary points.
    Q3Hollow { b: i64 },
    /// Hollow denominator-`d` triangle with `d+1` boundary points. The claim
    /// is a conjecture, checked computationally.
    TdHollow { d: i64 },
    /// Half-integral pentagon with `i >= 1` interior and `3 <= b <= 2i+7`
    /// boundary points.
    P2Ib { i: i64, b: i64 },
    /// Extremal pentagon, `b = 2i+7`, parameter `0 <= a <= (i-1)/2`.
    P2ExtA { i: i64, a: i64 },
    /// Extremal pentagon, `b = 2i+7`, the `i > 1` sporadic shape.
    P2ExtS { i: i64 },
    /// The single extra extremal pentagon at `i = 3`.
    P2ExtS3,
}

/// Invariants a family member is claimed to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedInvariants {
    pub denominator: i64,
    pub interior: i64,
    pub boundary: i64,
    pub area: Rational,
    pub pseudo_integral: bool,
    /// The claim is hedged in the source and only checked computationally.
    pub conjecture: bool,
}

impl FamilySpec {
    pub fn id(&self) -> &'static str {
        match self {
            FamilySpec::P1I3 { .. } => "p1_i3",
            FamilySpec::P1Ib { .. } => "p1_ib",
            FamilySpec::P1Hollow { .. } => "p1_0b",
            FamilySpec::T2I2 { .. } => "t2_i2",
            FamilySpec::T2Hollow => "t2_03",
            FamilySpec::T3I1 { .. } => "t3_i1",
            FamilySpec::Q3Hollow { .. } => "q3_0b",
            FamilySpec::TdHollow { .. } => "td_0d1",
            FamilySpec::P2Ib { .. } => "p2_ib",
            FamilySpec::P2ExtA { .. } => "p2_ext_a",
            FamilySpec::P2ExtS { .. } => "p2_ext_s",
            FamilySpec::P2ExtS3 => "p2_ext_s3",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match *self {
            FamilySpec::P1I3 { i } | FamilySpec::T2I2 { i } | FamilySpec::T3I1 { i } => {
                if i < 1 {
                    return fail(format!("{}: need i >= 1, got i={i}", self.id()));
                }
            }
            FamilySpec::P1Ib { i, b } => {
                if i < 1 {
                    return fail(format!("p1_ib: need i >= 1, got i={i}"));
                }
                if !(4 <= b && b <= 2 * i + 6) {
                    return fail(format!("p1_ib: need 4 <= b <= 2i+6 = {}, got b={b}", 2 * i + 6));
                }
            }
            FamilySpec::P1Hollow { b } => {
                if b < 3 {
                    return fail(format!("p1_0b: need b >= 3, got b={b}"));
                }
            }
            FamilySpec::T2Hollow | FamilySpec::P2ExtS3 => {}
            FamilySpec::Q3Hollow { b } => {
                if b < 4 {
                    return fail(format!("q3_0b: need b >= 4, got b={b}"));
                }
            }
            FamilySpec::TdHollow { d } => {
                if d < 2 {
                    return fail(format!("td_0d1: need d >= 2, got d={d}"));
                }
            }
            FamilySpec::P2Ib { i, b } => {
                if i < 1 {
                    return fail(format!("p2_ib: need i >= 1, got i={i}"));
                }
                if !(3 <= b && b <= 2 * i + 7) {
                    return fail(format!("p2_ib: need 3 <= b <= 2i+7 = {}, got b={b}", 2 * i + 7));
                }
            }
            FamilySpec::P2ExtA { i, a } => {
                if i < 1 {
                    return fail(format!("p2_ext_a: need i >= 1, got i={i}"));
                }
                if !(0 <= a && 2 * a <= i - 1) {
                    return fail(format!(
                        "p2_ext_a: need 0 <= a <= (i-1)/2 = {}/2, got a={a}",
                        i - 1
                    ));
                }
            }
            FamilySpec::P2ExtS { i } => {
                if i <= 1 {
                    return fail(format!("p2_ext_s: need i > 1, got i={i}"));
                }
            }
        }
        Ok(())
    }

    /// The polygon, with vertices exactly as in the defining formula
    /// (hull normalization may merge collinear boundary vertices).
    pub fn generate(&self) -> Result<ConvexPolygon> {
        self.validate()?;
        let pts: Vec<RationalPoint> = match *self {
            FamilySpec::P1I3 { i } => vec![
                RationalPoint::from_ints(0, 1),
                RationalPoint::from_ints(1, -1),
                RationalPoint::from_ints(i + 1, 0),
            ],
            FamilySpec::P1Ib { i, b } => vec![
                RationalPoint::from_ints(0, -1),
                RationalPoint::from_ints(b - 4, -1),
                RationalPoint::from_ints(i + 1, 0),
                RationalPoint::from_ints(0, 1),
            ],
            FamilySpec::P1Hollow { b } => vec![
                RationalPoint::from_ints(0, 0),
                RationalPoint::from_ints(b - 2, 0),
                RationalPoint::from_ints(0, 1),
            ],
            FamilySpec::T2I2 { i } => vec![
                RationalPoint::from_ints(0, 1),
                RationalPoint::from_ints(1, -1),
                RationalPoint::new(rat(2 * i + 1, 2), rat_int(0)),
            ],
            FamilySpec::T2Hollow => vec![
                RationalPoint::from_ints(0, 0),
                RationalPoint::from_ints(2, 0),
                RationalPoint::new(rat_int(0), rat(1, 2)),
            ],
            FamilySpec::T3I1 { i } => vec![
                RationalPoint::new(rat(2, 3), rat_int(0)),
                RationalPoint::from_ints(1, 0),
                RationalPoint::new(rat(3 * i + 1, 3), rat_int(6 * i - 3)),
            ],
            FamilySpec::Q3Hollow { b } => vec![
                RationalPoint::from_ints(0, 0),
                RationalPoint::new(rat(1, 3), rat_int(0)),
                RationalPoint::new(rat(3 * b - 7, 3), rat_int(2 * b - 5)),
                RationalPoint::from_ints(b - 1, 2 * b - 2),
            ],
            FamilySpec::TdHollow { d } => vec![
                RationalPoint::from_ints(0, 0),
                RationalPoint::new(rat(1, d), rat_int(0)),
                RationalPoint::from_ints(d, (d - 1) * d),
            ],
            FamilySpec::P2Ib { i, b } => vec![
                RationalPoint::new(rat_int(0), rat(3, 2)),
                RationalPoint::from_ints(0, 1),
                RationalPoint::from_ints(2 * i + 7 - b, 0),
                RationalPoint::from_ints(2 * i + 4, 0),
                RationalPoint::new(rat_int(2 * i + 2), rat(1, 2)),
            ],
            FamilySpec::P2ExtA { i, a } => vec![
                RationalPoint::new(rat_int(0), rat(3, 2)),
                RationalPoint::new(rat_int(0), rat(1, 2)),
                RationalPoint::from_ints(a, 0),
                RationalPoint::from_ints(a + 2 * i + 4, 0),
                RationalPoint::new(rat_int(2 * i + 2), rat(1, 2)),
            ],
            FamilySpec::P2ExtS { i } => vec![
                RationalPoint::new(rat_int(0), rat(3, 2)),
                RationalPoint::from_ints(0, 1),
                RationalPoint::new(rat(1, 2), rat_int(0)),
                RationalPoint::from_ints(2 * i + 5, 0),
                RationalPoint::new(rat_int(2 * i + 2), rat(1, 2)),
            ],
            FamilySpec::P2ExtS3 => vec![
                RationalPoint::new(rat_int(0), rat(3, 2)),
                RationalPoint::from_ints(0, 1),
                RationalPoint::new(rat(1, 2), rat_int(0)),
                RationalPoint::new(rat(23, 2), rat_int(0)),
                RationalPoint::from_ints(4, 1),
            ],
        };
        ConvexPolygon::from_points(pts)
    }

    /// Claimed invariants, as stated where the family is introduced.
    pub fn claimed(&self) -> Result<ClaimedInvariants> {
        self.validate()?;
        let pick_area = |i: i64, b: i64| rat_int(i) + rat(b, 2) - rat_int(1);
        let c = |denominator, interior, boundary, conjecture| ClaimedInvariants {
            denominator,
            interior,
            boundary,
            area: pick_area(interior, boundary),
            pseudo_integral: true,
            conjecture,
        };
        Ok(match *self {
            FamilySpec::P1I3 { i } => c(1, i, 3, false),
            FamilySpec::P1Ib { i, b } => c(1, i, b, false),
            FamilySpec::P1Hollow { b } => c(1, 0, b, false),
            FamilySpec::T2I2 { i } => c(2, i, 2, false),
            FamilySpec::T2Hollow => c(2, 0, 3, false),
            FamilySpec::T3I1 { i } => c(3, i, 1, false),
            FamilySpec::Q3Hollow { b } => c(3, 0, b, false),
            FamilySpec::TdHollow { d } => c(d, 0, d + 1, true),
            FamilySpec::P2Ib { i, b } => c(2, i, b, false),
            FamilySpec::P2ExtA { i, .. } => c(2, i, 2 * i + 7, false),
            FamilySpec::P2ExtS { i } => c(2, i, 2 * i + 7, false),
            FamilySpec::P2ExtS3 => c(2, 3, 13, false),
        })
    }
}

/// Outcome of measuring a family member against its claims.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub polygon: ConvexPolygon,
    pub claimed: ClaimedInvariants,
    pub measured_denominator: i64,
    pub measured_interior: i64,
    pub measured_boundary: i64,
    pub measured_area: Rational,
    pub measured_pseudo_integral: bool,
    pub ok: bool,
}

/// Measures denominator, interior/boundary counts, area and
/// pseudo-integrality and compares them with the claims. Mismatches are
/// reported, not thrown.
pub fn verify_family(spec: &FamilySpec) -> Result<FamilyReport> {
    let polygon = spec.generate()?;
    let claimed = spec.claimed()?;
    let counts = polygon.lattice_point_counts();
    let area = polygon.area();
    let denom = i64::try_from(polygon.denominator()).expect("family denominator fits i64");
    let pi = pseudo_integrality(&polygon).is_pseudo_integral;
    let ok = denom == claimed.denominator
        && counts.interior as i64 == claimed.interior
        && counts.boundary as i64 == claimed.boundary
        && area == claimed.area
        && pi == claimed.pseudo_integral;
    Ok(FamilyReport {
        spec: *spec,
        claimed,
        measured_denominator: denom,
        measured_interior: counts.interior as i64,
        measured_boundary: counts.boundary as i64,
        measured_area: area,
        measured_pseudo_integral: pi,
        ok,
        polygon,
    })
}

/// A lattice polygon with exactly `i` interior and `b` boundary points, for
/// any feasible pair.
pub fn scott_witness(i: i64, b: i64) -> Result<ConvexPolygon> {
    if (i, b) == (1, 9) {
        return ConvexPolygon::from_points([
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(3, 0),
            RationalPoint::from_ints(0, 3),
        ]);
    }
    if i == 0 && b >= 3 {
        return FamilySpec::P1Hollow { b }.generate();
    }
    if i >= 1 && b == 3 {
        return FamilySpec::P1I3 { i }.generate();
    }
    if i >= 1 && 4 <= b && b <= 2 * i + 6 {
        return FamilySpec::P1Ib { i, b }.generate();
    }
    Err(Error::ParameterOutOfRange(format!(
        "(i, b) = ({i}, {b}) is not realizable by a lattice polygon"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn counts(p: &ConvexPolygon) -> (u64, u64) {
        let c = p.lattice_point_counts();
        (c.interior, c.boundary)
    }

    #[test]
    fn generate_examples() {
        let t = FamilySpec::T2I2 { i: 1 }.generate().unwrap();
        assert_eq!(t.denominator_u64(), 2);
        assert_eq!(counts(&t), (1, 2));
        assert_eq!(t.area(), rat_int(1));

        let p = FamilySpec::P2Ib { i: 2, b: 3 }.generate().unwrap();
        assert_eq!(p.vertices().len(), 4); // two formula vertices coincide
        assert_eq!(p.area(), rat(5, 2));
        assert_eq!(counts(&p), (2, 3));

        let s3 = FamilySpec::P2ExtS3.generate().unwrap();
        assert_eq!(counts(&s3), (3, 13));
    }

    #[test]
    fn b_at_upper_limit_merges_collinear_vertices() {
        let i = 2;
        let p = FamilySpec::P2Ib { i, b: 2 * i + 7 }.generate().unwrap();
        let a0 = FamilySpec::P2ExtA { i, a: 0 }.generate().unwrap();
        assert_eq!(p, a0);
        assert!(verify_family(&FamilySpec::P2Ib { i, b: 2 * i + 7 }).unwrap().ok);
    }

    #[test]
    fn verify_small_sweeps() {
        for i in 1..=10 {
            assert!(verify_family(&FamilySpec::T3I1 { i }).unwrap().ok, "t3_i1 i={i}");
        }
        for b in 4..=12 {
            assert!(verify_family(&FamilySpec::Q3Hollow { b }).unwrap().ok, "q3_0b b={b}");
        }
        for d in 2..=10 {
            let r = verify_family(&FamilySpec::TdHollow { d }).unwrap();
            assert!(r.ok, "td_0d1 d={d}");
            assert!(r.claimed.conjecture);
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::P1Ib { i: 1, b: 3 }.generate().is_err());
        assert!(FamilySpec::P2Ib { i: 2, b: 12 }.generate().is_err());
        assert!(FamilySpec::P2ExtA { i: 3, a: 2 }.generate().is_err());
        assert!(FamilySpec::P2ExtS { i: 1 }.generate().is_err());
        assert!(FamilySpec::T2I2 { i: 0 }.generate().is_err());
    }

    #[test]
    fn scott_witness_examples() {
        let t = scott_witness(1, 9).unwrap();
        assert_eq!(counts(&t), (1, 9));

        let h = scott_witness(0, 5).unwrap();
        assert!(h.vertices().contains(&RationalPoint::from_ints(3, 0)));
        assert_eq!(counts(&h), (0, 5));

        assert!(scott_witness(2, 9).is_ok());
        assert!(scott_witness(2, 10).is_ok());
        assert!(matches!(
            scott_witness(2, 11),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            scott_witness(1, 10),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn scott_bound_on_lattice_families() {
        for i in 1..=6 {
            for b in 3..=(2 * i + 6) {
                let w = scott_witness(i, b).unwrap();
                assert_eq!(counts(&w), (i as u64, b as u64), "(i,b)=({i},{b})");
            }
        }
    }
}
