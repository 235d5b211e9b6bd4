//! Randomized property suites for the geometry, equivalence and duality
//! layers, checked against independent oracles.

mod common;

use common::{naive_counts, random_centered_polygon, random_map, random_polygon, rng};
use pipoly::duality::{dual, hibi_check};
use pipoly::ehrhart::pseudo_integrality;
use pipoly::families::FamilySpec;
use pipoly::geometry::{lattice_distance, ConvexPolygon, RationalPoint};
use pipoly::rational::{rat, rat_int};
use pipoly::unimodular::{apply, are_equivalent, canonical_form};

#[test]
fn counts_match_naive_oracle_on_500_random_polygons() {
    let mut r = rng(0xC0FFEE);
    for round in 0..500 {
        let p = random_polygon(&mut r, 4, 10);
        let c = p.lattice_point_counts();
        assert_eq!(c.total, c.interior + c.boundary, "round {round}: {p}");
        let (t, i, b) = naive_counts(&p);
        assert_eq!((c.total, c.interior, c.boundary), (t, i, b), "round {round}: {p}");
    }
}

#[test]
fn pick_formula_on_random_lattice_polygons() {
    let mut r = rng(0xBEEF);
    for _ in 0..200 {
        let p = random_polygon(&mut r, 1, 12);
        let c = p.lattice_point_counts();
        assert_eq!(
            p.area(),
            rat_int(c.interior as i64) + rat(c.boundary as i64, 2) - rat_int(1),
            "{p}"
        );
    }
}

#[test]
fn dilation_scales_area_quadratically() {
    let mut r = rng(0xD11A7E);
    for _ in 0..100 {
        let p = random_polygon(&mut r, 4, 8);
        for k in 1..=5u64 {
            assert_eq!(p.dilate(k).area(), p.area() * rat_int((k * k) as i64));
        }
    }
}

#[test]
fn lattice_distance_is_unimodular_invariant() {
    let mut r = rng(0x11DE);
    for _ in 0..100 {
        let p = random_polygon(&mut r, 3, 6);
        let m = random_map(&mut r);
        let verts = p.vertices();
        let q = RationalPoint::new(rat(1, 3), rat(-5, 2));
        for i in 0..verts.len() {
            let (a, b) = (&verts[i], &verts[(i + 1) % verts.len()]);
            let before = lattice_distance(a, b, &q).unwrap();
            let after =
                lattice_distance(&m.apply_point(a), &m.apply_point(b), &m.apply_point(&q))
                    .unwrap();
            assert_eq!(before, after);
        }
    }
}

#[test]
fn canonical_form_is_class_invariant() {
    let mut r = rng(0xCA90);
    for _ in 0..120 {
        let p = random_polygon(&mut r, 4, 6);
        let m = random_map(&mut r);
        let image = apply(&m, &p);
        let cp = canonical_form(&p);
        let ci = canonical_form(&image);
        assert_eq!(cp.polygon, ci.polygon, "{p} vs {image}");
        assert_eq!(apply(&ci.witness, &image), ci.polygon);

        // The named invariants agree across the class.
        let (a, b) = (p.lattice_point_counts(), image.lattice_point_counts());
        assert_eq!((a.total, a.interior, a.boundary), (b.total, b.interior, b.boundary));
        assert_eq!(p.area(), image.area());
        assert_eq!(p.denominator(), image.denominator());
        assert!(are_equivalent(&p, &image));
    }
}

#[test]
fn double_dual_on_100_random_centered_polygons() {
    let mut r = rng(0xD0A1);
    for _ in 0..100 {
        let p = random_centered_polygon(&mut r, 3, 5);
        let d = dual(&p).unwrap();
        assert_eq!(dual(&d).unwrap(), p, "{p}");
    }
}

#[test]
fn hibi_conditions_never_disagree() {
    // Disagreement would surface as an internal-consistency error.
    let mut r = rng(0x81B1);
    for _ in 0..100 {
        let p = random_centered_polygon(&mut r, 3, 5);
        hibi_check(&p, 4).unwrap();
    }
}

#[test]
fn extremal_reflection_pairs_are_equivalent() {
    // The two-parameter extremal pentagons for a and i-1-a coincide up to
    // equivalence; other parameter pairs stay distinct.
    for i in [4i64, 5, 7] {
        for a in 0..=(i - 1) / 2 {
            let p = FamilySpec::P2ExtA { i, a }.generate().unwrap();
            let reflected = ConvexPolygon::from_points([
                RationalPoint::new(rat_int(0), rat(3, 2)),
                RationalPoint::new(rat_int(0), rat(1, 2)),
                RationalPoint::from_ints(i - 1 - a, 0),
                RationalPoint::from_ints(i - 1 - a + 2 * i + 4, 0),
                RationalPoint::new(rat_int(2 * i + 2), rat(1, 2)),
            ])
            .unwrap();
            assert!(are_equivalent(&p, &reflected), "i={i} a={a}");
        }
        for a in 0..=(i - 1) / 2 {
            for a2 in (a + 1)..=(i - 1) / 2 {
                let p = FamilySpec::P2ExtA { i, a }.generate().unwrap();
                let q = FamilySpec::P2ExtA { i, a: a2 }.generate().unwrap();
                assert!(!are_equivalent(&p, &q), "i={i} a={a} a'={a2}");
            }
        }
    }
}

#[test]
fn half_integral_families_pass_membership_predicates() {
    use pipoly::ehrhart::{
        is_ehrhart_polynomial_half_integral_pip, is_ehrhart_polynomial_lattice,
    };
    let mut specs: Vec<FamilySpec> = vec![FamilySpec::T2Hollow];
    for i in 1..=6i64 {
        specs.push(FamilySpec::T2I2 { i });
        for b in 3..=(2 * i + 7) {
            specs.push(FamilySpec::P2Ib { i, b });
        }
        specs.push(FamilySpec::P1I3 { i });
        for b in 4..=(2 * i + 6) {
            specs.push(FamilySpec::P1Ib { i, b });
        }
    }
    for spec in specs {
        let p = spec.generate().unwrap();
        assert!(pseudo_integrality(&p).is_pseudo_integral, "{spec:?}");
        let c = p.lattice_point_counts();
        let e2 = p.area();
        let e1 = rat(c.boundary as i64, 2);
        let e0 = rat_int(1);
        let witness = if p.denominator_u64() == 2 {
            is_ehrhart_polynomial_half_integral_pip(&e2, &e1, &e0)
        } else {
            is_ehrhart_polynomial_lattice(&e2, &e1, &e0)
        };
        assert_eq!(witness, Some((c.interior, c.boundary)), "{spec:?}");
    }
}

#[test]
fn classified_records_obey_dilate_formulas() {
    use pipoly::classify::{classify_half_integral_pips, EnumerationBudget};
    let budget = EnumerationBudget::default();
    for (i, b) in [(1u64, 2u64), (1, 3), (2, 2), (0, 3)] {
        for r in classify_half_integral_pips(i, b, &budget).unwrap() {
            let c2 = r.polygon.dilate(2).lattice_point_counts();
            assert_eq!(c2.interior, 4 * r.interior + r.boundary - 3);
            assert_eq!(c2.boundary, 2 * r.boundary);
            assert_eq!(r.period_sequence, [1, 1, 1]);
            assert!(r.boundary <= 2 * r.interior + 7 || (r.interior, r.boundary) == (0, 3));
        }
    }
}
