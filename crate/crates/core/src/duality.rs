//! Polar duals, Hibi's criterion, Fano/LDP detection, Gorenstein indices and
//! the two boundary/area identities for centered pseudo-integral polygons.

use num_traits::{One, Signed, Zero};

use crate::ehrhart::{dilate_count, dilate_interior_count, ehrhart_general, pseudo_integrality};
use crate::error::{Error, Result};
use crate::geometry::{edge_outward_line, ConvexPolygon, RationalPoint};
use crate::rational::{gcd, int, is_integer, rat_int, Int, Rational};

fn require_origin_interior(p: &ConvexPolygon) -> Result<()> {
    if p.contains_strictly(&RationalPoint::origin()) {
        Ok(())
    } else {
        Err(Error::OriginNotInterior)
    }
}

/// Outward primitive normals and offsets `<n, x> = c` of all edges, in edge
/// order. With the origin interior every `c` is positive.
fn edge_normals(p: &ConvexPolygon) -> Vec<((Int, Int), Rational)> {
    p.edges().map(|(a, b)| edge_outward_line(a, b)).collect()
}

/// Polar dual `P* = {y | <y, x> >= -1 for all x in P}`; each edge
/// `<n, x> = c` of `P` contributes the vertex `-n/c`.
pub fn dual(p: &ConvexPolygon) -> Result<ConvexPolygon> {
    require_origin_interior(p)?;
    let verts = edge_normals(p).into_iter().map(|((nx, ny), c)| {
        RationalPoint::new(
            Rational::from_integer(-nx) / &c,
            Rational::from_integer(-ny) / &c,
        )
    });
    ConvexPolygon::from_points(verts)
}

/// Summary of a polygon's dual.
#[derive(Clone, Debug)]
pub struct DualPolygonReport {
    pub dual: ConvexPolygon,
    pub is_lattice_dual: bool,
    /// Every edge of `P` at lattice distance 1 from the origin.
    pub is_fano_dual: bool,
    /// Gorenstein index of the dual when it is Fano: the denominator of the
    /// double dual, i.e. of `P` itself.
    pub gorenstein_index: Int,
}

pub fn dual_report(p: &ConvexPolygon) -> Result<DualPolygonReport> {
    let d = dual(p)?;
    let is_fano_dual = edge_normals(p).iter().all(|(_, c)| c.is_one());
    Ok(DualPolygonReport {
        is_lattice_dual: d.is_lattice(),
        is_fano_dual,
        gorenstein_index: p.denominator().clone(),
        dual: d,
    })
}

/// Hibi's criterion: evaluates the three equivalent conditions
/// independently for `k = 0..k_max` and returns their common value.
pub fn hibi_check(p: &ConvexPolygon, k_max: u64) -> Result<bool> {
    require_origin_interior(p)?;
    let cond_dual_lattice = dual(p)?.is_lattice();
    // Every edge at lattice distance 1/a from the origin, a a positive integer.
    let cond_distances = edge_normals(p)
        .iter()
        .all(|(_, c)| c.is_positive() && c.numer().is_one());
    // Both sides of the count identity are quasi-polynomials of quasi-period
    // dividing denom(P); agreement on three points per residue class settles
    // it for all k, so extend short ranges to 3*denom.
    let k_hi = k_max.max(3 * p.denominator_u64());
    let cond_counts = (0..=k_hi).all(|k| dilate_count(p, k) == dilate_interior_count(p, k + 1));
    if cond_dual_lattice != cond_distances || cond_distances != cond_counts {
        return Err(Error::InternalCheckFailed(format!(
            "Hibi conditions disagree: dual lattice {cond_dual_lattice}, \
             distances {cond_distances}, counts {cond_counts}"
        )));
    }
    Ok(cond_dual_lattice)
}

/// Whether a lattice polygon with interior origin has only primitive
/// vertices, together with its Gorenstein index `denom(Q*)`.
pub fn is_ldp(q: &ConvexPolygon) -> Result<(bool, Int)> {
    if !q.is_lattice() {
        return Err(Error::NotLattice);
    }
    require_origin_interior(q)?;
    let fano = q.vertices().iter().all(|v| {
        let g: Int = gcd(&v.x.to_integer(), &v.y.to_integer());
        g.is_one()
    });
    let index = dual(q)?.denominator().clone();
    Ok((fano, index))
}

/// The five equivalent conditions for a centered half-integral polygon,
/// each computed independently.
#[derive(Clone, Debug)]
pub struct FiveConditionReport {
    /// In order: dual is LDP; every edge at lattice distance 1; the k-count
    /// identity plus lattice points on every edge's affine hull; the Ehrhart
    /// quasi-polynomial equals `area t^2 + area t + 1`; the only interior
    /// lattice point is the origin and the polygon is pseudo-integral.
    pub conditions: [bool; 5],
    pub holds: bool,
}

pub fn one_interior_pip_dual_theorem(p: &ConvexPolygon) -> Result<FiveConditionReport> {
    let d = p.denominator();
    if d > &int(2) {
        return Err(Error::DenominatorTooLarge(d.clone(), 2));
    }
    require_origin_interior(p)?;
    let k_max = 6;

    let dual_p = dual(p)?;
    let c1 = dual_p.is_lattice()
        && dual_p.vertices().iter().all(|v| {
            let g: Int = gcd(&v.x.to_integer(), &v.y.to_integer());
            g.is_one()
        });
    let normals = edge_normals(p);
    let c2 = normals.iter().all(|(_, c)| c.is_one());
    let c3 = (0..=k_max).all(|k| dilate_count(p, k) == dilate_interior_count(p, k + 1))
        && normals.iter().all(|(_, c)| is_integer(c));
    let qp = ehrhart_general(p)?;
    let area = p.area();
    let c4 = qp.is_polynomial()
        && qp.residue_coefficients(0) == &[Rational::one(), area.clone(), area.clone()];
    let interior = p.interior_lattice_points();
    let c5 = interior.len() == 1
        && interior[0].0.is_zero()
        && interior[0].1.is_zero()
        && pseudo_integrality(p).is_pseudo_integral;

    let conditions = [c1, c2, c3, c4, c5];
    if conditions.iter().any(|&c| c != c1) {
        return Err(Error::InternalCheckFailed(format!(
            "five equivalent conditions disagree: {conditions:?}"
        )));
    }
    Ok(FiveConditionReport {
        conditions,
        holds: c1,
    })
}

/// `b(P) + b(P*)` and `12 + (i(P*) - 1)` for a centered pseudo-integral
/// polygon of denominator at most 2.
pub fn boundary_sum_identity(p: &ConvexPolygon) -> Result<(u64, u64)> {
    if p.denominator() > &int(2) {
        return Err(Error::PreconditionViolated(
            "denominator must be at most 2".into(),
        ));
    }
    require_origin_interior(p)?;
    let interior = p.interior_lattice_points();
    if interior.len() != 1 || !interior[0].0.is_zero() || !interior[0].1.is_zero() {
        return Err(Error::PreconditionViolated(
            "origin must be the unique interior lattice point".into(),
        ));
    }
    if !pseudo_integrality(p).is_pseudo_integral {
        return Err(Error::PreconditionViolated(
            "polygon must be pseudo-integral".into(),
        ));
    }
    let d = dual(p)?;
    let cb = p.lattice_point_counts().boundary;
    let cd = d.lattice_point_counts();
    let lhs = cb + cd.boundary;
    let rhs = 12 + cd.interior - 1;
    if lhs != rhs {
        return Err(Error::InternalCheckFailed(format!(
            "boundary sum identity fails: {lhs} vs {rhs}"
        )));
    }
    Ok((lhs, rhs))
}

/// The weight `kappa(l) = -min{lambda >= 0 | l in lambda * Q}` for every
/// lattice point of a polygon `Q` with interior origin. Boundary points get
/// exactly -1, the origin gets 0.
#[derive(Clone, Debug)]
pub struct KappaWeights {
    pub weights: Vec<((Int, Int), Rational)>,
}

impl KappaWeights {
    pub fn sum_of_squares_shifted(&self) -> Rational {
        self.weights
            .iter()
            .map(|(_, k)| {
                let s = k + Rational::one();
                &s * &s
            })
            .sum()
    }
}

pub fn kappa_weights(q: &ConvexPolygon) -> Result<KappaWeights> {
    require_origin_interior(q)?;
    let normals = edge_normals(q);
    let weights = q
        .lattice_points()
        .into_iter()
        .map(|(x, y)| {
            // Minimal lambda with (x, y) in lambda*Q is the largest facet
            // ratio <n, l> / c, clamped at zero for the origin.
            let mut lambda = Rational::zero();
            for ((nx, ny), c) in &normals {
                let v = (Rational::from_integer(nx.clone()) * Rational::from_integer(x.clone())
                    + Rational::from_integer(ny.clone()) * Rational::from_integer(y.clone()))
                    / c;
                if v > lambda {
                    lambda = v;
                }
            }
            debug_assert!(lambda <= Rational::one());
            ((x, y), -lambda)
        })
        .collect();
    Ok(KappaWeights { weights })
}

/// Both sides of `2 (area P + area P*) = 12 * sum (kappa + 1)^2`, for a
/// polygon whose dual is LDP.
#[derive(Clone, Debug)]
pub struct StringyIdentity {
    pub lhs: Rational,
    pub rhs: Rational,
    /// Both sides equal 12.
    pub equality_at_minimum: bool,
    /// `P` and `P*` are both lattice polygons.
    pub reflexive: bool,
}

pub fn stringy_identity(p: &ConvexPolygon) -> Result<StringyIdentity> {
    require_origin_interior(p)?;
    let d = dual(p)?;
    match is_ldp(&d) {
        Ok((true, _)) => {}
        Ok((false, _)) => {
            return Err(Error::PreconditionViolated(
                "dual polygon has an imprimitive vertex".into(),
            ))
        }
        Err(_) => {
            return Err(Error::PreconditionViolated(
                "dual polygon is not a lattice polygon".into(),
            ))
        }
    }
    let lhs = (p.area() + d.area()) * rat_int(2);
    let kappa = kappa_weights(&d)?;
    let rhs = kappa.sum_of_squares_shifted() * rat_int(12);
    if lhs != rhs {
        return Err(Error::InternalCheckFailed(format!(
            "stringy identity fails: {lhs} vs {rhs}"
        )));
    }
    let twelve = rat_int(12);
    Ok(StringyIdentity {
        equality_at_minimum: lhs == twelve,
        reflexive: p.is_lattice() && d.is_lattice(),
        lhs,
        rhs,
    })
}
