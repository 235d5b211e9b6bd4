//! Ehrhart quasi-polynomials, period sequences, quasi-period collapse
//! detection and the Ehrhart-polynomial membership predicates.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::ConvexPolygon;
use crate::rational::{is_integer, rat_int, Rational};

/// Degree-2 quasi-polynomial, stored as per-residue coefficient rows
/// `[e0(r), e1(r), e2(r)]` for `r` in `0..period`, after period minimization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    table: Vec<[Rational; 3]>,
    period_sequence: [u64; 3],
}

fn divisors(d: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=d).filter(|k| d % k == 0).collect();
    out.sort_unstable();
    out
}

impl QuasiPolynomial {
    /// Builds from one coefficient row per residue class mod `d` and
    /// minimizes each coefficient's period.
    pub fn from_residue_table(d: u64, rows: Vec<[Rational; 3]>) -> Self {
        assert_eq!(rows.len(), d as usize);
        assert!(d >= 1);
        let mut period_sequence = [d; 3];
        for (j, seq) in period_sequence.iter_mut().enumerate() {
            for &p in &divisors(d) {
                if (0..d as usize).all(|r| rows[r][j] == rows[r % p as usize][j]) {
                    *seq = p;
                    break;
                }
            }
        }
        let period = period_sequence
            .iter()
            .fold(1u64, |acc, &p| num_integer::lcm(acc, p));
        let table = (0..period as usize)
            .map(|r| rows[r % rows.len()].clone())
            .collect();
        Self {
            period,
            table,
            period_sequence,
        }
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Periods of `(e0, e1, e2)`.
    pub fn period_sequence(&self) -> [u64; 3] {
        self.period_sequence
    }

    pub fn is_polynomial(&self) -> bool {
        self.period == 1
    }

    /// `[e0(r), e1(r), e2(r)]` for a residue `r` in `0..period`.
    pub fn residue_coefficients(&self, r: u64) -> &[Rational; 3] {
        &self.table[r as usize]
    }

    /// Leading coefficient; residue-independent.
    pub fn leading_coefficient(&self) -> &Rational {
        &self.table[0][2]
    }

    /// Evaluates at any integer, using the residue of `t` in
    /// `{0, ..., period-1}` (mathematical mod, so negative arguments work
    /// the way reciprocity needs them to).
    pub fn eval(&self, t: i64) -> Rational {
        let r = t.rem_euclid(self.period as i64) as usize;
        let tr = rat_int(t);
        &self.table[r][0] + &self.table[r][1] * &tr + &self.table[r][2] * &tr * &tr
    }
}

impl std::fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::rational::format_rational as fr;
        write!(f, "period={}", self.period)?;
        for (r, row) in self.table.iter().enumerate() {
            write!(
                f,
                "; r={}: {} t^2 + {} t + {}",
                r,
                fr(&row[2]),
                fr(&row[1]),
                fr(&row[0])
            )?;
        }
        Ok(())
    }
}

/// `|kP ∩ Z^2|` with the Ehrhart convention `l(0P) = 1`.
pub fn dilate_count(p: &ConvexPolygon, k: u64) -> u64 {
    if k == 0 {
        1
    } else {
        p.dilate(k).lattice_point_counts().total
    }
}

/// Interior count of `kP`, `k >= 1`.
pub fn dilate_interior_count(p: &ConvexPolygon, k: u64) -> u64 {
    p.dilate(k).lattice_point_counts().interior
}

fn fit_quadratic(samples: &[(i64, Rational); 3]) -> [Rational; 3] {
    // Lagrange interpolation, expanded to monomial coefficients.
    let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
    for j in 0..3 {
        let (tj, yj) = (&samples[j].0, &samples[j].1);
        let others: Vec<i64> = (0..3)
            .filter(|&k| k != j)
            .map(|k| samples[k].0)
            .collect();
        let denom = rat_int(tj - others[0]) * rat_int(tj - others[1]);
        let w = yj / denom;
        e[2] += &w;
        e[1] += &w * rat_int(-(others[0] + others[1]));
        e[0] += &w * rat_int(others[0] * others[1]);
    }
    e
}

/// Ehrhart quasi-polynomial of an arbitrary rational polygon, by exact
/// interpolation per residue class mod `denom(P)`.
///
/// Each residue is fitted through three counts and checked against a fourth;
/// the check failing would mean a counting bug, reported as an internal
/// error rather than silently fitting.
pub fn ehrhart_general(p: &ConvexPolygon) -> Result<QuasiPolynomial> {
    let d = p.denominator_u64();
    let mut rows = Vec::with_capacity(d as usize);
    for r in 0..d {
        let ts = [r, r + d, r + 2 * d];
        let samples: [(i64, Rational); 3] = [
            (ts[0] as i64, rat_int(dilate_count(p, ts[0]) as i64)),
            (ts[1] as i64, rat_int(dilate_count(p, ts[1]) as i64)),
            (ts[2] as i64, rat_int(dilate_count(p, ts[2]) as i64)),
        ];
        let e = fit_quadratic(&samples);
        let t4 = r + 3 * d;
        let predicted = &e[0] + &e[1] * rat_int(t4 as i64) + &e[2] * rat_int((t4 * t4) as i64);
        let counted = rat_int(dilate_count(p, t4) as i64);
        if predicted != counted {
            return Err(Error::InternalCheckFailed(format!(
                "interpolated value at t={t4} is {predicted} but the count is {counted}"
            )));
        }
        rows.push(e);
    }
    let qp = QuasiPolynomial::from_residue_table(d, rows);
    if qp.leading_coefficient() != &p.area()
        || (0..qp.period()).any(|r| qp.residue_coefficients(r)[2] != p.area())
    {
        return Err(Error::InternalCheckFailed(
            "leading coefficient does not equal the area".into(),
        ));
    }
    Ok(qp)
}

/// Closed-form Ehrhart quasi-polynomial for `denom(P) <= 2`: the odd part is
/// `area t^2 + (b/2) t + (l - area - b/2)`, the even part
/// `area t^2 + (b(2P)/4) t + 1`.
pub fn ehrhart_half_integral(p: &ConvexPolygon) -> Result<QuasiPolynomial> {
    let d = p.denominator();
    if !(d.is_one() || d == &crate::rational::int(2)) {
        return Err(Error::DenominatorTooLarge(d.clone(), 2));
    }
    let area = p.area();
    let counts = p.lattice_point_counts();
    let b_half = rat_int(counts.boundary as i64) / rat_int(2);
    if d.is_one() {
        let rows = vec![[Rational::one(), b_half, area]];
        return Ok(QuasiPolynomial::from_residue_table(1, rows));
    }
    let b2 = p.dilate(2).lattice_point_counts().boundary;
    let even = [
        Rational::one(),
        rat_int(b2 as i64) / rat_int(4),
        area.clone(),
    ];
    let odd_e0 = rat_int(counts.total as i64) - &area - &b_half;
    let odd = [odd_e0, b_half, area];
    Ok(QuasiPolynomial::from_residue_table(2, vec![even, odd]))
}

/// Ehrhart-Macdonald reciprocity check: `ehr(-k) = i(kP)` for `k = 1..k_max`.
pub fn check_reciprocity(p: &ConvexPolygon, k_max: u64) -> Result<bool> {
    let qp = ehrhart_general(p)?;
    for k in 1..=k_max {
        if qp.eval(-(k as i64)) != rat_int(dilate_interior_count(p, k) as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the pseudo-integrality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoIntegralityReport {
    /// `l(P) - area(P) - b(P)/2 = 1`.
    pub obeys_pick: bool,
    pub lattice_point_on_every_edge: bool,
    pub period_sequence: [u64; 3],
    pub is_pseudo_integral: bool,
}

/// Tests whether the Ehrhart quasi-polynomial of `P` is a genuine
/// polynomial. For `denom(P) <= 2` this is the two-criterion test (Pick's
/// formula plus a lattice point on every edge); for larger denominators the
/// general criterion over `k = 1..denom(P)` is used.
pub fn pseudo_integrality(p: &ConvexPolygon) -> PseudoIntegralityReport {
    let counts = p.lattice_point_counts();
    let area = p.area();
    let obeys_pick = rat_int(counts.total as i64)
        - &area
        - rat_int(counts.boundary as i64) / rat_int(2)
        == Rational::one();
    let lattice_point_on_every_edge = p.lattice_point_on_every_edge();
    let d = p.denominator_u64();
    let is_pseudo_integral = if d <= 2 {
        obeys_pick && lattice_point_on_every_edge
    } else {
        (1..=d).all(|k| {
            let ck = p.dilate(k).lattice_point_counts();
            let pick = p.area() * rat_int((k * k) as i64)
                == rat_int(ck.interior as i64) + rat_int(ck.boundary as i64) / rat_int(2)
                    - Rational::one();
            pick && ck.boundary == k * counts.boundary
        })
    };
    let period_sequence = ehrhart_general(p)
        .expect("interpolation consistency")
        .period_sequence();
    PseudoIntegralityReport {
        obeys_pick,
        lattice_point_on_every_edge,
        period_sequence,
        is_pseudo_integral,
    }
}

/// For pseudo-integral `P` with `d = denom(P)`, the counts of the lattice
/// polygon `dP`: `i(dP) = d^2 i + (d^2-d)/2 b - d^2 + 1` and `b(dP) = d b`,
/// verified against the direct counts.
pub fn dilate_invariants(p: &ConvexPolygon) -> Result<(u64, u64)> {
    if !pseudo_integrality(p).is_pseudo_integral {
        return Err(Error::NotPseudoIntegral);
    }
    let d = p.denominator_u64() as i64;
    let c = p.lattice_point_counts();
    let (i, b) = (c.interior as i64, c.boundary as i64);
    let i_d = d * d * i + (d * d - d) / 2 * b - d * d + 1;
    let b_d = d * b;
    let measured = p.dilate(d as u64).lattice_point_counts();
    if (measured.interior, measured.boundary) != (i_d as u64, b_d as u64) {
        return Err(Error::InternalCheckFailed(format!(
            "dilate invariants predict ({i_d}, {b_d}) but counted ({}, {})",
            measured.interior, measured.boundary
        )));
    }
    Ok((i_d as u64, b_d as u64))
}

/// Decodes `(e2, e1, e0)` into a candidate pair `(i, b)` via `b = 2 e1`,
/// `i = e2 - e1 + 1`, requiring `e0 = 1` and integrality.
fn decode_pair(e2: &Rational, e1: &Rational, e0: &Rational) -> Option<(i64, i64)> {
    if !e0.is_one() {
        return None;
    }
    let b = e1 * rat_int(2);
    let i = e2 - e1 + Rational::one();
    if !is_integer(&b) || !is_integer(&i) {
        return None;
    }
    let b = i64::try_from(&b.to_integer()).ok()?;
    let i = i64::try_from(&i.to_integer()).ok()?;
    if i < 0 || b < 0 {
        return None;
    }
    Some((i, b))
}

/// Whether `e2 t^2 + e1 t + e0` is the Ehrhart polynomial of a lattice
/// polygon; returns the witness pair `(i, b)`.
pub fn is_ehrhart_polynomial_lattice(
    e2: &Rational,
    e1: &Rational,
    e0: &Rational,
) -> Option<(u64, u64)> {
    let (i, b) = decode_pair(e2, e1, e0)?;
    let ok = (i == 0 && b >= 3) || (i > 0 && 3 <= b && b <= 2 * i + 6) || (i, b) == (1, 9);
    ok.then_some((i as u64, b as u64))
}

/// Whether `e2 t^2 + e1 t + e0` is the Ehrhart polynomial of a
/// pseudo-integral polygon with denominator 2; returns the witness `(i, b)`.
pub fn is_ehrhart_polynomial_half_integral_pip(
    e2: &Rational,
    e1: &Rational,
    e0: &Rational,
) -> Option<(u64, u64)> {
    let (i, b) = decode_pair(e2, e1, e0)?;
    let ok = (i, b) == (0, 3) || (i > 0 && 2 <= b && b <= 2 * i + 7);
    ok.then_some((i as u64, b as u64))
}
