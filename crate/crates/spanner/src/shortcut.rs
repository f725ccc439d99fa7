//! t-shortcuts on three-point paths and the inequality verifiers built on
//! them.
//!
//! A shortcut on the path p-s-q adds the edge {p,q} and may remove {p,s} or
//! {s,q}, provided the resulting three-vertex graph still t-spans the
//! triple. Its benefit is the shortening |ps|+|sq|-|pq| of the p-q distance,
//! its cost the change in total edge weight, and its efficiency their
//! ratio. Removal legality is decided exactly: with rational coordinates
//! and rational t, "|ps|+|pq| <= t|sq|" is a comparison of square-root sums
//! of rationals, which [`cmp_sqrt_sum`] settles without rounding.

use crate::point::{on_open_segment, Point2};
use crate::scalar::{cmp_sqrt_sum, Scalar};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShortcutError {
    #[error("triple points must be pairwise distinct")]
    CoincidentPoints,
    #[error("stretch factor must exceed 1")]
    BadStretch,
    #[error("angle out of range: {0}")]
    AngleOutOfRange(&'static str),
    #[error("legs out of order: requires |ps| < |sq|")]
    LegsNotShortFirst,
    #[error("angle at s must be obtuse")]
    AngleNotObtuse,
    #[error("bound too tight: requires -cos(angle) >= 1/(k+1)")]
    BoundTooTight,
    #[error("invalid configuration: {0}")]
    BadConfiguration(&'static str),
}

/// The path p-s-q; s is the middle vertex, edges {p,s} and {s,q} implied.
#[derive(Debug, Clone, PartialEq)]
pub struct Triple {
    pub p: Point2,
    pub s: Point2,
    pub q: Point2,
}

impl Triple {
    pub fn new(p: Point2, s: Point2, q: Point2) -> Result<Self, ShortcutError> {
        if p == s || s == q || p == q {
            return Err(ShortcutError::CoincidentPoints);
        }
        Ok(Triple { p, s, q })
    }
}

/// Which original edge a shortcut removes. The added edge is always {p,q}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removal {
    None,
    Ps,
    Sq,
}

impl Removal {
    pub fn label(self) -> &'static str {
        match self {
            Removal::None => "none",
            Removal::Ps => "ps",
            Removal::Sq => "sq",
        }
    }
}

/// One legal shortcut variant. The `_exact` fields are populated whenever
/// every involved edge length is rational (perfect-square squared length);
/// `efficiency_exact` is additionally `None` when the cost is zero, where
/// the double field carries +inf.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortcutReport {
    pub removes: Removal,
    pub benefit: f64,
    pub cost: f64,
    pub efficiency: f64,
    pub benefit_exact: Option<Scalar>,
    pub cost_exact: Option<Scalar>,
    pub efficiency_exact: Option<Scalar>,
}

impl ShortcutReport {
    fn zero_cost(&self) -> bool {
        match &self.cost_exact {
            Some(c) => c.is_zero(),
            None => self.cost == 0.0,
        }
    }
}

/// Every legal shortcut of a triple, plus the index of the designated best.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortcutAnalysis {
    pub reports: Vec<ShortcutReport>,
    pub best: usize,
}

impl ShortcutAnalysis {
    pub fn best(&self) -> &ShortcutReport {
        &self.reports[self.best]
    }
}

struct Length {
    squared: Scalar,
    approx: f64,
    exact: Option<Scalar>,
}

fn length(squared: Scalar) -> Length {
    let approx = squared.sqrt_f64();
    let exact = squared.sqrt_exact();
    Length { squared, approx, exact }
}

/// Enumerate the legal t-shortcuts of a triple and designate the most
/// efficient one.
///
/// The add-only variant is always legal (the triple becomes complete), so
/// the report list is never empty. Removing {s,q} is legal iff
/// |ps|+|pq| <= t|sq| (the surviving s-p-q path must t-span the removed
/// pair), symmetrically for {p,s}; both tests run in exact arithmetic.
/// Zero-cost variants carry efficiency +inf but never win "best" (the
/// add-only variant has positive cost and is always available); ties
/// resolve toward fewer removed edges, then ps before sq.
pub fn evaluate_shortcuts(
    tri: &Triple,
    t: &Scalar,
) -> Result<ShortcutAnalysis, ShortcutError> {
    if *t <= Scalar::one() {
        return Err(ShortcutError::BadStretch);
    }
    let ps = length(tri.p.squared_distance(&tri.s));
    let sq = length(tri.s.squared_distance(&tri.q));
    let pq = length(tri.p.squared_distance(&tri.q));

    // benefit = |ps|+|sq|-|pq|, exactly zero iff s lies strictly between
    // p and q on their segment.
    let collinear_between = on_open_segment(&tri.s, &tri.p, &tri.q);
    let benefit = if collinear_between {
        0.0
    } else {
        (ps.approx + sq.approx - pq.approx).max(0.0)
    };
    let benefit_exact = if collinear_between {
        Some(Scalar::zero())
    } else {
        match (&ps.exact, &sq.exact, &pq.exact) {
            (Some(a), Some(b), Some(c)) => Some(a + b - c),
            _ => None,
        }
    };

    let t2 = t.square();
    let legal_remove_sq =
        cmp_sqrt_sum(&ps.squared, &pq.squared, &(&t2 * &sq.squared)) != std::cmp::Ordering::Greater;
    let legal_remove_ps =
        cmp_sqrt_sum(&sq.squared, &pq.squared, &(&t2 * &ps.squared)) != std::cmp::Ordering::Greater;

    let make = |removes: Removal| -> ShortcutReport {
        let (cost, cost_exact) = match removes {
            Removal::None => (pq.approx, pq.exact.clone()),
            Removal::Ps => (
                pq.approx - ps.approx,
                match (&pq.exact, &ps.exact) {
                    (Some(c), Some(a)) => Some(c - a),
                    _ => None,
                },
            ),
            Removal::Sq => (
                pq.approx - sq.approx,
                match (&pq.exact, &sq.exact) {
                    (Some(c), Some(b)) => Some(c - b),
                    _ => None,
                },
            ),
        };
        let zero_cost = match &cost_exact {
            Some(c) => c.is_zero(),
            None => cost == 0.0,
        };
        let efficiency = if zero_cost { f64::INFINITY } else { benefit / cost };
        let efficiency_exact = match (&benefit_exact, &cost_exact) {
            (Some(b), Some(c)) if !c.is_zero() => Some(b / c),
            _ => None,
        };
        ShortcutReport {
            removes,
            benefit,
            cost,
            efficiency,
            benefit_exact: benefit_exact.clone(),
            cost_exact,
            efficiency_exact,
        }
    };

    let mut reports = vec![make(Removal::None)];
    if legal_remove_ps {
        reports.push(make(Removal::Ps));
    }
    if legal_remove_sq {
        reports.push(make(Removal::Sq));
    }

    let mut best = 0usize;
    for (idx, candidate) in reports.iter().enumerate().skip(1) {
        if candidate.zero_cost() {
            continue;
        }
        let incumbent = &reports[best];
        let wins = match (&candidate.efficiency_exact, &incumbent.efficiency_exact) {
            (Some(a), Some(b)) => a > b,
            _ => candidate.efficiency > incumbent.efficiency,
        };
        if wins {
            best = idx;
        }
    }
    Ok(ShortcutAnalysis { reports, best })
}

/// Both sides of the isosceles-dominance comparison: the wider-apex triple
/// is never more efficient to shortcut.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoscelesOutcome {
    pub e: f64,
    pub e_prime: f64,
    pub holds: bool,
}

fn unit_isosceles(apex_angle: f64) -> Result<Triple, ShortcutError> {
    let half = apex_angle / 2.0;
    let (sin, cos) = half.sin_cos();
    let p = Point2::from_f64s(-sin, 0.0);
    let q = Point2::from_f64s(sin, 0.0);
    let s = Point2::from_f64s(0.0, cos);
    match (p, s, q) {
        (Some(p), Some(s), Some(q)) => Triple::new(p, s, q),
        _ => Err(ShortcutError::AngleOutOfRange("apex angle must be finite")),
    }
}

/// Compare the best shortcut efficiencies of two unit-leg isosceles triples
/// with apex angles `angle1 < angle2`; `holds` iff the narrower one wins.
///
/// Monotonicity is unconditional for t <= 2 (removals there have
/// nonpositive cost and never win "best"). For t > 2 the removal variant's
/// efficiency blows up as the base length crosses the leg length from
/// above, so the comparison can invert across the pi/3 boundary; samplers
/// should keep both angles on one side of pi/3 in that regime (see
/// [`crate::sweeps`]).
pub fn verify_isosceles(
    angle1: f64,
    angle2: f64,
    t: &Scalar,
) -> Result<IsoscelesOutcome, ShortcutError> {
    if !(angle1 > 0.0 && angle2 > angle1 && angle2 < std::f64::consts::PI) {
        return Err(ShortcutError::AngleOutOfRange(
            "requires 0 < angle1 < angle2 < pi",
        ));
    }
    let e = evaluate_shortcuts(&unit_isosceles(angle1)?, t)?.best().efficiency;
    let e_prime = evaluate_shortcuts(&unit_isosceles(angle2)?, t)?.best().efficiency;
    Ok(IsoscelesOutcome { e, e_prime, holds: e > e_prime })
}

/// Efficiency of the best shortcut in an obtuse triple against the bound k.
#[derive(Debug, Clone, PartialEq)]
pub struct ObtuseOutcome {
    pub efficiency: f64,
    pub k: f64,
    pub holds: bool,
}

/// For a triple with |ps| < |sq| and obtuse angle at s satisfying
/// -cos(angle) >= 1/(k+1), every t-shortcut has efficiency below k.
/// Preconditions are checked exactly (squared-length comparison, sign of
/// the dot product, and the cosine bound via squaring).
pub fn verify_obtuse(
    tri: &Triple,
    k: f64,
    t: &Scalar,
) -> Result<ObtuseOutcome, ShortcutError> {
    if !(k > 0.0) {
        return Err(ShortcutError::BadConfiguration("k must be positive"));
    }
    let ps2 = tri.p.squared_distance(&tri.s);
    let sq2 = tri.s.squared_distance(&tri.q);
    if ps2 >= sq2 {
        return Err(ShortcutError::LegsNotShortFirst);
    }
    // dot = (p-s).(q-s); obtuse iff negative.
    let dot = (&tri.p.x - &tri.s.x) * (&tri.q.x - &tri.s.x)
        + (&tri.p.y - &tri.s.y) * (&tri.q.y - &tri.s.y);
    if !dot.is_negative() {
        return Err(ShortcutError::AngleNotObtuse);
    }
    // -cos >= 1/(k+1)  <=>  (-dot)(k+1) >= |ps||sq|  <=>  squared compare.
    let kr = Scalar::from_f64_exact(k)
        .ok_or(ShortcutError::BadConfiguration("k must be finite"))?;
    let lhs = dot.square() * (kr + Scalar::one()).square();
    if lhs < &ps2 * &sq2 {
        return Err(ShortcutError::BoundTooTight);
    }
    let efficiency = evaluate_shortcuts(tri, t)?.best().efficiency;
    Ok(ObtuseOutcome { efficiency, k, holds: efficiency < k })
}

/// Best efficiencies of the gadget triple Q' and its flat competitor Q in
/// the four-collinear-point configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct CollinearOutcome {
    pub e_prime: f64,
    pub e: f64,
    pub holds: bool,
}

/// Four points r', s', s, q on a line: Q' is the isosceles gadget triple
/// over base r's' (legs d), and Q = {p, s, q} translates the apex-to-base
/// leg so that ps is parallel to p's' while |sq| = d + q_offset exceeds
/// |ps| = d. The gadget shortcut always beats every shortcut of Q: the
/// angle at s is obtuse with -cos = x/(2d), so the obtuse bound applies
/// with k = 2d/x - 1, which is exactly the gadget's add-only efficiency.
pub fn verify_collinear(
    x: f64,
    d: f64,
    q_offset: f64,
    t: &Scalar,
) -> Result<CollinearOutcome, ShortcutError> {
    if !(x > 0.0) {
        return Err(ShortcutError::BadConfiguration("x must be positive"));
    }
    if !(d > x / 2.0) {
        return Err(ShortcutError::BadConfiguration("requires d > x/2"));
    }
    if !(q_offset > 0.0) {
        return Err(ShortcutError::BadConfiguration("q_offset must be positive"));
    }
    let h = (d * d - x * x / 4.0).sqrt();
    let pt = |px: f64, py: f64| {
        Point2::from_f64s(px, py)
            .ok_or(ShortcutError::BadConfiguration("coordinates must be finite"))
    };
    // Gadget triple Q': r'=(0,0), apex p'=(x/2,h), s'=(x,0).
    let gadget = Triple::new(pt(0.0, 0.0)?, pt(x / 2.0, h)?, pt(x, 0.0)?)?;
    // Flat triple Q: s=(2x,0), p = s + (p'-s'), q past s by d + q_offset.
    let flat = Triple::new(
        pt(2.0 * x - x / 2.0, h)?,
        pt(2.0 * x, 0.0)?,
        pt(2.0 * x + d + q_offset, 0.0)?,
    )?;
    let e_prime = evaluate_shortcuts(&gadget, t)?.best().efficiency;
    let e = evaluate_shortcuts(&flat, t)?.best().efficiency;
    Ok(CollinearOutcome { e_prime, e, holds: e_prime > e })
}

/// Stretch comparison between the full isosceles path p-s-q and a path
/// truncated at q' on sq, plus the trigonometric closed form that proves
/// it.
#[derive(Debug, Clone, PartialEq)]
pub struct StretchOutcome {
    /// (|ps|+|sq|)/|pq| for the isosceles endpoint q
    pub lhs: f64,
    /// (|ps|+|sq'|)/|pq'| for the truncated path
    pub rhs: f64,
    /// 2cos(gamma/2) - sin(beta) - sin(beta - gamma); nonnegative
    pub closed_form: f64,
    /// q' lies on segment sq and |pq'| <= |pq|
    pub in_hypothesis: bool,
    pub holds: bool,
}

/// Truncating the isosceles path p-s-q at a point q' on sq with
/// |pq'| <= |pq| never increases the stretch of the far pair.
///
/// gamma is the apex angle at s; beta the angle the segment q'p makes with
/// the ray q' -> q, so beta = pi/2 + gamma/2 recovers q' = q. The
/// hypothesis confines beta to [max(gamma, pi/2 - gamma/2), pi/2 + gamma/2];
/// outside it the comparison is still evaluated and reported, with
/// `in_hypothesis` false. The closed form is nonnegative for every valid
/// angle pair since sin(beta) + sin(beta - gamma) =
/// 2 sin(beta - gamma/2) cos(gamma/2) <= 2 cos(gamma/2).
pub fn verify_triangle_stretch(
    gamma: f64,
    beta: f64,
) -> Result<StretchOutcome, ShortcutError> {
    let pi = std::f64::consts::PI;
    if !(gamma > 0.0 && gamma < pi && beta > 0.0 && beta < pi) {
        return Err(ShortcutError::AngleOutOfRange(
            "requires 0 < gamma, beta < pi",
        ));
    }
    if beta <= gamma {
        return Err(ShortcutError::BadConfiguration(
            "beta must exceed gamma for the triangle to close",
        ));
    }
    // Unit legs: |ps| = |sq| = 1. Law of sines in triangle p-s-q' gives
    // |sq'| and |pq'| from the two angles.
    let sq_prime = (beta - gamma).sin() / beta.sin();
    let pq_prime = gamma.sin() / beta.sin();
    let pq = 2.0 * (gamma / 2.0).sin();
    let lhs = 2.0 / pq;
    let rhs = (1.0 + sq_prime) / pq_prime;
    let closed_form = 2.0 * (gamma / 2.0).cos() - beta.sin() - (beta - gamma).sin();
    let in_hypothesis =
        sq_prime <= 1.0 + 1e-12 && pq_prime <= pq * (1.0 + 1e-12);
    let holds = lhs >= rhs * (1.0 - 1e-12);
    Ok(StretchOutcome { lhs, rhs, closed_form, in_hypothesis, holds })
}
