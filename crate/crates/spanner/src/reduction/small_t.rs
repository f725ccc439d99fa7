use super::{
    push_top_edge, scalar_u64, Endpoints, HardnessInstance, PartitionInstance, Regime,
    ReductionError,
};
use crate::point::Point2;
use crate::scalar::Scalar;

/// Extra decimal digits the rounding search may add on top of the request
/// before giving up. Feasibility only needs 10^-digits to undercut the
/// per-step wiggle room, so this bound is never hit for 1 < t < 2.
const MAX_ESCALATION: u32 = 60;

/// Narrow-regime builder (1 < t < 2): an isosceles trapezoid.
///
/// The horizontal component is the wide regime's, except gadget sides are
/// (t/2)x (apex angle 2 arcsin(1/t)), putting apexes at the usually
/// irrational height (x/2)sqrt(t^2 - 1). Both sides lean outward from
/// vertical by alpha with sin(alpha) = 2/(3t^2) + 1/(3t) (exact rational),
/// have length L = (R/2)(n + 3/2)(3t/2), and carry K = ceil((n+3/2)(3t/2))
/// samples. The budget w = R(n + t + 3/2 + (n+3/2)(3t/2)) leaves slack R/2
/// over the backbone, exactly the cost of bases summing to R/2 - so the
/// published coordinates must never exceed their exact counterparts.
///
/// Rounding, all to `digits` decimal places (requested precision defaults
/// to n; escalated by 2 until the certificate below holds):
///   - apex heights round down, which can only shorten gadget sides;
///   - side samples lie at the integer multiples of one step vector
///     (dx, -dy): dx = the exact step's x-extent (L/K) sin(alpha) rounded
///     up, so the lean never decreases, and dy = the largest decimal with
///     dx^2 + dy^2 <= (L/K)^2, so K steps never outgrow L and no backbone
///     gap exceeds R/2. Both inequalities are certified in exact rational
///     arithmetic. Collinear samples keep each side a straight segment, so
///     the "spacing R/2, bottom point possibly closer" ideal is traded for
///     uniform spacing L/K <= R/2; the trade preserves the two properties
///     the budget needs (angles not decreased, lengths not increased).
pub fn build_small_t(
    src: &PartitionInstance,
    t: &Scalar,
    precision_digits: Option<u32>,
) -> Result<HardnessInstance, ReductionError> {
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    if !(*t > one && *t < two) {
        return Err(ReductionError::StretchOutsideNarrow);
    }
    let n = src.n();
    let r = scalar_u64(src.sum());
    let half_r = &r / &two;
    let three = Scalar::from_int(3);

    // sin(alpha) = 2/(3t^2) + 1/(3t), in (0, 1) throughout the regime.
    let sin_alpha =
        &(&two / &(&three * &t.square())) + &(&one / &(&three * t));
    debug_assert!(sin_alpha.is_positive() && sin_alpha < one);

    let s_factor = &Scalar::from_ratio(2 * n as i64 + 3, 2) * &(t * &Scalar::from_ratio(3, 2));
    let k = s_factor.ceil_usize();
    let side_len = &half_r * &s_factor;
    let step_len = &side_len / &Scalar::from_int(k as i64);
    let step_x_exact = &step_len * &sin_alpha;
    let step_sq_cap = step_len.square();

    let requested = precision_digits.unwrap_or(n as u32).max(1);
    let mut rounded = None;
    let mut digits = requested;
    while digits <= requested + MAX_ESCALATION {
        if let Some(found) = try_round(src, t, &step_x_exact, &step_sq_cap, digits) {
            rounded = Some(found);
            break;
        }
        digits += 2;
    }
    let (dx, dy) = match rounded {
        Some(found) => found,
        None => return Err(ReductionError::PrecisionOverflow(requested + MAX_ESCALATION)),
    };
    assert!(dx >= step_x_exact, "lean certificate");
    assert!(
        &dx.square() + &dy.square() <= step_sq_cap,
        "length certificate"
    );

    let heights: Vec<Scalar> = {
        let t_sq_m1 = &t.square() - &one;
        src.values()
            .iter()
            .map(|&v| {
                let h_sq = &(&scalar_u64(v) / &two).square() * &t_sq_m1;
                h_sq.sqrt_round_down_decimals(digits)
            })
            .collect()
    };
    // try_round already certified positivity at these digits.
    debug_assert!(heights.iter().all(Scalar::is_positive));

    let mut points = Vec::with_capacity(4 * n + 3 + 2 * k);
    for step in (1..=k).rev() {
        let s = Scalar::from_int(step as i64);
        points.push(Point2::new(-(&dx * &s), -(&dy * &s)));
    }
    let gadgets = push_top_edge(&mut points, &r, src.values(), &heights);
    let width = &r * &Scalar::from_int(n as i64 + 2);
    debug_assert_eq!(points.last().unwrap().x, width);
    for step in 1..=k {
        let s = Scalar::from_int(step as i64);
        points.push(Point2::new(&width + &(&dx * &s), -(&dy * &s)));
    }
    debug_assert_eq!(points.len(), 4 * n + 3 + 2 * k);

    let w = &r * &(&(&Scalar::from_int(n as i64) + t) + &(&Scalar::from_ratio(3, 2) + &s_factor));

    Ok(HardnessInstance {
        regime: Regime::SmallT,
        t: t.clone(),
        w,
        endpoints: Endpoints {
            p: 0,
            q: points.len() - 1,
            p_prime: Some(k),
            q_prime: Some(k + 4 * n + 2),
        },
        points,
        gadgets,
        rounding_digits: Some(digits),
    })
}

/// One attempt at `digits` places. Returns the certified step vector, or
/// None when the grid is too coarse (dx alone overshoots the step length,
/// dy or an apex height underflows to zero).
fn try_round(
    src: &PartitionInstance,
    t: &Scalar,
    step_x_exact: &Scalar,
    step_sq_cap: &Scalar,
    digits: u32,
) -> Option<(Scalar, Scalar)> {
    let dx = step_x_exact.round_up_decimals(digits);
    let rem = step_sq_cap - &dx.square();
    if !rem.is_positive() {
        return None;
    }
    let dy = rem.sqrt_round_down_decimals(digits);
    if !dy.is_positive() {
        return None;
    }
    let two = Scalar::from_int(2);
    let t_sq_m1 = &t.square() - &Scalar::one();
    for &v in src.values() {
        let h_sq = &(&scalar_u64(v) / &two).square() * &t_sq_m1;
        if !h_sq.sqrt_round_down_decimals(digits).is_positive() {
            return None;
        }
    }
    Some((dx, dy))
}
