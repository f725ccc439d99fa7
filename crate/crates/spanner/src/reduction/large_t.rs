use super::{
    push_top_edge, scalar_u64, Endpoints, HardnessInstance, PartitionInstance, Regime,
    ReductionError,
};
use crate::point::Point2;
use crate::scalar::Scalar;

/// Wide-regime builder (t >= 2): an axis-parallel rectangle outline.
///
/// The top edge of width R(n+2) carries the gadgets; apexes sit at height
/// 2x/3 above the base midpoints (5x/6 sides over an x base: the 3-4-5
/// shape, so every coordinate is rational). Both sides drop vertically
/// (R/2)(t(n+2) - n - 7/3) and carry K = ceil(t(n+2) - n - 7/3) samples at
/// R/2 spacing, the bottom one pinned to the side's exact endpoint. Budget:
/// w = R(t(n+2) + 5/6) below t = 11/5 (base additions only), and
/// R(t(n+2) + 5/12) from 11/5 on, where removing one gadget side becomes
/// legal and the marginal cost per base drops to x/6.
pub fn build_large_t(
    src: &PartitionInstance,
    t: &Scalar,
) -> Result<HardnessInstance, ReductionError> {
    if *t < Scalar::from_int(2) {
        return Err(ReductionError::StretchTooSmallForWide);
    }
    let n = src.n();
    let r = scalar_u64(src.sum());
    let two = Scalar::from_int(2);
    let half_r = &r / &two;
    let n_plus_2 = Scalar::from_int(n as i64 + 2);

    let steps = &(t * &n_plus_2) - &(Scalar::from_int(n as i64) + Scalar::from_ratio(7, 3));
    debug_assert!(steps.is_positive());
    let k = steps.ceil_usize();
    let side_len = &half_r * &steps;
    let depth_at = |step: usize| -> Scalar {
        if step == k {
            side_len.clone()
        } else {
            &half_r * &Scalar::from_int(step as i64)
        }
    };

    let mut points = Vec::with_capacity(4 * n + 3 + 2 * k);
    for step in (1..=k).rev() {
        points.push(Point2::new(Scalar::zero(), -depth_at(step)));
    }
    let heights: Vec<Scalar> = src
        .values()
        .iter()
        .map(|&v| &scalar_u64(v) * &Scalar::from_ratio(2, 3))
        .collect();
    let gadgets = push_top_edge(&mut points, &r, src.values(), &heights);
    let width = &r * &n_plus_2;
    debug_assert_eq!(points.last().unwrap().x, width);
    for step in 1..=k {
        points.push(Point2::new(width.clone(), -depth_at(step)));
    }
    debug_assert_eq!(points.len(), 4 * n + 3 + 2 * k);

    let slack = if *t >= Scalar::from_ratio(11, 5) {
        Scalar::from_ratio(5, 12)
    } else {
        Scalar::from_ratio(5, 6)
    };
    let w = &r * &(&(t * &n_plus_2) + &slack);

    Ok(HardnessInstance {
        regime: Regime::LargeT,
        t: t.clone(),
        w,
        endpoints: Endpoints {
            p: 0,
            q: points.len() - 1,
            p_prime: None,
            q_prime: None,
        },
        points,
        gadgets,
        rounding_digits: None,
    })
}
