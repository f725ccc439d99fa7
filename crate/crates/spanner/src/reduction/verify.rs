use std::collections::BTreeSet;

use super::{scalar_u64, HardnessInstance, Regime, ReductionError};
use crate::graph::GeometricGraph;
use crate::metrics;
use crate::point::Point2;
use crate::predicates;
use crate::scalar::Scalar;
use crate::shortcut::Triple;

/// The minimum connected graph over the instance points: the Hamiltonian
/// path from p to q along construction order.
pub fn backbone_path(inst: &HardnessInstance) -> GeometricGraph {
    let m = inst.points.len();
    GeometricGraph::from_edges(inst.points.clone(), (0..m - 1).map(|i| (i, i + 1)))
        .expect("consecutive indices are valid edges")
}

/// Backbone plus the base edge of every selected gadget. From t = 11/5 on,
/// the wide regime also removes the side into the right base endpoint of
/// each selected gadget (the removal the budget prices at x/6); below that
/// threshold, and throughout the narrow regime, no removal is legal.
pub fn apply_gadget_shortcuts(
    inst: &HardnessInstance,
    subset: &[usize],
) -> Result<GeometricGraph, ReductionError> {
    let mut g = backbone_path(inst);
    let remove_side =
        inst.regime == Regime::LargeT && inst.t >= Scalar::from_ratio(11, 5);
    let chosen: BTreeSet<usize> = subset.iter().copied().collect();
    for &i in &chosen {
        let meta = *inst
            .gadgets
            .get(i)
            .ok_or(ReductionError::GadgetIndexOutOfRange(i))?;
        g.add_edge(meta.base_left, meta.base_right)?;
        if remove_side {
            let removed = g.remove_edge(meta.apex, meta.base_right);
            debug_assert!(removed, "backbone carries both gadget sides");
        }
    }
    Ok(g)
}

/// The budget quantities of an instance, all exact rationals (ideal,
/// pre-rounding values in the narrow regime).
///
/// required_shortening / remaining_weight always equals gadget_efficiency:
/// the whole budget can buy shortening only at the gadget rate, which is
/// what ties spanner weight to the subset sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub backbone_weight: Scalar,
    pub spanner_bound: Scalar,
    pub required_shortening: Scalar,
    pub remaining_weight: Scalar,
    pub gadget_efficiency: Scalar,
}

pub fn budget_report(inst: &HardnessInstance) -> BudgetReport {
    let n = inst.n() as i64;
    let r = inst.r();
    let t = &inst.t;
    let n_plus_2 = Scalar::from_int(n + 2);
    let (backbone, bound, efficiency) = match inst.regime {
        Regime::LargeT => {
            let backbone = &r * &(&(t * &n_plus_2) + &Scalar::from_ratio(1, 3));
            let bound = t * &(&r * &n_plus_2);
            let efficiency = if *t >= Scalar::from_ratio(11, 5) {
                Scalar::from_int(4)
            } else {
                Scalar::from_ratio(2, 3)
            };
            (backbone, bound, efficiency)
        }
        Regime::SmallT => {
            let s_factor =
                &Scalar::from_ratio(2 * n + 3, 2) * &(t * &Scalar::from_ratio(3, 2));
            let backbone =
                &r * &(&(&Scalar::from_int(n + 1) + t) + &s_factor);
            let half_t = t / &Scalar::from_int(2);
            let bound =
                &r * &(&(&Scalar::from_ratio(2 * n + 3, 2) + &half_t) + &s_factor);
            (backbone, bound, t - &Scalar::one())
        }
    };
    BudgetReport {
        required_shortening: &backbone - &bound,
        remaining_weight: &inst.w - &backbone,
        backbone_weight: backbone,
        spanner_bound: bound,
        gadget_efficiency: efficiency,
    }
}

/// Outcome of checking the constructive direction on one instance: build
/// the shortcut graph for a claimed witness subset and measure it.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardReport {
    /// Whether the subset sums to R/2. The remaining checks run either way.
    pub valid_subset: bool,
    pub weight_ok: bool,
    pub dilation_ok: bool,
    pub plane_ok: bool,
    pub achieved_weight: f64,
    pub achieved_dilation: f64,
    pub dilation_witness: (usize, usize),
}

impl ForwardReport {
    pub fn all_ok(&self) -> bool {
        self.valid_subset && self.weight_ok && self.dilation_ok && self.plane_ok
    }
}

/// Measures the gadget-shortcut graph of `subset` against the instance
/// budget: weight <= w (exact when every edge length is rational, f64 with
/// relative `tol` otherwise), dilation <= t(1 + tol) by full pairwise brute
/// force, and planarity.
pub fn verify_forward(
    inst: &HardnessInstance,
    subset: &[usize],
    tol: f64,
) -> Result<ForwardReport, ReductionError> {
    let chosen: BTreeSet<usize> = subset.iter().copied().collect();
    let mut sum: u64 = 0;
    for &i in &chosen {
        let meta = inst
            .gadgets
            .get(i)
            .ok_or(ReductionError::GadgetIndexOutOfRange(i))?;
        sum += meta.value;
    }
    let valid_subset = sum == inst.half();
    let g = apply_gadget_shortcuts(inst, subset)?;
    let weight_ok = match g.exact_weight() {
        Some(exact) => exact <= inst.w,
        None => g.weight() <= inst.w.to_f64() * (1.0 + tol),
    };
    let dilation = metrics::dilation(&g)?;
    let dilation_ok = dilation.dilation <= inst.t.to_f64() * (1.0 + tol);
    let plane_ok = predicates::is_plane_graph(&g)?;
    Ok(ForwardReport {
        valid_subset,
        weight_ok,
        dilation_ok,
        plane_ok,
        achieved_weight: g.weight(),
        achieved_dilation: dilation.dilation,
        dilation_witness: dilation.witness,
    })
}

/// The bare (base_left, apex, base_right) triple of an ideal gadget of the
/// given value, in the regime t selects. Wide: apex height 2x/3 (3-4-5
/// shape, always exact). Narrow: (x/2)sqrt(t^2 - 1), exact whenever that
/// root is rational, otherwise the nearest double.
pub fn gadget_triple(value: u64, t: &Scalar) -> Result<Triple, ReductionError> {
    if value == 0 {
        return Err(ReductionError::ZeroValue(0));
    }
    if *t <= Scalar::one() {
        return Err(ReductionError::StretchNotAboveOne);
    }
    let x = scalar_u64(value);
    let two = Scalar::from_int(2);
    let half = &x / &two;
    let apex_y = if *t >= two {
        &x * &Scalar::from_ratio(2, 3)
    } else {
        let h_sq = &half.square() * &(&t.square() - &Scalar::one());
        match h_sq.sqrt_exact() {
            Some(h) => h,
            None => Scalar::from_f64_exact(h_sq.sqrt_f64())
                .expect("positive square root is finite"),
        }
    };
    Ok(Triple::new(
        Point2::new(Scalar::zero(), Scalar::zero()),
        Point2::new(half, apex_y),
        Point2::new(x, Scalar::zero()),
    )?)
}
