//! Seeded random sweeps over the admissible domains of the inequality
//! verifiers. Each sweep draws configurations where the corresponding
//! claim is guaranteed, runs the verifier, and tallies failures; any
//! failure is a genuine counterexample (or a bug), never sampling noise.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::point::Point2;
use crate::scalar::Scalar;
use crate::shortcut::{
    verify_collinear, verify_isosceles, verify_obtuse, verify_triangle_stretch, Triple,
};

/// Outcome of one sweep: total samples, failure count, and up to eight
/// formatted failing configurations for diagnosis.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub samples: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl SweepSummary {
    fn new(samples: usize) -> Self {
        SweepSummary { samples, failures: 0, examples: Vec::new() }
    }

    fn record_failure(&mut self, description: String) {
        self.failures += 1;
        if self.examples.len() < 8 {
            self.examples.push(description);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Isosceles dominance: the narrower apex angle always shortcuts at least
/// as efficiently. Unrestricted for t <= 2; for t > 2 both angles are kept
/// strictly on one side of pi/3, where the comparison is monotone (the
/// removal variant's efficiency diverges as the base length crosses the
/// legs, so mixed-side pairs genuinely invert).
pub fn sweep_isosceles(t: &Scalar, samples: usize, seed: u64) -> SweepSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::new(samples);
    let wide_regime = t.to_f64() > 2.0;
    let boundary = PI / 3.0;
    for _ in 0..samples {
        let (lo, hi) = if !wide_regime {
            (0.01, PI - 0.01)
        } else if rng.gen_bool(0.5) {
            (0.01, boundary - 0.005)
        } else {
            (boundary + 0.005, PI - 0.01)
        };
        let (a1, a2) = loop {
            let x: f64 = rng.gen_range(lo..hi);
            let y: f64 = rng.gen_range(lo..hi);
            // Keep a sliver around pi/3 clear: exactly on the boundary the
            // zero-cost removal variant is float-fragile and carries no
            // information about monotonicity.
            if (x - y).abs() > 1e-9
                && (x - boundary).abs() > 1e-9
                && (y - boundary).abs() > 1e-9
            {
                break (x.min(y), x.max(y));
            }
        };
        match verify_isosceles(a1, a2, t) {
            Ok(o) if o.holds => {}
            Ok(o) => summary.record_failure(format!(
                "angles ({a1}, {a2}): e = {} vs e' = {}",
                o.e, o.e_prime
            )),
            Err(e) => summary.record_failure(format!("angles ({a1}, {a2}): {e}")),
        }
    }
    summary
}

/// Obtuse bound: random legs b < a, obtuse angle, and a bound k drawn with
/// a strict admissibility margin.
pub fn sweep_obtuse(t: &Scalar, samples: usize, seed: u64) -> SweepSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::new(samples);
    for _ in 0..samples {
        let b: f64 = rng.gen_range(0.5..3.0);
        let a = b * rng.gen_range(1.05..3.0);
        let theta: f64 = rng.gen_range(PI / 2.0 + 0.02..PI - 0.02);
        let k_min = 1.0 / (-theta.cos()) - 1.0;
        let k = k_min * (1.0 + rng.gen_range(0.001..2.0)) + 1e-6;
        let tri = Triple::new(
            Point2::from_f64s(b, 0.0).unwrap(),
            Point2::from_f64s(0.0, 0.0).unwrap(),
            Point2::from_f64s(a * theta.cos(), a * theta.sin()).unwrap(),
        )
        .expect("distinct by construction");
        match verify_obtuse(&tri, k, t) {
            Ok(o) if o.holds => {}
            Ok(o) => summary.record_failure(format!(
                "b={b} a={a} theta={theta} k={k}: efficiency {}",
                o.efficiency
            )),
            Err(e) => {
                summary.record_failure(format!("b={b} a={a} theta={theta} k={k}: {e}"))
            }
        }
    }
    summary
}

/// Collinear dominance: the gadget's shortcut beats the flat competitor
/// for random base, leg, and offset proportions.
pub fn sweep_collinear(t: &Scalar, samples: usize, seed: u64) -> SweepSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::new(samples);
    for _ in 0..samples {
        let x: f64 = rng.gen_range(0.5..3.0);
        let d = x / 2.0 * (1.0 + rng.gen_range(0.05..4.0));
        let q_offset = d * rng.gen_range(0.02..2.0);
        match verify_collinear(x, d, q_offset, t) {
            Ok(o) if o.holds => {}
            Ok(o) => summary.record_failure(format!(
                "x={x} d={d} q_offset={q_offset}: e' = {} vs e = {}",
                o.e_prime, o.e
            )),
            Err(e) => {
                summary.record_failure(format!("x={x} d={d} q_offset={q_offset}: {e}"))
            }
        }
    }
    summary
}

/// Triangle stretch: beta sampled inside the hypothesis interval
/// [max(gamma, pi/2 - gamma/2), pi/2 + gamma/2], including the q' = q
/// equality endpoint.
pub fn sweep_triangle_stretch(samples: usize, seed: u64) -> SweepSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::new(samples);
    for _ in 0..samples {
        let gamma: f64 = rng.gen_range(0.02..PI - 0.02);
        let lo = gamma.max(PI / 2.0 - gamma / 2.0);
        let hi = PI / 2.0 + gamma / 2.0;
        let beta = lo + (hi - lo) * rng.gen_range(1e-4..=1.0);
        match verify_triangle_stretch(gamma, beta) {
            Ok(o) if o.holds && o.in_hypothesis => {}
            Ok(o) => summary.record_failure(format!(
                "gamma={gamma} beta={beta}: lhs {} rhs {} in_hypothesis {}",
                o.lhs, o.rhs, o.in_hypothesis
            )),
            Err(e) => summary.record_failure(format!("gamma={gamma} beta={beta}: {e}")),
        }
    }
    summary
}

/// A sweep labeled for reporting.
#[derive(Debug, Clone)]
pub struct NamedSweep {
    pub name: &'static str,
    pub summary: SweepSummary,
}

/// Run all four lemma sweeps at one stretch factor with per-sweep derived
/// seeds.
pub fn run_all_sweeps(t: &Scalar, samples: usize, seed: u64) -> Vec<NamedSweep> {
    vec![
        NamedSweep {
            name: "isosceles-dominance",
            summary: sweep_isosceles(t, samples, seed),
        },
        NamedSweep {
            name: "obtuse-bound",
            summary: sweep_obtuse(t, samples, seed.wrapping_add(1)),
        },
        NamedSweep {
            name: "collinear-dominance",
            summary: sweep_collinear(t, samples, seed.wrapping_add(2)),
        },
        NamedSweep {
            name: "triangle-stretch",
            summary: sweep_triangle_stretch(samples, seed.wrapping_add(3)),
        },
    ]
}
