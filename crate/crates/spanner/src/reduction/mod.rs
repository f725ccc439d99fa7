//! Compiles subset-sum inputs into spanner decision instances.
//!
//! Both builders lay out the same silhouette: a horizontal component on the
//! x-axis carrying one isosceles triangle gadget per input value, flanked by
//! two long sampled sides that end in the far-apart pair (p, q). The budget
//! w leaves exactly enough slack above the backbone weight that the p-q path
//! can be shortened to t|pq| iff some subset of gadget bases sums to half
//! the input total. Wide regime (t >= 2): a rectangle outline with 3-4-5
//! gadgets. Narrow regime (1 < t < 2): an isosceles trapezoid whose sides
//! lean outward by alpha with sin(alpha) = 2/(3t^2) + 1/(3t).

mod large_t;
mod partition;
mod small_t;
mod verify;

pub use large_t::build_large_t;
pub use partition::{solve_partition, PartitionInstance};
pub use small_t::build_small_t;
pub use verify::{
    apply_gadget_shortcuts, backbone_path, budget_report, gadget_triple, verify_forward,
    BudgetReport, ForwardReport,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::graph::GraphError;
use crate::io::{self, WireError};
use crate::metrics::MetricError;
use crate::point::Point2;
use crate::predicates::PredicateError;
use crate::scalar::Scalar;
use crate::shortcut::{ShortcutError, Triple};

#[derive(Debug, thiserror::Error)]
pub enum ReductionError {
    #[error("value list must be nonempty")]
    EmptyInput,
    #[error("values[{0}] must be positive")]
    ZeroValue(usize),
    #[error("values must have an even sum, got {0}")]
    OddSum(u64),
    #[error("value sum overflows")]
    SumOverflow,
    #[error("wide regime needs t >= 2")]
    StretchTooSmallForWide,
    #[error("narrow regime needs 1 < t < 2")]
    StretchOutsideNarrow,
    #[error("gadget stretch must exceed 1")]
    StretchNotAboveOne,
    #[error("gadget index {0} out of range")]
    GadgetIndexOutOfRange(usize),
    #[error("no certified rounding within {0} decimal digits")]
    PrecisionOverflow(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Shortcut(#[from] ShortcutError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    LargeT,
    SmallT,
}

/// One triangle gadget: its input value and the point indices of its base
/// endpoints and apex. The apex is exactly equidistant from both base
/// endpoints (it sits on the perpendicular bisector even after rounding).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMeta {
    pub value: u64,
    pub base_left: usize,
    pub apex: usize,
    pub base_right: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoints {
    pub p: usize,
    pub q: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_prime: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_prime: Option<usize>,
}

/// A compiled decision instance: decide whether the points admit a
/// t-spanner of weight at most w.
///
/// Points are stored in backbone order: p first, up the left side, across
/// the horizontal component with a detour through every gadget apex, down
/// the right side to q last. `backbone_path` relies on this.
#[derive(Debug, Clone, PartialEq)]
pub struct HardnessInstance {
    pub regime: Regime,
    pub t: Scalar,
    pub w: Scalar,
    pub points: Vec<Point2>,
    pub gadgets: Vec<GadgetMeta>,
    pub endpoints: Endpoints,
    /// Decimal digits the narrow-regime rounding actually used (it may
    /// exceed the requested precision, see `build_small_t`); None in the
    /// wide regime, whose coordinates are exact.
    pub rounding_digits: Option<u32>,
}

impl HardnessInstance {
    pub fn n(&self) -> usize {
        self.gadgets.len()
    }

    /// Sum of the gadget values (the R of the source instance).
    pub fn r_value(&self) -> u64 {
        self.gadgets.iter().map(|g| g.value).sum()
    }

    pub fn r(&self) -> Scalar {
        scalar_u64(self.r_value())
    }

    pub fn half(&self) -> u64 {
        self.r_value() / 2
    }

    pub fn gadget_values(&self) -> Vec<u64> {
        self.gadgets.iter().map(|g| g.value).collect()
    }

    /// Number of sample points on each side, from |P| = 4n + 3 + 2K.
    pub fn side_sample_count(&self) -> usize {
        (self.points.len() - 4 * self.n() - 3) / 2
    }

    /// The (base_left, apex, base_right) triple of gadget i as built, i.e.
    /// with the rounded apex in the narrow regime.
    pub fn gadget_triple(&self, i: usize) -> Result<Triple, ReductionError> {
        let meta = self
            .gadgets
            .get(i)
            .ok_or(ReductionError::GadgetIndexOutOfRange(i))?;
        Ok(Triple::new(
            self.points[meta.base_left].clone(),
            self.points[meta.apex].clone(),
            self.points[meta.base_right].clone(),
        )?)
    }

    pub fn to_json(&self) -> String {
        let doc = InstanceDoc {
            regime: self.regime,
            t: io::scalar_to_string(&self.t),
            w: io::scalar_to_string(&self.w),
            points: io::points_to_doc(&self.points),
            gadgets: self.gadgets.clone(),
            endpoints: self.endpoints,
            rounding_digits: self.rounding_digits,
        };
        serde_json::to_string_pretty(&doc).expect("instance serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, WireError> {
        let doc: InstanceDoc = serde_json::from_str(text)?;
        let t = doc
            .t
            .parse::<Scalar>()
            .map_err(|source| WireError::BadScalar { field: "t", source })?;
        let w = doc
            .w
            .parse::<Scalar>()
            .map_err(|source| WireError::BadScalar { field: "w", source })?;
        let points = io::points_from_doc(&doc.points)?;
        let len = points.len();
        let index_ok = |i: usize| i < len;
        for (gi, g) in doc.gadgets.iter().enumerate() {
            if !(index_ok(g.base_left) && index_ok(g.apex) && index_ok(g.base_right)) {
                return Err(WireError::Invalid(format!(
                    "gadgets[{gi}] references a point index out of range"
                )));
            }
        }
        let eps = [
            Some(doc.endpoints.p),
            Some(doc.endpoints.q),
            doc.endpoints.p_prime,
            doc.endpoints.q_prime,
        ];
        if eps.iter().flatten().any(|&i| !index_ok(i)) {
            return Err(WireError::Invalid(
                "endpoints reference a point index out of range".into(),
            ));
        }
        Ok(HardnessInstance {
            regime: doc.regime,
            t,
            w,
            points,
            gadgets: doc.gadgets,
            endpoints: doc.endpoints,
            rounding_digits: doc.rounding_digits,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    regime: Regime,
    t: String,
    w: String,
    points: Vec<[String; 2]>,
    gadgets: Vec<GadgetMeta>,
    endpoints: Endpoints,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rounding_digits: Option<u32>,
}

pub(crate) fn scalar_u64(v: u64) -> Scalar {
    Scalar::from_big(BigRational::from(BigInt::from(v)))
}

/// Pushes the horizontal component, corners included, starting at the
/// origin: n+1 length-R segments halved by middle points, interleaved with
/// the n gadget bases; apex i sits at heights[i] above base midpoint i.
/// Returns the gadget index records.
pub(crate) fn push_top_edge(
    points: &mut Vec<Point2>,
    r: &Scalar,
    values: &[u64],
    heights: &[Scalar],
) -> Vec<GadgetMeta> {
    let two = Scalar::from_int(2);
    let half_r = r / &two;
    let mut gadgets = Vec::with_capacity(values.len());
    let mut x = Scalar::zero();
    points.push(Point2::new(Scalar::zero(), Scalar::zero()));
    for (i, &v) in values.iter().enumerate() {
        points.push(Point2::new(&x + &half_r, Scalar::zero()));
        x = &x + r;
        let value = scalar_u64(v);
        let base_left = points.len();
        points.push(Point2::new(x.clone(), Scalar::zero()));
        points.push(Point2::new(&x + &(&value / &two), heights[i].clone()));
        x = &x + &value;
        points.push(Point2::new(x.clone(), Scalar::zero()));
        gadgets.push(GadgetMeta {
            value: v,
            base_left,
            apex: base_left + 1,
            base_right: base_left + 2,
        });
    }
    points.push(Point2::new(&x + &half_r, Scalar::zero()));
    x = &x + r;
    points.push(Point2::new(x, Scalar::zero()));
    gadgets
}
