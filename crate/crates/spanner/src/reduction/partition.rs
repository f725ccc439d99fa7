use num_bigint::BigUint;
use num_traits::One;

use super::ReductionError;

/// Multiset of positive integers with even sum: the source problem the
/// instance builders compile from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    values: Vec<u64>,
    sum: u64,
}

impl PartitionInstance {
    pub fn new(values: Vec<u64>) -> Result<Self, ReductionError> {
        if values.is_empty() {
            return Err(ReductionError::EmptyInput);
        }
        let mut sum: u64 = 0;
        for (i, &v) in values.iter().enumerate() {
            if v == 0 {
                return Err(ReductionError::ZeroValue(i));
            }
            sum = sum.checked_add(v).ok_or(ReductionError::SumOverflow)?;
        }
        if sum % 2 != 0 {
            return Err(ReductionError::OddSum(sum));
        }
        Ok(PartitionInstance { values, sum })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn half(&self) -> u64 {
        self.sum / 2
    }

    /// Whether every value is strictly below half the total. The gadget
    /// layouts stay well formed without it, but the short-edge pruning
    /// argument behind decide-mode cross-checks assumes it, so callers that
    /// care should inspect this flag rather than be refused an instance.
    pub fn size_assumption_ok(&self) -> bool {
        self.values.iter().all(|&v| 2 * v < self.sum)
    }
}

/// Lexicographically smallest index subset summing to half the total, if
/// one exists. Pseudo-polynomial: the sum-reachability table is computed
/// per suffix as a bitset (bit s of row i = some subset of values[i..]
/// sums to s), then a greedy front-to-back scan takes every index that
/// still leaves the remainder completable.
pub fn solve_partition(inst: &PartitionInstance) -> Option<Vec<usize>> {
    let n = inst.n();
    let half = inst.half();
    let mask = (BigUint::one() << (half + 1)) - BigUint::one();
    let mut rows = vec![BigUint::default(); n + 1];
    rows[n] = BigUint::one();
    for i in (0..n).rev() {
        let shifted = (&rows[i + 1] << inst.values[i]) & &mask;
        rows[i] = &rows[i + 1] | &shifted;
    }
    if !rows[0].bit(half) {
        return None;
    }
    let mut rest = half;
    let mut chosen = Vec::new();
    for i in 0..n {
        if rest == 0 {
            break;
        }
        let v = inst.values[i];
        if v <= rest && rows[i + 1].bit(rest - v) {
            chosen.push(i);
            rest -= v;
        }
    }
    debug_assert_eq!(rest, 0);
    Some(chosen)
}
