//! Desk-scale exact optimization: minimum-weight spanners (plane or not),
//! the weight-bounded decision problem, and minimum dilation under a weight
//! budget.
//!
//! Branch and bound assigns candidate edges in nonincreasing length order,
//! exclude branch first, so heavy edges leave the picture early. Pruning is
//! sound only: a connectivity lower bound (included weight plus a minimum
//! spanning forest over the still-undecided edges) against the incumbent,
//! and an optimistic detour check on the pair whose edge was just excluded
//! with every undecided edge assumed present. Any offered solution is
//! verified against all pairs before it can become the incumbent, so the
//! tolerances only ever reject a graph, never admit a bad one.
//!
//! Two reductions keep the candidate set small without losing optima. A
//! length cap (when configured) uses exact squared comparisons. An edge
//! whose open interior contains another input point is dropped: the two
//! half edges cover it at identical total length and identical distances,
//! so some optimum avoids it, and a plane graph could never use it anyway.
//! Optima are therefore canonical over this reduced candidate set, reported
//! as the minimum weight and then the lexicographically smallest edge set.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering as AtomicOrder};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::builders::DisjointSets;
use crate::graph::GeometricGraph;
use crate::metrics;
use crate::point::{on_open_segment, Point2};
use crate::predicates::proper_intersection;
use crate::scalar::Scalar;
use crate::REL_TOL;

/// Relative window inside which two weights count as tied, so that
/// pruning keeps every tied optimum alive for the lexicographic pick.
const TIE_EPS: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("need at least two points")]
    TooFewPoints,
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("stretch factor must exceed 1")]
    StretchNotAboveOne,
    #[error("weight budget must be positive")]
    NonPositiveBudget,
    #[error("invalid solver options: {0}")]
    BadOptions(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverMode {
    BranchAndBound,
    Exhaustive,
}

#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Keep only candidate edges no longer than this (exact comparison).
    pub max_edge_length: Option<Scalar>,
    pub require_plane: bool,
    /// Relative tolerance on dilation and weight comparisons.
    pub tol: f64,
    /// Search nodes (or enumerated subsets) before giving up.
    pub node_budget: u64,
    pub mode: SolverMode,
    /// Worker threads for branch and bound. The reported edge set and
    /// weight do not depend on this; node counts may.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_edge_length: None,
            require_plane: false,
            tol: REL_TOL,
            node_budget: 10_000_000,
            mode: SolverMode::BranchAndBound,
            threads: 1,
        }
    }
}

impl SolverOptions {
    fn validate(&self) -> Result<(), SolverError> {
        if self.node_budget == 0 {
            return Err(SolverError::BadOptions("node budget must be positive"));
        }
        if !(self.tol >= 0.0) {
            return Err(SolverError::BadOptions("tolerance must be nonnegative"));
        }
        if self.threads == 0 {
            return Err(SolverError::BadOptions("thread count must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverStatus {
    Optimal,
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SolverResult {
    pub status: SolverStatus,
    /// Best graph known. Present on Optimal, best effort on BudgetExceeded.
    pub graph: Option<GeometricGraph>,
    pub weight: Option<f64>,
    pub dilation: Option<f64>,
    pub nodes: u64,
}

impl SolverResult {
    pub fn to_json(&self) -> String {
        let edges: Option<Vec<[usize; 2]>> = self
            .graph
            .as_ref()
            .map(|g| g.edges().map(|(u, v)| [u, v]).collect());
        serde_json::to_string_pretty(&serde_json::json!({
            "status": self.status,
            "edges": edges,
            "weight": self.weight.map(|w| w.to_string()),
            "dilation": self.dilation,
            "nodes": self.nodes,
        }))
        .expect("result serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    True,
    False,
    Indeterminate,
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decision::True => "true",
            Decision::False => "false",
            Decision::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DecisionReport {
    pub decision: Decision,
    /// A witness spanner within budget when the answer is true.
    pub witness: Option<GeometricGraph>,
    pub nodes: u64,
}

impl DecisionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "decision": self.decision,
            "witness_weight": self.witness.as_ref().map(|g| g.weight().to_string()),
            "nodes": self.nodes,
        }))
        .expect("report serializes")
    }
}

/// A candidate solution: f64 weight plus its sorted edge list.
#[derive(Debug, Clone)]
struct Incumbent {
    weight: f64,
    edges: Vec<(usize, usize)>,
}

/// Less / Equal / Greater with a relative tie window.
fn cmp_weights(a: f64, b: f64) -> Ordering {
    if a < b * (1.0 - TIE_EPS) {
        Ordering::Less
    } else if a > b * (1.0 + TIE_EPS) {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

fn better(challenger: &Incumbent, holder: &Option<Incumbent>) -> bool {
    match holder {
        None => true,
        Some(h) => match cmp_weights(challenger.weight, h.weight) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => challenger.edges < h.edges,
        },
    }
}

/// Immutable description of one solving task.
struct Problem {
    points: Vec<Point2>,
    n: usize,
    /// Pairwise Euclidean distances, row-major n*n.
    dist: Vec<f64>,
    /// Candidate edges, nonincreasing length, ties by (u, v).
    cand: Vec<(usize, usize)>,
    len: Vec<f64>,
    /// Node -> incident candidate indices.
    adj: Vec<Vec<usize>>,
    /// Plane mode: bitset rows of properly-crossing candidate pairs.
    conflict: Option<Vec<Vec<u64>>>,
    blocks: usize,
    tf: f64,
    tol: f64,
    require_plane: bool,
}

impl Problem {
    fn build(points: &[Point2], tf: f64, opts: &SolverOptions) -> Result<Problem, SolverError> {
        let n = points.len();
        if n < 2 {
            return Err(SolverError::TooFewPoints);
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i].squared_distance(&points[j]).is_zero() {
                    return Err(SolverError::DuplicatePoints(i, j));
                }
            }
        }
        let cap_sq = opts.max_edge_length.as_ref().map(|c| c.square());
        let mut raw: Vec<(Scalar, usize, usize)> = Vec::new();
        'pairs: for i in 0..n {
            for j in i + 1..n {
                let sq = points[i].squared_distance(&points[j]);
                if let Some(cap) = &cap_sq {
                    if sq > *cap {
                        continue;
                    }
                }
                for k in 0..n {
                    if k != i && k != j && on_open_segment(&points[k], &points[i], &points[j]) {
                        continue 'pairs;
                    }
                }
                raw.push((sq, i, j));
            }
        }
        raw.sort_by(|a, b| {
            b.0.partial_cmp(&a.0)
                .expect("rational lengths are ordered")
                .then_with(|| a.1.cmp(&b.1))
                .then_with(|| a.2.cmp(&b.2))
        });
        let cand: Vec<(usize, usize)> = raw.iter().map(|&(_, u, v)| (u, v)).collect();
        let m = cand.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                dist[i * n + j] = points[i].distance(&points[j]);
            }
        }
        let len: Vec<f64> = cand.iter().map(|&(u, v)| dist[u * n + v]).collect();
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in cand.iter().enumerate() {
            adj[u].push(e);
            adj[v].push(e);
        }
        let blocks = m.div_ceil(64).max(1);
        let conflict = if opts.require_plane {
            let mut rows = vec![vec![0u64; blocks]; m];
            for i in 0..m {
                let (a, b) = cand[i];
                for j in i + 1..m {
                    let (c, d) = cand[j];
                    if a == c || a == d || b == c || b == d {
                        continue;
                    }
                    let crossing = proper_intersection(
                        &points[a], &points[b], &points[c], &points[d],
                    )
                    .expect("candidate endpoints are distinct");
                    if crossing {
                        rows[i][j / 64] |= 1 << (j % 64);
                        rows[j][i / 64] |= 1 << (i % 64);
                    }
                }
            }
            Some(rows)
        } else {
            None
        };
        Ok(Problem {
            points: points.to_vec(),
            n,
            dist,
            cand,
            len,
            adj,
            conflict,
            blocks,
            tf,
            tol: opts.tol,
            require_plane: opts.require_plane,
        })
    }

    fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    fn detour_bound(&self, i: usize, j: usize) -> f64 {
        self.tf * self.d(i, j) * (1.0 + self.tol)
    }

    /// Dijkstra over the candidate edges `active` admits, stopping once
    /// every remaining node is farther than `bound`.
    fn dijkstra(
        &self,
        source: usize,
        bound: f64,
        active: &dyn Fn(usize) -> bool,
        out: &mut [f64],
    ) {
        out.fill(f64::INFINITY);
        out[source] = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(HeapItem { d: 0.0, node: source });
        while let Some(HeapItem { d, node }) = heap.pop() {
            if d > out[node] {
                continue;
            }
            if d > bound {
                break;
            }
            for &e in &self.adj[node] {
                if !active(e) {
                    continue;
                }
                let (u, v) = self.cand[e];
                let other = if u == node { v } else { u };
                let nd = d + self.len[e];
                if nd < out[other] {
                    out[other] = nd;
                    heap.push(HeapItem { d: nd, node: other });
                }
            }
        }
    }

    /// Whether `active` edges satisfy every pair's detour bound. On failure
    /// reports the first violated pair found.
    fn spanner_ok(
        &self,
        active: &dyn Fn(usize) -> bool,
        probe_first: Option<(usize, usize)>,
        scratch: &mut [f64],
    ) -> Result<(), (usize, usize)> {
        if let Some((a, b)) = probe_first {
            self.dijkstra(a, self.detour_bound(a, b), active, scratch);
            if scratch[b] > self.detour_bound(a, b) {
                return Err((a, b));
            }
        }
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    worst = worst.max(self.detour_bound(i, j));
                }
            }
        }
        for i in 0..self.n {
            self.dijkstra(i, worst, active, scratch);
            for j in i + 1..self.n {
                if scratch[j] > self.detour_bound(i, j) {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }
}

struct HeapItem {
    d: f64,
    node: usize,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapItem {
    // Reversed so BinaryHeap pops the smallest distance first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .d
            .total_cmp(&self.d)
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// State shared between search workers.
struct Shared {
    best_w_bits: AtomicU64,
    nodes: AtomicU64,
    budget: u64,
    stop: AtomicBool,
    budget_hit: AtomicBool,
    found_yes: AtomicBool,
    yes_witness: Mutex<Option<Incumbent>>,
}

impl Shared {
    fn new(budget: u64, seed_weight: f64) -> Shared {
        Shared {
            best_w_bits: AtomicU64::new(seed_weight.to_bits()),
            nodes: AtomicU64::new(0),
            budget,
            stop: AtomicBool::new(false),
            budget_hit: AtomicBool::new(false),
            found_yes: AtomicBool::new(false),
            yes_witness: Mutex::new(None),
        }
    }

    fn best_w(&self) -> f64 {
        f64::from_bits(self.best_w_bits.load(AtomicOrder::Relaxed))
    }

    // Positive f64 bit patterns order like the values, so min works on bits.
    fn lower_best_w(&self, w: f64) {
        let mut cur = self.best_w_bits.load(AtomicOrder::Relaxed);
        while f64::from_bits(cur) > w {
            match self.best_w_bits.compare_exchange_weak(
                cur,
                w.to_bits(),
                AtomicOrder::Relaxed,
                AtomicOrder::Relaxed,
            ) {
                Ok(_) => return,
                Err(c) => cur = c,
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    Included,
    Excluded,
}

struct Search<'p> {
    prob: &'p Problem,
    shared: &'p Shared,
    state: Vec<EdgeState>,
    included: Vec<usize>,
    included_w: f64,
    included_mask: Vec<u64>,
    /// Decide mode: accept and stop at any solution within this weight.
    early_exit_w: Option<f64>,
    local_best: Option<Incumbent>,
    dist_buf: Vec<f64>,
    dsu: DisjointSets,
    last_bad_pair: Option<(usize, usize)>,
}

impl<'p> Search<'p> {
    fn new(prob: &'p Problem, shared: &'p Shared, early_exit_w: Option<f64>) -> Search<'p> {
        Search {
            prob,
            shared,
            state: vec![EdgeState::Undecided; prob.cand.len()],
            included: Vec::new(),
            included_w: 0.0,
            included_mask: vec![0u64; prob.blocks],
            early_exit_w,
            local_best: None,
            dist_buf: vec![0.0; prob.n],
            dsu: DisjointSets::new(prob.n),
            last_bad_pair: None,
        }
    }

    fn prune_bar(&self) -> f64 {
        match self.early_exit_w {
            Some(w) => w * (1.0 + self.prob.tol),
            None => self.shared.best_w() * (1.0 + TIE_EPS),
        }
    }

    /// Included weight plus the cheapest undecided forest joining the
    /// included components. None when no completion can even connect.
    fn lower_bound(&mut self, depth: usize) -> Option<(f64, bool)> {
        self.dsu.reset();
        let mut comps = self.prob.n;
        for &e in &self.included {
            let (u, v) = self.prob.cand[e];
            if self.dsu.union(u, v) {
                comps -= 1;
            }
        }
        let connected = comps == 1;
        let mut lb = self.included_w;
        if !connected {
            // Undecided candidates are exactly depth.., shortest last.
            for e in (depth..self.prob.cand.len()).rev() {
                let (u, v) = self.prob.cand[e];
                if self.dsu.union(u, v) {
                    lb += self.prob.len[e];
                    comps -= 1;
                    if comps == 1 {
                        break;
                    }
                }
            }
            if comps > 1 {
                return None;
            }
        }
        Some((lb, connected))
    }

    fn offer(&mut self) {
        let mut edges: Vec<(usize, usize)> =
            self.included.iter().map(|&e| self.prob.cand[e]).collect();
        edges.sort_unstable();
        // Re-sum in fixed candidate order so equal sets get equal floats.
        let weight: f64 = self.included.iter().map(|&e| self.prob.len[e]).sum();
        let solution = Incumbent { weight, edges };
        if let Some(target) = self.early_exit_w {
            if weight <= target * (1.0 + self.prob.tol) {
                let mut slot = self.shared.yes_witness.lock().expect("witness lock");
                if better(&solution, &slot) {
                    *slot = Some(solution);
                }
                self.shared.found_yes.store(true, AtomicOrder::Relaxed);
                self.shared.stop.store(true, AtomicOrder::Relaxed);
            }
            return;
        }
        self.shared.lower_best_w(weight);
        if better(&solution, &self.local_best) {
            self.local_best = Some(solution);
        }
    }

    /// Detour check for the just-excluded pair against the optimistic graph
    /// that keeps every undecided edge.
    fn optimistic_pair_ok(&mut self, e: usize) -> bool {
        let (u, v) = self.prob.cand[e];
        let bound = self.prob.detour_bound(u, v);
        let state = &self.state;
        let prob = self.prob;
        prob.dijkstra(
            u,
            bound,
            &|idx| state[idx] != EdgeState::Excluded,
            &mut self.dist_buf,
        );
        self.dist_buf[v] <= bound
    }

    fn included_spanner_ok(&mut self) -> bool {
        let state = &self.state;
        let active = |idx: usize| state[idx] == EdgeState::Included;
        let prob = self.prob;
        match prob.spanner_ok(&active, self.last_bad_pair, &mut self.dist_buf) {
            Ok(()) => true,
            Err(pair) => {
                self.last_bad_pair = Some(pair);
                false
            }
        }
    }

    fn search(&mut self, depth: usize) {
        if self.shared.stop.load(AtomicOrder::Relaxed) {
            return;
        }
        if self.shared.nodes.fetch_add(1, AtomicOrder::Relaxed) >= self.shared.budget {
            self.shared.budget_hit.store(true, AtomicOrder::Relaxed);
            self.shared.stop.store(true, AtomicOrder::Relaxed);
            return;
        }
        let (lb, connected) = match self.lower_bound(depth) {
            Some(x) => x,
            None => return,
        };
        if lb > self.prune_bar() {
            return;
        }
        if connected && self.included_spanner_ok() {
            // Every completion below only adds weight on top of a feasible
            // graph, so this node's included set beats its whole subtree.
            self.offer();
            return;
        }
        if depth == self.prob.cand.len() {
            return;
        }

        self.state[depth] = EdgeState::Excluded;
        if self.optimistic_pair_ok(depth) {
            self.search(depth + 1);
        }
        self.state[depth] = EdgeState::Undecided;
        if self.shared.stop.load(AtomicOrder::Relaxed) {
            return;
        }

        if self.prob.require_plane && self.conflicts_included(depth) {
            return;
        }
        self.push_include(depth);
        self.search(depth + 1);
        self.pop_include(depth);
    }

    fn conflicts_included(&self, e: usize) -> bool {
        let rows = self.prob.conflict.as_ref().expect("plane mode has conflicts");
        rows[e]
            .iter()
            .zip(&self.included_mask)
            .any(|(r, m)| r & m != 0)
    }

    fn push_include(&mut self, e: usize) {
        self.state[e] = EdgeState::Included;
        self.included.push(e);
        self.included_w += self.prob.len[e];
        self.included_mask[e / 64] |= 1 << (e % 64);
    }

    fn pop_include(&mut self, e: usize) {
        self.state[e] = EdgeState::Undecided;
        self.included.pop();
        self.included_w -= self.prob.len[e];
        self.included_mask[e / 64] &= !(1 << (e % 64));
    }

    /// Replays a fixed include/exclude assignment of the first k candidates
    /// (bit set = include). False when the prefix is already dead.
    fn apply_prefix(&mut self, mask: u64, k: usize) -> bool {
        for e in 0..k {
            if mask & (1 << e) != 0 {
                if self.prob.require_plane && self.conflicts_included(e) {
                    return false;
                }
                self.push_include(e);
            } else {
                self.state[e] = EdgeState::Excluded;
            }
        }
        true
    }
}

/// Path-greedy seed restricted to candidate edges; None when a needed pair
/// is not a candidate (length cap) or the result violates plane mode.
fn seed_incumbent(prob: &Problem) -> Option<Incumbent> {
    let n = prob.n;
    let m = prob.cand.len();
    let mut index_of = vec![usize::MAX; n * n];
    for (e, &(u, v)) in prob.cand.iter().enumerate() {
        index_of[u * n + v] = e;
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.sort_by(|&(a, b), &(c, d)| {
        prob.d(a, b)
            .total_cmp(&prob.d(c, d))
            .then_with(|| (a, b).cmp(&(c, d)))
    });
    let mut chosen = vec![false; m];
    let mut buf = vec![0.0; n];
    for (i, j) in pairs {
        let bound = prob.detour_bound(i, j);
        prob.dijkstra(i, bound, &|e| chosen[e], &mut buf);
        if buf[j] <= bound {
            continue;
        }
        let e = index_of[i * n + j];
        if e == usize::MAX {
            return None;
        }
        chosen[e] = true;
    }
    if let Some(rows) = &prob.conflict {
        for e in 0..m {
            if chosen[e] {
                for f in e + 1..m {
                    if chosen[f] && rows[e][f / 64] & (1 << (f % 64)) != 0 {
                        return None;
                    }
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut weight = 0.0;
    for e in 0..m {
        if chosen[e] {
            edges.push(prob.cand[e]);
            weight += prob.len[e];
        }
    }
    edges.sort_unstable();
    Some(Incumbent { weight, edges })
}

/// The full candidate graph as a fallback incumbent, when feasible.
fn full_candidate_incumbent(prob: &Problem) -> Option<Incumbent> {
    if let Some(rows) = &prob.conflict {
        for row in rows {
            if row.iter().any(|&b| b != 0) {
                return None;
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = prob.cand.clone();
    edges.sort_unstable();
    Some(Incumbent { weight: prob.len.iter().sum(), edges })
}

struct RunOutcome {
    best: Option<Incumbent>,
    nodes: u64,
    budget_hit: bool,
    found_yes: bool,
    yes_witness: Option<Incumbent>,
}

fn run_branch_and_bound(
    prob: &Problem,
    opts: &SolverOptions,
    seed: Option<Incumbent>,
    early_exit_w: Option<f64>,
) -> RunOutcome {
    let seed_w = seed.as_ref().map_or(f64::INFINITY, |s| s.weight);
    let shared = Shared::new(opts.node_budget, seed_w);
    let m = prob.cand.len();
    let threads = opts.threads.min(1.max(m));
    let mut locals: Vec<Option<Incumbent>> = Vec::new();
    if threads <= 1 || m < 2 {
        let mut search = Search::new(prob, &shared, early_exit_w);
        search.search(0);
        locals.push(search.local_best.take());
    } else {
        let mut k = 0usize;
        while (1usize << k) < threads * 4 && k < m && k < 10 {
            k += 1;
        }
        let next = AtomicUsize::new(0);
        let total = 1usize << k;
        let results = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for _ in 0..threads {
                let shared = &shared;
                let next = &next;
                handles.push(scope.spawn(move || {
                    let mut best: Option<Incumbent> = None;
                    loop {
                        let p = next.fetch_add(1, AtomicOrder::Relaxed);
                        if p >= total || shared.stop.load(AtomicOrder::Relaxed) {
                            break;
                        }
                        let mut search = Search::new(prob, shared, early_exit_w);
                        if search.apply_prefix(p as u64, k) {
                            search.search(k);
                        }
                        if let Some(found) = search.local_best.take() {
                            if better(&found, &best) {
                                best = Some(found);
                            }
                        }
                    }
                    best
                }));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker"))
                .collect::<Vec<_>>()
        });
        locals.extend(results);
    }
    let mut best = seed;
    for found in locals.into_iter().flatten() {
        if better(&found, &best) {
            best = Some(found);
        }
    }
    let yes_witness = shared.yes_witness.lock().expect("witness lock").take();
    RunOutcome {
        best,
        nodes: shared.nodes.load(AtomicOrder::Relaxed).min(shared.budget),
        budget_hit: shared.budget_hit.load(AtomicOrder::Relaxed),
        found_yes: shared.found_yes.load(AtomicOrder::Relaxed),
        yes_witness,
    }
}

fn run_exhaustive(prob: &Problem, budget: u64, seed: Option<Incumbent>) -> RunOutcome {
    let m = prob.cand.len();
    let mut best = seed;
    let mut nodes: u64 = 0;
    if m >= 63 {
        return RunOutcome { best, nodes, budget_hit: true, found_yes: false, yes_witness: None };
    }
    let mut buf = vec![0.0; prob.n];
    let mut dsu = DisjointSets::new(prob.n);
    'masks: for mask in 0u64..(1u64 << m) {
        nodes += 1;
        if nodes > budget {
            return RunOutcome {
                best,
                nodes: nodes - 1,
                budget_hit: true,
                found_yes: false,
                yes_witness: None,
            };
        }
        let mut weight = 0.0;
        for e in 0..m {
            if mask & (1 << e) != 0 {
                weight += prob.len[e];
            }
        }
        if let Some(b) = &best {
            if cmp_weights(weight, b.weight) == Ordering::Greater {
                continue;
            }
        }
        if let Some(rows) = &prob.conflict {
            for e in 0..m {
                if mask & (1 << e) != 0 && rows[e][0] & mask != 0 {
                    continue 'masks;
                }
            }
        }
        dsu.reset();
        let mut comps = prob.n;
        for e in 0..m {
            if mask & (1 << e) != 0 {
                let (u, v) = prob.cand[e];
                if dsu.union(u, v) {
                    comps -= 1;
                }
            }
        }
        if comps > 1 {
            continue;
        }
        let active = |e: usize| mask & (1 << e) != 0;
        if prob.spanner_ok(&active, None, &mut buf).is_err() {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = (0..m)
            .filter(|&e| mask & (1 << e) != 0)
            .map(|e| prob.cand[e])
            .collect();
        edges.sort_unstable();
        let solution = Incumbent { weight, edges };
        if better(&solution, &best) {
            best = Some(solution);
        }
    }
    RunOutcome { best, nodes, budget_hit: false, found_yes: false, yes_witness: None }
}

fn incumbent_to_result(
    points: &[Point2],
    best: Option<Incumbent>,
    status: SolverStatus,
    nodes: u64,
) -> SolverResult {
    match best {
        None => SolverResult { status, graph: None, weight: None, dilation: None, nodes },
        Some(inc) => {
            let graph = GeometricGraph::from_edges(points.to_vec(), inc.edges.iter().copied())
                .expect("incumbent edges index the points");
            let weight = graph.weight();
            let dilation = metrics::dilation(&graph).expect("solver input is valid").dilation;
            SolverResult {
                status,
                graph: Some(graph),
                weight: Some(weight),
                dilation: Some(dilation),
                nodes,
            }
        }
    }
}

fn check_stretch(t: &Scalar) -> Result<f64, SolverError> {
    if *t <= Scalar::one() {
        return Err(SolverError::StretchNotAboveOne);
    }
    Ok(t.to_f64())
}

/// Whether the full candidate graph is a t-spanner; nothing sparser can be
/// one otherwise.
fn feasible_at_all(prob: &Problem) -> bool {
    let mut buf = vec![0.0; prob.n];
    prob.spanner_ok(&|_| true, None, &mut buf).is_ok()
}

fn solve_min_weight(prob: &Problem, opts: &SolverOptions) -> SolverResult {
    if !feasible_at_all(prob) {
        return SolverResult {
            status: SolverStatus::Infeasible,
            graph: None,
            weight: None,
            dilation: None,
            nodes: 0,
        };
    }
    let seed = match seed_incumbent(prob) {
        Some(s) => Some(s),
        None => full_candidate_incumbent(prob),
    };
    let outcome = match opts.mode {
        SolverMode::BranchAndBound => run_branch_and_bound(prob, opts, seed, None),
        SolverMode::Exhaustive => run_exhaustive(prob, opts.node_budget, seed),
    };
    let status = if outcome.budget_hit {
        SolverStatus::BudgetExceeded
    } else if outcome.best.is_none() {
        SolverStatus::Infeasible
    } else {
        SolverStatus::Optimal
    };
    incumbent_to_result(&prob.points, outcome.best, status, outcome.nodes)
}

/// Minimum-total-length subset of the candidate edges whose dilation stays
/// within t(1 + tol), by branch and bound or exhaustive enumeration.
pub fn min_weight_spanner(
    points: &[Point2],
    t: &Scalar,
    opts: &SolverOptions,
) -> Result<SolverResult, SolverError> {
    opts.validate()?;
    let tf = check_stretch(t)?;
    let prob = Problem::build(points, tf, opts)?;
    Ok(solve_min_weight(&prob, opts))
}

/// `min_weight_spanner` over crossing-free graphs. May be infeasible for
/// small t even when the unrestricted problem is not.
pub fn min_weight_plane_spanner(
    points: &[Point2],
    t: &Scalar,
    opts: &SolverOptions,
) -> Result<SolverResult, SolverError> {
    let mut o = opts.clone();
    o.require_plane = true;
    min_weight_spanner(points, t, &o)
}

/// Is there a t-spanner of weight at most w? Runs the same search with an
/// early exit at w; budget exhaustion is a first-class third answer, never
/// folded into "no".
pub fn decide_lwst(
    points: &[Point2],
    t: &Scalar,
    w: &Scalar,
    opts: &SolverOptions,
) -> Result<DecisionReport, SolverError> {
    opts.validate()?;
    let tf = check_stretch(t)?;
    if !w.is_positive() {
        return Err(SolverError::NonPositiveBudget);
    }
    let prob = Problem::build(points, tf, opts)?;
    let wf = w.to_f64();
    let accept = |inc: &Incumbent| inc.weight <= wf * (1.0 + prob.tol);
    let witness_graph = |inc: Incumbent| {
        GeometricGraph::from_edges(prob.points.clone(), inc.edges).expect("witness edges valid")
    };
    if !feasible_at_all(&prob) {
        return Ok(DecisionReport { decision: Decision::False, witness: None, nodes: 0 });
    }
    // Any spanner is connected, so the candidate forest weight is a floor.
    let mut dsu = DisjointSets::new(prob.n);
    let mut floor = 0.0;
    for e in (0..prob.cand.len()).rev() {
        let (u, v) = prob.cand[e];
        if dsu.union(u, v) {
            floor += prob.len[e];
        }
    }
    if wf * (1.0 + prob.tol) < floor * (1.0 - TIE_EPS) {
        return Ok(DecisionReport { decision: Decision::False, witness: None, nodes: 0 });
    }
    let seed = match seed_incumbent(&prob) {
        Some(s) => Some(s),
        None => full_candidate_incumbent(&prob),
    };
    if seed.as_ref().is_some_and(accept) {
        let witness = witness_graph(seed.expect("just checked"));
        return Ok(DecisionReport {
            decision: Decision::True,
            witness: Some(witness),
            nodes: 0,
        });
    }
    match opts.mode {
        SolverMode::BranchAndBound => {
            let outcome = run_branch_and_bound(&prob, opts, seed, Some(wf));
            if outcome.found_yes {
                let witness = outcome.yes_witness.expect("found implies witness");
                Ok(DecisionReport {
                    decision: Decision::True,
                    witness: Some(witness_graph(witness)),
                    nodes: outcome.nodes,
                })
            } else if outcome.budget_hit {
                Ok(DecisionReport {
                    decision: Decision::Indeterminate,
                    witness: None,
                    nodes: outcome.nodes,
                })
            } else {
                Ok(DecisionReport { decision: Decision::False, witness: None, nodes: outcome.nodes })
            }
        }
        SolverMode::Exhaustive => {
            let outcome = run_exhaustive(&prob, opts.node_budget, seed);
            let best_ok = outcome.best.as_ref().is_some_and(accept);
            let decision = if best_ok {
                Decision::True
            } else if outcome.budget_hit {
                Decision::Indeterminate
            } else {
                Decision::False
            };
            Ok(DecisionReport {
                decision,
                witness: outcome.best.filter(accept).map(witness_graph),
                nodes: outcome.nodes,
            })
        }
    }
}

/// Over subsets of weight at most w, a graph minimizing dilation: full
/// enumeration up to 7 points, otherwise bisection on the stretch factor
/// (to 1e-6) with the decision solver doing the work.
pub fn min_dilation_under_budget(
    points: &[Point2],
    w: &Scalar,
    opts: &SolverOptions,
) -> Result<SolverResult, SolverError> {
    opts.validate()?;
    if !w.is_positive() {
        return Err(SolverError::NonPositiveBudget);
    }
    // t plays no role in candidate construction; 2 is a placeholder.
    let prob = Problem::build(points, 2.0, opts)?;
    let wf = w.to_f64();
    let mut dsu = DisjointSets::new(prob.n);
    let mut mst_edges: Vec<(usize, usize)> = Vec::new();
    let mut mst_w = 0.0;
    for e in (0..prob.cand.len()).rev() {
        let (u, v) = prob.cand[e];
        if dsu.union(u, v) {
            mst_edges.push((u, v));
            mst_w += prob.len[e];
        }
    }
    let infeasible = SolverResult {
        status: SolverStatus::Infeasible,
        graph: None,
        weight: None,
        dilation: None,
        nodes: 0,
    };
    if mst_edges.len() + 1 < prob.n {
        return Ok(infeasible);
    }
    if wf * (1.0 + prob.tol) < mst_w * (1.0 - TIE_EPS) {
        return Ok(infeasible);
    }
    if prob.n <= 7 {
        return Ok(exhaustive_min_dilation(&prob, wf, opts.node_budget));
    }

    mst_edges.sort_unstable();
    let mst_graph = GeometricGraph::from_edges(prob.points.clone(), mst_edges)
        .expect("forest edges index the points");
    let mst_dil = metrics::dilation(&mst_graph).expect("valid points").dilation;
    let mut best_graph = mst_graph;
    let mut lo = 1.0f64;
    let mut hi = mst_dil;
    let mut nodes: u64 = 0;
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        let t_mid = Scalar::from_f64_exact(mid).expect("midpoint is finite");
        let report = decide_lwst(points, &t_mid, w, opts)?;
        nodes += report.nodes;
        match report.decision {
            Decision::True => {
                best_graph = report.witness.expect("true implies witness");
                hi = mid;
            }
            Decision::False => lo = mid,
            Decision::Indeterminate => {
                let weight = best_graph.weight();
                let dilation =
                    metrics::dilation(&best_graph).expect("valid points").dilation;
                return Ok(SolverResult {
                    status: SolverStatus::BudgetExceeded,
                    graph: Some(best_graph),
                    weight: Some(weight),
                    dilation: Some(dilation),
                    nodes,
                });
            }
        }
    }
    let weight = best_graph.weight();
    let dilation = metrics::dilation(&best_graph).expect("valid points").dilation;
    Ok(SolverResult {
        status: SolverStatus::Optimal,
        graph: Some(best_graph),
        weight: Some(weight),
        dilation: Some(dilation),
        nodes,
    })
}

fn exhaustive_min_dilation(prob: &Problem, wf: f64, budget: u64) -> SolverResult {
    let m = prob.cand.len();
    let mut best: Option<(f64, Incumbent)> = None;
    let mut nodes: u64 = 0;
    let mut budget_hit = false;
    if m >= 63 {
        budget_hit = true;
    } else {
        let mut buf = vec![0.0; prob.n];
        let mut dsu = DisjointSets::new(prob.n);
        'masks: for mask in 0u64..(1u64 << m) {
            nodes += 1;
            if nodes > budget {
                nodes -= 1;
                budget_hit = true;
                break;
            }
            let mut weight = 0.0;
            for e in 0..m {
                if mask & (1 << e) != 0 {
                    weight += prob.len[e];
                }
            }
            if weight > wf * (1.0 + prob.tol) {
                continue;
            }
            if let Some(rows) = &prob.conflict {
                for e in 0..m {
                    if mask & (1 << e) != 0 && rows[e][0] & mask != 0 {
                        continue 'masks;
                    }
                }
            }
            dsu.reset();
            let mut comps = prob.n;
            for e in 0..m {
                if mask & (1 << e) != 0 {
                    let (u, v) = prob.cand[e];
                    if dsu.union(u, v) {
                        comps -= 1;
                    }
                }
            }
            if comps > 1 {
                continue;
            }
            let active = |e: usize| mask & (1 << e) != 0;
            let mut dil = 1.0f64;
            for i in 0..prob.n {
                prob.dijkstra(i, f64::INFINITY, &active, &mut buf);
                for j in i + 1..prob.n {
                    dil = dil.max(buf[j] / prob.d(i, j));
                }
            }
            let challenger = (dil, mask);
            let beats = match &best {
                None => true,
                Some((bd, binc)) => {
                    if challenger.0 < bd * (1.0 - TIE_EPS) {
                        true
                    } else if challenger.0 > bd * (1.0 + TIE_EPS) {
                        false
                    } else {
                        match cmp_weights(weight, binc.weight) {
                            Ordering::Less => true,
                            Ordering::Greater => false,
                            Ordering::Equal => {
                                let mut edges: Vec<(usize, usize)> = (0..m)
                                    .filter(|&e| mask & (1 << e) != 0)
                                    .map(|e| prob.cand[e])
                                    .collect();
                                edges.sort_unstable();
                                edges < binc.edges
                            }
                        }
                    }
                }
            };
            if beats {
                let mut edges: Vec<(usize, usize)> = (0..m)
                    .filter(|&e| mask & (1 << e) != 0)
                    .map(|e| prob.cand[e])
                    .collect();
                edges.sort_unstable();
                best = Some((dil, Incumbent { weight, edges }));
            }
        }
    }
    let status = if budget_hit {
        SolverStatus::BudgetExceeded
    } else if best.is_none() {
        SolverStatus::Infeasible
    } else {
        SolverStatus::Optimal
    };
    incumbent_to_result(&prob.points, best.map(|(_, inc)| inc), status, nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{euclidean_mst, path_greedy_spanner};
    use proptest::prelude::*;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point2> {
        coords.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()
    }

    fn square() -> Vec<Point2> {
        pts(&[(0, 0), (1, 0), (0, 1), (1, 1)])
    }

    fn edges_of(res: &SolverResult) -> Vec<(usize, usize)> {
        res.graph.as_ref().expect("graph present").edges().collect()
    }

    #[test]
    fn collinear_triple_keeps_the_two_short_edges() {
        let p = pts(&[(0, 0), (1, 0), (3, 0)]);
        let res =
            min_weight_spanner(&p, &Scalar::from_int(2), &SolverOptions::default()).unwrap();
        assert_eq!(res.status, SolverStatus::Optimal);
        assert_eq!(edges_of(&res), vec![(0, 1), (1, 2)]);
        assert_eq!(res.weight, Some(3.0));
        assert_eq!(res.dilation, Some(1.0));
    }

    #[test]
    fn square_agrees_across_modes_at_three_halves() {
        let t = Scalar::from_ratio(3, 2);
        let bnb =
            min_weight_spanner(&square(), &t, &SolverOptions::default()).unwrap();
        let exh = min_weight_spanner(
            &square(),
            &t,
            &SolverOptions { mode: SolverMode::Exhaustive, ..SolverOptions::default() },
        )
        .unwrap();
        assert_eq!(bnb.status, SolverStatus::Optimal);
        assert_eq!(exh.status, SolverStatus::Optimal);
        assert!((bnb.weight.unwrap() - exh.weight.unwrap()).abs() <= 1e-12);
        assert_eq!(edges_of(&bnb), edges_of(&exh));
    }

    #[test]
    fn huge_stretch_returns_exactly_the_mst() {
        let p = pts(&[(0, 0), (3, 1), (5, 4), (1, 6), (8, 2), (7, 7)]);
        let res = min_weight_spanner(
            &p,
            &Scalar::from_int(1_000_000_000),
            &SolverOptions::default(),
        )
        .unwrap();
        let mst = euclidean_mst(p).unwrap();
        assert_eq!(res.weight, Some(mst.weight()));
        let mst_edges: Vec<(usize, usize)> = mst.edges().collect();
        assert_eq!(edges_of(&res), mst_edges);
    }

    #[test]
    fn decide_floors_at_the_mst_and_accepts_the_complete_graph() {
        let p = pts(&[(0, 0), (2, 1), (4, 0), (1, 3)]);
        let t = Scalar::from_ratio(3, 2);
        let mst_w = euclidean_mst(p.clone()).unwrap().weight();
        let complete = GeometricGraph::complete(p.clone());
        let below = Scalar::from_f64_exact(mst_w * 0.99).unwrap();
        let report = decide_lwst(&p, &t, &below, &SolverOptions::default()).unwrap();
        assert_eq!(report.decision, Decision::False);
        let above = Scalar::from_f64_exact(complete.weight()).unwrap();
        let report = decide_lwst(&p, &t, &above, &SolverOptions::default()).unwrap();
        assert_eq!(report.decision, Decision::True);
        let witness = report.witness.unwrap();
        assert!(witness.weight() <= complete.weight() * (1.0 + 1e-9));
        assert!(metrics::is_t_spanner(&witness, 1.5).unwrap());
    }

    #[test]
    fn three_points_ignore_the_plane_constraint() {
        let p = pts(&[(0, 0), (4, 1), (2, 5)]);
        let t = Scalar::from_ratio(6, 5);
        let plain = min_weight_spanner(&p, &t, &SolverOptions::default()).unwrap();
        let plane = min_weight_plane_spanner(&p, &t, &SolverOptions::default()).unwrap();
        assert_eq!(plain.weight, plane.weight);
        assert_eq!(edges_of(&plain), edges_of(&plane));
    }

    #[test]
    fn relaxed_square_has_a_plane_optimum() {
        let t = Scalar::from_int(3);
        let plain = min_weight_spanner(&square(), &t, &SolverOptions::default()).unwrap();
        let plane = min_weight_plane_spanner(&square(), &t, &SolverOptions::default()).unwrap();
        assert_eq!(plain.status, SolverStatus::Optimal);
        assert_eq!(plane.status, SolverStatus::Optimal);
        assert_eq!(plain.weight, plane.weight);
        assert_eq!(edges_of(&plain), edges_of(&plane));
        assert_eq!(plain.weight, Some(3.0));
    }

    #[test]
    fn tight_square_is_infeasible_for_plane_graphs() {
        let t = Scalar::from_ratio(21, 20);
        let plain = min_weight_spanner(&square(), &t, &SolverOptions::default()).unwrap();
        assert_eq!(plain.status, SolverStatus::Optimal);
        let plane = min_weight_plane_spanner(&square(), &t, &SolverOptions::default()).unwrap();
        assert_eq!(plane.status, SolverStatus::Infeasible);
        assert!(plane.graph.is_none());
    }

    #[test]
    fn dilation_budget_at_complete_weight_reaches_one() {
        let p = square();
        let w = Scalar::from_f64_exact(GeometricGraph::complete(p.clone()).weight()).unwrap();
        let res = min_dilation_under_budget(&p, &w, &SolverOptions::default()).unwrap();
        assert_eq!(res.status, SolverStatus::Optimal);
        assert_eq!(res.dilation, Some(1.0));
    }

    #[test]
    fn dilation_budget_at_mst_weight_returns_the_mst() {
        let p = pts(&[(0, 0), (3, 1), (5, 4), (1, 6)]);
        let mst = euclidean_mst(p.clone()).unwrap();
        let w = Scalar::from_f64_exact(mst.weight()).unwrap();
        let res = min_dilation_under_budget(&p, &w, &SolverOptions::default()).unwrap();
        assert_eq!(res.status, SolverStatus::Optimal);
        let expect = metrics::dilation(&mst).unwrap().dilation;
        assert!((res.dilation.unwrap() - expect).abs() <= 1e-12);
        let mst_edges: Vec<(usize, usize)> = mst.edges().collect();
        assert_eq!(edges_of(&res), mst_edges);
    }

    #[test]
    fn dilation_budget_four_picks_the_cycle_on_the_square() {
        let res = min_dilation_under_budget(
            &square(),
            &Scalar::from_int(4),
            &SolverOptions::default(),
        )
        .unwrap();
        assert_eq!(res.status, SolverStatus::Optimal);
        assert!((res.dilation.unwrap() - 2.0f64.sqrt()).abs() <= 1e-12);
        assert_eq!(res.weight, Some(4.0));
    }

    #[test]
    fn dilation_budget_below_mst_is_infeasible() {
        let res = min_dilation_under_budget(
            &square(),
            &Scalar::from_int(1),
            &SolverOptions::default(),
        )
        .unwrap();
        assert_eq!(res.status, SolverStatus::Infeasible);
    }

    #[test]
    fn dilation_bisection_handles_more_than_seven_points() {
        let p = pts(&[
            (0, 0), (7, 1), (13, 5), (3, 9), (10, 11), (17, 2), (5, 16), (15, 14),
        ]);
        let w = Scalar::from_f64_exact(GeometricGraph::complete(p.clone()).weight
()).unwrap();
        let res = min_dilation_under_budget(&p, &w, &SolverOptions::default()).unwrap();
        assert_eq!(res.status, SolverStatus::Optimal);
        assert!(res.dilation.unwrap() <= 1.0 + 2e-6);
    }

    #[test]
    fn optimum_weight_never_increases_with_stretch() {
        let p = pts(&[(0, 0), (4, 1), (7, 5), (2, 6), (9, 9)]);
        let grid = [
            Scalar::from_ratio(6, 5),
            Scalar::from_ratio(3, 2),
            Scalar::from_int(2),
            Scalar::from_int(3),
            Scalar::from_int(10),
        ];
        let mut last = f64::INFINITY;
        for t in &grid {
            let res = min_weight_spanner(&p, t, &SolverOptions::default()).unwrap();
            let w = res.weight.unwrap();
            assert!(w <= last * (1.0 + 1e-12), "weight rose from {last} to {w}");
            last = w;
        }
    }

    #[test]
    fn decision_is_monotone_in_the_budget() {
        let p = pts(&[(0, 0), (4, 1), (7, 5), (2, 6)]);
        let t = Scalar::from_ratio(3, 2);
        let mut seen_true = false;
        for wi in 5..80 {
            let w = Scalar::from_ratio(wi, 2);
            let d = decide_lwst(&p, &t, &w, &SolverOptions::default()).unwrap().decision;
            assert_ne!(d, Decision::Indeterminate);
            if seen_true {
                assert_eq!(d, Decision::True, "true flipped back to false at w={wi}/2");
            }
            seen_true = d == Decision::True;
        }
        assert!(seen_true);
    }

    #[test]
    fn starved_budget_reports_indeterminate_and_budget_exceeded() {
        let p = pts(&[(0, 0), (4, 1), (7, 5), (2, 6), (9, 9), (11, 3)]);
        let t = Scalar::from_ratio(3, 2);
        let opts = SolverOptions { node_budget: 1, ..SolverOptions::default() };
        let mst_w = euclidean_mst(p.clone()).unwrap().weight();
        // Just above the floor so neither quick answer fires.
        let w = Scalar::from_f64_exact(mst_w * 1.0001).unwrap();
        let d = decide_lwst(&p, &t, &w, &opts).unwrap();
        assert_eq!(d.decision, Decision::Indeterminate);
        let res = min_weight_spanner(&p, &t, &opts).unwrap();
        assert_eq!(res.status, SolverStatus::BudgetExceeded);
        assert!(res.graph.is_some(), "greedy seed is still reported");
    }

    #[test]
    fn thread_count_does_not_change_the_answer() {
        let p = pts(&[(0, 0), (4, 1), (7, 5), (2, 6), (9, 9), (11, 3)]);
        let t = Scalar::from_ratio(3, 2);
        let reference =
            min_weight_spanner(&p, &t, &SolverOptions::default()).unwrap();
        for threads in [2, 3, 4] {
            let res = min_weight_spanner(
                &p,
                &t,
                &SolverOptions { threads, ..SolverOptions::default() },
            )
            .unwrap();
            assert_eq!(res.weight, reference.weight);
            assert_eq!(edges_of(&res), edges_of(&reference));
        }
    }

    #[test]
    fn length_cap_can_make_the_problem_infeasible() {
        let p = pts(&[(0, 0), (5, 0)]);
        let opts = SolverOptions {
            max_edge_length: Some(Scalar::from_int(1)),
            ..SolverOptions::default()
        };
        let res = min_weight_spanner(&p, &Scalar::from_int(2), &opts).unwrap();
        assert_eq!(res.status, SolverStatus::Infeasible);
        let d = decide_lwst(&p, &Scalar::from_int(2), &Scalar::from_int(100), &opts).unwrap();
        assert_eq!(d.decision, Decision::False);
    }

    #[test]
    fn input_validation() {
        let p = pts(&[(0, 0), (0, 0)]);
        assert!(matches!(
            min_weight_spanner(&p, &Scalar::from_int(2), &SolverOptions::default()),
            Err(SolverError::DuplicatePoints(0, 1))
        ));
        let p = pts(&[(0, 0)]);
        assert!(matches!(
            min_weight_spanner(&p, &Scalar::from_int(2), &SolverOptions::default()),
            Err(SolverError::TooFewPoints)
        ));
        assert!(matches!(
            min_weight_spanner(&square(), &Scalar::one(), &SolverOptions::default()),
            Err(SolverError::StretchNotAboveOne)
        ));
        let zero_budget = SolverOptions { node_budget: 0, ..SolverOptions::default() };
        assert!(matches!(
            min_weight_spanner(&square(), &Scalar::from_int(2), &zero_budget),
            Err(SolverError::BadOptions(_))
        ));
        assert!(matches!(
            decide_lwst(
                &square(),
                &Scalar::from_int(2),
                &Scalar::zero(),
                &SolverOptions::default()
            ),
            Err(SolverError::NonPositiveBudget)
        ));
    }

    #[test]
    fn result_json_has_the_expected_shape() {
        let res =
            min_weight_spanner(&square(), &Scalar::from_int(3), &SolverOptions::default())
                .unwrap();
        let doc: serde_json::Value = serde_json::from_str(&res.to_json()).unwrap();
        assert_eq!(doc["status"], "optimal");
        assert!(doc["edges"].is_array());
        assert_eq!(doc["weight"], "3");
        assert!(doc["dilation"].is_number());
        assert!(doc["nodes"].is_u64());
    }

    #[test]
    fn greedy_is_never_lighter_than_the_optimum() {
        let p = pts(&[(0, 0), (4, 1), (7, 5), (2, 6), (9, 9)]);
        let t = Scalar::from_ratio(3, 2);
        let res = min_weight_spanner(&p, &t, &SolverOptions::default()).unwrap();
        let greedy = path_greedy_spanner(p, 1.5).unwrap();
        assert!(res.weight.unwrap() <= greedy.weight() * (1.0 + 1e-12));
    }

    fn arb_points() -> impl Strategy<Value = Vec<Point2>> {
        prop::collection::btree_set((0i64..12, 0i64..12), 2..=6).prop_map(|set| {
            set.into_iter().map(|(x, y)| Point2::from_ints(x, y)).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

        #[test]
        fn branch_and_bound_matches_exhaustive(points in arb_points(), ti in 0usize..3, plane in proptest::bool::ANY) {
            let t = [Scalar::from_ratio(3, 2), Scalar::from_int(2), Scalar::from_int(3)][ti].clone();
            let opts = SolverOptions { require_plane: plane, ..SolverOptions::default() };
            let exh_opts = SolverOptions { mode: SolverMode::Exhaustive, ..opts.clone() };
            let bnb = min_weight_spanner(&points, &t, &opts).unwrap();
            let exh = min_weight_spanner(&points, &t, &exh_opts).unwrap();
            prop_assert_eq!(bnb.status, exh.status);
            if bnb.status == SolverStatus::Optimal {
                let (bw, ew) = (bnb.weight.unwrap(), exh.weight.unwrap());
                prop_assert!((bw - ew).abs() <= 1e-12 * bw.max(1.0), "bnb {} vs exhaustive {}", bw, ew);
                prop_assert_eq!(edges_of(&bnb), edges_of(&exh));
                let g = bnb.graph.as_ref().unwrap();
                prop_assert!(metrics::is_t_spanner(g, t.to_f64()).unwrap());
                if plane {
                    prop_assert!(crate::predicates::is_plane_graph(g).unwrap());
                }
            }
        }
    }
}
