//! Classic spanner constructions: Euclidean MST and the path-greedy spanner.
//!
//! Both builders scan candidate edges in the same deterministic order:
//! ascending exact squared length, ties by (min index, max index). Keeping
//! the orders identical makes the greedy spanner degenerate to the MST edge
//! set as t grows, which the tests pin down.

use crate::graph::{GeometricGraph, GraphError};
use crate::metrics::{shortest_paths, MetricError};
use crate::point::Point2;
use crate::scalar::Scalar;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("builder needs at least one point")]
    NoPoints,
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("stretch factor must exceed 1")]
    BadStretch,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.rank.fill(0);
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if the two were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

fn check_points(points: &[Point2]) -> Result<(), BuildError> {
    if points.is_empty() {
        return Err(BuildError::NoPoints);
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(BuildError::DuplicatePoints(i, j));
            }
        }
    }
    Ok(())
}

/// All pairs sorted by exact squared length, then (i, j).
fn sorted_pairs(points: &[Point2]) -> Vec<(Scalar, usize, usize)> {
    let n = points.len();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((points[i].squared_distance(&points[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    pairs
}

/// Euclidean minimum spanning tree by Kruskal over the complete graph.
/// Length ties resolve by index order, so the edge set is deterministic
/// even on degenerate inputs (grid points, repeated distances).
pub fn euclidean_mst(points: Vec<Point2>) -> Result<GeometricGraph, BuildError> {
    check_points(&points)?;
    let pairs = sorted_pairs(&points);
    let n = points.len();
    let mut g = GeometricGraph::new(points);
    let mut sets = DisjointSets::new(n);
    let mut picked = 0usize;
    for (_, i, j) in pairs {
        if sets.union(i, j) {
            g.add_edge(i, j)?;
            picked += 1;
            if picked == n - 1 {
                break;
            }
        }
    }
    Ok(g)
}

/// Path-greedy t-spanner: scan pairs in the MST's candidate order and add
/// an edge whenever the current graph distance exceeds t times the
/// Euclidean distance. The result is always a t-spanner by construction.
pub fn path_greedy_spanner(points: Vec<Point2>, t: f64) -> Result<GeometricGraph, BuildError> {
    if !(t > 1.0) {
        return Err(BuildError::BadStretch);
    }
    check_points(&points)?;
    let pairs = sorted_pairs(&points);
    let mut g = GeometricGraph::new(points);
    for (_, i, j) in pairs {
        let dist = shortest_paths(&g, i)?;
        let straight = g.points()[i].distance(&g.points()[j]);
        if dist[j] > t * straight {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{dilation, is_t_spanner};
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    /// Prim-based reference MST weight (float), for cross-checking Kruskal.
    fn prim_weight(points: &[Point2]) -> f64 {
        let n = points.len();
        let mut in_tree = vec![false; n];
        let mut best = vec![f64::INFINITY; n];
        best[0] = 0.0;
        let mut total = 0.0;
        for _ in 0..n {
            let u = (0..n)
                .filter(|&i| !in_tree[i])
                .min_by(|&a, &b| best[a].total_cmp(&best[b]))
                .unwrap();
            in_tree[u] = true;
            total += best[u];
            for v in 0..n {
                if !in_tree[v] {
                    let w = points[u].distance(&points[v]);
                    if w < best[v] {
                        best[v] = w;
                    }
                }
            }
        }
        total
    }

    #[test]
    fn mst_of_square_skips_diagonals() {
        let pts = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        let mst = euclidean_mst(pts).unwrap();
        let edges: Vec<_> = mst.edges().collect();
        // Ties at length 1 resolve by index: (0,1), (0,3), (1,2).
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(mst.exact_weight().unwrap(), Scalar::from_int(3));
    }

    #[test]
    fn single_point_mst_is_empty() {
        let mst = euclidean_mst(vec![p(7, 7)]).unwrap();
        assert_eq!(mst.edge_count(), 0);
    }

    #[test]
    fn duplicate_points_rejected() {
        assert_eq!(
            euclidean_mst(vec![p(0, 0), p(0, 0)]),
            Err(BuildError::DuplicatePoints(0, 1))
        );
        assert_eq!(
            path_greedy_spanner(vec![p(0, 0), p(0, 0)], 2.0),
            Err(BuildError::DuplicatePoints(0, 1))
        );
    }

    #[test]
    fn bad_stretch_rejected() {
        assert_eq!(path_greedy_spanner(vec![p(0, 0)], 1.0), Err(BuildError::BadStretch));
        assert_eq!(path_greedy_spanner(vec![p(0, 0)], 0.5), Err(BuildError::BadStretch));
    }

    #[test]
    fn greedy_collinear_triple_at_large_t_is_a_path() {
        let g = path_greedy_spanner(vec![p(0, 0), p(1, 0), p(2, 0)], 2.0).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn greedy_small_t_is_nearly_complete() {
        let pts = vec![p(0, 0), p(10, 0), p(5, 9), p(2, 2)];
        let g = path_greedy_spanner(pts, 1.05).unwrap();
        let rep = dilation(&g).unwrap();
        assert!(rep.dilation <= 1.05 * (1.0 + 1e-9));
    }

    proptest! {
        /// Kruskal weight equals Prim weight on random sets.
        #[test]
        fn kruskal_matches_prim(
            coords in proptest::collection::vec((-30i64..=30, -30i64..=30), 1..12)
        ) {
            let mut pts: Vec<Point2> = Vec::new();
            for &(x, y) in &coords {
                let q = p(x, y);
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            let reference = prim_weight(&pts);
            let mst = euclidean_mst(pts).unwrap();
            prop_assert!((mst.weight() - reference).abs() <= 1e-9 * (1.0 + reference));
        }

        /// The greedy output really is a t-spanner, for several t.
        #[test]
        fn greedy_output_is_t_spanner(
            coords in proptest::collection::vec((-30i64..=30, -30i64..=30), 2..10),
            t_pick in 0usize..4,
        ) {
            let mut pts: Vec<Point2> = Vec::new();
            for &(x, y) in &coords {
                let q = p(x, y);
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            prop_assume!(pts.len() >= 2);
            let t = [1.1, 1.5, 2.0, 3.0][t_pick];
            let mst = euclidean_mst(pts.clone()).unwrap();
            let g = path_greedy_spanner(pts, t).unwrap();
            prop_assert!(is_t_spanner(&g, t).unwrap());
            // The scan orders coincide, so every MST edge joins two
            // components at its turn and the greedy takes it.
            for (i, j) in mst.edges() {
                prop_assert!(g.has_edge(i, j));
            }
            prop_assert!(mst.weight() <= g.weight() * (1.0 + 1e-12));
        }

        /// At astronomically large t the greedy adds exactly the MST edges:
        /// identical scan order, and an edge is taken iff it joins two
        /// components.
        #[test]
        fn greedy_at_huge_t_equals_mst(
            coords in proptest::collection::vec((-30i64..=30, -30i64..=30), 2..10)
        ) {
            let mut pts: Vec<Point2> = Vec::new();
            for &(x, y) in &coords {
                let q = p(x, y);
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            prop_assume!(pts.len() >= 2);
            let mst = euclidean_mst(pts.clone()).unwrap();
            let greedy = path_greedy_spanner(pts, 1e9).unwrap();
            let a: Vec<_> = mst.edges().collect();
            let b: Vec<_> = greedy.edges().collect();
            prop_assert_eq!(a, b);
        }
    }
}
