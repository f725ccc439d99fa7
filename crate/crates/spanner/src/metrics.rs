//! Shortest paths, dilation, and the t-spanner test.
//!
//! Dilation of a pair is the graph distance divided by the straight-line
//! distance; the dilation of a graph is the maximum over all pairs. A
//! disconnected pair has infinite dilation, which we report as
//! `f64::INFINITY` with no witness suppression: the witness is still the
//! first unreachable pair in index order.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::GeometricGraph;
use crate::REL_TOL;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("dilation needs at least two points")]
    TooFewPoints,
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("source index {0} out of range")]
    SourceOutOfRange(usize),
}

/// Max-heap entry ordered so that the smallest tentative distance pops first.
struct HeapEntry {
    dist: f64,
    node: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reverse on distance; break ties on the lower node index so the
        // settle order is deterministic.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// Single-source shortest path lengths over the edge set, Euclidean weights.
/// Unreachable nodes get `f64::INFINITY`.
pub fn shortest_paths(g: &GeometricGraph, source: usize) -> Result<Vec<f64>, MetricError> {
    let n = g.len();
    if source >= n {
        return Err(MetricError::SourceOutOfRange(source));
    }
    let adj = g.adjacency();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry { dist: 0.0, node: source });
    while let Some(HeapEntry { dist: d, node: u }) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &v in &adj[u] {
            let nd = d + g.edge_length(u, v);
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(HeapEntry { dist: nd, node: v });
            }
        }
    }
    Ok(dist)
}

/// The pair attaining the maximum stretch, with the stretch value.
#[derive(Debug, Clone, PartialEq)]
pub struct DilationReport {
    /// max over pairs of graph distance / Euclidean distance
    pub dilation: f64,
    /// lexicographically smallest pair attaining the max
    pub witness: (usize, usize),
}

/// Maximum dilation over all point pairs. Requires >= 2 pairwise distinct
/// points; a disconnected graph yields infinite dilation.
pub fn dilation(g: &GeometricGraph) -> Result<DilationReport, MetricError> {
    let n = g.len();
    if n < 2 {
        return Err(MetricError::TooFewPoints);
    }
    let pts = g.points();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return Err(MetricError::DuplicatePoints(i, j));
            }
        }
    }
    let mut best = f64::NEG_INFINITY;
    let mut witness = (0, 1);
    for i in 0..n {
        let dist = shortest_paths(g, i)?;
        for j in i + 1..n {
            let ratio = dist[j] / pts[i].distance(&pts[j]);
            if ratio > best {
                best = ratio;
                witness = (i, j);
            }
        }
    }
    Ok(DilationReport { dilation: best, witness })
}

/// t-spanner test with relative slack [`REL_TOL`] to absorb the float error
/// of the shortest-path sums.
pub fn is_t_spanner(g: &GeometricGraph, t: f64) -> Result<bool, MetricError> {
    let report = dilation(g)?;
    Ok(report.dilation <= t * (1.0 + REL_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point2;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    /// Floyd-Warshall reference for cross-checking Dijkstra on small graphs.
    fn all_pairs_reference(g: &GeometricGraph) -> Vec<Vec<f64>> {
        let n = g.len();
        let mut d = vec![vec![f64::INFINITY; n]; n];
        for i in 0..n {
            d[i][i] = 0.0;
        }
        for (i, j) in g.edges() {
            let w = g.edge_length(i, j);
            d[i][j] = w;
            d[j][i] = w;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn path_distances_on_unit_square() {
        let pts = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        let g = GeometricGraph::from_edges(pts, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = shortest_paths(&g, 0).unwrap();
        assert_eq!(d, vec![0.0, 1.0, 2.0, 3.0]);
        // Worst pair is the two path ends at distance 1 apart.
        let rep = dilation(&g).unwrap();
        assert_eq!(rep.witness, (0, 3));
        assert!((rep.dilation - 3.0).abs() < 1e-12);
        assert!(is_t_spanner(&g, 3.0).unwrap());
        assert!(!is_t_spanner(&g, 2.9).unwrap());
    }

    #[test]
    fn disconnected_pair_is_infinite() {
        let g = GeometricGraph::from_edges(vec![p(0, 0), p(1, 0), p(5, 0)], [(0, 1)])
            .unwrap();
        let rep = dilation(&g).unwrap();
        assert!(rep.dilation.is_infinite());
        assert_eq!(rep.witness, (0, 2));
        assert!(!is_t_spanner(&g, 1e12).unwrap());
    }

    #[test]
    fn complete_graph_has_dilation_one() {
        let g = GeometricGraph::complete(vec![p(0, 0), p(3, 0), p(0, 4), p(7, 2)]);
        let rep = dilation(&g).unwrap();
        assert!((rep.dilation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn duplicate_points_rejected() {
        let g = GeometricGraph::new(vec![p(0, 0), p(1, 1), p(0, 0)]);
        assert_eq!(dilation(&g), Err(MetricError::DuplicatePoints(0, 2)));
    }

    #[test]
    fn too_few_points_rejected() {
        let g = GeometricGraph::new(vec![p(0, 0)]);
        assert_eq!(dilation(&g), Err(MetricError::TooFewPoints));
        assert_eq!(
            shortest_paths(&GeometricGraph::new(vec![]), 0),
            Err(MetricError::SourceOutOfRange(0))
        );
    }

    #[test]
    fn witness_prefers_lowest_pair_on_ties() {
        // Two disjoint unit edges: every cross pair is infinite; the first
        // in index order is (0, 2).
        let g = GeometricGraph::from_edges(
            vec![p(0, 0), p(1, 0), p(10, 0), p(11, 0)],
            [(0, 1), (2, 3)],
        )
        .unwrap();
        assert_eq!(dilation(&g).unwrap().witness, (0, 2));
    }

    proptest! {
        /// Removing an edge never decreases dilation.
        #[test]
        fn edge_removal_is_monotone(
            coords in proptest::collection::vec((-20i64..=20, -20i64..=20), 3..8),
            drop_pick in any::<u64>(),
        ) {
            let mut pts: Vec<Point2> = Vec::new();
            for &(x, y) in &coords {
                let q = p(x, y);
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            prop_assume!(pts.len() >= 3);
            let mut g = GeometricGraph::complete(pts);
            let before = dilation(&g).unwrap().dilation;
            let edges: Vec<_> = g.edges().collect();
            let (i, j) = edges[(drop_pick as usize) % edges.len()];
            g.remove_edge(i, j);
            let after = dilation(&g).unwrap().dilation;
            prop_assert!(after >= before * (1.0 - 1e-12));
        }

        /// Dijkstra agrees with Floyd-Warshall on random small graphs.
        #[test]
        fn dijkstra_matches_floyd_warshall(
            coords in proptest::collection::vec((-20i64..=20, -20i64..=20), 2..8),
            edge_bits in proptest::collection::vec(any::<bool>(), 28),
        ) {
            let mut pts: Vec<Point2> = coords.iter().map(|&(x, y)| p(x, y)).collect();
            pts.dedup_by(|a, b| a == b);
            prop_assume!(pts.len() >= 2);
            let n = pts.len();
            let mut g = GeometricGraph::new(pts);
            let mut bit = 0usize;
            for i in 0..n {
                for j in i + 1..n {
                    if edge_bits[bit % edge_bits.len()] {
                        g.add_edge(i, j).unwrap();
                    }
                    bit += 1;
                }
            }
            let reference = all_pairs_reference(&g);
            for s in 0..n {
                let d = shortest_paths(&g, s).unwrap();
                for v in 0..n {
                    if reference[s][v].is_infinite() {
                        prop_assert!(d[v].is_infinite());
                    } else {
                        prop_assert!((d[v] - reference[s][v]).abs() <= 1e-9 * (1.0 + reference[s][v]));
                    }
                }
            }
        }
    }
}
