//! Geometric graphs: a point set plus a set of undirected edges.
//!
//! Edge weights are never stored; they are always the Euclidean distance of
//! the endpoints, recomputed on demand so the graph cannot drift out of sync
//! with its geometry.

use crate::point::Point2;
use crate::scalar::Scalar;
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge index {0} out of range for {1} points")]
    IndexOutOfRange(usize, usize),
    #[error("self-loop at index {0}")]
    SelfLoop(usize),
}

/// Undirected geometric graph. Edges are kept normalized (`i < j`) and
/// sorted, so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricGraph {
    points: Vec<Point2>,
    edges: BTreeSet<(usize, usize)>,
}

impl GeometricGraph {
    pub fn new(points: Vec<Point2>) -> Self {
        GeometricGraph {
            points,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(points: Vec<Point2>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = GeometricGraph::new(points);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// The complete graph on `points`.
    pub fn complete(points: Vec<Point2>) -> Self {
        let n = points.len();
        let mut g = GeometricGraph::new(points);
        for i in 0..n {
            for j in (i + 1)..n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&normalize(i, j))
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<bool, GraphError> {
        let n = self.points.len();
        if i >= n {
            return Err(GraphError::IndexOutOfRange(i, n));
        }
        if j >= n {
            return Err(GraphError::IndexOutOfRange(j, n));
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        Ok(self.edges.insert(normalize(i, j)))
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> bool {
        self.edges.remove(&normalize(i, j))
    }

    pub fn edge_length(&self, i: usize, j: usize) -> f64 {
        self.points[i].distance(&self.points[j])
    }

    pub fn edge_squared_length(&self, i: usize, j: usize) -> Scalar {
        self.points[i].squared_distance(&self.points[j])
    }

    /// Total Euclidean length of all edges, summed in sorted edge order so
    /// the floating result is deterministic.
    pub fn weight(&self) -> f64 {
        self.edges
            .iter()
            .map(|&(i, j)| self.edge_length(i, j))
            .sum()
    }

    /// Exact total weight, available when every edge length is rational
    /// (true for the large-stretch hardness instances by construction).
    pub fn exact_weight(&self) -> Option<Scalar> {
        let mut total = Scalar::zero();
        for &(i, j) in &self.edges {
            total = total + self.points[i].distance_exact(&self.points[j])?;
        }
        Some(total)
    }

    /// Adjacency lists (built on demand; the edge set stays the source of
    /// truth).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.points.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

fn normalize(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}
