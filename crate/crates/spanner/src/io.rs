//! JSON wire formats for point sets and geometric graphs.
//!
//! Coordinates travel as strings so exactness survives the round trip:
//! a scalar renders as a finite decimal when its reduced denominator is of
//! the form 2^a 5^b and as "p/q" otherwise, and both forms parse back to
//! the identical rational.

use serde::{Deserialize, Serialize};

use crate::graph::{GeometricGraph, GraphError};
use crate::point::Point2;
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, thiserror::Error)]
pub enum WireError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("points[{index}]: {source}")]
    BadCoordinate { index: usize, source: ScalarError },
    #[error("edges[{index}]: {source}")]
    BadEdge { index: usize, source: GraphError },
    #[error("{field}: {source}")]
    BadScalar { field: &'static str, source: ScalarError },
    #[error("{0}")]
    Invalid(String),
}

/// Canonical string form of a scalar: finite decimal when one exists,
/// "p/q" otherwise.
pub fn scalar_to_string(s: &Scalar) -> String {
    s.to_decimal_string_exact().unwrap_or_else(|| s.to_string())
}

#[derive(Serialize, Deserialize)]
struct PointSetDoc {
    points: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    points: Vec<[String; 2]>,
    edges: Vec<[usize; 2]>,
}

pub(crate) fn points_to_doc(points: &[Point2]) -> Vec<[String; 2]> {
    points
        .iter()
        .map(|p| [scalar_to_string(&p.x), scalar_to_string(&p.y)])
        .collect()
}

pub(crate) fn points_from_doc(doc: &[[String; 2]]) -> Result<Vec<Point2>, WireError> {
    doc.iter()
        .enumerate()
        .map(|(index, [x, y])| {
            let parse = |v: &str| {
                v.parse::<Scalar>()
                    .map_err(|source| WireError::BadCoordinate { index, source })
            };
            Ok(Point2::new(parse(x)?, parse(y)?))
        })
        .collect()
}

pub fn point_set_to_json(points: &[Point2]) -> String {
    serde_json::to_string_pretty(&PointSetDoc { points: points_to_doc(points) })
        .expect("point set serialization cannot fail")
}

pub fn point_set_from_json(text: &str) -> Result<Vec<Point2>, WireError> {
    let doc: PointSetDoc = serde_json::from_str(text)?;
    points_from_doc(&doc.points)
}

pub fn graph_to_json(g: &GeometricGraph) -> String {
    let doc = GraphDoc {
        points: points_to_doc(g.points()),
        edges: g.edges().map(|(i, j)| [i, j]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> Result<GeometricGraph, WireError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let points = points_from_doc(&doc.points)?;
    let mut g = GeometricGraph::new(points);
    for (index, [i, j]) in doc.edges.iter().enumerate() {
        g.add_edge(*i, *j)
            .map_err(|source| WireError::BadEdge { index, source })?;
    }
    Ok(g)
}

/// Either a bare point set or a full graph document; lets commands accept
/// both file shapes.
pub fn points_from_json_lenient(text: &str) -> Result<Vec<Point2>, WireError> {
    if let Ok(g) = graph_from_json(text) {
        return Ok(g.points().to_vec());
    }
    point_set_from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts() -> Vec<Point2> {
        vec![
            Point2::from_ints(0, 0),
            Point2::new("1/3".parse().unwrap(), "0.25".parse().unwrap()),
            Point2::from_ints(-2, 7),
        ]
    }

    #[test]
    fn point_set_round_trip_is_exact() {
        let original = pts();
        let json = point_set_to_json(&original);
        assert!(json.contains("\"1/3\""), "thirds stay rational: {json}");
        assert!(json.contains("\"0.25\""), "quarters go decimal: {json}");
        let back = point_set_from_json(&json).unwrap();
        assert_eq!(original, back);
    }

    #[test]
    fn graph_round_trip_is_exact() {
        let g = GeometricGraph::from_edges(pts(), [(0, 1), (1, 2)]).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(g.points(), back.points());
        let a: Vec<_> = g.edges().collect();
        let b: Vec<_> = back.edges().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_coordinate_is_named() {
        let err = point_set_from_json(r#"{"points": [["0","0"], ["1.2.3","0"]]}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("points[1]"), "{err}");
    }

    #[test]
    fn bad_edge_is_named() {
        let text = r#"{"points": [["0","0"], ["1","0"]], "edges": [[0,1],[1,1]]}"#;
        let err = graph_from_json(text).unwrap_err();
        assert!(err.to_string().starts_with("edges[1]"), "{err}");
    }

    #[test]
    fn lenient_reader_takes_both_shapes() {
        let set = point_set_to_json(&pts());
        let graph = graph_to_json(&GeometricGraph::new(pts()));
        assert_eq!(points_from_json_lenient(&set).unwrap(), pts());
        assert_eq!(points_from_json_lenient(&graph).unwrap(), pts());
    }
}
