//! Points in the rational plane and the primitive predicates on them.

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::fmt;

/// A point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    /// Exact conversion from doubles (doubles are dyadic rationals).
    pub fn from_f64s(x: f64, y: f64) -> Option<Self> {
        Some(Point2::new(
            Scalar::from_f64_exact(x)?,
            Scalar::from_f64_exact(y)?,
        ))
    }

    /// Exact squared Euclidean distance.
    pub fn squared_distance(&self, other: &Point2) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        dx.square() + dy.square()
    }

    /// Euclidean distance as a double (the squared form stays exact).
    pub fn distance(&self, other: &Point2) -> f64 {
        self.squared_distance(other).sqrt_f64()
    }

    /// Exact Euclidean distance when the squared distance is a perfect
    /// square (axis-parallel segments, scaled 3-4-5 triangles, ...).
    pub fn distance_exact(&self, other: &Point2) -> Option<Scalar> {
        self.squared_distance(other).sqrt_exact()
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the ordered triple `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

/// Exact orientation test via the sign of the cross product
/// `(b - a) x (c - a)`; pure rational arithmetic, no rounding.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    match lhs.cmp(&rhs) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Less => Orientation::Clockwise,
    }
}

/// True iff `p` lies strictly inside the open segment `(a, b)`.
pub fn on_open_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    if orient2d(a, b, p) != Orientation::Collinear {
        return false;
    }
    // Collinear: compare along the dominant axis to decide strict betweenness.
    let (lo, hi, v) = if a.x != b.x {
        if a.x < b.x {
            (&a.x, &b.x, &p.x)
        } else {
            (&b.x, &a.x, &p.x)
        }
    } else if a.y < b.y {
        (&a.y, &b.y, &p.y)
    } else {
        (&b.y, &a.y, &p.y)
    };
    lo < v && v < hi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn distances() {
        assert_eq!(p(0, 0).distance(&p(3, 4)), 5.0);
        assert_eq!(
            p(0, 0).squared_distance(&p(1, 1)),
            Scalar::from_int(2)
        );
        assert_eq!(
            p(0, 0).distance_exact(&p(3, 4)).unwrap(),
            Scalar::from_int(5)
        );
        assert!(p(0, 0).distance_exact(&p(1, 1)).is_none());
        // Scaled 3-4-5: apex of a gadget triangle sits at rational distance.
        let apex = Point2::new(Scalar::from_int(1), Scalar::from_ratio(4, 3));
        assert_eq!(
            p(0, 0).distance_exact(&apex).unwrap(),
            Scalar::from_ratio(5, 3)
        );
    }

    #[test]
    fn orientation() {
        assert_eq!(
            orient2d(&p(0, 0), &p(1, 0), &p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orient2d(&p(0, 0), &p(0, 1), &p(1, 0)),
            Orientation::Clockwise
        );
        assert_eq!(
            orient2d(&p(0, 0), &p(1, 1), &p(2, 2)),
            Orientation::Collinear
        );
    }

    #[test]
    fn open_segment_membership() {
        assert!(on_open_segment(&p(1, 1), &p(0, 0), &p(2, 2)));
        assert!(!on_open_segment(&p(0, 0), &p(0, 0), &p(2, 2)));
        assert!(!on_open_segment(&p(2, 2), &p(0, 0), &p(2, 2)));
        assert!(!on_open_segment(&p(3, 3), &p(0, 0), &p(2, 2)));
        assert!(!on_open_segment(&p(1, 2), &p(0, 0), &p(2, 2)));
        // Vertical segment.
        assert!(on_open_segment(&p(0, 1), &p(0, 0), &p(0, 3)));
    }
}
