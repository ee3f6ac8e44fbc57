//! Closed polygonal curves and the curve-level algebra (concatenation,
//! reversal, perturbation).

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coord::{intersect_segments, Coord, Point, Segment, SegmentIntersection};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("a closed curve needs at least 3 distinct consecutive vertices, got {0}")]
    TooFewVertices(usize),
    #[error("concatenation point {0} is not a vertex of both curves")]
    SharedPointNotAVertex(Box<Point>),
    #[error("perturbation kept collapsing consecutive vertices after {0} retries")]
    PerturbationCollapsed(usize),
}

/// A closed polygonal curve given by its vertex cycle. The segment from the
/// last vertex back to the first is implicit. Vertices may repeat (the curve
/// may self-intersect, touch itself, or retrace parts of its image), but
/// consecutive vertices are always distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonalCurve {
    vertices: Vec<Point>,
}

impl PolygonalCurve {
    /// Validate a raw vertex list: collapses consecutive duplicates (including
    /// a duplicated first/last pair) and requires at least 3 surviving vertices.
    pub fn new(raw: Vec<Point>) -> Result<Self, CurveError> {
        let mut vertices: Vec<Point> = Vec::with_capacity(raw.len());
        for p in raw {
            if vertices.last() != Some(&p) {
                vertices.push(p);
            }
        }
        while vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        if vertices.len() < 3 {
            return Err(CurveError::TooFewVertices(vertices.len()));
        }
        Ok(PolygonalCurve { vertices })
    }

    pub fn from_ints(raw: &[(i64, i64)]) -> Result<Self, CurveError> {
        Self::new(raw.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid curve always has vertices
    }

    /// The directed segments of the curve, in traversal order.
    pub fn segments(&self) -> Vec<Segment> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| Segment::new(self.vertices[i].clone(), self.vertices[(i + 1) % n].clone()))
            .collect()
    }

    /// Whether `p` lies on the image of the curve.
    pub fn contains_point(&self, p: &Point) -> bool {
        self.segments().iter().any(|s| s.contains(p))
    }

    /// All self-intersections of the curve: proper crossings and endpoint
    /// touches between non-adjacent segments, plus nondegenerate collinear
    /// overlaps between any pair of segments (a retraced edge overlaps its
    /// own neighbour). Shared endpoints of adjacent segments are the curve's
    /// own vertices and are not reported.
    pub fn self_intersections(&self) -> Vec<CurveIntersection> {
        let segs = self.segments();
        let n = segs.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                match intersect_segments(&segs[i], &segs[j]) {
                    SegmentIntersection::None => {}
                    SegmentIntersection::Point { at, .. } => {
                        if adjacent {
                            continue; // their shared vertex, not an intersection
                        }
                        out.push(CurveIntersection::Point {
                            at,
                            segments: (i, j),
                        });
                    }
                    SegmentIntersection::Overlap { from, to } => {
                        out.push(CurveIntersection::Overlap {
                            from,
                            to,
                            segments: (i, j),
                        });
                    }
                }
            }
        }
        out
    }

    /// Whether the curve is simple apart from its vertex cycle closing up:
    /// no reported self-intersections at all.
    pub fn is_simple(&self) -> bool {
        self.self_intersections().is_empty()
    }

    /// Rotate the vertex cycle so traversal starts at index `k`.
    pub fn rotate_start(&self, k: usize) -> PolygonalCurve {
        let n = self.vertices.len();
        let k = k % n;
        let mut vertices = Vec::with_capacity(n);
        vertices.extend_from_slice(&self.vertices[k..]);
        vertices.extend_from_slice(&self.vertices[..k]);
        PolygonalCurve { vertices }
    }

    /// The same image traversed in the opposite direction, starting from the
    /// same vertex. The word of the reversed curve is the reversed,
    /// sign-flipped word of the original.
    pub fn reverse(&self) -> PolygonalCurve {
        let mut vertices = vec![self.vertices[0].clone()];
        vertices.extend(self.vertices[1..].iter().rev().cloned());
        PolygonalCurve { vertices }
    }

    /// Concatenation at a shared vertex: traverse `self` from `shared`, then
    /// `other` from `shared`. Fails if `shared` is not a vertex of both.
    pub fn concatenate(
        &self,
        other: &PolygonalCurve,
        shared: &Point,
    ) -> Result<PolygonalCurve, CurveError> {
        let pos = |c: &PolygonalCurve| c.vertices.iter().position(|v| v == shared);
        let (i, j) = match (pos(self), pos(other)) {
            (Some(i), Some(j)) => (i, j),
            _ => return Err(CurveError::SharedPointNotAVertex(Box::new(shared.clone()))),
        };
        let a = self.rotate_start(i);
        let b = other.rotate_start(j);
        let mut vertices = a.vertices;
        vertices.extend(b.vertices);
        PolygonalCurve::new(vertices)
    }

    /// Deterministically perturb every vertex by an offset of magnitude
    /// (in the max norm) at most `delta`. Redraws with fresh offsets if a
    /// perturbation collapses consecutive vertices, up to a bounded number
    /// of retries.
    pub fn perturb(&self, delta: &Coord, seed: u64) -> Result<PolygonalCurve, CurveError> {
        if delta.is_zero() {
            return Ok(self.clone());
        }
        const GRID: i64 = 1024;
        const RETRIES: usize = 32;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RETRIES {
            let mut vertices = Vec::with_capacity(self.vertices.len());
            for v in &self.vertices {
                let mut offset = || {
                    let k: i64 = rng.gen_range(-GRID..=GRID);
                    delta * BigRational::new(k.into(), GRID.into())
                };
                vertices.push(Point::new(&v.x + offset(), &v.y + offset()));
            }
            if let Ok(curve) = PolygonalCurve::new(vertices) {
                if curve.len() == self.len() {
                    return Ok(curve);
                }
            }
        }
        Err(CurveError::PerturbationCollapsed(RETRIES))
    }

    /// Apply an exact affine map `p -> M p + t` to every vertex.
    pub fn map_affine(&self, m: &[[Coord; 2]; 2], t: &Point) -> PolygonalCurve {
        let vertices = self
            .vertices
            .iter()
            .map(|p| {
                Point::new(
                    &m[0][0] * &p.x + &m[0][1] * &p.y + &t.x,
                    &m[1][0] * &p.x + &m[1][1] * &p.y + &t.y,
                )
            })
            .collect();
        PolygonalCurve { vertices }
    }

    /// Axis-aligned bounding box as (min corner, max corner).
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = self.vertices[0].clone();
        let mut max = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }

    /// Rational stand-in for the diameter: the larger bounding-box extent.
    /// Within a factor of sqrt(2) of the Euclidean diameter.
    pub fn diameter_bound(&self) -> Coord {
        let (min, max) = self.bounding_box();
        let w = &max.x - &min.x;
        let h = &max.y - &min.y;
        if w > h {
            w
        } else {
            h
        }
    }

    /// Rational stand-in for the perimeter: the taxicab length of the cycle.
    /// Always at least the Euclidean length.
    pub fn taxicab_perimeter(&self) -> Coord {
        self.segments()
            .iter()
            .map(|s| {
                let d = s.direction();
                d.x.abs() + d.y.abs()
            })
            .sum()
    }
}

/// One self-intersection feature of a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveIntersection {
    /// A point shared by two non-adjacent segments (a proper crossing or an
    /// endpoint touch).
    Point { at: Point, segments: (usize, usize) },
    /// A nondegenerate collinear overlap.
    Overlap {
        from: Point,
        to: Point,
        segments: (usize, usize),
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn square() -> PolygonalCurve {
        PolygonalCurve::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap()
    }

    pub(crate) fn bowtie() -> PolygonalCurve {
        PolygonalCurve::from_ints(&[(0, 0), (2, 2), (2, 0), (0, 2)]).unwrap()
    }

    pub(crate) fn out_and_back() -> PolygonalCurve {
        PolygonalCurve::from_ints(&[(0, 0), (2, 0), (0, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn well_formed_square() {
        assert_eq!(square().len(), 4);
    }

    #[test]
    fn consecutive_duplicates_collapse() {
        let c = PolygonalCurve::from_ints(&[(0, 0), (0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(c.len(), 3);
        // A duplicated closing vertex collapses too.
        let c = PolygonalCurve::from_ints(&[(0, 0), (1, 0), (0, 1), (0, 0)]).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn too_few_vertices_rejected() {
        assert_eq!(
            PolygonalCurve::from_ints(&[(0, 0), (1, 0)]),
            Err(CurveError::TooFewVertices(2))
        );
        assert!(matches!(
            PolygonalCurve::from_ints(&[(1, 1), (1, 1), (1, 1)]),
            Err(CurveError::TooFewVertices(1))
        ));
    }

    #[test]
    fn bowtie_has_one_proper_crossing() {
        let hits = bowtie().self_intersections();
        assert_eq!(
            hits,
            vec![CurveIntersection::Point {
                at: Point::from_ints(1, 1),
                segments: (0, 2),
            }]
        );
    }

    #[test]
    fn square_is_simple() {
        assert!(square().is_simple());
    }

    #[test]
    fn out_and_back_reports_overlaps() {
        let hits = out_and_back().self_intersections();
        let overlaps: Vec<_> = hits
            .iter()
            .filter_map(|h| match h {
                CurveIntersection::Overlap { from, to, segments } => {
                    Some((from.clone(), to.clone(), *segments))
                }
                _ => None,
            })
            .collect();
        assert!(overlaps.contains(&(
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            (0usize, 1usize)
        )));
        assert!(overlaps.contains(&(
            Point::from_ints(0, 0),
            Point::from_ints(0, 2),
            (2usize, 3usize)
        )));
        // No proper crossings, only the revisited base vertex touches.
        for h in &hits {
            if let CurveIntersection::Point { at, .. } = h {
                assert_eq!(*at, Point::from_ints(0, 0));
            }
        }
    }

    #[test]
    fn concatenate_two_squares_at_corner() {
        let a = square();
        let b = PolygonalCurve::from_ints(&[(0, 0), (-3, 0), (-3, -3), (0, -3)]).unwrap();
        let c = a.concatenate(&b, &Point::from_ints(0, 0)).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(
            a.concatenate(&b, &Point::from_ints(9, 9)),
            Err(CurveError::SharedPointNotAVertex(Box::new(
                Point::from_ints(9, 9)
            )))
        );
    }

    #[test]
    fn reverse_keeps_start_vertex() {
        let r = square().reverse();
        assert_eq!(
            r.vertices(),
            &[
                Point::from_ints(0, 0),
                Point::from_ints(0, 4),
                Point::from_ints(4, 4),
                Point::from_ints(4, 0),
            ]
        );
    }

    #[test]
    fn perturb_zero_is_identity() {
        let c = square();
        assert_eq!(c.perturb(&Coord::zero(), 7).unwrap(), c);
    }

    #[test]
    fn perturb_moves_within_delta() {
        let c = square();
        let delta = BigRational::new(1.into(), 100.into());
        let p = c.perturb(&delta, 7).unwrap();
        assert_eq!(p.len(), c.len());
        for (a, b) in c.vertices().iter().zip(p.vertices()) {
            assert!((&a.x - &b.x).abs() <= delta);
            assert!((&a.y - &b.y).abs() <= delta);
        }
        // Deterministic for a fixed seed.
        assert_eq!(p, c.perturb(&delta, 7).unwrap());
    }
}
