//! Exact planar arrangement of the image of a polygonal curve.
//!
//! The image set is cut at every pairwise segment intersection, retraced and
//! overlapping collinear pieces are merged into single edges (the arrangement
//! depends only on the point set, not on the traversal), and faces are read
//! off a rotation system: at each vertex the outgoing half-edges are sorted
//! by exact angle, and every face is traced as the closed walk keeping the
//! face on its left. With a connected image every face corresponds to exactly
//! one walk, bounded faces come out counterclockwise (positive shoelace sum),
//! and the single non-positive walk bounds the unbounded face.
//!
//! Bounded faces are ordered by area descending (ties by smallest boundary
//! vertex) so that faces, generators and truncations are deterministic.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::coord::{angle_cmp, cross, dot, Coord, Point, Segment, SegmentIntersection};
use crate::coord::intersect_segments;
use crate::curve::PolygonalCurve;

/// An undirected arrangement edge between two vertices, remembering which
/// original curve segments run along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub endpoints: (usize, usize),
    pub provenance: Vec<usize>,
}

/// A face of the subdivision. The boundary walk lists half-edge ids with the
/// face on the left; spur edges appear twice (once per direction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Exact Lebesgue measure for bounded faces, zero for the unbounded one.
    pub area: Coord,
    pub is_unbounded: bool,
    /// A point strictly inside the face.
    pub representative: Point,
    pub walk: Vec<usize>,
}

/// Result of exact point location.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    InFace(usize),
    OnBoundary,
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    /// Bounded faces first (area descending), the unbounded face last.
    faces: Vec<Face>,
    unbounded_face: usize,
}

impl Arrangement {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn bounded_faces(&self) -> &[Face] {
        &self.faces[..self.unbounded_face]
    }

    pub fn bounded_face_count(&self) -> usize {
        self.unbounded_face
    }

    pub fn unbounded_face(&self) -> usize {
        self.unbounded_face
    }

    pub fn bounded_areas(&self) -> Vec<Coord> {
        self.bounded_faces().iter().map(|f| f.area.clone()).collect()
    }

    fn half_origin(&self, h: usize) -> usize {
        let e = &self.edges[h / 2];
        if h.is_multiple_of(2) {
            e.endpoints.0
        } else {
            e.endpoints.1
        }
    }

    fn half_target(&self, h: usize) -> usize {
        self.half_origin(h ^ 1)
    }

    /// The vertices visited by a face walk, in order.
    pub fn walk_points(&self, face: &Face) -> Vec<Point> {
        face.walk
            .iter()
            .map(|&h| self.vertices[self.half_origin(h)].clone())
            .collect()
    }

    /// Whether `p` lies on the arrangement's edge set (the curve image).
    pub fn on_boundary(&self, p: &Point) -> bool {
        self.edges.iter().any(|e| {
            Segment::new(
                self.vertices[e.endpoints.0].clone(),
                self.vertices[e.endpoints.1].clone(),
            )
            .contains(p)
        })
    }

    /// Winding number of a face's boundary walk around `p` (not on the walk).
    /// For a bounded face this is 1 exactly when `p` is inside it.
    fn walk_winding(&self, face: &Face, p: &Point) -> i64 {
        let mut winding = 0i64;
        for &h in &face.walk {
            let a = &self.vertices[self.half_origin(h)];
            let b = &self.vertices[self.half_target(h)];
            if a.y <= p.y {
                if b.y > p.y && crate::coord::orient(a, b, p).is_positive() {
                    winding += 1;
                }
            } else if b.y <= p.y && crate::coord::orient(a, b, p).is_negative() {
                winding -= 1;
            }
        }
        winding
    }

    /// Exact point location: the containing face, or `OnBoundary` if `p`
    /// lies on the curve image.
    pub fn locate_point(&self, p: &Point) -> PointLocation {
        if self.on_boundary(p) {
            return PointLocation::OnBoundary;
        }
        for f in self.bounded_faces() {
            let w = self.walk_winding(f, p);
            if w != 0 {
                debug_assert_eq!(w, 1);
                return PointLocation::InFace(f.id);
            }
        }
        PointLocation::InFace(self.unbounded_face)
    }

    /// Number of connected components of the edge graph. One for every
    /// arrangement built from a single closed curve.
    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (
                find(&mut parent, e.endpoints.0),
                find(&mut parent, e.endpoints.1),
            );
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.vertices.len())
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    /// Walk signed areas must sum to zero: every edge is traversed once in
    /// each direction across all walks.
    pub fn walk_area_sum(&self) -> Coord {
        self.faces
            .iter()
            .map(|f| self.signed_walk_area(&f.walk))
            .sum()
    }

    fn signed_walk_area(&self, walk: &[usize]) -> Coord {
        let two_a: Coord = walk
            .iter()
            .map(|&h| {
                cross(
                    &self.vertices[self.half_origin(h)],
                    &self.vertices[self.half_target(h)],
                )
            })
            .sum();
        two_a / Coord::from_integer(2.into())
    }
}

/// Parameter of `p` along segment `s` (0 at `s.a`, 1 at `s.b`); `p` must lie
/// on the supporting line.
fn param_on(s: &Segment, p: &Point) -> Coord {
    let d = s.direction();
    dot(&p.sub(&s.a), &d) / dot(&d, &d)
}

/// Build the planar subdivision induced by the curve's image.
pub fn build_arrangement(curve: &PolygonalCurve) -> Arrangement {
    let segs = curve.segments();
    let n = segs.len();

    // Cut parameters per original segment: endpoints plus every pairwise
    // intersection feature (points, touches, overlap ends). Adjacent pairs
    // participate too: a backtracking curve overlaps its own neighbour.
    let mut params: Vec<std::collections::BTreeSet<Coord>> = (0..n)
        .map(|_| {
            let mut s = std::collections::BTreeSet::new();
            s.insert(Coord::zero());
            s.insert(Coord::from_integer(1.into()));
            s
        })
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            match intersect_segments(&segs[i], &segs[j]) {
                SegmentIntersection::None => {}
                SegmentIntersection::Point { at, .. } => {
                    params[i].insert(param_on(&segs[i], &at));
                    params[j].insert(param_on(&segs[j], &at));
                }
                SegmentIntersection::Overlap { from, to } => {
                    for p in [&from, &to] {
                        params[i].insert(param_on(&segs[i], p));
                        params[j].insert(param_on(&segs[j], p));
                    }
                }
            }
        }
    }

    // Sub-segments, with vertex ids assigned in point order and overlapping
    // pieces merged through the normalized endpoint-pair key.
    let mut point_set: std::collections::BTreeSet<Point> = std::collections::BTreeSet::new();
    let mut pieces: Vec<(Point, Point, usize)> = Vec::new();
    for (i, seg) in segs.iter().enumerate() {
        let ts: Vec<&Coord> = params[i].iter().collect();
        for w in ts.windows(2) {
            let p = seg.eval(w[0]);
            let q = seg.eval(w[1]);
            point_set.insert(p.clone());
            point_set.insert(q.clone());
            pieces.push((p, q, i));
        }
    }
    let vertices: Vec<Point> = point_set.into_iter().collect();
    let vid: BTreeMap<&Point, usize> = vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (p, q, origin) in &pieces {
        let (a, b) = (vid[p], vid[q]);
        let key = (a.min(b), a.max(b));
        edge_map.entry(key).or_default().push(*origin);
    }
    let edges: Vec<Edge> = edge_map
        .into_iter()
        .map(|(endpoints, mut provenance)| {
            provenance.sort_unstable();
            provenance.dedup();
            Edge {
                endpoints,
                provenance,
            }
        })
        .collect();

    // Rotation system: outgoing half-edges per vertex, sorted by angle.
    let half_count = edges.len() * 2;
    let origin_of = |h: usize| -> usize {
        let e = &edges[h / 2];
        if h.is_multiple_of(2) {
            e.endpoints.0
        } else {
            e.endpoints.1
        }
    };
    let target_of = |h: usize| -> usize { origin_of(h ^ 1) };
    let mut rings: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for h in 0..half_count {
        rings[origin_of(h)].push(h);
    }
    for (v, ring) in rings.iter_mut().enumerate() {
        ring.sort_by(|&h1, &h2| {
            let d1 = vertices[target_of(h1)].sub(&vertices[v]);
            let d2 = vertices[target_of(h2)].sub(&vertices[v]);
            angle_cmp(&d1, &d2)
        });
    }
    let mut ring_pos = vec![0usize; half_count];
    for ring in &rings {
        for (idx, &h) in ring.iter().enumerate() {
            ring_pos[h] = idx;
        }
    }
    // next(h): at the target vertex, step one position clockwise from the
    // twin. This keeps the face on the left of every half-edge.
    let next = |h: usize| -> usize {
        let ring = &rings[target_of(h)];
        let pos = ring_pos[h ^ 1];
        ring[(pos + ring.len() - 1) % ring.len()]
    };

    // Trace the face walks and their exact signed areas.
    let mut visited = vec![false; half_count];
    let mut walks: Vec<(Vec<usize>, Coord)> = Vec::new();
    for start in 0..half_count {
        if visited[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut two_area = Coord::zero();
        let mut h = start;
        loop {
            visited[h] = true;
            walk.push(h);
            two_area += cross(&vertices[origin_of(h)], &vertices[target_of(h)]);
            h = next(h);
            if h == start {
                break;
            }
        }
        walks.push((walk, two_area / Coord::from_integer(2.into())));
    }

    // A connected image yields exactly one walk of non-positive signed area:
    // the unbounded face. Everything else is a bounded counterclockwise face.
    let mut bounded: Vec<(Vec<usize>, Coord)> = Vec::new();
    let mut outer: Option<Vec<usize>> = None;
    for (walk, area) in walks {
        if area.is_positive() {
            bounded.push((walk, area));
        } else {
            assert!(
                outer.is_none(),
                "a closed curve's arrangement has a single outer walk"
            );
            outer = Some(walk);
        }
    }
    let outer = outer.expect("arrangement always has an unbounded face");
    bounded.sort_by(|(wa, a), (wb, b)| {
        b.cmp(a)
            .then_with(|| {
                let min_vertex = |w: &[usize]| w.iter().map(|&h| &vertices[origin_of(h)]).min();
                min_vertex(wa).cmp(&min_vertex(wb))
            })
            .then_with(|| wa.iter().min().cmp(&wb.iter().min()))
    });

    let mut arrangement = Arrangement {
        vertices,
        edges,
        faces: Vec::new(),
        unbounded_face: bounded.len(),
    };
    for (id, (walk, area)) in bounded.into_iter().enumerate() {
        let representative = interior_point(&arrangement, &walk);
        arrangement.faces.push(Face {
            id,
            area,
            is_unbounded: false,
            representative,
            walk,
        });
    }
    // The unbounded face gets a representative strictly outside the hull.
    let outside = {
        let mut max = arrangement.vertices[0].clone();
        for v in &arrangement.vertices {
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        Point::new(
            max.x + Coord::from_integer(1.into()),
            max.y + Coord::from_integer(1.into()),
        )
    };
    arrangement.faces.push(Face {
        id: arrangement.unbounded_face,
        area: Coord::zero(),
        is_unbounded: true,
        representative: outside,
        walk: outer,
    });
    arrangement
}

/// A point strictly inside the bounded face traced by `walk`: step off the
/// midpoint of a boundary half-edge towards the face side (the left), half
/// way to the first re-encounter with the edge set.
fn interior_point(arr: &Arrangement, walk: &[usize]) -> Point {
    let h = *walk.iter().min().expect("walks are nonempty");
    let a = &arr.vertices[arr.half_origin(h)];
    let b = &arr.vertices[arr.half_target(h)];
    let half = Coord::new(1.into(), 2.into());
    let mid = a.add(&b.sub(a).scale(&half));
    let normal = b.sub(a).perp();

    let mut first_hit: Option<Coord> = None;
    let mut consider = |t: Coord| {
        if t.is_positive() && first_hit.as_ref().is_none_or(|best| t < *best) {
            first_hit = Some(t);
        }
    };
    let nn = dot(&normal, &normal);
    for v in &arr.vertices {
        let dv = v.sub(&mid);
        if cross(&normal, &dv).is_zero() {
            consider(dot(&normal, &dv) / nn.clone());
        }
    }
    for e in &arr.edges {
        let p = &arr.vertices[e.endpoints.0];
        let q = &arr.vertices[e.endpoints.1];
        let d = q.sub(p);
        let denom = cross(&normal, &d);
        if denom.is_zero() {
            continue; // parallel: any collinear endpoints were handled above
        }
        let pm = p.sub(&mid);
        let t = cross(&pm, &d) / denom.clone();
        let s = cross(&pm, &normal) / denom;
        if s.is_positive() && s < Coord::from_integer(1.into()) {
            consider(t);
        }
    }
    let t = first_hit.expect("a bounded face closes around its interior ray") * half;
    mid.add(&normal.scale(&t))
}
