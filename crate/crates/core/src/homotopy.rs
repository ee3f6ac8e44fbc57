//! From geometry to group theory: read the curve's class in the free group
//! of the punctured plane off its crossings with one ray per bounded face.
//!
//! Each ray is anchored at a face's representative point and chosen so that
//! it passes through no arrangement vertex, is parallel to no curve segment,
//! meets no other representative point, and shares no point of the curve
//! image with a previously chosen ray. Under those rules every crossing is
//! transversal at a distinct curve parameter, so the crossing sequence is a
//! well-defined word: crossing ray `i` contributes the letter `i` with the
//! sign of the determinant of (ray direction, segment direction).

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::coord::{cross, dot, Coord, Point};
use crate::curve::PolygonalCurve;
use crate::word::{Letter, Sign, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("winding number is undefined on the curve image: {0}")]
    PointOnCurve(Box<Point>),
    #[error("ray {0} is parallel to curve segment {1}")]
    RayParallelToSegment(usize, usize),
    #[error("ray {0} passes through a curve vertex or self-intersection")]
    RayThroughVertex(usize),
}

/// A ray anchored inside a bounded face, dual to that face's generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub origin: Point,
    pub direction: Point,
}

impl Ray {
    /// Whether `p` lies on the closed ray.
    fn contains(&self, p: &Point) -> bool {
        let d = p.sub(&self.origin);
        cross(&self.direction, &d).is_zero() && !dot(&self.direction, &d).is_negative()
    }
}

/// Enumerate candidate directions `(1, q)` over rational slopes `q` in a
/// fixed order: 0, then by increasing max(|numerator|, denominator).
fn candidate_directions() -> impl Iterator<Item = Point> {
    (0i64..).flat_map(|height| {
        let mut out = Vec::new();
        if height == 0 {
            out.push(Coord::zero());
        } else {
            for (num, den) in (1..=height).map(|n| (n, height)).chain(
                (1..height).map(|d| (height, d)),
            ) {
                if num_integer::gcd(num, den) != 1 {
                    continue;
                }
                out.push(Coord::new(num.into(), den.into()));
                out.push(Coord::new((-num).into(), den.into()));
            }
        }
        out.into_iter()
            .map(|q| Point::new(Coord::from_integer(1.into()), q))
    })
}

/// Choose one admissible ray per bounded face, deterministically: for each
/// face take the first candidate direction satisfying all exclusion rules.
/// Setting `skip` to `k` takes the `(k+1)`-th admissible direction instead,
/// which is how the tests exercise alternative valid choices.
pub fn choose_rays_skipping(
    arr: &Arrangement,
    curve: &PolygonalCurve,
    skip: usize,
) -> Vec<Ray> {
    let segment_dirs: Vec<Point> = curve.segments().iter().map(|s| s.direction()).collect();
    let reps: Vec<Point> = arr
        .bounded_faces()
        .iter()
        .map(|f| f.representative.clone())
        .collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(reps.len());
    for (i, origin) in reps.iter().enumerate() {
        let mut remaining = skip;
        let mut chosen = None;
        for direction in candidate_directions() {
            let ray = Ray {
                origin: origin.clone(),
                direction,
            };
            if !ray_admissible(&ray, i, arr, &segment_dirs, &reps, &rays, curve) {
                continue;
            }
            if remaining > 0 {
                remaining -= 1;
                continue;
            }
            chosen = Some(ray);
            break;
        }
        rays.push(chosen.expect("only finitely many directions are excluded"));
    }
    rays
}

/// The default deterministic ray family.
pub fn choose_rays(arr: &Arrangement, curve: &PolygonalCurve) -> Vec<Ray> {
    choose_rays_skipping(arr, curve, 0)
}

fn ray_admissible(
    ray: &Ray,
    face: usize,
    arr: &Arrangement,
    segment_dirs: &[Point],
    reps: &[Point],
    earlier: &[Ray],
    curve: &PolygonalCurve,
) -> bool {
    // No arrangement vertex on the ray (curve vertices, self-intersections
    // and split points all are arrangement vertices).
    if arr.vertices().iter().any(|v| ray.contains(v)) {
        return false;
    }
    // Parallel to no curve segment: every crossing is transversal.
    if segment_dirs
        .iter()
        .any(|d| cross(&ray.direction, d).is_zero())
    {
        return false;
    }
    // Through no other face's representative point.
    if reps
        .iter()
        .enumerate()
        .any(|(j, p)| j != face && ray.contains(p))
    {
        return false;
    }
    // No point of the curve image lies on two rays; otherwise two crossings
    // could share a curve parameter and the letter order would be ambiguous.
    for other in earlier {
        let denom = cross(&ray.direction, &other.direction);
        if denom.is_zero() {
            continue; // parallel rays from distinct origins never meet twice
        }
        let qp = other.origin.sub(&ray.origin);
        let t = cross(&qp, &other.direction) / denom.clone();
        let u = cross(&qp, &ray.direction) / denom;
        if t.is_positive() && u.is_positive() {
            let meet = ray.origin.add(&ray.direction.scale(&t));
            if curve.contains_point(&meet) {
                return false;
            }
        }
    }
    true
}

/// Walk the curve from its first vertex and record every transversal ray
/// crossing as a letter, ordered by curve parameter. The result represents
/// the curve's conjugacy class in the free group on the bounded faces.
pub fn crossing_word(curve: &PolygonalCurve, rays: &[Ray]) -> Result<Word, HomotopyError> {
    let mut letters = Vec::new();
    for (si, seg) in curve.segments().iter().enumerate() {
        let s = seg.direction();
        // Crossings of this segment, keyed by the parameter along it.
        let mut hits: Vec<(Coord, Letter)> = Vec::new();
        for (gen, ray) in rays.iter().enumerate() {
            let denom = cross(&ray.direction, &s);
            if denom.is_zero() {
                return Err(HomotopyError::RayParallelToSegment(gen, si));
            }
            let ap = seg.a.sub(&ray.origin);
            // seg.a + u*s = origin + t*dir
            let u = cross(&ray.direction, &ap) / -denom.clone();
            let t = cross(&s, &ap) / -denom.clone();
            let one = Coord::from_integer(1.into());
            if u.is_negative() || u > one || t.is_negative() {
                continue; // off the segment, or behind the ray origin
            }
            if t.is_zero() {
                return Err(HomotopyError::PointOnCurve(Box::new(ray.origin.clone())));
            }
            if u.is_zero() || u == one {
                return Err(HomotopyError::RayThroughVertex(gen));
            }
            let sign = if denom.is_positive() {
                Sign::Pos
            } else {
                Sign::Neg
            };
            hits.push((u, Letter { gen, sign }));
        }
        hits.sort_by(|(u1, _), (u2, _)| u1.cmp(u2));
        debug_assert!(
            hits.windows(2).all(|w| w[0].0 != w[1].0),
            "distinct rays never meet the curve at one point"
        );
        letters.extend(hits.into_iter().map(|(_, l)| l));
    }
    Ok(Word::new(letters))
}

/// Exact winding number of the curve around `z`, summed from signed
/// horizontal-ray crossings with the half-open vertex rule. Errors if `z`
/// lies on the curve image.
pub fn winding_integral(curve: &PolygonalCurve, z: &Point) -> Result<i64, HomotopyError> {
    if curve.contains_point(z) {
        return Err(HomotopyError::PointOnCurve(Box::new(z.clone())));
    }
    let mut winding = 0i64;
    for seg in curve.segments() {
        let (a, b) = (&seg.a, &seg.b);
        if a.y <= z.y {
            if b.y > z.y && crate::coord::orient(a, b, z).is_positive() {
                winding += 1;
            }
        } else if b.y <= z.y && crate::coord::orient(a, b, z).is_negative() {
            winding -= 1;
        }
    }
    Ok(winding)
}

/// Winding number about face `gen` read from the word: the exponent sum of
/// the face's generator.
pub fn winding_from_word(word: &Word, gen: usize) -> i64 {
    word.exponent_sum(gen)
}
