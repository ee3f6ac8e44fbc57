//! Deterministic generators of test curves for the randomized suites.
//!
//! Everything here is seeded and exact; the generators are used both by unit
//! tests and by the acceptance suite, so they live in the library proper.

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::coord::{cross, Coord, Point};
use crate::curve::PolygonalCurve;

/// Signed shoelace area of the vertex cycle (positive for counterclockwise).
pub fn shoelace_area(curve: &PolygonalCurve) -> Coord {
    let vs = curve.vertices();
    let n = vs.len();
    let two_a: Coord = (0..n).map(|i| cross(&vs[i], &vs[(i + 1) % n])).sum();
    two_a / Coord::from_integer(2.into())
}

/// A random polygon on small rational coordinates that is exactly simple
/// (verified with the exact intersection tests). Candidates are sampled as
/// radial jitters around a circle; the occasional self-touching candidate is
/// rejected, so the function may return `None` and should be retried.
pub fn random_simple_polygon(rng: &mut ChaCha8Rng) -> Option<PolygonalCurve> {
    let k = rng.gen_range(4..=9);
    // Slopes t parameterize rational points ((1-t^2), 2t)/(1+t^2) on the
    // circle; sorting by t sorts by angle on its upper-opening sweep.
    let mut slopes: Vec<i64> = Vec::new();
    while slopes.len() < k {
        let t = rng.gen_range(-30..=30);
        if !slopes.contains(&t) {
            slopes.push(t);
        }
    }
    slopes.sort_unstable();
    let mut vertices = Vec::with_capacity(k);
    for t in slopes {
        let t = BigRational::new(t.into(), 10.into());
        let denom = Coord::from_integer(1.into()) + &t * &t;
        let x = (Coord::from_integer(1.into()) - &t * &t) / denom.clone();
        let y = Coord::from_integer(2.into()) * &t / denom;
        let r = BigRational::new(rng.gen_range(2..=9).into(), 2.into());
        vertices.push(Point::new(&x * &r, &y * &r));
    }
    let curve = PolygonalCurve::new(vertices).ok()?;
    if curve.len() == k && curve.is_simple() {
        Some(curve)
    } else {
        None
    }
}

/// A random closed polygonal curve on a small integer grid; self
/// intersections, overlaps and revisited vertices are all welcome.
pub fn random_curve(rng: &mut ChaCha8Rng, max_vertices: usize) -> Option<PolygonalCurve> {
    let len = rng.gen_range(3..=max_vertices.max(3));
    let raw: Vec<(i64, i64)> = (0..len)
        .map(|_| (rng.gen_range(-5..=5), rng.gen_range(-5..=5)))
        .collect();
    PolygonalCurve::from_ints(&raw).ok()
}

/// Insert an out-and-back spur at vertex `at`, pointing to `tip`. The spur
/// retraces itself, so it never changes the spanning area. Returns `None`
/// when the tip coincides with the chosen vertex.
pub fn attach_spur(
    curve: &PolygonalCurve,
    at: usize,
    tip: (i64, i64),
) -> Option<PolygonalCurve> {
    let tip = Point::from_ints(tip.0, tip.1);
    let at = at % curve.len();
    if curve.vertices()[at] == tip {
        return None;
    }
    let mut vertices: Vec<Point> = Vec::with_capacity(curve.len() + 2);
    for (i, v) in curve.vertices().iter().enumerate() {
        vertices.push(v.clone());
        if i == at {
            vertices.push(tip.clone());
            vertices.push(v.clone());
        }
    }
    PolygonalCurve::new(vertices).ok()
}

/// A retraced random tree: radial branches from the origin, each walked out
/// and back (optionally with a collinear extension). Distinct rays meet only
/// at the origin, so the image is always a tree, the complement stays
/// connected, and such curves span zero area.
pub fn random_tree_curve(rng: &mut ChaCha8Rng) -> Option<PolygonalCurve> {
    let branches = rng.gen_range(2..=4);
    let base = Point::from_ints(0, 0);
    let mut vertices = vec![base.clone()];
    for _ in 0..branches {
        let x = rng.gen_range(-5..=5i64);
        let y = rng.gen_range(-5..=5i64);
        if (x, y) == (0, 0) {
            continue;
        }
        vertices.push(Point::from_ints(x, y));
        if rng.gen_bool(0.5) {
            // Extend along the same ray, then retrace.
            vertices.push(Point::from_ints(2 * x, 2 * y));
            vertices.push(Point::from_ints(x, y));
        }
        vertices.push(base.clone());
    }
    vertices.pop(); // the cycle closes back to the base implicitly
    PolygonalCurve::new(vertices).ok()
}

/// A random positive rational with small numerator and denominator.
pub fn random_weight(rng: &mut ChaCha8Rng) -> Coord {
    BigRational::new(rng.gen_range(1..=40).into(), rng.gen_range(1..=8).into())
}

/// A random word over `gens` generators, up to `max_len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> crate::word::Word {
    use crate::word::{Letter, Sign};
    let len = rng.gen_range(0..=max_len);
    crate::word::Word::new(
        (0..len)
            .map(|_| Letter {
                gen: rng.gen_range(0..gens),
                sign: if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg },
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::SeedableRng;

    #[test]
    fn simple_polygons_are_simple_and_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut produced = 0;
        for _ in 0..200 {
            if let Some(c) = random_simple_polygon(&mut rng) {
                assert!(c.is_simple());
                assert!(!shoelace_area(&c).is_zero());
                produced += 1;
            }
        }
        assert!(produced >= 100, "generator should mostly succeed");
    }

    #[test]
    fn trees_have_no_bounded_faces() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut produced = 0;
        for _ in 0..40 {
            if let Some(c) = random_tree_curve(&mut rng) {
                let arr = crate::arrangement::build_arrangement(&c);
                assert_eq!(arr.bounded_face_count(), 0, "{:?}", c.vertices());
                produced += 1;
            }
        }
        assert!(produced > 10);
    }
}
