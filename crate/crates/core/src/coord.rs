//! Exact rational coordinates and the predicates built on them.
//!
//! Every geometric decision in this crate reduces to sign computations on
//! `Coord` values, so there is no epsilon anywhere: two points are equal,
//! collinear, or they are not.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps itself in canonical form
/// (reduced fraction, positive denominator).
pub type Coord = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoordParseError {
    #[error("empty coordinate")]
    Empty,
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("cannot parse `{0}` as an integer, decimal or p/q rational")]
    Malformed(String),
}

/// Parse an exact coordinate from `-12`, `3.25`, or `p/q` notation.
pub fn parse_coord(s: &str) -> Result<Coord, CoordParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(CoordParseError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|_| CoordParseError::Malformed(s.to_string()))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|_| CoordParseError::Malformed(s.to_string()))?;
        if d.is_zero() {
            return Err(CoordParseError::ZeroDenominator(s.to_string()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CoordParseError::Malformed(s.to_string()));
        }
        let (sign, digits) = match int_part.as_bytes().first() {
            Some(b'-') => (-BigInt::one(), &int_part[1..]),
            Some(b'+') => (BigInt::one(), &int_part[1..]),
            _ => (BigInt::one(), int_part),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CoordParseError::Malformed(s.to_string()));
        }
        let whole = if digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(digits).map_err(|_| CoordParseError::Malformed(s.to_string()))?
        };
        let frac = BigInt::from_str(frac_part)
            .map_err(|_| CoordParseError::Malformed(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = whole * &scale + frac;
        return Ok(BigRational::new(sign * numer, scale));
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|_| CoordParseError::Malformed(s.to_string()))
}

/// Canonical `p/q` form, denominator always written (`16` prints as `16/1`).
pub fn format_coord(c: &Coord) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// A point (or a direction vector) in the exact rational plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    /// Convenience constructor from integers, mostly for tests and fixtures.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, factor: &Coord) -> Point {
        Point::new(&self.x * factor, &self.y * factor)
    }

    /// Counterclockwise perpendicular (-y, x).
    pub fn perp(&self) -> Point {
        Point::new(-self.y.clone(), self.x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_coord(&self.x), format_coord(&self.y))
    }
}

/// 2D cross product of vectors `a` and `b`.
pub fn cross(a: &Point, b: &Point) -> Coord {
    &a.x * &b.y - &a.y * &b.x
}

/// Dot product of vectors `a` and `b`.
pub fn dot(a: &Point, b: &Point) -> Coord {
    &a.x * &b.x + &a.y * &b.y
}

/// Orientation of `c` relative to the directed line `a -> b`:
/// positive if `c` is strictly left, negative if strictly right, zero if collinear.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Coord {
    cross(&b.sub(a), &c.sub(a))
}

/// Total order of nonzero direction vectors by angle in `[0, 2*pi)`,
/// with angle 0 at the positive x axis. Exact: quadrant class first,
/// cross-product sign within a half-plane.
pub fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let half = |d: &Point| -> u8 {
        // Upper half-plane (including positive x axis) first.
        if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
            0
        } else {
            1
        }
    };
    match half(a).cmp(&half(b)) {
        Ordering::Equal => {
            let c = cross(a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        other => other,
    }
}

/// A closed straight segment with distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }

    pub fn direction(&self) -> Point {
        self.b.sub(&self.a)
    }

    /// Point at parameter `t` (0 at `a`, 1 at `b`).
    pub fn eval(&self, t: &Coord) -> Point {
        self.a.add(&self.direction().scale(t))
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: &Point) -> bool {
        if !orient(&self.a, &self.b, p).is_zero() {
            return false;
        }
        let d = self.direction();
        let t = dot(&p.sub(&self.a), &d);
        !t.is_negative() && t <= dot(&d, &d)
    }
}

/// Exact intersection of two closed segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentIntersection {
    None,
    /// Single point, with parameters along each segment.
    Point { at: Point, t: Coord, u: Coord },
    /// Nondegenerate collinear overlap, endpoints in order along the first segment.
    Overlap { from: Point, to: Point },
}

pub fn intersect_segments(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let r = s1.direction();
    let s = s2.direction();
    let denom = cross(&r, &s);
    let qp = s2.a.sub(&s1.a);
    if !denom.is_zero() {
        let t = cross(&qp, &s) / denom.clone();
        let u = cross(&qp, &r) / denom;
        let unit = |v: &Coord| !v.is_negative() && *v <= Coord::one();
        if unit(&t) && unit(&u) {
            return SegmentIntersection::Point {
                at: s1.eval(&t),
                t,
                u,
            };
        }
        return SegmentIntersection::None;
    }
    if !cross(&qp, &r).is_zero() {
        return SegmentIntersection::None; // parallel, distinct lines
    }
    // Collinear: project s2's endpoints onto s1's parameter line.
    let rr = dot(&r, &r);
    let t0 = dot(&qp, &r) / rr.clone();
    let t1 = dot(&s2.b.sub(&s1.a), &r) / rr;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(Coord::zero());
    let hi = hi.min(Coord::one());
    match lo.cmp(&hi) {
        Ordering::Greater => SegmentIntersection::None,
        Ordering::Equal => {
            let at = s1.eval(&lo);
            SegmentIntersection::Point {
                at,
                t: lo.clone(),
                u: Coord::zero(), // parameter on s2 unused for endpoint touches
            }
        }
        Ordering::Less => SegmentIntersection::Overlap {
            from: s1.eval(&lo),
            to: s1.eval(&hi),
        },
    }
}
