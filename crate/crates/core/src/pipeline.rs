//! The full computation: arrangement, rays, word, erasure optimum, bounds,
//! and the truncated values on the largest faces.

use num_traits::Zero;
use thiserror::Error;

use crate::arrangement::{build_arrangement, Arrangement};
use crate::coord::{Coord, Point};
use crate::curve::PolygonalCurve;
use crate::homotopy::{choose_rays, crossing_word, winding_integral, HomotopyError};
use crate::solver::{min_weight_erasure, ErasureCertificate, SolverError, Weights};
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("truncation level {level} outside 1..={faces}")]
    TruncationOutOfRange { level: usize, faces: usize },
}

/// Boundary walk and interior point of one bounded face, for reports and
/// rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGeometry {
    pub boundary: Vec<Point>,
    pub representative: Point,
}

/// Everything the computation established about one curve, with the data
/// needed to re-verify it: the optimal vector against the face areas, the
/// winding-number lower bound, and a replayable erasure certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaReport {
    /// Number of bounded faces, in deterministic order (area descending).
    pub face_count: usize,
    /// Exact face areas, aligned with generator indices.
    pub areas: Vec<Coord>,
    /// The extracted word, cyclically reduced; certificate positions index
    /// into this word.
    pub word: Word,
    /// Optimal deletions per generator.
    pub k_opt: Vec<usize>,
    /// The minimal spanning area: sum of `k_opt[i] * areas[i]`.
    pub area_value: Coord,
    /// Sum of |winding| * area over faces; never exceeds `area_value`.
    pub winding_lower_bound: Coord,
    /// Winding number of the curve around each face's representative point.
    pub windings: Vec<i64>,
    pub certificate: ErasureCertificate,
    pub face_geometry: Vec<FaceGeometry>,
}

impl AreaReport {
    /// Re-check the report's internal claims. Used by tests and the CLI's
    /// verification command.
    pub fn invariants_hold(&self) -> bool {
        let recomputed: Coord = self
            .k_opt
            .iter()
            .zip(&self.areas)
            .map(|(&k, a)| a * Coord::from_integer(k.into()))
            .sum();
        recomputed == self.area_value
            && self.area_value >= self.winding_lower_bound
            && self.k_opt == self.certificate.k
            && self.certificate.replay(&self.word)
            && self.windings.iter().enumerate().all(|(g, &w)| {
                self.k_opt[g] as i64 >= w.abs() && (self.k_opt[g] as i64 - w) % 2 == 0
            })
    }
}

fn face_geometry(arr: &Arrangement) -> Vec<FaceGeometry> {
    arr.bounded_faces()
        .iter()
        .map(|f| FaceGeometry {
            boundary: arr.walk_points(f),
            representative: f.representative.clone(),
        })
        .collect()
}

/// Compute the minimal spanning area of the curve, with certificates.
pub fn minimal_area(curve: &PolygonalCurve) -> Result<AreaReport, PipelineError> {
    let arr = build_arrangement(curve);
    minimal_area_with(curve, &arr)
}

/// Same as [`minimal_area`] when the arrangement is already built.
pub fn minimal_area_with(
    curve: &PolygonalCurve,
    arr: &Arrangement,
) -> Result<AreaReport, PipelineError> {
    let areas = arr.bounded_areas();
    let n = areas.len();
    if n == 0 {
        // The image is a tree; the complement is connected and the curve
        // spans zero area.
        return Ok(AreaReport {
            face_count: 0,
            areas,
            word: Word::empty(),
            k_opt: vec![],
            area_value: Coord::zero(),
            winding_lower_bound: Coord::zero(),
            windings: vec![],
            certificate: ErasureCertificate {
                k: vec![],
                deleted_positions: vec![],
                matching: vec![],
            },
            face_geometry: vec![],
        });
    }

    let rays = choose_rays(arr, curve);
    let raw = crossing_word(curve, &rays)?;
    let word = raw.cyclic_reduce();

    // Cross-check the word against the independent winding integrals before
    // trusting it: the exponent sum of each generator must equal the winding
    // number around that face's representative point.
    let mut windings = Vec::with_capacity(n);
    for f in arr.bounded_faces() {
        let by_integral = winding_integral(curve, &f.representative)?;
        let by_word = word.exponent_sum(f.id);
        assert_eq!(
            by_word, by_integral,
            "word/winding mismatch on face {}",
            f.id
        );
        windings.push(by_integral);
    }

    let weights = Weights::new(areas.clone()).map_err(PipelineError::Solver)?;
    let (area_value, certificate) = min_weight_erasure(&word, &weights)?;
    let winding_lower_bound: Coord = windings
        .iter()
        .zip(&areas)
        .map(|(&w, a)| a * Coord::from_integer(w.abs().into()))
        .sum();
    assert!(
        area_value >= winding_lower_bound,
        "optimum fell under the winding bound"
    );

    let report = AreaReport {
        face_count: n,
        areas,
        word,
        k_opt: certificate.k.clone(),
        area_value,
        winding_lower_bound,
        windings,
        certificate,
        face_geometry: face_geometry(arr),
    };
    debug_assert!(report.invariants_hold());
    Ok(report)
}

/// The winding-number lower bound alone: sum over bounded faces of
/// |winding| * area. A genuine lower bound for the spanning area, and
/// strictly below it for commutator-like curves.
pub fn winding_lower_bound(curve: &PolygonalCurve) -> Result<Coord, PipelineError> {
    let arr = build_arrangement(curve);
    let mut total = Coord::zero();
    for f in arr.bounded_faces() {
        let w = winding_integral(curve, &f.representative)?;
        total += &f.area * Coord::from_integer(w.abs().into());
    }
    Ok(total)
}

/// Truncated value on the `level` largest faces: erase all letters of later
/// generators from the word and solve against the first `level` areas.
/// Nondecreasing in `level`, and equal to the full value at `level = n`.
pub fn truncated_area(curve: &PolygonalCurve, level: usize) -> Result<Coord, PipelineError> {
    let report = minimal_area(curve)?;
    truncated_from_report(&report, level)
}

/// Truncation against an existing report (avoids rebuilding the pipeline
/// when scanning all levels).
pub fn truncated_from_report(
    report: &AreaReport,
    level: usize,
) -> Result<Coord, PipelineError> {
    if level == 0 || level > report.face_count {
        return Err(PipelineError::TruncationOutOfRange {
            level,
            faces: report.face_count,
        });
    }
    let projected = report.word.project_below(level);
    let weights = Weights::new(report.areas[..level].to_vec()).map_err(PipelineError::Solver)?;
    let (cost, _) = min_weight_erasure(&projected, &weights)?;
    Ok(cost)
}
