//! Exact minimal spanning area of closed planar polygonal curves.
//!
//! A closed polygonal curve, possibly self-intersecting, cuts the plane into
//! finitely many faces. This crate computes, entirely in rational arithmetic,
//! the least area a disk spanning the curve must sweep: it builds the exact
//! arrangement of the curve's image, reads the curve's class in the free
//! group of the punctured plane off ray crossings, and solves a weighted
//! minimal-erasure problem over that word, where each face's generator costs
//! its area. Every stage carries an independently checkable certificate:
//! winding numbers cross-check the word, and the optimum comes with a
//! replayable deletion/matching witness.
//!
//! The main entry point is [`pipeline::minimal_area`].

pub mod arrangement;
pub mod coord;
pub mod curve;
pub mod homotopy;
pub mod pipeline;
pub mod solver;
pub mod testgen;
pub mod word;

pub use arrangement::{build_arrangement, Arrangement, Face, PointLocation};
pub use coord::{format_coord, parse_coord, Coord, Point, Segment};
pub use curve::{CurveError, PolygonalCurve};
pub use homotopy::{choose_rays, crossing_word, winding_from_word, winding_integral, Ray};
pub use pipeline::{
    minimal_area, truncated_area, winding_lower_bound, AreaReport, PipelineError,
};
pub use solver::{
    check_admissible, exhaustive_oracle, min_weight_erasure, ErasureCertificate, SolverError,
    Weights,
};
pub use word::{Letter, Sign, Word};
