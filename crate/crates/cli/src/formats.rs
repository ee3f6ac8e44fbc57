//! On-disk formats: JSON curve files in, JSON reports out, all rationals in
//! canonical `p/q` strings so files round-trip exactly. Writes go through a
//! temp file in the target directory and a rename.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use spanarea::pipeline::FaceGeometry;
use spanarea::{
    format_coord, parse_coord, AreaReport, Coord, CurveError, Point, PolygonalCurve, Word,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    ReadInput {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    WriteOutput {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("bad coordinate in {path}: {detail}")]
    BadCoordinate { path: String, detail: String },
    #[error("invalid curve in {path}: {source}")]
    InvalidCurve { path: String, source: CurveError },
    #[error("report {path} fails validation: {detail}")]
    ReportValidation { path: String, detail: String },
}

impl FormatError {
    pub fn exit_code(&self) -> u8 {
        match self {
            FormatError::InvalidCurve { .. } => 3,
            FormatError::WriteOutput { .. } => 1,
            _ => 2,
        }
    }
}

/// A curve document: a vertex list plus an optional name. Coordinates may be
/// JSON integers, decimal literals, or strings in `p/q` or decimal form; all
/// are read exactly.
#[derive(Debug, Deserialize)]
struct CurveDoc {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<(serde_json::Value, serde_json::Value)>,
}

fn coord_from_value(v: &serde_json::Value) -> Result<Coord, String> {
    let text = match v {
        // With arbitrary precision enabled the literal digits survive, so
        // decimals like 0.1 parse exactly.
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => return Err(format!("expected number or string, got {other}")),
    };
    parse_coord(&text).map_err(|e| e.to_string())
}

/// Load and validate a curve file; returns the curve and its optional name.
pub fn load_curve(path: &Path) -> Result<(PolygonalCurve, Option<String>), FormatError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::ReadInput {
        path: display.clone(),
        source,
    })?;
    let doc: CurveDoc = serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: display.clone(),
        source,
    })?;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for (x, y) in &doc.vertices {
        let x = coord_from_value(x).map_err(|detail| FormatError::BadCoordinate {
            path: display.clone(),
            detail,
        })?;
        let y = coord_from_value(y).map_err(|detail| FormatError::BadCoordinate {
            path: display.clone(),
            detail,
        })?;
        vertices.push(Point::new(x, y));
    }
    let curve = PolygonalCurve::new(vertices).map_err(|source| FormatError::InvalidCurve {
        path: display,
        source,
    })?;
    Ok((curve, doc.name))
}

/// The report document, mirroring the in-memory report field for field with
/// rationals as canonical strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub face_count: usize,
    pub areas: Vec<String>,
    pub word: String,
    pub k_opt: Vec<usize>,
    pub area_value: String,
    pub winding_lower_bound: String,
    pub windings: Vec<i64>,
    pub certificate: CertificateDoc,
    pub face_geometry: Vec<FaceGeometryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub k: Vec<usize>,
    pub deleted_positions: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceGeometryDoc {
    pub boundary: Vec<(String, String)>,
    pub representative: (String, String),
}

fn point_doc(p: &Point) -> (String, String) {
    (format_coord(&p.x), format_coord(&p.y))
}

impl ReportDoc {
    pub fn from_report(report: &AreaReport, name: Option<&str>) -> ReportDoc {
        ReportDoc {
            name: name.map(str::to_owned),
            face_count: report.face_count,
            areas: report.areas.iter().map(format_coord).collect(),
            word: report.word.to_string(),
            k_opt: report.k_opt.clone(),
            area_value: format_coord(&report.area_value),
            winding_lower_bound: format_coord(&report.winding_lower_bound),
            windings: report.windings.clone(),
            certificate: CertificateDoc {
                k: report.certificate.k.clone(),
                deleted_positions: report.certificate.deleted_positions.clone(),
                matching: report.certificate.matching.clone(),
            },
            face_geometry: report
                .face_geometry
                .iter()
                .map(|f: &FaceGeometry| FaceGeometryDoc {
                    boundary: f.boundary.iter().map(point_doc).collect(),
                    representative: point_doc(&f.representative),
                })
                .collect(),
        }
    }

    /// The load-time consistency check: the stated value must equal the
    /// recomputed weighted sum, and the word must parse.
    pub fn validate(&self) -> Result<(), String> {
        let area_value = parse_coord(&self.area_value).map_err(|e| e.to_string())?;
        let mut sum = Coord::from_integer(0.into());
        if self.k_opt.len() != self.areas.len() {
            return Err("k_opt and areas lengths differ".into());
        }
        for (k, a) in self.k_opt.iter().zip(&self.areas) {
            let a = parse_coord(a).map_err(|e| e.to_string())?;
            sum += a * Coord::from_integer((*k).into());
        }
        if sum != area_value {
            return Err(format!(
                "area_value {} is not the weighted sum {}",
                self.area_value,
                format_coord(&sum)
            ));
        }
        Word::parse(&self.word).map_err(|e| e.to_string())?;
        Ok(())
    }
}

/// Atomic write: temp file in the destination directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), FormatError> {
    let display = path.display().to_string();
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or_else(|| Path::new(".")))
        .map_err(|source| FormatError::WriteOutput {
            path: display.clone(),
            source,
        })?;
    tmp.write_all(bytes).map_err(|source| FormatError::WriteOutput {
        path: display.clone(),
        source,
    })?;
    tmp.persist(path).map_err(|e| FormatError::WriteOutput {
        path: display,
        source: e.error,
    })?;
    Ok(())
}

pub fn save_report(
    path: &Path,
    report: &AreaReport,
    name: Option<&str>,
) -> Result<(), FormatError> {
    let doc = ReportDoc::from_report(report, name);
    let mut json = serde_json::to_string_pretty(&doc).expect("report serializes");
    json.push('\n');
    write_atomic(path, json.as_bytes())
}

pub fn load_report(path: &Path) -> Result<ReportDoc, FormatError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::ReadInput {
        path: display.clone(),
        source,
    })?;
    let doc: ReportDoc = serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: display.clone(),
        source,
    })?;
    doc.validate()
        .map_err(|detail| FormatError::ReportValidation {
            path: display,
            detail,
        })?;
    Ok(doc)
}
