//! SVG rendering of the face decomposition: bounded faces filled and labeled
//! with their optimal multiplicities, the curve drawn on top with orientation
//! arrows. Output is plain string assembly, deterministic byte for byte.

use num_traits::ToPrimitive;
use spanarea::{AreaReport, Point, PolygonalCurve};

const PALETTE: [&str; 6] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2",
];

fn fx(p: &Point) -> (f64, f64) {
    // Flip y so the mathematical orientation matches screen coordinates
    // while labels stay upright.
    (
        p.x.to_f64().unwrap_or(0.0),
        -p.y.to_f64().unwrap_or(0.0),
    )
}

fn path_from(points: &[Point]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = fx(p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{x:.4} {y:.4} "));
    }
    d.push('Z');
    d
}

pub fn render(curve: &PolygonalCurve, report: &AreaReport) -> String {
    let (min, max) = curve.bounding_box();
    let (x0, y1) = fx(&min);
    let (x1, y0) = fx(&max);
    let margin = ((x1 - x0).max(y1 - y0) * 0.1).max(1.0);
    let view = format!(
        "{:.4} {:.4} {:.4} {:.4}",
        x0 - margin,
        y0 - margin,
        (x1 - x0) + 2.0 * margin,
        (y1 - y0) + 2.0 * margin
    );

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\" width=\"640\" height=\"640\">\n"
    ));
    out.push_str("<g stroke=\"none\">\n");
    for (i, face) in report.face_geometry.iter().enumerate() {
        let k = report.k_opt.get(i).copied().unwrap_or(0);
        let opacity = 0.15 + 0.2 * (k.min(4) as f64);
        let color = PALETTE[i % PALETTE.len()];
        out.push_str(&format!(
            "<path d=\"{}\" fill=\"{color}\" fill-opacity=\"{opacity:.2}\"/>\n",
            path_from(&face.boundary)
        ));
    }
    out.push_str("</g>\n");

    // The curve itself, with a small arrowhead at each segment midpoint.
    let vertices = curve.vertices();
    out.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.06\"/>\n",
        path_from(vertices)
    ));
    let n = vertices.len();
    for i in 0..n {
        let (ax, ay) = fx(&vertices[i]);
        let (bx, by) = fx(&vertices[(i + 1) % n]);
        let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
        let (dx, dy) = (bx - ax, by - ay);
        let len = (dx * dx + dy * dy).sqrt();
        if len == 0.0 {
            continue;
        }
        let (ux, uy) = (dx / len, dy / len);
        let (px, py) = (-uy, ux);
        let s = 0.18;
        out.push_str(&format!(
            "<polygon points=\"{:.4},{:.4} {:.4},{:.4} {:.4},{:.4}\" fill=\"#222222\"/>\n",
            mx + ux * s,
            my + uy * s,
            mx - ux * s + px * s * 0.7,
            my - uy * s + py * s * 0.7,
            mx - ux * s - px * s * 0.7,
            my - uy * s - py * s * 0.7,
        ));
    }

    for (i, face) in report.face_geometry.iter().enumerate() {
        let k = report.k_opt.get(i).copied().unwrap_or(0);
        let (x, y) = fx(&face.representative);
        out.push_str(&format!(
            "<text x=\"{x:.4}\" y=\"{y:.4}\" font-size=\"0.5\" text-anchor=\"middle\" fill=\"#111111\">k{}={k}</text>\n",
            i + 1
        ));
    }
    out.push_str("</svg>\n");
    out
}
