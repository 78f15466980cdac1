//! Point-cloud serialization: CSV with header `re,im`, and static SVG with
//! a fixed [−1.1, 1.1]² viewBox, stroke-free dot marks, and caustics as
//! polylines. Float formatting is fixed at 12 significant digits so output
//! bytes are deterministic.

use std::fmt::Write as _;

use super::PointCloud;

/// 12 significant digits, deterministic.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000e0".to_string();
    }
    format!("{:.11e}", x)
}

/// CSV with header `re,im`.
pub fn to_csv(cloud: &PointCloud) -> String {
    let mut out = String::with_capacity(cloud.points.len() * 32 + 8);
    out.push_str("re,im\n");
    for (re, im) in &cloud.points {
        let _ = writeln!(out, "{},{}", fmt_f64(*re), fmt_f64(*im));
    }
    out
}

/// One drawable layer of an SVG plot.
pub enum SvgLayer<'a> {
    /// Dot marks (stroke-free circles).
    Dots(&'a PointCloud),
    /// A connected polyline, e.g. a caustic.
    Polyline(&'a [(f64, f64)]),
}

const PALETTE: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

/// Compose layers into a standalone SVG. The y axis is flipped so the
/// complex plane reads conventionally (positive imaginary axis up).
pub fn to_svg(layers: &[SvgLayer<'_>]) -> String {
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    let mut meta: Vec<String> = Vec::new();
    for layer in layers {
        if let SvgLayer::Dots(cloud) = layer {
            meta.push(format!(
                "source={};params={};graph={}",
                cloud.source, cloud.params, cloud.graph_hash
            ));
        }
    }
    if !meta.is_empty() {
        let _ = writeln!(out, "  <desc>{}</desc>", meta.join("|"));
    }
    out.push_str("  <rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n");
    out.push_str("  <g transform=\"scale(1,-1)\">\n");
    for (li, layer) in layers.iter().enumerate() {
        let color = PALETTE[li % PALETTE.len()];
        match layer {
            SvgLayer::Dots(cloud) => {
                for (re, im) in &cloud.points {
                    let _ = writeln!(
                        out,
                        "    <circle cx=\"{}\" cy=\"{}\" r=\"0.004\" fill=\"{}\"/>",
                        fmt_f64(*re),
                        fmt_f64(*im),
                        color
                    );
                }
            }
            SvgLayer::Polyline(points) => {
                if points.is_empty() {
                    continue;
                }
                let coords: Vec<String> = points
                    .iter()
                    .map(|(re, im)| format!("{},{}", fmt_f64(*re), fmt_f64(*im)))
                    .collect();
                let _ = writeln!(
                    out,
                    "    <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.006\"/>",
                    coords.join(" "),
                    color
                );
            }
        }
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud() -> PointCloud {
        PointCloud {
            points: vec![(1.0, 0.0), (0.25, -0.5)],
            source: "test".into(),
            params: "x=1".into(),
            graph_hash: "abcd".into(),
        }
    }

    #[test]
    fn csv_shape_and_determinism() {
        let c = cloud();
        let a = to_csv(&c);
        let b = to_csv(&c);
        assert_eq!(a, b);
        let mut lines = a.lines();
        assert_eq!(lines.next(), Some("re,im"));
        assert_eq!(lines.count(), 2);
        assert!(a.contains("1.00000000000e0"));
    }

    #[test]
    fn svg_contains_layers() {
        let c = cloud();
        let poly = [(0.0, 0.0), (0.5, 0.5)];
        let svg = to_svg(&[SvgLayer::Dots(&c), SvgLayer::Polyline(&poly)]);
        assert!(svg.contains("viewBox=\"-1.1 -1.1 2.2 2.2\""));
        assert!(svg.contains("<circle"));
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("source=test"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
