//! Minimal self-contained SVG emission for accuracy-vs-SNR curves:
//! log-scaled SNR axis, one polyline per curve, shaded confidence band.
//! CSV stays the canonical output; the SVG is a convenience view.

use crate::experiments::SweepResult;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_T: f64 = 32.0;
const MARGIN_B: f64 = 56.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// Renders one or more labeled sweep curves into an SVG document.
pub fn sweep_svg(curves: &[(String, SweepResult)], title: &str) -> String {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (_, r) in curves {
        for p in &r.points {
            lo = lo.min(p.snr);
            hi = hi.max(p.snr);
        }
    }
    if !lo.is_finite() || lo <= 0.0 {
        lo = 1.0;
    }
    if !hi.is_finite() || hi <= lo {
        hi = lo * 10.0;
    }
    let (llo, lhi) = (lo.log10(), hi.log10());

    let x = |snr: f64| {
        MARGIN_L + (snr.log10() - llo) / (lhi - llo) * (WIDTH - MARGIN_L - MARGIN_R)
    };
    let y = |acc: f64| HEIGHT - MARGIN_B - acc.clamp(0.0, 1.0) * (HEIGHT - MARGIN_T - MARGIN_B);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));

    // y axis: accuracy 0..1
    for tick in 0..=5 {
        let v = tick as f64 / 5.0;
        let py = y(v);
        svg.push_str(&format!(
            "<line x1=\"{MARGIN_L}\" y1=\"{py:.2}\" x2=\"{:.2}\" y2=\"{py:.2}\" stroke=\"#dddddd\"/>\n",
            WIDTH - MARGIN_R
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">{v:.1}</text>\n",
            MARGIN_L - 8.0,
            py + 4.0
        ));
    }
    // x axis: decade ticks
    let mut decade = llo.floor() as i32;
    while (decade as f64) <= lhi.ceil() {
        let v = 10f64.powi(decade);
        if v >= lo * 0.999 && v <= hi * 1.001 {
            let px = x(v);
            svg.push_str(&format!(
                "<line x1=\"{px:.2}\" y1=\"{MARGIN_T}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"#dddddd\"/>\n",
                HEIGHT - MARGIN_B
            ));
            svg.push_str(&format!(
                "<text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e{decade}</text>\n",
                HEIGHT - MARGIN_B + 18.0
            ));
        }
        decade += 1;
    }
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">SNR</text>\n",
        (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
        HEIGHT - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 {:.2})\">accuracy</text>\n",
        HEIGHT / 2.0,
        HEIGHT / 2.0
    ));

    for (ci, (label, result)) in curves.iter().enumerate() {
        let color = PALETTE[ci % PALETTE.len()];
        // confidence band
        let mut band = String::from("<polygon points=\"");
        for p in &result.points {
            band.push_str(&format!(
                "{:.2},{:.2} ",
                x(p.snr),
                y(p.mean_accuracy + p.ci_half_width)
            ));
        }
        for p in result.points.iter().rev() {
            band.push_str(&format!(
                "{:.2},{:.2} ",
                x(p.snr),
                y(p.mean_accuracy - p.ci_half_width)
            ));
        }
        band.push_str(&format!("\" fill=\"{color}\" fill-opacity=\"0.15\" stroke=\"none\"/>\n"));
        svg.push_str(&band);

        let mut line = String::from("<polyline points=\"");
        for p in &result.points {
            line.push_str(&format!("{:.2},{:.2} ", x(p.snr), y(p.mean_accuracy)));
        }
        line.push_str(&format!(
            "\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n"
        ));
        svg.push_str(&line);

        // legend entry
        let ly = MARGIN_T + 16.0 * ci as f64 + 8.0;
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            MARGIN_L + 12.0,
            MARGIN_L + 36.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            MARGIN_L + 42.0,
            ly + 4.0,
            escape(label)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{SweepPoint, SweepResult};

    fn fake_result() -> SweepResult {
        SweepResult {
            points: (0..5)
                .map(|i| SweepPoint {
                    snr: 10f64.powf(i as f64 / 2.0),
                    samples: Vec::new(),
                    mean_accuracy: 0.2 * i as f64,
                    ci_half_width: 0.05,
                })
                .collect(),
            realizations: 10,
        }
    }

    #[test]
    fn svg_is_well_formed_and_deterministic() {
        let curves = vec![("a&b".to_string(), fake_result())];
        let svg = sweep_svg(&curves, "test <plot>");
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("a&amp;b"));
        assert!(svg.contains("&lt;plot&gt;"));
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("<polygon"));
        assert_eq!(svg, sweep_svg(&curves, "test <plot>"));
    }
}
