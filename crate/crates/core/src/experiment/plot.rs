//! Static SVG scatter of per-trial `energy / n` against the bounds.

use std::fmt::Write;

use super::csv_io::CsvTable;
use crate::asymptotics::{ba_limit_constant, er_f};
use crate::random::Model;
use crate::{Error, Result};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;

const BOUND_COLUMNS: [&str; 8] = [
    "mcclelland",
    "koolen_moulton",
    "aj",
    "ad",
    "tp",
    "tpg",
    "global",
    "degree_hist",
];

const PALETTE: [&str; 9] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#17becf",
];

/// What gets drawn: one point per trial plus horizontal reference lines.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotData {
    pub title: String,
    /// `(trial, energy / n)`.
    pub points: Vec<(f64, f64)>,
    /// `(label, value)`; bounds are averaged over the trials where they apply.
    pub lines: Vec<(String, f64)>,
}

impl PlotData {
    pub fn from_table(table: &CsvTable) -> Result<Self> {
        let trial = table.values("trial");
        let n = table.values("n");
        let energy = table.values("energy_per_n");
        let mut points = Vec::with_capacity(table.rows.len());
        for (i, (t, e)) in trial.iter().zip(&energy).enumerate() {
            match (t, e) {
                (Some(t), Some(e)) => points.push((*t, *e)),
                _ => {
                    return Err(Error::Schema(format!(
                        "record {}: trial and energy_per_n are required",
                        i + 1
                    )))
                }
            }
        }

        let mut lines = Vec::new();
        for name in BOUND_COLUMNS {
            let per_n: Vec<f64> = table
                .values(name)
                .iter()
                .zip(&n)
                .filter_map(|(b, n)| Some((*b)? / (*n)?))
                .collect();
            if !per_n.is_empty() {
                let mean = per_n.iter().sum::<f64>() / per_n.len() as f64;
                lines.push((format!("{name}/n"), mean));
            }
        }

        let mut title = "energy / n per trial".to_string();
        if let Some(h) = table.header {
            match h.model {
                Model::BaTree => {
                    title = format!("BA trees, n = {}, {} trials", h.n, h.trials);
                    if let Ok(s) = ba_limit_constant(super::BA_REFERENCE_TERMS) {
                        lines.push(("asymptotic".into(), s.value + s.truncation_bound));
                    }
                }
                Model::Er => {
                    let lambda = h.lambda.unwrap_or(f64::NAN);
                    title = format!("G(n, λ/n), n = {}, λ = {lambda}, {} trials", h.n, h.trials);
                    if let Ok(s) = er_f(lambda, super::ER_REFERENCE_TERMS) {
                        lines.push(("asymptotic f(λ)".into(), s.value));
                    }
                }
            }
        }
        Ok(PlotData {
            title,
            points,
            lines,
        })
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the table as an SVG document.
pub fn render_svg(table: &CsvTable) -> Result<String> {
    let data = PlotData::from_table(table)?;
    let ys = data
        .points
        .iter()
        .map(|p| p.1)
        .chain(data.lines.iter().map(|l| l.1));
    let (mut y_lo, mut y_hi) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| {
        (lo.min(y), hi.max(y))
    });
    let pad = ((y_hi - y_lo) * 0.05).max(1e-3);
    y_lo -= pad;
    y_hi += pad;
    let (x_lo, x_hi) = data
        .points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)));
    let x_span = (x_hi - x_lo).max(1.0);

    let plot_w = WIDTH - 2.0 * MARGIN - 140.0;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let sx = |x: f64| MARGIN + (x - x_lo) / x_span * plot_w;
    let sy = |y: f64| MARGIN + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="30" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(&data.title)
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );
    for i in 0..=4 {
        let y = y_lo + (y_hi - y_lo) * i as f64 / 4.0;
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{y:.3}</text>"#,
            MARGIN - 6.0,
            sy(y) + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">trial</text>"#,
        MARGIN + plot_w / 2.0,
        HEIGHT - MARGIN / 2.0
    );

    for (i, (label, value)) in data.lines.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = sy(*value);
        let _ = writeln!(
            svg,
            r#"<line class="bound" x1="{MARGIN}" x2="{:.2}" y1="{y:.2}" y2="{y:.2}" stroke="{color}" stroke-dasharray="6 3"/>"#,
            MARGIN + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" fill="{color}">{} = {value:.4}</text>"#,
            MARGIN + plot_w + 6.0,
            y + 4.0,
            escape(label)
        );
    }
    for &(x, y) in &data.points {
        let _ = writeln!(
            svg,
            r#"<circle class="trial" cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#,
            sx(x),
            sy(y)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{read_csv, run_experiment, write_csv, ExperimentConfig};

    #[test]
    fn one_point_per_trial() {
        let c = ExperimentConfig {
            model: Model::BaTree,
            n: 30,
            trials: 7,
            lambda: 1.0,
            seed: 5,
            threads: 1,
        };
        let rows = run_experiment(&c).unwrap();
        let mut buf = Vec::new();
        write_csv(&c, &rows, &mut buf).unwrap();
        let svg = render_svg(&read_csv(buf.as_slice()).unwrap()).unwrap();
        assert_eq!(svg.matches(r#"class="trial""#).count(), 7);
        assert!(svg.contains("tpg/n"));
        assert!(svg.contains("asymptotic"));
        assert!(svg.starts_with("<svg"));
    }
}
