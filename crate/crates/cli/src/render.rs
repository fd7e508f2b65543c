//! Number formatting and SVG step plots.

use std::fmt::Write as _;

use vagueset::{StepCurve, Universe};

use crate::config::Config;

/// Fixed-point with `precision` decimals.
pub fn fixed(x: f64, precision: usize) -> String {
    // Avoid printing "-0.000000".
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.precision$}")
}

/// Like [`fixed`] but with trailing zeros (and a bare point) trimmed.
pub fn trimmed(x: f64, precision: usize) -> String {
    let s = fixed(x, precision);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

pub struct Series {
    pub label: String,
    pub color: &'static str,
    /// `(lo, hi, value)` pieces.
    pub pieces: Vec<(f64, f64, f64)>,
}

impl Series {
    pub fn from_curve<V>(label: impl Into<String>, color: &'static str, curve: &StepCurve<V>, value: impl Fn(&V) -> f64) -> Self {
        Self {
            label: label.into(),
            color,
            pieces: curve.pieces().map(|(lo, hi, v)| (lo, hi, value(v))).collect(),
        }
    }
}

pub const PALETTE: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"];

/// A "nice" tick spacing giving roughly `target` intervals over `span`.
fn tick_step(span: f64, target: f64) -> f64 {
    let raw = span / target;
    let magnitude = 10f64.powf(raw.log10().floor());
    let residual = raw / magnitude;
    let nice = if residual < 1.5 {
        1.0
    } else if residual < 3.0 {
        2.0
    } else if residual < 7.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders piecewise-constant series over the universe with values in [0, 1].
pub fn step_plot(title: &str, universe: Universe, series: &[Series], cfg: &Config) -> String {
    let (w, h, m) = (cfg.svg_width, cfg.svg_height, cfg.svg_margin);
    let plot_w = w - 2.0 * m;
    let plot_h = h - 2.0 * m;
    let sx = |x: f64| m + (x - universe.lo()) / universe.width() * plot_w;
    let sy = |y: f64| h - m - y.clamp(0.0, 1.0) * plot_h;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
        w / 2.0,
        m / 2.0,
        escape(title)
    )
    .unwrap();

    // Axes.
    writeln!(
        out,
        r#"<path d="M{:.2} {:.2} V{:.2} H{:.2}" fill="none" stroke="black"/>"#,
        m,
        m,
        h - m,
        w - m
    )
    .unwrap();
    let xstep = tick_step(universe.width(), 8.0);
    let mut tick = (universe.lo() / xstep).ceil() * xstep;
    while tick <= universe.hi() + xstep * 1e-9 {
        let x = sx(tick);
        writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            h - m,
            h - m + 5.0,
            h - m + 18.0,
            trimmed(tick, 6)
        )
        .unwrap();
        tick += xstep;
    }
    for i in 0..=4 {
        let v = f64::from(i) * 0.25;
        let y = sy(v);
        writeln!(
            out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{m:.2}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            m - 5.0,
            m - 8.0,
            y + 4.0,
            trimmed(v, 2)
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">ω</text>"#,
        m + plot_w / 2.0,
        h - m / 4.0
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">membership</text>"#,
        m / 4.0 + 4.0,
        m + plot_h / 2.0,
        m / 4.0 + 4.0,
        m + plot_h / 2.0
    )
    .unwrap();

    for (k, s) in series.iter().enumerate() {
        let mut d = String::new();
        for (i, &(lo, hi, v)) in s.pieces.iter().enumerate() {
            if i == 0 {
                write!(d, "M{:.2} {:.2}", sx(lo), sy(v)).unwrap();
            } else {
                write!(d, " V{:.2}", sy(v)).unwrap();
            }
            write!(d, " H{:.2}", sx(hi)).unwrap();
        }
        writeln!(
            out,
            r#"<path d="{d}" fill="none" stroke="{}" stroke-width="2"><title>{}</title></path>"#,
            s.color,
            escape(&s.label)
        )
        .unwrap();
        let ly = m + 16.0 * k as f64;
        writeln!(
            out,
            r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            w - m - 150.0,
            w - m - 130.0,
            s.color,
            w - m - 125.0,
            ly + 4.0,
            escape(&s.label)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
