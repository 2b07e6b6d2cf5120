//! Minimal self-contained SVG plots.

use std::fmt::Write;

const W: f64 = 720.0;
const H: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: &str, points: Vec<(f64, f64)>) -> Self {
        Self { label: label.to_string(), points }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn header(title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#, W / 2.0, escape(title));
    s
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let span = hi - lo;
    if !(span > 0.0) {
        return vec![lo];
    }
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0].iter().map(|m| m * mag).find(|&s| s >= raw).unwrap_or(10.0 * mag);
    let mut t = (lo / step).ceil() * step;
    let mut out = Vec::new();
    while t <= hi + 1e-9 * step {
        out.push(t);
        t += step;
    }
    out
}

fn label(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-3 || v.abs() >= 1e5) {
        format!("{v:.1e}")
    } else {
        let s = format!("{v:.4}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (W - LEFT - RIGHT)
    }
    fn py(&self, y: f64) -> f64 {
        H - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (H - TOP - BOTTOM)
    }

    fn axes(&self, s: &mut String, x_label: &str, y_label: &str, log_y: bool) {
        let (l, r, t, b) = (LEFT, W - RIGHT, TOP, H - BOTTOM);
        let _ =
            writeln!(s, r#"<rect x="{l}" y="{t}" width="{}" height="{}" fill="none" stroke="black"/>"#, r - l, b - t);
        for x in ticks(self.x0, self.x1) {
            let p = self.px(x);
            let _ = writeln!(s, r#"<line x1="{p:.2}" y1="{b}" x2="{p:.2}" y2="{}" stroke="black"/>"#, b + 5.0);
            let _ = writeln!(s, r#"<text x="{p:.2}" y="{}" text-anchor="middle">{}</text>"#, b + 18.0, label(x));
        }
        for y in ticks(self.y0, self.y1) {
            let p = self.py(y);
            let text = if log_y { format!("1e{}", y.round()) } else { label(y) };
            let _ = writeln!(s, r#"<line x1="{}" y1="{p:.2}" x2="{l}" y2="{p:.2}" stroke="black"/>"#, l - 5.0);
            let _ = writeln!(s, r#"<text x="{}" y="{:.2}" text-anchor="end">{text}</text>"#, l - 8.0, p + 4.0);
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            (l + r) / 2.0,
            H - 18.0,
            escape(x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="18" y="{0}" text-anchor="middle" transform="rotate(-90 18 {0})">{1}</text>"#,
            (t + b) / 2.0,
            escape(y_label)
        );
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) =
        values.filter(|v| v.is_finite()).fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

pub fn line_plot(title: &str, x_label: &str, y_label: &str, series: &[Series], log_y: bool) -> String {
    let ty = |y: f64| {
        if log_y {
            if y > 0.0 {
                y.log10()
            } else {
                f64::NAN
            }
        } else {
            y
        }
    };
    let (x0, x1) = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let (y0, y1) = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| ty(p.1))));
    let (y0, y1) = if log_y { (y0.floor(), y1.ceil()) } else { (y0, y1) };
    let f = Frame { x0, x1, y0, y1 };
    let mut s = header(title);
    let y_label = if log_y { format!("{y_label} (log scale)") } else { y_label.to_string() };
    f.axes(&mut s, x_label, &y_label, log_y);
    for (k, ser) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let pts: Vec<String> = ser
            .points
            .iter()
            .filter(|p| ty(p.1).is_finite())
            .map(|p| format!("{:.2},{:.2}", f.px(p.0), f.py(ty(p.1))))
            .collect();
        let _ =
            writeln!(s, r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
        let ly = TOP + 16.0 + 18.0 * k as f64;
        let lx = W - RIGHT + 12.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#,
            lx + 20.0
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, lx + 26.0, ly + 4.0, escape(&ser.label));
    }
    s.push_str("</svg>\n");
    s
}

/// `values` is row-major over `ys` (rows) by `xs` (columns).
pub fn heatmap(title: &str, x_label: &str, y_label: &str, xs: &[f64], ys: &[f64], values: &[f64]) -> String {
    let half = |v: &[f64], i: usize| -> (f64, f64) {
        let d = if v.len() > 1 { (v[v.len() - 1] - v[0]) / (v.len() - 1) as f64 } else { 1.0 };
        (v[i] - d / 2.0, v[i] + d / 2.0)
    };
    let f = Frame { x0: half(xs, 0).0, x1: half(xs, xs.len() - 1).1, y0: half(ys, 0).0, y1: half(ys, ys.len() - 1).1 };
    let (vmin, vmax) = bounds(values.iter().copied());
    let mut s = header(title);
    for (j, _) in ys.iter().enumerate() {
        let (ya, yb) = half(ys, j);
        for (i, _) in xs.iter().enumerate() {
            let (xa, xb) = half(xs, i);
            let t = ((values[j * xs.len() + i] - vmin) / (vmax - vmin)).clamp(0.0, 1.0);
            let _ = writeln!(
                s,
                r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                f.px(xa),
                f.py(yb),
                f.px(xb) - f.px(xa) + 0.3,
                f.py(ya) - f.py(yb) + 0.3,
                ramp(t)
            );
        }
    }
    f.axes(&mut s, x_label, y_label, false);
    let lx = W - RIGHT + 30.0;
    for k in 0..=10 {
        let t = k as f64 / 10.0;
        let y = H - BOTTOM - t * (H - TOP - BOTTOM);
        let _ = writeln!(
            s,
            r#"<rect x="{lx}" y="{:.2}" width="20" height="{:.2}" fill="{}"/>"#,
            y - (H - TOP - BOTTOM) / 10.0,
            (H - TOP - BOTTOM) / 10.0,
            ramp(t)
        );
    }
    let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, lx + 26.0, TOP + 10.0, label(vmax));
    let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, lx + 26.0, H - BOTTOM, label(vmin));
    s.push_str("</svg>\n");
    s
}

fn ramp(t: f64) -> String {
    // dark blue through teal to yellow
    let stops = [(0.0, [68.0, 1.0, 84.0]), (0.5, [33.0, 145.0, 140.0]), (1.0, [253.0, 231.0, 37.0])];
    let (a, b) = if t <= 0.5 { (stops[0], stops[1]) } else { (stops[1], stops[2]) };
    let u = (t - a.0) / (b.0 - a.0);
    let c: Vec<u8> = (0..3).map(|k| (a.1[k] + u * (b.1[k] - a.1[k])).round() as u8).collect();
    format!("#{:02x}{:02x}{:02x}", c[0], c[1], c[2])
}
