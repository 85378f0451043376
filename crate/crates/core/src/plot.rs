//! Scatter plots of roots in the complex plane, as SVG.
//!
//! Left panel: every root. Right panel, present only when non-real roots
//! exist: a zoom on the non-real roots closest to the origin.

use std::fmt::Write as _;

use crate::analysis::NONREAL_IM_TOL;
use crate::cache::TOOL_VERSION;
use crate::gp_graph::GpParams;
use crate::roots::Root;

const PANEL: f64 = 420.0;
const MARGIN: f64 = 50.0;
const CAPTION_H: f64 = 40.0;

#[derive(Clone, Copy, Debug)]
struct Window {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Window {
    fn around(points: impl Iterator<Item = (f64, f64)>, include_origin_axis: bool) -> Window {
        let mut w = Window {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for (x, y) in points {
            w.x0 = w.x0.min(x);
            w.x1 = w.x1.max(x);
            w.y0 = w.y0.min(y);
            w.y1 = w.y1.max(y);
        }
        if include_origin_axis {
            w.y0 = w.y0.min(0.0);
            w.y1 = w.y1.max(0.0);
        }
        // conjugate symmetry: keep the real axis centred
        let h = w.y0.abs().max(w.y1.abs());
        w.y0 = -h;
        w.y1 = h;
        let pad_x = ((w.x1 - w.x0) * 0.08).max(0.05);
        let pad_y = ((w.y1 - w.y0) * 0.08).max(0.05);
        w.x0 -= pad_x;
        w.x1 += pad_x;
        w.y0 -= pad_y;
        w.y1 += pad_y;
        w
    }

    fn sx(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / (self.x1 - self.x0) * PANEL
    }

    fn sy(&self, y: f64) -> f64 {
        MARGIN + (self.y1 - y) / (self.y1 - self.y0) * PANEL
    }
}

fn panel(out: &mut String, offset_x: f64, title: &str, win: Window, roots: &[Root]) {
    writeln!(out, r#"<g transform="translate({offset_x:.1},0)">"#).unwrap();
    let (l, t, r, b) = (MARGIN, MARGIN, MARGIN + PANEL, MARGIN + PANEL);
    writeln!(
        out,
        r##"<rect x="{l:.1}" y="{t:.1}" width="{PANEL:.1}" height="{PANEL:.1}" fill="none" stroke="#444"/>"##
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="14">{title}</text>"#,
        (l + r) / 2.0,
        t - 12.0
    )
    .unwrap();
    // real axis
    let y0 = win.sy(0.0);
    writeln!(
        out,
        r##"<line class="real-axis" x1="{l:.1}" y1="{y0:.2}" x2="{r:.1}" y2="{y0:.2}" stroke="#888" stroke-width="1"/>"##
    )
    .unwrap();
    if win.x0 <= 0.0 && 0.0 <= win.x1 {
        let x0 = win.sx(0.0);
        writeln!(
            out,
            r##"<line class="imag-axis" x1="{x0:.2}" y1="{t:.1}" x2="{x0:.2}" y2="{b:.1}" stroke="#bbb" stroke-dasharray="4 3"/>"##
        )
        .unwrap();
    }
    for (x, anchor) in [(win.x0, "start"), (win.x1, "end")] {
        writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="{anchor}" font-size="11">{x:.3}</text>"#,
            win.sx(x),
            b + 16.0
        )
        .unwrap();
    }
    for y in [win.y0, win.y1] {
        writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" font-size="11">{y:.3}i</text>"#,
            l - 4.0,
            win.sy(y) + 4.0
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="12">Re</text>"#,
        (l + r) / 2.0,
        b + 32.0
    )
    .unwrap();
    for root in roots {
        if root.re < win.x0 || root.re > win.x1 || root.im < win.y0 || root.im > win.y1 {
            continue;
        }
        let (class, color) = if root.im.abs() < NONREAL_IM_TOL {
            ("real", "#1f77b4")
        } else {
            ("nonreal", "#d62728")
        };
        writeln!(
            out,
            r#"<circle class="{class}" cx="{:.2}" cy="{:.2}" r="3" fill="{color}"/>"#,
            win.sx(root.re),
            win.sy(root.im)
        )
        .unwrap();
    }
    out.push_str("</g>\n");
}

/// Two-panel figure of `roots` captioned `GP(n,k)`.
pub fn roots_svg(params: GpParams, roots: &[Root]) -> String {
    let nonreal: Vec<&Root> = roots
        .iter()
        .filter(|r| r.im.abs() >= NONREAL_IM_TOL)
        .collect();
    let panels = if nonreal.is_empty() { 1.0 } else { 2.0 };
    let width = panels * (PANEL + 2.0 * MARGIN);
    let height = PANEL + 2.0 * MARGIN + CAPTION_H;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, "<!-- ipgp {TOOL_VERSION} -->").unwrap();
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let global = Window::around(roots.iter().map(|r| (r.re, r.im)), true);
    panel(&mut out, 0.0, "all roots", global, roots);

    if !nonreal.is_empty() {
        let mut moduli: Vec<f64> = nonreal.iter().map(|r| r.re.hypot(r.im)).collect();
        moduli.sort_by(f64::total_cmp);
        let cutoff = moduli[(moduli.len() - 1) / 2];
        let near = nonreal
            .iter()
            .filter(|r| r.re.hypot(r.im) <= cutoff)
            .map(|r| (r.re, r.im));
        let zoom = Window::around(near, true);
        panel(
            &mut out,
            PANEL + 2.0 * MARGIN,
            "non-real roots near the origin",
            zoom,
            roots,
        );
    }
    writeln!(
        out,
        r#"<text class="caption" x="{:.1}" y="{:.1}" text-anchor="middle" font-size="16">GP({},{})</text>"#,
        width / 2.0,
        height - 14.0,
        params.n(),
        params.k()
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(re: f64, im: f64) -> Root {
        Root {
            re,
            im,
            residual: 0.0,
        }
    }

    #[test]
    fn single_panel_for_real_roots() {
        let svg = roots_svg(
            GpParams::new(5, 2).unwrap(),
            &[root(-1.0, 0.0), root(-0.2, 0.0)],
        );
        assert!(svg.contains(">GP(5,2)</text>"));
        assert_eq!(svg.matches("<g transform").count(), 1);
        assert_eq!(svg.matches(r#"class="real""#).count(), 2);
        assert!(svg.contains("real-axis"));
    }

    #[test]
    fn zoom_panel_for_complex_roots() {
        let roots = [
            root(-1.0, -0.5),
            root(-1.0, 0.5),
            root(-2.0, -8.0),
            root(-2.0, 8.0),
            root(-0.3, 0.0),
        ];
        let svg = roots_svg(GpParams::new(20, 1).unwrap(), &roots);
        assert_eq!(svg.matches("<g transform").count(), 2);
        // all five in the global view, the near pair plus the real root in the zoom
        assert_eq!(svg.matches(r#"class="nonreal""#).count(), 4 + 2);
        assert_eq!(svg, roots_svg(GpParams::new(20, 1).unwrap(), &roots));
    }
}
