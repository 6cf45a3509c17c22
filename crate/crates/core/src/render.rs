//! SVG drawing of a striped cylinder as an annulus.
//!
//! The ingoing circle is the outer boundary and the outgoing circle the inner
//! one. Marked points run clockwise from 12 o'clock. Strands are drawn in
//! polar coordinates along their lifts, so twists appear as spirals.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::evaluator::AffineDiagram;

const SIZE: f64 = 420.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER: f64 = 180.0;
const INNER: f64 = 80.0;
const SAMPLES: usize = 32;

fn angle(lift: f64, n: usize) -> f64 {
    -PI / 2.0 + 2.0 * PI * lift / n as f64
}

fn point(r: f64, theta: f64) -> (f64, f64) {
    (CENTER + r * theta.cos(), CENTER + r * theta.sin())
}

fn polyline(samples: impl Iterator<Item = (f64, f64)>) -> String {
    let mut d = String::new();
    for (n, (r, theta)) in samples.enumerate() {
        let (x, y) = point(r, theta);
        let _ = write!(d, "{}{x:.2} {y:.2}", if n == 0 { "M" } else { " L" });
    }
    d
}

fn unit_steps() -> impl Iterator<Item = f64> {
    (0..=SAMPLES).map(|s| s as f64 / SAMPLES as f64)
}

/// Renders a diagram; `title` is shown above the legend.
pub fn render_svg(d: &AffineDiagram, title: &str) -> String {
    let (p, q) = (d.n_in(), d.n_out());
    let inv = d.invariants();
    let band = OUTER - INNER;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = SIZE,
        h = SIZE + 110.0
    );
    svg.push_str(
        "<style>.boundary{fill:none;stroke:#888;stroke-width:1.5}.strand{fill:none;stroke:#1f4e9c;stroke-width:2.5}\
         .bracelet{stroke:#b3261e}.point{fill:#222}.basepoint{fill:#e8a317;stroke:#222}\
         text{font-family:sans-serif;font-size:12px}</style>\n",
    );
    let _ = writeln!(svg, r#"<circle class="boundary in" cx="{CENTER}" cy="{CENTER}" r="{OUTER}"/>"#);
    let _ = writeln!(svg, r#"<circle class="boundary out" cx="{CENTER}" cy="{CENTER}" r="{INNER}"/>"#);

    for (x, y) in d.cap_lifts() {
        let span = (y - x) as f64 / p as f64;
        let depth = band * (0.2 + 0.6 * span).min(0.85);
        let path = polyline(unit_steps().map(|t| {
            (OUTER - depth * (PI * t).sin(), angle(x as f64 + t * (y - x) as f64, p))
        }));
        let _ = writeln!(svg, r#"<path class="strand cap" d="{path}"/>"#);
    }
    for (x, y) in d.cup_lifts() {
        let span = (y - x) as f64 / q as f64;
        let height = band * (0.2 + 0.6 * span).min(0.85);
        let path = polyline(unit_steps().map(|t| {
            (INNER + height * (PI * t).sin(), angle(x as f64 + t * (y - x) as f64, q))
        }));
        let _ = writeln!(svg, r#"<path class="strand cup" d="{path}"/>"#);
    }
    for (i, y) in d.through_lifts() {
        let path = polyline(unit_steps().map(|t| {
            let theta = (1.0 - t) * angle(i as f64, p) + t * angle(y as f64, q);
            (OUTER - band * t, theta)
        }));
        let _ = writeln!(svg, r#"<path class="strand through" d="{path}"/>"#);
    }
    let beta = d.beta();
    for b in 0..beta {
        let r = INNER + band * (b + 1) as f64 / (beta + 1) as f64;
        let _ = writeln!(svg, r#"<circle class="strand bracelet" cx="{CENTER}" cy="{CENTER}" r="{r:.2}"/>"#);
    }

    for (n, r, label_r, side) in [(p, OUTER, OUTER + 14.0, "in"), (q, INNER, INNER - 14.0, "out")] {
        for i in 0..n {
            let (x, y) = point(r, angle(i as f64, n));
            let class = if i == 0 { "point basepoint" } else { "point" };
            let rad = if i == 0 { 5.5 } else { 3.5 };
            let _ = writeln!(svg, r#"<circle class="{class} {side}" cx="{x:.2}" cy="{y:.2}" r="{rad}"/>"#);
            let (lx, ly) = point(label_r, angle(i as f64, n));
            let _ = writeln!(
                svg,
                r#"<text class="label {side}" x="{lx:.2}" y="{:.2}" text-anchor="middle">{i}</text>"#,
                ly + 4.0
            );
        }
    }

    let t0 = inv.t0.map_or("none".to_string(), |t| t.to_string());
    let lines = [
        escape(title),
        format!("{} -> {} points", p, q),
        format!("ind_d = {:?}   ind_b = {:?}", inv.ind_d, inv.ind_b),
        format!("tau = {}   t0 = {t0}   beta = {}   mu = {}", inv.tau, inv.beta, inv.mu),
    ];
    svg.push_str(r#"<g class="legend">"#);
    for (n, line) in lines.iter().enumerate() {
        let _ = write!(svg, r#"<text x="12" y="{}">{line}</text>"#, SIZE + 20.0 + 20.0 * n as f64);
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{word, Generator::*};
    use crate::evaluator::evaluate;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"strand {class}\"")).count()
    }

    #[test]
    fn one_element_per_strand() {
        let svg = render_svg(&evaluate(&word(&[Birth(2, 0)])).unwrap(), "b(2,0)");
        assert_eq!((count(&svg, "cup"), count(&svg, "through")), (1, 2));
        let svg = render_svg(&evaluate(&word(&[Birth(0, 0), Death(2, 1)])).unwrap(), "bracelet");
        assert_eq!(count(&svg, "bracelet"), 1);
        assert_eq!(svg.matches("class=\"strand").count(), 1);
        let svg = render_svg(&evaluate(&word(&[Id(4)])).unwrap(), "id(4)");
        assert_eq!(count(&svg, "through"), 4);
    }

    #[test]
    fn basepoints_are_marked_and_title_escaped() {
        let svg = render_svg(&evaluate(&word(&[Tw(3)])).unwrap(), "a<b");
        assert_eq!(svg.matches("basepoint").count(), 3);
        assert!(svg.contains("a&lt;b"));
    }
}
