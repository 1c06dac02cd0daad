//! Arc diagrams.
//!
//! Vertices sit on a horizontal spine in ordering rank. Each edge is a
//! semicircle from its source to its destination with an arrowhead at the
//! destination: odd pages above the spine, even pages below. Two
//! semicircles on the same side intersect exactly when their rank intervals
//! interleave, so a valid ordering draws every page without crossings.
//!
//! Output is deterministic: elements are written in a fixed order and every
//! coordinate has exactly two decimals.

use std::fmt::Write as _;

use thiserror::Error;

use crate::instance::{Instance, Ordering};

/// Pages 1 to 4 are red, blue, green and yellow. Further pages cycle
/// through purple, brown, pink, grey, olive and cyan.
pub const PALETTE: [&str; 10] = [
    "#d62728", "#1f77b4", "#2ca02c", "#e5b700", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Horizontal distance between consecutive spine positions.
    pub spacing: f64,
    pub margin: f64,
    pub dot_radius: f64,
    pub arrow_size: f64,
    pub font_size: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            spacing: 40.0,
            margin: 30.0,
            dot_radius: 4.0,
            arrow_size: 6.0,
            font_size: 11.0,
        }
    }
}

impl RenderStyle {
    pub fn color(&self, page: u32) -> &'static str {
        PALETTE[(page as usize - 1) % PALETTE.len()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("ordering has {got} vertices, instance has {expected}")]
    VertexSetMismatch { expected: usize, got: usize },
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Renders `inst` with vertices in `ord`, or in insertion order without one.
pub fn render_svg(inst: &Instance, ord: Option<&Ordering>, style: &RenderStyle) -> Result<String, RenderError> {
    let n = inst.vertex_count();
    let identity;
    let ord = match ord {
        Some(o) if o.len() != n => {
            return Err(RenderError::VertexSetMismatch {
                expected: n,
                got: o.len(),
            })
        }
        Some(o) => o,
        None => {
            identity = Ordering::identity(n);
            &identity
        }
    };

    let x = |v: usize| style.margin + ord.rank(v) as f64 * style.spacing;
    let radius = |src: usize, dst: usize| (x(dst) - x(src)).abs() / 2.0;
    let mut above: f64 = 0.0;
    let mut below: f64 = 0.0;
    for e in inst.edges() {
        let r = radius(e.src, e.dst);
        if e.page.get() % 2 == 1 {
            above = above.max(r);
        } else {
            below = below.max(r);
        }
    }
    let label_room = style.font_size + style.dot_radius + 4.0;
    let spine = style.margin + above;
    let width = 2.0 * style.margin + n.saturating_sub(1) as f64 * style.spacing;
    let height = spine + below.max(label_room) + style.margin;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0.00 0.00 {width:.2} {height:.2}">"#
    );
    out.push_str("<defs>\n");
    for page in 1..=inst.pages() {
        let a = style.arrow_size;
        let _ = writeln!(
            out,
            r#"<marker id="arrow-{page}" markerWidth="{a:.2}" markerHeight="{a:.2}" refX="{:.2}" refY="{:.2}" orient="auto" markerUnits="userSpaceOnUse"><path d="M 0.00 0.00 L {a:.2} {:.2} L 0.00 {a:.2} z" fill="{}"/></marker>"#,
            a,
            a / 2.0,
            a / 2.0,
            style.color(page)
        );
    }
    out.push_str("</defs>\n");
    let _ = writeln!(
        out,
        r##"<line class="spine" x1="{:.2}" y1="{spine:.2}" x2="{:.2}" y2="{spine:.2}" stroke="#999999"/>"##,
        style.margin / 2.0,
        width - style.margin / 2.0
    );
    for e in inst.edges() {
        let (x1, x2) = (x(e.src), x(e.dst));
        let r = radius(e.src, e.dst);
        let up = e.page.get() % 2 == 1;
        // In screen coordinates a clockwise sweep from left to right bulges upwards.
        let sweep = u8::from(up == (x1 < x2));
        let _ = writeln!(
            out,
            r#"<path class="arc" data-page="{}" d="M {x1:.2} {spine:.2} A {r:.2} {r:.2} 0 0 {sweep} {x2:.2} {spine:.2}" fill="none" stroke="{}" stroke-width="1.50" marker-end="url(#arrow-{})"/>"#,
            e.page,
            style.color(e.page.get()),
            e.page
        );
    }
    for &v in ord.seq() {
        let name = escape(inst.name(v));
        let _ = writeln!(
            out,
            r##"<circle class="dot" cx="{:.2}" cy="{spine:.2}" r="{:.2}" fill="#222222"><title>{name}</title></circle>"##,
            x(v),
            style.dot_radius
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="{:.2}" text-anchor="middle" font-family="sans-serif">{name}</text>"#,
            x(v),
            spine + style.dot_radius + style.font_size,
            style.font_size
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::RawInstance;

    fn two() -> Instance {
        let mut raw = RawInstance::new(1);
        raw.add_vertex("a");
        raw.add_vertex("b<");
        raw.add_edge("a", "b<", 1);
        raw.check().unwrap()
    }

    #[test]
    fn counts_and_determinism() {
        let inst = two();
        let svg = render_svg(&inst, None, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches(r#"class="arc""#).count(), 1);
        assert_eq!(svg.matches(r#"class="dot""#).count(), 2);
        assert!(svg.contains("b&lt;"));
        assert_eq!(svg, render_svg(&inst, None, &RenderStyle::default()).unwrap());
    }

    #[test]
    fn bad_ordering_is_rejected() {
        let inst = two();
        let ord = Ordering::identity(3);
        assert_eq!(
            render_svg(&inst, Some(&ord), &RenderStyle::default()),
            Err(RenderError::VertexSetMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn coordinates_have_two_decimals() {
        let svg = render_svg(&two(), None, &RenderStyle::default()).unwrap();
        let number = attribute_numbers(&svg);
        assert!(!number.is_empty());
        for num in number {
            let frac = num.split('.').nth(1).expect("every number has a fractional part");
            assert_eq!(frac.len(), 2, "{num}");
        }
    }

    /// Numbers inside the coordinate and size attributes.
    fn attribute_numbers(svg: &str) -> Vec<String> {
        let mut out = Vec::new();
        for attr in ["cx=\"", "cy=\"", " r=\"", "x1=\"", "x2=\"", "width=\"", "height=\""] {
            for piece in svg.split(attr).skip(1) {
                let value = piece.split('"').next().unwrap();
                out.extend(
                    value
                        .split_whitespace()
                        .filter(|w| w.chars().next().is_some_and(|c| c.is_ascii_digit()))
                        .map(String::from),
                );
            }
        }
        out
    }
}
