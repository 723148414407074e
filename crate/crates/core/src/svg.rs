//! Static SVG drawings of a segment over the modified lattice.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::gmtree::GmParams;
use crate::lattice::{crossing_events, Crossing, CrossingEvent, EpsRational, SegmentSpec, Side, Sign};
use crate::rational::ExtRational;
use crate::signseq::event_signs;
use crate::words::{Generator, Letter};

/// Visual stand-in for the infinitesimal shift, in grid cells.
pub const EPS_DRAWN: f64 = 0.18;

const CELL: f64 = 60.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annotation {
    /// One word letter per crossed edge.
    Letters,
    /// One sign per triangle and one per copy contributed by each edge.
    Signs,
}

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    pub shifted: bool,
    pub annotation: Annotation,
}

fn approx(v: &EpsRational) -> f64 {
    v.a.to_f64().unwrap_or(f64::NAN) + EPS_DRAWN * v.b.to_f64().unwrap_or(f64::NAN)
}

struct Canvas {
    height: f64,
}

impl Canvas {
    fn x(&self, x: f64) -> f64 {
        MARGIN + CELL * (x + 1.0)
    }

    fn y(&self, y: f64) -> f64 {
        self.height - MARGIN - CELL * (y + 1.0)
    }
}

fn sign_char(s: Sign) -> &'static str {
    match s {
        Sign::Minus => "&#8722;",
        Sign::Plus => "+",
    }
}

/// Renders the segment of slope `t` with its annotations as an SVG 1.1 document.
pub fn render(t: ExtRational, params: &GmParams, opts: SvgOptions) -> Result<String> {
    let t = t.require_interior()?;
    let seg = SegmentSpec::new(t, opts.shifted);
    let events = crossing_events(&seg)?;
    let (q, p) = (t.den() as f64, t.num() as f64);

    // one spare cell on each side
    let width = 2.0 * MARGIN + CELL * (q + 2.0);
    let height = 2.0 * MARGIN + CELL * (p + 2.0);
    let c = Canvas { height };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(s, r##"<g class="grid" stroke="#999" stroke-width="1">"##);
    let (x_lo, x_hi, y_lo, y_hi) = (-1i64, q as i64 + 1, -1i64, p as i64 + 1);
    for i in x_lo..=x_hi {
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            c.x(i as f64), c.y(y_lo as f64), c.x(i as f64), c.y(y_hi as f64)
        );
    }
    for j in y_lo..=y_hi {
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            c.x(x_lo as f64), c.y(j as f64), c.x(x_hi as f64), c.y(j as f64)
        );
    }
    // diagonals of each cell, from (i, j+1) to (i+1, j)
    for i in x_lo..x_hi {
        for j in y_lo..y_hi {
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                c.x(i as f64), c.y((j + 1) as f64), c.x((i + 1) as f64), c.y(j as f64)
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let shift = if opts.shifted { EPS_DRAWN } else { 0.0 };
    let _ = writeln!(
        s,
        r#"<line class="segment" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2.5"/>"#,
        c.x(-shift), c.y(0.0), c.x(q - shift), c.y(p)
    );

    let _ = writeln!(s, r#"<g class="annotations" font-family="serif" font-size="15">"#);
    for e in &events {
        write_annotations(&mut s, &c, &seg, e, params, opts.annotation);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

fn write_annotations(
    s: &mut String,
    c: &Canvas,
    seg: &SegmentSpec,
    e: &CrossingEvent,
    params: &GmParams,
    mode: Annotation,
) {
    let (px, py) = seg.point_at(&e.param);
    let (x, y) = (c.x(approx(&px)), c.y(approx(&py)));
    match (mode, e.crossing) {
        (Annotation::Letters, Crossing::Edge { kind, side }) => {
            let letter = Letter {
                generator: Generator::for_edge(kind),
                inverted: side == Side::Right,
            };
            let _ = writeln!(
                s,
                r#"<text class="ann letter" x="{:.2}" y="{:.2}" fill="navy">{letter}</text>"#,
                x - 14.0,
                y - 6.0
            );
        }
        (Annotation::Letters, Crossing::Triangle { .. }) => {}
        (Annotation::Signs, Crossing::Triangle { sign }) => {
            let _ = writeln!(
                s,
                r#"<text class="ann sign triangle" x="{:.2}" y="{:.2}" fill="darkred">{}</text>"#,
                x + 4.0,
                y + 16.0,
                sign_char(sign)
            );
        }
        (Annotation::Signs, Crossing::Edge { .. }) => {
            let (copies, sign) = event_signs(e, params);
            for n in 0..copies {
                let _ = writeln!(
                    s,
                    r#"<text class="ann sign edge" x="{:.2}" y="{:.2}" fill="navy">{}</text>"#,
                    x - 14.0 - 9.0 * n as f64,
                    y - 6.0,
                    sign_char(sign)
                );
            }
        }
    }
}

/// Number of `class="ann ..."` elements in a rendered document.
pub fn count_annotations(svg: &str) -> usize {
    svg.matches(r#"class="ann "#).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmtree::Sigma;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    const LETTERS: SvgOptions = SvgOptions { shifted: false, annotation: Annotation::Letters };
    const SIGNS: SvgOptions = SvgOptions { shifted: false, annotation: Annotation::Signs };

    #[test]
    fn letter_counts() {
        let p = GmParams::classical();
        assert_eq!(count_annotations(&render(r("2/5"), &p, LETTERS).unwrap()), 11);
        assert_eq!(count_annotations(&render(r("1/1"), &p, LETTERS).unwrap()), 1);
    }

    #[test]
    fn sign_counts() {
        let p = GmParams::new([1, 2, 0], Sigma::IDENTITY);
        let svg = render(r("2/5"), &p, SIGNS).unwrap();
        assert_eq!(svg.matches("ann sign triangle").count(), 12);
        assert_eq!(svg.matches("ann sign edge").count(), 13);
        assert_eq!(count_annotations(&svg), 25);
    }

    #[test]
    fn shifted_has_all_edges() {
        let opts = SvgOptions { shifted: true, annotation: Annotation::Letters };
        let svg = render(r("2/5"), &GmParams::classical(), opts).unwrap();
        assert_eq!(count_annotations(&svg), 14);
    }

    #[test]
    fn document_is_balanced_and_deterministic() {
        let p = GmParams::classical();
        let a = render(r("3/4"), &p, LETTERS).unwrap();
        assert_eq!(a, render(r("3/4"), &p, LETTERS).unwrap());
        assert!(a.starts_with("<?xml"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<g ").count(), a.matches("</g>").count());
    }

    #[test]
    fn boundary_is_rejected() {
        assert!(render(ExtRational::INFINITY, &GmParams::classical(), LETTERS).is_err());
    }
}
