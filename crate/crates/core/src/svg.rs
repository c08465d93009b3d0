//! SVG rendering of a configuration and its report.
//!
//! Class contract: every spanned line is a `<line>` with class `ln`, simple
//! lines also carry `simple`; every point is a `<circle>` with class `pt`,
//! wedge apexes also carry `apex`. Lines come first in key order, then
//! points by index, so output is byte-stable.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use crate::geometry::{rat, LineKey, Point, Rational};
use crate::incidence::Configuration;
use crate::report::AnalysisReport;

struct ViewBox {
    x0: Rational,
    x1: Rational,
    y0: Rational,
    y1: Rational,
}

impl ViewBox {
    /// Bounding box of the points, grown by 5% of its extent on each side.
    fn around(points: &[Point]) -> Self {
        let min_x = points.iter().map(|p| &p.x).min().expect("nonempty").clone();
        let max_x = points.iter().map(|p| &p.x).max().expect("nonempty").clone();
        let min_y = points.iter().map(|p| &p.y).min().expect("nonempty").clone();
        let max_y = points.iter().map(|p| &p.y).max().expect("nonempty").clone();
        let pad_x = (&max_x - &min_x) * rat(1, 20);
        let pad_y = (&max_y - &min_y) * rat(1, 20);
        ViewBox {
            x0: min_x - &pad_x,
            x1: max_x + &pad_x,
            y0: min_y - &pad_y,
            y1: max_y + &pad_y,
        }
    }

    fn width(&self) -> Rational {
        &self.x1 - &self.x0
    }

    fn height(&self) -> Rational {
        &self.y1 - &self.y0
    }

    /// Endpoints of the chord a line cuts through the box.
    fn chord(&self, line: &LineKey) -> Option<(Point, Point)> {
        let a = Rational::from_integer(line.a().clone());
        let b = Rational::from_integer(line.b().clone());
        let c = Rational::from_integer(line.c().clone());
        let mut hits = BTreeSet::new();
        if !b.is_zero() {
            for x in [&self.x0, &self.x1] {
                let y = -(&a * x + &c) / &b;
                if y >= self.y0 && y <= self.y1 {
                    hits.insert(Point::new(x.clone(), y));
                }
            }
        }
        if !a.is_zero() {
            for y in [&self.y0, &self.y1] {
                let x = -(&b * y + &c) / &a;
                if x >= self.x0 && x <= self.x1 {
                    hits.insert(Point::new(x, y.clone()));
                }
            }
        }
        let first = hits.iter().next()?.clone();
        let last = hits.iter().next_back()?.clone();
        (first != last).then_some((first, last))
    }
}

fn num(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or(0.0);
    let s = format!("{v:.4}");
    // normalize "-0.0000"
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.0000".to_string()
    } else {
        s
    }
}

/// SVG y grows downward, so every y coordinate is negated.
fn flip(r: &Rational) -> String {
    num(&-r.clone())
}

pub fn render_svg(config: &Configuration, report: &AnalysisReport) -> String {
    let vb = ViewBox::around(config.points());
    let extent = std::cmp::max(vb.width(), vb.height());
    let radius = num(&(&extent * rat(1, 80)));
    let stroke = num(&(&extent * rat(1, 400)));
    let apexes: BTreeSet<usize> = report.wedges.iter().map(|w| w.apex).collect();

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(&vb.x0),
        flip(&vb.y1),
        num(&vb.width()),
        num(&vb.height())
    );
    let _ = writeln!(
        out,
        "<style>.ln{{stroke:#999;stroke-width:{stroke}}} .simple{{stroke:#1f77b4}} \
         .pt{{fill:#000}} .apex{{fill:#d62728}}</style>"
    );
    for (key, members) in config.spanned_lines().iter() {
        let Some((p, q)) = vb.chord(key) else {
            continue;
        };
        let class = if members.len() == 2 {
            "ln simple"
        } else {
            "ln"
        };
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(&p.x),
            flip(&p.y),
            num(&q.x),
            flip(&q.y)
        );
    }
    for (i, p) in config.points().iter().enumerate() {
        let class = if apexes.contains(&i) { "pt apex" } else { "pt" };
        let _ = writeln!(
            out,
            r#"<circle class="{class}" data-index="{i}" cx="{}" cy="{}" r="{radius}"/>"#,
            num(&p.x),
            flip(&p.y)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Number of elements whose class list contains `class`.
pub fn count_class(svg: &str, class: &str) -> usize {
    svg.match_indices("class=\"")
        .filter(|(i, m)| {
            let rest = &svg[i + m.len()..];
            let end = rest.find('"').unwrap_or(0);
            rest[..end].split_whitespace().any(|c| c == class)
        })
        .count()
}
