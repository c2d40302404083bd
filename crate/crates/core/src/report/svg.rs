use std::fmt::Write;

use super::{PlotSeries, ReportError};
use crate::dataset::Group;

/// Layout and palette for bar charts.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    pub width: f64,
    pub label_width: f64,
    pub value_width: f64,
    pub bar_height: f64,
    pub bar_gap: f64,
    pub margin: f64,
    pub font_size: f64,
    pub desktop_gis: &'static str,
    pub standalone_tool: &'static str,
    pub programming_library: &'static str,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            width: 720.0,
            label_width: 150.0,
            value_width: 70.0,
            bar_height: 16.0,
            bar_gap: 4.0,
            margin: 12.0,
            font_size: 11.0,
            desktop_gis: "#1b9e77",
            standalone_tool: "#d95f02",
            programming_library: "#7570b3",
        }
    }
}

impl SvgStyle {
    pub fn color(&self, group: Group) -> &'static str {
        match group {
            Group::DesktopGis => self.desktop_gis,
            Group::StandaloneTool => self.standalone_tool,
            Group::ProgrammingLibrary => self.programming_library,
        }
    }

    pub fn plot_width(&self) -> f64 {
        self.width - self.label_width - self.value_width - 2.0 * self.margin
    }
}

fn group_label(g: Group) -> &'static str {
    match g {
        Group::DesktopGis => "Desktop GIS",
        Group::StandaloneTool => "Stand-alone tool",
        Group::ProgrammingLibrary => "Programming library",
    }
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

/// Horizontal bar chart, one bar per product in series order. The largest score
/// spans the full plot width.
pub fn render_svg_bars(series: &PlotSeries, style: &SvgStyle) -> Result<String, ReportError> {
    if series.bars.is_empty() {
        return Err(ReportError::EmptySeries);
    }
    let max = series.bars.iter().map(|b| b.score).fold(0.0, f64::max);
    let plot = style.plot_width();
    let title_h = style.font_size * 2.5;
    let legend_h = style.font_size * 2.0;
    let step = style.bar_height + style.bar_gap;
    let top = style.margin + title_h;
    let height = top + step * series.bars.len() as f64 + legend_h + style.margin;
    let x0 = style.margin + style.label_width;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{height:.0}" viewBox="0 0 {w:.0} {height:.0}" font-family="sans-serif" font-size="{fs}">"#,
        w = style.width,
        fs = style.font_size,
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(&series.title));
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{:.0}" height="{height:.0}" fill="#ffffff"/>"##,
        style.width
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="{:.1}" font-weight="bold">{}</text>"#,
        style.margin,
        style.margin + style.font_size * 1.3,
        style.font_size * 1.3,
        escape(&series.title)
    );
    for (i, b) in series.bars.iter().enumerate() {
        let y = top + step * i as f64;
        let len = if max > 0.0 { b.score / max * plot } else { 0.0 };
        let text_y = y + style.bar_height / 2.0 + style.font_size * 0.35;
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{text_y:.2}" text-anchor="end">{}</text>"#,
            x0 - 6.0,
            escape(&b.product)
        );
        let _ = writeln!(
            s,
            r#"<rect x="{x0:.2}" y="{y:.2}" width="{len:.2}" height="{:.2}" fill="{}"/>"#,
            style.bar_height,
            style.color(b.group)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{text_y:.2}">{:.3}</text>"#,
            x0 + len + 4.0,
            b.score
        );
    }
    let legend_y = top + step * series.bars.len() as f64 + legend_h * 0.5;
    let mut x = x0;
    for g in Group::ALL {
        let _ = writeln!(
            s,
            r#"<rect x="{x:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
            legend_y - style.font_size * 0.8,
            style.font_size,
            style.font_size,
            style.color(g)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{legend_y:.2}">{}</text>"#,
            x + style.font_size * 1.4,
            group_label(g)
        );
        x += style.font_size * 1.4 + group_label(g).len() as f64 * style.font_size * 0.6 + 16.0;
    }
    s.push_str("</svg>\n");
    Ok(s)
}
