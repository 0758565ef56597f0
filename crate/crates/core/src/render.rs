//! SVG and box-drawing renderings of a drawing.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::rect::{DiagonalOrder, JointKind, RectDrawing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::Parse(format!("unknown format {s:?} (ascii, svg)"))),
        }
    }
}

/// Which numbers to print inside the rectangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Labels {
    #[default]
    None,
    Order(DiagonalOrder),
    /// Number of rectangles lying entirely to the left.
    L,
}

impl FromStr for Labels {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "none" => Ok(Labels::None),
            "nwse" => Ok(Labels::Order(DiagonalOrder::NwSe)),
            "swne" => Ok(Labels::Order(DiagonalOrder::SwNe)),
            "senw" => Ok(Labels::Order(DiagonalOrder::SeNw)),
            "nesw" => Ok(Labels::Order(DiagonalOrder::NeSw)),
            "l" => Ok(Labels::L),
            _ => Err(Error::Parse(format!("unknown labels {s:?} (none, nwse, swne, senw, nesw, l)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub labels: Labels,
    pub joints: bool,
    pub diagonal: bool,
    /// SVG pixels per grid unit.
    pub scale: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { format: Format::Ascii, labels: Labels::None, joints: false, diagonal: false, scale: 40 }
    }
}

fn label_values(d: &RectDrawing, labels: Labels) -> Option<Vec<usize>> {
    match labels {
        Labels::None => None,
        Labels::Order(o) => Some(d.relations().labels(o)),
        Labels::L => Some(d.l_labels()),
    }
}

pub fn render(d: &RectDrawing, opts: &RenderOptions) -> String {
    match opts.format {
        Format::Ascii => ascii(d, opts),
        Format::Svg => svg(d, opts),
    }
}

const CELL_W: usize = 4;
const CELL_H: usize = 2;
const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

fn box_char(mask: u8) -> char {
    match mask {
        0 => ' ',
        m if m == LEFT | RIGHT || m == LEFT || m == RIGHT => '─',
        m if m == UP | DOWN || m == UP || m == DOWN => '│',
        m if m == RIGHT | DOWN => '┌',
        m if m == LEFT | DOWN => '┐',
        m if m == RIGHT | UP => '└',
        m if m == LEFT | UP => '┘',
        m if m == UP | DOWN | RIGHT => '├',
        m if m == UP | DOWN | LEFT => '┤',
        m if m == LEFT | RIGHT | DOWN => '┬',
        m if m == LEFT | RIGHT | UP => '┴',
        _ => '┼',
    }
}

fn ascii(d: &RectDrawing, opts: &RenderOptions) -> String {
    let (w, h) = (d.width() as usize, d.height() as usize);
    let cols = w * CELL_W + 1;
    let rows = h * CELL_H + 1;
    let mut mask = vec![vec![0u8; cols]; rows];
    let row = |y: u32| (h - y as usize) * CELL_H;
    let col = |x: u32| x as usize * CELL_W;
    for r in d.rects() {
        let (c0, c1, r0, r1) = (col(r.x0), col(r.x1), row(r.y1), row(r.y0));
        for rr in [r0, r1] {
            for c in c0..c1 {
                mask[rr][c] |= RIGHT;
                mask[rr][c + 1] |= LEFT;
            }
        }
        for c in [c0, c1] {
            for rr in r0..r1 {
                mask[rr][c] |= DOWN;
                mask[rr + 1][c] |= UP;
            }
        }
    }
    let mut grid: Vec<Vec<char>> = mask.iter().map(|r| r.iter().map(|&m| box_char(m)).collect()).collect();
    if opts.diagonal {
        for (c, line) in (0..cols).map(|c| (c, c * (rows - 1) / (cols - 1))) {
            if grid[line][c] == ' ' {
                grid[line][c] = '.';
            }
        }
    }
    if opts.joints {
        for j in d.joints() {
            grid[row(j.y)][col(j.x)] = j.kind.glyph();
        }
    }
    if let Some(values) = label_values(d, opts.labels) {
        for (r, v) in d.rects().iter().zip(values) {
            let text = v.to_string();
            let rr = (row(r.y1) + row(r.y0)) / 2;
            let start = (col(r.x0) + col(r.x1) + 1).saturating_sub(text.len()) / 2;
            for (k, ch) in text.chars().enumerate() {
                let c = (start + k).min(col(r.x1) - 1).max(col(r.x0) + 1);
                grid[rr][c] = ch;
            }
        }
    }
    let mut out = String::new();
    for line in grid {
        out.push_str(line.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

fn svg(d: &RectDrawing, opts: &RenderOptions) -> String {
    let s = opts.scale.max(1);
    let m = s / 4;
    let (w, h) = (d.width() * s, d.height() * s);
    let px = |x: u32| x * s + m;
    let py = |y: u32| (d.height() - y) * s + m;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w + 2 * m,
        h + 2 * m,
        w + 2 * m,
        h + 2 * m
    );
    for r in d.rects() {
        let _ = writeln!(
            out,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="white" stroke="black" stroke-width="2"/>"#,
            px(r.x0),
            py(r.y1),
            (r.x1 - r.x0) * s,
            (r.y1 - r.y0) * s
        );
    }
    if opts.diagonal {
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="4 4"/>"#,
            px(0),
            py(d.height()),
            px(d.width()),
            py(0)
        );
    }
    if opts.joints {
        for j in d.joints() {
            let color = match j.kind {
                JointKind::Td => "red",
                JointKind::Tu => "blue",
                JointKind::Tr => "green",
                JointKind::Tl => "orange",
            };
            let _ = writeln!(
                out,
                r#"  <circle cx="{}" cy="{}" r="{}" fill="{color}"><title>{}</title></circle>"#,
                px(j.x),
                py(j.y),
                (s / 10).max(2),
                j.kind.glyph()
            );
        }
    }
    if let Some(values) = label_values(d, opts.labels) {
        for (r, v) in d.rects().iter().zip(values) {
            let _ = writeln!(
                out,
                r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="{}" text-anchor="middle" dominant-baseline="central">{v}</text>"#,
                (px(r.x0) + px(r.x1)) / 2,
                (py(r.y0) + py(r.y1)) / 2,
                (s / 3).max(8)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::fixtures::*;

    #[test]
    fn ascii_v2() {
        assert_eq!(render(&v2(), &RenderOptions::default()), "┌───┬───┐\n│   │   │\n└───┴───┘\n");
    }

    #[test]
    fn svg_v2_has_two_cells() {
        let out = render(&v2(), &RenderOptions { format: Format::Svg, ..Default::default() });
        assert_eq!(out.matches("<rect ").count(), 2);
        assert!(out.starts_with("<svg"));
    }

    #[test]
    fn d3_joint_is_marked() {
        let opts = RenderOptions { joints: true, labels: Labels::Order(DiagonalOrder::NwSe), ..Default::default() };
        let out = render(&d3(), &opts);
        assert!(out.contains('⊤'));
        for k in ["1", "2", "3"] {
            assert!(out.contains(k));
        }
        let svg = render(&d3(), &RenderOptions { format: Format::Svg, ..opts });
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(render(&d3(), &opts), out);
    }
}
