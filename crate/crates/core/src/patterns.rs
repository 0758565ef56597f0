//! Rectangulation patterns: the four T-joints and the two windmills.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rect::{JointKind, Orientation, RectDrawing, Segment};

/// Turning direction of a windmill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Chirality {
    Clockwise,
    CounterClockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    Joint(JointKind),
    Windmill(Chirality),
}

impl Pattern {
    pub const TD: Pattern = Pattern::Joint(JointKind::Td);
    pub const TU: Pattern = Pattern::Joint(JointKind::Tu);
    pub const TR: Pattern = Pattern::Joint(JointKind::Tr);
    pub const TL: Pattern = Pattern::Joint(JointKind::Tl);
    pub const WM_CW: Pattern = Pattern::Windmill(Chirality::Clockwise);
    pub const WM_CCW: Pattern = Pattern::Windmill(Chirality::CounterClockwise);

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Joint(JointKind::Td) => "td",
            Pattern::Joint(JointKind::Tu) => "tu",
            Pattern::Joint(JointKind::Tr) => "tr",
            Pattern::Joint(JointKind::Tl) => "tl",
            Pattern::Windmill(Chirality::Clockwise) => "wm+",
            Pattern::Windmill(Chirality::CounterClockwise) => "wm-",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "td" | "⊤" => Ok(Pattern::TD),
            "tu" | "⊥" => Ok(Pattern::TU),
            "tr" | "⊢" => Ok(Pattern::TR),
            "tl" | "⊣" => Ok(Pattern::TL),
            "wm+" | "wm" => Ok(Pattern::WM_CW),
            "wm-" => Ok(Pattern::WM_CCW),
            other => Err(Error::Parse(format!("unknown pattern `{other}`"))),
        }
    }
}

/// Which segment each stem end lies on, keyed by (stem, joint kind).
fn end_map(d: &RectDrawing) -> HashMap<(Segment, JointKind), Segment> {
    d.joints().into_iter().map(|j| ((j.stem, j.kind), j.bar)).collect()
}

/// Windmills of the given chirality. A clockwise windmill is a cycle
/// `h -> v -> h' -> v' -> h` where the right end of `h` lies on `v`, the
/// bottom end of `v` on `h'`, the left end of `h'` on `v'` and the top end of
/// `v'` on `h`. The counter-clockwise one swaps top and bottom.
pub fn windmills(d: &RectDrawing, chirality: Chirality) -> Vec<[Segment; 4]> {
    let ends = end_map(d);
    let (first_v, second_v) = match chirality {
        Chirality::Clockwise => (JointKind::Tu, JointKind::Td),
        Chirality::CounterClockwise => (JointKind::Td, JointKind::Tu),
    };
    let mut out = Vec::new();
    for h in d.horizontals() {
        let Some(&v) = ends.get(&(h, JointKind::Tl)) else { continue };
        let Some(&h2) = ends.get(&(v, first_v)) else { continue };
        let Some(&v2) = ends.get(&(h2, JointKind::Tr)) else { continue };
        if ends.get(&(v2, second_v)) == Some(&h) {
            debug_assert_eq!(v.orientation, Orientation::Vertical);
            out.push([h, v, h2, v2]);
        }
    }
    out
}

pub fn contains(d: &RectDrawing, p: Pattern) -> bool {
    match p {
        Pattern::Joint(k) => d.has_joint(k),
        Pattern::Windmill(c) => !windmills(d, c).is_empty(),
    }
}

pub fn avoids_all(d: &RectDrawing, ps: &[Pattern]) -> bool {
    ps.iter().all(|&p| !contains(d, p))
}

/// True when the drawing can be cut recursively by full cuts.
pub fn is_guillotine(d: &RectDrawing) -> bool {
    let all: Vec<usize> = (0..d.n()).collect();
    guillotine_region(d, &all)
}

fn guillotine_region(d: &RectDrawing, idx: &[usize]) -> bool {
    if idx.len() <= 1 {
        return true;
    }
    let rects = d.rects();
    let x0 = idx.iter().map(|&i| rects[i].x0).min().unwrap_or(0);
    let y0 = idx.iter().map(|&i| rects[i].y0).min().unwrap_or(0);
    for &i in idx {
        let c = rects[i].x0;
        if c > x0 && idx.iter().all(|&j| rects[j].x1 <= c || rects[j].x0 >= c) {
            let (a, b): (Vec<usize>, Vec<usize>) = idx.iter().partition(|&&j| rects[j].x1 <= c);
            return guillotine_region(d, &a) && guillotine_region(d, &b);
        }
        let c = rects[i].y0;
        if c > y0 && idx.iter().all(|&j| rects[j].y1 <= c || rects[j].y0 >= c) {
            let (a, b): (Vec<usize>, Vec<usize>) = idx.iter().partition(|&&j| rects[j].y1 <= c);
            return guillotine_region(d, &a) && guillotine_region(d, &b);
        }
    }
    false
}

/// Parse a comma-separated list of pattern names.
pub fn parse_list(s: &str) -> Result<Vec<Pattern>> {
    let mut out: Vec<Pattern> = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let p: Pattern = part.parse()?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}
