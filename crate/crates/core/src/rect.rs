//! Compact integer drawings of generic rectangulations.
//!
//! A drawing of `n` rectangles lives in `[0, W] x [0, H]` with `W + H = n + 1`.
//! Every interior grid line carries exactly one maximal segment, no two
//! segments cross and no two segments share an endpoint. The `y` axis points
//! up. Rectangles are stored in NW-SE order, so index `i` is the `i`-th
//! rectangle met along that order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of rectangles (relations are `u64` bitsets).
pub const MAX_RECTS: usize = 64;

/// Axis-parallel box `[x0, x1] x [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
}

impl Rect {
    pub const fn new(x0: u32, y0: u32, x1: u32, y1: u32) -> Self {
        Rect { x0, y0, x1, y1 }
    }

    pub fn area(&self) -> u64 {
        u64::from(self.x1.saturating_sub(self.x0)) * u64::from(self.y1.saturating_sub(self.y0))
    }

    fn interiors_overlap(&self, o: &Rect) -> bool {
        self.x0 < o.x1 && o.x0 < self.x1 && self.y0 < o.y1 && o.y0 < self.y1
    }

    fn x_overlap_len(&self, o: &Rect) -> u32 {
        self.x1.min(o.x1).saturating_sub(self.x0.max(o.x0))
    }

    fn y_overlap_len(&self, o: &Rect) -> u32 {
        self.y1.min(o.y1).saturating_sub(self.y0.max(o.y0))
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x0, self.y0, self.x1, self.y1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A maximal segment. For a vertical segment `coord` is its `x` and
/// `[lo, hi]` its `y` range; for a horizontal one the roles swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub orientation: Orientation,
    pub coord: u32,
    pub lo: u32,
    pub hi: u32,
}

impl Segment {
    fn contains_strictly(&self, t: u32) -> bool {
        self.lo < t && t < self.hi
    }
}

/// The four kinds of T-joint, named after the glyph they draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum JointKind {
    /// `⊤`: the top end of a vertical segment lies on a horizontal one.
    Td,
    /// `⊥`: the bottom end of a vertical segment lies on a horizontal one.
    Tu,
    /// `⊢`: the left end of a horizontal segment lies on a vertical one.
    Tr,
    /// `⊣`: the right end of a horizontal segment lies on a vertical one.
    Tl,
}

impl JointKind {
    pub const ALL: [JointKind; 4] = [JointKind::Td, JointKind::Tu, JointKind::Tr, JointKind::Tl];

    pub fn glyph(self) -> char {
        match self {
            JointKind::Td => '⊤',
            JointKind::Tu => '⊥',
            JointKind::Tr => '⊢',
            JointKind::Tl => '⊣',
        }
    }
}

/// A T-joint: the `stem` segment ends in the interior of the `bar` segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Joint {
    pub kind: JointKind,
    pub x: u32,
    pub y: u32,
    pub stem: Segment,
    pub bar: Segment,
}

/// One reason a candidate drawing is not a valid compact drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    TooLarge(usize),
    SizeMismatch { width: u32, height: u32, n: usize },
    OutOfBounds(usize),
    Degenerate(usize),
    Overlap(usize, usize),
    NotCovered { covered: u64, total: u64 },
    EmptyLine { orientation: Orientation, coord: u32 },
    SplitLine { orientation: Orientation, coord: u32, pieces: usize },
    Crossing { x: u32, y: u32 },
    SharedEndpoint { x: u32, y: u32 },
    Relations(String),
    NotOrdered,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no rectangles"),
            Violation::TooLarge(n) => write!(f, "{n} rectangles exceed the limit {MAX_RECTS}"),
            Violation::SizeMismatch { width, height, n } => {
                write!(f, "width {width} + height {height} != {n} + 1")
            }
            Violation::OutOfBounds(i) => write!(f, "rectangle {i} leaves the bounding box"),
            Violation::Degenerate(i) => write!(f, "rectangle {i} has zero area"),
            Violation::Overlap(i, j) => write!(f, "rectangles {i} and {j} overlap"),
            Violation::NotCovered { covered, total } => {
                write!(f, "rectangles cover area {covered} of {total}")
            }
            Violation::EmptyLine { orientation, coord } => {
                write!(f, "{orientation:?} line {coord} carries no segment")
            }
            Violation::SplitLine { orientation, coord, pieces } => {
                write!(f, "{orientation:?} line {coord} carries {pieces} segments")
            }
            Violation::Crossing { x, y } => write!(f, "segments cross at ({x},{y})"),
            Violation::SharedEndpoint { x, y } => write!(f, "segments share the endpoint ({x},{y})"),
            Violation::Relations(msg) => write!(f, "{msg}"),
            Violation::NotOrdered => write!(f, "rectangles are not listed in NW-SE order"),
        }
    }
}

/// Left/right/above/below relation of rectangle `i` to rectangle `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    Left,
    Right,
    Above,
    Below,
}

/// Transitive left-of and below-of relations as bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relations {
    n: usize,
    left: Vec<u64>,
    below: Vec<u64>,
}

impl Relations {
    fn compute(rects: &[Rect]) -> std::result::Result<Self, String> {
        let n = rects.len();
        let mut left = vec![0u64; n];
        let mut below = vec![0u64; n];
        for (i, a) in rects.iter().enumerate() {
            for (j, b) in rects.iter().enumerate() {
                if a.x1 == b.x0 {
                    left[i] |= 1 << j;
                }
                if a.y1 == b.y0 {
                    below[i] |= 1 << j;
                }
            }
        }
        for rel in [&mut left, &mut below] {
            for k in 0..n {
                for i in 0..n {
                    if rel[i] >> k & 1 == 1 {
                        rel[i] |= rel[k];
                    }
                }
            }
        }
        let r = Relations { n, left, below };
        for i in 0..n {
            for j in 0..n {
                let count = [r.is_left(i, j), r.is_left(j, i), r.is_below(i, j), r.is_below(j, i)]
                    .iter()
                    .filter(|&&b| b)
                    .count();
                let expected = usize::from(i != j);
                if count != expected {
                    return Err(format!("rectangles {i} and {j} are related {count} ways, expected {expected}"));
                }
            }
        }
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i` is (transitively) left of `j`.
    pub fn is_left(&self, i: usize, j: usize) -> bool {
        self.left[i] >> j & 1 == 1
    }

    /// `i` is (transitively) below `j`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.below[i] >> j & 1 == 1
    }

    /// Relation of `i` to `j`, `None` when `i == j`.
    pub fn get(&self, i: usize, j: usize) -> Option<Relation> {
        if self.is_left(i, j) {
            Some(Relation::Left)
        } else if self.is_left(j, i) {
            Some(Relation::Right)
        } else if self.is_below(i, j) {
            Some(Relation::Below)
        } else if self.is_below(j, i) {
            Some(Relation::Above)
        } else {
            None
        }
    }

    /// Number of rectangles left of `j`.
    pub fn count_left_of(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.is_left(i, j)).count()
    }

    fn precedes(&self, order: DiagonalOrder, i: usize, j: usize) -> bool {
        match order {
            DiagonalOrder::NwSe => self.is_left(i, j) || self.is_below(j, i),
            DiagonalOrder::SwNe => self.is_left(i, j) || self.is_below(i, j),
            DiagonalOrder::SeNw => self.is_left(j, i) || self.is_below(i, j),
            DiagonalOrder::NeSw => self.is_left(j, i) || self.is_below(j, i),
        }
    }

    /// Rectangle indices listed in the given diagonal order.
    pub fn order(&self, order: DiagonalOrder) -> Vec<usize> {
        let mut slots = vec![usize::MAX; self.n];
        for i in 0..self.n {
            let rank = (0..self.n).filter(|&j| self.precedes(order, j, i)).count();
            slots[rank] = i;
        }
        slots
    }

    /// 1-based label of every rectangle in the given diagonal order.
    pub fn labels(&self, order: DiagonalOrder) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (pos, &i) in self.order(order).iter().enumerate() {
            labels[i] = pos + 1;
        }
        labels
    }
}

/// The four diagonal orders. `NwSe`: `X` precedes `Y` iff `X` is left of or
/// above `Y`. `SwNe`: left of or below. `SeNw`: right of or below. `NeSw`:
/// right of or above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagonalOrder {
    NwSe,
    SwNe,
    SeNw,
    NeSw,
}

/// Equivalence key for weak classes: for each pair `i < j` (NW-SE order),
/// whether `i` is left of `j` (set) or above it (clear).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakKey {
    n: u32,
    bits: Vec<u64>,
}

/// Which side of the earlier rectangle a contact lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ContactSide {
    Right,
    Bottom,
}

/// Equivalence key for strong classes: the weak key plus every pair of
/// rectangles sharing a boundary piece of positive length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrongKey {
    pub weak: WeakKey,
    pub contacts: Vec<(u8, u8, ContactSide)>,
}

/// A validated compact drawing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DrawingRepr", into = "DrawingRepr")]
pub struct RectDrawing {
    width: u32,
    height: u32,
    rects: Vec<Rect>,
}

#[derive(Serialize, Deserialize)]
struct DrawingRepr {
    width: u32,
    height: u32,
    rects: Vec<[u32; 4]>,
}

impl TryFrom<DrawingRepr> for RectDrawing {
    type Error = Error;

    fn try_from(r: DrawingRepr) -> Result<Self> {
        let rects = r.rects.iter().map(|a| Rect::new(a[0], a[1], a[2], a[3])).collect();
        RectDrawing::new(r.width, r.height, rects)
    }
}

impl From<RectDrawing> for DrawingRepr {
    fn from(d: RectDrawing) -> Self {
        DrawingRepr {
            width: d.width,
            height: d.height,
            rects: d.rects.iter().map(|r| [r.x0, r.y0, r.x1, r.y1]).collect(),
        }
    }
}

impl fmt::Display for RectDrawing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} [", self.width, self.height)?;
        for (i, r) in self.rects.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

fn merged_intervals(mut iv: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    iv.sort_unstable();
    let mut out: Vec<(u32, u32)> = Vec::new();
    for (lo, hi) in iv {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Maximal segments on every interior line, grouped per line.
fn line_segments(width: u32, height: u32, rects: &[Rect], orientation: Orientation) -> BTreeMap<u32, Vec<(u32, u32)>> {
    let mut by_line: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
    for r in rects {
        let (a, b, lo, hi, limit) = match orientation {
            Orientation::Vertical => (r.x0, r.x1, r.y0, r.y1, width),
            Orientation::Horizontal => (r.y0, r.y1, r.x0, r.x1, height),
        };
        for c in [a, b] {
            if c > 0 && c < limit {
                by_line.entry(c).or_default().push((lo, hi));
            }
        }
    }
    by_line.into_iter().map(|(c, iv)| (c, merged_intervals(iv))).collect()
}

fn tiling_violations(width: u32, height: u32, rects: &[Rect]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, r) in rects.iter().enumerate() {
        if r.x1 > width || r.y1 > height {
            out.push(Violation::OutOfBounds(i));
        }
        if r.x0 >= r.x1 || r.y0 >= r.y1 {
            out.push(Violation::Degenerate(i));
        }
    }
    for i in 0..rects.len() {
        for j in i + 1..rects.len() {
            if rects[i].interiors_overlap(&rects[j]) {
                out.push(Violation::Overlap(i, j));
            }
        }
    }
    let covered: u64 = rects.iter().map(Rect::area).sum();
    let total = u64::from(width) * u64::from(height);
    if out.is_empty() && covered != total {
        out.push(Violation::NotCovered { covered, total });
    }
    out
}

fn genericity_violations(vert: &[Segment], horiz: &[Segment]) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in vert {
        for h in horiz {
            let meets = v.lo <= h.coord && h.coord <= v.hi && h.lo <= v.coord && v.coord <= h.hi;
            if !meets {
                continue;
            }
            let v_end = h.coord == v.lo || h.coord == v.hi;
            let h_end = v.coord == h.lo || v.coord == h.hi;
            match (v_end, h_end) {
                (false, false) => out.push(Violation::Crossing { x: v.coord, y: h.coord }),
                (true, true) => out.push(Violation::SharedEndpoint { x: v.coord, y: h.coord }),
                _ => {}
            }
        }
    }
    out
}

fn flatten(map: BTreeMap<u32, Vec<(u32, u32)>>, orientation: Orientation) -> Vec<Segment> {
    map.into_iter()
        .flat_map(|(coord, iv)| iv.into_iter().map(move |(lo, hi)| Segment { orientation, coord, lo, hi }))
        .collect()
}

/// All reasons why `(width, height, rects)` is not a valid compact drawing.
/// An empty result means the drawing is valid.
pub fn validate(width: u32, height: u32, rects: &[Rect]) -> Vec<Violation> {
    let n = rects.len();
    if n == 0 {
        return vec![Violation::Empty];
    }
    if n > MAX_RECTS {
        return vec![Violation::TooLarge(n)];
    }
    let mut out = Vec::new();
    if width as usize + height as usize != n + 1 {
        out.push(Violation::SizeMismatch { width, height, n });
    }
    let tiling = tiling_violations(width, height, rects);
    if !tiling.is_empty() {
        out.extend(tiling);
        return out;
    }
    let vmap = line_segments(width, height, rects, Orientation::Vertical);
    let hmap = line_segments(width, height, rects, Orientation::Horizontal);
    for (orientation, map, limit) in [(Orientation::Vertical, &vmap, width), (Orientation::Horizontal, &hmap, height)] {
        for coord in 1..limit {
            match map.get(&coord).map_or(0, Vec::len) {
                1 => {}
                0 => out.push(Violation::EmptyLine { orientation, coord }),
                pieces => out.push(Violation::SplitLine { orientation, coord, pieces }),
            }
        }
    }
    let vert = flatten(vmap, Orientation::Vertical);
    let horiz = flatten(hmap, Orientation::Horizontal);
    out.extend(genericity_violations(&vert, &horiz));
    if !out.is_empty() {
        return out;
    }
    match Relations::compute(rects) {
        Err(msg) => out.push(Violation::Relations(msg)),
        Ok(rel) => {
            if rel.order(DiagonalOrder::NwSe).iter().enumerate().any(|(p, &i)| p != i) {
                out.push(Violation::NotOrdered);
            }
        }
    }
    out
}

fn violations_error(v: &[Violation]) -> Error {
    let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
    Error::InvalidDrawing(msgs.join("; "))
}

impl RectDrawing {
    /// Build a drawing whose rectangles are already in NW-SE order.
    pub fn new(width: u32, height: u32, rects: Vec<Rect>) -> Result<Self> {
        let v = validate(width, height, &rects);
        if v.is_empty() {
            Ok(RectDrawing { width, height, rects })
        } else {
            Err(violations_error(&v))
        }
    }

    /// Build a drawing from rectangles in any order; they are sorted into
    /// NW-SE order before validation.
    pub fn from_tiling(width: u32, height: u32, rects: Vec<Rect>) -> Result<Self> {
        let mut pre = tiling_violations(width, height, &rects);
        if rects.is_empty() {
            pre.push(Violation::Empty);
        }
        if rects.len() > MAX_RECTS {
            pre.push(Violation::TooLarge(rects.len()));
        }
        if !pre.is_empty() {
            return Err(violations_error(&pre));
        }
        let rel = Relations::compute(&rects).map_err(Error::InvalidDrawing)?;
        let sorted = rel.order(DiagonalOrder::NwSe).into_iter().map(|i| rects[i]).collect();
        RectDrawing::new(width, height, sorted)
    }

    /// Compact an arbitrary generic tiling of `[0, width] x [0, height]`.
    ///
    /// Collinear segments may share a grid line. Segments are ranked by
    /// `(coordinate, lo)` and every rectangle side is moved to the rank of the
    /// segment carrying it.
    pub fn from_boxes(width: u32, height: u32, rects: &[Rect]) -> Result<Self> {
        let pre = tiling_violations(width, height, rects);
        if !pre.is_empty() {
            return Err(violations_error(&pre));
        }
        let vert = flatten(line_segments(width, height, rects, Orientation::Vertical), Orientation::Vertical);
        let horiz = flatten(line_segments(width, height, rects, Orientation::Horizontal), Orientation::Horizontal);
        let gen = genericity_violations(&vert, &horiz);
        if !gen.is_empty() {
            return Err(violations_error(&gen));
        }
        // flatten yields segments sorted by (coord, lo), which is the rank order
        let rank = |segs: &[Segment], coord: u32, a: u32, b: u32, limit: u32, top: u32| -> u32 {
            if coord == 0 {
                return 0;
            }
            if coord == limit {
                return top;
            }
            let pos = segs
                .iter()
                .position(|s| s.coord == coord && s.lo <= a && b <= s.hi)
                .expect("rectangle side lies on a segment");
            pos as u32 + 1
        };
        let cw = vert.len() as u32 + 1;
        let ch = horiz.len() as u32 + 1;
        let compact: Vec<Rect> = rects
            .iter()
            .map(|r| {
                Rect::new(
                    rank(&vert, r.x0, r.y0, r.y1, width, cw),
                    rank(&horiz, r.y0, r.x0, r.x1, height, ch),
                    rank(&vert, r.x1, r.y0, r.y1, width, cw),
                    rank(&horiz, r.y1, r.x0, r.x1, height, ch),
                )
            })
            .collect();
        RectDrawing::from_tiling(cw, ch, compact)
    }

    /// Faces of the subdivision of `[0, width] x [0, height]` by `segments`,
    /// compacted. Each segment is `(orientation, coord, lo, hi)`.
    pub fn from_segments(width: u32, height: u32, segments: &[Segment]) -> Result<Self> {
        RectDrawing::from_boxes(width, height, &faces(width, height, segments)?)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Number of rectangles.
    pub fn n(&self) -> usize {
        self.rects.len()
    }

    /// Rectangles in NW-SE order.
    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// The single rectangle `[0,1] x [0,1]`.
    pub fn unit() -> Self {
        RectDrawing { width: 1, height: 1, rects: vec![Rect::new(0, 0, 1, 1)] }
    }

    pub fn relations(&self) -> Relations {
        Relations::compute(&self.rects).expect("validated drawing has consistent relations")
    }

    /// Rectangle indices in the given diagonal order.
    pub fn order(&self, order: DiagonalOrder) -> Vec<usize> {
        self.relations().order(order)
    }

    /// The segment on vertical line `x`, for `0 < x < width`.
    pub fn vertical(&self, x: u32) -> Segment {
        let (lo, hi) = self
            .rects
            .iter()
            .filter(|r| r.x0 == x || r.x1 == x)
            .fold((u32::MAX, 0), |(lo, hi), r| (lo.min(r.y0), hi.max(r.y1)));
        Segment { orientation: Orientation::Vertical, coord: x, lo, hi }
    }

    /// The segment on horizontal line `y`, for `0 < y < height`.
    pub fn horizontal(&self, y: u32) -> Segment {
        let (lo, hi) = self
            .rects
            .iter()
            .filter(|r| r.y0 == y || r.y1 == y)
            .fold((u32::MAX, 0), |(lo, hi), r| (lo.min(r.x0), hi.max(r.x1)));
        Segment { orientation: Orientation::Horizontal, coord: y, lo, hi }
    }

    pub fn verticals(&self) -> Vec<Segment> {
        (1..self.width).map(|x| self.vertical(x)).collect()
    }

    pub fn horizontals(&self) -> Vec<Segment> {
        (1..self.height).map(|y| self.horizontal(y)).collect()
    }

    /// All T-joints.
    pub fn joints(&self) -> Vec<Joint> {
        let mut out = Vec::new();
        for v in self.verticals() {
            if v.hi < self.height {
                let bar = self.horizontal(v.hi);
                out.push(Joint { kind: JointKind::Td, x: v.coord, y: v.hi, stem: v, bar });
            }
            if v.lo > 0 {
                let bar = self.horizontal(v.lo);
                out.push(Joint { kind: JointKind::Tu, x: v.coord, y: v.lo, stem: v, bar });
            }
        }
        for h in self.horizontals() {
            if h.lo > 0 {
                let bar = self.vertical(h.lo);
                out.push(Joint { kind: JointKind::Tr, x: h.lo, y: h.coord, stem: h, bar });
            }
            if h.hi < self.width {
                let bar = self.vertical(h.hi);
                out.push(Joint { kind: JointKind::Tl, x: h.hi, y: h.coord, stem: h, bar });
            }
        }
        debug_assert!(out.iter().all(|j| j.bar.contains_strictly(match j.bar.orientation {
            Orientation::Vertical => j.y,
            Orientation::Horizontal => j.x,
        })));
        out
    }

    pub fn has_joint(&self, kind: JointKind) -> bool {
        self.joints().iter().any(|j| j.kind == kind)
    }

    pub fn weak_key(&self) -> WeakKey {
        let rel = self.relations();
        let n = self.n();
        let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if rel.is_left(i, j) {
                    bits[k / 64] |= 1 << (k % 64);
                }
                k += 1;
            }
        }
        WeakKey { n: n as u32, bits }
    }

    pub fn strong_key(&self) -> StrongKey {
        let mut contacts = Vec::new();
        for (i, a) in self.rects.iter().enumerate() {
            for (j, b) in self.rects.iter().enumerate().skip(i + 1) {
                if a.x1 == b.x0 && a.y_overlap_len(b) > 0 {
                    contacts.push((i as u8, j as u8, ContactSide::Right));
                } else if a.y0 == b.y1 && a.x_overlap_len(b) > 0 {
                    contacts.push((i as u8, j as u8, ContactSide::Bottom));
                }
            }
        }
        StrongKey { weak: self.weak_key(), contacts }
    }

    /// For every rectangle, the number of rectangles left of it.
    pub fn l_labels(&self) -> Vec<usize> {
        let rel = self.relations();
        (0..self.n()).map(|j| rel.count_left_of(j)).collect()
    }

    pub fn is_north(&self, r: &Rect) -> bool {
        r.y1 == self.height
    }

    pub fn is_east(&self, r: &Rect) -> bool {
        r.x1 == self.width
    }

    pub fn is_south(&self, r: &Rect) -> bool {
        r.y0 == 0
    }

    pub fn is_west(&self, r: &Rect) -> bool {
        r.x0 == 0
    }

    /// Number of rectangles touching the N, E, S and W sides.
    pub fn boundary_counts(&self) -> [usize; 4] {
        let count = |f: &dyn Fn(&Rect) -> bool| self.rects.iter().filter(|r| f(r)).count();
        [
            count(&|r| self.is_north(r)),
            count(&|r| self.is_east(r)),
            count(&|r| self.is_south(r)),
            count(&|r| self.is_west(r)),
        ]
    }

    /// Index of the rectangle in the top-right corner.
    pub fn ne_index(&self) -> usize {
        self.rects
            .iter()
            .position(|r| r.x1 == self.width && r.y1 == self.height)
            .expect("some rectangle holds the NE corner")
    }

    /// Mirror top to bottom (`reflect_y = true`) or left to right.
    pub fn reflect(&self, reflect_y: bool) -> Self {
        let (w, h) = (self.width, self.height);
        let rects = self
            .rects
            .iter()
            .map(|r| {
                if reflect_y {
                    Rect::new(r.x0, h - r.y1, r.x1, h - r.y0)
                } else {
                    Rect::new(w - r.x1, r.y0, w - r.x0, r.y1)
                }
            })
            .collect();
        RectDrawing::from_tiling(w, h, rects).expect("reflection of a valid drawing is valid")
    }

    /// Rotate a quarter turn clockwise: `(x, y) -> (y, W - x)`.
    pub fn rotate(&self) -> Self {
        let w = self.width;
        let rects = self.rects.iter().map(|r| Rect::new(r.y0, w - r.x1, r.y1, w - r.x0)).collect();
        RectDrawing::from_tiling(self.height, w, rects).expect("rotation of a valid drawing is valid")
    }

    /// True when the diagonal from the NW corner to the SE corner meets the
    /// interior of every rectangle.
    pub fn is_diagonal(&self) -> bool {
        boxes_meet_diagonal(self.width, self.height, &self.rects)
    }

    /// Canonical representative of the strong class: horizontal segments are
    /// renumbered by the leftmost linear extension of their heap order and
    /// vertical segments by the lowest-first extension of theirs.
    pub fn canonical(&self) -> Self {
        let horiz = self.horizontals();
        let vert = self.verticals();
        let hrank = heap_ranks(&horiz, |s, t| s.coord < t.coord);
        let vrank = heap_ranks(&vert, |s, t| s.coord < t.coord);
        let map = |ranks: &[u32], c: u32, limit: u32| -> u32 {
            if c == 0 || c == limit {
                c
            } else {
                ranks[c as usize - 1]
            }
        };
        let rects = self
            .rects
            .iter()
            .map(|r| {
                Rect::new(
                    map(&vrank, r.x0, self.width),
                    map(&hrank, r.y0, self.height),
                    map(&vrank, r.x1, self.width),
                    map(&hrank, r.y1, self.height),
                )
            })
            .collect();
        RectDrawing::from_tiling(self.width, self.height, rects).expect("heap renumbering preserves validity")
    }
}

/// Segments `s`, `t` are heap-related when their closed projections overlap;
/// `below(s, t)` says which one sits first. Returns, for each segment, its
/// 1-based position in the extension that always takes the minimal segment
/// with the smallest `(lo, hi)`.
fn heap_ranks(segs: &[Segment], below: impl Fn(&Segment, &Segment) -> bool) -> Vec<u32> {
    let m = segs.len();
    let mut preds = vec![0usize; m];
    for (i, s) in segs.iter().enumerate() {
        for t in segs {
            if s.lo <= t.hi && t.lo <= s.hi && below(t, s) {
                preds[i] += 1;
            }
        }
    }
    let mut rank = vec![0u32; m];
    let mut done = vec![false; m];
    for step in 1..=m {
        let pick = (0..m)
            .filter(|&i| !done[i] && preds[i] == 0)
            .min_by_key(|&i| (segs[i].lo, segs[i].hi))
            .expect("heap order is acyclic");
        done[pick] = true;
        rank[pick] = step as u32;
        for (i, t) in segs.iter().enumerate() {
            let s = &segs[pick];
            if !done[i] && s.lo <= t.hi && t.lo <= s.hi && below(s, t) {
                preds[i] -= 1;
            }
        }
    }
    rank
}

/// Faces of the subdivision of `[0, width] x [0, height]` by unit-grid
/// segments, as boxes in the original coordinates.
pub fn faces(width: u32, height: u32, segments: &[Segment]) -> Result<Vec<Rect>> {
    let (w, h) = (width as usize, height as usize);
    if w == 0 || h == 0 || w * h > 1 << 20 {
        return Err(Error::InvalidDrawing(format!("unsupported canvas {width}x{height}")));
    }
    let mut blocked_right = vec![false; w * h];
    let mut blocked_up = vec![false; w * h];
    for s in segments {
        for t in s.lo..s.hi {
            match s.orientation {
                Orientation::Vertical if s.coord > 0 && (s.coord as usize) < w => {
                    blocked_right[t as usize * w + s.coord as usize - 1] = true;
                }
                Orientation::Horizontal if s.coord > 0 && (s.coord as usize) < h => {
                    blocked_up[(s.coord as usize - 1) * w + t as usize] = true;
                }
                _ => {}
            }
        }
    }
    let mut face = vec![usize::MAX; w * h];
    let mut boxes = Vec::new();
    for start in 0..w * h {
        if face[start] != usize::MAX {
            continue;
        }
        let id = boxes.len();
        let mut stack = vec![start];
        face[start] = id;
        let mut bb = Rect::new(u32::MAX, u32::MAX, 0, 0);
        let mut cells = 0u64;
        while let Some(c) = stack.pop() {
            cells += 1;
            let (x, y) = (c % w, c / w);
            bb.x0 = bb.x0.min(x as u32);
            bb.y0 = bb.y0.min(y as u32);
            bb.x1 = bb.x1.max(x as u32 + 1);
            bb.y1 = bb.y1.max(y as u32 + 1);
            let mut nbrs = Vec::with_capacity(4);
            if x + 1 < w && !blocked_right[c] {
                nbrs.push(c + 1);
            }
            if x > 0 && !blocked_right[c - 1] {
                nbrs.push(c - 1);
            }
            if y + 1 < h && !blocked_up[c] {
                nbrs.push(c + w);
            }
            if y > 0 && !blocked_up[c - w] {
                nbrs.push(c - w);
            }
            for nb in nbrs {
                if face[nb] == usize::MAX {
                    face[nb] = id;
                    stack.push(nb);
                }
            }
        }
        if bb.area() != cells {
            return Err(Error::InvalidDrawing(format!("face {id} is not a rectangle")));
        }
        boxes.push(bb);
    }
    Ok(boxes)
}

/// Diagonal test for boxes in `[0, width] x [0, height]`.
pub fn boxes_meet_diagonal(width: u32, height: u32, rects: &[Rect]) -> bool {
    let (w, h) = (u64::from(width), u64::from(height));
    rects.iter().all(|r| {
        let (x0, y0, x1, y1) = (u64::from(r.x0), u64::from(r.y0), u64::from(r.x1), u64::from(r.y1));
        h * (w - x1) < y1 * w && y0 * w < h * (w - x0)
    })
}

/// Fixtures used throughout the tests and docs.
pub mod fixtures {
    use super::{Rect, RectDrawing};

    /// Two rectangles side by side.
    pub fn v2() -> RectDrawing {
        RectDrawing::new(2, 1, vec![Rect::new(0, 0, 1, 1), Rect::new(1, 0, 2, 1)]).unwrap()
    }

    /// Two rectangles stacked.
    pub fn h2() -> RectDrawing {
        RectDrawing::new(1, 2, vec![Rect::new(0, 1, 1, 2), Rect::new(0, 0, 1, 1)]).unwrap()
    }

    /// Wide top rectangle, two side by side below it.
    pub fn d3() -> RectDrawing {
        RectDrawing::new(2, 2, vec![Rect::new(0, 1, 2, 2), Rect::new(0, 0, 1, 1), Rect::new(1, 0, 2, 1)]).unwrap()
    }

    /// Wide bottom rectangle, two side by side on top.
    pub fn d3_prime() -> RectDrawing {
        RectDrawing::from_tiling(2, 2, vec![Rect::new(0, 1, 1, 2), Rect::new(1, 1, 2, 2), Rect::new(0, 0, 2, 1)])
            .unwrap()
    }

    /// The clockwise pinwheel on a 3x3 grid.
    pub fn pinwheel() -> RectDrawing {
        RectDrawing::from_tiling(
            3,
            3,
            vec![
                Rect::new(0, 2, 2, 3),
                Rect::new(2, 1, 3, 3),
                Rect::new(1, 0, 3, 1),
                Rect::new(0, 0, 1, 2),
                Rect::new(1, 1, 2, 2),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn four_unit_squares_cross() {
        let rects = vec![Rect::new(0, 1, 1, 2), Rect::new(1, 1, 2, 2), Rect::new(0, 0, 1, 1), Rect::new(1, 0, 2, 1)];
        let v = validate(2, 2, &rects);
        assert!(v.contains(&Violation::SizeMismatch { width: 2, height: 2, n: 4 }));
        assert!(v.contains(&Violation::Crossing { x: 1, y: 1 }));
    }

    #[test]
    fn overlap_and_gap_are_reported() {
        let v = validate(2, 1, &[Rect::new(0, 0, 2, 1), Rect::new(1, 0, 2, 1)]);
        assert!(v.contains(&Violation::Overlap(0, 1)));
        let v = validate(2, 1, &[Rect::new(0, 0, 1, 1)]);
        assert!(!v.is_empty());
    }

    #[test]
    fn split_line_is_reported() {
        let rects = vec![
            Rect::new(0, 2, 1, 3),
            Rect::new(1, 2, 2, 3),
            Rect::new(0, 1, 2, 2),
            Rect::new(0, 0, 1, 1),
            Rect::new(1, 0, 2, 1),
        ];
        let v = validate(2, 3, &rects);
        assert!(v.contains(&Violation::SplitLine { orientation: Orientation::Vertical, coord: 1, pieces: 2 }));
    }

    #[test]
    fn fixtures_validate() {
        for d in [v2(), h2(), d3(), d3_prime(), pinwheel()] {
            assert!(validate(d.width(), d.height(), d.rects()).is_empty(), "{d}");
        }
    }

    #[test]
    fn wrong_order_is_rejected() {
        let err = RectDrawing::new(2, 1, vec![Rect::new(1, 0, 2, 1), Rect::new(0, 0, 1, 1)]);
        assert!(err.is_err());
    }

    #[test]
    fn relations_on_d3_prime() {
        let d = d3_prime();
        // NW-SE order: top-left, top-right, bottom
        assert_eq!(d.rects()[0], Rect::new(0, 1, 1, 2));
        assert_eq!(d.rects()[1], Rect::new(1, 1, 2, 2));
        assert_eq!(d.rects()[2], Rect::new(0, 0, 2, 1));
        let rel = d.relations();
        assert_eq!(rel.get(0, 1), Some(Relation::Left));
        assert_eq!(rel.get(0, 2), Some(Relation::Above));
        assert_eq!(rel.get(2, 1), Some(Relation::Below));
        assert_eq!(rel.order(DiagonalOrder::SeNw), vec![2, 1, 0]);
        assert_eq!(rel.order(DiagonalOrder::SwNe), vec![2, 0, 1]);
        assert_eq!(d.l_labels(), vec![0, 1, 0]);
        let rel = d3().relations();
        assert_eq!(rel.get(0, 1), Some(Relation::Above));
        assert_eq!(rel.get(0, 2), Some(Relation::Above));
        assert_eq!(rel.get(1, 2), Some(Relation::Left));
        assert_eq!(v2().l_labels(), vec![0, 1]);
        assert_eq!(h2().l_labels(), vec![0, 0]);
    }

    #[test]
    fn joints_of_small_drawings() {
        let kinds = |d: &RectDrawing| d.joints().iter().map(|j| j.kind).collect::<Vec<_>>();
        assert_eq!(kinds(&d3_prime()), vec![JointKind::Tu]);
        assert_eq!(kinds(&d3()), vec![JointKind::Td]);
        assert!(kinds(&v2()).is_empty());
        let pw = kinds(&pinwheel());
        assert_eq!(pw.len(), 4);
        for k in JointKind::ALL {
            assert_eq!(pw.iter().filter(|&&x| x == k).count(), 1);
        }
    }

    #[test]
    fn diagonal_examples() {
        assert!(v2().is_diagonal());
        assert!(h2().is_diagonal());
        assert!(!pinwheel().is_diagonal());
    }

    #[test]
    fn reflect_and_rotate_are_involutive() {
        for d in [d3(), d3_prime(), pinwheel()] {
            assert_eq!(d.reflect(true).reflect(true), d);
            assert_eq!(d.reflect(false).reflect(false), d);
            assert_eq!(d.rotate().rotate().rotate().rotate(), d);
        }
        assert_eq!(d3().reflect(true), d3_prime());
        assert_eq!(d3().reflect(false), d3());
    }

    #[test]
    fn from_boxes_compacts_sparse_coordinates() {
        let d =
            RectDrawing::from_boxes(10, 6, &[Rect::new(0, 4, 3, 6), Rect::new(3, 4, 10, 6), Rect::new(0, 0, 10, 4)])
                .unwrap();
        assert_eq!(d, d3_prime());
    }

    #[test]
    fn from_segments_faces() {
        let segs = [
            Segment { orientation: Orientation::Horizontal, coord: 1, lo: 0, hi: 2 },
            Segment { orientation: Orientation::Vertical, coord: 1, lo: 1, hi: 2 },
        ];
        assert_eq!(RectDrawing::from_segments(2, 2, &segs).unwrap(), d3_prime());
    }

    #[test]
    fn keys_distinguish_classes() {
        assert_ne!(d3().weak_key(), d3_prime().weak_key());
        assert_eq!(pinwheel().strong_key(), pinwheel().canonical().strong_key());
    }

    #[test]
    fn serde_round_trip() {
        let d = pinwheel();
        let s = serde_json::to_string(&d).unwrap();
        let back: RectDrawing = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<RectDrawing>(r#"{"width":2,"height":2,"rects":[[0,0,1,1]]}"#).is_err());
    }
}
