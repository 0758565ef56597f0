//! The generating trees T1 and T2.
//!
//! Each tree has two realizations: on inversion sequences (append an entry)
//! and on rectangulations (insert a rectangle at the NE corner). A trace is
//! the list of rule applications leading from the root to an object; replaying
//! a trace on the other realization is how the trace-matching bijections are
//! computed.
//!
//! Succession rules, with node type `(k, l)` and root `(1, 0)`:
//!
//! | tree | rule  | parameter   | child type            |
//! |------|-------|-------------|-----------------------|
//! | T1   | `*`   | `1 ..= k`   | `(k - j + 1, j - 1)`  |
//! | T1   | `**`  | `0 ..= l`   | `(k + 1, i)`          |
//! | T2   | `*`   | `1 ..= k`   | `(k - j + 1, l + j - 1)` |
//! | T2   | `**`  | `1 ..= l`   | `(k + 1, i - 1)`      |
//! | T2   | `***` | none        | `(k + 1, 0)`          |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::invseq::{self, AreaClass, InvSeq, PatternWord};
use crate::par::Execution;
use crate::patterns::{contains, Pattern};
use crate::rect::{JointKind, Rect, RectDrawing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tree {
    T1,
    T2,
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(Tree::T1),
            "t2" => Ok(Tree::T2),
            other => Err(Error::Parse(format!("unknown tree `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeType {
    pub k: u32,
    pub l: u32,
}

impl NodeType {
    pub const ROOT: NodeType = NodeType { k: 1, l: 0 };
}

impl fmt::Display for NodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TraceStep {
    Star(u32),
    DStar(u32),
    TStar,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Star(j) => write!(f, "*{j}"),
            TraceStep::DStar(i) => write!(f, "**{i}"),
            TraceStep::TStar => write!(f, "***"),
        }
    }
}

impl Serialize for TraceStep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (tag, param) = match *self {
            TraceStep::Star(j) => ("*", Some(j)),
            TraceStep::DStar(i) => ("**", Some(i)),
            TraceStep::TStar => ("***", None),
        };
        let mut seq = s.serialize_seq(Some(1 + usize::from(param.is_some())))?;
        seq.serialize_element(tag)?;
        if let Some(p) = param {
            seq.serialize_element(&p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TraceStep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct StepVisitor;

        impl<'de> Visitor<'de> for StepVisitor {
            type Value = TraceStep;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(r#"["*", j], ["**", i] or ["***"]"#)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> std::result::Result<TraceStep, A::Error> {
                let tag: String = a.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let param: Option<u32> = a.next_element()?;
                if a.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::custom("trailing elements in trace step"));
                }
                match (tag.as_str(), param) {
                    ("*", Some(j)) => Ok(TraceStep::Star(j)),
                    ("**", Some(i)) => Ok(TraceStep::DStar(i)),
                    ("***", None) => Ok(TraceStep::TStar),
                    _ => Err(de::Error::custom(format!("bad trace step `{tag}`"))),
                }
            }
        }

        d.deserialize_seq(StepVisitor)
    }
}

pub type Trace = Vec<TraceStep>;

/// Steps allowed at a node of the given type, with the child types.
pub fn child_steps(tree: Tree, t: NodeType) -> Vec<(TraceStep, NodeType)> {
    let NodeType { k, l } = t;
    let mut out = Vec::new();
    match tree {
        Tree::T1 => {
            out.extend((1..=k).map(|j| (TraceStep::Star(j), NodeType { k: k - j + 1, l: j - 1 })));
            out.extend((0..=l).map(|i| (TraceStep::DStar(i), NodeType { k: k + 1, l: i })));
        }
        Tree::T2 => {
            out.extend((1..=k).map(|j| (TraceStep::Star(j), NodeType { k: k - j + 1, l: l + j - 1 })));
            out.extend((1..=l).map(|i| (TraceStep::DStar(i), NodeType { k: k + 1, l: i - 1 })));
            out.push((TraceStep::TStar, NodeType { k: k + 1, l: 0 }));
        }
    }
    out
}

fn check_step(tree: Tree, t: NodeType, step: TraceStep) -> Result<()> {
    if child_steps(tree, t).iter().any(|(s, _)| *s == step) {
        Ok(())
    } else {
        Err(Error::BadTrace(format!("step {step} is not allowed at a node of type {t} in {tree:?}")))
    }
}

/// One realization of the two trees.
pub trait Realization {
    type Obj: Clone + Ord + Send + Sync + fmt::Debug;

    fn root() -> Self::Obj;
    fn size(o: &Self::Obj) -> usize;
    fn node_type(tree: Tree, o: &Self::Obj) -> Result<NodeType>;
    /// Apply one step; the step is assumed allowed at `o`.
    fn apply_unchecked(tree: Tree, o: &Self::Obj, step: TraceStep) -> Result<Self::Obj>;
    /// The step producing `o` and its parent; `None` at the root.
    fn last_step(tree: Tree, o: &Self::Obj) -> Result<Option<(TraceStep, Self::Obj)>>;

    fn apply(tree: Tree, o: &Self::Obj, step: TraceStep) -> Result<Self::Obj> {
        check_step(tree, Self::node_type(tree, o)?, step)?;
        Self::apply_unchecked(tree, o, step)
    }

    fn children(tree: Tree, o: &Self::Obj) -> Result<Vec<(TraceStep, Self::Obj)>> {
        child_steps(tree, Self::node_type(tree, o)?)
            .into_iter()
            .map(|(s, _)| Ok((s, Self::apply_unchecked(tree, o, s)?)))
            .collect()
    }

    fn trace_of(tree: Tree, o: &Self::Obj) -> Result<Trace> {
        let mut steps = Vec::new();
        let mut cur = o.clone();
        while let Some((step, parent)) = Self::last_step(tree, &cur)? {
            steps.push(step);
            cur = parent;
        }
        steps.reverse();
        Ok(steps)
    }

    fn replay(tree: Tree, trace: &[TraceStep]) -> Result<Self::Obj> {
        trace.iter().try_fold(Self::root(), |o, &s| Self::apply(tree, &o, s))
    }

    /// All objects at level `n` (size `n`), sorted.
    fn level(tree: Tree, n: usize, exec: Execution) -> Result<Vec<Self::Obj>> {
        if n == 0 {
            return Err(Error::OutOfDomain("level must be at least 1".into()));
        }
        let mut cur = vec![Self::root()];
        for _ in 1..n {
            let next = exec.map(&cur, |o| Self::children(tree, o));
            cur = next.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().map(|(_, c)| c).collect();
        }
        cur.sort();
        Ok(cur)
    }
}

/// Inversion sequences: T1 on `I(010,101,120,201)`, T2 on `I(011,201)`.
pub struct Sequences;

/// Strong rectangulations: T1 on `R(⊤)`, T2 on `R(⊥)`, always canonical.
pub struct Rectangulations;

pub fn t2_patterns() -> Vec<PatternWord> {
    invseq::parse_patterns("011,201").expect("fixed patterns parse")
}

fn seq_in_class(tree: Tree, e: &InvSeq) -> Result<()> {
    let ok = match tree {
        Tree::T1 => invseq::class_check(e.values(), AreaClass::I7),
        Tree::T2 => invseq::avoids_all(e.values(), &t2_patterns()),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("{e} is not in the class of {tree:?}")))
    }
}

/// Lower bound of the last active area.
fn last_area_lo(e: &[u32]) -> u32 {
    invseq::active_areas(e).last().map_or(0, |a| a.rows.0)
}

/// Values `0 < v < max` that can be appended to a member of `I(011,201)`,
/// ascending.
pub fn t2_admissible(e: &[u32]) -> Vec<u32> {
    let m = e.iter().copied().max().unwrap_or(0);
    let ps = t2_patterns();
    (1..m)
        .filter(|&v| {
            let mut f = e.to_vec();
            f.push(v);
            invseq::avoids_all(&f, &ps)
        })
        .collect()
}

impl Realization for Sequences {
    type Obj = InvSeq;

    fn root() -> InvSeq {
        InvSeq::new(vec![0]).expect("root is valid")
    }

    fn size(o: &InvSeq) -> usize {
        o.len()
    }

    fn node_type(tree: Tree, e: &InvSeq) -> Result<NodeType> {
        seq_in_class(tree, e)?;
        let v = e.values();
        let k = (v.len() as u32) - e.max_entry();
        let l = match tree {
            Tree::T1 => v[v.len() - 1] - last_area_lo(v),
            Tree::T2 => t2_admissible(v).len() as u32,
        };
        Ok(NodeType { k, l })
    }

    fn apply_unchecked(tree: Tree, e: &InvSeq, step: TraceStep) -> Result<InvSeq> {
        let v = e.values();
        let value = match (tree, step) {
            (_, TraceStep::Star(j)) => e.max_entry() + j,
            (Tree::T1, TraceStep::DStar(i)) => last_area_lo(v) + i,
            (Tree::T2, TraceStep::DStar(i)) => t2_admissible(v)
                .get(i as usize - 1)
                .copied()
                .ok_or_else(|| Error::BadTrace(format!("no admissible value {i}")))?,
            (Tree::T2, TraceStep::TStar) => 0,
            (Tree::T1, TraceStep::TStar) => return Err(Error::BadTrace("rule *** does not exist in T1".into())),
        };
        e.push(value)
    }

    fn last_step(tree: Tree, e: &InvSeq) -> Result<Option<(TraceStep, InvSeq)>> {
        seq_in_class(tree, e)?;
        let Some(parent) = e.parent() else { return Ok(None) };
        let v = *e.values().last().expect("non-empty");
        let m = parent.max_entry();
        let step = if v > m {
            TraceStep::Star(v - m)
        } else {
            match tree {
                Tree::T1 => TraceStep::DStar(v - last_area_lo(parent.values())),
                Tree::T2 if v == 0 => TraceStep::TStar,
                Tree::T2 => {
                    let pos = t2_admissible(parent.values())
                        .iter()
                        .position(|&a| a == v)
                        .ok_or_else(|| Error::OutOfDomain(format!("{e}: last value not admissible")))?;
                    TraceStep::DStar(pos as u32 + 1)
                }
            }
        };
        Ok(Some((step, parent)))
    }
}

fn rect_in_class(tree: Tree, d: &RectDrawing) -> Result<()> {
    let p = match tree {
        Tree::T1 => Pattern::TD,
        Tree::T2 => Pattern::TU,
    };
    if contains(d, p) {
        Err(Error::OutOfDomain(format!("drawing contains {p}: {d}")))
    } else {
        Ok(())
    }
}

fn build(width: u32, height: u32, rects: Vec<Rect>) -> Result<RectDrawing> {
    Ok(RectDrawing::from_tiling(width, height, rects)?.canonical())
}

/// E-rectangles, top to bottom.
fn east_rects(d: &RectDrawing) -> Vec<Rect> {
    let mut v: Vec<Rect> = d.rects().iter().copied().filter(|r| d.is_east(r)).collect();
    v.sort_by_key(|r| std::cmp::Reverse(r.y0));
    v
}

/// N-rectangles, right to left.
fn north_rects(d: &RectDrawing) -> Vec<Rect> {
    let mut v: Vec<Rect> = d.rects().iter().copied().filter(|r| d.is_north(r)).collect();
    v.sort_by_key(|r| std::cmp::Reverse(r.x0));
    v
}

/// Horizontal lines whose right end lies on the left side of `x`, strictly
/// between its bottom and the top boundary, top to bottom.
fn left_neighbor_lines(d: &RectDrawing, x: &Rect) -> Vec<u32> {
    if x.x0 == 0 {
        return Vec::new();
    }
    (x.y0 + 1..x.y1).rev().filter(|&y| d.horizontal(y).hi == x.x0).collect()
}

/// Active `⊤` joints (their horizontal reaches E), right to left, as
/// `(x, y)` points.
fn active_td(d: &RectDrawing) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = d
        .joints()
        .into_iter()
        .filter(|j| j.kind == JointKind::Td && j.bar.hi == d.width())
        .map(|j| (j.x, j.y))
        .collect();
    v.sort_by_key(|&(x, _)| std::cmp::Reverse(x));
    v
}

impl Rectangulations {
    fn t1_insert(d: &RectDrawing, step: TraceStep) -> Result<RectDrawing> {
        let (w, h) = (d.width(), d.height());
        match step {
            TraceStep::Star(j) => {
                let east = east_rects(d);
                let b = east[j as usize - 1];
                let keep: Vec<Rect> = east[..j as usize].to_vec();
                let mut rects: Vec<Rect> = d
                    .rects()
                    .iter()
                    .map(|&r| if d.is_east(&r) && !keep.contains(&r) { Rect { x1: w + 1, ..r } } else { r })
                    .collect();
                rects.push(Rect::new(w, b.y0, w + 1, h));
                build(w + 1, h, rects)
            }
            TraceStep::DStar(i) => {
                let ne = d.rects()[d.ne_index()];
                let lines = left_neighbor_lines(d, &ne);
                let c = if i == 0 { h } else { lines[i as usize - 1] };
                let f = |y: u32| if y < c { y } else { y + 1 };
                let mut rects: Vec<Rect> =
                    d.rects().iter().filter(|&&r| r != ne).map(|r| Rect::new(r.x0, f(r.y0), r.x1, f(r.y1))).collect();
                rects.push(Rect::new(ne.x0, f(ne.y0), w, c));
                rects.push(Rect::new(ne.x0, c, w, h + 1));
                build(w, h + 1, rects)
            }
            TraceStep::TStar => Err(Error::BadTrace("rule *** does not exist in T1".into())),
        }
    }

    fn t1_delete(d: &RectDrawing) -> Result<(TraceStep, RectDrawing)> {
        let (w, h) = (d.width(), d.height());
        let x = d.rects()[d.ne_index()];
        let star = x.x0 > 0 && d.vertical(x.x0).lo == x.y0;
        if star {
            let j = d.rects().iter().filter(|r| r.x1 == x.x0).count() as u32;
            let rects = d
                .rects()
                .iter()
                .filter(|&&r| r != x)
                .map(|&r| if r.x1 == w { Rect { x1: w - 1, ..r } } else { r })
                .collect();
            Ok((TraceStep::Star(j), build(w - 1, h, rects)?))
        } else {
            let i = left_neighbor_lines(d, &x).len() as u32;
            let g = x.y0;
            let below: Vec<&Rect> = d.rects().iter().filter(|r| r.y1 == g).collect();
            if below.len() != 1 {
                return Err(Error::OutOfDomain(format!("NE rectangle of {d} has {} lower neighbors", below.len())));
            }
            let f = |y: u32| if y > g { y - 1 } else { y };
            let rects = d
                .rects()
                .iter()
                .filter(|&&r| r != x)
                .map(|&r| {
                    let y1 = if r.y1 == g { h } else { r.y1 };
                    Rect::new(r.x0, f(r.y0), r.x1, f(y1))
                })
                .collect();
            Ok((TraceStep::DStar(i), build(w, h - 1, rects)?))
        }
    }

    fn t2_insert(d: &RectDrawing, step: TraceStep) -> Result<RectDrawing> {
        let (w, h) = (d.width(), d.height());
        match step {
            TraceStep::Star(j) => {
                let north = north_rects(d);
                let b = north[j as usize - 1];
                let keep: Vec<Rect> = north[..j as usize].to_vec();
                let mut rects: Vec<Rect> = d
                    .rects()
                    .iter()
                    .map(|&r| if d.is_north(&r) && !keep.contains(&r) { Rect { y1: h + 1, ..r } } else { r })
                    .collect();
                rects.push(Rect::new(b.x0, h, w, h + 1));
                build(w, h + 1, rects)
            }
            TraceStep::DStar(i) => {
                let (cx, r) = active_td(d)[i as usize - 1];
                let f = |y: u32| if y < r { y } else { y + 1 };
                let mut rects = Vec::with_capacity(d.n() + 1);
                for z in d.rects() {
                    if z.y1 == r && z.x0 >= cx {
                        rects.push(*z);
                        continue;
                    }
                    let moved = Rect::new(z.x0, f(z.y0), z.x1, f(z.y1));
                    if z.y0 >= r && z.x1 > cx {
                        if z.x0 >= cx {
                            return Err(Error::InvalidDrawing(format!("unexpected rectangle {z} above the joint")));
                        }
                        rects.push(Rect { x1: cx, ..moved });
                    } else {
                        rects.push(moved);
                    }
                }
                rects.push(Rect::new(cx, r, w, h + 1));
                build(w, h + 1, rects)
            }
            TraceStep::TStar => {
                let mut rects = d.rects().to_vec();
                rects.push(Rect::new(w, 0, w + 1, h));
                build(w + 1, h, rects)
            }
        }
    }

    fn t2_delete(d: &RectDrawing) -> Result<(TraceStep, RectDrawing)> {
        let (w, h) = (d.width(), d.height());
        let x = d.rects()[d.ne_index()];
        let others = || d.rects().iter().copied().filter(move |&r| r != x);
        if x.y0 == 0 {
            return Ok((TraceStep::TStar, build(w - 1, h, others().collect())?));
        }
        let g = x.y0;
        let drop_g = |r: Rect| {
            let f = |y: u32| if y > g { y - 1 } else { y };
            Rect::new(r.x0, f(r.y0), r.x1, f(r.y1))
        };
        let lines = left_neighbor_lines(d, &x);
        match lines.last() {
            None => {
                let j = d.rects().iter().filter(|r| r.y1 == g).count() as u32;
                let rects = others().map(|r| if r.y1 == g { Rect { y1: h, ..r } } else { r }).map(drop_g).collect();
                Ok((TraceStep::Star(j), build(w, h - 1, rects)?))
            }
            Some(&low) => {
                let rects: Vec<Rect> = others()
                    .map(|r| {
                        if r.y1 == g && r.x0 >= x.x0 {
                            Rect { y1: low, ..r }
                        } else if r.x1 == x.x0 && r.y0 >= low {
                            Rect { x1: w, ..r }
                        } else {
                            r
                        }
                    })
                    .map(drop_g)
                    .collect();
                let parent = RectDrawing::from_tiling(w, h - 1, rects)?;
                let pos = active_td(&parent)
                    .iter()
                    .position(|&p| p == (x.x0, low - 1))
                    .ok_or_else(|| Error::OutOfDomain(format!("no active joint after deleting from {d}")))?;
                Ok((TraceStep::DStar(pos as u32 + 1), parent.canonical()))
            }
        }
    }
}

impl Realization for Rectangulations {
    type Obj = RectDrawing;

    fn root() -> RectDrawing {
        RectDrawing::unit()
    }

    fn size(o: &RectDrawing) -> usize {
        o.n()
    }

    fn node_type(tree: Tree, d: &RectDrawing) -> Result<NodeType> {
        rect_in_class(tree, d)?;
        Ok(match tree {
            Tree::T1 => {
                let ne = d.rects()[d.ne_index()];
                NodeType { k: east_rects(d).len() as u32, l: left_neighbor_lines(d, &ne).len() as u32 }
            }
            Tree::T2 => NodeType { k: north_rects(d).len() as u32, l: active_td(d).len() as u32 },
        })
    }

    fn apply_unchecked(tree: Tree, d: &RectDrawing, step: TraceStep) -> Result<RectDrawing> {
        let d = d.canonical();
        match tree {
            Tree::T1 => Self::t1_insert(&d, step),
            Tree::T2 => Self::t2_insert(&d, step),
        }
    }

    fn last_step(tree: Tree, d: &RectDrawing) -> Result<Option<(TraceStep, RectDrawing)>> {
        rect_in_class(tree, d)?;
        if d.n() == 1 {
            return Ok(None);
        }
        let d = d.canonical();
        match tree {
            Tree::T1 => Self::t1_delete(&d),
            Tree::T2 => Self::t2_delete(&d),
        }
        .map(Some)
    }
}

/// Number of level-`n` nodes, by dynamic programming over node types.
pub fn count_by_tree(tree: Tree, n: usize) -> BigUint {
    count_levels(tree, n).pop().unwrap_or_default()
}

/// Level sizes for `1..=n`.
pub fn count_levels(tree: Tree, n: usize) -> Vec<BigUint> {
    if n == 0 {
        return Vec::new();
    }
    let dim = n + 2;
    let mut cnt = vec![vec![BigUint::zero(); dim]; dim];
    cnt[1][0] = BigUint::one();
    let mut out = vec![BigUint::one()];
    for _ in 1..n {
        let mut next = vec![vec![BigUint::zero(); dim]; dim];
        // suffix[k][l] = sum of cnt[k][l..]
        let mut suffix = vec![vec![BigUint::zero(); dim + 1]; dim];
        for k in 0..dim {
            for l in (0..dim).rev() {
                suffix[k][l] = &suffix[k][l + 1] + &cnt[k][l];
            }
        }
        match tree {
            Tree::T1 => {
                // star: (k, l) -> (a, k - a) for a in 1..=k
                for k in 1..dim {
                    for a in 1..=k {
                        if k - a < dim {
                            next[a][k - a] += &suffix[k][0];
                        }
                    }
                }
                // dstar: (k, l) -> (k + 1, i) for i in 0..=l
                for k in 1..dim - 1 {
                    for i in 0..dim {
                        next[k + 1][i] += &suffix[k][i];
                    }
                }
            }
            Tree::T2 => {
                // star: (k, l) -> (a, l + k - a) for a in 1..=k; sums along
                // anti-diagonals k + l = const with k >= a
                for s in 1..2 * dim {
                    let mut acc = BigUint::zero();
                    for k in (1..dim).rev() {
                        if s >= k && s - k < dim {
                            acc += &cnt[k][s - k];
                        }
                        let a = k;
                        if s >= a && s - a < dim && !acc.is_zero() {
                            next[a][s - a] += &acc;
                        }
                    }
                }
                // dstar: (k, l) -> (k + 1, m) for m in 0..l
                for k in 1..dim - 1 {
                    for m in 0..dim - 1 {
                        next[k + 1][m] += &suffix[k][m + 1];
                    }
                    // tstar
                    next[k + 1][0] += &suffix[k][0];
                }
            }
        }
        cnt = next;
        out.push(cnt.iter().flatten().sum());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::fixtures::*;

    fn naive_counts(tree: Tree, n: usize) -> Vec<usize> {
        let mut level = vec![NodeType::ROOT];
        let mut out = vec![1];
        for _ in 1..n {
            level = level.iter().flat_map(|&t| child_steps(tree, t)).map(|(_, t)| t).collect();
            out.push(level.len());
        }
        out
    }

    #[test]
    fn dp_matches_naive_expansion() {
        for tree in [Tree::T1, Tree::T2] {
            let dp: Vec<usize> = count_levels(tree, 9).iter().map(|c| c.to_string().parse().unwrap()).collect();
            assert_eq!(dp, naive_counts(tree, 9), "{tree:?}");
        }
        let t1: Vec<String> = count_levels(Tree::T1, 7).iter().map(ToString::to_string).collect();
        assert_eq!(t1, ["1", "2", "5", "15", "51", "189", "746"]);
    }

    #[test]
    fn trees_agree_to_fifty() {
        assert_eq!(count_levels(Tree::T1, 50), count_levels(Tree::T2, 50));
    }

    #[test]
    fn root_children() {
        let kids: Vec<NodeType> = child_steps(Tree::T1, NodeType::ROOT).into_iter().map(|c| c.1).collect();
        assert_eq!(kids, vec![NodeType { k: 1, l: 0 }, NodeType { k: 2, l: 0 }]);
        let kids: Vec<NodeType> = child_steps(Tree::T2, NodeType { k: 1, l: 1 }).into_iter().map(|c| c.1).collect();
        assert_eq!(kids, vec![NodeType { k: 1, l: 1 }, NodeType { k: 2, l: 0 }, NodeType { k: 2, l: 0 }]);
    }

    #[test]
    fn rect_types_and_traces() {
        assert_eq!(Rectangulations::node_type(Tree::T1, &d3_prime()).unwrap(), NodeType { k: 2, l: 0 });
        assert_eq!(Rectangulations::node_type(Tree::T1, &h2()).unwrap(), NodeType { k: 2, l: 0 });
        assert_eq!(Rectangulations::node_type(Tree::T2, &d3()).unwrap(), NodeType { k: 1, l: 1 });
        let t = Rectangulations::trace_of(Tree::T1, &d3_prime()).unwrap();
        assert_eq!(t, vec![TraceStep::DStar(0), TraceStep::Star(1)]);
        assert_eq!(Sequences::replay(Tree::T1, &t).unwrap().values(), &[0, 0, 1]);
        let t = Rectangulations::trace_of(Tree::T2, &d3()).unwrap();
        assert_eq!(t, vec![TraceStep::TStar, TraceStep::Star(2)]);
        assert_eq!(Sequences::replay(Tree::T2, &t).unwrap().values(), &[0, 0, 2]);
        assert!(Rectangulations::trace_of(Tree::T1, &RectDrawing::unit()).unwrap().is_empty());
        let kids = Rectangulations::children(Tree::T1, &h2()).unwrap();
        assert!(kids.contains(&(TraceStep::Star(1), d3_prime())));
        assert!(Rectangulations::node_type(Tree::T1, &d3()).is_err());
    }

    #[test]
    fn replay_round_trips_on_small_levels() {
        for tree in [Tree::T1, Tree::T2] {
            for n in 1..=5 {
                let rects = Rectangulations::level(tree, n, Execution::Sequential).unwrap();
                for d in &rects {
                    let t = Rectangulations::trace_of(tree, d).unwrap();
                    assert_eq!(&Rectangulations::replay(tree, &t).unwrap(), d, "{tree:?} {t:?}");
                }
                let seqs = Sequences::level(tree, n, Execution::Sequential).unwrap();
                assert_eq!(seqs.len(), rects.len());
                for e in &seqs {
                    let t = Sequences::trace_of(tree, e).unwrap();
                    assert_eq!(&Sequences::replay(tree, &t).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn trace_json() {
        let t = vec![TraceStep::TStar, TraceStep::Star(2), TraceStep::DStar(1)];
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"[["***"],["*",2],["**",1]]"#);
        assert_eq!(serde_json::from_str::<Trace>(&s).unwrap(), t);
        assert!(serde_json::from_str::<Trace>(r#"[["*"]]"#).is_err());
        assert!(serde_json::from_str::<Trace>(r#"[["***",1]]"#).is_err());
    }

    #[test]
    fn bad_steps_are_rejected() {
        assert!(Sequences::replay(Tree::T1, &[TraceStep::Star(2)]).is_err());
        assert!(Sequences::replay(Tree::T1, &[TraceStep::TStar]).is_err());
        assert!(Rectangulations::replay(Tree::T2, &[TraceStep::DStar(1)]).is_err());
    }
}
