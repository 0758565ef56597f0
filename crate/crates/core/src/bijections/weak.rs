//! Bijections on `⊤`-avoiding weak rectangulations: the L-label reading `τ`,
//! Dyck paths via `ε` and `δ`, the Baxter-type permutation `β`, and binary
//! trees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invseq::InvSeq;
use crate::paths::{DyckPath, Step};
use crate::patterns::{contains, Pattern};
use crate::rect::{boxes_meet_diagonal, faces, DiagonalOrder, Orientation, Rect, RectDrawing, Segment};

pub(crate) fn require_avoids(d: &RectDrawing, p: Pattern) -> Result<()> {
    if contains(d, p) {
        Err(Error::OutOfDomain(format!("drawing contains {p}: {d}")))
    } else {
        Ok(())
    }
}

/// `τ`: L-labels read in SW-NE order.
pub fn tau(d: &RectDrawing) -> Result<InvSeq> {
    require_avoids(d, Pattern::TD)?;
    Ok(l_labels_in_sw_ne(d))
}

/// L-labels in SW-NE order, for any drawing.
pub fn l_labels_in_sw_ne(d: &RectDrawing) -> InvSeq {
    let labels = d.l_labels();
    let e = d.order(DiagonalOrder::SwNe).into_iter().map(|i| labels[i] as u32).collect();
    InvSeq::new(e).expect("L-labels in SW-NE order form an inversion sequence")
}

/// `ε`: east steps just below the plotted cells, completed by north steps.
/// East is written `U`, north `D`.
pub fn epsilon(e: &InvSeq) -> Result<DyckPath> {
    let v = e.values();
    if v.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::OutOfDomain(format!("{e} is not non-decreasing")));
    }
    let mut steps = Vec::with_capacity(2 * v.len());
    let mut h = 0;
    for &x in v {
        steps.extend(std::iter::repeat_n(Step::D, (x - h) as usize));
        h = x;
        steps.push(Step::U);
    }
    steps.extend(std::iter::repeat_n(Step::D, v.len() - h as usize));
    DyckPath::new(steps)
}

pub fn epsilon_inv(p: &DyckPath) -> InvSeq {
    let mut downs = 0;
    let mut e = Vec::with_capacity(p.semilength());
    for s in p.steps() {
        match s {
            Step::U => e.push(downs),
            Step::D => downs += 1,
        }
    }
    InvSeq::new(e).expect("a Dyck path gives an inversion sequence")
}

pub fn delta(d: &RectDrawing) -> Result<DyckPath> {
    epsilon(&tau(d)?)
}

/// `δ` read off the drawing: walk up W, then down the left and up the right
/// of every vertical segment, then down E.
pub fn delta_direct(d: &RectDrawing) -> Result<DyckPath> {
    require_avoids(d, Pattern::TD)?;
    let count = |f: &dyn Fn(&Rect) -> bool| d.rects().iter().filter(|r| f(r)).count();
    let mut steps = vec![Step::U; count(&|r| r.x0 == 0)];
    for x in 1..d.width() {
        steps.extend(std::iter::repeat_n(Step::D, count(&|r| r.x1 == x)));
        steps.extend(std::iter::repeat_n(Step::U, count(&|r| r.x0 == x)));
    }
    steps.extend(std::iter::repeat_n(Step::D, count(&|r| r.x1 == d.width())));
    DyckPath::new(steps)
}

/// `δ⁻¹`: a stack of rectangles swept left to right. Each run of down-steps
/// closes the top rectangles at the next vertical segment, each run of
/// up-steps opens new rectangles stacked above the closed ones.
pub fn delta_inv(p: &DyckPath) -> Result<RectDrawing> {
    const BOTTOM: usize = 0;
    const TOP: usize = 1;
    let steps = p.steps();
    if steps.is_empty() {
        return Err(Error::OutOfDomain("empty path".into()));
    }
    // interior lines bottom to top, BOTTOM first
    let mut lines: Vec<usize> = vec![BOTTOM];
    let mut next_id = 2;
    // open rectangles bottom to top: (x0, bottom line)
    let mut stack: Vec<(u32, usize)> = Vec::new();
    // (x0, x1, bottom line, top line)
    let mut done: Vec<(u32, u32, usize, usize)> = Vec::new();
    let mut seg = 0u32;
    let mut base = BOTTOM;
    let mut i = 0;
    while i < steps.len() {
        let run = steps[i..].iter().take_while(|s| **s == steps[i]).count();
        match steps[i] {
            Step::U => {
                let pos = lines.iter().position(|&l| l == base).expect("base line exists");
                let mut bottom = base;
                for k in 0..run {
                    stack.push((seg, bottom));
                    if k + 1 < run {
                        bottom = next_id;
                        next_id += 1;
                        lines.insert(pos + 1 + k, bottom);
                    }
                }
            }
            Step::D => {
                seg += 1;
                let mut top = TOP;
                for _ in 0..run {
                    let (x0, bottom) = stack.pop().expect("path stays above the axis");
                    done.push((x0, seg, bottom, top));
                    top = bottom;
                }
                base = top;
            }
        }
        i += run;
    }
    let height = lines.len() as u32;
    let y = |l: usize| -> u32 {
        if l == TOP {
            height
        } else {
            lines.iter().position(|&m| m == l).expect("line exists") as u32
        }
    };
    let rects = done.into_iter().map(|(x0, x1, b, t)| Rect::new(x0, y(b), x1, y(t))).collect();
    RectDrawing::from_tiling(seg, height, rects)
}

pub fn tau_inv(e: &InvSeq) -> Result<RectDrawing> {
    delta_inv(&epsilon(e)?)
}

/// `β`: SE-NW labels read in SW-NE order, as a permutation of `1..=n`.
pub fn beta(d: &RectDrawing) -> Vec<u32> {
    let rel = d.relations();
    let labels = rel.labels(DiagonalOrder::SeNw);
    rel.order(DiagonalOrder::SwNe).into_iter().map(|i| labels[i] as u32).collect()
}

/// Full binary tree; its size is the number of internal nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// All trees with `n` internal nodes.
    pub fn enumerate(n: usize) -> Vec<BinaryTree> {
        if n == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in BinaryTree::enumerate(k) {
                for r in BinaryTree::enumerate(n - 1 - k) {
                    out.push(BinaryTree::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// First-return decomposition: `U A D B` is `Node(A, B)`.
    pub fn from_dyck(p: &DyckPath) -> BinaryTree {
        fn rec(s: &[Step]) -> BinaryTree {
            if s.is_empty() {
                return BinaryTree::Leaf;
            }
            let mut h = 0i32;
            let close = s
                .iter()
                .position(|st| {
                    h += if *st == Step::U { 1 } else { -1 };
                    h == 0
                })
                .expect("balanced word");
            BinaryTree::node(rec(&s[1..close]), rec(&s[close + 1..]))
        }
        rec(p.steps())
    }

    pub fn to_dyck(&self) -> DyckPath {
        fn rec(t: &BinaryTree, out: &mut Vec<Step>) {
            if let BinaryTree::Node(l, r) = t {
                out.push(Step::U);
                rec(l, out);
                out.push(Step::D);
                rec(r, out);
            }
        }
        let mut out = Vec::new();
        rec(self, &mut out);
        DyckPath::new(out).expect("tree words are balanced")
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// The boxes of the diagonal drawing in `[0, n]^2` built from `t`: the tree
/// is embedded with its root at the SW corner and leaf `i` at `(i, n - i)`,
/// vertical edges are extended up to N and horizontal edges right to the
/// first vertical segment or E.
pub fn tree_boxes(t: &BinaryTree) -> Result<(u32, Vec<Rect>)> {
    let n = t.size() as u32;
    if n == 0 {
        return Err(Error::OutOfDomain("a tree needs at least one internal node".into()));
    }
    // (x, y_low, y_high) vertical edges and (y, x_low, x_high) horizontal edges
    let mut vert = Vec::new();
    let mut horiz = Vec::new();
    fn walk(t: &BinaryTree, a: u32, n: u32, vert: &mut Vec<(u32, u32, u32)>, horiz: &mut Vec<(u32, u32, u32)>) -> u32 {
        match t {
            BinaryTree::Leaf => a,
            BinaryTree::Node(l, r) => {
                let m = walk(l, a, n, vert, horiz);
                let b = walk(r, m + 1, n, vert, horiz);
                vert.push((a, n - b, n - m));
                horiz.push((n - b, a, m + 1));
                b
            }
        }
    }
    walk(t, 0, n, &mut vert, &mut horiz);
    let mut lo = vec![None::<u32>; n as usize + 1];
    for &(x, y0, _) in &vert {
        if x > 0 {
            lo[x as usize] = Some(lo[x as usize].map_or(y0, |v: u32| v.min(y0)));
        }
    }
    let mut segs: Vec<Segment> = (1..n)
        .filter_map(|x| lo[x as usize].map(|l| Segment { orientation: Orientation::Vertical, coord: x, lo: l, hi: n }))
        .collect();
    for y in 1..n {
        let edges: Vec<_> = horiz.iter().filter(|e| e.0 == y).collect();
        if edges.is_empty() {
            continue;
        }
        let start = edges.iter().map(|e| e.1).min().expect("non-empty");
        let chain_end = edges.iter().map(|e| e.2).max().expect("non-empty");
        let end = (chain_end + 1..n).find(|&x| lo[x as usize].is_some_and(|l| l < y)).unwrap_or(n);
        segs.push(Segment { orientation: Orientation::Horizontal, coord: y, lo: start, hi: end });
    }
    Ok((n, faces(n, n, &segs)?))
}

pub fn rect_of_tree(t: &BinaryTree) -> Result<RectDrawing> {
    let (n, boxes) = tree_boxes(t)?;
    debug_assert!(boxes_meet_diagonal(n, n, &boxes));
    RectDrawing::from_boxes(n, n, &boxes)
}

/// Inverse of [`rect_of_tree`] on weak classes: `τ`, then `ε`, then the
/// first-return decomposition.
pub fn tree_of(d: &RectDrawing) -> Result<BinaryTree> {
    Ok(BinaryTree::from_dyck(&delta(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::fixtures::*;

    fn seq(v: &[u32]) -> InvSeq {
        InvSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&d3_prime()).unwrap(), seq(&[0, 0, 1]));
        assert_eq!(tau(&h2()).unwrap(), seq(&[0, 0]));
        assert_eq!(tau(&v2()).unwrap(), seq(&[0, 1]));
        assert!(tau(&d3()).is_err());
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(epsilon(&seq(&[0, 0])).unwrap().to_string(), "UUDD");
        assert_eq!(epsilon(&seq(&[0, 1])).unwrap().to_string(), "UDUD");
        assert_eq!(delta(&d3_prime()).unwrap().to_string(), "UUDUDD");
        assert_eq!(delta_direct(&d3_prime()).unwrap().to_string(), "UUDUDD");
        assert!(epsilon(&seq(&[0, 1, 0])).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(tau_inv(&seq(&[0, 0, 1])).unwrap().weak_key(), d3_prime().weak_key());
        assert_eq!(tau_inv(&seq(&[0, 1])).unwrap(), v2());
        assert_eq!(tau_inv(&seq(&[0, 0])).unwrap(), h2());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&v2()), [2, 1]);
        assert_eq!(beta(&h2()), [1, 2]);
        assert_eq!(beta(&d3_prime()), [1, 3, 2]);
    }

    #[test]
    fn trees() {
        assert_eq!(BinaryTree::enumerate(4).len(), 14);
        let t = BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf);
        assert_eq!(rect_of_tree(&t).unwrap().n(), 1);
        let h = BinaryTree::node(t.clone(), BinaryTree::Leaf);
        assert_eq!(rect_of_tree(&h).unwrap(), h2());
        let v = BinaryTree::node(BinaryTree::Leaf, t);
        assert_eq!(rect_of_tree(&v).unwrap(), v2());
        assert!(rect_of_tree(&BinaryTree::Leaf).is_err());
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, "[[null,null],null]");
        assert_eq!(serde_json::from_str::<BinaryTree>(&json).unwrap(), h);
    }
}
