//! Bijections on strong rectangulations: `τ⁽⁷⁾`, `τ⁽⁸⁾`, `τ⁽⁶⁾` on the
//! `⊤`-avoiders and `σ` on the `⊥`-avoiders.
//!
//! The forward maps are direct constructions; the inverses replay the
//! generating-tree trace of the sequence on the rectangulation side.

use serde::Serialize;

use super::weak::{l_labels_in_sw_ne, require_avoids};
use crate::error::Result;
use crate::gentree::{Realization, Rectangulations, Sequences, Tree};
use crate::invseq::{self, InvSeq};
use crate::patterns::Pattern;
use crate::rect::{DiagonalOrder, Rect, RectDrawing, Segment};

/// `τ⁽⁷⁾`: the weak reading `τ`, with the `i`-th right neighbor of each
/// vertical segment lowered by `j - 1` when its SW corner touches the `j`-th
/// left neighbor (both counted bottom to top).
pub fn tau7(d: &RectDrawing) -> Result<InvSeq> {
    require_avoids(d, Pattern::TD)?;
    let mut e = l_labels_in_sw_ne(d).values().to_vec();
    let order = d.order(DiagonalOrder::SwNe);
    let mut pos = vec![0; d.n()];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    for x in 1..d.width() {
        let mut left: Vec<&Rect> = d.rects().iter().filter(|r| r.x1 == x).collect();
        left.sort_by_key(|r| r.y0);
        for (i, r) in d.rects().iter().enumerate().filter(|(_, r)| r.x0 == x) {
            let j =
                left.iter().position(|l| l.y0 <= r.y0 && r.y0 < l.y1).expect("the corner lies on some left neighbor");
            e[pos[i]] -= j as u32;
        }
    }
    InvSeq::new(e)
}

pub fn tau7_inv(e: &InvSeq) -> Result<RectDrawing> {
    Rectangulations::replay(Tree::T1, &Sequences::trace_of(Tree::T1, e)?)
}

pub fn tau8(d: &RectDrawing) -> Result<InvSeq> {
    invseq::transform_7_to_8(&tau7(d)?)
}

pub fn tau8_inv(e: &InvSeq) -> Result<RectDrawing> {
    tau7_inv(&invseq::transform_8_to_7(e)?)
}

pub fn tau6(d: &RectDrawing) -> Result<InvSeq> {
    invseq::transform_8_to_6(&tau8(d)?)
}

pub fn tau6_inv(e: &InvSeq) -> Result<RectDrawing> {
    tau8_inv(&invseq::transform_6_to_8(e)?)
}

/// λ-labels of a canonical drawing: for a horizontal segment, the number of
/// rectangles lying below it; for a rectangle, the label of its bottom edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaLabels {
    pub drawing: RectDrawing,
    pub segments: Vec<(Segment, u32)>,
    pub rects: Vec<u32>,
}

pub fn lambda_labels(d: &RectDrawing) -> Result<LambdaLabels> {
    require_avoids(d, Pattern::TU)?;
    let drawing = d.canonical();
    let below = |y: u32| drawing.rects().iter().filter(|r| r.y1 <= y).count() as u32;
    let segments = drawing.horizontals().into_iter().map(|s| (s, below(s.coord))).collect();
    let rects = drawing.rects().iter().map(|r| below(r.y0)).collect();
    Ok(LambdaLabels { drawing, segments, rects })
}

/// The tree whose edges join each rectangle to the rectangle carrying its SE
/// corner on its left side. Nodes are rectangle indices of the canonical
/// drawing; when several rectangles touch E an auxiliary root with index `n`
/// is added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeT {
    pub drawing: RectDrawing,
    /// Children bottom to top by contact height.
    pub children: Vec<Vec<usize>>,
    pub root: usize,
    pub augmented: bool,
}

impl TreeT {
    /// Parent of every node, `None` at the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.children.len()];
        for (p, kids) in self.children.iter().enumerate() {
            for &c in kids {
                out[c] = Some(p);
            }
        }
        out
    }

    /// Subtrees bottom to top, then the node; the auxiliary root is omitted.
    pub fn reverse_post_order(&self) -> Vec<usize> {
        fn rec(t: &TreeT, v: usize, out: &mut Vec<usize>) {
            for &c in &t.children[v] {
                rec(t, c, out);
            }
            out.push(v);
        }
        let mut out = Vec::with_capacity(self.children.len());
        rec(self, self.root, &mut out);
        if self.augmented {
            out.pop();
        }
        out
    }
}

pub fn tree_t(d: &RectDrawing) -> Result<TreeT> {
    require_avoids(d, Pattern::TU)?;
    let drawing = d.canonical();
    let rects = drawing.rects();
    let n = rects.len();
    let east: Vec<usize> = (0..n).filter(|&i| drawing.is_east(&rects[i])).collect();
    let augmented = east.len() > 1;
    let root = if augmented { n } else { east[0] };
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + usize::from(augmented)];
    for (i, x) in rects.iter().enumerate() {
        if i == root {
            continue;
        }
        let parent = if drawing.is_east(x) {
            root
        } else {
            rects
                .iter()
                .position(|y| y.x0 == x.x1 && y.y0 <= x.y0 && x.y0 < y.y1)
                .expect("the SE corner lies on a left side")
        };
        children[parent].push(i);
    }
    for kids in &mut children {
        kids.sort_by_key(|&c| rects[c].y0);
    }
    Ok(TreeT { drawing, children, root, augmented })
}

/// `σ`: λ-labels read in the reverse post-order of the tree `T`.
pub fn sigma(d: &RectDrawing) -> Result<InvSeq> {
    let labels = lambda_labels(d)?;
    let t = tree_t(&labels.drawing)?;
    InvSeq::new(t.reverse_post_order().into_iter().map(|i| labels.rects[i]).collect())
}

pub fn sigma_inv(e: &InvSeq) -> Result<RectDrawing> {
    Rectangulations::replay(Tree::T2, &Sequences::trace_of(Tree::T2, e)?)
}

/// The composite `σ ∘ reflect ∘ (τ⁽⁷⁾)⁻¹` from `I(010,101,120,201)` to
/// `I(011,201)`, which carries (zeros, LtR maxima, bounce, highs) to
/// (highs, zeros, RtL minima, bounce).
pub fn yan_lin(e: &InvSeq) -> Result<InvSeq> {
    sigma(&tau7_inv(e)?.reflect(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::fixtures::*;

    fn seq(v: &[u32]) -> InvSeq {
        InvSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tau7_examples() {
        assert_eq!(tau7(&d3_prime()).unwrap(), seq(&[0, 0, 1]));
        assert_eq!(tau7(&v2()).unwrap(), seq(&[0, 1]));
        assert_eq!(tau7(&h2()).unwrap(), seq(&[0, 0]));
        assert_eq!(tau7_inv(&seq(&[0, 0, 1])).unwrap(), d3_prime().canonical());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&v2()).unwrap(), seq(&[0, 0]));
        assert_eq!(sigma(&h2()).unwrap(), seq(&[0, 1]));
        assert_eq!(sigma(&d3()).unwrap(), seq(&[0, 0, 2]));
        assert_eq!(sigma_inv(&seq(&[0, 0, 2])).unwrap(), d3().canonical());
        assert!(sigma(&d3_prime()).is_err());
    }

    #[test]
    fn tree_t_of_d3() {
        let t = tree_t(&d3()).unwrap();
        assert!(t.augmented);
        assert_eq!(t.children[t.root].len(), 2);
        let l = lambda_labels(&d3()).unwrap();
        assert_eq!(l.segments.len(), 1);
        assert_eq!(l.segments[0].1, 2);
    }
}
