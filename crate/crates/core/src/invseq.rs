//! Inversion sequences, word patterns, statistics and the structural
//! characterizations of the classes counted by the succession rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest length accepted by the exhaustive enumerators.
pub const DEFAULT_CAP: usize = 10;

/// A sequence `e` with `0 <= e_j <= j - 1` (1-based `j`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct InvSeq(Vec<u32>);

impl TryFrom<Vec<u32>> for InvSeq {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        InvSeq::new(v)
    }
}

impl From<InvSeq> for Vec<u32> {
    fn from(e: InvSeq) -> Self {
        e.0
    }
}

impl fmt::Display for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for InvSeq {
    type Err = Error;

    /// Accepts `0,0,1`, `(0,0,1)` or `[0, 0, 1]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<u32>>>()?;
        InvSeq::new(v)
    }
}

impl InvSeq {
    pub fn new(v: Vec<u32>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        if let Some(j) = v.iter().enumerate().position(|(j, &x)| x as usize > j) {
            return Err(Error::InvalidSequence(format!("entry {} at position {} exceeds {}", v[j], j + 1, j)));
        }
        Ok(InvSeq(v))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Append a value, checking the inversion-sequence bound.
    pub fn push(&self, v: u32) -> Result<Self> {
        let mut out = self.0.clone();
        out.push(v);
        InvSeq::new(out)
    }

    /// Drop the last entry; `None` for length 1.
    pub fn parent(&self) -> Option<Self> {
        (self.0.len() > 1).then(|| InvSeq(self.0[..self.0.len() - 1].to_vec()))
    }

    pub fn stats(&self) -> Stats {
        stats(&self.0)
    }
}

/// A word pattern whose values form `{0, ..., l}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternWord(Vec<u32>);

impl PatternWord {
    pub fn new(v: Vec<u32>) -> Result<Self> {
        if v.is_empty() || v.len() > 4 {
            return Err(Error::Parse(format!("pattern length {} not in 1..=4", v.len())));
        }
        let max = *v.iter().max().expect("non-empty");
        if (0..=max).any(|x| !v.contains(&x)) {
            return Err(Error::Parse(format!("pattern values {v:?} skip a value")));
        }
        Ok(PatternWord(v))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for PatternWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad pattern digit `{c}`"))))
            .collect::<Result<Vec<u32>>>()?;
        PatternWord::new(v)
    }
}

impl fmt::Display for PatternWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parse a list like `010,101,120,201`.
pub fn parse_patterns(s: &str) -> Result<Vec<PatternWord>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

fn same_order(e: &[u32], idx: &[usize], p: &[u32]) -> bool {
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a].cmp(&p[b]) != e[idx[a]].cmp(&e[idx[b]]) {
                return false;
            }
        }
    }
    true
}

/// Occurrence of `p` ending exactly at the last position of `e`.
fn occurs_ending_at_last(e: &[u32], p: &[u32]) -> bool {
    let k = p.len();
    if e.len() < k {
        return false;
    }
    if k == 1 {
        return true;
    }
    // positions idx[0] < ... < idx[k-2] < last, chosen right to left
    fn fill(e: &[u32], p: &[u32], idx: &mut [usize], slot: usize, bound: usize) -> bool {
        for i in (slot..bound).rev() {
            idx[slot] = i;
            let hit = if slot == 0 { same_order(e, idx, p) } else { fill(e, p, idx, slot - 1, i) };
            if hit {
                return true;
            }
        }
        false
    }
    let mut idx = vec![0usize; k];
    idx[k - 1] = e.len() - 1;
    fill(e, p, &mut idx, k - 2, e.len() - 1)
}

/// True when some subsequence of `e` is order-isomorphic to `p`, with
/// equalities in `p` matched by equalities in `e`.
pub fn contains_pattern(e: &[u32], p: &PatternWord) -> bool {
    (1..=e.len()).any(|m| occurs_ending_at_last(&e[..m], &p.0))
}

pub fn avoids_all(e: &[u32], ps: &[PatternWord]) -> bool {
    ps.iter().all(|p| !contains_pattern(e, p))
}

/// All inversion sequences of length `n` avoiding `ps`, in lexicographic
/// order.
pub fn enumerate_avoiding(n: usize, ps: &[PatternWord]) -> Result<Vec<InvSeq>> {
    enumerate_avoiding_capped(n, ps, DEFAULT_CAP)
}

pub fn enumerate_avoiding_capped(n: usize, ps: &[PatternWord], cap: usize) -> Result<Vec<InvSeq>> {
    if n == 0 {
        return Err(Error::OutOfDomain("length must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::SizeLimit { n, limit: cap });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn dfs(n: usize, ps: &[PatternWord], cur: &mut Vec<u32>, out: &mut Vec<InvSeq>) {
        if cur.len() == n {
            out.push(InvSeq(cur.clone()));
            return;
        }
        for v in 0..=cur.len() as u32 {
            cur.push(v);
            if ps.iter().all(|p| !occurs_ending_at_last(cur, &p.0)) {
                dfs(n, ps, cur, out);
            }
            cur.pop();
        }
    }
    dfs(n, ps, &mut cur, &mut out);
    Ok(out)
}

pub fn count_avoiding(n: usize, ps: &[PatternWord]) -> Result<usize> {
    Ok(enumerate_avoiding(n, ps)?.len())
}

/// The five statistics of an inversion sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Stats {
    pub zeros: usize,
    pub highs: usize,
    pub bounce: usize,
    pub ltr_maxima: usize,
    pub rtl_minima: usize,
}

pub fn stats(e: &[u32]) -> Stats {
    Stats {
        zeros: e.iter().filter(|&&v| v == 0).count(),
        highs: e.iter().enumerate().filter(|&(j, &v)| v as usize == j).count(),
        bounce: e.len() - e.iter().copied().max().unwrap_or(0) as usize,
        ltr_maxima: ltr_maxima_positions(e).len(),
        rtl_minima: rtl_minima_positions(e).len(),
    }
}

/// 0-based positions of strict left-to-right maxima.
pub fn ltr_maxima_positions(e: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<u32> = None;
    for (j, &v) in e.iter().enumerate() {
        if best.is_none_or(|b| v > b) {
            out.push(j);
            best = Some(v);
        }
    }
    out
}

/// 0-based positions of strict right-to-left minima, left to right.
pub fn rtl_minima_positions(e: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<u32> = None;
    for (j, &v) in e.iter().enumerate().rev() {
        if best.is_none_or(|b| v < b) {
            out.push(j);
            best = Some(v);
        }
    }
    out.reverse();
    out
}

/// The inversion sequence of a permutation of `1..=n`:
/// `e_k = #{i < k : pi_i > pi_k}`.
pub fn theta(pi: &[u32]) -> Result<InvSeq> {
    let n = pi.len();
    let mut seen = vec![false; n + 1];
    for &v in pi {
        if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::OutOfDomain(format!("{pi:?} is not a permutation of 1..={n}")));
        }
    }
    let e = (0..n).map(|k| pi[..k].iter().filter(|&&x| x > pi[k]).count() as u32).collect();
    InvSeq::new(e)
}

/// One active area: 0-based column range `cols` (inclusive) and value range
/// `rows` (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActiveArea {
    pub cols: (usize, usize),
    pub rows: (u32, u32),
}

pub fn active_areas(e: &[u32]) -> Vec<ActiveArea> {
    let a = ltr_maxima_positions(e);
    (0..a.len())
        .map(|j| {
            let end = if j + 1 < a.len() { a[j + 1] - 1 } else { e.len() - 1 };
            let lo = if j == 0 { 0 } else { e[a[j - 1]] + 1 };
            ActiveArea { cols: (a[j], end), rows: (lo, e[a[j]]) }
        })
        .collect()
}

/// The three classes characterized by active areas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AreaClass {
    /// `I(010,101,120,201)`: weakly decreasing inside areas.
    I7,
    /// `I(010,110,120,210)`: weakly increasing after the first element.
    I8,
    /// `I(010,100,120,210)`: strictly increasing off the first value.
    I6,
}

impl AreaClass {
    pub const ALL: [AreaClass; 3] = [AreaClass::I7, AreaClass::I8, AreaClass::I6];

    pub fn patterns(self) -> Vec<PatternWord> {
        let s = match self {
            AreaClass::I7 => "010,101,120,201",
            AreaClass::I8 => "010,110,120,210",
            AreaClass::I6 => "010,100,120,210",
        };
        parse_patterns(s).expect("fixed patterns parse")
    }
}

/// Every element lies in its active area.
pub fn condition_a(e: &[u32]) -> bool {
    active_areas(e).iter().all(|ar| e[ar.cols.0..=ar.cols.1].iter().all(|&v| ar.rows.0 <= v && v <= ar.rows.1))
}

/// Membership via the active-area characterization.
pub fn class_check(e: &[u32], class: AreaClass) -> bool {
    if !condition_a(e) {
        return false;
    }
    active_areas(e).iter().all(|ar| {
        let area = &e[ar.cols.0..=ar.cols.1];
        let hi = ar.rows.1;
        match class {
            AreaClass::I7 => area.windows(2).all(|w| w[0] >= w[1]),
            AreaClass::I8 => area[1..].windows(2).all(|w| w[0] <= w[1]),
            AreaClass::I6 => {
                let rest: Vec<u32> = area.iter().copied().filter(|&v| v != hi).collect();
                rest.windows(2).all(|w| w[0] < w[1])
            }
        }
    })
}

fn require(e: &InvSeq, class: AreaClass) -> Result<()> {
    if class_check(&e.0, class) {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("{e} is not in {class:?}")))
    }
}

/// Reflect every active area vertically, except for its first column.
fn reflect_areas(e: &[u32]) -> Vec<u32> {
    let mut out = e.to_vec();
    for ar in active_areas(e) {
        for v in &mut out[ar.cols.0 + 1..=ar.cols.1] {
            *v = ar.rows.0 + ar.rows.1 - *v;
        }
    }
    out
}

pub fn transform_7_to_8(e: &InvSeq) -> Result<InvSeq> {
    require(e, AreaClass::I7)?;
    InvSeq::new(reflect_areas(&e.0))
}

pub fn transform_8_to_7(e: &InvSeq) -> Result<InvSeq> {
    require(e, AreaClass::I8)?;
    InvSeq::new(reflect_areas(&e.0))
}

/// Inside each area, repeated values below the area's top are replaced by
/// the top value, except for their last occurrence.
pub fn transform_8_to_6(e: &InvSeq) -> Result<InvSeq> {
    require(e, AreaClass::I8)?;
    let mut out = e.0.clone();
    for ar in active_areas(&e.0) {
        let hi = ar.rows.1;
        for (j, slot) in out.iter_mut().enumerate().take(ar.cols.1 + 1).skip(ar.cols.0 + 1) {
            let v = e.0[j];
            if v < hi && e.0[j + 1..=ar.cols.1].contains(&v) {
                *slot = hi;
            }
        }
    }
    InvSeq::new(out)
}

/// Inverse of [`transform_8_to_6`]: a run of top values followed by a lower
/// value `v` becomes a run of `v`; trailing top values stay.
pub fn transform_6_to_8(e: &InvSeq) -> Result<InvSeq> {
    require(e, AreaClass::I6)?;
    let mut out = e.0.clone();
    for ar in active_areas(&e.0) {
        let hi = ar.rows.1;
        let mut pending = Vec::new();
        for j in ar.cols.0 + 1..=ar.cols.1 {
            let v = e.0[j];
            if v == hi {
                pending.push(j);
            } else {
                for p in pending.drain(..) {
                    out[p] = v;
                }
            }
        }
    }
    InvSeq::new(out)
}

pub fn all_ltr_maxima_high(e: &[u32]) -> bool {
    ltr_maxima_positions(e).iter().all(|&j| e[j] as usize == j)
}

pub fn bounce_equals_zeros(e: &[u32]) -> bool {
    let s = stats(e);
    s.bounce == s.zeros
}

/// Edges `i -> j` (0-based) of the minimal-inversion tree. A trailing zero is
/// appended first when the last entry is not zero; it becomes the root.
/// Nonzero entries point to their minimal inversion; zeros point to the next
/// zero.
pub fn minimal_inversion_tree(e: &[u32]) -> Result<Vec<(usize, usize)>> {
    let mut f = e.to_vec();
    if f.last() != Some(&0) {
        f.push(0);
    }
    let n = f.len();
    let mut edges = Vec::new();
    for i in 0..n - 1 {
        let targets: Vec<usize> = if f[i] == 0 {
            (i + 1..n).find(|&j| f[j] == 0).into_iter().collect()
        } else {
            (i + 1..n).filter(|&j| f[j] <= f[i] && !(i + 1..j).any(|l| f[j] <= f[l] && f[l] < f[i])).collect()
        };
        match targets.as_slice() {
            [j] => edges.push((i, *j)),
            _ => {
                return Err(Error::OutOfDomain(format!(
                    "entry {} at position {} has {} minimal inversions",
                    f[i],
                    i + 1,
                    targets.len()
                )))
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PatternWord {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_patterns_and_stats() {
        let e = [0, 0, 0, 3, 4, 3, 5];
        assert!(contains_pattern(&e, &pw("010")));
        assert!(contains_pattern(&e, &pw("001")));
        for p in ["100", "101", "120"] {
            assert!(!contains_pattern(&e, &pw(p)), "{p}");
        }
        let s = stats(&e);
        assert_eq!((s.zeros, s.highs, s.bounce, s.ltr_maxima, s.rtl_minima), (3, 3, 2, 4, 3));
        assert_eq!(theta(&[5, 6, 7, 3, 1, 4, 2]).unwrap().values(), &e);
    }

    #[test]
    fn small_stats() {
        let s = stats(&[0]);
        assert_eq!((s.zeros, s.highs, s.bounce, s.ltr_maxima, s.rtl_minima), (1, 1, 1, 1, 1));
        let s = stats(&[0, 1, 2]);
        assert_eq!((s.zeros, s.highs, s.bounce, s.ltr_maxima, s.rtl_minima), (1, 3, 1, 3, 3));
        assert_eq!(theta(&[2, 1]).unwrap().values(), &[0, 1]);
        assert_eq!(theta(&[1, 2, 3]).unwrap().values(), &[0, 0, 0]);
        assert!(theta(&[1, 1]).is_err());
    }

    #[test]
    fn pattern_examples() {
        assert!(contains_pattern(&[0, 1, 1], &pw("011")));
        assert!(contains_pattern(&[0, 1, 0, 2], &pw("010")));
        assert!(!contains_pattern(&[0, 1, 0, 2], &pw("201")));
        assert!(PatternWord::new(vec![0, 2]).is_err());
    }

    #[test]
    fn counts() {
        let ps = parse_patterns("011,201").unwrap();
        assert_eq!(count_avoiding(3, &ps).unwrap(), 5);
        assert_eq!(count_avoiding(4, &AreaClass::I7.patterns()).unwrap(), 15);
        let catalan = [1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, c) in (1..=8).zip(catalan) {
            assert_eq!(count_avoiding(n, &[pw("10")]).unwrap(), c);
        }
        assert!(enumerate_avoiding(11, &[]).is_err());
    }

    #[test]
    fn area_examples() {
        assert!(class_check(&[0, 0, 2, 1], AreaClass::I7));
        assert!(class_check(&[0, 0, 2, 2], AreaClass::I7));
        let e = InvSeq::new(vec![0, 0, 2, 1]).unwrap();
        let e8 = transform_7_to_8(&e).unwrap();
        assert_eq!(e8.values(), &[0, 0, 2, 2]);
        assert_eq!(transform_8_to_7(&e8).unwrap(), e);
        let z = InvSeq::new(vec![0; 5]).unwrap();
        assert_eq!(transform_7_to_8(&z).unwrap(), z);
        assert_eq!(transform_8_to_6(&z).unwrap(), z);
    }

    #[test]
    fn parse_and_serde() {
        let e: InvSeq = "(0,0,1)".parse().unwrap();
        assert_eq!(e.to_string(), "(0,0,1)");
        assert_eq!(serde_json::to_string(&e).unwrap(), "[0,0,1]");
        assert!(serde_json::from_str::<InvSeq>("[0,2]").is_err());
        assert!("0,5".parse::<InvSeq>().is_err());
    }

    #[test]
    fn restricted_predicates() {
        assert!(all_ltr_maxima_high(&[0, 1, 2]));
        assert!(!bounce_equals_zeros(&[0, 0, 2]));
        assert_eq!(minimal_inversion_tree(&[0, 0, 2]).unwrap(), vec![(0, 1), (1, 3), (2, 3)]);
    }
}
