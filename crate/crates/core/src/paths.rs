//! Dyck paths, rushed and progressive paths, and the map `φ` between rushed
//! paths and rectangulations avoiding `⊢` and `⊣`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::patterns::{avoids_all, Pattern};
use crate::rect::{Rect, RectDrawing};

/// Largest semilength accepted by the enumerators.
pub const DEFAULT_CAP: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(format!("ends at altitude {h}")));
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// Altitudes after each step, starting with 0.
    pub fn altitudes(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut h = 0u32;
        out.push(0);
        for s in &self.0 {
            h = if *s == Step::U { h + 1 } else { h - 1 };
            out.push(h);
        }
        out
    }

    pub fn height(&self) -> u32 {
        self.altitudes().into_iter().max().unwrap_or(0)
    }

    /// Length of the initial run of up-steps.
    pub fn initial_run(&self) -> usize {
        self.0.iter().take_while(|s| **s == Step::U).count()
    }

    /// Altitudes of the peaks, left to right.
    pub fn peaks(&self) -> Vec<u32> {
        let alt = self.altitudes();
        (1..self.0.len()).filter(|&i| self.0[i - 1] == Step::U && self.0[i] == Step::D).map(|i| alt[i]).collect()
    }

    /// Starts with `h` up-steps and never returns to altitude `h`.
    pub fn is_rushed(&self) -> bool {
        let h = self.initial_run();
        h >= 1 && self.altitudes()[h + 1..].iter().all(|&a| a != h as u32)
    }

    /// Every peak above altitude 1 has an earlier peak one level lower.
    pub fn is_progressive(&self) -> bool {
        let peaks = self.peaks();
        peaks.iter().enumerate().all(|(i, &p)| p <= 1 || peaks[..i].contains(&(p - 1)))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' | '(' => Ok(Step::U),
                'D' | 'd' | ')' => Ok(Step::D),
                other => Err(Error::Parse(format!("unexpected step `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_cap(semilength: usize, cap: usize) -> Result<()> {
    if semilength > cap {
        Err(Error::SizeLimit { n: semilength, limit: cap })
    } else {
        Ok(())
    }
}

/// All Dyck paths of the given semilength, in lexicographic order (`U < D`).
pub fn enumerate_dyck(semilength: usize) -> Result<Vec<DyckPath>> {
    check_cap(semilength, DEFAULT_CAP)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(2 * semilength);
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if downs == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if ups < n {
            cur.push(Step::U);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::D);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    rec(semilength, 0, 0, &mut cur, &mut out);
    Ok(out)
}

pub fn enumerate_rushed(semilength: usize) -> Result<Vec<DyckPath>> {
    Ok(enumerate_dyck(semilength)?.into_iter().filter(DyckPath::is_rushed).collect())
}

pub fn enumerate_progressive(semilength: usize) -> Result<Vec<DyckPath>> {
    Ok(enumerate_dyck(semilength)?.into_iter().filter(DyckPath::is_progressive).collect())
}

/// Number of `±1` paths of `len` steps from altitude 0 to altitude `k`
/// staying within `[0, k]`.
pub fn strip_path_count(len: usize, k: usize) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    use num_traits::Zero;
    let mut cur = vec![BigUint::zero(); k + 1];
    cur[0] = BigUint::from(1u32);
    for _ in 0..len {
        let mut next = vec![BigUint::zero(); k + 1];
        for (a, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if a < k {
                next[a + 1] += c;
            }
            if a > 0 {
                next[a - 1] += c;
            }
        }
        cur = next;
    }
    cur.swap_remove(k)
}

/// Rushed paths of semilength `n + 1` and height `k + 1` correspond to strip
/// paths of length `2n - k` in the strip of width `k`.
pub fn rushed_count_by_height(n: usize, k: usize) -> num_bigint::BigUint {
    if k == 0 || k > n {
        return num_bigint::BigUint::default();
    }
    strip_path_count(2 * n - k, k)
}

/// `φ`: a rushed path of semilength `n + 1 ≥ 2` to a canonical drawing of size
/// `n` avoiding `⊢` and `⊣`. Rows come from the initial run; every non-initial
/// up-step becomes a unit vertical segment in the row of its starting altitude.
pub fn phi(p: &DyckPath) -> Result<RectDrawing> {
    if !p.is_rushed() || p.semilength() < 2 {
        return Err(Error::OutOfDomain(format!("{p} is not a rushed path of semilength at least 2")));
    }
    let h = p.initial_run() as u32;
    let alt = p.altitudes();
    let rows = h - 1;
    // (row, x-rank) of each vertical segment, x-rank in path order
    let verts: Vec<u32> = (h as usize..p.steps().len()).filter(|&i| p.steps()[i] == Step::U).map(|i| alt[i]).collect();
    let width = verts.len() as u32 + 1;
    let mut rects = Vec::with_capacity(p.semilength() - 1);
    for row in 0..rows {
        let mut left = 0;
        for (i, _) in verts.iter().enumerate().filter(|(_, &r)| r == row) {
            let x = i as u32 + 1;
            rects.push(Rect::new(left, row, x, row + 1));
            left = x;
        }
        rects.push(Rect::new(left, row, width, row + 1));
    }
    Ok(RectDrawing::from_tiling(width, rows, rects)?.canonical())
}

/// `φ⁻¹`: order the unit vertical segments by the extension of their
/// left-to-right heap order that always takes the highest available segment,
/// and read off the up-step levels.
pub fn phi_inv(d: &RectDrawing) -> Result<DyckPath> {
    if !avoids_all(d, &[Pattern::TR, Pattern::TL]) {
        return Err(Error::OutOfDomain(format!("{d} contains ⊢ or ⊣")));
    }
    let verts = d.verticals();
    let m = verts.len();
    // v before w when rows are within one of each other and v is left of w
    let before = |v: usize, w: usize| {
        let (a, b) = (&verts[v], &verts[w]);
        a.lo.abs_diff(b.lo) <= 1 && a.coord < b.coord
    };
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let pick = (0..m)
            .filter(|&w| !done[w] && (0..m).all(|v| done[v] || !before(v, w)))
            .max_by_key(|&w| (verts[w].lo, std::cmp::Reverse(verts[w].coord)))
            .expect("heap order is acyclic");
        done[pick] = true;
        order.push(verts[pick].lo);
    }
    let h = d.height() + 1;
    let mut steps = vec![Step::U; h as usize];
    steps.push(Step::D);
    let mut a = h - 1;
    for row in order {
        if row > a {
            return Err(Error::OutOfDomain(format!("{d}: vertical segments cannot be ordered as a path")));
        }
        steps.extend(std::iter::repeat_n(Step::D, (a - row) as usize));
        steps.push(Step::U);
        a = row + 1;
    }
    steps.extend(std::iter::repeat_n(Step::D, a as usize));
    DyckPath::new(steps)
}
