//! Exhaustive enumeration of rectangulations, used as ground truth.
//!
//! For every grid `W x H` with `W + H = n + 1` a depth-first search tiles the
//! grid by repeatedly covering the first uncovered cell with a rectangle.
//! Tilings that satisfy the compact-drawing invariants are kept and
//! deduplicated by their strong key.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::patterns::{avoids_all, Pattern};
use crate::rect::{validate, Rect, RectDrawing, StrongKey};

/// Default largest `n` the oracle agrees to enumerate.
pub const DEFAULT_CAP: usize = 7;

/// Hard limit: grids must fit a 64-cell occupancy mask.
const GRID_CELLS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weak,
    Strong,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Weak => "weak",
            Mode::Strong => "strong",
        }
    }
}

/// Which uncovered cell the search fills next, and in which order the
/// candidate rectangles at that cell are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// Lowest row first, then leftmost; widths tried before heights.
    #[default]
    RowMajor,
    /// Leftmost column first, then lowest; heights tried before widths,
    /// largest first.
    ColumnMajor,
}

#[derive(Debug, Clone, Copy)]
pub struct UniverseConfig {
    pub cap: usize,
    pub exec: Execution,
    pub scan: ScanOrder,
}

impl Default for UniverseConfig {
    fn default() -> Self {
        UniverseConfig { cap: DEFAULT_CAP, exec: Execution::default(), scan: ScanOrder::default() }
    }
}

impl UniverseConfig {
    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::OutOfDomain("size must be at least 1".into()));
        }
        if n > self.cap {
            return Err(Error::SizeLimit { n, limit: self.cap });
        }
        Ok(())
    }
}

struct Grid {
    w: usize,
    h: usize,
    n: usize,
    scan: ScanOrder,
}

impl Grid {
    fn first_free(&self, occ: u64) -> Option<(usize, usize)> {
        match self.scan {
            ScanOrder::RowMajor => {
                let c = occ.trailing_ones() as usize;
                (c < self.w * self.h).then(|| (c % self.w, c / self.w))
            }
            ScanOrder::ColumnMajor => (0..self.w)
                .flat_map(|x| (0..self.h).map(move |y| (x, y)))
                .find(|&(x, y)| occ >> (y * self.w + x) & 1 == 0),
        }
    }

    fn row_mask(&self, x: usize, y: usize, w: usize) -> u64 {
        ((1u64 << w) - 1) << (y * self.w + x)
    }

    /// Rectangles with bottom-left corner `(x, y)` that fit in the free cells.
    fn candidates(&self, occ: u64, x: usize, y: usize) -> Vec<(Rect, u64)> {
        let mut out = Vec::new();
        let mut w = 1;
        while x + w <= self.w && occ >> (y * self.w + x + w - 1) & 1 == 0 {
            let mut mask = 0u64;
            let mut h = 1;
            while y + h <= self.h && occ & self.row_mask(x, y + h - 1, w) == 0 {
                mask |= self.row_mask(x, y + h - 1, w);
                let r = Rect::new(x as u32, y as u32, (x + w) as u32, (y + h) as u32);
                out.push((r, mask));
                h += 1;
            }
            w += 1;
        }
        if self.scan == ScanOrder::ColumnMajor {
            out.sort_by_key(|(r, _)| (std::cmp::Reverse(r.y1), std::cmp::Reverse(r.x1)));
        }
        out
    }

    fn search(&self, occ: u64, rects: &mut Vec<Rect>, found: &mut Vec<RectDrawing>) {
        let Some((x, y)) = self.first_free(occ) else {
            if rects.len() == self.n && validate_unordered(self, rects) {
                if let Ok(d) = RectDrawing::from_tiling(self.w as u32, self.h as u32, rects.clone()) {
                    found.push(d);
                }
            }
            return;
        };
        if rects.len() == self.n {
            return;
        }
        for (r, mask) in self.candidates(occ, x, y) {
            rects.push(r);
            self.search(occ | mask, rects, found);
            rects.pop();
        }
    }
}

/// Cheap pre-check before sorting: every interior line must be used.
fn validate_unordered(g: &Grid, rects: &[Rect]) -> bool {
    let mut xs = 0u64;
    let mut ys = 0u64;
    for r in rects {
        xs |= 1 << r.x0 | 1 << r.x1;
        ys |= 1 << r.y0 | 1 << r.y1;
    }
    xs.count_ones() as usize == g.w + 1 && ys.count_ones() as usize == g.h + 1
}

/// Independent pieces of the search: a grid shape plus the first rectangle.
fn shards(n: usize, scan: ScanOrder) -> Vec<(Grid, Rect, u64)> {
    let mut out = Vec::new();
    for w in 1..=n {
        let h = n + 1 - w;
        if w * h > GRID_CELLS {
            continue;
        }
        let g = Grid { w, h, n, scan };
        for (r, mask) in g.candidates(0, 0, 0) {
            out.push((Grid { w, h, n, scan }, r, mask));
        }
    }
    out
}

/// Every compact drawing with `n` rectangles, in a deterministic order.
pub fn all_compact(n: usize, cfg: &UniverseConfig) -> Result<Vec<RectDrawing>> {
    cfg.check(n)?;
    let parts = shards(n, cfg.scan);
    let found = cfg.exec.map(&parts, |(g, r, mask)| {
        let mut out = Vec::new();
        g.search(*mask, &mut vec![*r], &mut out);
        out
    });
    let mut all: Vec<RectDrawing> = found.into_iter().flatten().collect();
    all.sort();
    debug_assert!(all.iter().all(|d| validate(d.width(), d.height(), d.rects()).is_empty()));
    Ok(all)
}

/// One representative per strong class, sorted by strong key. The
/// representative is the smallest canonical drawing among the members.
pub fn enumerate_strong_with(n: usize, cfg: &UniverseConfig) -> Result<Vec<RectDrawing>> {
    let all = all_compact(n, cfg)?;
    let keyed = cfg.exec.map(&all, |d| {
        let c = d.canonical();
        (c.strong_key(), c)
    });
    let mut classes: BTreeMap<StrongKey, RectDrawing> = BTreeMap::new();
    for (k, c) in keyed {
        match classes.get_mut(&k) {
            Some(best) if *best <= c => {}
            Some(best) => *best = c,
            None => {
                classes.insert(k, c);
            }
        }
    }
    Ok(classes.into_values().collect())
}

pub fn enumerate_strong(n: usize) -> Result<Vec<RectDrawing>> {
    enumerate_strong_with(n, &UniverseConfig::default())
}

/// Strong representatives deduplicated by weak key (first strong member in
/// key order wins).
pub fn weak_from_strong(strong: &[RectDrawing]) -> Vec<RectDrawing> {
    let mut classes = BTreeMap::new();
    for d in strong {
        classes.entry(d.weak_key()).or_insert_with(|| d.clone());
    }
    classes.into_values().collect()
}

pub fn enumerate_weak(n: usize) -> Result<Vec<RectDrawing>> {
    Ok(weak_from_strong(&enumerate_strong(n)?))
}

/// Members of `R^mode_n(avoid)`.
pub fn filter_class(strong: &[RectDrawing], mode: Mode, avoid: &[Pattern]) -> Vec<RectDrawing> {
    let kept: Vec<RectDrawing> = strong.iter().filter(|d| avoids_all(d, avoid)).cloned().collect();
    match mode {
        Mode::Strong => kept,
        Mode::Weak => weak_from_strong(&kept),
    }
}

pub fn enumerate_class(n: usize, mode: Mode, avoid: &[Pattern]) -> Result<Vec<RectDrawing>> {
    Ok(filter_class(&enumerate_strong(n)?, mode, avoid))
}

pub fn count_class(n: usize, mode: Mode, avoid: &[Pattern]) -> Result<usize> {
    Ok(enumerate_class(n, mode, avoid)?.len())
}

/// Thread-safe memo of strong universes, optionally backed by JSON-lines
/// files in a cache directory.
#[derive(Debug, Default)]
pub struct Universe {
    cfg: UniverseConfig,
    cache_dir: Option<PathBuf>,
    memo: Mutex<BTreeMap<usize, Arc<Vec<RectDrawing>>>>,
}

impl Universe {
    pub fn new(cfg: UniverseConfig) -> Self {
        Universe { cfg, cache_dir: None, memo: Mutex::default() }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn config(&self) -> &UniverseConfig {
        &self.cfg
    }

    pub fn strong(&self, n: usize) -> Result<Arc<Vec<RectDrawing>>> {
        self.cfg.check(n)?;
        if let Some(v) = self.memo.lock().expect("universe memo poisoned").get(&n) {
            return Ok(Arc::clone(v));
        }
        let list = match self.cache_dir.as_deref().map(|d| cache_path(d, n, Mode::Strong)) {
            Some(path) if path.exists() => read_cache(&path)?,
            Some(path) => {
                let list = enumerate_strong_with(n, &self.cfg)?;
                write_cache(&path, &list)?;
                list
            }
            None => enumerate_strong_with(n, &self.cfg)?,
        };
        let list = Arc::new(list);
        self.memo.lock().expect("universe memo poisoned").insert(n, Arc::clone(&list));
        Ok(list)
    }

    pub fn weak(&self, n: usize) -> Result<Vec<RectDrawing>> {
        Ok(weak_from_strong(&self.strong(n)?))
    }

    pub fn class(&self, n: usize, mode: Mode, avoid: &[Pattern]) -> Result<Vec<RectDrawing>> {
        Ok(filter_class(&self.strong(n)?, mode, avoid))
    }
}

pub fn cache_path(dir: &Path, n: usize, mode: Mode) -> PathBuf {
    dir.join(format!("{}-n{n}.jsonl", mode.name()))
}

pub fn read_cache(path: &Path) -> Result<Vec<RectDrawing>> {
    let file = fs::File::open(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (no, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if line.trim().is_empty() {
            continue;
        }
        let d: RectDrawing =
            serde_json::from_str(&line).map_err(|e| Error::Cache(format!("{}:{}: {e}", path.display(), no + 1)))?;
        out.push(d);
    }
    Ok(out)
}

/// Write atomically: a temporary file in the same directory is renamed into
/// place.
pub fn write_cache(path: &Path, list: &[RectDrawing]) -> Result<()> {
    let err = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(err)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp).map_err(err)?);
        for d in list {
            let line = serde_json::to_string(d).expect("drawings serialize");
            writeln!(f, "{line}").map_err(err)?;
        }
        f.flush().map_err(err)?;
    }
    fs::rename(&tmp, path).map_err(err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let strong: Vec<usize> = (1..=5).map(|n| enumerate_strong(n).unwrap().len()).collect();
        assert_eq!(strong, vec![1, 2, 6, 24, 116]);
        let weak: Vec<usize> = (1..=5).map(|n| enumerate_weak(n).unwrap().len()).collect();
        assert_eq!(weak, vec![1, 2, 6, 22, 92]);
    }

    #[test]
    fn class_examples() {
        assert_eq!(count_class(3, Mode::Weak, &[Pattern::TD]).unwrap(), 5);
        assert_eq!(count_class(4, Mode::Weak, &[Pattern::TD, Pattern::TU]).unwrap(), 8);
        assert_eq!(count_class(4, Mode::Strong, &[]).unwrap(), 24);
        assert_eq!(count_class(4, Mode::Weak, &[]).unwrap(), 22);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_strong(DEFAULT_CAP + 1).unwrap_err();
        assert_eq!(err, Error::SizeLimit { n: DEFAULT_CAP + 1, limit: DEFAULT_CAP });
        assert!(enumerate_strong(0).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let u = Universe::new(UniverseConfig::default()).with_cache_dir(dir.path());
        let a = u.strong(4).unwrap();
        let path = cache_path(dir.path(), 4, Mode::Strong);
        assert!(path.exists());
        assert_eq!(read_cache(&path).unwrap(), *a);
        let u2 = Universe::new(UniverseConfig::default()).with_cache_dir(dir.path());
        assert_eq!(*u2.strong(4).unwrap(), *a);
    }
}
