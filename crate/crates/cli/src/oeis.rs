//! OEIS b-files: download, on-disk cache and comparison against values
//! computed here.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::{BigInt, BigUint};
use rectlab::gentree::{count_levels, Tree};
use rectlab::paths::rushed_count_by_height;
use rectlab::series::{catalan, gk_series};

use crate::error::{CliError, CliResult};

/// The sequences this tool knows how to compute.
pub const KNOWN: [&str; 7] = ["A000108", "A279555", "A287709", "A001906", "A003462", "A005021", "A094811"];

pub fn normalize_id(id: &str) -> CliResult<String> {
    let digits = id.trim().trim_start_matches(['A', 'a']);
    let k: u32 = digits.parse().map_err(|_| CliError::Usage(format!("bad OEIS id {id:?}")))?;
    Ok(format!("A{k:06}"))
}

/// Values computed here, keyed by index, with a description of the method.
pub fn computed(id: &str, max_n: usize) -> CliResult<(BTreeMap<i64, BigInt>, &'static str)> {
    let to_i = |n: usize, v: BigUint| (n as i64, BigInt::from(v));
    let out = match id {
        "A000108" => ((0..=max_n).map(|n| to_i(n, catalan(n))).collect(), "binomial closed form"),
        "A279555" => (
            count_levels(Tree::T1, max_n).into_iter().enumerate().map(|(i, v)| to_i(i + 1, v)).collect(),
            "generating-tree DP",
        ),
        "A287709" => (
            (1..=max_n).map(|n| to_i(n, (1..=n).map(|k| rushed_count_by_height(n, k)).sum())).collect(),
            "strip-path transfer matrix",
        ),
        "A001906" | "A003462" | "A005021" | "A094811" => {
            let k = match id {
                "A001906" => 3,
                "A003462" => 4,
                "A005021" => 5,
                _ => 6,
            };
            let g = gk_series(k, max_n)?;
            (g.into_iter().enumerate().skip(k).map(|(m, v)| (m as i64, v)).collect(), "power-series division")
        }
        _ => {
            return Err(CliError::Usage(format!("no built-in computation for {id}; known: {}", KNOWN.join(", "))));
        }
    };
    Ok(out)
}

/// Parse `index value` lines, skipping comments and blanks.
pub fn parse_bfile(text: &str) -> CliResult<BTreeMap<i64, BigInt>> {
    let mut out = BTreeMap::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v)) = (parts.next(), parts.next()) else {
            return Err(CliError::Usage(format!("malformed b-file line {line:?}")));
        };
        let i: i64 = i.parse().map_err(|_| CliError::Usage(format!("malformed index in {line:?}")))?;
        let v: BigInt = v.parse().map_err(|_| CliError::Usage(format!("malformed value in {line:?}")))?;
        out.insert(i, v);
    }
    Ok(out)
}

pub fn cache_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os("RECTLAB_CACHE_DIR") {
        return PathBuf::from(p);
    }
    dirs::cache_dir().unwrap_or_else(std::env::temp_dir).join("rectlab")
}

pub fn bfile_path(dir: &Path, id: &str) -> PathBuf {
    dir.join("oeis").join(format!("b{}.txt", &id[1..]))
}

/// Write through a temporary file and rename, so readers never see a
/// partial file.
pub fn write_atomic(path: &Path, text: &str) -> CliResult<()> {
    let dir = path.parent().ok_or_else(|| CliError::Usage(format!("bad cache path {}", path.display())))?;
    fs::create_dir_all(dir)?;
    let tmp =
        dir.join(format!(".{}.{}.tmp", path.file_name().and_then(|s| s.to_str()).unwrap_or("b"), std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(text.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn download(id: &str) -> CliResult<String> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(Duration::from_secs(30))).build().into();
    let mut resp = agent.get(&url).call().map_err(|e| CliError::Network(format!("{url}: {e}")))?;
    resp.body_mut().read_to_string().map_err(|e| CliError::Network(format!("{url}: {e}")))
}

/// Where the reference values came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Cache(PathBuf),
    Network(PathBuf),
    /// Download failed; the cached copy was used instead.
    CacheAfterNetworkError(PathBuf, String),
}

pub fn load(id: &str, dir: &Path, offline: bool, refresh: bool) -> CliResult<(BTreeMap<i64, BigInt>, Source)> {
    let path = bfile_path(dir, id);
    let cached = path.exists();
    if offline || (cached && !refresh) {
        if !cached {
            return Err(CliError::Io(std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!("offline and no cached b-file at {}", path.display()),
            )));
        }
        return Ok((parse_bfile(&fs::read_to_string(&path)?)?, Source::Cache(path)));
    }
    match download(id) {
        Ok(text) => {
            let parsed = parse_bfile(&text)?;
            write_atomic(&path, &text)?;
            Ok((parsed, Source::Network(path)))
        }
        Err(e) if cached => {
            let text = fs::read_to_string(&path)?;
            Ok((parse_bfile(&text)?, Source::CacheAfterNetworkError(path, e.to_string())))
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// Reference index = computed index + shift.
    pub shift: i64,
    pub overlap: usize,
    pub mismatches: Vec<(i64, BigInt, Option<BigInt>)>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.overlap > 0 && self.mismatches.is_empty()
    }
}

/// Compare under every index shift in `-3..=3` and keep the best: full
/// agreement with the largest overlap, preferring shift 0 on ties.
pub fn compare(ours: &BTreeMap<i64, BigInt>, reference: &BTreeMap<i64, BigInt>) -> Comparison {
    let at = |shift: i64| {
        let mut overlap = 0;
        let mut mismatches = Vec::new();
        for (&i, v) in ours {
            match reference.get(&(i + shift)) {
                Some(r) if r == v => overlap += 1,
                Some(r) => {
                    overlap += 1;
                    mismatches.push((i, v.clone(), Some(r.clone())));
                }
                None => {}
            }
        }
        Comparison { shift, overlap, mismatches }
    };
    let mut shifts: Vec<i64> = (-3..=3).collect();
    shifts.sort_by_key(|s| s.abs());
    let all: Vec<Comparison> = shifts.into_iter().map(at).collect();
    all.iter()
        .filter(|c| c.agrees())
        .max_by_key(|c| (c.overlap, std::cmp::Reverse(c.shift.abs())))
        .cloned()
        .unwrap_or_else(|| all.into_iter().next().expect("shift 0 is tried"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(v: &[(i64, i64)]) -> BTreeMap<i64, BigInt> {
        v.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()
    }

    #[test]
    fn detects_shift() {
        let ours = map(&[(1, 1), (2, 2), (3, 5), (4, 15)]);
        let reference = map(&[(0, 1), (1, 2), (2, 5), (3, 15), (4, 51)]);
        let c = compare(&ours, &reference);
        assert!(c.agrees());
        assert_eq!(c.shift, -1);
        assert_eq!(c.overlap, 4);
    }

    #[test]
    fn reports_mismatch_at_shift_zero() {
        let c = compare(&map(&[(1, 1), (2, 3)]), &map(&[(1, 1), (2, 2)]));
        assert!(!c.agrees());
        assert_eq!(c.shift, 0);
        assert_eq!(c.mismatches.len(), 1);
    }

    #[test]
    fn bfile_parsing() {
        let m = parse_bfile("# comment\n0 1\n1 1\n\n2 2\n").unwrap();
        assert_eq!(m.len(), 3);
        assert!(parse_bfile("0\n").is_err());
        assert_eq!(normalize_id("a279555").unwrap(), "A279555");
    }
}
