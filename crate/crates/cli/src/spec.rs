//! Class specifications such as `strong:avoid=td,tu` and the counting
//! formulas known for some of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rectlab::gentree::{count_by_tree, Tree};
use rectlab::patterns::{parse_list, Pattern};
use rectlab::series::catalan;
use rectlab::universe::Mode;
use rectlab::verify::full_height_columns_count;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub mode: Mode,
    pub avoid: Vec<Pattern>,
}

impl FromStr for ClassSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (mode, rest) = s.split_once(':').unwrap_or((s, ""));
        let mode = match mode.trim() {
            "weak" => Mode::Weak,
            "strong" => Mode::Strong,
            m => return Err(CliError::Usage(format!("class mode must be weak or strong, got {m:?}"))),
        };
        let avoid = match rest.trim() {
            "" => Vec::new(),
            r => {
                let list = r
                    .strip_prefix("avoid=")
                    .ok_or_else(|| CliError::Usage(format!("expected avoid=<patterns> after ':', got {r:?}")))?;
                let set: BTreeSet<Pattern> = parse_list(list)?.into_iter().collect();
                set.into_iter().collect()
            }
        };
        Ok(ClassSpec { mode, avoid })
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.avoid.iter().map(|p| p.name()).collect();
        write!(f, "{}:avoid={}", self.mode.name(), names.join(","))
    }
}

impl ClassSpec {
    fn joints_only(&self) -> Option<BTreeSet<&'static str>> {
        self.avoid.iter().map(|p| matches!(p, Pattern::Joint(_)).then(|| p.name())).collect()
    }

    /// Count from a closed form or recurrence, when one is known.
    pub fn formula(&self, n: usize) -> Option<(BigUint, &'static str)> {
        if n == 0 {
            return None;
        }
        let set = self.joints_only()?;
        let has = |p: &str| set.contains(p);
        let pow = || BigUint::from(1u32) << (n - 1);
        match (set.len(), self.mode) {
            (1, Mode::Weak) => Some((catalan(n), "Catalan number")),
            (1, Mode::Strong) => {
                let tree = if has("td") || has("tr") { Tree::T1 } else { Tree::T2 };
                Some((count_by_tree(tree, n), "generating tree"))
            }
            (2, mode) => {
                let parallel = (has("td") && has("tu")) || (has("tr") && has("tl"));
                match (parallel, mode) {
                    (true, Mode::Strong) => Some((full_height_columns_count(n), "column interleavings")),
                    _ => Some((pow(), "2^(n-1)")),
                }
            }
            (3, _) => Some((BigUint::from(n), "n")),
            (4, _) => Some((BigUint::from(if n == 1 { 1u32 } else { 2 }), "2 for n >= 2")),
            _ => None,
        }
    }
}

/// `5`, `1..5` or `1..=5` (both inclusive).
pub fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}; use N or A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let c: ClassSpec = "weak:avoid=tu,td".parse().unwrap();
        assert_eq!(c.avoid, vec![Pattern::TD, Pattern::TU]);
        assert_eq!(c.to_string(), "weak:avoid=td,tu");
        assert_eq!("strong".parse::<ClassSpec>().unwrap().avoid, vec![]);
        assert!("medium:avoid=td".parse::<ClassSpec>().is_err());
        assert!("weak:td".parse::<ClassSpec>().is_err());
        assert_eq!(parse_range("1..5").unwrap(), (1, 5));
        assert_eq!(parse_range("1..=5").unwrap(), (1, 5));
        assert_eq!(parse_range("4").unwrap(), (4, 4));
        assert!(parse_range("5..1").is_err());
    }

    #[test]
    fn formulas_match_the_universe() {
        let joints = ["td", "tu", "tr", "tl"];
        for mask in 1u32..16 {
            let names: Vec<&str> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| joints[i]).collect();
            for mode in ["weak", "strong"] {
                let spec: ClassSpec = format!("{mode}:avoid={}", names.join(",")).parse().unwrap();
                for n in 1..=6 {
                    let (f, _) = spec.formula(n).unwrap();
                    let u = rectlab::universe::count_class(n, spec.mode, &spec.avoid).unwrap();
                    assert_eq!(f, BigUint::from(u), "{spec} n={n}");
                }
            }
        }
        assert!("weak".parse::<ClassSpec>().unwrap().formula(3).is_none());
    }
}
