//! Small classes with closed-form counts: compositions, N/W words, the
//! one-parameter family with `k` verticals and the two trivial drawings.

use super::weak::require_avoids;
use crate::error::{Error, Result};
use crate::patterns::Pattern;
use crate::rect::{DiagonalOrder, Rect, RectDrawing};

/// Column sizes `ℓ_1 + … + ℓ_k = n` of a drawing whose verticals all span
/// the full height.
pub fn composition_of(d: &RectDrawing) -> Result<Vec<usize>> {
    require_avoids(d, Pattern::TD)?;
    require_avoids(d, Pattern::TU)?;
    Ok((0..d.width()).map(|x| d.rects().iter().filter(|r| r.x0 == x).count()).collect())
}

/// Representative of the weak class with the given column sizes.
pub fn rect_of_composition(parts: &[usize]) -> Result<RectDrawing> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::OutOfDomain(format!("not a composition: {parts:?}")));
    }
    let n: usize = parts.iter().sum();
    let k = parts.len();
    let height = (n - k + 1) as u32;
    let mut rects = Vec::with_capacity(n);
    let mut next_line = 1;
    for (x, &l) in parts.iter().enumerate() {
        let x = x as u32;
        let mut cuts = vec![0];
        cuts.extend(next_line..next_line + l as u32 - 1);
        cuts.push(height);
        next_line += l as u32 - 1;
        rects.extend(cuts.windows(2).map(|w| Rect::new(x, w[0], x + 1, w[1])));
    }
    RectDrawing::from_tiling(k as u32, height, rects)
}

/// Every composition of `n`, as column sizes.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = vec![1];
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(1);
                } else {
                    *parts.last_mut().expect("nonempty") += 1;
                }
            }
            parts
        })
        .collect()
}

/// For rectangles `2..=n` in NW-SE order, `N` when the rectangle meets the
/// top side and `W` when it meets the left side.
pub fn nw_word(d: &RectDrawing) -> Result<String> {
    require_avoids(d, Pattern::TD)?;
    require_avoids(d, Pattern::TR)?;
    let rects = d.rects();
    d.order(DiagonalOrder::NwSe)
        .into_iter()
        .skip(1)
        .map(|i| {
            let r = rects[i];
            if r.y1 == d.height() {
                Ok('N')
            } else if r.x0 == 0 {
                Ok('W')
            } else {
                Err(Error::OutOfDomain(format!("rectangle {r} meets neither N nor W")))
            }
        })
        .collect()
}

/// Inverse of [`nw_word`]: each `W` adds a full-width strip at the bottom,
/// each `N` a full-height strip on the right.
pub fn rect_of_nw_word(word: &str) -> Result<RectDrawing> {
    let (mut w, mut h) = (1, 1);
    let mut rects = vec![Rect::new(0, 0, 1, 1)];
    for c in word.chars() {
        match c {
            'W' | 'w' => {
                for r in &mut rects {
                    r.y0 += 1;
                    r.y1 += 1;
                }
                rects.push(Rect::new(0, 0, w, 1));
                h += 1;
            }
            'N' | 'n' => {
                rects.push(Rect::new(w, 0, w + 1, h));
                w += 1;
            }
            _ => return Err(Error::Parse(format!("expected N or W, found {c:?}"))),
        }
    }
    RectDrawing::from_tiling(w, h, rects)
}

/// The drawing with `k` full-height verticals and `n - k - 1` horizontals in
/// the leftmost column.
pub fn k_class(n: usize, k: usize) -> Result<RectDrawing> {
    if n == 0 || k >= n {
        return Err(Error::OutOfDomain(format!("need 0 <= k < n, got n={n}, k={k}")));
    }
    let h = (n - k) as u32;
    let w = k as u32 + 1;
    let mut rects: Vec<Rect> = (0..h).map(|y| Rect::new(0, y, 1, y + 1)).collect();
    rects.extend((1..w).map(|x| Rect::new(x, 0, x + 1, h)));
    RectDrawing::from_tiling(w, h, rects)
}

/// The all-vertical and all-horizontal drawings (one drawing when `n = 1`).
pub fn trivial_class(n: usize) -> Result<Vec<RectDrawing>> {
    if n == 0 {
        return Err(Error::OutOfDomain("n must be positive".into()));
    }
    let mut out = vec![k_class(n, n - 1)?];
    if n > 1 {
        out.push(k_class(n, 0)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_example() {
        let c = [3, 5, 1, 3, 4, 2];
        let d = rect_of_composition(&c).unwrap();
        assert_eq!(d.n(), 18);
        assert_eq!(composition_of(&d).unwrap(), c);
    }

    #[test]
    fn nw_word_example() {
        let d = rect_of_nw_word("NWWWNNWNW").unwrap();
        assert_eq!(d.n(), 10);
        assert_eq!(nw_word(&d).unwrap(), "NWWWNNWNW");
    }

    #[test]
    fn size_one() {
        assert_eq!(compositions(1), vec![vec![1]]);
        assert_eq!(nw_word(&RectDrawing::unit()).unwrap(), "");
        assert_eq!(trivial_class(1).unwrap().len(), 1);
    }
}
