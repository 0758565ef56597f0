//! Exact power series: the Catalan functional equation, the strip generating
//! functions `g_k` and their growth rates.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial or truncated series, coefficient `i` of `x^i`.
pub type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `q_0 = q_1 = 1`, `q_{m+1} = q_m - x q_{m-1}`.
pub fn q_poly(m: usize) -> Poly {
    let mut prev: Poly = vec![BigInt::one()];
    let mut cur: Poly = vec![BigInt::one()];
    for _ in 1..m {
        let mut next = cur.clone();
        next.resize(cur.len().max(prev.len() + 1), BigInt::zero());
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] -= c;
        }
        prev = cur;
        cur = trim(next);
    }
    cur
}

/// `x^{m/2} U_m(1 / (2 sqrt x))` expanded from the explicit Chebyshev sum
/// `U_m(t) = sum_j (-1)^j C(m - j, j) (2t)^{m - 2j}`.
pub fn chebyshev_form(m: usize) -> Poly {
    let p = (0..=m / 2)
        .map(|j| {
            let c = binomial(m - j, j);
            if j % 2 == 0 {
                BigInt::from(c)
            } else {
                -BigInt::from(c)
            }
        })
        .collect();
    trim(p)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Series of `num / den` up to `x^order`; `den(0)` must be `±1`.
pub fn divide(num: &[BigInt], den: &[BigInt], order: usize) -> Result<Poly> {
    let d0 = den.first().cloned().unwrap_or_default();
    if d0.abs() != BigInt::one() {
        return Err(Error::OutOfDomain("denominator must have constant term ±1".into()));
    }
    let mut out: Poly = vec![BigInt::zero(); order + 1];
    for i in 0..=order {
        let mut acc = num.get(i).cloned().unwrap_or_default();
        for j in 1..den.len().min(i + 1) {
            acc -= &den[j] * &out[i - j];
        }
        out[i] = acc * &d0;
    }
    Ok(out)
}

/// `g_k = x^k / q_{k+1}` up to `x^order`.
pub fn gk_series(k: usize, order: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::OutOfDomain("k must be at least 1".into()));
    }
    let mut num = vec![BigInt::zero(); k + 1];
    num[k] = BigInt::one();
    divide(&num, &q_poly(k + 1), order)
}

fn eval(p: &[BigInt], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

/// Reciprocal of the smallest positive root of the denominator of `g_k`.
pub fn growth_rate(k: usize) -> f64 {
    let q = q_poly(k + 1);
    // the smallest root lies in (1/4, 1]
    let mut lo = 0.25;
    let step = 1e-3;
    let mut hi = lo + step;
    while eval(&q, hi).signum() == eval(&q, lo).signum() {
        lo = hi;
        hi += step;
        if hi > 2.0 {
            return f64::NAN;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(&q, mid).signum() == eval(&q, lo).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    1.0 / (0.5 * (lo + hi))
}

/// `4 cos^2(π / (k + 2))`.
pub fn expected_growth_rate(k: usize) -> f64 {
    let c = (std::f64::consts::PI / (k as f64 + 2.0)).cos();
    4.0 * c * c
}

/// `R = x + xR + (x + xR)R` iterated to a fixed point up to `x^order`.
pub fn catalan_series(order: usize) -> Vec<BigUint> {
    let mut r = vec![BigUint::zero(); order + 1];
    for _ in 0..=order {
        let mut next = vec![BigUint::zero(); order + 1];
        if order >= 1 {
            next[1] += 1u32;
        }
        // t = x + xR
        let mut t = vec![BigUint::zero(); order + 1];
        if order >= 1 {
            t[1] += 1u32;
        }
        for i in 0..order {
            t[i + 1] += &r[i];
        }
        for i in 0..order {
            next[i + 1] += &r[i];
        }
        for (i, a) in t.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in r.iter().enumerate().take(order + 1 - i) {
                next[i + j] += a * b;
            }
        }
        if next == r {
            break;
        }
        r = next;
    }
    r
}

/// `x R^2 + (2x - 1) R + x` for a truncated series; vanishes through `x^order`.
pub fn catalan_residual(r: &[BigUint]) -> Poly {
    let order = r.len() - 1;
    let r: Vec<BigInt> = r.iter().map(|c| BigInt::from(c.clone())).collect();
    let mut out = vec![BigInt::zero(); order + 1];
    for i in 0..=order {
        for j in 0..=order - i {
            if i + j < order {
                out[i + j + 1] += &r[i] * &r[j];
            }
        }
        if i < order {
            out[i + 1] += BigInt::from(2) * &r[i];
        }
        out[i] -= &r[i];
    }
    if order >= 1 {
        out[1] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Poly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn q_matches_chebyshev_form() {
        for m in 0..=12 {
            assert_eq!(q_poly(m), chebyshev_form(m), "m={m}");
        }
        assert_eq!(q_poly(4), ints(&[1, -3, 1]));
    }

    #[test]
    fn printed_denominators() {
        assert_eq!(q_poly(2), ints(&[1, -1]));
        assert_eq!(q_poly(3), ints(&[1, -2]));
        assert_eq!(q_poly(5), ints(&[1, -4, 3]));
        assert_eq!(q_poly(6), ints(&[1, -5, 6, -1]));
        assert_eq!(q_poly(7), ints(&[1, -6, 10, -4]));
    }

    #[test]
    fn g3_is_a_fibonacci_bisection() {
        let g = gk_series(3, 7).unwrap();
        assert_eq!(&g[3..], &ints(&[1, 3, 8, 21, 55])[..]);
    }

    #[test]
    fn growth_rates() {
        for k in 1..=8 {
            assert!((growth_rate(k) - expected_growth_rate(k)).abs() < 1e-9, "k={k}");
        }
    }

    #[test]
    fn catalan_numbers() {
        let r = catalan_series(30);
        for (n, c) in r.iter().enumerate().skip(1) {
            assert_eq!(*c, catalan(n));
        }
        assert!(catalan_residual(&r).iter().all(Zero::is_zero));
        assert_eq!(catalan(10), BigUint::from(16796u32));
    }
}
