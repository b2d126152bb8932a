//! Scalar root finding and large-n series for the polygon families.

use thiserror::Error;

/// Which equilateral family a quantity refers to.
///
/// `F` polygons have one long diagonal pinned vertically; `G` polygons keep a
/// horizontal chord between two opposite height feet. Both exist for vertex
/// counts that are powers of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    F,
    G,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("tolerance must be positive, got {0:.3e}")]
    BadTolerance(f64),
    #[error("bracket [{lo}, {hi}] is empty or reversed")]
    BadBracket { lo: f64, hi: f64 },
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:.3e}, f(hi) = {f_hi:.3e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("n must be a power of two at least {min}, got {n}")]
    UnsupportedIndex { n: usize, min: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct RootResult {
    pub root: f64,
    pub residual: f64,
    pub iterations: usize,
    /// Final enclosing interval.
    pub bracket: (f64, f64),
}

/// Root of `f` inside `[lo, hi]`, which must show a sign change.
///
/// Secant steps accelerate convergence; every other step bisects, so the
/// bracket provably shrinks below `tol` (floored at 1e-14). The returned
/// root is the bracket endpoint with the smaller residual.
pub fn solve_bracketed<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult, SolveError>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(SolveError::BadTolerance(tol));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(SolveError::BadBracket { lo, hi });
    }
    let tol = tol.max(1e-14);
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    for (end, fe) in [(a, fa), (b, fb)] {
        if fe == 0.0 {
            return Ok(RootResult { root: end, residual: 0.0, iterations: 0, bracket: (end, end) });
        }
    }
    if fa.signum() == fb.signum() {
        return Err(SolveError::NoSignChange { lo, hi, f_lo: fa, f_hi: fb });
    }
    let mut iterations = 0;
    while b - a > tol && iterations < 200 {
        iterations += 1;
        let mut m = if iterations % 2 == 0 {
            0.5 * (a + b)
        } else {
            (a * fb - b * fa) / (fb - fa)
        };
        if !m.is_finite() || m <= a || m >= b {
            m = 0.5 * (a + b);
        }
        if m <= a || m >= b {
            break; // interval exhausted at f64 resolution
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(RootResult { root: m, residual: 0.0, iterations, bracket: (m, m) });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    let (root, residual) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
    Ok(RootResult { root, residual, iterations, bracket: (a, b) })
}

/// Unique positive root of `t^5 - 6t^3 + 3t^2 + 10t - 7`.
///
/// A sign scan over `[0, 3]` certifies there is exactly one crossing; past
/// `t = 3` the quintic term dominates and the polynomial stays positive.
pub fn quintic_root() -> RootResult {
    let f = |t: f64| t.powi(5) - 6.0 * t.powi(3) + 3.0 * t * t + 10.0 * t - 7.0;
    let steps = 3000;
    let mut crossings = Vec::new();
    let mut prev = f(0.0);
    for k in 1..=steps {
        let t = 3.0 * k as f64 / steps as f64;
        let cur = f(t);
        if prev.signum() != cur.signum() {
            crossings.push((3.0 * (k - 1) as f64 / steps as f64, t));
        }
        prev = cur;
    }
    assert_eq!(crossings.len(), 1, "quintic must cross zero exactly once on [0, 3]");
    let (lo, hi) = crossings[0];
    solve_bracketed(f, lo, hi, 1e-15).expect("scan produced a sign-changing bracket")
}

/// Truncated large-n expansions of the `G` family parameters and width.
#[derive(Clone, Copy, Debug)]
pub struct SeriesEval {
    pub n: usize,
    pub alpha_series: f64,
    pub beta_series: f64,
    pub d_series: f64,
    pub width_series: f64,
    /// Highest power of `1/n` kept in the width expansion.
    pub order: usize,
}

fn require_pow2(n: usize, min: usize) -> Result<(), SolveError> {
    if n >= min && n.is_power_of_two() {
        Ok(())
    } else {
        Err(SolveError::UnsupportedIndex { n, min })
    }
}

/// Series values for `G_n`, `n` a power of two at least 16.
pub fn asymptotic_g(n: usize) -> Result<SeriesEval, SolveError> {
    require_pow2(n, 16)?;
    use std::f64::consts::PI;
    let x = PI / n as f64;
    let x2 = x * x;
    let x4 = x2 * x2;
    let x5 = x4 * x;
    let x6 = x4 * x2;
    let x7 = x6 * x;
    Ok(SeriesEval {
        n,
        alpha_series: x + x5 / 6.0 + x7 / 12.0,
        beta_series: x - x5 / 2.0 - x7 / 4.0,
        d_series: 1.0 - 4.0 * x4 / 3.0 - 7.0 * x6 / 3.0,
        width_series: 1.0 - x2 / 8.0 - 85.0 * x4 / 128.0 - 92801.0 * x6 / 46080.0,
        order: 6,
    })
}

/// Leading-order gaps between a family's width and its ceilings.
#[derive(Clone, Copy, Debug)]
pub struct GapSeries {
    /// Series for `cos(pi/2n) - W`, the shortfall from the best possible width.
    pub ub_gap: f64,
    /// Series for `W - W(R_n)`, the gain over the regular polygon.
    /// Not available for the `F` family.
    pub reg_gap: Option<f64>,
}

/// Gap expansions for family `variant` at vertex count `n`.
pub fn gap_series(n: usize, variant: Variant) -> Result<GapSeries, SolveError> {
    use std::f64::consts::PI;
    let min = match variant {
        Variant::F => 8,
        Variant::G => 16,
    };
    require_pow2(n, min)?;
    let x = PI / n as f64;
    let x2 = x * x;
    let x3 = x2 * x;
    let x4 = x2 * x2;
    let x5 = x4 * x;
    let x6 = x4 * x2;
    Ok(match variant {
        Variant::G => GapSeries {
            ub_gap: 2.0 * x4 / 3.0 + 145.0 * x6 / 72.0,
            reg_gap: Some(3.0 * x2 / 8.0 - 271.0 * x4 / 384.0),
        },
        Variant::F => GapSeries { ub_gap: x3 / 2.0 - 5.0 * x5 / 8.0, reg_gap: None },
    })
}
