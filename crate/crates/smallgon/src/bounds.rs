//! Closed-form width and side-length bounds for small polygons, with the
//! tightened octagon constants derived from the best known width and
//! perimeter values.

use crate::families::{self, FixtureName};
use crate::geometry;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("bound defined for n a power of two at least {min}, got {n}")]
    UnsupportedIndex { n: usize, min: usize },
}

/// Bound chain for the equilateral small octagon. All entries are widths or
/// side lengths; `w_lower` is the exact constructed width, the rest are
/// closed forms evaluated at full precision.
#[derive(Clone, Copy, Debug)]
pub struct OctagonBoundSet {
    pub w_lower: f64,
    pub w_upper_global: f64,
    pub w_upper_tight: f64,
    pub c_lower: f64,
    pub c_lower_tight: f64,
    pub c_upper: f64,
    pub diag_upper: f64,
}

/// `cos(pi/2n)`, the width ceiling for any small n-gon.
pub fn upper_bound_w(n: usize) -> f64 {
    assert!(n >= 3, "width bound needs n >= 3, got {n}");
    (PI / (2.0 * n as f64)).cos()
}

/// Width ceiling `L cot(pi/2n) / (2n)` for a convex n-gon of perimeter `L`.
pub fn perimeter_width_bound(perimeter: f64, n: usize) -> f64 {
    assert!(n >= 3, "perimeter bound needs n >= 3, got {n}");
    assert!(perimeter > 0.0, "perimeter must be positive, got {perimeter}");
    perimeter / (2.0 * n as f64 * (PI / (2.0 * n as f64)).tan())
}

fn best_octagon_width() -> f64 {
    let (p, _) = families::f8();
    geometry::width(&p).expect("constructed octagon is convex")
}

pub fn octagon_perimeter_cap() -> f64 {
    families::fixture_info(FixtureName::H8)
        .reported_perimeter
        .expect("perimeter-optimal octagon stores its perimeter")
}

/// Side-length window `(2 W(F_8) tan(pi/16), L(H_8)/8)` that any equilateral
/// small octagon of maximal width must fall in.
pub fn octagon_side_bounds() -> (f64, f64) {
    let lo = 2.0 * best_octagon_width() * (PI / 16.0).tan();
    let hi = octagon_perimeter_cap() / 8.0;
    assert!(lo > 0.3794 && hi < 0.3870);
    (lo, hi)
}

/// Full bound chain for the octagon: the side window above, the tightened
/// side floor `1/(2 + 2 sqrt(1 - w^2))`, the width caps from the perimeter
/// route and from the side ceiling, and the cap on the skew diagonals.
pub fn tightened_bounds() -> OctagonBoundSet {
    let w_lower = best_octagon_width();
    let c_upper = octagon_perimeter_cap() / 8.0;
    let (c_lower, _) = octagon_side_bounds();
    let slack = (1.0 - w_lower * w_lower).sqrt();
    let c_lower_tight = 1.0 / (2.0 + 2.0 * slack);
    let w_upper_tight = (4.0 * c_upper - 1.0).sqrt() / (2.0 * c_upper);
    let w_upper_global = perimeter_width_bound(octagon_perimeter_cap(), 8);
    let diag_upper =
        (c_upper * c_upper + 2.0 * c_upper) / (1.0 + c_upper * c_upper - 2.0 * c_upper * slack).sqrt();
    OctagonBoundSet {
        w_lower,
        w_upper_global,
        w_upper_tight,
        c_lower,
        c_lower_tight,
        c_upper,
        diag_upper,
    }
}

/// Analytic width lower bound for optimal small n-gons, `n = 2^s`, `s >= 4`.
pub fn closed_form_lower_bound(n: usize) -> Result<f64, BoundsError> {
    if n < 16 || !n.is_power_of_two() {
        return Err(BoundsError::UnsupportedIndex { n, min: 16 });
    }
    let nf = n as f64;
    let s1 = (PI / nf).sin();
    let s2 = (2.0 * PI / nf).sin();
    let t1 = (PI / nf).tan();
    let t2 = (2.0 * PI / nf).tan();
    let inner = s2 * s1 / (4.0 * s1 * s1 + (4.0 * PI / nf).cos()).sqrt();
    Ok((PI / (2.0 * nf) + 0.5 * (t2 * t1).atan() - 0.5 * inner.asin()).cos())
}
