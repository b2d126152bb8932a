//! Constructors for the polygon families: regular n-gons, Reuleaux
//! subdivisions, the exact equilateral octagon, and the solved F/G families
//! on power-of-two vertex counts.

mod fixtures;

pub use fixtures::{fixture, fixture_info, FixtureInfo, FixtureName};

use crate::geometry::{Point, Polygon};
use crate::solvers::{self, SolveError, Variant};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("regular polygons need n >= 3, got {0}")]
    TooFewVertices(usize),
    #[error("Reuleaux subdivision needs odd m >= 3 dividing n, got m = {m}, n = {n}")]
    BadReuleauxPair { m: usize, n: usize },
    #[error("family defined for n a power of two at least {min}, got {n}")]
    UnsupportedIndex { n: usize, min: usize },
    #[error("parameter solve failed: {0}")]
    Solve(#[from] SolveError),
    #[error("unknown fixture name {0:?}")]
    UnknownFixture(String),
}

/// Solved shape parameters of an F or G polygon.
///
/// `alpha` and `beta` are the two apex half-angles of the isoceles triangles
/// hanging off the diagonal cycle, `d` the length of the short diagonals.
/// `residuals` holds the three defining relations (diagonal length, angle
/// sum, closure) evaluated at the solution; each stays below 1e-12.
#[derive(Clone, Copy, Debug)]
pub struct ConstructionParams {
    pub alpha: f64,
    pub beta: f64,
    pub d: f64,
    pub n: usize,
    pub variant: Variant,
    pub residuals: [f64; 3],
}

/// Identifier for any polygon this crate can build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyId {
    Regular(usize),
    ReuleauxRegular(usize, usize),
    F8,
    Fn(usize),
    Gn(usize),
    Fixture(FixtureName),
}

/// Builds the polygon named by `id`.
pub fn construct(id: &FamilyId) -> Result<Polygon, FamilyError> {
    match *id {
        FamilyId::Regular(n) => regular(n),
        FamilyId::ReuleauxRegular(m, n) => reuleaux_regular(m, n),
        FamilyId::F8 => Ok(f8().0),
        FamilyId::Fn(n) => Ok(f_family(n)?.0),
        FamilyId::Gn(n) => Ok(g_family(n)?.0),
        FamilyId::Fixture(name) => Ok(fixture(name)),
    }
}

/// Regular small n-gon: circumradius 1/2 for even n, `1/(2 cos(pi/2n))` for
/// odd n, first vertex at the origin.
pub fn regular(n: usize) -> Result<Polygon, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewVertices(n));
    }
    let r = if n % 2 == 0 { 0.5 } else { 1.0 / (2.0 * (PI / (2.0 * n as f64)).cos()) };
    let vertices = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            Point::new(r * t.sin(), r - r * t.cos())
        })
        .collect();
    Ok(Polygon::new(format!("R_{n}"), vertices).expect("n >= 3"))
}

/// Subdivided Reuleaux polygon: each side of the regular small m-gon is
/// replaced by `n/m` chords of the unit arc centered at the opposite vertex.
/// Requires odd `m >= 3` and `m | n`; the result has width `cos(pi/2n)`.
pub fn reuleaux_regular(m: usize, n: usize) -> Result<Polygon, FamilyError> {
    if m < 3 || m % 2 == 0 || n % m != 0 {
        return Err(FamilyError::BadReuleauxPair { m, n });
    }
    let base = regular(m)?.vertices;
    let per = n / m - 1;
    let mut out = Vec::with_capacity(n);
    for j in 0..m {
        let a = base[j];
        let b = base[(j + 1) % m];
        let c = base[(j + (m + 1) / 2) % m];
        out.push(a);
        let t1 = (a.y - c.y).atan2(a.x - c.x);
        let mut t2 = (b.y - c.y).atan2(b.x - c.x);
        while t2 < t1 {
            t2 += 2.0 * PI;
        }
        for q in 1..=per {
            let t = t1 + (t2 - t1) * q as f64 / (per + 1) as f64;
            out.push(Point::new(c.x + t.cos(), c.y + t.sin()));
        }
    }
    Ok(Polygon::new(format!("R_{m},{n}"), out).expect("m >= 3 vertices"))
}

/// The exact equilateral small octagon of maximal width.
///
/// With `beta = pi/2 - 3 alpha` and `d = (2 sin alpha + 1)/(2 sin(2 alpha +
/// beta))`, the remaining relation `1 + d^2 - 2 d cos alpha = 2 - 2 cos beta`
/// has a single root in `(0, pi/6)`; the vertex chain follows from the
/// solved angles.
pub fn f8() -> (Polygon, ConstructionParams) {
    let beta_of = |a: f64| PI / 2.0 - 3.0 * a;
    let d_of = |a: f64, b: f64| (2.0 * a.sin() + 1.0) / (2.0 * (2.0 * a + b).sin());
    let resid = |a: f64| {
        let b = beta_of(a);
        let d = d_of(a, b);
        (1.0 + d * d - 2.0 * d * a.cos()) - (2.0 - 2.0 * b.cos())
    };
    let r = solvers::solve_bracketed(resid, 1e-9, PI / 6.0 - 1e-9, 1e-15)
        .expect("residual changes sign on (0, pi/6)");
    let alpha = r.root;
    let beta = beta_of(alpha);
    let d = d_of(alpha, beta);
    let params = ConstructionParams {
        alpha,
        beta,
        d,
        n: 8,
        variant: Variant::F,
        residuals: [resid(alpha), 3.0 * alpha + beta - PI / 2.0, d - d_of(alpha, beta)],
    };
    let polygon = build_walk(8, Variant::F, alpha, beta, d, "F_8".into());
    (polygon, params)
}

/// `G` polygon on `n = 2^s >= 16` vertices.
pub fn g_family(n: usize) -> Result<(Polygon, ConstructionParams), FamilyError> {
    solve_variant(n, Variant::G)
}

/// `F` polygon on `n = 2^s >= 8` vertices; `f_family(8)` reproduces [`f8`]
/// through the generic closure route.
pub fn f_family(n: usize) -> Result<(Polygon, ConstructionParams), FamilyError> {
    solve_variant(n, Variant::F)
}

fn require_pow2(n: usize, min: usize) -> Result<(), FamilyError> {
    if n >= min && n.is_power_of_two() {
        Ok(())
    } else {
        Err(FamilyError::UnsupportedIndex { n, min })
    }
}

fn beta_of(n: usize, variant: Variant, alpha: f64) -> f64 {
    let nf = n as f64;
    match variant {
        Variant::G => 4.0 * PI / nf - 3.0 * alpha,
        // Turning angles around the diagonal cycle must close up.
        Variant::F => (PI - (nf / 2.0 + 2.0) * alpha) / (nf / 2.0 - 2.0),
    }
}

fn d_of(variant: Variant, alpha: f64, beta: f64) -> f64 {
    match variant {
        Variant::G => {
            (2.0 * (2.0 * alpha + beta).cos() + 1.0)
                / (2.0 * alpha.cos() + (3.0 * alpha + beta).cos())
        }
        Variant::F => {
            let disc = alpha.cos().powi(2) + 1.0 - 2.0 * beta.cos();
            alpha.cos() + disc.sqrt()
        }
    }
}

fn closure_residual(n: usize, variant: Variant, alpha: f64) -> f64 {
    let beta = beta_of(n, variant, alpha);
    match variant {
        Variant::G => {
            let d = d_of(Variant::G, alpha, beta);
            (1.0 + d * d - 2.0 * d * alpha.cos()) - (2.0 - 2.0 * beta.cos())
        }
        Variant::F => {
            let disc = alpha.cos().powi(2) + 1.0 - 2.0 * beta.cos();
            if disc < 0.0 {
                return f64::NAN;
            }
            let d = d_of(Variant::F, alpha, beta);
            let pts = walk_points(n, Variant::F, alpha, beta, d);
            // Opposite chord endpoint must land at x = -1/2.
            pts[3 * n / 4].expect("walk fills the chord endpoint").x + 0.5
        }
    }
}

fn solve_variant(n: usize, variant: Variant) -> Result<(Polygon, ConstructionParams), FamilyError> {
    let min = match variant {
        Variant::F => 8,
        Variant::G => 16,
    };
    require_pow2(n, min)?;
    let lo = PI / (2.0 * n as f64);
    let mut hi = 2.0 * PI / n as f64;
    if variant == Variant::F {
        // Keep the bracket inside the domain where the short diagonal exists.
        let disc = |a: f64| {
            let b = beta_of(n, Variant::F, a);
            a.cos().powi(2) + 1.0 - 2.0 * b.cos()
        };
        if disc(hi) < 0.0 {
            let boundary = solvers::solve_bracketed(disc, lo, hi, 1e-13)?;
            hi = boundary.bracket.0 - 1e-13;
        }
    }
    let steps = 2000;
    let grid: Vec<f64> = (0..=steps)
        .map(|k| lo + (hi - lo) * k as f64 / steps as f64)
        .collect();
    let vals: Vec<f64> = grid.iter().map(|&a| closure_residual(n, variant, a)).collect();
    let mut bracket = None;
    for k in 0..steps {
        let (fa, fb) = (vals[k], vals[k + 1]);
        if fa.is_nan() || fb.is_nan() {
            continue;
        }
        if fa == 0.0 || fa.signum() != fb.signum() {
            bracket = Some((grid[k], grid[k + 1]));
            break;
        }
    }
    let (blo, bhi) = bracket.ok_or(SolveError::NoSignChange {
        lo,
        hi,
        f_lo: vals[0],
        f_hi: vals[steps],
    })?;
    let root = solvers::solve_bracketed(|a| closure_residual(n, variant, a), blo, bhi, 1e-15)?;
    let alpha = root.root;
    let beta = beta_of(n, variant, alpha);
    let d = d_of(variant, alpha, beta);
    let angle_residual = match variant {
        Variant::G => (n as f64 / 8.0) * (3.0 * alpha + beta) - PI / 2.0,
        Variant::F => (n as f64 / 2.0 + 2.0) * alpha + (n as f64 / 2.0 - 2.0) * beta - PI,
    };
    let diagonal_residual = (1.0 + d * d - 2.0 * d * alpha.cos()) - (2.0 - 2.0 * beta.cos());
    let params = ConstructionParams {
        alpha,
        beta,
        d,
        n,
        variant,
        residuals: [diagonal_residual, angle_residual, closure_residual(n, variant, alpha)],
    };
    let tag = match variant {
        Variant::F => format!("F_{n}"),
        Variant::G => format!("G_{n}"),
    };
    Ok((build_walk(n, variant, alpha, beta, d, tag), params))
}

/// Places the right half of the polygon by walking the diagonal cycle from
/// `v0`, dropping a pendant vertex across each visited cycle vertex that
/// carries one, then mirrors through the y-axis.
fn walk_points(n: usize, variant: Variant, alpha: f64, beta: f64, d: f64) -> Vec<Option<Point>> {
    let half = n / 2;
    let (m, quarter) = match variant {
        Variant::G => (3 * n / 4 - 1, 0),
        Variant::F => (half + 1, n / 4),
    };
    let step = |j: usize| -> usize {
        match variant {
            Variant::G => {
                if j % 3 == 2 {
                    half
                } else {
                    half - 1
                }
            }
            Variant::F => half - 1,
        }
    };
    let has_pendant = |p: usize| -> bool {
        match variant {
            Variant::G => p % 3 == 1,
            Variant::F => p != 0 && p != quarter && p != quarter + 1,
        }
    };
    let interior = |p: usize| -> f64 {
        match variant {
            Variant::G => {
                if p % 3 == 1 {
                    alpha + beta
                } else {
                    alpha
                }
            }
            Variant::F => alpha + beta,
        }
    };
    let p_half = (m - 1) / 2;
    let mut placed: Vec<(usize, Point)> = vec![(0, Point::new(0.0, 0.0)), (half, Point::new(0.0, d))];
    let mut ci = 0usize;
    let (mut x, mut y) = (0.0f64, 0.0f64);
    let mut dir = PI / 2.0 - alpha;
    for j in 0..p_half {
        let len = if j % 2 == 0 { 1.0 } else { d };
        x += len * dir.cos();
        y += len * dir.sin();
        let p = j + 1;
        ci = (ci + step(j)) % n;
        placed.push((ci, Point::new(x, y)));
        if has_pendant(p) {
            let off = if j % 2 == 0 { beta } else { alpha };
            let pd = dir + PI - off;
            let leaf = (ci + half) % n;
            placed.push((leaf, Point::new(x + pd.cos(), y + pd.sin())));
        }
        if p < p_half {
            dir += PI - interior(p);
        }
    }
    let mut full: Vec<Option<Point>> = vec![None; n];
    for &(idx, pt) in &placed {
        full[idx] = Some(pt);
    }
    for &(idx, pt) in &placed {
        let mi = (n - idx) % n;
        if full[mi].is_none() {
            full[mi] = Some(Point::new(-pt.x, pt.y));
        }
    }
    full
}

fn build_walk(n: usize, variant: Variant, alpha: f64, beta: f64, d: f64, name: String) -> Polygon {
    let full = walk_points(n, variant, alpha, beta, d);
    let vertices: Vec<Point> = full
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.unwrap_or_else(|| panic!("walk left vertex {i} unplaced")))
        .collect();
    Polygon::new(name, vertices).expect("n >= 8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry;

    fn side_spread(p: &Polygon) -> f64 {
        let lengths: Vec<f64> = (1..=p.n()).map(|i| p.side_length(i)).collect();
        let min = lengths.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = lengths.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        max - min
    }

    #[test]
    fn regular_widths_match_closed_form() {
        for n in [3usize, 4, 5, 6, 8, 11, 12] {
            let p = regular(n).unwrap();
            let w = geometry::width(&p).unwrap();
            let target = if n % 2 == 0 {
                (PI / n as f64).cos()
            } else {
                (PI / (2.0 * n as f64)).cos()
            };
            assert!((w - target).abs() < 1e-12, "n = {n}");
            assert!((geometry::diameter(&p).0 - 1.0).abs() < 1e-12);
            assert!(side_spread(&p) < 1e-12);
        }
    }

    #[test]
    fn regular_rejects_degenerate_counts() {
        assert!(matches!(regular(2), Err(FamilyError::TooFewVertices(2))));
    }

    #[test]
    fn reuleaux_matches_upper_bound_width() {
        for (m, n) in [(3usize, 3usize), (3, 6), (5, 5), (3, 12), (5, 10), (7, 14)] {
            let p = reuleaux_regular(m, n).unwrap();
            let w = geometry::width(&p).unwrap();
            assert!((w - (PI / (2.0 * n as f64)).cos()).abs() < 1e-12, "({m},{n})");
            assert!((geometry::diameter(&p).0 - 1.0).abs() < 1e-12);
            assert!(p.vertices.iter().all(|v| v.y >= -1e-12));
        }
    }

    #[test]
    fn reuleaux_rejects_bad_pairs() {
        assert!(reuleaux_regular(4, 8).is_err());
        assert!(reuleaux_regular(3, 8).is_err());
        assert!(reuleaux_regular(1, 4).is_err());
    }

    #[test]
    fn f8_solved_parameters() {
        let (p, params) = f8();
        assert!((params.alpha - 0.3942432313663512).abs() < 1e-12);
        assert!((params.beta - 0.3880666326958431).abs() < 1e-12);
        assert!((params.d - 0.9575669263276784).abs() < 1e-12);
        assert!(params.residuals.iter().all(|r| r.abs() < 1e-12));
        let w = geometry::width(&p).unwrap();
        assert!((w - 0.9537763006322466).abs() < 1e-12);
        assert!(side_spread(&p) < 1e-10);
    }

    #[test]
    fn f8_vertex_coordinates() {
        let (p, _) = f8();
        let expect = [
            (0.0, 0.0),
            (0.3208100714, 0.2140003477),
            (0.5, 0.5554768772),
            (0.3841095838, 0.9232875108),
            (0.0, 0.9575669263),
        ];
        for (k, &(x, y)) in expect.iter().enumerate() {
            assert!((p.vertices[k].x - x).abs() < 1e-9, "x_{k}");
            assert!((p.vertices[k].y - y).abs() < 1e-9, "y_{k}");
        }
    }

    #[test]
    fn f_family_collapses_to_f8() {
        let (p8, q8) = f8();
        let (pg, qg) = f_family(8).unwrap();
        assert!((q8.alpha - qg.alpha).abs() < 1e-12);
        assert!((q8.beta - qg.beta).abs() < 1e-12);
        assert!((q8.d - qg.d).abs() < 1e-12);
        for (a, b) in p8.vertices.iter().zip(&pg.vertices) {
            assert!((a.x - b.x).abs() < 1e-12 && (a.y - b.y).abs() < 1e-12);
        }
    }

    #[test]
    fn f16_solved_parameters() {
        let (p, params) = f_family(16).unwrap();
        assert!((params.alpha - 0.1965442399158731).abs() < 1e-11);
        assert!((params.beta - 0.1960250424051770).abs() < 1e-11);
        assert!((params.d - 0.9937146441836380).abs() < 1e-11);
        assert!(params.residuals.iter().all(|r| r.abs() < 1e-12));
        let w = geometry::width(&p).unwrap();
        assert!((w - 0.9915310059380604).abs() < 1e-11);
        assert!((p.vertices[4].x - 0.5).abs() < 1e-9);
        assert!((p.vertices[4].y - 0.5161099094).abs() < 1e-9);
        assert!((p.vertices[8].y - params.d).abs() < 1e-15);
        assert!(side_spread(&p) < 1e-10);
    }

    #[test]
    fn g16_solved_parameters() {
        let (p, params) = g_family(16).unwrap();
        assert!((params.alpha - 0.1963989524582237).abs() < 1e-11);
        assert!((params.beta - 0.1962013060227772).abs() < 1e-11);
        assert!((params.d - 0.9978776095684515).abs() < 1e-11);
        assert!(params.residuals.iter().all(|r| r.abs() < 1e-12));
        let w = geometry::width(&p).unwrap();
        assert!((w - 0.9940673079581938).abs() < 1e-11);
        assert!((p.vertices[4].x - 0.4989388048).abs() < 1e-9);
        assert!((p.vertices[4].y - 0.4989388048).abs() < 1e-9);
        assert!(side_spread(&p) < 1e-10);
    }

    #[test]
    fn families_reject_bad_counts() {
        assert!(g_family(8).is_err());
        assert!(g_family(24).is_err());
        assert!(f_family(12).is_err());
        assert!(f_family(4).is_err());
    }

    #[test]
    fn solved_families_stay_equilateral_and_small() {
        for n in [16usize, 32, 64, 128, 256] {
            for (tag, built) in [("F", f_family(n).unwrap()), ("G", g_family(n).unwrap())] {
                let (p, _) = built;
                assert!(side_spread(&p) < 1e-10, "{tag}_{n} spread");
                let (diam, _) = geometry::diameter(&p);
                assert!((diam - 1.0).abs() < 1e-10, "{tag}_{n} diameter");
                assert!(geometry::is_convex_ccw(&p), "{tag}_{n} convex");
            }
        }
    }

    #[test]
    fn figure_fixtures_match_solved_families() {
        let checks = [
            (f_family(16).unwrap().0, fixture(FixtureName::F16Ref)),
            (f_family(32).unwrap().0, fixture(FixtureName::F32Ref)),
            (g_family(16).unwrap().0, fixture(FixtureName::G16Ref)),
            (g_family(32).unwrap().0, fixture(FixtureName::G32Ref)),
        ];
        for (solved, fig) in checks {
            assert_eq!(solved.n(), fig.n());
            for (a, b) in solved.vertices.iter().zip(&fig.vertices) {
                assert!((a.x - b.x).abs() < 5e-4, "{}", solved.name);
                assert!((a.y - b.y).abs() < 5e-4, "{}", solved.name);
            }
        }
    }

    #[test]
    fn construct_dispatch_covers_every_id() {
        let ids = [
            FamilyId::Regular(7),
            FamilyId::ReuleauxRegular(3, 9),
            FamilyId::F8,
            FamilyId::Fn(16),
            FamilyId::Gn(32),
            FamilyId::Fixture(FixtureName::H8),
        ];
        for id in &ids {
            let p = construct(id).unwrap();
            assert!(p.n() >= 3);
        }
        assert!(construct(&FamilyId::Gn(9)).is_err());
    }
}
