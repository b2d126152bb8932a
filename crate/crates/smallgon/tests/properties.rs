//! Cross-module invariants checked over the whole constructed corpus.

use smallgon::bounds;
use smallgon::families;
use smallgon::geometry::{self, Point, Polygon};
use smallgon::solvers::{self, Variant};

fn corpus() -> Vec<Polygon> {
    let mut ps = Vec::new();
    for n in 3..=16 {
        ps.push(families::regular(n).unwrap());
    }
    for (m, n) in [(3, 3), (3, 6), (5, 5), (3, 12), (5, 10), (7, 14)] {
        ps.push(families::reuleaux_regular(m, n).unwrap());
    }
    ps.push(families::f8().0);
    for n in [16, 32, 64, 128, 256] {
        ps.push(families::f_family(n).unwrap().0);
        ps.push(families::g_family(n).unwrap().0);
    }
    ps
}

#[test]
fn mirror_leaves_metrics_unchanged() {
    for p in corpus() {
        let mirrored = Polygon::new(
            p.name.clone(),
            p.vertices.iter().map(|v| Point::new(-v.x, v.y)).collect::<Vec<_>>(),
        )
        .unwrap();
        let m = geometry::canonicalize(&mirrored).unwrap();
        let (da, _) = geometry::diameter(&p);
        let (db, _) = geometry::diameter(&m);
        assert!((da - db).abs() < 1e-12, "{}", p.name);
        assert!((geometry::perimeter(&p) - geometry::perimeter(&m)).abs() < 1e-12);
        let wa = geometry::width(&p).unwrap();
        let wb = geometry::width(&m).unwrap();
        assert!((wa - wb).abs() < 1e-12, "{}: {wa} vs {wb}", p.name);
    }
}

#[test]
fn perimeter_route_dominates_width() {
    for p in corpus() {
        let w = geometry::width(&p).unwrap();
        let cap = bounds::perimeter_width_bound(geometry::perimeter(&p), p.n());
        assert!(cap >= w - 1e-12, "{}: bound {cap} under width {w}", p.name);
    }
}

#[test]
fn series_remainder_decays_by_twenty_five_six() {
    let mut prev: Option<f64> = None;
    for n in [16, 32, 64, 128, 256] {
        let (_, params) = families::g_family(n).unwrap();
        let series = solvers::asymptotic_g(n).unwrap();
        let diff = (params.alpha - series.alpha_series).abs();
        if let Some(d) = prev {
            assert!(diff <= (d / 256.0).max(5e-15), "n={n}: {diff} after {d}");
        }
        prev = Some(diff);
    }
}

#[test]
fn bracketed_root_is_stable_under_bracket_jitter() {
    let f = |t: f64| t.powi(5) - 6.0 * t.powi(3) + 3.0 * t * t + 10.0 * t - 7.0;
    let tol = 1e-12;
    let base = solvers::solve_bracketed(f, 0.0, 1.0, tol).unwrap().root;
    for (lo, hi) in [(1e-13, 1.0), (0.0, 1.0 - 1e-13), (5e-14, 1.0 - 5e-14)] {
        let r = solvers::solve_bracketed(f, lo, hi, tol).unwrap().root;
        assert!((r - base).abs() < tol, "{r} vs {base}");
    }
}

#[test]
fn table_columns_are_strictly_ordered() {
    for n in [16, 32, 64, 128, 256] {
        let w_r = geometry::width(&families::regular(n).unwrap()).unwrap();
        let w_f = geometry::width(&families::f_family(n).unwrap().0).unwrap();
        let w_g = geometry::width(&families::g_family(n).unwrap().0).unwrap();
        let ub = bounds::upper_bound_w(n);
        assert!(w_r < w_f && w_f < w_g && w_g < ub, "n={n}: {w_r} {w_f} {w_g} {ub}");
    }
}

#[test]
fn closed_form_lower_bound_sits_between_g_and_cap() {
    for n in [16, 32, 64, 128, 256] {
        let lb = bounds::closed_form_lower_bound(n).unwrap();
        let ub = bounds::upper_bound_w(n);
        let w_g = geometry::width(&families::g_family(n).unwrap().0).unwrap();
        assert!(lb < ub && w_g < ub, "n={n}");
        if n >= 32 {
            assert!(lb > w_g, "n={n}: lb {lb} vs W(G) {w_g}");
        }
    }
}

#[test]
fn gap_series_tracks_exact_gaps() {
    let exact = |n: usize, v: Variant| {
        let p = match v {
            Variant::F => families::f_family(n).unwrap().0,
            Variant::G => families::g_family(n).unwrap().0,
        };
        bounds::upper_bound_w(n) - geometry::width(&p).unwrap()
    };

    let g = solvers::gap_series(256, Variant::G).unwrap();
    let eg = exact(256, Variant::G);
    assert!((eg - g.ub_gap).abs() <= 1e-3 * g.ub_gap, "{eg} vs {}", g.ub_gap);
    let f = solvers::gap_series(256, Variant::F).unwrap();
    let ef = exact(256, Variant::F);
    assert!((ef - f.ub_gap).abs() <= 1e-3 * f.ub_gap, "{ef} vs {}", f.ub_gap);

    let f16 = solvers::gap_series(16, Variant::F).unwrap();
    let ef16 = exact(16, Variant::F);
    assert!((ef16 - f16.ub_gap).abs() <= 0.03 * ef16, "{ef16} vs {}", f16.ub_gap);

    let g16 = solvers::gap_series(16, Variant::G).unwrap();
    let reg = g16.reg_gap.unwrap();
    let w_g = geometry::width(&families::g_family(16).unwrap().0).unwrap();
    let w_r = geometry::width(&families::regular(16).unwrap()).unwrap();
    assert!((w_g - w_r - reg).abs() <= 0.05 * (w_g - w_r), "{} vs {reg}", w_g - w_r);
}

#[test]
fn construction_params_satisfy_their_residuals() {
    for n in [16, 32, 64, 128, 256] {
        for (p, params) in [families::f_family(n).unwrap(), families::g_family(n).unwrap()] {
            for r in params.residuals {
                assert!(r.abs() < 1e-9, "{}: residual {r}", p.name);
            }
            assert!(params.alpha > 0.0 && params.beta > 0.0 && params.d > 0.0 && params.d < 1.0);
        }
    }
}
