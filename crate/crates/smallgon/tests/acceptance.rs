//! Acceptance gate: one test per release criterion, each printing a PASS line
//! with the measured values (visible under `--nocapture`).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallgon::bounds;
use smallgon::families::{self, FamilyId, FixtureName};
use smallgon::geometry::{self, Point, Polygon};
use smallgon::solvers;
use smallgon::verify;

const W_F8: f64 = 0.9537763006;

#[test]
fn criterion_01_octagon_exactness() {
    let t = Instant::now();
    let quintic = solvers::quintic_root();
    assert!((quintic.root - 0.7682191676).abs() < 1e-10, "t0 {}", quintic.root);

    let (p, params) = families::f8();
    let w = geometry::width(&p).unwrap();
    assert!((w - W_F8).abs() < 1e-9, "width {w}");

    let t0 = 2.0 * params.alpha.sin();
    assert!((t0 - quintic.root).abs() < 1e-10);
    let formula = (t0 * t0 + t0) / (2.0 * (t0.powi(3) + t0 * t0 - 2.0 * t0 + 1.0).sqrt());
    assert!((formula - w).abs() < 1e-12);

    let coords = [
        (p.vertices[1].x, 0.3208100713),
        (p.vertices[1].y, 0.2140003477),
        (p.vertices[3].x, 0.3841095838),
        (p.vertices[3].y, 0.9232875108),
        (p.vertices[4].y, 0.9575669263),
    ];
    for (got, want) in coords {
        assert!((got - want).abs() < 1e-9, "coordinate {got} vs {want}");
    }
    assert!(p.vertices[2].x == 0.5 || (p.vertices[2].x - 0.5).abs() < 1e-15);
    assert!(p.vertices[4].x.abs() < 1e-15);

    let dt = t.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "took {dt:?}");
    println!("criterion 01 PASS: t0 {:.10}, width {:.10}, coords within 1e-9, {dt:?}", quintic.root, w);
}

const TABLE: [(usize, f64, f64, f64, f64, f64); 5] = [
    (16, 0.9807852804, 0.9915310059, 0.9940673080, 0.9951847267, 0.9224),
    (32, 0.9951847267, 0.9983271244, 0.9987316811, 0.9987954562, 0.9823),
    (64, 0.9987954562, 0.9996398418, 0.9996949197, 0.9996988187, 0.9957),
    (128, 0.9996988187, 0.9999173147, 0.9999244595, 0.9999247018, 0.9989),
    (256, 0.9999247018, 0.9999802514, 0.9999811602, 0.9999811753, 0.9997),
];

#[test]
fn criterion_02_width_table_reproduction() {
    let t = Instant::now();
    let mut worst_w = 0.0f64;
    let mut worst_frac = 0.0f64;
    for (n, r, f, g, ub, frac) in TABLE {
        let w_r = geometry::width(&families::regular(n).unwrap()).unwrap();
        let w_f = geometry::width(&families::f_family(n).unwrap().0).unwrap();
        let w_g = geometry::width(&families::g_family(n).unwrap().0).unwrap();
        let w_ub = bounds::upper_bound_w(n);
        let w_frac = (w_g - w_r) / (w_ub - w_r);
        for (got, want) in [(w_r, r), (w_f, f), (w_g, g), (w_ub, ub)] {
            let err = (got - want).abs();
            worst_w = worst_w.max(err);
            assert!(err < 1e-9, "n={n}: {got} vs {want}");
        }
        let err = (w_frac - frac).abs();
        worst_frac = worst_frac.max(err);
        assert!(err < 5e-5, "n={n} fraction: {w_frac} vs {frac}");
    }
    let dt = t.elapsed();
    assert!(dt.as_secs_f64() < 5.0, "took {dt:?}");
    println!("criterion 02 PASS: 25 entries, width err ≤ {worst_w:.2e}, fraction err ≤ {worst_frac:.2e}, {dt:?}");
}

#[test]
fn criterion_03_reuleaux_widths() {
    for (m, n) in [(3, 3), (3, 6), (5, 5), (3, 12), (5, 10), (7, 14)] {
        let p = families::reuleaux_regular(m, n).unwrap();
        let w = geometry::width(&p).unwrap();
        let want = (std::f64::consts::PI / (2.0 * n as f64)).cos();
        assert!((w - want).abs() < 1e-12, "R_{m},{n}: {w} vs {want}");
    }
    println!("criterion 03 PASS: six R_m,n widths equal cos(pi/2n) within 1e-12");
}

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
fn criterion_04_universal_upper_bound() {
    let ps = corpus();
    let count = ps.len();
    for p in ps {
        let w = geometry::width(&p).unwrap();
        let cap = bounds::upper_bound_w(p.n());
        assert!(w <= cap + 1e-12, "{}: width {w} over cap {cap}", p.name);
    }
    println!("criterion 04 PASS: {count} constructed polygons under cos(pi/2n) + 1e-12");
}

#[test]
fn criterion_05_bound_chain() {
    let pw = bounds::perimeter_width_bound(bounds::octagon_perimeter_cap(), 8);
    assert!(pw > 0.9726 && pw < 0.9727, "perimeter route {pw}");

    let (c_lo, c_hi) = bounds::octagon_side_bounds();
    assert!(c_lo > 0.3794 && (c_lo - 0.3794).abs() < 5e-5, "c_lo {c_lo}");
    assert!(c_hi < 0.3870 && (c_hi - 0.3870).abs() < 5e-5, "c_hi {c_hi}");
    let side = families::f8().0.side_length(1);
    assert!(side > c_lo && side < c_hi);

    let b = bounds::tightened_bounds();
    assert!(b.c_lower_tight > 0.3844 && (b.c_lower_tight - 0.3844).abs() < 1e-4);
    assert!(b.w_upper_tight < 0.9564 && (b.w_upper_tight - 0.9564).abs() < 1e-4);
    assert!(b.diag_upper < 0.9645 && (b.diag_upper - 0.9644).abs() < 1e-4);
    assert!(b.c_lower < b.c_lower_tight && b.c_lower_tight < b.c_upper);
    assert!(b.w_lower < b.w_upper_tight && b.w_upper_tight < b.w_upper_global);
    assert!(b.w_upper_global < bounds::upper_bound_w(8));
    println!(
        "criterion 05 PASS: perimeter {pw:.10}, sides ({c_lo:.10}, {c_hi:.10}), tight ({:.10}, {:.10}, {:.10})",
        b.c_lower_tight, b.w_upper_tight, b.diag_upper
    );
}

#[test]
fn criterion_06_asymptotic_decay() {
    let n = 256usize;
    let nf = n as f64;
    let ub = bounds::upper_bound_w(n);
    let pi = std::f64::consts::PI;

    let w_g = geometry::width(&families::g_family(n).unwrap().0).unwrap();
    let scaled_g = (ub - w_g) * nf.powi(4);
    let lead_g = 2.0 * pi.powi(4) / 3.0;
    assert!((scaled_g - lead_g).abs() / lead_g < 0.01, "G gap {scaled_g} vs {lead_g}");
    let two_term = lead_g + 145.0 * pi.powi(6) / (72.0 * nf * nf);
    assert!((scaled_g - two_term).abs() / two_term < 5e-4, "G gap {scaled_g} vs {two_term}");

    let w_f = geometry::width(&families::f_family(n).unwrap().0).unwrap();
    let scaled_f = (ub - w_f) * nf.powi(3);
    let lead_f = pi.powi(3) / 2.0;
    assert!((scaled_f - lead_f).abs() / lead_f < 0.01, "F gap {scaled_f} vs {lead_f}");
    println!("criterion 06 PASS: n^4 G-gap {scaled_g:.6} vs {lead_g:.6} ({two_term:.6}), n^3 F-gap {scaled_f:.6} vs {lead_f:.6}");
}

fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    let cross = |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut hull: Vec<Point> = Vec::new();
    for &p in pts.iter().chain(pts.iter().rev().skip(1)) {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

#[test]
fn criterion_07_width_engine_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut produced = 0;
    while produced < 100 {
        let m = rng.gen_range(8..=20);
        let pts: Vec<Point> = (0..m).map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>())).collect();
        let hull = convex_hull(pts);
        if hull.len() < 4 {
            continue;
        }
        let mut diam: f64 = 0.0;
        for i in 0..hull.len() {
            for j in (i + 1)..hull.len() {
                diam = diam.max(hull[i].dist(hull[j]));
            }
        }
        let scaled: Vec<Point> = hull.iter().map(|p| Point::new(p.x / diam, p.y / diam)).collect();
        let p = Polygon::new("random", scaled).unwrap();
        let a = geometry::width(&p).unwrap();
        let b = geometry::width_by_supports(&p).unwrap();
        assert!((a - b).abs() < 1e-12, "{} vs {}", a, b);
        produced += 1;
    }
    println!("criterion 07 PASS: 100 random convex small polygons, min-height vs support widths within 1e-12");
}

#[test]
fn criterion_08_configuration_enumeration() {
    let valid = verify::enumerate_valid();
    let mut expected: Vec<[u8; 8]> = Vec::new();
    for base in [verify::K_A, verify::K_B] {
        for c in base.dihedral_orbit() {
            if !expected.contains(&c.k) {
                expected.push(c.k);
            }
        }
    }
    let mut got: Vec<[u8; 8]> = valid.iter().map(|c| c.k).collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    println!("criterion 08 PASS: enumeration yields exactly the {} dihedral-orbit vectors", got.len());
}

#[test]
fn criterion_09_search_evidence() {
    let t = Instant::now();
    let kb = verify::local_improve(verify::K_B, 7, 100).unwrap();
    assert!(kb.feasible);
    let w = kb.best_width.unwrap();
    assert!((0.9537762..=0.953777).contains(&w), "KB width {w}");
    let (f8, _) = families::f8();
    let best = kb.best_polygon.unwrap();
    let mut dist2 = 0.0;
    for (a, b) in f8.vertices.iter().zip(&best.vertices).skip(1) {
        dist2 += (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
    }
    assert!(dist2.sqrt() <= 1.5e-4, "KB polygon drift {}", dist2.sqrt());

    let ka = verify::local_improve(verify::K_A, 7, 100).unwrap();
    assert!(!ka.feasible && ka.best_width.is_none(), "KA violation {}", ka.constraint_violation);

    let probe = verify::epsilon_uniqueness_probe(&f8, 1.5e-4, 10_000, 7).unwrap();
    let w_star = geometry::width(&f8).unwrap();
    assert!(probe < w_star, "probe {probe} vs {w_star}");

    let dt = t.elapsed();
    assert!(dt.as_secs_f64() < 120.0, "took {dt:?}");
    println!("criterion 09 PASS: KB {w:.10} (drift {:.2e}), KA infeasible, probe max {probe:.10} < {w_star:.10}, {dt:?}", dist2.sqrt());
}

#[test]
fn criterion_10_fixture_sanity() {
    for name in [
        FixtureName::Q4,
        FixtureName::R36,
        FixtureName::H8,
        FixtureName::B8,
        FixtureName::G16Ref,
        FixtureName::F16Ref,
    ] {
        let p = families::construct(&FamilyId::Fixture(name)).unwrap();
        let w = geometry::width(&p).unwrap();
        let want = families::fixture_info(name).reported_width;
        assert!((w - want).abs() < 1e-4, "{name}: {w} vs {want}");
    }
    println!("criterion 10 PASS: six fixture widths match their captions within 1e-4");
}
