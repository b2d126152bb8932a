mod json;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use smallgon::bounds;
use smallgon::families::{self, FamilyId, FixtureName};
use smallgon::geometry::{self, FLAG_TOL};
use smallgon::solvers::{self, Variant};
use smallgon::verify;

#[derive(Parser)]
#[command(name = "smallgon", version, about = "Construct, measure, and verify unit-diameter polygons")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a polygon family member and write it to a file
    Construct {
        /// f8, regular, gn, fn, reuleaux, or a fixture name (q4, r36, h8, b8,
        /// f8ref, f16ref, f32ref, g16ref, g32ref)
        family: String,
        /// Vertex count for regular/gn/fn/reuleaux
        #[arg(long)]
        n: Option<usize>,
        /// Arc count for reuleaux
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Output path; defaults to a name derived from the polygon
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure a polygon JSON file and print its report
    Width { path: PathBuf },
    /// Recompute the width table for n = 16, 32, 64, 128, 256
    Table1 {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Overrides SMALLGON_SEED; default 7
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        starts: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1.5e-4)]
        radius: f64,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print series approximations and gap terms for one table index
    Asymptotics {
        #[arg(long, default_value_t = 256)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Bounds,
    Lemmas,
    Search,
    Uniqueness,
}

enum CmdError {
    Usage(String),
    Check,
}

impl From<String> for CmdError {
    fn from(msg: String) -> Self {
        CmdError::Usage(msg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Check) => ExitCode::from(1),
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.cmd {
        Cmd::Construct { family, n, m, format, out } => cmd_construct(&family, n, m, format, out),
        Cmd::Width { path } => cmd_width(&path),
        Cmd::Table1 { format } => {
            print!("{}", table1(format));
            Ok(())
        }
        Cmd::Verify { suite, seed, starts, samples, radius, json } => {
            cmd_verify(suite, resolve_seed(seed)?, starts, samples, radius, json)
        }
        Cmd::Asymptotics { n } => cmd_asymptotics(n),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CmdError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("SMALLGON_SEED") {
        Ok(v) => v
            .parse()
            .map_err(|_| CmdError::Usage(format!("SMALLGON_SEED is not an integer: {v:?}"))),
        Err(_) => Ok(7),
    }
}

fn family_id(family: &str, n: Option<usize>, m: Option<usize>) -> Result<FamilyId, CmdError> {
    let need_n = || n.ok_or_else(|| CmdError::Usage(format!("family {family:?} requires --n")));
    match family {
        "f8" => Ok(FamilyId::F8),
        "regular" => Ok(FamilyId::Regular(need_n()?)),
        "gn" => Ok(FamilyId::Gn(need_n()?)),
        "fn" => Ok(FamilyId::Fn(need_n()?)),
        "reuleaux" => {
            let m = m.ok_or_else(|| CmdError::Usage("reuleaux requires --m".into()))?;
            Ok(FamilyId::ReuleauxRegular(m, need_n()?))
        }
        other => match FixtureName::from_str(other) {
            Ok(f) => Ok(FamilyId::Fixture(f)),
            Err(_) => Err(CmdError::Usage(format!(
                "unknown family {other:?} (expected f8, regular, gn, fn, reuleaux, or a fixture name)"
            ))),
        },
    }
}

fn cmd_construct(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    format: OutFormat,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    let id = family_id(family, n, m)?;
    let p = families::construct(&id).map_err(|e| CmdError::Usage(e.to_string()))?;
    let (body, ext) = match format {
        OutFormat::Json => (json::to_json(&p), "json"),
        OutFormat::Svg => (render::svg(&p), "svg"),
        OutFormat::Tikz => (render::tikz(&p), "tex"),
    };
    let path = out.unwrap_or_else(|| {
        let stem: String = p
            .name
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '_' })
            .collect();
        PathBuf::from(format!("{stem}.{ext}"))
    });
    fs::write(&path, body).map_err(|e| CmdError::Usage(format!("cannot write {}: {e}", path.display())))?;
    let w = geometry::width(&p).map_err(|e| CmdError::Usage(e.to_string()))?;
    println!("{}: n={} width={:.10} -> {}", p.name, p.n(), w, path.display());
    Ok(())
}

fn cmd_width(path: &PathBuf) -> Result<(), CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let p = json::from_json(&text).map_err(CmdError::Usage)?;
    let report = geometry::classify(&p, FLAG_TOL).map_err(|e| CmdError::Usage(e.to_string()))?;
    println!("name: {}", p.name);
    println!("n: {}", p.n());
    println!("width: {:.10}", report.width);
    println!("diameter: {:.10}", report.diameter);
    println!("perimeter: {:.10}", report.perimeter);
    println!("sides: [{:.10}, {:.10}]", report.side_min, report.side_max);
    println!("small: {}", report.is_small);
    println!("equilateral: {}", report.is_equilateral);
    println!("convex: {}", report.is_convex);
    Ok(())
}

struct BoundsRow {
    n: usize,
    w_regular: f64,
    w_f: f64,
    w_g: f64,
    ub: f64,
    fraction: f64,
}

fn table_row(n: usize) -> BoundsRow {
    let w_regular = geometry::width(&families::regular(n).expect("table index")).expect("convex");
    let w_f = geometry::width(&families::f_family(n).expect("table index").0).expect("convex");
    let w_g = geometry::width(&families::g_family(n).expect("table index").0).expect("convex");
    let ub = bounds::upper_bound_w(n);
    BoundsRow { n, w_regular, w_f, w_g, ub, fraction: (w_g - w_regular) / (ub - w_regular) }
}

fn table_rows() -> Vec<BoundsRow> {
    [16, 32, 64, 128, 256].into_iter().map(table_row).collect()
}

fn table1(format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            out.push_str("  n  regular       f_n           g_n           upper         fraction\n");
            for r in table_rows() {
                out.push_str(&format!(
                    "{:>3}  {:.10}  {:.10}  {:.10}  {:.10}  {:.4}\n",
                    r.n, r.w_regular, r.w_f, r.w_g, r.ub, r.fraction
                ));
            }
        }
        TableFormat::Csv => {
            out.push_str("n,regular,f_n,g_n,upper,fraction\n");
            for r in table_rows() {
                out.push_str(&format!(
                    "{},{:.10},{:.10},{:.10},{:.10},{:.4}\n",
                    r.n, r.w_regular, r.w_f, r.w_g, r.ub, r.fraction
                ));
            }
        }
    }
    out
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

fn report(suite: &str, checks: Vec<Check>, as_json: bool) -> Result<(), CmdError> {
    let all = checks.iter().all(|c| c.pass);
    if as_json {
        let v = serde_json::json!({
            "suite": suite,
            "pass": all,
            "checks": checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("static shape"));
    } else {
        for c in &checks {
            println!("[{}] {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        println!("suite {suite}: {}", if all { "PASS" } else { "FAIL" });
    }
    if all {
        Ok(())
    } else {
        Err(CmdError::Check)
    }
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    starts: usize,
    samples: usize,
    radius: f64,
    as_json: bool,
) -> Result<(), CmdError> {
    match suite {
        Suite::Bounds => report("bounds", bounds_checks(), as_json),
        Suite::Lemmas => report("lemmas", lemma_checks().map_err(CmdError::Usage)?, as_json),
        Suite::Search => report("search", search_checks(seed, starts).map_err(CmdError::Usage)?, as_json),
        Suite::Uniqueness => {
            report("uniqueness", uniqueness_checks(seed, samples, radius).map_err(CmdError::Usage)?, as_json)
        }
    }
}

fn bounds_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let pw = bounds::perimeter_width_bound(bounds::octagon_perimeter_cap(), 8);
    checks.push(check("perimeter route", pw > 0.9726 && pw < 0.9727, format!("{pw:.10} in (0.9726, 0.9727)")));

    let (c_lo, c_hi) = bounds::octagon_side_bounds();
    checks.push(check(
        "side window",
        c_lo > 0.3794 && c_hi < 0.3870,
        format!("({c_lo:.10}, {c_hi:.10}) inside (0.3794, 0.3870)"),
    ));
    let side = families::f8().0.side_length(1);
    checks.push(check("octagon side inside window", side > c_lo && side < c_hi, format!("{side:.10}")));

    let b = bounds::tightened_bounds();
    checks.push(check("tight side floor", b.c_lower_tight > 0.3844, format!("{:.10} > 0.3844", b.c_lower_tight)));
    checks.push(check("tight width cap", b.w_upper_tight < 0.9564, format!("{:.10} < 0.9564", b.w_upper_tight)));
    checks.push(check(
        "diagonal cap",
        b.diag_upper < 0.9645 && (b.diag_upper - 0.9644).abs() < 1e-4,
        format!("{:.10} within 1e-4 of 0.9644", b.diag_upper),
    ));
    checks.push(check(
        "chain order",
        b.c_lower < b.c_lower_tight
            && b.c_lower_tight < b.c_upper
            && b.w_lower < b.w_upper_tight
            && b.w_upper_tight < b.w_upper_global
            && b.w_upper_global < bounds::upper_bound_w(8),
        format!("{:.6} < {:.6} < {:.6}; {:.6} < {:.6} < {:.6} < {:.6}",
            b.c_lower, b.c_lower_tight, b.c_upper,
            b.w_lower, b.w_upper_tight, b.w_upper_global, bounds::upper_bound_w(8)),
    ));

    let mut closed_ok = true;
    let mut detail = String::new();
    for n in [16usize, 32, 64, 128, 256] {
        let lb = bounds::closed_form_lower_bound(n).expect("power of two");
        let ub = bounds::upper_bound_w(n);
        let w_g = geometry::width(&families::g_family(n).expect("valid n").0).expect("convex");
        closed_ok &= lb < ub && w_g < ub && (n < 32 || lb > w_g);
        detail.push_str(&format!("n={n}: {lb:.10}; "));
    }
    checks.push(check("closed-form lower bounds", closed_ok, detail.trim_end_matches("; ").to_string()));
    checks
}

fn lemma_checks() -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();

    let valid = verify::enumerate_valid();
    let mut orbit: Vec<[u8; 8]> = Vec::new();
    for base in [verify::K_A, verify::K_B] {
        for c in base.dihedral_orbit() {
            if !orbit.contains(&c.k) {
                orbit.push(c.k);
            }
        }
    }
    let mut got: Vec<[u8; 8]> = valid.iter().map(|c| c.k).collect();
    got.sort();
    orbit.sort();
    checks.push(check(
        "enumeration",
        got == orbit,
        format!("{} valid vectors = two dihedral orbits", got.len()),
    ));

    use verify::ConfigClass;
    let cls = (
        verify::classify_configuration(verify::K_A),
        verify::classify_configuration(verify::K_B),
        verify::classify_configuration(verify::Configuration { k: [4, 5, 6, 7, 0, 1, 2, 3] }),
    );
    checks.push(check(
        "classification",
        cls == (ConfigClass::KA, ConfigClass::KB, ConfigClass::Invalid),
        format!("{cls:?}"),
    ));

    let config_name = |c: Option<ConfigClass>| c.map_or("none".to_string(), |c| format!("{c:?}"));

    let (p, _) = families::f8();
    let rep = verify::check_lemma_pairing(&p).map_err(|e| e.to_string())?;
    checks.push(check(
        "optimal octagon pairing",
        rep.lemma_ok && rep.pairing_ok && rep.configuration == Some(ConfigClass::KB),
        format!("configuration {}, violations {:?}", config_name(rep.configuration), rep.violations),
    ));

    let h8 = families::fixture(FixtureName::H8);
    let rep = verify::check_lemma_pairing(&h8).map_err(|e| e.to_string())?;
    checks.push(check(
        "perimeter-extremal fixture",
        rep.lemma_ok && rep.pairing_ok,
        format!("configuration {}", config_name(rep.configuration)),
    ));

    let r8 = families::regular(8).map_err(|e| e.to_string())?;
    let rep = verify::check_lemma_pairing(&r8).map_err(|e| e.to_string())?;
    checks.push(check(
        "regular octagon ties",
        rep.lemma_ok && rep.tied_sides.len() == 8,
        format!("tied sides {:?}", rep.tied_sides),
    ));

    Ok(checks)
}

fn search_checks(seed: u64, starts: usize) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    let kb = verify::local_improve(verify::K_B, seed, starts).map_err(|e| e.to_string())?;
    let w = kb.best_width.unwrap_or(f64::NAN);
    checks.push(check(
        "five-cycle search width",
        kb.feasible && (0.9537762..=0.953777).contains(&w),
        format!("best {w:.10} in [0.9537762, 0.953777], violation {:.2e}", kb.constraint_violation),
    ));

    let drift = kb.best_polygon.map(|p| {
        let (f8, _) = families::f8();
        let mut d2 = 0.0;
        for (a, b) in f8.vertices.iter().zip(&p.vertices).skip(1) {
            d2 += (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
        }
        d2.sqrt()
    });
    checks.push(check(
        "five-cycle search locus",
        drift.is_some_and(|d| d <= 1.5e-4),
        match drift {
            Some(d) => format!("coordinate drift {d:.2e}"),
            None => "no feasible polygon".to_string(),
        },
    ));

    let ka = verify::local_improve(verify::K_A, seed, starts).map_err(|e| e.to_string())?;
    checks.push(check(
        "seven-cycle search infeasible",
        !ka.feasible && ka.best_width.is_none(),
        format!("closest violation {:.2e}", ka.constraint_violation),
    ));
    Ok(checks)
}

fn uniqueness_checks(seed: u64, samples: usize, radius: f64) -> Result<Vec<Check>, String> {
    let (p, _) = families::f8();
    let w_star = geometry::width(&p).map_err(|e| e.to_string())?;
    let max = verify::epsilon_uniqueness_probe(&p, radius, samples, seed).map_err(|e| e.to_string())?;
    Ok(vec![check(
        "probe below optimum",
        max < w_star,
        format!("max {max:.10} < {w_star:.10} over {samples} samples at radius {radius:.1e}"),
    )])
}

fn cmd_asymptotics(n: usize) -> Result<(), CmdError> {
    let series = solvers::asymptotic_g(n).map_err(|e| CmdError::Usage(e.to_string()))?;
    let (p_g, params_g) = families::g_family(n).map_err(|e| CmdError::Usage(e.to_string()))?;
    let w_g = geometry::width(&p_g).map_err(|e| CmdError::Usage(e.to_string()))?;
    let (p_f, _) = families::f_family(n).map_err(|e| CmdError::Usage(e.to_string()))?;
    let w_f = geometry::width(&p_f).map_err(|e| CmdError::Usage(e.to_string()))?;
    let ub = bounds::upper_bound_w(n);

    println!("n: {n}");
    println!("alpha: series {:.12}  solved {:.12}  diff {:.2e}", series.alpha_series, params_g.alpha, (series.alpha_series - params_g.alpha).abs());
    println!("beta:  series {:.12}  solved {:.12}  diff {:.2e}", series.beta_series, params_g.beta, (series.beta_series - params_g.beta).abs());
    println!("d:     series {:.12}  solved {:.12}  diff {:.2e}", series.d_series, params_g.d, (series.d_series - params_g.d).abs());
    println!("width: series {:.12}  engine {:.12}  diff {:.2e}", series.width_series, w_g, (series.width_series - w_g).abs());

    let gap_g = solvers::gap_series(n, Variant::G).map_err(|e| CmdError::Usage(e.to_string()))?;
    println!("cap gap (g): series {:.3e}  exact {:.3e}", gap_g.ub_gap, ub - w_g);
    if let Some(reg) = gap_g.reg_gap {
        let w_r = geometry::width(&families::regular(n).map_err(|e| CmdError::Usage(e.to_string()))?)
            .map_err(|e| CmdError::Usage(e.to_string()))?;
        println!("regular gap (g): series {:.3e}  exact {:.3e}", reg, w_g - w_r);
    }
    let gap_f = solvers::gap_series(n, Variant::F).map_err(|e| CmdError::Usage(e.to_string()))?;
    println!("cap gap (f): series {:.3e}  exact {:.3e}", gap_f.ub_gap, ub - w_f);
    Ok(())
}
