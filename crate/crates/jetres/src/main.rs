//! Command-line driver: jet-component exploration, Newton dual fans,
//! subdivision verification, embedded-resolution reports, and catalog
//! queries for the bundled surface families.
//!
//! Exit codes: 0 on success (and for verified-true outcomes), 1 when a
//! verification question is answered negatively, 2 for usage, parse,
//! or input errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use jetres::json::{self, FanJson, PolyJson};
use jetres::theorem;
use jetres_core::catalog::Instance;
use jetres_core::fan::{verify_regular_subdivision, Cone};
use jetres_core::jets;
use jetres_core::lin::V3;
use jetres_core::newton::{dual_newton_fan, newton_polyhedron, NondegeneracyReport};
use jetres_core::poly::{Axis, Poly};
use jetres_core::toric::{verify_embedded_resolution, Route};

#[derive(Parser)]
#[command(
    name = "jetres",
    version,
    about = "Jet-scheme exploration and toric resolution verification for surfaces in 3-space"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Walk the jet components of a surface over a coordinate center.
    Jets {
        #[command(flatten)]
        poly: PolyArg,
        /// Pair of vanishing axes defining the center.
        #[arg(long, value_enum)]
        center: Center,
        /// Deepest jet level to explore (default: the quasi-degree of
        /// the polynomial, read off its Newton polyhedron).
        #[arg(long)]
        max_level: Option<usize>,
        /// Write the component graph in DOT form.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the component graph as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit the dual fan of the Newton polyhedron.
    Fan {
        #[command(flatten)]
        poly: PolyArg,
        /// Write the fan as JSON (default: stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a fan file: fan axioms, octant cover, regularity, and
    /// refinement of a dual Newton fan.
    Verify {
        /// Fan file to check.
        #[arg(long)]
        fan: PathBuf,
        /// Surface whose dual Newton fan must be refined.
        #[arg(long)]
        dual_of: String,
    },
    /// Verify embedded resolution of a surface along a fan.
    Resolve {
        #[command(flatten)]
        poly: PolyArg,
        /// Subdivision fan to resolve along.
        #[arg(long)]
        fan: PathBuf,
        /// Verification route.
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
        /// Write the full chart-by-chart report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print catalog data for one surface instance.
    Catalog {
        #[command(flatten)]
        family: FamilyArg,
        /// What to emit.
        #[arg(long, value_enum)]
        emit: Emit,
        /// Write the emitted JSON to a file (default: stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check the published tables for one instance or the whole sweep.
    VerifyTheorem {
        #[command(flatten)]
        family: FamilyArg,
        /// Check every instance of the standard sweep.
        #[arg(long, conflicts_with = "family")]
        all: bool,
    },
}

/// Where a polynomial comes from: a JSON file, a catalog instance
/// name, or an inline expression.
#[derive(Args)]
struct PolyArg {
    /// Polynomial: path to a JSON file, a catalog name such as
    /// `B_odd(k=3,l=2)`, or an inline expression such as
    /// `z^3+y^3*z+x^2*y^2`.
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct FamilyArg {
    /// Family name: E60, E70, E07, A_eq, A_ge, B_odd, B_even, C, D, F,
    /// or H.
    #[arg(long)]
    family: Option<String>,
    /// Family parameter k.
    #[arg(long)]
    k: Option<i64>,
    /// Family parameter l.
    #[arg(long)]
    l: Option<i64>,
    /// Family parameter m.
    #[arg(long)]
    m: Option<i64>,
    /// Family parameter n.
    #[arg(long)]
    n: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Center {
    Yz,
    Xz,
    Xy,
}

impl Center {
    fn axes(self) -> [Axis; 2] {
        match self {
            Center::Yz => [Axis::Y, Axis::Z],
            Center::Xz => [Axis::X, Axis::Z],
            Center::Xy => [Axis::X, Axis::Y],
        }
    }

    fn label(self) -> &'static str {
        match self {
            Center::Yz => "yz",
            Center::Xz => "xz",
            Center::Xy => "xy",
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum RouteArg {
    Auto,
    Varchenko,
    Charts,
}

impl RouteArg {
    fn route(self) -> Route {
        match self {
            RouteArg::Auto => Route::Auto,
            RouteArg::Varchenko => Route::Varchenko,
            RouteArg::Charts => Route::Charts,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    /// The defining polynomial.
    Poly,
    /// The published essential weight vectors.
    Vectors,
    /// The published or reconstructed regular subdivision.
    Cones,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8> {
    check_thread_cap()?;
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Jets { poly, center, max_level, dot, json } => {
            cmd_jets(&poly.poly, center, max_level, dot.as_deref(), json.as_deref())
        }
        Cmd::Fan { poly, json } => cmd_fan(&poly.poly, json.as_deref()),
        Cmd::Verify { fan, dual_of } => cmd_verify(&fan, &dual_of),
        Cmd::Resolve { poly, fan, route, report } => {
            cmd_resolve(&poly.poly, &fan, route, report.as_deref())
        }
        Cmd::Catalog { family, emit, json } => cmd_catalog(&family, emit, json.as_deref()),
        Cmd::VerifyTheorem { family, all } => cmd_verify_theorem(&family, all),
    }
}

/// Validates the optional thread cap. The engine is sequential, so any
/// positive cap is honored as-is.
fn check_thread_cap() -> Result<()> {
    if let Ok(raw) = std::env::var("JETRES_THREADS") {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| anyhow!("JETRES_THREADS must be a positive integer, got `{raw}`"))?;
        if n == 0 {
            bail!("JETRES_THREADS must be a positive integer, got `{raw}`");
        }
    }
    Ok(())
}

/// Loads a polynomial from a file path, a catalog instance name, or an
/// inline expression, in that order.
fn load_poly(spec: &str) -> Result<Poly> {
    if Path::new(spec).is_file() {
        let data = fs::read_to_string(spec)
            .with_context(|| format!("reading polynomial file `{spec}`"))?;
        let pj: PolyJson = serde_json::from_str(&data)
            .with_context(|| format!("parsing polynomial file `{spec}`"))?;
        return json::poly_from_json(&pj);
    }
    if let Ok(inst) = Instance::parse_name(spec) {
        return Ok(inst.equation());
    }
    Poly::parse(spec).map_err(|e| {
        anyhow!("`{spec}` is not a file, a catalog name, or a valid expression: {e}")
    })
}

fn write_or_stdout(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, bytes).with_context(|| format!("writing `{}`", p.display()))?;
            println!("wrote {}", p.display());
        }
        None => {
            std::io::stdout().write_all(bytes)?;
        }
    }
    Ok(())
}

fn fmt_v3(v: V3) -> String {
    format!("({},{},{})", v[0], v[1], v[2])
}

fn fmt_cone(c: &Cone) -> String {
    format!("[{} {} {}]", fmt_v3(c[0]), fmt_v3(c[1]), fmt_v3(c[2]))
}

fn cmd_jets(
    spec: &str,
    center: Center,
    max_level: Option<usize>,
    dot: Option<&Path>,
    json_path: Option<&Path>,
) -> Result<u8> {
    let f = load_poly(spec)?;
    let axes = center.axes();
    let m_max = match max_level {
        Some(m) => m,
        None => newton_polyhedron(&f).default_max_level().max(0) as usize,
    };
    let graph = match jets::explore(&f, &axes, m_max) {
        Some(g) => g,
        None => {
            println!(
                "no jet components over center {}: the surface does not contain it",
                center.label()
            );
            return Ok(1);
        }
    };
    let essentials: BTreeSet<V3> = graph.essential_vectors();
    println!(
        "center {}, levels {}..={}: {} components, {} essential vectors",
        center.label(),
        graph.initial_level,
        graph.max_level,
        graph.nodes.len(),
        essentials.len()
    );
    for v in &essentials {
        println!("  {}", fmt_v3(*v));
    }
    if let Some(p) = dot {
        fs::write(p, jets::emit_dot(&graph))
            .with_context(|| format!("writing `{}`", p.display()))?;
        println!("wrote {}", p.display());
    }
    if let Some(p) = json_path {
        let report = json::jets_to_json(&graph, &axes);
        write_or_stdout(Some(p), &json::to_bytes(&report))?;
    }
    Ok(0)
}

fn cmd_fan(spec: &str, json_path: Option<&Path>) -> Result<u8> {
    let f = load_poly(spec)?;
    let newton = newton_polyhedron(&f);
    let fan = dual_newton_fan(&newton);
    let report = json::dual_fan_to_json(&fan);
    if json_path.is_some() {
        println!(
            "dual Newton fan: {} rays, {} maximal cones",
            fan.rays.len(),
            fan.cones.len()
        );
    }
    write_or_stdout(json_path, &json::to_bytes(&report))?;
    Ok(0)
}

fn load_fan(path: &Path) -> Result<Vec<Cone>> {
    let data = fs::read_to_string(path)
        .with_context(|| format!("reading fan file `{}`", path.display()))?;
    let fj: FanJson = serde_json::from_str(&data)
        .with_context(|| format!("parsing fan file `{}`", path.display()))?;
    json::cones_from_json(&fj)
}

fn cmd_verify(fan_path: &Path, dual_of: &str) -> Result<u8> {
    let cones = load_fan(fan_path)?;
    let f = load_poly(dual_of)?;
    let newton = newton_polyhedron(&f);
    let report = verify_regular_subdivision(&cones, &newton);
    let rj = json::subdivision_to_json(&report);
    println!("fan axioms: {}", flag(report.is_fan, rj.fan_violation.as_deref()));
    println!(
        "octant cover: {}",
        flag(report.covers_octant, rj.cover_violation.as_deref())
    );
    match report.irregular.first() {
        None => println!("regularity: ok"),
        Some(c) => println!("regularity: FAIL — irregular cone {}", fmt_cone(c)),
    }
    match &report.nonrefining {
        None => println!("refines dual fan: ok"),
        Some(c) => println!("refines dual fan: FAIL — cone {}", fmt_cone(c)),
    }
    Ok(if report.all_true() { 0 } else { 1 })
}

fn flag(ok: bool, violation: Option<&str>) -> String {
    if ok {
        "ok".to_string()
    } else {
        format!("FAIL — {}", violation.unwrap_or("violated"))
    }
}

fn cmd_resolve(
    spec: &str,
    fan_path: &Path,
    route: RouteArg,
    report_path: Option<&Path>,
) -> Result<u8> {
    let f = load_poly(spec)?;
    let cones = load_fan(fan_path)?;
    let report = verify_embedded_resolution(&f, &cones, route.route());
    let s = &report.subdivision;
    println!(
        "subdivision: fan={} cover={} regular={} refines={}",
        s.is_fan, s.covers_octant, s.all_regular, s.refines_dual
    );
    if let Some(c) = s.irregular.first() {
        println!("irregular cone: {}", fmt_cone(c));
    }
    println!("route {} applied {}", report.route.name(), report.applied);
    if let Some(nd) = &report.nondegeneracy {
        match nd {
            NondegeneracyReport::Nondegenerate { faces_checked } => {
                println!("nondegenerate: true ({faces_checked} compact faces)")
            }
            NondegeneracyReport::Degenerate { prime, witness, .. } => println!(
                "nondegenerate: false (singular torus point {witness:?} mod {prime})"
            ),
        }
    }
    if !report.charts.is_empty() {
        let count = |p: &dyn Fn(&str) -> bool| {
            report.charts.iter().filter(|c| p(c.verdict.name())).count()
        };
        println!(
            "charts: {} total, {} certified, {} miss the divisor, {} divisor-only, {} inconclusive",
            report.charts.len(),
            count(&|v| v == "certified"),
            count(&|v| v == "misses-divisor"),
            count(&|v| v == "divisor-only"),
            count(&|v| v == "inconclusive"),
        );
    }
    println!("verdict: {}", report.verdict);
    if let Some(p) = report_path {
        write_or_stdout(Some(p), &json::to_bytes(&json::resolution_to_json(&report)))?;
    }
    Ok(if report.verdict.starts_with("resolved") { 0 } else { 1 })
}

fn build_instance(arg: &FamilyArg) -> Result<Instance> {
    let family = arg
        .family
        .as_deref()
        .ok_or_else(|| anyhow!("--family is required"))?;
    Instance::build(family, arg.k, arg.l, arg.m, arg.n).map_err(|e| anyhow!(e))
}

fn cmd_catalog(family: &FamilyArg, emit: Emit, json_path: Option<&Path>) -> Result<u8> {
    let inst = build_instance(family)?;
    let bytes = match emit {
        Emit::Poly => json::to_bytes(&json::poly_to_json(&inst.equation())),
        Emit::Vectors => {
            let vectors = inst.theorem_vectors().map_err(|e| anyhow!(e))?;
            let report = json::VectorsJson {
                schema: json::SCHEMA,
                name: inst.name(),
                vectors,
                non_primitive: inst.non_primitive_vectors(),
            };
            json::to_bytes(&report)
        }
        Emit::Cones => {
            let (cones, method) = inst.theorem_subdivision().map_err(|e| anyhow!(e))?;
            let fan = json::cones_to_json(&cones);
            let report = json::ConesJson {
                schema: json::SCHEMA,
                name: inst.name(),
                method: method.name().to_string(),
                rays: fan.rays,
                cones: fan.cones,
            };
            json::to_bytes(&report)
        }
    };
    write_or_stdout(json_path, &bytes)?;
    Ok(0)
}

fn cmd_verify_theorem(family: &FamilyArg, all: bool) -> Result<u8> {
    let checks = if all {
        theorem::check_all()
    } else {
        vec![theorem::check_instance(build_instance(family)?)]
    };
    let mut failed = 0usize;
    for check in &checks {
        println!("{}:", check.name);
        for item in &check.items {
            println!("  {} {} — {}", item.outcome.name(), item.label, item.detail);
        }
        if !check.passed() {
            failed += 1;
        }
    }
    println!(
        "checked {} instance(s): {} ok, {} failed",
        checks.len(),
        checks.len() - failed,
        failed
    );
    Ok(if failed == 0 { 0 } else { 1 })
}
