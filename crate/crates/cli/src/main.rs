//! `sgeq`: batch front end for dilute strain-gradient equivalents.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sge_dilute::assembly::SymmetryClass;
use sge_dilute::cases::{
    run_case_with_tolerance, run_sweep, CaseConfig, CaseReport, PolygonN, SweepConfig, SweepResult,
    DEFAULT_SYMMETRY_TOL,
};
use sge_dilute::rve::{mc_second_moment, rve_ratio, RveShape};
use sge_dilute::tables::{polygon_table, reproduce_ortho_table, TABLE_TOLERANCE};

const EXIT_CONFIG: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_TABLES: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sgeq",
    version,
    about = "Strain-gradient solids equivalent to dilute composites"
)]
struct Cli {
    /// Seed for Monte Carlo cross-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Monte Carlo sample count; enables the RVE cross-check.
    #[arg(long, global = true)]
    mc_samples: Option<usize>,
    /// Symmetry tolerance for `case`/`check`, cell tolerance for `tables`.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Named composite cases.
    Case {
        #[command(subcommand)]
        action: CaseAction,
    },
    /// Parameter sweep written as CSV.
    Sweep {
        config: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Radius of inertia and second moment of an RVE shape.
    Rve(RveArgs),
    /// Reference tables.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
    /// Definiteness and symmetry class of a case.
    Check { config: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CaseAction {
    /// Full JSON report of one case.
    Run { config: PathBuf },
}

#[derive(Debug, Subcommand)]
enum TablesAction {
    /// Recompute the orthotropic constants table and pass the polygon table through.
    Reproduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeKind {
    Circle,
    Triangle,
    Square,
    Pentagon,
    Hexagon,
    Polygon,
    Convex,
    Sphere,
    Cube,
    TruncatedOctahedron,
}

#[derive(Debug, clap::Args)]
struct RveArgs {
    shape: ShapeKind,
    /// Radius, side or edge length.
    #[arg(long, default_value_t = 1.0)]
    size: f64,
    /// Edge count for `polygon`.
    #[arg(long)]
    n: Option<u32>,
    /// Counterclockwise vertices for `convex`, as `x,y;x,y;...`.
    #[arg(long)]
    vertices: Option<String>,
    /// Shape to compare against at equal area or volume.
    #[arg(long)]
    reference: Option<ShapeKind>,
    /// Edge count of a `polygon` reference.
    #[arg(long)]
    reference_n: Option<u32>,
}

enum Failure {
    Config(String),
    Domain(String),
    Tables,
}

impl From<sge_dilute::Error> for Failure {
    fn from(e: sge_dilute::Error) -> Self {
        if e.is_config() {
            Failure::Config(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    let mut text = serde_json::to_vec_pretty(value).map_err(|e| Failure::Domain(e.to_string()))?;
    text.push(b'\n');
    write_stdout(&text)
}

fn write_stdout(bytes: &[u8]) -> Outcome {
    match std::io::stdout().lock().write_all(bytes) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Domain(e.to_string())),
        _ => Ok(()),
    }
}

fn load_case(path: &Path, tolerance: Option<f64>) -> std::result::Result<CaseReport, Failure> {
    let config: CaseConfig = read_json(path)?;
    let tol = tolerance.unwrap_or(DEFAULT_SYMMETRY_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::Config(format!("tolerance {tol} must be positive")));
    }
    run_case_with_tolerance(&config, tol).map_err(|e| match Failure::from(e) {
        Failure::Domain(msg) => Failure::Domain(format!("{}: {msg}", config.case.name())),
        other => other,
    })
}

fn case_run(path: &Path, tolerance: Option<f64>) -> Outcome {
    print_json(&load_case(path, tolerance)?)
}

#[derive(Serialize)]
struct CheckReport {
    case: &'static str,
    closed_form_nd: bool,
    spectral_nd: bool,
    spectral_pd: bool,
    min_eigenvalue_c: f64,
    max_eigenvalue_c: f64,
    min_eigenvalue_a: f64,
    max_eigenvalue_a: f64,
    symmetry_class: SymmetryClass,
    warnings: Vec<String>,
}

fn check(path: &Path, tolerance: Option<f64>) -> Outcome {
    let r = load_case(path, tolerance)?;
    let d = r.definiteness;
    print_json(&CheckReport {
        case: r.case.name(),
        closed_form_nd: d.closed_form_nd,
        spectral_nd: d.spectral_nd.definite,
        spectral_pd: d.spectral_pd.definite,
        min_eigenvalue_c: d.spectral_nd.min_eigenvalue,
        max_eigenvalue_c: d.spectral_nd.max_eigenvalue,
        min_eigenvalue_a: d.spectral_pd.min_eigenvalue,
        max_eigenvalue_a: d.spectral_pd.max_eigenvalue,
        symmetry_class: r.symmetry_class,
        warnings: r.warnings,
    })
}

/// Twelve significant digits, shortest form.
fn sig12(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".to_string()
    } else {
        rounded.to_string()
    }
}

fn sweep_csv(result: &SweepResult) -> std::result::Result<Vec<u8>, Failure> {
    let io = |e: csv::Error| Failure::Domain(e.to_string());
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&result.columns).map_err(io)?;
    for row in &result.rows {
        let mut record = vec![sig12(row.value), sig12(row.a2), sig12(row.a4)];
        if let Some(a6) = row.a6 {
            record.push(sig12(a6));
        }
        record.push(row.pd.to_string());
        if let Some(t) = row.threshold {
            record.push(sig12(t));
        }
        w.write_record(&record).map_err(io)?;
    }
    w.into_inner().map_err(|e| Failure::Domain(e.to_string()))
}

fn sweep(path: &Path, output: Option<&Path>) -> Outcome {
    let config: SweepConfig = read_json(path)?;
    let result = run_sweep(&config)?;
    let bytes = sweep_csv(&result)?;
    match output {
        Some(out) => fs::write(out, &bytes).map_err(|e| Failure::Config(format!("{}: {e}", out.display())))?,
        None => write_stdout(&bytes)?,
    }
    match result.failure {
        None => Ok(()),
        Some(f) => Err(Failure::Domain(format!(
            "{}: grid point {} ({} = {}) failed: {}; wrote {} rows",
            config.case.name(),
            f.index,
            result.columns[0],
            f.value,
            f.error,
            result.rows.len()
        ))),
    }
}

fn parse_vertices(text: &str) -> std::result::Result<Vec<[f64; 2]>, Failure> {
    text.split(';')
        .map(|pair| {
            let xy: Vec<&str> = pair.split(',').map(str::trim).collect();
            match xy.as_slice() {
                [x, y] => match (x.parse(), y.parse()) {
                    (Ok(x), Ok(y)) => Ok([x, y]),
                    _ => Err(Failure::Config(format!("bad vertex {pair:?}"))),
                },
                _ => Err(Failure::Config(format!("bad vertex {pair:?}"))),
            }
        })
        .collect()
}

fn build_shape(
    kind: ShapeKind,
    size: f64,
    n: Option<u32>,
    vertices: Option<&str>,
) -> std::result::Result<RveShape, Failure> {
    let polygon = |n: u32| RveShape::RegularPolygon { n, side: size };
    Ok(match kind {
        ShapeKind::Circle => RveShape::Circle { radius: size },
        ShapeKind::Triangle => polygon(3),
        ShapeKind::Square => polygon(4),
        ShapeKind::Pentagon => polygon(5),
        ShapeKind::Hexagon => polygon(6),
        ShapeKind::Polygon => polygon(n.ok_or_else(|| Failure::Config("polygon needs --n".into()))?),
        ShapeKind::Convex => RveShape::ConvexPolygon {
            vertices: parse_vertices(vertices.ok_or_else(|| Failure::Config("convex needs --vertices".into()))?)?,
        },
        ShapeKind::Sphere => RveShape::Sphere { radius: size },
        ShapeKind::Cube => RveShape::Cube { edge: size },
        ShapeKind::TruncatedOctahedron => RveShape::TruncatedOctahedron { edge: size },
    })
}

fn rve(args: &RveArgs, seed: u64, mc_samples: Option<usize>) -> Outcome {
    let shape = build_shape(args.shape, args.size, args.n, args.vertices.as_deref())?;
    shape.validate()?;
    let mut report = json!({
        "shape": shape,
        "dim": shape.dim().n(),
        "measure": shape.measure()?,
        "mean_square_radius": shape.mean_square_radius()?,
        "rho": shape.radius_of_inertia()?,
        "shape_factor": shape.shape_factor()?,
    });
    if let Some(samples) = mc_samples {
        let mc = mc_second_moment(&shape, samples, seed)?;
        let exact = shape.mean_square_radius()?;
        report["monte_carlo"] = json!({
            "seed": seed,
            "samples": mc.samples,
            "mean_square_radius": mc.mean,
            "std_error": mc.std_error,
            "deviation_sigma": (mc.mean - exact) / mc.std_error,
        });
    }
    if let Some(kind) = args.reference {
        let reference = build_shape(kind, 1.0, args.reference_n, None)?;
        report["reference"] = json!({
            "shape": reference,
            "rho_squared_ratio": rve_ratio(&shape, &reference)?,
        });
    }
    print_json(&report)
}

fn tables(tolerance: Option<f64>) -> Outcome {
    let tol = tolerance.unwrap_or(TABLE_TOLERANCE);
    let ortho = reproduce_ortho_table(tol)?;
    let failing: Vec<String> = ortho
        .rows
        .iter()
        .filter(|r| r.mapped_max() > tol)
        .map(|r| {
            format!(
                "{} {:?} (max deviation {:.3e})",
                r.material,
                r.orientation,
                r.mapped_max()
            )
        })
        .collect();
    print_json(&json!({
        "polygon_constants": polygon_table()
            .iter()
            .map(|c| json!({ "n": PolygonN(c.n), "a": c.a, "b": c.b }))
            .collect::<Vec<_>>(),
        "orthotropic": {
            "tolerance": tol,
            "passed": ortho.passed(),
            "literal_layout_passed": ortho.literal_passed(),
            "rows": ortho.rows,
        },
    }))?;
    if failing.is_empty() {
        Ok(())
    } else {
        eprintln!("table reproduction failed for: {}", failing.join(", "));
        Err(Failure::Tables)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Case {
            action: CaseAction::Run { config },
        } => case_run(config, cli.tolerance),
        Command::Sweep { config, output } => sweep(config, output.as_deref()),
        Command::Rve(args) => rve(args, cli.seed, cli.mc_samples),
        Command::Tables {
            action: TablesAction::Reproduce,
        } => tables(cli.tolerance),
        Command::Check { config } => check(config, cli.tolerance),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Tables) => ExitCode::from(EXIT_TABLES),
    }
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(-2.0 / 3.0), "-0.666666666667");
        assert_eq!(sig12(0.2), "0.2");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(123456.7890123456), "123456.789012");
        assert_eq!(sig12(1.0), "1");
    }
}
