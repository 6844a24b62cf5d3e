//! Command-line front end: plan lattice deployments, tabulate the
//! coverage-to-spacing relationship, verify concrete deployments, sweep
//! spacings against sampled coverage, and render SVG pictures.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use covplan::coverage::format_sig;
use covplan::{
    alpha_of_spacing, build_comm_graph, build_lookup_table, estimate_coverage_fraction,
    generate_triangular_lattice, plan_deployment, render_svg, Deployment, SampleMode,
    SensingField, Window, SQRT_3,
};

/// Exit code for a deployment that failed verification (as opposed to a
/// usage or I/O problem, which exits 2).
const EXIT_VERIFICATION_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "covplan",
    version,
    about = "Plan and verify triangular-lattice sensor deployments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the spacing and communication radius for a coverage target and
    /// generate the node placement
    Plan(PlanArgs),
    /// Tabulate spacing and communication radius over a grid of coverage
    /// targets
    Table(TableArgs),
    /// Estimate the coverage of a deployment and check its connectivity
    Verify(VerifyArgs),
    /// Compare analytic and sampled coverage over a range of spacings
    Sweep(SweepArgs),
    /// Render a deployment as SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct PlanArgs {
    /// Target coverage fraction in (0,1]
    #[arg(long)]
    alpha: f64,
    /// Sensing radius
    #[arg(long)]
    rs: f64,
    /// Field size as WIDTHxHEIGHT, e.g. 40x30
    #[arg(long)]
    field: String,
    /// Mark the node nearest the field center as base station
    #[arg(long)]
    base_station: bool,
    /// Output format: the full plan as JSON, or the node list as CSV
    #[arg(long, value_enum, default_value = "json")]
    format: PlanFormat,
    /// Write here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlanFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    /// Coverage targets as MIN:MAX:STEP, e.g. 0.1:1.0:0.05
    #[arg(long)]
    grid: String,
    /// Sensing radius
    #[arg(long)]
    rs: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// Write here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Deployment JSON file (a plan file works too: its embedded
    /// deployment is used)
    #[arg(long, conflicts_with_all = ["spacing", "field", "rs"])]
    deployment: Option<PathBuf>,
    /// Lattice spacing, for generating the deployment on the fly
    #[arg(long, requires = "field", requires = "rs")]
    spacing: Option<f64>,
    /// Field size as WIDTHxHEIGHT
    #[arg(long)]
    field: Option<String>,
    /// Sensing radius
    #[arg(long)]
    rs: Option<f64>,
    /// Communication radius to check connectivity at
    #[arg(long)]
    rc: f64,
    /// Coverage target the estimate must reach (within its confidence
    /// interval) for verification to pass
    #[arg(long)]
    alpha: Option<f64>,
    /// Monte Carlo sample count, or grid points per axis in grid mode
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Part of the field to sample
    #[arg(long, value_enum, default_value = "interior")]
    window: WindowArg,
    /// Sampling strategy
    #[arg(long, value_enum, default_value = "monte-carlo")]
    mode: ModeArg,
    /// Write the report here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WindowArg {
    Interior,
    FullField,
}

impl From<WindowArg> for Window {
    fn from(w: WindowArg) -> Self {
        match w {
            WindowArg::Interior => Window::Interior,
            WindowArg::FullField => Window::FullField,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    MonteCarlo,
    Grid,
}

impl From<ModeArg> for SampleMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::MonteCarlo => SampleMode::MonteCarlo,
            ModeArg::Grid => SampleMode::Grid,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Spacing range in units of the sensing radius, as MIN:MAX:STEP
    #[arg(long)]
    range: String,
    /// Sensing radius
    #[arg(long)]
    rs: f64,
    /// Field size as WIDTHxHEIGHT; defaults per spacing to a field whose
    /// interior window spans whole lattice periods
    #[arg(long)]
    field: Option<String>,
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the CSV here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Deployment JSON file (or a plan file; its deployment is used)
    #[arg(long, conflicts_with_all = ["spacing", "alpha", "field", "rs"])]
    deployment: Option<PathBuf>,
    /// Lattice spacing, for rendering a generated deployment
    #[arg(long, requires = "field", requires = "rs", conflicts_with = "alpha")]
    spacing: Option<f64>,
    /// Coverage target; the spacing is solved first
    #[arg(long, requires = "field", requires = "rs")]
    alpha: Option<f64>,
    /// Field size as WIDTHxHEIGHT
    #[arg(long)]
    field: Option<String>,
    /// Sensing radius
    #[arg(long)]
    rs: Option<f64>,
    /// Draw communication links at this radius
    #[arg(long)]
    rc: Option<f64>,
    /// Write the SVG here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// The report `verify` prints; field order is the documented key order.
#[derive(Serialize)]
struct VerifyReport {
    alpha_hat: f64,
    n: usize,
    ci95: f64,
    connected: bool,
    components: usize,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Plan(args) => cmd_plan(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Render(args) => cmd_render(args),
    }
}

fn cmd_plan(args: PlanArgs) -> Result<i32, String> {
    let (width, height) = parse_field(&args.field)?;
    let field = SensingField::new(width, height).map_err(|e| e.to_string())?;
    let mut plan = plan_deployment(&field, args.alpha, args.rs).map_err(|e| e.to_string())?;
    if args.base_station {
        plan.deployment = plan.deployment.clone().with_base_station();
    }
    let content = match args.format {
        PlanFormat::Json => {
            let mut json = plan.to_json();
            json.push('\n');
            json
        }
        PlanFormat::Csv => plan.deployment.to_csv(),
    };
    emit(args.output.as_deref(), &content)?;
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<i32, String> {
    let alphas = parse_range(&args.grid)?;
    let table = build_lookup_table(&alphas, args.rs).map_err(|e| e.to_string())?;
    let content = match args.format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => {
            let mut json = table.to_json();
            json.push('\n');
            json
        }
    };
    emit(args.output.as_deref(), &content)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, String> {
    if let Some(alpha) = args.alpha {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(format!("alpha must be in (0,1] (got {alpha})"));
        }
    }
    let deployment = resolve_deployment(
        args.deployment.as_deref(),
        args.spacing,
        None,
        args.field.as_deref(),
        args.rs,
    )?;
    let estimate = estimate_coverage_fraction(
        &deployment,
        args.mode.into(),
        args.window.into(),
        args.samples,
        args.seed,
    )
    .map_err(|e| e.to_string())?;
    let graph = build_comm_graph(&deployment, args.rc).map_err(|e| e.to_string())?;
    let report = VerifyReport {
        alpha_hat: estimate.fraction,
        n: estimate.sample_count,
        ci95: estimate.half_width_95,
        connected: graph.is_connected(),
        components: graph.component_count(),
    };
    let mut content = serde_json::to_string_pretty(&report).expect("report serializes");
    content.push('\n');
    emit(args.output.as_deref(), &content)?;
    let coverage_ok = args
        .alpha
        .is_none_or(|alpha| report.alpha_hat + report.ci95 >= alpha);
    if report.connected && coverage_ok {
        Ok(0)
    } else {
        Ok(EXIT_VERIFICATION_FAILED)
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<i32, String> {
    let ratios = parse_range(&args.range)?;
    let rs = args.rs;
    let fixed_field = args
        .field
        .as_deref()
        .map(|spec| -> Result<SensingField, String> {
            let (w, h) = parse_field(spec)?;
            SensingField::new(w, h).map_err(|e| e.to_string())
        })
        .transpose()?;
    let mut content = String::from("d_over_Rs,alpha_analytic,alpha_hat,ci95\n");
    for d_over_rs in ratios {
        let spacing = d_over_rs * rs;
        let analytic = alpha_of_spacing(spacing, rs).map_err(|e| e.to_string())?;
        let field = match fixed_field {
            Some(f) => f,
            None => default_sweep_field(spacing)?,
        };
        let deployment =
            generate_triangular_lattice(&field, spacing, rs).map_err(|e| e.to_string())?;
        let estimate = estimate_coverage_fraction(
            &deployment,
            SampleMode::MonteCarlo,
            Window::Interior,
            args.samples,
            args.seed,
        )
        .map_err(|e| e.to_string())?;
        content.push_str(&format!(
            "{},{},{},{}\n",
            format_sig(d_over_rs, 12),
            format_sig(analytic, 12),
            format_sig(estimate.fraction, 12),
            format_sig(estimate.half_width_95, 12),
        ));
    }
    emit(args.output.as_deref(), &content)?;
    Ok(0)
}

/// Field used by `sweep` when none is given: 24 spacings wide and
/// `4 + 12*sqrt(3)` spacings tall, so the interior window (two spacings in
/// from each side) is 20 spacings by `12*sqrt(3)` spacings — whole numbers
/// of lattice periods along both axes, which keeps the sampled fraction
/// free of partial-period bias.
fn default_sweep_field(spacing: f64) -> Result<SensingField, String> {
    let width = 24.0 * spacing;
    let height = (4.0 + 12.0 * SQRT_3) * spacing;
    SensingField::new(width, height).map_err(|e| e.to_string())
}

fn cmd_render(args: RenderArgs) -> Result<i32, String> {
    let deployment = resolve_deployment(
        args.deployment.as_deref(),
        args.spacing,
        args.alpha,
        args.field.as_deref(),
        args.rs,
    )?;
    let svg = render_svg(&deployment, args.rc).map_err(|e| e.to_string())?;
    emit(args.output.as_deref(), &svg)?;
    Ok(0)
}

/// Builds the deployment a command operates on, from a file, an explicit
/// spacing, or a coverage target.
fn resolve_deployment(
    file: Option<&Path>,
    spacing: Option<f64>,
    alpha: Option<f64>,
    field_spec: Option<&str>,
    rs: Option<f64>,
) -> Result<Deployment, String> {
    if let Some(path) = file {
        return load_deployment_file(path);
    }
    let field_spec =
        field_spec.ok_or("provide --deployment, or --field together with --rs")?;
    let rs = rs.ok_or("provide --rs along with --field")?;
    let (w, h) = parse_field(field_spec)?;
    let field = SensingField::new(w, h).map_err(|e| e.to_string())?;
    if let Some(spacing) = spacing {
        return generate_triangular_lattice(&field, spacing, rs).map_err(|e| e.to_string());
    }
    if let Some(alpha) = alpha {
        let plan = plan_deployment(&field, alpha, rs).map_err(|e| e.to_string())?;
        return Ok(plan.deployment);
    }
    Err("provide --deployment, --spacing, or --alpha to define the deployment".into())
}

/// Reads a deployment file. Plan files are accepted as well; their
/// embedded deployment object is used.
fn load_deployment_file(path: &Path) -> Result<Deployment, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| format!("malformed JSON in {}: {e}", path.display()))?;
    let deployment_value = match value.get("deployment") {
        Some(sub) => sub.clone(),
        None => value,
    };
    Deployment::from_json(&deployment_value.to_string())
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses `WIDTHxHEIGHT` (e.g. `40x30`).
fn parse_field(spec: &str) -> Result<(f64, f64), String> {
    let err = || format!("field must look like WIDTHxHEIGHT, e.g. 40x30 (got {spec:?})");
    let (w, h) = spec
        .split_once(&['x', 'X'][..])
        .ok_or_else(err)?;
    let width: f64 = w.trim().parse().map_err(|_| err())?;
    let height: f64 = h.trim().parse().map_err(|_| err())?;
    if width <= 0.0 || height <= 0.0 || !width.is_finite() || !height.is_finite() {
        return Err(err());
    }
    Ok((width, height))
}

/// Parses `MIN:MAX:STEP` into the inclusive sequence `min, min+step, ...`.
/// The last value is snapped exactly to `max` when a whole number of steps
/// lands there (up to rounding).
fn parse_range(spec: &str) -> Result<Vec<f64>, String> {
    let err = || format!("range must look like MIN:MAX:STEP, e.g. 0.1:1.0:0.05 (got {spec:?})");
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(err());
    }
    let min: f64 = parts[0].trim().parse().map_err(|_| err())?;
    let max: f64 = parts[1].trim().parse().map_err(|_| err())?;
    let step: f64 = parts[2].trim().parse().map_err(|_| err())?;
    if !min.is_finite() || !max.is_finite() || step <= 0.0 || !step.is_finite() || max < min {
        return Err(err());
    }
    let count = ((max - min) / step + 1e-9).floor() as usize;
    if count > 1_000_000 {
        return Err(format!("range {spec:?} expands to more than a million steps"));
    }
    let mut values = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let mut v = min + i as f64 * step;
        if (v - max).abs() <= step * 1e-9 {
            v = max;
        }
        values.push(v);
    }
    Ok(values)
}

/// Prints to stdout, or writes the file via a temporary sibling so a failed
/// run never leaves a partial file behind.
fn emit(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            fs::write(&tmp, content)
                .map_err(|e| format!("cannot write {}: {e}", tmp.display()))?;
            fs::rename(&tmp, path).map_err(|e| {
                let _ = fs::remove_file(&tmp);
                format!("cannot write {}: {e}", path.display())
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_parsing() {
        assert_eq!(parse_field("20x20").unwrap(), (20.0, 20.0));
        assert_eq!(parse_field("40X30.5").unwrap(), (40.0, 30.5));
        assert!(parse_field("20").is_err());
        assert!(parse_field("x20").is_err());
        assert!(parse_field("20x").is_err());
        assert!(parse_field("-5x10").is_err());
        assert!(parse_field("0x10").is_err());
        assert!(parse_field("axb").is_err());
    }

    #[test]
    fn range_parsing_hits_both_endpoints() {
        let values = parse_range("0.1:0.9:0.1").unwrap();
        assert_eq!(values.len(), 9);
        assert_eq!(values[0], 0.1);
        assert_eq!(*values.last().unwrap(), 0.9);
        let values = parse_range("0.5:1.0:0.1").unwrap();
        assert_eq!(values.len(), 6);
        assert_eq!(*values.last().unwrap(), 1.0);
    }

    #[test]
    fn range_parsing_drops_overshoot() {
        // 0.25 does not divide 0.9; the sequence stops inside the range.
        let values = parse_range("0.1:1.0:0.25").unwrap();
        assert_eq!(values.len(), 4);
        assert_eq!(*values.last().unwrap(), 0.85);
    }

    #[test]
    fn range_parsing_single_point() {
        let values = parse_range("0.5:0.5:0.1").unwrap();
        assert_eq!(values, vec![0.5]);
    }

    #[test]
    fn range_parsing_rejects_malformed_specs() {
        for bad in ["", "1:2", "1:2:3:4", "a:b:c", "0.5:0.4:0.1", "0.1:0.9:0", "0.1:0.9:-1"] {
            assert!(parse_range(bad).is_err(), "accepted {bad:?}");
        }
    }
}
