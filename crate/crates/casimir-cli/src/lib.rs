//! Command-line front end: single computations, mass scans, root tables,
//! and self-check suites, with machine-readable CSV/JSON output.

mod checks;
mod config;
mod format;

pub use checks::{run_suite, CheckOutcome, SUITE_NAMES};
pub use config::Config;
pub use format::{sig12, Metadata, ScanResult, ScanRow};

use casimir_core::energy::{
    casimir_coefficient, mu_from_mass_ev, series_coefficient, to_physical, EnergyError,
};
use casimir_core::models::{BoundaryModel, CATALOG_NAMES};
use casimir_core::quadrature::QuadratureSpec;
use casimir_core::roots::find_roots;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_TOLERANCE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "casimir",
    about = "Casimir energies for parallel flat surfaces via the log-kernel integral",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the energy coefficient e(mu) for one model and mass.
    Compute(ComputeArgs),
    /// Tabulate e(mu) over a mass range.
    Scan(ScanArgs),
    /// Print the root table of a model's eigencondition.
    Roots(RootsArgs),
    /// Run the self-check suites.
    Check(CheckArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Model name (mit, dirichlet, neumann, mixed-dn, robin, periodic,
    /// antiperiodic, em).
    #[arg(long)]
    model: Option<String>,
    /// First Robin length in units of the separation.
    #[arg(long)]
    beta1: Option<f64>,
    /// Second Robin length in units of the separation.
    #[arg(long)]
    beta2: Option<f64>,
    /// Optional key=value config file presetting model parameters.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Dimensionless mass mu = m*l.
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Relative tolerance for the kernel integral.
    #[arg(long)]
    tol: Option<f64>,
    /// Output format: text, json, or csv.
    #[arg(long, default_value = "text")]
    format: String,
    /// Also report the physical energy for a concrete geometry.
    #[arg(long)]
    physical: bool,
    /// Plate separation in meters (with --physical).
    #[arg(long)]
    length: Option<f64>,
    /// Plate area in square meters (with --physical).
    #[arg(long)]
    area: Option<f64>,
    /// Field mass in eV/c^2 (with --physical; overrides --mu).
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Mass range lo:hi:step.
    #[arg(long = "mu-range")]
    mu_range: String,
    /// Relative tolerance for the kernel integral.
    #[arg(long)]
    tol: Option<f64>,
    /// Output format: csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Add the series-oracle cross-check columns (constant-reflection
    /// models only).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Dimensionless mass mu = m*l.
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Upper end of the root search interval.
    #[arg(long, default_value_t = 100.0)]
    cutoff: f64,
    /// Bisection tolerance.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite: all, mittag-leffler, closed-forms, oracles, or asymptotics.
    #[arg(long, default_value = "all")]
    suite: String,
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Roots(args) => cmd_roots(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_config(args: &ModelArgs) -> Result<Config, String> {
    match &args.config {
        Some(path) => Config::load(path),
        None => Ok(Config::default()),
    }
}

/// Resolve the model from flags and config file; flags win.
fn resolve_model(args: &ModelArgs, cfg: &Config, mu: Option<f64>) -> Result<BoundaryModel, String> {
    let name = args
        .model
        .clone()
        .or_else(|| cfg.get("model").map(String::from))
        .ok_or_else(|| format!("--model is required (one of: {})", CATALOG_NAMES.join(", ")))?;
    let mut model = BoundaryModel::by_name(&name).map_err(|e| e.to_string())?;

    let mu = match mu {
        Some(m) => Some(m),
        None => cfg.get_f64("mu")?,
    };
    if let Some(mu) = mu {
        if mu < 0.0 {
            return Err("mu must be >= 0".to_string());
        }
        model = model.with_mu(mu).map_err(|e| e.to_string())?;
    }

    let b1 = args.beta1.map(Ok).unwrap_or_else(|| cfg.get_f64("beta1").map(|o| o.unwrap_or(0.0)))?;
    let b2 = args.beta2.map(Ok).unwrap_or_else(|| cfg.get_f64("beta2").map(|o| o.unwrap_or(0.0)))?;
    if model.kind() == casimir_core::models::ModelKind::Robin {
        model = model.with_robin_params(b1, b2).map_err(|e| e.to_string())?;
    } else if args.beta1.is_some() || args.beta2.is_some() {
        return Err("--beta1/--beta2 only apply to the robin model".to_string());
    }
    Ok(model)
}

fn quad_spec(tol: Option<f64>, cfg: &Config) -> Result<QuadratureSpec, String> {
    let mut spec = QuadratureSpec::default();
    let tol = match tol {
        Some(t) => Some(t),
        None => cfg.get_f64("tol")?,
    };
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err("tol must be > 0".to_string());
        }
        spec.rel_tol = t;
    }
    Ok(spec)
}

fn cmd_compute(args: ComputeArgs) -> Result<i32, String> {
    let cfg = load_config(&args.model)?;
    let spec = quad_spec(args.tol, &cfg)?;

    if args.physical && (args.length.is_none() || args.area.is_none()) {
        return Err("--physical requires --length and --area".to_string());
    }

    // a physical mass overrides the dimensionless one
    let mu = match (args.mass, args.length) {
        (Some(mass_ev), Some(length)) => Some(mu_from_mass_ev(mass_ev, length)),
        (Some(_), None) => return Err("--mass requires --length".to_string()),
        _ => args.mu,
    };

    let model = resolve_model(&args.model, &cfg, mu)?;
    let coeff = match casimir_coefficient(&model, &spec) {
        Ok(c) => c,
        Err(EnergyError::Quadrature(t)) => {
            eprintln!("tolerance not met: {t}");
            return Ok(EXIT_TOLERANCE);
        }
        Err(e) => return Err(e.to_string()),
    };

    let physical = if args.physical {
        let length = args.length.unwrap();
        let area = args.area.unwrap();
        Some(to_physical(coeff.e, length, area).map_err(|e| e.to_string())?)
    } else {
        None
    };

    let meta = Metadata::new(model.name(), spec.rel_tol, spec.abs_tol);
    match args.format.as_str() {
        "text" => {
            println!("model = {}", coeff.model);
            println!("mu    = {}", sig12(coeff.mu));
            println!("e     = {}", sig12(coeff.e));
            println!("err   = {}", sig12(coeff.err));
            if let Some(p) = &physical {
                println!("separation = {} m", sig12(p.separation_m));
                println!("area       = {} m^2", sig12(p.area_m2));
                println!("energy     = {} J = {} eV", sig12(p.energy_joules), sig12(p.energy_ev));
                println!("constants  = {}", p.constants_provenance);
            }
        }
        "csv" => {
            if physical.is_some() {
                println!("model,mu,e,err,energy_joules,energy_ev");
                let p = physical.as_ref().unwrap();
                println!(
                    "{},{},{},{},{},{}",
                    coeff.model,
                    sig12(coeff.mu),
                    sig12(coeff.e),
                    sig12(coeff.err),
                    sig12(p.energy_joules),
                    sig12(p.energy_ev)
                );
            } else {
                println!("model,mu,e,err");
                println!(
                    "{},{},{},{}",
                    coeff.model,
                    sig12(coeff.mu),
                    sig12(coeff.e),
                    sig12(coeff.err)
                );
            }
        }
        "json" => {
            let phys = physical
                .as_ref()
                .map(|p| {
                    format!(
                        ",\"energy_joules\":{},\"energy_ev\":{},\"separation_m\":{},\"area_m2\":{}",
                        sig12(p.energy_joules),
                        sig12(p.energy_ev),
                        sig12(p.separation_m),
                        sig12(p.area_m2)
                    )
                })
                .unwrap_or_default();
            println!(
                "{{\"model\":\"{}\",\"mu\":{},\"e\":{},\"err\":{}{},\"metadata\":{}}}",
                coeff.model,
                sig12(coeff.mu),
                sig12(coeff.e),
                sig12(coeff.err),
                phys,
                meta.json_object()
            );
        }
        other => return Err(format!("unknown format '{other}' (text, json, csv)")),
    }
    Ok(EXIT_OK)
}

fn parse_mu_range(range: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err("--mu-range must be lo:hi:step".to_string());
    }
    let lo: f64 = parts[0].parse().map_err(|_| "invalid lo in --mu-range".to_string())?;
    let hi: f64 = parts[1].parse().map_err(|_| "invalid hi in --mu-range".to_string())?;
    let step: f64 = parts[2].parse().map_err(|_| "invalid step in --mu-range".to_string())?;
    if step <= 0.0 {
        return Err("step must be > 0".to_string());
    }
    if lo < 0.0 || hi < lo {
        return Err("need 0 <= lo <= hi".to_string());
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + step * i as f64).collect())
}

fn cmd_scan(args: ScanArgs) -> Result<i32, String> {
    let cfg = load_config(&args.model)?;
    let spec = quad_spec(args.tol, &cfg)?;
    let mus = parse_mu_range(&args.mu_range)?;
    let model = resolve_model(&args.model, &cfg, None)?;

    if args.oracle && model.constant_reflection().is_none() {
        return Err(format!(
            "--oracle requires a constant-reflection model; '{}' has a z-dependent kernel",
            model.name()
        ));
    }

    let mut rows = Vec::with_capacity(mus.len());
    let mut tolerance_failed = false;
    for &mu in &mus {
        let m = model.clone().with_mu(mu).map_err(|e| e.to_string())?;
        let (e, err) = match casimir_coefficient(&m, &spec) {
            Ok(c) => (c.e, c.err),
            Err(EnergyError::Quadrature(t)) => {
                tolerance_failed = true;
                (t.value, t.error_estimate)
            }
            Err(e) => return Err(e.to_string()),
        };
        let (oracle_e, oracle_dev) = if args.oracle {
            let s = series_coefficient(&m, 200).map_err(|e| e.to_string())?;
            (Some(s), Some((e - s).abs()))
        } else {
            (None, None)
        };
        rows.push(ScanRow {
            mu,
            e,
            err,
            oracle_e,
            oracle_dev,
        });
    }

    let result = ScanResult {
        rows,
        metadata: Metadata::new(model.name(), spec.rel_tol, spec.abs_tol),
    };
    match args.format.as_str() {
        "csv" => print!("{}", result.to_csv()),
        "json" => println!("{}", result.to_json()),
        other => return Err(format!("unknown format '{other}' (csv, json)")),
    }
    Ok(if tolerance_failed { EXIT_TOLERANCE } else { EXIT_OK })
}

fn cmd_roots(args: RootsArgs) -> Result<i32, String> {
    let cfg = load_config(&args.model)?;
    let model = resolve_model(&args.model, &cfg, args.mu)?;
    let list = find_roots(&model, args.cutoff, args.tol).map_err(|e| e.to_string())?;

    println!("index,bracket_lo,bracket_hi,root,residual");
    for (i, (root, &(lo, hi))) in list.roots().iter().zip(list.brackets()).enumerate() {
        let residual = model.eigencondition(*root);
        println!(
            "{},{},{},{},{}",
            i + 1,
            sig12(lo),
            sig12(hi),
            sig12(*root),
            sig12(residual)
        );
    }
    Ok(EXIT_OK)
}

fn cmd_check(args: CheckArgs) -> Result<i32, String> {
    let outcomes = run_suite(&args.suite).ok_or_else(|| {
        format!(
            "unknown suite '{}' (all, {})",
            args.suite,
            SUITE_NAMES.join(", ")
        )
    })?;
    let mut all_passed = true;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        all_passed &= o.passed;
        println!("{status} {} [{}]", o.name, o.detail);
    }
    println!(
        "{}: {}/{} checks passed",
        if all_passed { "OK" } else { "FAILED" },
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Ok(if all_passed { EXIT_OK } else { EXIT_USAGE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_range_row_count() {
        assert_eq!(parse_mu_range("0:2:1").unwrap(), vec![0.0, 1.0, 2.0]);
        assert_eq!(parse_mu_range("0:2:0.1").unwrap().len(), 21);
        assert!(parse_mu_range("0:2:0").is_err());
        assert!(parse_mu_range("2:0:1").is_err());
        assert!(parse_mu_range("0:2").is_err());
    }
}
