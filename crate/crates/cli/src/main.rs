//! Command-line interface: verification suites, contraction limits, Poisson
//! homogeneous space checks, and catalog export.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage or structural
//! error.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use drinfeld::catalog;
use drinfeld::contraction::{auto_scale, contract_algebra, scaled_limit};
use drinfeld::error::Error;
use drinfeld::homspace::{charts, fit_bracket, verify_phs, SamplePlan};
use drinfeld::scalar::Var;
use drinfeld::schema;

use drinfeld_cli::report::VerificationReport;
use drinfeld_cli::suites::{run_suite, SuiteOptions, SUITES};

#[derive(Parser)]
#[command(
    name = "drinfeld",
    version,
    about = "Lie bialgebras, Drinfel'd doubles, r-matrices, contraction limits and Poisson homogeneous spaces",
    long_about = None,
    after_help = "Defaults: --seed 53712 (0xD1D0), --tol 1e-9 (override with the DRINFELD_TOL \
                  environment variable), 100 sample points per numeric check."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum DataFormat {
    Toml,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: euclid | poincare | so31-contraction | all
    Suite {
        /// Suite name
        name: String,
        /// Output format
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// RNG seed for the sampling plans
        #[arg(long, default_value_t = 0xD1D0)]
        seed: u64,
        /// Numeric tolerance (default 1e-9 or DRINFELD_TOL)
        #[arg(long)]
        tol: Option<f64>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Contract a catalog entry to its flat limit (kappa -> 0)
    Contract {
        /// Catalog id of an r-matrix or algebra, e.g. so31.caseA
        entry: String,
        /// Power of kappa to multiply by first: an integer or `auto`
        #[arg(long, default_value = "auto")]
        scale: String,
        /// Output format for the contracted object
        #[arg(long, value_enum, default_value = "json")]
        format: DataFormat,
    },
    /// Check a Poisson homogeneous space bracket table
    Phs {
        /// Catalog id of the r-matrix, e.g. euclid3.classII or poincare21.case1
        #[arg(long)]
        case: String,
        /// Parameter bindings, e.g. --param alpha=1 --param rho=0
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Number of sample points
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0xD1D0)]
        seed: u64,
        /// Numeric tolerance (default 1e-9 or DRINFELD_TOL)
        #[arg(long)]
        tol: Option<f64>,
        /// Also fit the bracket table from samples and report it
        #[arg(long)]
        fit: bool,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Export a catalog entry in the exchange schema
    Export {
        /// Catalog id
        entry: String,
        /// Output format
        #[arg(long, value_enum, default_value = "toml")]
        format: DataFormat,
    },
    /// List catalog ids, optionally filtered by prefix
    List {
        /// Id prefix filter
        prefix: Option<String>,
        /// Show the entry parameters with their range restrictions
        #[arg(long)]
        params: bool,
    },
}

fn default_tol(cli_tol: Option<f64>) -> f64 {
    cli_tol
        .or_else(|| {
            std::env::var("DRINFELD_TOL")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1e-9)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn write_out(out: Option<std::path::PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| Error::Structural(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Error::Structural(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Suite {
            name,
            format,
            seed,
            tol,
            out,
        } => {
            if !SUITES.contains(&name.as_str()) {
                return Err(Error::Structural(format!(
                    "unknown suite `{name}` (expected euclid | poincare | so31-contraction | all)"
                )));
            }
            let opts = SuiteOptions {
                seed,
                tol: default_tol(tol),
            };
            let report: VerificationReport = run_suite(&name, &opts)?;
            let rendered = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Text => report.render_text(),
            };
            write_out(out, &rendered)?;
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Contract {
            entry,
            scale,
            format,
        } => {
            let rendered = contract_command(&entry, &scale, format)?;
            write_out(None, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Phs {
            case,
            params,
            points,
            seed,
            tol,
            fit,
            out,
        } => {
            let (report, pass) = phs_command(&case, &params, points, seed, default_tol(tol), fit)?;
            write_out(out, &report)?;
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Export { entry, format } => {
            let e = catalog::get(&entry)?;
            let doc = schema::export_entry(&e)?;
            let rendered = match format {
                DataFormat::Toml => schema::to_toml(&doc)?,
                DataFormat::Json => schema::to_json(&doc)?,
            };
            write_out(None, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::List { prefix, params } => {
            let ids = catalog::list(prefix.as_deref());
            if !params {
                write_out(None, &(ids.join("\n") + "\n"))?;
                return Ok(ExitCode::SUCCESS);
            }
            let constraints: std::collections::BTreeMap<String, &str> =
                catalog::parameter_constraints()
                    .into_iter()
                    .map(|(v, note)| (v.name(), note))
                    .collect();
            let mut out = String::new();
            for id in ids {
                let entry = catalog::get(&id)?;
                out.push_str(&id);
                for p in &entry.params {
                    let name = p.name();
                    let note = constraints.get(&name).copied().unwrap_or("free");
                    out.push_str(&format!("\n    {name}: {note}"));
                }
                out.push('\n');
            }
            write_out(None, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn contract_command(entry: &str, scale: &str, format: DataFormat) -> Result<String, Error> {
    let kappa = Var::new("kappa");
    let e = catalog::get(entry)?;
    let render = |doc: &schema::Document| -> Result<String, Error> {
        match format {
            DataFormat::Toml => schema::to_toml(doc),
            DataFormat::Json => schema::to_json(doc),
        }
    };
    let provenance = |n: i64| {
        serde_json::json!({
            "source": entry,
            "operation": "flat limit kappa -> 0",
            "kappa_power": n,
        })
    };
    if let Ok(r) = e.r_matrix() {
        let (n, limit) = match scale {
            "auto" => auto_scale(&r, kappa)?,
            s => {
                let n: i64 = s.parse().map_err(|_| {
                    Error::Structural(format!("--scale expects an integer or `auto`, got `{s}`"))
                })?;
                (n, scaled_limit(&r, kappa, n)?)
            }
        };
        // the limit lives over the contracted algebra
        let host = e.host_algebra().unwrap_or("euclid3");
        let target = if host == "so31" { "euclid3" } else { host };
        let basis = catalog::get(target)?.algebra()?.basis().to_vec();
        let doc = schema::Document::RMatrix(schema::RMatrixDoc::from_bivector(
            target, &basis, &e.params, &limit,
        ));
        return Ok(format!(
            "{}\n// provenance: {}\n",
            render(&doc)?,
            provenance(n)
        ));
    }
    if let Ok(la) = e.algebra() {
        if scale != "auto" && scale != "0" {
            return Err(Error::Structural(
                "algebras contract at scale 0 only".into(),
            ));
        }
        let contracted = contract_algebra(&la, kappa, &format!("{}.contracted", la.name()))?;
        let doc = schema::Document::LieAlgebra(schema::AlgebraDoc::from_algebra(&contracted));
        return Ok(format!(
            "{}\n// provenance: {}\n",
            render(&doc)?,
            provenance(0)
        ));
    }
    Err(Error::Structural(format!(
        "entry `{entry}` is neither an r-matrix nor an algebra"
    )))
}

fn phs_command(
    case: &str,
    params: &[String],
    points: usize,
    seed: u64,
    tol: f64,
    fit: bool,
) -> Result<(String, bool), Error> {
    let entry = catalog::get(case)?;
    let r = entry
        .r_matrix()
        .map_err(|_| Error::Structural(format!("`{case}` is not an r-matrix entry")))?;
    let host = entry
        .host_algebra()
        .ok_or_else(|| Error::Structural("r-matrix without host algebra".into()))?
        .to_string();
    let chart = match host.as_str() {
        "euclid3" => charts::euclid3_chart()?,
        "poincare21" => charts::poincare21_chart()?,
        other => {
            return Err(Error::Structural(format!(
                "no group chart for algebra `{other}`"
            )))
        }
    };
    // parameter bindings: DD presets first, then user overrides
    let mut binding: BTreeMap<Var, f64> = BTreeMap::new();
    if let Some(case_no) = case
        .strip_prefix("poincare21.case")
        .and_then(|s| s.parse::<usize>().ok())
    {
        for (v, x) in catalog::dd_preset(case_no) {
            binding.insert(v, x);
        }
    }
    for kv in params {
        let (name, value) = kv
            .split_once('=')
            .ok_or_else(|| Error::Structural(format!("--param expects NAME=VALUE, got `{kv}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Structural(format!("`{value}` is not a number")))?;
        binding.insert(Var::new(name.trim()), value);
    }
    // default any remaining declared parameters to zero
    for p in &entry.params {
        binding.entry(*p).or_insert(0.0);
    }
    let plan = SamplePlan { points, seed, tol };
    let target_id = format!("{case}.phs");
    let target = match catalog::get(&target_id) {
        Ok(t) => Some(t.poisson_target()?),
        Err(_) => None,
    };
    let phs_report = match &target {
        Some(t) => Some(verify_phs(&chart, &r, &binding, t, &plan)?),
        None => None,
    };
    let fitted = if fit || target.is_none() {
        let coords: Vec<String> = chart
            .coord_names()
            .into_iter()
            .filter(|n| n.starts_with('x'))
            .collect();
        match fit_bracket(&chart, &r, &binding, &coords, 2, &plan) {
            Ok(f) => Some(f),
            Err(Error::NotPolynomial { degree, residual }) => {
                let json = serde_json::json!({
                    "case": case,
                    "error": format!("bracket not polynomial of degree <= {degree}"),
                    "residual": residual,
                });
                return Ok((serde_json::to_string_pretty(&json).unwrap(), false));
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let pass = phs_report.as_ref().map(|r| r.pass).unwrap_or(true);
    let json = serde_json::json!({
        "case": case,
        "chart": host,
        "seed": seed,
        "tol": tol,
        "params": binding
            .iter()
            .map(|(v, x)| (v.name(), *x))
            .collect::<BTreeMap<String, f64>>(),
        "verification": phs_report,
        "fitted": fitted.map(|f| serde_json::json!({
            "table": f.display(),
            "residual": f.residual,
            "antisymmetric": true,
            "jacobiator_vanishes": f.rationalized.jacobiator().is_empty(),
        })),
        "pass": pass,
    });
    Ok((serde_json::to_string_pretty(&json).unwrap(), pass))
}
