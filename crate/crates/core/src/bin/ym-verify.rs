//! Command-line front end: validate presets, run the claim audit, sweep
//! beta, or dump pointwise residuals.
//!
//! Exit codes: 0 success, 1 check failure (validation or internal
//! oracle/quadrature gate), 2 malformed configuration.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use ym_verify::ansatz::{paper_presets, AnsatzSpec, PresetField};
use ym_verify::claims::{run_claims, sweep_beta};
use ym_verify::field_calculus::el_residual;
use ym_verify::geometry::Point;
use ym_verify::lie_algebra::{structure_constants, su_generators};
use ym_verify::report::{Report, RunConfig};
use ym_verify::Error;

#[derive(Parser)]
#[command(name = "ym-verify", version, about = "gauge-field ansatz verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// TOML run configuration; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// preset name: paper-single | paper-pair
    #[arg(long)]
    preset: Option<String>,
    /// metric name: minkowski | euclidean-negative
    #[arg(long)]
    metric: Option<String>,
    /// width parameter(s); repeat or comma-separate for sweeps
    #[arg(long, value_delimiter = ',')]
    beta: Vec<f64>,
    /// evaluate the linear forms with x_0 replaced by i x_0
    #[arg(long)]
    x0_rotation: bool,
    /// finite-difference order: 2 | 4
    #[arg(long)]
    scheme_order: Option<usize>,
    /// starting per-axis quadrature order
    #[arg(long)]
    quad_order: Option<usize>,
    /// claim id filter, e.g. C5,C6
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// output path (JSON for claims/residual, CSV for sweep)
    #[arg(long)]
    out: Option<PathBuf>,
    /// seed for randomized property samples
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ansatz parameter conditions and report residuals
    Validate(CommonOpts),
    /// Run the claim audit and emit a JSON report
    Claims(CommonOpts),
    /// Sweep beta and emit a CSV of norm, energy, and ratio
    Sweep(CommonOpts),
    /// Evaluate Euler-Lagrange residuals on a point grid
    Residual(CommonOpts),
}

fn load_config(opts: &CommonOpts) -> Result<RunConfig, Error> {
    let mut cfg = match &opts.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let table: toml::Table = text
                .parse()
                .map_err(|e| Error::InvalidConfig(format!("config parse: {e}")))?;
            // a config file is a complete run spec: beta must come from it
            // or from the flag
            if !table.contains_key("beta") && opts.beta.is_empty() {
                return Err(Error::InvalidConfig("config file is missing beta".into()));
            }
            // an inline spec replaces the defaulted preset unless the file
            // names a preset explicitly
            let spec_only = table.contains_key("spec") && !table.contains_key("preset");
            let mut cfg: RunConfig = table
                .try_into()
                .map_err(|e| Error::InvalidConfig(format!("config parse: {e}")))?;
            if spec_only {
                cfg.preset = None;
            }
            cfg
        }
        None => RunConfig::default(),
    };
    if let Some(p) = &opts.preset {
        cfg.preset = Some(p.clone());
        cfg.spec = None;
    }
    if let Some(m) = &opts.metric {
        cfg.metric = m.clone();
    }
    if !opts.beta.is_empty() {
        cfg.beta = opts.beta.clone();
    }
    if opts.x0_rotation {
        cfg.x0_rotation = true;
    }
    if let Some(o) = opts.scheme_order {
        cfg.scheme_order = o;
    }
    if let Some(q) = opts.quad_order {
        cfg.quad_order = q;
    }
    if !opts.claims.is_empty() {
        cfg.claims = opts.claims.clone();
    }
    if let Some(o) = &opts.out {
        cfg.out = Some(o.clone());
    }
    if let Some(s) = opts.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn build_field(cfg: &RunConfig) -> Result<PresetField, Error> {
    let beta = cfg.beta[0];
    match (&cfg.preset, &cfg.spec) {
        (Some(name), _) => {
            let mut f = paper_presets(name, beta, cfg.s.clone())?;
            if cfg.x0_rotation {
                match &mut f {
                    PresetField::Single(s) => s.x0_rotation = true,
                    PresetField::Pair(p) => {
                        for t in &mut p.terms {
                            t.x0_rotation = true;
                        }
                    }
                }
            }
            Ok(f)
        }
        (None, Some(spec)) => {
            let mut s: AnsatzSpec = spec.clone();
            s.x0_rotation |= cfg.x0_rotation;
            Ok(PresetField::Single(s))
        }
        (None, None) => Err(Error::InvalidConfig("no field specified".into())),
    }
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            // atomic: write to a sibling temp file, then rename
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, content)?;
            std::fs::rename(&tmp, path)?;
        }
        None => println!("{content}"),
    }
    Ok(())
}

fn cmd_validate(opts: &CommonOpts) -> Result<ExitCode, Error> {
    let cfg = load_config(opts)?;
    let field = build_field(&cfg)?;
    let tol = 1e-10;
    let mut all_ok = true;
    for (i, spec) in field.specs().iter().enumerate() {
        let rep = spec.validate_conditions();
        println!("term {}:", i + 1);
        println!("  d3-zero                residual {:.3e}", rep.d3);
        println!("  d-isotropy             residual {:.3e}", rep.d_isotropy);
        for (j, r) in rep.orthogonality.iter().enumerate() {
            println!("  d-alpha-orthogonality  form {} residual {:.3e}", j + 1, r);
        }
        for (j, r) in rep.column.iter().enumerate() {
            println!("  alpha-column           form {} residual {:.3e}", j + 1, r);
        }
        if rep.degenerate {
            println!("  warning: direction vector is identically zero");
        }
        if !rep.el_valid(tol) {
            all_ok = false;
            let mut failing = Vec::new();
            if rep.d3 > tol {
                failing.push("d3-zero".to_string());
            }
            if rep.d_isotropy > tol {
                failing.push("d-isotropy".to_string());
            }
            for (j, r) in rep.orthogonality.iter().enumerate() {
                if *r > tol {
                    failing.push(format!("d-alpha-orthogonality[{}]", j + 1));
                }
            }
            for (j, r) in rep.column.iter().enumerate() {
                if *r > tol {
                    failing.push(format!("alpha-column[{}]", j + 1));
                }
            }
            println!("  FAILED: {}", failing.join(", "));
        }
    }
    println!("{}", if all_ok { "all conditions pass" } else { "conditions violated" });
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_claims(opts: &CommonOpts) -> Result<ExitCode, Error> {
    let cfg = load_config(opts)?;
    let start = Instant::now();
    let params = cfg.claim_params()?;
    let verdicts = run_claims(&cfg.claims, &params)?;
    let report = Report::new(
        cfg.clone(),
        verdicts,
        Vec::new(),
        start.elapsed().as_millis() as u64,
    );
    let gates_ok = report.gates_ok();
    write_or_print(&cfg.out, &report.to_json()?)?;
    if !gates_ok {
        eprintln!("internal oracle/quadrature gate failed; this is a toolkit bug");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(opts: &CommonOpts) -> Result<ExitCode, Error> {
    let cfg = load_config(opts)?;
    if cfg.beta.len() < 3 {
        return Err(Error::InvalidConfig(format!(
            "sweep needs at least 3 beta values, got {}",
            cfg.beta.len()
        )));
    }
    let params = cfg.claim_params()?;
    let norm = sweep_beta("norm", &params, &cfg.beta)?;
    let energy = sweep_beta("energy", &params, &cfg.beta)?;
    let ratio = sweep_beta("ratio", &params, &cfg.beta)?;
    let mut csv = String::from("beta,norm,energy,ratio\n");
    for (i, b) in cfg.beta.iter().enumerate() {
        csv.push_str(&format!(
            "{b},{:.12e},{:.12e},{:.12e}\n",
            norm.values[i], energy.values[i], ratio.values[i]
        ));
    }
    csv.push_str(&format!(
        "exponent,{:.6},{:.6},{:.6}\n",
        norm.fitted_exponent, energy.fitted_exponent, ratio.fitted_exponent
    ));
    write_or_print(&cfg.out, csv.trim_end())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_residual(opts: &CommonOpts) -> Result<ExitCode, Error> {
    let cfg = load_config(opts)?;
    let field = build_field(&cfg)?;
    let f_const = structure_constants(&su_generators(2)?)?;
    let metric = cfg.metric_enum()?;
    let scheme = cfg.scheme();
    let beta = cfg.beta[0];
    let w = 1.0 / beta;
    let mut rows = Vec::new();
    for i in -1i32..=1 {
        for j in -1i32..=1 {
            for k in -1i32..=1 {
                let p = Point::spatial(i as f64 * w, j as f64 * w, k as f64 * w);
                let rep = el_residual(&field, &p, &f_const, metric, &scheme)?;
                rows.push(serde_json::json!({
                    "point": p.0,
                    "max_full": rep.max_full(),
                    "max_reduced": rep.max_reduced(),
                    "field_scale": rep.field_scale,
                    "commutator_norm": rep.commutator_norm,
                }));
            }
        }
    }
    let doc = serde_json::json!({
        "preset": cfg.preset,
        "metric": cfg.metric,
        "beta": beta,
        "scheme_order": cfg.scheme_order,
        "points": rows,
    });
    write_or_print(&cfg.out, &serde_json::to_string_pretty(&doc)?)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(o) => cmd_validate(o),
        Command::Claims(o) => cmd_claims(o),
        Command::Sweep(o) => cmd_sweep(o),
        Command::Residual(o) => cmd_residual(o),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidConfig(_)
                | Error::UnknownPreset(_)
                | Error::UnknownClaim(_)
                | Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
