use clap::{Args, Parser, Subcommand, ValueEnum};
use parabolic_fourier::bases::MultiIndex;
use parabolic_fourier::eval::{eval_point, parse_complex, parse_params, EvalFn, EvalRequest};
use parabolic_fourier::sweep::{run_sweep, write_report, OutputFormat, SweepConfig, Tolerances};
use parabolic_fourier::verifier::{ComplexValue, IdentityId};
use parabolic_fourier::{Error, C64};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Numerical checks of orthogonality, Fourier closed forms, Parseval
/// constants and contiguous relations.
#[derive(Parser)]
#[command(name = "pfverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch of identity checks and write a report.
    Sweep(SweepArgs),
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Print every identity id with a one-line description.
    ListIdentities,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat JSON config; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// One tolerance for every family.
    #[arg(long)]
    tol: Option<f64>,
    /// Dimensions, e.g. 1,2.
    #[arg(long, value_delimiter = ',')]
    d: Option<Vec<usize>>,
    /// Total-degree cap for the multivariate Gram matrices.
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Zero all timings and omit the timestamp, for byte-identical reruns.
    #[arg(long)]
    no_timestamp: bool,
}

fn parse_fn(s: &str) -> Result<EvalFn, String> {
    s.parse::<EvalFn>().map_err(|e| e.to_string())
}

fn parse_c(s: &str) -> Result<C64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct EvalArgs {
    /// g, hJ, hL, Q, R, A, B, D, fourierJ, fourierL, fourierG, phi, theta, lambda.
    #[arg(long = "fn", value_parser = parse_fn)]
    function: EvalFn,
    /// Dimension; must agree with --k when both are given.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Multi-index, e.g. 1,0 or (1,0).
    #[arg(long)]
    k: Option<String>,
    /// Parameters, e.g. "alpha=0.7,zeta=1.2".
    #[arg(long, default_value = "")]
    params: String,
    /// t, possibly complex ("0.2-0.1i").
    #[arg(long, value_parser = parse_c, allow_hyphen_values = true, default_value = "0")]
    t: C64,
    /// x coordinates, possibly complex.
    #[arg(long, value_parser = parse_c, num_args = 1.., allow_hyphen_values = true)]
    x: Vec<C64>,
    /// Frequencies; for the full transforms the last one pairs with t.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    xi: Vec<f64>,
}

fn sweep(args: SweepArgs) -> Result<i32, Error> {
    let mut cfg = match &args.config {
        Some(p) => SweepConfig::from_file(p)?,
        None => SweepConfig::default(),
    };
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(t) = args.tol {
        cfg.tolerances = Tolerances::uniform(t);
    }
    if let Some(d) = args.d {
        cfg.d = d;
    }
    if let Some(m) = args.max_degree {
        cfg.max_degree = m;
    }
    if let Some(f) = args.format {
        cfg.format = match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
    }
    if args.out.is_some() {
        cfg.out = args.out;
    }
    if args.no_timestamp {
        cfg.timestamp = false;
    }
    let report = run_sweep(&cfg)?;
    write_report(&report, &cfg)?;
    let s = &report.summary;
    eprintln!(
        "{} cases: {} passed, {} failed, {} skipped",
        s.total, s.passed, s.failed, s.skipped
    );
    for (id, n) in &s.failures {
        eprintln!("  {id}: {n} failed");
    }
    Ok(s.exit_code())
}

fn eval(args: EvalArgs) -> Result<i32, Error> {
    let k = args
        .k
        .as_deref()
        .map(str::parse::<MultiIndex>)
        .transpose()?;
    let k = match (k, args.d) {
        (Some(k), Some(d)) if k.dim() != d => {
            return Err(Error::Parse(format!(
                "--k has {} entries but --d is {d}",
                k.dim()
            )));
        }
        (Some(k), _) => k,
        (None, d) => MultiIndex::zeros(d.unwrap_or(1)),
    };
    let req = EvalRequest {
        function: args.function,
        m: args.m,
        k,
        params: parse_params(&args.params)?,
        t: args.t,
        x: args.x,
        xi: args.xi,
    };
    let out = eval_point(&req)?;
    let mut doc = serde_json::json!({
        "fn": req.function.as_str(),
        "value": ComplexValue::from(out.value),
    });
    if let Some(n) = &out.note {
        eprintln!("warning: {n}");
        doc["note"] = serde_json::Value::String(n.clone());
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("plain JSON")
    );
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Eval(a) => eval(a),
        Command::ListIdentities => {
            let mut out = std::io::stdout().lock();
            for id in IdentityId::ALL {
                let line = format!(
                    "{:<22} {:<14} {}",
                    id.as_str(),
                    id.family().as_str(),
                    id.description()
                );
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Parse(_)) {
                eprintln!("usage: pfverify eval --fn <NAME> [--d N] [--m M] [--k K] [--params k=v,...] [--t T] [--x X...] [--xi XI...]");
            }
            ExitCode::from(2)
        }
    }
}
