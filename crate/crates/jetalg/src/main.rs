use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jetalg::checks::{catalog_configs, parse_rat, parse_variant};
use jetalg::report::{render_text, reports_to_json};
use jetalg::{eval_str, run_check, Algebra, CheckConfig, CheckId, Range, Rat, Report, RepChoice};
use jetalg_core::Variant;

/// Exact verification of the structural identities of the vector-field,
/// Weyl, smash-product and jet Lie algebras on the plane with one punctured axis.
#[derive(Parser)]
#[command(name = "jetalg", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one check from the catalog.
    Verify(Box<VerifyArgs>),
    /// Evaluate an expression and print its canonical form.
    Eval {
        /// Target algebra: A, D, g, smash, L or DL.
        #[arg(long = "in", value_parser = parse_algebra)]
        algebra: Algebra,
        /// Expression, e.g. "[X2(0,1), X2(0,2)]".
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the full catalog at default ranges.
    Report {
        /// Run every check (required).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: weyl-assoc, g-jacobi, lemma-3.1, lemma-3.2, lemma-3.3,
    /// lemma-3.4, gl2-lift, thm-2.3-hom, lemma-4.2-roundtrip, jet-axioms,
    /// negative-control.
    check: String,
    /// First exponent range of the first argument [default: -3..3].
    #[arg(long, allow_hyphen_values = true)]
    m1: Option<Range>,
    /// Second exponent range of the first argument [default: 0..3].
    #[arg(long, allow_hyphen_values = true)]
    m2: Option<Range>,
    /// First exponent range of the second argument [default: -3..3].
    #[arg(long, allow_hyphen_values = true)]
    s1: Option<Range>,
    /// Second exponent range of the second argument [default: 0..3].
    #[arg(long, allow_hyphen_values = true)]
    s2: Option<Range>,
    /// Weight a1 of the D-module, as p/q [default: 1/2].
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    a1: Option<Rat>,
    /// Weight a2 of the D-module, as p/q [default: 0].
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    a2: Option<Rat>,
    /// poly, laurent or quotient [default: poly].
    #[arg(long, value_parser = parse_variant)]
    variant: Option<Variant>,
    /// natural, adjoint or sym2 [default: natural].
    #[arg(long)]
    rep: Option<RepChoice>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Random samples for weyl-assoc and lemma-3.4.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse()
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Verify(args) => verify(*args),
        Cmd::Eval { algebra, expr } => match eval_str(&expr, algebra) {
            Ok(out) => {
                println!("{}", out);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {}", e);
                ExitCode::from(USAGE_ERROR)
            }
        },
        Cmd::Report { all, jobs, format, out } => {
            if !all {
                eprintln!("error: report currently requires --all");
                return ExitCode::from(USAGE_ERROR);
            }
            report_all(jobs, format, out)
        }
    }
}

fn outcome(reports: &[Report]) -> ExitCode {
    if reports.iter().all(Report::as_expected) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let id: CheckId = match args.check.parse() {
        Ok(id) => id,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let mut cfg = CheckConfig::new(id);
    let d = cfg.clone();
    cfg.m1 = args.m1.unwrap_or(d.m1);
    cfg.m2 = args.m2.unwrap_or(d.m2);
    cfg.s1 = args.s1.unwrap_or(d.s1);
    cfg.s2 = args.s2.unwrap_or(d.s2);
    cfg.a1 = args.a1.unwrap_or(d.a1);
    cfg.a2 = args.a2.unwrap_or(d.a2);
    cfg.variant = args.variant.unwrap_or(d.variant);
    cfg.rep = args.rep.unwrap_or(d.rep);
    cfg.jobs = args.jobs;
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    match run_check(&cfg) {
        Ok(report) => {
            match args.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            outcome(std::slice::from_ref(&report))
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn report_all(jobs: usize, format: Format, out: Option<PathBuf>) -> ExitCode {
    let mut reports = Vec::new();
    for cfg in catalog_configs(jobs) {
        match run_check(&cfg) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: {}: {}", cfg.check, e);
                return ExitCode::from(USAGE_ERROR);
            }
        }
    }
    let text = match format {
        Format::Json => reports_to_json(&reports) + "\n",
        Format::Text => render_text(&reports),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return ExitCode::from(USAGE_ERROR);
            }
        }
        None => print!("{}", text),
    }
    outcome(&reports)
}
