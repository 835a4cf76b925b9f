use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use autfield::certificate::{emit_certificate, validate_certificate, CertificateError, RealizationCertificate};
use autfield::groupspec::{named_group, parse_group_spec, GroupSpec, GroupSpecError};
use autfield::pipeline::{run, DistinctMode, PipelineError, RunOptions};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "autfield", version, about = "Number fields with a prescribed automorphism group")]
struct Cli {
    /// More log output on stderr (-v info, -vv debug)
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct fields whose automorphism group is the given group
    #[command(group(ArgGroup::new("input").required(true).args(["n", "named"])))]
    Realize {
        /// Degree of the ambient symmetric group
        #[arg(long = "n", requires = "gens")]
        n: Option<usize>,
        /// Generators in cycle notation, separated by ';'
        #[arg(long, requires = "n")]
        gens: Option<String>,
        /// S_k, C_k, A_k or V4
        #[arg(long, conflicts_with_all = ["n", "gens"])]
        named: Option<String>,
        /// Number of fields
        #[arg(long, default_value_t = 2)]
        count: usize,
        /// Height bound for the specialization search
        #[arg(long, default_value_t = 200)]
        t_max: u64,
        #[arg(long, value_enum, default_value_t = Distinct::Auto)]
        distinct: Distinct,
        #[arg(long, default_value_t = 24)]
        max_splitting_degree: usize,
        /// Certificate path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate
    Validate {
        path: PathBuf,
        /// Re-run the construction and compare
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Distinct {
    Exact,
    /// Exact when the field degree is at most 6
    Auto,
    Assumed,
}

impl From<Distinct> for DistinctMode {
    fn from(d: Distinct) -> Self {
        match d {
            Distinct::Exact => DistinctMode::Exact,
            Distinct::Auto => DistinctMode::Auto,
            Distinct::Assumed => DistinctMode::Assumed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();

    match cli.command {
        Command::Realize { n, gens, named, count, t_max, distinct, max_splitting_degree, out } => {
            let spec = match (n, gens, named) {
                (_, _, Some(name)) => named_group(&name),
                (Some(n), Some(g), None) => parse_group_spec(n, &g),
                _ => Err(GroupSpecError::Empty),
            };
            let opts = RunOptions { count, t_max, distinct: distinct.into(), max_splitting_degree };
            realize(spec, &opts, out)
        }
        Command::Validate { path, deep } => validate(&path, deep),
    }
}

fn realize(spec: Result<GroupSpec, GroupSpecError>, opts: &RunOptions, out: Option<PathBuf>) -> ExitCode {
    let spec = match spec {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: group specification: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let group = match spec.group() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: group specification: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let realization = match run(&group, opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                PipelineError::SearchExhausted { .. } => EXIT_EXHAUSTED,
                e if e.is_cap() => EXIT_CAP,
                _ => EXIT_FAILURE,
            });
        }
    };
    let cert = RealizationCertificate::from_realization(&spec, &realization, opts);
    for f in &cert.fields {
        eprintln!("t0 = {}: degree {}, |Aut| = {}", f.t0, f.degree, f.automorphisms.len());
    }
    let written = match &out {
        Some(path) => emit_certificate(&cert, path),
        None => std::io::stdout()
            .write_all(cert.to_json().as_bytes())
            .map_err(|e| CertificateError::Io(e.to_string())),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn validate(path: &std::path::Path, deep: bool) -> ExitCode {
    match validate_certificate(path, deep) {
        Ok(report) => {
            print!("{report}");
            if report.passed() {
                println!("certificate valid");
                ExitCode::SUCCESS
            } else {
                println!("certificate INVALID");
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e @ (CertificateError::Json(_) | CertificateError::Schema(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
