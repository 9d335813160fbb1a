//! Command-line front end.

mod emit;
mod runlog;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

pub use emit::{rational_json, Format, LangerReport, Report};
pub use runlog::{input_digest, RunRecord};

use crate::cohomology::{CohomologyQuery, Oracle};
use crate::resolutions::Resolution;
use crate::spaces::{catalog, HssSpace};
use crate::stability::{
    certify_restriction_with, langer_bound, q3_surface_invariants, small_dimension_verdict, ChernData,
    EngineOptions,
};
use crate::verifier::{Claim, SweepParams, VerificationReport, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hss-stab", version, about = "Cohomology oracle and stability certificates for Hermitian symmetric spaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Append a run record to this NDJSON file.
    #[arg(long, global = true)]
    log: Option<PathBuf>,
    /// Worker threads for sweeps and the engine.
    #[arg(long, global = true, env = "HSS_STAB_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// List the supported spaces, or describe one.
    Catalog {
        #[arg(long)]
        space: Option<String>,
    },
    /// Is H^q(Omega^p(l)) nonzero?
    Oracle(OracleArgs),
    /// Certify stability of Omega_Y restricted to a subvariety.
    Stability(StabilityArgs),
    /// Run an exhaustive sweep.
    Verify(VerifyArgs),
    /// Invariants of smooth surfaces of degree d in Q^3.
    SurfaceInvariants {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
    },
    /// Langer's degree bound for P^2, P^3 or Q^3.
    Langer {
        #[arg(long)]
        space: String,
    },
}

#[derive(Debug, Args, Serialize)]
struct OracleArgs {
    /// Whole query, e.g. "A:2,3 p=4 q=1 l=3".
    #[arg(long, conflicts_with_all = ["space", "p", "q", "l"])]
    query: Option<String>,
    #[arg(long, required_unless_present = "query")]
    space: Option<String>,
    #[arg(long, required_unless_present = "query")]
    p: Option<u32>,
    #[arg(long, required_unless_present = "query")]
    q: Option<u32>,
    #[arg(long, required_unless_present = "query", allow_hyphen_values = true)]
    l: Option<i64>,
    #[arg(long, default_value_t = 16)]
    witness_cap: usize,
}

#[derive(Debug, Args, Serialize)]
struct StabilityArgs {
    #[arg(long)]
    space: String,
    /// "ci:2,3" for a complete intersection or "raw:[{2,3},{5}]".
    #[arg(long, required_unless_present = "divisor_degree", conflicts_with = "divisor_degree")]
    resolution: Option<String>,
    /// Smooth divisor in |O(d)|, answered from the small-dimension table.
    #[arg(long)]
    divisor_degree: Option<u32>,
    /// Treat exceptional-space vanishing at nonzero twist as given.
    #[arg(long)]
    accept_asserted: bool,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    /// Claim name or tag, or "all".
    #[arg(long)]
    prop: String,
    #[arg(long, default_value_t = 6)]
    a_max: u32,
    #[arg(long, default_value_t = 6)]
    b_max: u32,
    /// Type A sweeps go up to l = a + b + margin; slope sweeps to index + margin.
    #[arg(long, default_value_t = 2)]
    l_margin: u32,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    l_max: Option<u32>,
    /// Family for the slope bound (A, B, C, D); all four when omitted.
    #[arg(long)]
    family: Option<String>,
    /// Largest family parameter for the slope bound.
    #[arg(long)]
    max: Option<u32>,
    #[arg(long, default_value_t = 1)]
    order_min: u32,
    #[arg(long, default_value_t = 4)]
    order_max: u32,
    #[arg(long, default_value_t = 2)]
    bound: u32,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave out elapsed_ms so that reruns are byte-identical.
    #[arg(long)]
    #[serde(skip)]
    omit_timing: bool,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn parse_space(key: &str) -> Result<HssSpace, Failure> {
    key.parse::<HssSpace>().map_err(|e| Failure(format!("bad space `{key}`: {e}")))
}

impl VerifyArgs {
    fn params(&self) -> Result<SweepParams, Failure> {
        Ok(SweepParams {
            a_max: self.a_max,
            b_max: self.b_max,
            l_margin: self.l_margin,
            n_max: self.n_max,
            l_max: self.l_max,
            family: self.family.as_deref().map(str::parse).transpose()?,
            family_max: self.max,
            order_min: self.order_min,
            order_max: self.order_max,
            bound: self.bound,
            samples: self.samples,
            seed: self.seed,
        })
    }
}

/// Executes one command; `Ok` carries the report and its exit status.
fn execute(cli: &Cli) -> Result<(Report, i32), Failure> {
    let report = match &cli.command {
        Command::Catalog { space: None } => Report::Catalog(catalog()),
        Command::Catalog { space: Some(k) } => Report::Space(parse_space(k)?),
        Command::Oracle(o) => {
            let query = match &o.query {
                Some(text) => text.parse::<CohomologyQuery>()?,
                None => {
                    let space = parse_space(o.space.as_deref().unwrap_or_default())?;
                    CohomologyQuery::new(space, o.p.unwrap_or(0), o.q.unwrap_or(0), o.l.unwrap_or(0))?
                }
            };
            let answer = Oracle::with_witness_cap(o.witness_cap).nonvanishing(&query);
            Report::Cohomology(query, answer)
        }
        Command::Stability(s) => {
            let space = parse_space(&s.space)?;
            let verdict = match (&s.resolution, s.divisor_degree) {
                (Some(text), _) => {
                    let res: Resolution = text.parse()?;
                    let opts = EngineOptions {
                        accept_asserted_exceptional: s.accept_asserted,
                        workers: cli.workers,
                    };
                    certify_restriction_with(&space, &res, &opts)?
                }
                (None, Some(d)) => small_dimension_verdict(&space, d)?,
                (None, None) => return Err(Failure("need --resolution or --divisor-degree".into())),
            };
            Report::Stability(Box::new(verdict))
        }
        Command::Verify(a) => {
            let v = cli.workers.map_or_else(Verifier::default, Verifier::with_workers);
            let claims: Vec<Claim> = if a.prop.eq_ignore_ascii_case("all") {
                Claim::ALL.to_vec()
            } else {
                vec![a.prop.parse()?]
            };
            let params = a.params()?;
            let mut reports = Vec::new();
            for c in claims {
                reports.extend(v.run(c, &params)?);
            }
            let status = if reports.iter().all(VerificationReport::success) {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            };
            return Ok((
                Report::Verification {
                    reports,
                    timing: !a.omit_timing,
                },
                status,
            ));
        }
        Command::SurfaceInvariants { d } => {
            Report::Surfaces(d.iter().map(|&d| q3_surface_invariants(d)).collect::<Result<_, _>>()?)
        }
        Command::Langer { space } => {
            let space = parse_space(space)?;
            let bound = langer_bound(&space)?;
            let chern = ChernData::of(&space).expect("a bound implies tabulated Chern data");
            Report::Langer(LangerReport { space, bound, chern })
        }
    };
    Ok((report, EXIT_OK))
}

/// Parses `args` (program name first), runs the command and writes the
/// report. Returns the process exit status.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let started_at = chrono::Utc::now().to_rfc3339();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let (payload, status) = match execute(&cli) {
        Ok((report, status)) => {
            let text = report.render(cli.format);
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            (report.json(), status)
        }
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            (json!({ "error": msg }), EXIT_USAGE)
        }
    };
    if let Some(path) = &cli.log {
        let record = RunRecord {
            argv: argv.iter().map(|a| a.to_string_lossy().into_owned()).collect(),
            started_at,
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: input_digest(&json!({ "command": &cli.command, "format": cli.format })),
            report: payload,
            exit_status: status,
        };
        if let Err(e) = record.append(path) {
            let _ = writeln!(stderr, "error: cannot append to {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    status
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
