//! The `hdflow` command-line frontend.
//!
//! [`run`] never touches the process: it parses `argv`, computes, and returns
//! the bytes for standard output and standard error together with the exit
//! code (0 success, 1 domain error, 2 usage error). Output is deterministic.

mod inline;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::arith::{self, frac_part, Rational};
use crate::bis_local::{self, CharacterSystem, ResidueBlockAssembly};
use crate::error::Error;
use crate::flow::{self, EquivarianceDefects, FlowTrajectory, Termination};
use crate::parabolic::{self, CurveShape, ParabolicLineBundleSpec, ParabolicShape, WeightSystem};

pub use inline::{parse_chars, parse_weights};

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "hdflow", version, about = "Exact invariants of parabolic Higgs-de Rham flows")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Print intermediate orbit states to standard error.
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fractional part of a rational number.
    Frac {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Parabolic degree and pullback degree of a shape.
    Pardeg(ShapeArgs),
    /// Shape of a rational twist of a line bundle.
    Linebundle {
        #[arg(long, allow_hyphen_values = true)]
        degree: BigInt,
        /// Twists as `D:3/2;E:-1/4`.
        #[arg(long, allow_hyphen_values = true)]
        twists: String,
        /// Weight denominator; defaults to the common denominator of the twists.
        #[arg(long = "N")]
        n: Option<u64>,
    },
    /// Weight action of the parabolic Cartier transforms.
    #[command(subcommand)]
    Weights(WeightsCommand),
    /// Orbits under the flow operator.
    #[command(subcommand)]
    Flow(FlowCommand),
    /// Period bounds and minimal periods.
    #[command(subcommand)]
    Period(PeriodCommand),
    /// Weight periods and bounds over all primes up to a limit.
    Scan {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long)]
        pmax: u64,
    },
    /// Character/weight dictionary at a branch point.
    #[command(subcommand)]
    Bis(BisCommand),
    /// Residue eigenvalue laws.
    #[command(subcommand)]
    Residue(ResidueCommand),
    /// Adjustedness of residue eigenvalues.
    #[command(subcommand)]
    Adjusted(AdjustedCommand),
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long = "N")]
    n: Option<u64>,
    /// Inline weights, e.g. `D1:1/5x2,2/5x1;D2:0x3`.
    #[arg(long)]
    weights: Option<String>,
    /// JSON weight system.
    #[arg(long, conflicts_with = "weights")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    rank: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    deg0: Option<BigInt>,
    #[arg(long, default_value_t = 0)]
    genus: u64,
    #[arg(long = "N")]
    n: Option<u64>,
    #[arg(long)]
    weights: Option<String>,
    /// JSON parabolic shape.
    #[arg(long, conflicts_with_all = ["weights", "rank", "deg0"])]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum WeightsCommand {
    /// Weights of the inverse Cartier transform.
    Icartier {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Weights of the Cartier transform.
    Cartier {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
}

#[derive(Subcommand, Debug)]
enum FlowCommand {
    /// Orbit of a weight system.
    Weights {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Orbit of a parabolic shape.
    Shape {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PeriodCommand {
    /// Explicit bound f with N | 1 + p + ... + p^(f-1).
    Bound {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Least f with N | l (1 + p + ... + p^(f-1)).
    Minimal {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, default_value_t = 1)]
        l: u64,
    },
    /// Least f making all equivariance defects vanish.
    Equivariance {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        /// Comma-separated defects, e.g. `4,6`.
        #[arg(long, default_value = "")]
        defects: String,
    },
    /// phi(N (N-2)!).
    Global {
        #[arg(long = "N")]
        n: u64,
    },
    /// Period of a torsion line bundle of order m.
    Rankone {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
}

#[derive(Subcommand, Debug)]
enum BisCommand {
    /// Characters upstairs to weights downstairs.
    Push {
        #[command(flatten)]
        chars: CharArgs,
    },
    /// Weights downstairs to characters on a cover of order --cover (default N).
    Pull {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long)]
        cover: Option<u64>,
    },
    /// Frobenius pullback on characters.
    Frob {
        #[command(flatten)]
        chars: CharArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long = "N")]
    n: Option<u64>,
    /// Inline characters, e.g. `P:1x2,3x1`.
    #[arg(long)]
    chars: Option<String>,
    /// JSON character system.
    #[arg(long, conflicts_with = "chars")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ResidueCommand {
    /// Assemble a pushforward residue from a JSON description.
    Assemble {
        #[arg(long)]
        input: PathBuf,
    },
    /// Residue eigenvalues of the pullback.
    Pullback {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Levels with block sizes, e.g. `2x1,4x3`.
        #[arg(long)]
        levels: String,
    },
}

#[derive(Subcommand, Debug)]
enum AdjustedCommand {
    /// Check eigenvalue = lambda * weight on each graded piece.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Claims as `D:1/3@1/3,0@0;E:1/2@1/2`.
        #[arg(long)]
        claims: String,
    },
}

/// What a command produced, in every format it supports.
struct Payload {
    json: Value,
    table: String,
    csv: Option<String>,
}

impl Payload {
    fn new(json: Value, table: impl Into<String>) -> Self {
        Payload {
            json,
            table: table.into(),
            csv: None,
        }
    }
}

struct Ctx {
    trace: bool,
    stderr: String,
}

impl Ctx {
    fn warn_composite(&mut self, p: i64) {
        if !arith::is_prime(p.unsigned_abs()) || p < 0 {
            self.stderr
                .push_str(&format!("warning: p = {p} is not a prime; using it as a unit mod N\n"));
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult {
                        exit_code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Ctx {
        trace: cli.trace,
        stderr: String::new(),
    };
    let outcome = dispatch(cli.command, &mut ctx).and_then(|payload| emit(payload, cli.format));
    match outcome {
        Ok(stdout) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: ctx.stderr,
        },
        Err(CliError::Domain(e)) => CommandResult {
            exit_code: 1,
            stdout: format!("{}\n", json!({ "error": e.to_string() })),
            stderr: ctx.stderr,
        },
        Err(CliError::Usage(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("{}error: {msg}\n\nFor more information, try '--help'.\n", ctx.stderr),
        },
    }
}

fn emit(payload: Payload, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(format!("{}\n", payload.json)),
        Format::Table => Ok(payload.table),
        Format::Csv => payload
            .csv
            .ok_or_else(|| CliError::Usage("--format csv is only available for scan".into())),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Domain(Error::Parse(format!("{}: {e}", path.display())))
    })
}

fn rational_arg(s: &str) -> Result<Rational, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("{s:?} is not a rational number")))
}

fn check_modulus(given: Option<u64>, actual: u64) -> Result<(), CliError> {
    match given {
        Some(n) if n != actual => Err(Error::ModulusMismatch {
            given: n,
            expected: actual,
        }
        .into()),
        _ => Ok(()),
    }
}

fn load_weights(args: &WeightArgs) -> Result<WeightSystem, CliError> {
    if let Some(path) = &args.input {
        let ws: WeightSystem = read_json(path)?;
        check_modulus(args.n, ws.denominator())?;
        return Ok(ws);
    }
    let n = args
        .n
        .ok_or_else(|| CliError::Usage("--N is required with --weights".into()))?;
    let text = args
        .weights
        .as_deref()
        .ok_or_else(|| CliError::Usage("either --weights or --input is required".into()))?;
    parse_weights(text, n)
}

fn load_chars(args: &CharArgs) -> Result<CharacterSystem, CliError> {
    if let Some(path) = &args.input {
        let cs: CharacterSystem = read_json(path)?;
        check_modulus(args.n, cs.modulus())?;
        return Ok(cs);
    }
    let n = args
        .n
        .ok_or_else(|| CliError::Usage("--N is required with --chars".into()))?;
    let text = args
        .chars
        .as_deref()
        .ok_or_else(|| CliError::Usage("either --chars or --input is required".into()))?;
    parse_chars(text, n)
}

fn load_shape(args: &ShapeArgs) -> Result<ParabolicShape, CliError> {
    if let Some(path) = &args.input {
        let shape: ParabolicShape = read_json(path)?;
        check_modulus(args.n, shape.curve().denominator())?;
        return Ok(shape);
    }
    let (Some(rank), Some(deg0), Some(n)) = (args.rank, args.deg0.clone(), args.n) else {
        return Err(CliError::Usage(
            "--rank, --deg0 and --N are required unless --input is given".into(),
        ));
    };
    let weights = parse_weights(args.weights.as_deref().unwrap_or(""), n)?;
    let curve = CurveShape::new(
        args.genus,
        weights.punctures().map(str::to_string).collect(),
        n,
    )?;
    Ok(ParabolicShape::new(rank, deg0, weights, curve)?)
}

fn shape_table(s: &ParabolicShape) -> String {
    format!(
        "rank {} deg0 {} N {} weights {}",
        s.rank(),
        s.deg0(),
        s.curve().denominator(),
        s.weights()
    )
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("data model serializes")
}

fn trajectory_payload<S: serde::Serialize>(
    traj: &FlowTrajectory<S>,
    render: impl Fn(&S) -> String,
    ctx: &mut Ctx,
) -> Payload {
    if ctx.trace {
        for (i, s) in traj.states.iter().enumerate() {
            ctx.stderr.push_str(&format!("step {i}: {}\n", render(s)));
        }
    }
    let mut table = String::new();
    for (i, s) in traj.states.iter().enumerate() {
        table.push_str(&format!("{i}\t{}\n", render(s)));
    }
    match (&traj.termination, traj.period) {
        (Termination::PeriodFound, Some(f)) => {
            table.push_str(&format!("period {f} preperiod {}\n", traj.preperiod))
        }
        (Termination::NeverPeriodic { pardeg }, _) => {
            table.push_str(&format!("never periodic: pardeg {pardeg} scales by p\n"))
        }
        _ => table.push_str("cap reached without repetition\n"),
    }
    Payload::new(to_json(traj), table)
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Result<Payload, CliError> {
    match cmd {
        Command::Frac { x } => {
            let x = rational_arg(&x)?;
            let r = frac_part(&x);
            Ok(Payload::new(json!({ "x": x, "frac": r }), format!("{r}\n")))
        }
        Command::Pardeg(args) => {
            let shape = load_shape(&args)?;
            let d = parabolic::pardeg(&shape);
            let pull = parabolic::pullback_degree(&shape, shape.curve().denominator())?;
            let candidate = parabolic::is_periodicity_candidate(&shape);
            Ok(Payload::new(
                json!({
                    "pardeg": d,
                    "pullback_degree": pull.to_string(),
                    "periodicity_candidate": candidate,
                }),
                format!("pardeg {d}\npullback_degree {pull}\nperiodicity_candidate {candidate}\n"),
            ))
        }
        Command::Linebundle { degree, twists, n } => {
            let lb = ParabolicLineBundleSpec {
                underlying_degree: degree,
                twists: inline::parse_twists(&twists)?,
            };
            let shape = match n {
                Some(n) => {
                    let curve = CurveShape::new(0, lb.twists.keys().cloned().collect(), n)?;
                    parabolic::line_bundle_shape_on(&lb, &curve)?
                }
                None => parabolic::line_bundle_shape(&lb),
            };
            Ok(Payload::new(to_json(&shape), format!("{}\n", shape_table(&shape))))
        }
        Command::Weights(WeightsCommand::Icartier { weights, p }) => {
            let ws = load_weights(&weights)?;
            ctx.warn_composite(p);
            let out = parabolic::inverse_cartier_weights(&ws, p)?;
            Ok(Payload::new(to_json(&out), format!("{out}\n")))
        }
        Command::Weights(WeightsCommand::Cartier { weights, p }) => {
            let ws = load_weights(&weights)?;
            ctx.warn_composite(p);
            let out = parabolic::cartier_weights(&ws, p)?;
            Ok(Payload::new(to_json(&out), format!("{out}\n")))
        }
        Command::Flow(FlowCommand::Weights { weights, p, cap }) => {
            let ws = load_weights(&weights)?;
            ctx.warn_composite(p);
            let traj = flow::weight_orbit(&ws, p, cap)?;
            Ok(trajectory_payload(&traj, |w| w.to_string(), ctx))
        }
        Command::Flow(FlowCommand::Shape { shape, p, cap }) => {
            let shape = load_shape(&shape)?;
            ctx.warn_composite(p);
            let traj = flow::flow_trajectory(&shape, p, cap)?;
            Ok(trajectory_payload(&traj, shape_table, ctx))
        }
        Command::Period(cmd) => period(cmd, ctx),
        Command::Scan { weights, pmax } => {
            let ws = load_weights(&weights)?;
            let rows = flow::prime_scan(&ws, pmax)?;
            let mut table = format!("{:>8} {:>8} {:>8} {:>10}\n", "p", "period", "bound", "sum_mod_N");
            for r in &rows {
                table.push_str(&format!(
                    "{:>8} {:>8} {:>8} {:>10}\n",
                    r.p, r.period, r.bound, r.sum_mod_n
                ));
            }
            Ok(Payload {
                json: json!({ "N": ws.denominator(), "rows": rows }),
                table,
                csv: Some(flow::scan_to_csv(&rows)),
            })
        }
        Command::Bis(BisCommand::Push { chars }) => {
            let cs = load_chars(&chars)?;
            let ws = bis_local::chars_to_weights(&cs);
            Ok(Payload::new(to_json(&ws), format!("{ws}\n")))
        }
        Command::Bis(BisCommand::Pull { weights, cover }) => {
            let ws = load_weights(&weights)?;
            let cs = bis_local::weights_to_chars(&ws, cover.unwrap_or(ws.denominator()))?;
            Ok(Payload::new(to_json(&cs), format!("{cs}\n")))
        }
        Command::Bis(BisCommand::Frob { chars, p }) => {
            let cs = load_chars(&chars)?;
            ctx.warn_composite(p);
            let out = bis_local::frobenius_on_chars(&cs, p)?;
            Ok(Payload::new(to_json(&out), format!("{out}\n")))
        }
        Command::Residue(ResidueCommand::Assemble { input }) => {
            let asm: ResidueBlockAssembly = read_json(&input)?;
            let out = bis_local::assemble_pushforward_residue(&asm)?;
            let eigen: Vec<Value> = out
                .eigenvalues
                .iter()
                .map(|(v, k)| json!({ "value": v, "mult": k }))
                .collect();
            let table = out
                .eigenvalues
                .iter()
                .map(|(v, k)| format!("{v}x{k}"))
                .collect::<Vec<_>>()
                .join(",");
            Ok(Payload::new(
                json!({
                    "matrix": out.matrix,
                    "charpoly": out.charpoly.coeffs(),
                    "eigenvalues": eigen,
                }),
                format!("charpoly {}\neigenvalues {table}\n", out.charpoly),
            ))
        }
        Command::Residue(ResidueCommand::Pullback { n, lambda, levels }) => {
            let lambda = rational_arg(&lambda)?;
            let levels = inline::parse_levels(&levels)?;
            let ev = bis_local::pullback_residue_eigenvalues(&levels, &lambda, n)?;
            let all_zero = ev.iter().all(Rational::is_zero);
            let text: Vec<String> = ev.iter().map(Rational::to_string).collect();
            Ok(Payload::new(
                json!({ "eigenvalues": ev, "all_zero": all_zero }),
                format!("{}\n", text.join(" ")),
            ))
        }
        Command::Adjusted(AdjustedCommand::Check { lambda, claims }) => {
            let lambda = rational_arg(&lambda)?;
            let claims = inline::parse_claims(&claims)?;
            let report = bis_local::check_adjusted(&claims, &lambda)?;
            let mut table = format!("adjusted {}\n", report.adjusted);
            for v in &report.violations {
                table.push_str(&format!(
                    "{}: weight {} eigenvalue {} expected {}\n",
                    v.puncture, v.weight, v.eigenvalue, v.expected
                ));
            }
            Ok(Payload::new(to_json(&report), table))
        }
    }
}

fn period(cmd: PeriodCommand, ctx: &mut Ctx) -> Result<Payload, CliError> {
    match cmd {
        PeriodCommand::Bound { n, p } => {
            ctx.warn_composite(p);
            let params = flow::katz_period_params(n, p)?;
            let sum = arith::geometric_sum_mod(p, params.f, n)?;
            Ok(Payload::new(
                json!({ "f": params.f, "sum_mod_N": sum }),
                format!(
                    "N {} p {} q {} d {} N' {} q' {} k {} f {} sum_mod_N {}\n",
                    params.n,
                    params.p,
                    params.q,
                    params.d,
                    params.n_prime,
                    params.q_prime,
                    params.k.map_or("-".to_string(), |k| k.to_string()),
                    params.f,
                    sum
                ),
            ))
        }
        PeriodCommand::Minimal { n, p, l } => {
            ctx.warn_composite(p);
            let f = flow::minimal_geometric_period(n, p, l)?;
            Ok(Payload::new(json!({ "period": f }), format!("{f}\n")))
        }
        PeriodCommand::Equivariance { n, p, defects } => {
            ctx.warn_composite(p);
            let defects = EquivarianceDefects::new(n, inline::parse_u64_list(&defects)?)?;
            let f = flow::minimal_equivariance_period(&defects, p)?;
            Ok(Payload::new(json!({ "period": f }), format!("{f}\n")))
        }
        PeriodCommand::Global { n } => {
            let b = flow::global_period_bound(n)?;
            Ok(Payload::new(
                json!({ "bound": b.to_string() }),
                format!("{b}\n"),
            ))
        }
        PeriodCommand::Rankone { m, p } => {
            ctx.warn_composite(p);
            let f = flow::rank_one_period(m, p)?;
            Ok(Payload::new(json!({ "period": f }), format!("{f}\n")))
        }
    }
}
