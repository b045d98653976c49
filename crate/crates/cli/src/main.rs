//! `qtradeoff` — compute distinguishability measures, emit the
//! information–disturbance tradeoff curve, run the verification suites, and
//! demonstrate the broadcasting results, with machine-readable output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 invariant violation.

mod json;
mod states;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use json::{obj, Json};
use qtradeoff::broadcast::{
    block_counterexample, broadcast_commuting, clone_check, noncommuting_test_pair,
    search_broadcaster, BlockStatePair,
};
use qtradeoff::measures::{
    fidelity, helstrom, holevo_bound, min_overlap, von_neumann_entropy, PriorPair,
};
use qtradeoff::optimize::{numeric_curve_family, OptimizerConfig};
use qtradeoff::sampling;
use qtradeoff::tradeoff::{analytic_curve, PurePair};
use qtradeoff::verify::run_suites;
use qtradeoff::DensityOperator;

/// Errors carrying their exit code: input problems exit 2, violated
/// invariants exit 3.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Invariant(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn invariant(err: impl std::fmt::Display) -> Self {
        CliError::Invariant(err.to_string())
    }

    /// Classify a library error: problems with what the user asked for are
    /// input errors, violated mathematical invariants are not.
    fn from_core(err: qtradeoff::Error) -> Self {
        match err {
            qtradeoff::Error::DimensionMismatch(_)
            | qtradeoff::Error::InvalidInput(_)
            | qtradeoff::Error::DegeneratePair(_)
            | qtradeoff::Error::BadPriors(..) => CliError::Input(err.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Invariant(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qtradeoff",
    version,
    about = "Information gain versus disturbance for quantum states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveMode {
    Analytic,
    Numeric,
    Both,
}

impl CurveMode {
    fn as_str(self) -> &'static str {
        match self {
            CurveMode::Analytic => "analytic",
            CurveMode::Numeric => "numeric",
            CurveMode::Both => "both",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Distinguishability measures for a pair of states.
    Measures {
        /// First state: pure:[re,im,...] or a JSON matrix.
        #[arg(long)]
        state0: String,
        /// Second state, same formats.
        #[arg(long)]
        state1: String,
        /// Prior probability of state 0 (state 1 gets the complement).
        #[arg(long, default_value_t = 0.5)]
        pi0: f64,
        /// Write the JSON report here (with a manifest sidecar) instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the tradeoff curve for the two-pure-state family as CSV.
    Curve {
        /// Input-family angle in radians, strictly inside (0, pi/4).
        #[arg(long)]
        alpha: f64,
        /// Number of disturbance grid points (at least 2).
        #[arg(long)]
        points: usize,
        /// analytic, numeric, or both.
        #[arg(long, value_enum, default_value_t = CurveMode::Analytic)]
        mode: CurveMode,
        /// Seed for the numeric optimizer.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optimizer restarts per grid point.
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        /// CSV output path; a manifest sidecar is written next to it.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a module invariant suite and report residuals.
    Verify {
        /// linalg, quantum, measures, eavesdrop, tradeoff, optimize,
        /// broadcast, or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON summary here as well as stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Broadcasting demonstrations.
    Broadcast {
        /// commuting, block, no-broadcast-evidence, or clone-check.
        #[arg(long)]
        demo: String,
        /// Environment dimension for the channel searches.
        #[arg(long, default_value_t = 4)]
        env_dim: usize,
        /// Search restarts.
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Measures {
            state0,
            state1,
            pi0,
            out,
        } => cmd_measures(&state0, &state1, pi0, out.as_deref()),
        Command::Curve {
            alpha,
            points,
            mode,
            seed,
            restarts,
            out,
        } => cmd_curve(alpha, points, mode, seed, restarts, &out),
        Command::Verify { suite, seed, out } => cmd_verify(&suite, seed, out.as_deref()),
        Command::Broadcast {
            demo,
            env_dim,
            restarts,
            seed,
            out,
        } => cmd_broadcast(&demo, env_dim, restarts, seed, out.as_deref()),
    }
}

// ---------------------------------------------------------------------------
// Manifest and output plumbing
// ---------------------------------------------------------------------------

const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

fn timestamp() -> String {
    time::OffsetDateTime::now_utc()
        .format(&time::format_description::well_known::Rfc3339)
        .unwrap_or_else(|_| "1970-01-01T00:00:00Z".to_string())
}

/// The manifest written next to every output file. Replaying the recorded
/// command with the recorded parameters reproduces the output byte for byte;
/// only the timestamp differs between runs.
fn manifest(command: &str, parameters: Vec<(&str, Json)>, seed: u64) -> Json {
    obj(vec![
        ("command", Json::Str(command.to_string())),
        ("parameters", obj(parameters)),
        ("seed", Json::UInt(seed)),
        ("artifact_version", Json::Str(ARTIFACT_VERSION.to_string())),
        ("timestamp", Json::Str(timestamp())),
    ])
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

fn emit_report(report: &Json, manifest: &Json, out: Option<&Path>) -> Result<(), CliError> {
    let rendered = report.render();
    match out {
        Some(path) => {
            write_file(path, &rendered)?;
            write_file(&manifest_path(path), &manifest.render())?;
        }
        None => println!("{rendered}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// measures
// ---------------------------------------------------------------------------

fn cmd_measures(
    spec0: &str,
    spec1: &str,
    pi0: f64,
    out: Option<&Path>,
) -> Result<u8, CliError> {
    let rho0 = states::parse_state(spec0)?;
    let rho1 = states::parse_state(spec1)?;
    let priors = PriorPair::new(pi0, 1.0 - pi0).map_err(CliError::from_core)?;

    let fid = fidelity(&rho0, &rho1).map_err(CliError::from_core)?;
    let overlap = min_overlap(&rho0, &rho1).map_err(CliError::from_core)?;
    let hel = helstrom(&priors, &rho0, &rho1).map_err(CliError::from_core)?;
    let holevo = holevo_bound(&priors, &rho0, &rho1).map_err(CliError::from_core)?;
    let mixture =
        DensityOperator::mix(priors.pi0(), &rho0, priors.pi1(), &rho1).map_err(CliError::from_core)?;

    let report = obj(vec![
        ("command", Json::Str("measures".into())),
        ("dim", Json::UInt(rho0.dim() as u64)),
        (
            "priors",
            obj(vec![
                ("pi0", Json::Float(priors.pi0())),
                ("pi1", Json::Float(priors.pi1())),
            ]),
        ),
        ("fidelity", Json::Float(fid)),
        ("min_overlap", Json::Float(overlap)),
        ("helstrom_error", Json::Float(hel.error_probability)),
        ("holevo_bound_bits", Json::Float(holevo)),
        ("entropy_state0_bits", Json::Float(von_neumann_entropy(&rho0))),
        ("entropy_state1_bits", Json::Float(von_neumann_entropy(&rho1))),
        ("entropy_mixture_bits", Json::Float(von_neumann_entropy(&mixture))),
    ]);
    let man = manifest(
        "measures",
        vec![
            ("state0", Json::Str(spec0.to_string())),
            ("state1", Json::Str(spec1.to_string())),
            ("pi0", Json::Float(pi0)),
        ],
        0,
    );
    emit_report(&report, &man, out)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

fn csv_float(x: f64) -> String {
    format!("{x:.11e}")
}

fn cmd_curve(
    alpha: f64,
    points: usize,
    mode: CurveMode,
    seed: u64,
    restarts: usize,
    out: &Path,
) -> Result<u8, CliError> {
    if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_4) {
        return Err(CliError::input(format!(
            "alpha must lie strictly inside (0, pi/4); got {alpha}"
        )));
    }
    if points < 2 {
        return Err(CliError::input("the curve needs at least 2 points"));
    }
    let pair = PurePair::new(alpha);
    let curve = analytic_curve(&pair, points).map_err(CliError::from_core)?;

    let numeric = if mode == CurveMode::Analytic {
        None
    } else {
        let cfg = OptimizerConfig::default()
            .with_seed(seed)
            .with_restarts(restarts);
        let grid: Vec<f64> = curve.points.iter().map(|p| p.d).collect();
        Some(numeric_curve_family(&pair, &grid, &cfg).map_err(CliError::from_core)?)
    };

    let mut csv = String::from("d,pe_analytic,pe_numeric,gap\n");
    let mut max_gap = 0.0f64;
    let mut all_converged = true;
    for (i, pt) in curve.points.iter().enumerate() {
        let (num_field, gap_field) = match &numeric {
            Some(numeric_pts) => {
                let np = &numeric_pts[i];
                all_converged &= np.converged;
                let gap = np.pe - pt.pe;
                max_gap = max_gap.max(gap.abs());
                (csv_float(np.pe), csv_float(gap))
            }
            None => (String::new(), String::new()),
        };
        csv.push_str(&format!(
            "{},{},{},{}\n",
            csv_float(pt.d),
            csv_float(pt.pe),
            num_field,
            gap_field
        ));
    }
    write_file(out, &csv)?;

    let mut params = vec![
        ("alpha", Json::Float(alpha)),
        ("points", Json::UInt(points as u64)),
        ("mode", Json::Str(mode.as_str().to_string())),
        ("restarts", Json::UInt(restarts as u64)),
        ("d_zero", Json::Float(curve.d_zero)),
    ];
    if numeric.is_some() {
        params.push(("max_abs_gap", Json::Float(max_gap)));
        params.push(("all_converged", Json::Bool(all_converged)));
    }
    write_file(&manifest_path(out), &manifest("curve", params, seed).render())?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(suite: &str, seed: u64, out: Option<&Path>) -> Result<u8, CliError> {
    let reports = run_suites(suite, seed).map_err(|e| CliError::input(e.to_string()))?;
    let passed = reports.iter().all(|r| r.passed());

    let suites_json: Vec<Json> = reports
        .iter()
        .map(|r| {
            let checks: Vec<Json> = r
                .checks
                .iter()
                .map(|c| {
                    obj(vec![
                        ("name", Json::Str(c.name.clone())),
                        ("tolerance", Json::Float(c.tolerance)),
                        ("worst", Json::Float(c.worst)),
                        ("passed", Json::Bool(c.passed)),
                    ])
                })
                .collect();
            obj(vec![
                ("suite", Json::Str(r.suite.clone())),
                ("passed", Json::Bool(r.passed())),
                ("checks", Json::Array(checks)),
            ])
        })
        .collect();

    let report = obj(vec![
        ("command", Json::Str("verify".into())),
        ("suite", Json::Str(suite.to_string())),
        ("seed", Json::UInt(seed)),
        ("passed", Json::Bool(passed)),
        ("suites", Json::Array(suites_json)),
    ]);
    let man = manifest("verify", vec![("suite", Json::Str(suite.to_string()))], seed);
    let rendered = report.render();
    println!("{rendered}");
    if let Some(path) = out {
        write_file(path, &rendered)?;
        write_file(&manifest_path(path), &man.render())?;
    }
    Ok(if passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// broadcast
// ---------------------------------------------------------------------------

fn cmd_broadcast(
    demo: &str,
    env_dim: usize,
    restarts: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8, CliError> {
    let cfg = OptimizerConfig::default()
        .with_seed(seed)
        .with_restarts(restarts);
    let body = match demo {
        "commuting" => {
            let (rho0, rho1) = sampling::seeded_commuting_pair(2, seed);
            let attempt = broadcast_commuting(&rho0, &rho1).map_err(CliError::from_core)?;
            vec![
                ("score", Json::Float(attempt.score)),
                (
                    "marginal_errors",
                    Json::Array(attempt.marginal_errors.iter().map(|&e| Json::Float(e)).collect()),
                ),
            ]
        }
        "block" => {
            let blocks = BlockStatePair::default_example();
            let result = block_counterexample(&blocks, &PriorPair::equal())
                .map_err(CliError::from_core)?;
            vec![
                ("info_bits", Json::Float(result.info_bits)),
                ("disturbance", Json::Float(result.disturbance)),
                ("commutator_norm", Json::Float(result.commutator_norm)),
                ("genuine", Json::Bool(result.genuine)),
            ]
        }
        "no-broadcast-evidence" => {
            let (rho0, rho1) = noncommuting_test_pair();
            let attempt =
                search_broadcaster(&rho0, &rho1, env_dim, &cfg).map_err(CliError::from_core)?;
            vec![
                ("score", Json::Float(attempt.score)),
                (
                    "marginal_errors",
                    Json::Array(attempt.marginal_errors.iter().map(|&e| Json::Float(e)).collect()),
                ),
                ("env_dim", Json::UInt(env_dim as u64)),
            ]
        }
        "clone-check" => {
            let zero = qtradeoff::PureState::basis(2, 0).projector();
            let plus =
                qtradeoff::PureState::real_qubit(std::f64::consts::FRAC_PI_4).projector();
            let score = clone_check(&zero, &plus, &cfg).map_err(CliError::from_core)?;
            vec![("score", Json::Float(score))]
        }
        other => {
            return Err(CliError::input(format!(
                "unknown demo '{other}'; expected commuting, block, no-broadcast-evidence, or clone-check"
            )))
        }
    };

    let mut fields = vec![
        ("command", Json::Str("broadcast".into())),
        ("demo", Json::Str(demo.to_string())),
        ("seed", Json::UInt(seed)),
    ];
    fields.extend(body);
    let report = obj(fields);
    let man = manifest(
        "broadcast",
        vec![
            ("demo", Json::Str(demo.to_string())),
            ("env_dim", Json::UInt(env_dim as u64)),
            ("restarts", Json::UInt(restarts as u64)),
        ],
        seed,
    );
    emit_report(&report, &man, out)?;
    Ok(0)
}
