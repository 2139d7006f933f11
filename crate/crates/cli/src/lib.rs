//! The `maxrep` command line: one job per invocation, one JSON report on
//! stdout.

pub mod commands;
pub mod input;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxrep_core::fields::OrderSpec;
use maxrep_core::reps::{DEFAULT_DEGREE_BOUND, DEFAULT_RADIUS};
use maxrep_core::spectra::{JordanMode, NormChoice};
use maxrep_core::valuations::ValuationSpec;
use maxrep_core::Error;
use serde_json::{json, Value as Json};

/// Version tag carried by every report.
pub const REPORT_SCHEMA: &str = "maxrep-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_DEGREE_GUARD: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The job description or its input is malformed.
    #[error("{0}")]
    Input(Error),
    #[error("{0}")]
    Compute(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_SCHEMA,
            CliError::Compute(Error::DegreeBound { .. }) => EXIT_DEGREE_GUARD,
            CliError::Compute(_) => EXIT_FAILURE,
        }
    }

    fn to_json(&self) -> Json {
        match self {
            CliError::Input(e) => json!({"kind": "schema", "message": e.to_string()}),
            CliError::Compute(Error::DegreeBound {
                bound,
                degree,
                words_done,
            }) => json!({
                "kind": "degree_bound",
                "message": self.to_string(),
                "bound": bound,
                "degree": degree,
                "words_done": words_done,
            }),
            CliError::Compute(e) => json!({"kind": "computation", "message": e.to_string()}),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "maxrep", version, about = "Exact computations with surface-group representations over Q(X)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Reproduce the pair-of-pants example: relations, trace, verdict, Jordan vectors, certificate.
    PantsDemo,
    /// Check symplecticity of matrices, or of generator images and relators.
    SymplecticCheck,
    /// Traces of words with their valuations.
    Trace,
    /// Translation lengths of matrices or words.
    Translength,
    /// Jordan vectors of matrices or words.
    Jordan,
    /// Closed-point verdict of a representation.
    ClosedPoint,
    /// Maslov index of three Lagrangians.
    Maslov,
    /// Crossratio of four Lagrangians.
    Crossratio,
    /// Verify a maximal framing.
    Maximality,
    /// Period table via translation lengths.
    Periods,
    /// Multicurve certificate over all reduced words up to --max-length.
    Multicurve,
    /// Building pseudodistance between two matrices.
    Distance,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::PantsDemo => "pants-demo",
            Command::SymplecticCheck => "symplectic-check",
            Command::Trace => "trace",
            Command::Translength => "translength",
            Command::Jordan => "jordan",
            Command::ClosedPoint => "closed-point",
            Command::Maslov => "maslov",
            Command::Crossratio => "crossratio",
            Command::Maximality => "maximality",
            Command::Periods => "periods",
            Command::Multicurve => "multicurve",
            Command::Distance => "distance",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symplectic,
    Linear,
}

impl From<ModeArg> for JordanMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Symplectic => JordanMode::Symplectic,
            ModeArg::Linear => JordanMode::Linear,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// aplus:A | aminus:A | plusinf | minusinf
    #[arg(long, global = true, default_value = "aplus:0")]
    pub order: OrderSpec,
    /// adic:A | atinf; defaults to the valuation compatible with --order.
    #[arg(long, global = true)]
    pub valuation: Option<ValuationSpec>,
    /// Word length swept by closed-point searches.
    #[arg(long, global = true, default_value_t = DEFAULT_RADIUS)]
    pub radius: usize,
    #[arg(long, global = true, default_value_t = 64)]
    pub kmax: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: usize,
    /// sum | spread
    #[arg(long, global = true, default_value = "sum")]
    pub norm: NormChoice,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// `pants`, a JSON file, or inline JSON.
    #[arg(long, global = true, default_value = "pants")]
    pub input: String,
    /// Word to evaluate; repeatable.
    #[arg(long = "word", global = true)]
    pub words: Vec<String>,
    /// Longest reduced word enumerated when no --word is given [default: 4,
    /// or 3 for the certificate inside pants-demo].
    #[arg(long, global = true)]
    pub max_length: Option<usize>,
    /// Word radius of the orbit used for the pants cusp framing.
    #[arg(long, global = true, default_value_t = 1)]
    pub framing_radius: usize,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Symplectic)]
    pub mode: ModeArg,
}

impl Flags {
    pub fn valuation(&self) -> Result<ValuationSpec, CliError> {
        let compatible = ValuationSpec::compatible_with(&self.order);
        match &self.valuation {
            None => Ok(compatible),
            Some(v) if *v == compatible => Ok(v.clone()),
            Some(v) => Err(CliError::Input(Error::Schema(format!(
                "valuation {v} is not compatible with order {}",
                self.order
            )))),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Input(Error::Schema(m.into())));
        if self.radius == 0 {
            return bad("--radius must be at least 1");
        }
        if self.kmax == 0 {
            return bad("--kmax must be at least 1");
        }
        if self.threads == Some(0) {
            return bad("--threads must be at least 1");
        }
        self.valuation().map(drop)
    }

    fn to_json(&self) -> Json {
        let val = self.valuation().map(|v| v.to_string()).unwrap_or_default();
        json!({
            "order": self.order.to_string(),
            "valuation": val,
            "radius": self.radius,
            "kmax": self.kmax,
            "degree_bound": self.degree_bound,
            "norm": self.norm.to_string(),
            "input": self.input,
            "words": self.words,
            "max_length": self.max_length,
            "framing_radius": self.framing_radius,
            "mode": format!("{:?}", self.mode).to_lowercase(),
        })
    }
}

/// Runs one job and returns the report with its exit code.
pub fn run(cli: &Cli) -> (Json, i32) {
    let start = Instant::now();
    let outcome = cli.flags.validate().and_then(|()| {
        if let Some(t) = cli.flags.threads {
            // Only the first configuration of the global pool takes effect,
            // which is the one that matters for a single job.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
        commands::dispatch(cli.command, &cli.flags)
    });
    let mut report = json!({
        "schema": REPORT_SCHEMA,
        "command": cli.command.name(),
        "flags": cli.flags.to_json(),
    });
    let code = match outcome {
        Ok(result) => {
            report["status"] = json!("ok");
            report["result"] = result;
            EXIT_OK
        }
        Err(e) => {
            report["status"] = json!("error");
            report["error"] = e.to_json();
            e.exit_code()
        }
    };
    report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    (report, code)
}

/// Report for a command line that did not parse.
pub fn usage_error_report(message: &str) -> Json {
    json!({
        "schema": REPORT_SCHEMA,
        "status": "error",
        "error": {"kind": "schema", "message": message.trim_end()},
    })
}
