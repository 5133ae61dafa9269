use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use koszul::corpus::{self, Document, RunReport, Subset};
use koszul::invariants::Caps;
use koszul::Error;

#[derive(Parser)]
#[command(name = "koszul", version, about = "Exact invariants of KS complexes over ℚ")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Degree cap N.
    #[arg(long, global = true, env = "KOSZUL_MAX_DEGREE", default_value_t = 12)]
    max_degree: usize,
    /// Wordlength cap M (defaults to N).
    #[arg(long, global = true, env = "KOSZUL_MAX_WORDLENGTH")]
    max_wordlength: Option<usize>,
    /// Largest fiber wordlength q (defaults to N).
    #[arg(long, global = true, env = "KOSZUL_Q_CAP")]
    q_cap: Option<usize>,
    /// Generators S for `toomer`: base, fiber or all.
    #[arg(long, global = true, default_value = "all")]
    subset: Subset,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Seed for cylinder-demo and corpus-run.
    #[arg(long, global = true, env = "KOSZUL_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of fixtures or corpus instances.
    #[arg(long, global = true, env = "KOSZUL_COUNT", default_value_t = 20)]
    count: usize,
    /// Include wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Treat the cohomology as vanishing above N.
    #[arg(long, global = true)]
    assume_concentrated: bool,
}

impl Opts {
    fn caps(&self) -> Caps {
        Caps {
            degree: self.max_degree,
            wordlength: self.max_wordlength.unwrap_or(self.max_degree),
            fiber_wordlength: self.q_cap.unwrap_or(self.max_degree),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check d² = 0, the Sullivan and Λ-extension conditions, minimality.
    Validate { input: String },
    /// Cohomology dimensions and representative classes through N.
    Cohomology { input: String },
    /// Truncated Toomer invariant with witnesses.
    Toomer { input: String },
    /// Fiber differential and the fiber family of invariants.
    Fiber { input: String },
    /// Check the product estimate for e on a Λ-extension.
    VerifyBound { input: String },
    /// Seeded mapping-cylinder, strictification and lifting fixtures.
    CylinderDemo,
    /// Seeded random relative Sullivan algebras through every check.
    CorpusRun,
}

fn run(cli: &Cli) -> Result<RunReport, Error> {
    let o = &cli.opts;
    let caps = o.caps();
    match &cli.command {
        Command::Validate { input } => corpus::validate(&Document::load(input)?, caps),
        Command::Cohomology { input } => corpus::cohomology_report(&Document::load(input)?, caps),
        Command::Toomer { input } => {
            corpus::toomer_report(&Document::load(input)?, caps, o.subset, o.assume_concentrated)
        }
        Command::Fiber { input } => corpus::fiber_report(&Document::load(input)?, caps),
        Command::VerifyBound { input } => corpus::verify_bound_report(&Document::load(input)?, caps),
        Command::CylinderDemo => corpus::cylinder_demo(o.seed, o.count),
        Command::CorpusRun => corpus::corpus_run(o.seed, o.count, caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.opts.timing {
                report.wall_time_ms = Some(start.elapsed().as_millis());
            }
            let out = if cli.opts.text { report.to_text() } else { report.to_json() + "\n" };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
