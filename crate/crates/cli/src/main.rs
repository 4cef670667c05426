use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corelab::commands::{self, Settings};
use corelab::corpus::{self, RunMode};
use corelab::error::{CliError, Result};
use corelab::report::{MetaContext, Report};
use corelab::ringspec::{self, RingSpec};

/// Exact core and graded-core computations in weighted quotient rings.
#[derive(Parser)]
#[command(name = "corelab", version, disable_help_subcommand = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Coefficient field: `q` for the rationals or `p=<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Master seed for every randomized search (default: CORELAB_SEED or 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte-Carlo sample budget.
    #[arg(long, global = true, default_value_t = 256)]
    samples: usize,
    /// Consecutive agreeing samples required for stabilization.
    #[arg(long, global = true, default_value_t = 8)]
    window: usize,
    /// Largest reduction number certified before giving up.
    #[arg(long, global = true, default_value_t = 24)]
    rmax: u32,
    /// Override the Groebner truncation budget for the ring presentation.
    #[arg(long, global = true)]
    degree_cap: Option<u64>,
    /// Record Groebner statistics in the report meta block.
    #[arg(long, global = true, default_value_t = false)]
    stats: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Mc,
    Colon,
    Both,
}

impl ModeArg {
    fn to_mode(self) -> RunMode {
        match self {
            ModeArg::Mc => RunMode::MonteCarlo,
            ModeArg::Colon => RunMode::Colon,
            ModeArg::Both => RunMode::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal; optionally a normal form.
    Gb {
        /// Ring: inline `k[x:1,y:2]/(...)` or a spec file path.
        ring: String,
        /// Ideal generators.
        #[arg(required = true)]
        gens: Vec<String>,
        /// Also reduce this polynomial and report membership.
        #[arg(long)]
        nf: Option<String>,
    },
    /// Hilbert series data: numerator, dimensions, a-invariant.
    Hilbert {
        ring: String,
        /// Tabulate piece dimensions through this degree.
        #[arg(long, default_value_t = 16)]
        up_to: u64,
    },
    /// Graded invariants and structural certificates of the ring.
    Invariants { ring: String },
    /// Core of an explicit equal-degree m-primary ideal.
    Core {
        ring: String,
        #[arg(required = true)]
        gens: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Mc)]
        mode: ModeArg,
    },
    /// Graded core of the degree filtration S_(>=N).
    Grcore {
        ring: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Mc)]
        mode: ModeArg,
    },
    /// Check a closed formula or criterion against computation.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Recompute one graded core over several coefficient fields.
    Charscan {
        ring: String,
        #[arg(long)]
        n: u64,
        /// Prime characteristics to include.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Also include characteristic zero.
        #[arg(long, default_value_t = false)]
        rationals: bool,
    },
    /// Batch runner for corpus files.
    Corpus {
        #[command(subcommand)]
        action: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// core(m^N) = m^(N*d + a + 1) in a standard graded reduced CM ring.
    Standard {
        ring: String,
        #[arg(long)]
        n: u64,
        /// Assert that the ring is reduced (the hypothesis is not decidable
        /// here in general; a Jacobian guard still vetoes clear failures).
        #[arg(long, default_value_t = false)]
        reduced: bool,
    },
    /// Sandwich bounds for the graded core in a non-standard grading.
    Sandwich {
        ring: String,
        #[arg(long)]
        n: u64,
    },
    /// Dimension-one criterion: core = graded core iff a degree-one
    /// nonzerodivisor exists.
    Dim1 {
        ring: String,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run every experiment in a corpus file.
    Run {
        path: std::path::PathBuf,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Parse a corpus file and echo its canonical form.
    Check { path: std::path::PathBuf },
}

fn resolve_seed(cli: &GlobalArgs) -> Result<u64> {
    if let Some(seed) = cli.seed {
        return Ok(seed);
    }
    match std::env::var("CORELAB_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::usage(format!("CORELAB_SEED is not a u64: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Gb { .. } => "gb".into(),
        Command::Hilbert { .. } => "hilbert".into(),
        Command::Invariants { .. } => "invariants".into(),
        Command::Core { .. } => "core".into(),
        Command::Grcore { .. } => "grcore".into(),
        Command::Verify { what } => match what {
            VerifyCommand::Standard { .. } => "verify standard".into(),
            VerifyCommand::Sandwich { .. } => "verify sandwich".into(),
            VerifyCommand::Dim1 { .. } => "verify dim1".into(),
        },
        Command::Charscan { .. } => "charscan".into(),
        Command::Corpus { action } => match action {
            CorpusCommand::Run { .. } => "corpus run".into(),
            CorpusCommand::Check { .. } => "corpus check".into(),
        },
    }
}

fn ring_spec(text: &str) -> Result<RingSpec> {
    ringspec::resolve(text)
}

fn gb_stats(settings: &Settings, spec: &RingSpec) -> Option<Value> {
    if !settings.stats {
        return None;
    }
    let ring = settings.build_ring(spec).ok()?;
    let stats = ring.q_basis().stats();
    Some(json!({
        "presentation_pairs": stats.pairs_considered,
        "presentation_zero_reductions": stats.zero_reductions,
        "presentation_basis_len": ring.q_basis().elements().len(),
    }))
}

fn run(cli: Cli) -> Result<Report> {
    let field = ringspec::parse_field(&cli.global.field)?;
    let seed = resolve_seed(&cli.global)?;
    let settings = Settings {
        field,
        seed,
        samples: cli.global.samples,
        window: cli.global.window,
        rmax: cli.global.rmax,
        degree_cap: cli.global.degree_cap,
        stats: cli.global.stats,
    };
    let started = Instant::now();
    let command = command_name(&cli.command);

    let (mut report, stats) = match &cli.command {
        Command::Gb { ring, gens, nf } => {
            let spec = ring_spec(ring)?;
            let stats = gb_stats(&settings, &spec);
            (commands::cmd_gb(&settings, &spec, gens, nf.as_deref())?, stats)
        }
        Command::Hilbert { ring, up_to } => {
            let spec = ring_spec(ring)?;
            let stats = gb_stats(&settings, &spec);
            (commands::cmd_hilbert(&settings, &spec, *up_to)?, stats)
        }
        Command::Invariants { ring } => {
            let spec = ring_spec(ring)?;
            let stats = gb_stats(&settings, &spec);
            (commands::cmd_invariants(&settings, &spec)?, stats)
        }
        Command::Core { ring, gens, mode } => {
            let spec = ring_spec(ring)?;
            let stats = gb_stats(&settings, &spec);
            (
                commands::cmd_core(&settings, &spec, gens, mode.to_mode())?,
                stats,
            )
        }
        Command::Grcore { ring, n, mode } => {
            let spec = ring_spec(ring)?;
            let stats = gb_stats(&settings, &spec);
            (
                commands::cmd_grcore(&settings, &spec, *n, mode.to_mode())?,
                stats,
            )
        }
        Command::Verify { what } => match what {
            VerifyCommand::Standard { ring, n, reduced } => {
                let spec = ring_spec(ring)?;
                let stats = gb_stats(&settings, &spec);
                (
                    commands::cmd_verify_standard(&settings, &spec, *n, *reduced)?,
                    stats,
                )
            }
            VerifyCommand::Sandwich { ring, n } => {
                let spec = ring_spec(ring)?;
                let stats = gb_stats(&settings, &spec);
                (commands::cmd_verify_sandwich(&settings, &spec, *n)?, stats)
            }
            VerifyCommand::Dim1 { ring, n } => {
                let spec = ring_spec(ring)?;
                let stats = gb_stats(&settings, &spec);
                (commands::cmd_verify_dim1(&settings, &spec, *n)?, stats)
            }
        },
        Command::Charscan {
            ring,
            n,
            primes,
            rationals,
        } => {
            let spec = ring_spec(ring)?;
            commands::check_scan_spec(&spec)?;
            if primes.is_empty() && !rationals {
                return Err(CliError::usage(
                    "charscan needs --primes and/or --rationals".to_string(),
                ));
            }
            (
                commands::cmd_charscan(&settings, &spec, *n, primes, *rationals)?,
                None,
            )
        }
        Command::Corpus { action } => match action {
            CorpusCommand::Run { path, jobs } => {
                let text = std::fs::read_to_string(path)?;
                let parsed = corpus::parse(&text, &path.display().to_string())?;
                (commands::cmd_corpus_run(&settings, &parsed, *jobs)?, None)
            }
            CorpusCommand::Check { path } => {
                let text = std::fs::read_to_string(path)?;
                let parsed = corpus::parse(&text, &path.display().to_string())?;
                let report = Report::new(json!({
                    "rings": parsed.rings.len(),
                    "experiments": parsed.experiments.len(),
                    "canonical": corpus::render(&parsed),
                }));
                (report, None)
            }
        },
    };

    MetaContext {
        command,
        field: settings.field.clone(),
        seed,
        started,
        options: settings.options_json(),
        stats,
    }
    .apply(&mut report);
    Ok(report)
}

fn render(format: Format, report: &Report) -> String {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report.to_value())
                .expect("reports are valid JSON trees");
            text.push('\n');
            text
        }
        Format::Text => report.render_text(),
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<()> {
    match out {
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are successful exits; real parse errors are
            // usage errors.
            let code = if err.use_stderr() { 3 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.global.format;
    let out = cli.global.out.clone();
    match run(cli) {
        Ok(report) => {
            let text = render(format, &report);
            if let Err(err) = emit(out.as_deref(), &text) {
                eprintln!("error: {err}");
                return ExitCode::from(3);
            }
            ExitCode::from(u8::try_from(report.exit).unwrap_or(2))
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(u8::try_from(err.exit_code()).unwrap_or(2))
        }
    }
}
