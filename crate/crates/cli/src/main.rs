use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use atomic::search::{
    find_converse_counterexamples, verify_prop1, verify_prop2, verify_theorem3, CampaignConfig,
    CampaignReport, EnumerationCaps, Mode,
};
use atomic::semigroup::ClosureConfig;
use atomic::text::{parse_dfa, serialize_dfa};
use atomic::witness::{example1, witness_max_semigroup};
use atomic::Dfa;

mod report;

use report::Render;

#[derive(Parser)]
#[command(
    name = "atomic",
    version,
    about = "Syntactic complexity and atoms of regular languages"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Largest transition semigroup a closure may build.
    #[arg(
        long,
        env = "ATOMIC_MAX_ELEMENTS",
        default_value_t = 100_000_000,
        global = true
    )]
    max_elements: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Minimality, syntactic complexity and atom table of a DFA.
    Analyze { file: PathBuf },
    /// Transition semigroup summary.
    Semigroup {
        file: PathBuf,
        /// List every element with its shortest word.
        #[arg(long)]
        witnesses: bool,
    },
    /// Atom complexities, or the minimal DFA of one atom.
    Atoms {
        file: PathBuf,
        /// Atom label over the minimal DFA's states, e.g. `02` or `Φ`.
        #[arg(long)]
        atom: Option<String>,
    },
    /// Transition table of the átomaton.
    Atomaton { file: PathBuf },
    /// Maximal atom complexities for every number of complemented quotients.
    Bounds { n: usize },
    /// Interval reach of an atom of a full-semigroup DFA.
    Intervals {
        file: PathBuf,
        #[arg(long)]
        atom: String,
    },
    /// Verification campaigns.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[command(flatten)]
        campaign: CampaignArgs,
        /// Skip the interval-calculus checks on full instances.
        #[arg(long)]
        no_interval_checks: bool,
    },
    /// Counterexample searches.
    Search {
        #[arg(value_enum)]
        target: SearchTarget,
        #[command(flatten)]
        campaign: CampaignArgs,
    },
    /// Print a named DFA in the text format.
    Witness {
        #[command(subcommand)]
        which: WitnessKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Theorem3,
    Prop1,
    Prop2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchTarget {
    Converse,
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Ternary DFA whose transition semigroup has all n^n maps.
    MaxSemigroup {
        #[arg(long)]
        n: usize,
    },
    /// The three-state, four-letter running example.
    Example1,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Walk every DFA (the default unless --samples is given).
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Number of random DFAs to draw.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, env = "ATOMIC_SEED", default_value_t = 0)]
    seed: u64,
    /// Worker threads; all cores when omitted.
    #[arg(long, env = "ATOMIC_WORKERS")]
    workers: Option<usize>,
    /// Largest state count for exhaustive enumeration.
    #[arg(long, env = "ATOMIC_MAX_STATES", default_value_t = 4)]
    max_states: usize,
    /// Largest alphabet for exhaustive enumeration.
    #[arg(long, env = "ATOMIC_MAX_LETTERS", default_value_t = 3)]
    max_letters: usize,
    /// Largest number of DFAs an exhaustive run may visit.
    #[arg(long, env = "ATOMIC_MAX_DFAS", default_value_t = 300_000_000)]
    max_dfas: u64,
    /// Keep at most this many records.
    #[arg(long)]
    limit: Option<usize>,
    /// Write the JSONL log here.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Stamp records with the current Unix time.
    #[arg(long)]
    stamp: bool,
}

impl CampaignArgs {
    fn mode(&self) -> Mode {
        match (self.exhaustive, self.samples) {
            (false, Some(samples)) => Mode::Sample {
                samples,
                seed: self.seed,
            },
            _ => Mode::Exhaustive,
        }
    }

    fn config(&self, max_elements: u64, interval_checks: bool) -> Result<CampaignConfig> {
        let timestamp = if self.stamp {
            Some(SystemTime::now().duration_since(UNIX_EPOCH)?.as_secs())
        } else {
            None
        };
        Ok(CampaignConfig {
            closure: ClosureConfig {
                max_elements,
                keep_witnesses: false,
            },
            caps: EnumerationCaps {
                max_states: self.max_states,
                max_letters: self.max_letters,
                max_dfas: self.max_dfas,
            },
            workers: self.workers,
            timestamp,
            interval_checks,
            record_limit: self.limit,
        })
    }
}

fn read_dfa(path: &PathBuf) -> Result<Dfa> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let name = if path.as_os_str() == "-" {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    };
    parse_dfa(&text).with_context(|| format!("parsing {name}"))
}

fn emit<T: Render>(value: &T, format: Format) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Table => out.write_all(value.table().as_bytes())?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, value)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn finish_campaign(
    report: &CampaignReport,
    args: &CampaignArgs,
    config: &CampaignConfig,
    format: Format,
) -> Result<()> {
    let log = report.to_jsonl(config.timestamp);
    if let Some(path) = &args.output {
        fs::write(path, &log).with_context(|| format!("writing {}", path.display()))?;
    }
    match format {
        Format::Json if args.output.is_none() => io::stdout().lock().write_all(log.as_bytes())?,
        _ => emit(&report.summary(config.timestamp), format)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let closure = ClosureConfig {
        max_elements: cli.max_elements,
        keep_witnesses: true,
    };
    match &cli.command {
        Command::Analyze { file } => {
            emit(&report::analyze(&read_dfa(file)?, &closure)?, cli.format)
        }
        Command::Semigroup { file, witnesses } => emit(
            &report::semigroup(&read_dfa(file)?, &closure, *witnesses)?,
            cli.format,
        ),
        Command::Atoms { file, atom: None } => emit(&report::atoms(&read_dfa(file)?)?, cli.format),
        Command::Atoms {
            file,
            atom: Some(label),
        } => {
            let atom = report::atom_dfa(&read_dfa(file)?, label)?;
            match cli.format {
                Format::Table => print!("{}", atom.dfa),
                Format::Json => emit(&atom, cli.format)?,
            }
            Ok(())
        }
        Command::Atomaton { file } => emit(&report::atomaton(&read_dfa(file)?)?, cli.format),
        Command::Bounds { n } => emit(&report::bounds(*n)?, cli.format),
        Command::Intervals { file, atom } => emit(
            &report::intervals(&read_dfa(file)?, atom, &closure)?,
            cli.format,
        ),
        Command::Verify {
            claim,
            campaign,
            no_interval_checks,
        } => {
            let config = campaign.config(cli.max_elements, !no_interval_checks)?;
            let (n, k, mode) = (campaign.n, campaign.k, campaign.mode());
            let rep = match claim {
                Claim::Theorem3 => verify_theorem3(n, k, mode, &config)?,
                Claim::Prop1 => verify_prop1(n, k, mode, &config)?,
                Claim::Prop2 => verify_prop2(n, k, mode, &config)?,
            };
            finish_campaign(&rep, campaign, &config, cli.format)
        }
        Command::Search { target, campaign } => {
            let config = campaign.config(cli.max_elements, false)?;
            let rep = match target {
                SearchTarget::Converse => {
                    find_converse_counterexamples(campaign.n, campaign.k, campaign.mode(), &config)?
                }
            };
            finish_campaign(&rep, campaign, &config, cli.format)
        }
        Command::Witness { which } => {
            let d = match which {
                WitnessKind::Example1 => example1(),
                WitnessKind::MaxSemigroup { n } => {
                    if *n == 0 {
                        bail!("--n must be at least 1");
                    }
                    witness_max_semigroup(*n, &closure)?
                }
            };
            print!("{}", serialize_dfa(&d));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
