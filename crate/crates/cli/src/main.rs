use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ringoid_cli::check::{cmd_check, Property};
use ringoid_cli::demo::{cmd_demo_examples, DEFAULT_WINDOW};
use ringoid_cli::enumerate::{cmd_enumerate, work_ceiling_from_env, EnumerateConfig, OutputFormat};
use ringoid_cli::reproduce::{cmd_reproduce_table, TableConfig};
use ringoid_cli::scan::{cmd_scan_groupoids, ScanConfig, ScanMode};
use ringoid_cli::{CliError, Outcome};
use ringoid_core::search::{Class, Filter, GroupoidConstraints};

/// Verify and enumerate finite ringoids and semirings.
#[derive(Parser)]
#[command(name = "ringoid", version)]
struct Cli {
    /// Suppress progress notes on stderr.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every known property of a pair of tables.
    Check {
        /// Table file (text or JSON); `-` reads stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Fail unless this property holds (repeatable): distributive, semiring,
        /// generalised-parasemifield, congruence-simple, ideal-simple, ideal-free,
        /// k-ideal-simple.
        #[arg(long = "require", value_name = "PROPERTY")]
        require: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate semirings with idempotent addition and absorbing zero.
    Enumerate(EnumerateArgs),
    /// Recompute the congruence-simple count table and compare with the
    /// published values.
    ReproduceTable {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Rows to compute (repeatable); all by default.
        #[arg(long = "class", value_enum)]
        classes: Vec<ClassArg>,
        /// Also compute cells without a published value.
        #[arg(long)]
        include_unknown: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Scan small groupoids and generalised parasemifields.
    ScanGroupoids(ScanArgs),
    /// Check the midpoint parasemifields and (Z, max, +).
    DemoExamples {
        /// Odd moduli for the midpoint construction.
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 3, 5, 7, 9])]
        moduli: Vec<usize>,
        /// Half-width K of the window [-K, K] for (Z, max, +).
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    General,
    Commutative,
    Associative,
}

impl From<ClassArg> for Class {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::General => Class::General,
            ClassArg::Commutative => Class::Commutative,
            ClassArg::Associative => Class::Associative,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    CongruenceSimple,
    KIdealSimple,
    IdealSimple,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    /// Constrain the multiplication; without it every class is counted.
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    #[arg(long, value_enum, default_value = "congruence-simple")]
    filter: FilterArg,
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: FormatArg,
    /// Worker threads (all cores by default).
    #[arg(long)]
    jobs: Option<usize>,
    /// Log of finished work units (requires --count-only).
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint instead of starting over.
    #[arg(long)]
    resume: bool,
    #[arg(long, value_enum, default_value = "on")]
    prune: OnOff,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").args(["transitive", "parasemifields", "full_aut"])))]
struct ScanArgs {
    #[arg(long)]
    order: usize,
    /// Only groupoids with transitive automorphism group; checks the
    /// element-count identities.
    #[arg(long)]
    transitive: bool,
    /// Generalised parasemifields instead of groupoids.
    #[arg(long)]
    parasemifields: bool,
    /// Every labeled table, checked for Aut = Sym against the known list.
    #[arg(long)]
    full_aut: bool,
    #[arg(long)]
    commutative: bool,
    #[arg(long)]
    associative: bool,
    #[arg(long)]
    quasigroup: bool,
    #[arg(long)]
    idempotent: bool,
    /// Random draws for transitive scans beyond the exhaustive range.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the tables found.
    #[arg(long)]
    list: bool,
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check { input, require, json } => {
            let required = require
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<Property>, _>>()?;
            cmd_check(&read_input(&input)?, &required, json)
        }
        Command::Enumerate(a) => {
            let cfg = EnumerateConfig {
                order: a.order,
                class: a.class.map(Class::from),
                filter: match a.filter {
                    FilterArg::CongruenceSimple => Filter::CongruenceSimple,
                    FilterArg::KIdealSimple => Filter::KIdealSimple,
                    FilterArg::IdealSimple => Filter::IdealSimple,
                    FilterArg::All => Filter::All,
                },
                count_only: a.count_only,
                out: a.out,
                format: match a.format {
                    FormatArg::Jsonl => OutputFormat::Jsonl,
                    FormatArg::Csv => OutputFormat::Csv,
                    FormatArg::Text => OutputFormat::Text,
                },
                jobs: a.jobs,
                checkpoint: a.checkpoint,
                resume: a.resume,
                prune: a.prune == OnOff::On,
                work_ceiling: work_ceiling_from_env()?,
            };
            cmd_enumerate(&cfg)
        }
        Command::ReproduceTable {
            max_order,
            classes,
            include_unknown,
            jobs,
            json,
        } => cmd_reproduce_table(
            &TableConfig {
                max_order,
                classes: classes.into_iter().map(Class::from).collect(),
                include_unknown,
                jobs,
            },
            json,
        ),
        Command::ScanGroupoids(a) => {
            let mode = if a.transitive {
                ScanMode::Transitive
            } else if a.parasemifields {
                ScanMode::Parasemifields
            } else if a.full_aut {
                ScanMode::FullAut
            } else {
                ScanMode::All
            };
            cmd_scan_groupoids(&ScanConfig {
                order: a.order,
                mode,
                constraints: GroupoidConstraints {
                    commutative: a.commutative,
                    associative: a.associative,
                    quasigroup: a.quasigroup,
                    idempotent: a.idempotent,
                },
                samples: a.samples,
                seed: a.seed,
                list: a.list,
            })
        }
        Command::DemoExamples { moduli, window } => cmd_demo_examples(&moduli, window),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if !quiet && !outcome.notes.is_empty() {
                eprint!("{}", outcome.notes);
            }
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", outcome.failure_report());
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
