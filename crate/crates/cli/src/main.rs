//! `setpart`: classify set partitions, apply phi/psi, enumerate `Π_n`, print
//! the census and run the exhaustive verifier.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 parse or usage
//! error, 3 input outside the domain of phi/psi, 4 `n` above the cap.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use setpart_core::{
    atomic_factorization, census_sharded, classify, enumeration::default_shards,
    iterate_partitions, phi, psi, verify_bijection_sharded, BijectionWitness, Cap, ClassKind,
    PartitionError, SetPartition,
};

const CAP_ENV: &str = "PARTITION_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "setpart",
    version,
    about = "Atomic and unsplitable set partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form and the class: BOTH, ATOMIC_ONLY, UNSPLITABLE_ONLY or NEITHER
    Classify { partition: String },
    /// Map an ATOMIC_ONLY partition to its UNSPLITABLE_ONLY partner
    Phi {
        partition: String,
        /// Also print the chosen indices
        #[arg(short, long)]
        verbose: bool,
    },
    /// Map an UNSPLITABLE_ONLY partition back to its ATOMIC_ONLY partner
    Psi {
        partition: String,
        /// Also print the chosen indices and case
        #[arg(short, long)]
        verbose: bool,
    },
    /// Print the atomic factors, one per line
    Factor { partition: String },
    /// List the partitions of [n] in restricted-growth-string order
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// One row per n = 1..max-n: n, bell, both, atomic_only, unsplitable_only, neither, bijection_ok
    Census {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Emit one JSON record per row instead of tab-separated text
        #[arg(long)]
        json: bool,
        /// Number of contiguous enumeration shards (default: 4 per worker thread)
        #[arg(long)]
        shards: Option<usize>,
    },
    /// Check the bijection exhaustively for n = 1..max-n
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        shards: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Both,
    AtomicOnly,
    UnsplitableOnly,
    Neither,
}

impl Filter {
    fn kind(self) -> Option<ClassKind> {
        match self {
            Filter::All => None,
            Filter::Both => Some(ClassKind::Both),
            Filter::AtomicOnly => Some(ClassKind::AtomicOnly),
            Filter::UnsplitableOnly => Some(ClassKind::UnsplitableOnly),
            Filter::Neither => Some(ClassKind::Neither),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Partition(PartitionError),
    Usage(String),
    Io(io::Error),
    Counterexample,
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        Failure::Partition(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Counterexample => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Partition(e) => match e {
                PartitionError::Domain { .. } => 3,
                PartitionError::CapExceeded { .. } => 4,
                PartitionError::Invariant(_) => 1,
                _ => 2,
            },
        }
    }
}

fn cap_from_env() -> Result<Cap, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => {
            let n: usize = raw.trim().parse().map_err(|_| {
                Failure::Usage(format!("{CAP_ENV}={raw} is not a non-negative integer"))
            })?;
            Ok(Cap::new(n)?)
        }
        Err(std::env::VarError::NotPresent) => Ok(Cap::default()),
        Err(e) => Err(Failure::Usage(format!("{CAP_ENV}: {e}"))),
    }
}

fn parse(text: &str) -> Result<SetPartition, Failure> {
    Ok(text.parse::<SetPartition>()?)
}

fn print_image(
    out: &mut impl Write,
    image: &SetPartition,
    witness: &BijectionWitness,
    verbose: bool,
) -> io::Result<()> {
    writeln!(out, "{image}")?;
    if verbose {
        writeln!(out, "{witness}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Classify { partition } => {
            let p = parse(&partition)?;
            let kind = classify(&p)?.kind();
            writeln!(out, "{p}\t{kind}")?;
        }
        Command::Phi { partition, verbose } => {
            let (image, witness) = phi(&parse(&partition)?)?;
            print_image(&mut out, &image, &witness, verbose)?;
        }
        Command::Psi { partition, verbose } => {
            let (image, witness) = psi(&parse(&partition)?)?;
            print_image(&mut out, &image, &witness, verbose)?;
        }
        Command::Factor { partition } => {
            for factor in atomic_factorization(&parse(&partition)?)? {
                writeln!(out, "{factor}")?;
            }
        }
        Command::Enumerate { n, filter } => {
            let cap = cap_from_env()?;
            for p in iterate_partitions(n, cap)? {
                let keep = match filter.kind() {
                    None => true,
                    Some(kind) => classify(&p)?.kind() == kind,
                };
                if keep {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Census {
            max_n,
            json,
            shards,
        } => {
            let cap = cap_from_env()?;
            cap.check(max_n)?;
            let shards = shards.unwrap_or_else(default_shards);
            for n in 1..=max_n {
                let row = census_sharded(n, cap, shards)?;
                if json {
                    let record =
                        serde_json::to_string(&row).map_err(|e| Failure::Usage(e.to_string()))?;
                    writeln!(out, "{record}")?;
                } else {
                    writeln!(out, "{}", row.to_tsv())?;
                }
                out.flush()?;
            }
        }
        Command::Verify { max_n, shards } => {
            let cap = cap_from_env()?;
            cap.check(max_n)?;
            let shards = shards.unwrap_or_else(default_shards);
            let mut any_failed = false;
            for n in 1..=max_n {
                let report = verify_bijection_sharded(n, cap, shards)?;
                let c = report.counts;
                let status = if report.passed() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "n={n}\t{status}\tatomic_only={}\tunsplitable_only={}\tatomic={}\tunsplitable={}",
                    c.atomic_only,
                    c.unsplitable_only,
                    c.atomic(),
                    c.unsplitable()
                )?;
                for failure in &report.failures {
                    writeln!(out, "  counterexample: {failure}")?;
                }
                out.flush()?;
                any_failed |= !report.passed();
            }
            if any_failed {
                return Err(Failure::Counterexample);
            }
            writeln!(out, "all checks passed for n <= {max_n}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Partition(e) => eprintln!("error: {e}"),
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Counterexample => eprintln!("error: verification found a counterexample"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
