//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 infeasible input, 3 capacity exceeded.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numsemigroup::{
    enumerate_irreducibles_with, enumerate_with_frobenius_with, oracle, AvoidanceProblem, Error,
    GenSet, OutputRecord, SolutionSet, Workers,
};

/// Inputs must stay below 2³¹.
const MAX_INPUT: u64 = (1 << 31) - 1;
const MAX_FROBENIUS: u32 = 200;
const MAX_FORBIDDEN: u32 = 200;

#[derive(Parser)]
#[command(name = "numsemigroup", version, about = "Numerical semigroups with required and forbidden elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for the enumerators.
    #[arg(long, default_value_t = 1, global = true)]
    parallel: usize,

    /// Print at most K records.
    #[arg(long, value_name = "K", global = true)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible semigroups with Frobenius number F containing A.
    Irreducibles(FrobeniusArgs),
    /// All semigroups with Frobenius number F containing A.
    Semigroups(FrobeniusArgs),
    /// Maximal semigroups containing A and disjoint from B.
    Maximal {
        #[command(flatten)]
        args: AvoidArgs,
        /// Emit the minimal Apéry vectors instead of the semigroups.
        #[arg(long)]
        apery: bool,
    },
    /// Minimal sets hitting every partition of B while avoiding ⟨A⟩.
    Solve(AvoidArgs),
    /// Brute-force references.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    Irreducibles(FrobeniusArgs),
    Semigroups(FrobeniusArgs),
    Maximal(AvoidArgs),
    HittingSets(AvoidArgs),
}

#[derive(Args)]
struct FrobeniusArgs {
    /// Required elements, comma separated.
    #[arg(short = 'A', value_name = "LIST", default_value = "", value_parser = parse_list)]
    a: List,
    /// Frobenius number.
    #[arg(short = 'F', value_parser = clap::value_parser!(u64).range(1..))]
    f: u64,
}

#[derive(Args)]
struct AvoidArgs {
    /// Required elements, comma separated.
    #[arg(short = 'A', value_name = "LIST", default_value = "", value_parser = parse_list)]
    a: List,
    /// Forbidden elements, comma separated.
    #[arg(short = 'B', value_name = "LIST", value_parser = parse_list)]
    b: List,
}

/// Comma-separated non-negative integers.
#[derive(Clone)]
struct List(Vec<u64>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(List)
}

enum Failure {
    Usage(String),
    Infeasible(String),
    Capacity(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Infeasible(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Infeasible(m) | Failure::Capacity(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(_) => Failure::Infeasible(e.to_string()),
            Error::CapacityExceeded { .. } => Failure::Capacity(e.to_string()),
            Error::EmptyForbidden => Failure::Usage(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn genset(raw: &List) -> Result<GenSet, Failure> {
    if let Some(&x) = raw.0.iter().find(|&&x| x > MAX_INPUT) {
        return Err(Failure::Capacity(format!("input {x} exceeds {MAX_INPUT}")));
    }
    Ok(GenSet::normalize(raw.0.iter().map(|&x| x as u32)))
}

fn frobenius(f: u64, limit: u32) -> Result<u32, Failure> {
    if f > limit as u64 {
        return Err(Failure::Capacity(format!("F = {f} exceeds {limit}")));
    }
    Ok(f as u32)
}

fn forbidden(raw: &List, limit: u32) -> Result<GenSet, Failure> {
    let b = genset(raw)?;
    match b.max() {
        None => Err(Failure::Usage("the forbidden set B must be non-empty".into())),
        Some(m) if m > limit => Err(Failure::Capacity(format!("max(B) = {m} exceeds {limit}"))),
        Some(_) => Ok(b),
    }
}

fn records(cli: &Cli) -> Result<Vec<OutputRecord>, Failure> {
    let workers = Workers::new(cli.parallel);
    let semigroups = |v: Vec<_>| v.iter().map(OutputRecord::semigroup).collect();
    let solutions = |v: Vec<Vec<u32>>| -> Result<Vec<OutputRecord>, Failure> {
        v.into_iter()
            .map(|k| {
                let s = numsemigroup::NumericalSemigroup::from_gaps(k)?;
                Ok(OutputRecord::solution(&SolutionSet::from(&s)))
            })
            .collect()
    };
    Ok(match &cli.command {
        Command::Irreducibles(x) => semigroups(enumerate_irreducibles_with(
            &genset(&x.a)?,
            frobenius(x.f, MAX_FROBENIUS)?,
            workers,
        )?),
        Command::Semigroups(x) => semigroups(enumerate_with_frobenius_with(
            &genset(&x.a)?,
            frobenius(x.f, MAX_FROBENIUS)?,
            workers,
        )?),
        Command::Maximal { args, apery } => {
            let problem = AvoidanceProblem::new(&genset(&args.a)?, &forbidden(&args.b, MAX_FORBIDDEN)?)?;
            if *apery {
                problem
                    .minimal_joins(workers)?
                    .iter()
                    .map(|v| OutputRecord::apery(v).map_err(Failure::from))
                    .collect::<Result<_, _>>()?
            } else {
                semigroups(problem.solve(workers)?)
            }
        }
        Command::Solve(x) => numsemigroup::solve_with(&genset(&x.a)?, &forbidden(&x.b, MAX_FORBIDDEN)?, workers)?
            .iter()
            .map(OutputRecord::solution)
            .collect(),
        Command::Oracle(sub) => match sub {
            OracleCommand::Irreducibles(x) => semigroups(oracle::irreducibles_bruteforce(
                frobenius(x.f, oracle::MAX_ORACLE_FROBENIUS)?,
                &genset(&x.a)?,
            )?),
            OracleCommand::Semigroups(x) => semigroups(oracle::all_semigroups_with_frobenius(
                frobenius(x.f, oracle::MAX_ORACLE_FROBENIUS)?,
                &genset(&x.a)?,
            )?),
            OracleCommand::Maximal(x) => semigroups(oracle::maximal_avoiding_bruteforce(
                &genset(&x.a)?,
                &forbidden(&x.b, oracle::MAX_ORACLE_FROBENIUS)?,
            )?),
            OracleCommand::HittingSets(x) => solutions(oracle::minimal_hitting_sets(
                &genset(&x.a)?,
                &forbidden(&x.b, oracle::MAX_HITTING_TARGET)?,
            )?)?,
        },
    })
}

fn emit(cli: &Cli, records: &[OutputRecord]) -> io::Result<()> {
    let shown = cli.limit.map_or(records.len(), |k| k.min(records.len()));
    let mut out = BufWriter::new(io::stdout().lock());
    for r in &records[..shown] {
        match cli.format {
            Format::Text => writeln!(out, "{r}")?,
            Format::Json => writeln!(out, "{}", r.to_json())?,
        }
    }
    out.flush()?;
    if shown < records.len() {
        eprintln!("note: output truncated to {shown} of {} records", records.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match records(&cli) {
        Ok(rs) => match emit(&cli, &rs) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
