//! `dprefix`: command-line access to the deciders and curve tools.
//!
//! Exit status: 0 for TRUE or a completed report, 1 for FALSE, 2 for
//! INCONCLUSIVE, 64 for usage errors and 65 for input errors.

mod output;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dprefix_core::search::Domain;
use dprefix_core::{parse, Poly};

use crate::output::{Outcome, Rendered};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "dprefix", version, about = "Decide Diophantine quantifier prefixes over the positive integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Polynomial text, or `-` to read it from standard input.
    polynomial: String,
    /// Print a JSON document instead of the text summary.
    #[arg(long)]
    json: bool,
    /// Report the wall-clock time in milliseconds.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Nat,
    Int,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Domain {
        match d {
            DomainArg::Nat => Domain::PositiveIntegers,
            DomainArg::Int => Domain::AllIntegers,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// forall x exists y: P(x, y) = 0
    DecideAe(Common),
    /// exists v forall x exists y: f(v, x, y) = 0
    DecideEae(Common),
    /// exists u exists v forall x exists y: f(u, v, x, y) = 0
    DecideEeae {
        #[command(flatten)]
        common: Common,
        /// Search bound for a positive-dimensional candidate locus.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Roots of P(x, y) in Q[x] as a polynomial in y
    FactorRoots(Common),
    /// Newton polygon in (x, y) and its interior lattice points
    GenusGeneric(Common),
    /// Points at infinity of f(x, y) = 0
    InfinityPoints(Common),
    /// Finitely many or possibly infinitely many integral points
    ClassifySiegel(Common),
    /// Integral points of f(x, y) = 0 up to a height bound
    SearchPoints {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long, value_enum, default_value = "nat")]
        domain: DomainArg,
    },
    /// Point counts for a list of ascending height bounds
    GrowthProbe {
        #[command(flatten)]
        common: Common,
        /// Comma-separated ascending heights.
        #[arg(long, value_delimiter = ',', required = true)]
        heights: Vec<u64>,
        #[arg(long, value_enum, default_value = "nat")]
        domain: DomainArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::DecideAe(_) => "decide-ae",
            Command::DecideEae(_) => "decide-eae",
            Command::DecideEeae { .. } => "decide-eeae",
            Command::FactorRoots(_) => "factor-roots",
            Command::GenusGeneric(_) => "genus-generic",
            Command::InfinityPoints(_) => "infinity-points",
            Command::ClassifySiegel(_) => "classify-siegel",
            Command::SearchPoints { .. } => "search-points",
            Command::GrowthProbe { .. } => "growth-probe",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::DecideAe(c)
            | Command::DecideEae(c)
            | Command::FactorRoots(c)
            | Command::GenusGeneric(c)
            | Command::InfinityPoints(c)
            | Command::ClassifySiegel(c) => c,
            Command::DecideEeae { common, .. }
            | Command::SearchPoints { common, .. }
            | Command::GrowthProbe { common, .. } => common,
        }
    }
}

fn run(command: &Command, f: &Poly) -> dprefix_core::Result<Rendered> {
    use dprefix_core::{classify, jst, prefix, qx_roots, search};
    Ok(match command {
        Command::DecideAe(_) => output::jst(&jst::decide_forall_exists(f)?),
        Command::DecideEae(_) => output::prefix(&prefix::decide_exists_forall_exists(f)?),
        Command::DecideEeae { bound, .. } => output::prefix(&prefix::decide_exists2_forall_exists(f, *bound)?),
        Command::FactorRoots(_) => output::factor_roots(f, &qx_roots::roots_in_qx(f, &"x".into(), &"y".into())?),
        Command::GenusGeneric(_) => output::genus_generic(f)?,
        Command::InfinityPoints(_) => output::infinity(&classify::points_at_infinity(f)?),
        Command::ClassifySiegel(_) => output::siegel(f, &classify::classify_siegel(f)?)?,
        Command::SearchPoints { bound, domain, .. } => {
            output::points(f, &search::enumerate_points(f, (*domain).into(), *bound)?)
        }
        Command::GrowthProbe { heights, domain, .. } => {
            let domain = Domain::from(*domain);
            output::growth(domain, &search::growth_probe(f, domain, heights)?)
        }
    })
}

fn read_polynomial(arg: &str) -> Result<String, String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
    Ok(s.trim().to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let command = &cli.command;
    let common = command.common();
    let text = match read_polynomial(&common.polynomial) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let f = match parse(&text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DATA);
        }
    };
    let start = Instant::now();
    let rendered = match run(command, &f) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DATA);
        }
    };
    let timing_ms = common.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
    if common.json {
        println!("{}", rendered.json(command.name(), &f, timing_ms));
    } else {
        print!("{}", rendered.human(command.name(), &f, timing_ms));
    }
    ExitCode::from(match rendered.outcome {
        Outcome::True | Outcome::Completed => 0,
        Outcome::False => 1,
        Outcome::Inconclusive => 2,
    })
}
