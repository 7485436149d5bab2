//! `subzeta` — exact subgroup-counting zeta functions at the command line.

mod spec;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use subzeta::abelian::{count_poly_table, leading_term, zeta_abelian};
use subzeta::lattice::all_subgroups;
use subzeta::recovery::{recover_from_zeta_numeric, recover_nilpotent};
use subzeta::zeta::{zeta_of_group, RenderStyle, ZetaSeries};
use subzeta::{Error, Limits, Partition};

#[derive(Parser)]
#[command(
    name = "subzeta",
    version,
    about = "Exact subgroup-counting zeta functions for finite groups",
    after_help = "Group specs combine atoms with a left-associative product 'x': \
                  C<m>, D<n>, Q8, H<p>, A(p;a,b,..), M(p;m,n), T(p;a,b,..), file(\"path\"). \
                  Example: subzeta zeta \"T(2;3,1,1)xC5\""
)]
struct Cli {
    /// Largest group order any constructor or product may produce.
    #[arg(long, global = true, default_value_t = 4096)]
    max_order: u64,

    /// Hard cap on the number of subgroups enumerated per lattice.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_subgroups: usize,

    /// Worker thread count (defaults to the available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the subgroup-counting zeta function of a group by enumeration.
    Zeta {
        /// Group specification, e.g. "C4xC2" or "M(3;2,1)".
        spec: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Export a group's full subgroup lattice as JSON.
    Lattice {
        /// Group specification, e.g. "D4" or "A(2;2,1)".
        spec: String,
    },
    /// Subgroup counts of a finite abelian p-group of the given type.
    Abelian {
        /// The prime p (ignored by --symbolic, whose table is uniform in p).
        #[arg(short)]
        p: u64,
        /// Type of the group, as comma-separated parts, largest first.
        #[arg(long, value_delimiter = ',')]
        partition: Vec<u32>,
        /// Print the count polynomials in p instead of numeric counts.
        #[arg(long)]
        symbolic: bool,
    },
    /// Leading term of each count polynomial, checked against the expansion.
    Hterm {
        /// Type of the group, as comma-separated parts, largest first.
        #[arg(long, value_delimiter = ',')]
        partition: Vec<u32>,
    },
    /// Recover the abelian type behind a sequence of subgroup counts.
    Recover {
        /// Order of the group the counts came from.
        #[arg(long)]
        order: u64,
        /// Subgroup counts, one per divisor of the order, in ascending
        /// order of divisor.
        #[arg(long, value_delimiter = ',')]
        coeffs: Vec<u64>,
        /// Treat the counts as a p-group series and recover its type.
        #[arg(short)]
        p: Option<u64>,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: duality, euler-nilpotent, order8-table,
        /// coincidence-metacyclic, coincidence-tilde, stehling, unimodal,
        /// recovery-roundtrip.
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

impl From<Format> for RenderStyle {
    fn from(f: Format) -> RenderStyle {
        match f {
            Format::Plain => RenderStyle::Plain,
            Format::Json => RenderStyle::Json,
            Format::Csv => RenderStyle::Csv,
            Format::Latex => RenderStyle::Latex,
        }
    }
}

/// Why a run did not succeed; each variant owns one exit code.
enum Failure {
    /// A named check came out negative; details are already on stdout/stderr.
    Check,
    /// Bad command line or unparseable input.
    Usage(String),
    /// An error out of the library: bad input (exit 2) or a guard (exit 3).
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl From<spec::ParseError> for Failure {
    fn from(e: spec::ParseError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly when a consumer such as `head` closes the pipe early, as
    // line-oriented tools do, instead of panicking mid-print: Rust ignores
    // SIGPIPE by default, turning EPIPE into a write error.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // A second build_global in one process is harmless: the pool is
        // process-wide and first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let lim = Limits { max_order: cli.max_order, max_subgroups: cli.max_subgroups };
    match run(&cli.command, &lim) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::OrderLimit { .. } | Error::SubgroupLimit { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: &Command, lim: &Limits) -> Result<(), Failure> {
    match command {
        Command::Zeta { spec, format } => {
            let g = spec::build(&spec::parse_spec(spec)?, lim)?;
            let z = zeta_of_group(&g, lim)?;
            let text = z.render((*format).into());
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
        Command::Lattice { spec } => {
            let g = spec::build(&spec::parse_spec(spec)?, lim)?;
            let lattice = all_subgroups(&g, lim)?;
            println!("{}", lattice.to_json());
            Ok(())
        }
        Command::Abelian { p, partition, symbolic } => {
            let lam = Partition::new(partition.clone()).map_err(Failure::Core)?;
            if *symbolic {
                for (k, poly) in count_poly_table(&lam).iter().enumerate() {
                    println!("k={k}: {}", poly.render("p"));
                }
            } else {
                println!("{}", zeta_abelian(&lam, *p)?.render(RenderStyle::Plain));
            }
            Ok(())
        }
        Command::Hterm { partition } => {
            let lam = Partition::new(partition.clone()).map_err(Failure::Core)?;
            let table = count_poly_table(&lam);
            let mut consistent = true;
            for (k, poly) in table.iter().enumerate() {
                let lt = leading_term(&lam, k as u64);
                println!("k={k}: coefficient {}, degree {}", lt.coefficient, lt.degree);
                if poly.degree() != Some(lt.degree as usize)
                    || poly.leading() != Some(&BigInt::from(lt.coefficient))
                {
                    eprintln!(
                        "mismatch at k={k}: expansion has {}",
                        poly.render("p")
                    );
                    consistent = false;
                }
            }
            if consistent {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Recover { order, coeffs, p } => {
            let z = series_over_divisors(*order, coeffs)?;
            match p {
                Some(p) => {
                    if *order == 1 {
                        println!("trivial group");
                    } else {
                        match recover_from_zeta_numeric(&z, *p)? {
                            Some(lam) => println!("{lam}"),
                            None => println!("no abelian match at {p}"),
                        }
                    }
                }
                None => println!("{}", recover_nilpotent(&z).to_json()),
            }
            Ok(())
        }
        Command::Verify { suite } => match verify::run_suite(suite, lim) {
            Some(Ok(true)) => Ok(()),
            Some(Ok(false)) => Err(Failure::Check),
            Some(Err(e)) => Err(Failure::Core(e)),
            None => Err(Failure::Usage(format!(
                "unknown suite {suite:?}; available: {}",
                verify::SUITES.join(", ")
            ))),
        },
    }
}

/// Interprets `coeffs` as subgroup counts listed against the divisors of
/// `order` in ascending order.
fn series_over_divisors(order: u64, coeffs: &[u64]) -> Result<ZetaSeries, Failure> {
    if order == 0 {
        return Err(Failure::Usage("the order must be positive".into()));
    }
    let divisors = {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= order {
            if order % d == 0 {
                small.push(d);
                if d * d != order {
                    large.push(order / d);
                }
            }
            d += 1;
        }
        large.reverse();
        small.extend(large);
        small
    };
    if coeffs.len() != divisors.len() {
        return Err(Failure::Usage(format!(
            "expected {} coefficients, one per divisor of {order} ({}), got {}",
            divisors.len(),
            divisors.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
            coeffs.len()
        )));
    }
    let series = ZetaSeries::from_counts(order, divisors.into_iter().zip(coeffs.iter().copied()))?;
    Ok(series)
}
