//! `chebexp`: build, expand and verify polynomials in exact arithmetic.
//!
//! Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 usage error.

use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use chebyshev_expansions::check::Mismatch;
use chebyshev_expansions::expansions::{cross_validate, expand_closed_form, expand_projection, expand_triangular};
use chebyshev_expansions::moments::{moment, MomentKey, WeightSign};
use chebyshev_expansions::output::{
    latex_align, latex_identity, table_rows, text_identity, to_json, ExpansionRecord, PolyFamily, PolyRecord,
};
use chebyshev_expansions::verify::{run_targets, VerifyOptions, VerifyTarget};
use chebyshev_expansions::{ChebKind, Expansion, Family};

#[derive(Parser)]
#[command(name = "chebexp", version, about = "Exact Chebyshev expansions of classical polynomials")]
struct Cli {
    /// Largest degree accepted by `poly`, `expand` and `table`.
    #[arg(long, global = true, default_value_t = 256)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial in the monomial basis.
    Poly {
        /// bernoulli, euler, hermite, chebyshev-t or chebyshev-u
        family: PolyFamily,
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Expand a polynomial in the T or U basis.
    Expand {
        /// monomial, bernoulli, euler or hermite
        family: Family,
        /// T or U
        basis: ChebKind,
        n: usize,
        #[arg(long, value_enum, default_value_t = ExpandFormat::Table)]
        format: ExpandFormat,
        #[arg(long, value_enum, default_value_t = SourceArg::All)]
        source: SourceArg,
    },
    /// Run a verification target, or `all` of them.
    Verify {
        target: String,
        #[arg(long, default_value_t = 24)]
        max_n: usize,
        /// Check the variant of the Bernoulli-via-Euler identity without the B_k factor.
        #[arg(long)]
        literal_eq8: bool,
        /// Check the variant of the Euler identity with E_{n-l}(x) in place of B_{n-l}(x).
        #[arg(long)]
        literal_eq9: bool,
    },
    /// Emit cross-validated coefficient tables.
    Table {
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<Family>,
        #[arg(long, value_delimiter = ',', default_value = "T,U")]
        bases: Vec<ChebKind>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// The integral of (1-x^2)^(k-1/2) x^m (minus) or (1-x^2)^(k+1/2) x^m (plus) over [-1, 1].
    Moment { k: usize, sign: WeightSign, m: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandFormat {
    Table,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Closed,
    Projection,
    Solve,
    All,
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(clap::error::ErrorKind::ValueValidation, msg).exit()
}

/// Like `Cli::parse`, but every usage error also prints the usage line.
fn parse_args() -> Cli {
    Cli::try_parse().unwrap_or_else(|e| {
        if !e.use_stderr() || e.to_string().contains("Usage:") {
            e.exit();
        }
        eprint!("{e}");
        eprintln!("\n{}", Cli::command().render_usage());
        std::process::exit(2)
    })
}

fn check_cap(n: usize, cap: usize) {
    if n > cap {
        usage_error(format!("degree {n} exceeds the cap of {cap} (raise it with --cap)"));
    }
}

/// The requested expansion, or the first disagreement between oracles.
fn expansion(family: Family, kind: ChebKind, n: usize, source: SourceArg) -> Result<Expansion, Mismatch> {
    let poly = || family.source_poly(n);
    match source {
        SourceArg::Closed => Ok(expand_closed_form(family, kind, n)),
        SourceArg::Projection => Ok(expand_projection(&poly(), kind)),
        SourceArg::Solve => Ok(expand_triangular(&poly(), kind)),
        SourceArg::All => {
            let report = cross_validate(family, kind, n);
            report.verdict.map(|()| report.closed_form)
        }
    }
}

fn mismatch_exit(m: &Mismatch) -> ExitCode {
    eprintln!("{}", m.to_json());
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = parse_args();
    match cli.command {
        Command::Poly { family, n, format } => {
            check_cap(n, cli.cap);
            let p = family.poly(n);
            match format {
                PolyFormat::Text => println!("{p}"),
                PolyFormat::Json => println!("{}", to_json(&PolyRecord::new(family, n, &p))),
            }
            ExitCode::SUCCESS
        }
        Command::Expand { family, basis, n, format, source } => {
            check_cap(n, cli.cap);
            let e = match expansion(family, basis, n, source) {
                Ok(e) => e,
                Err(m) => return mismatch_exit(&m),
            };
            match format {
                ExpandFormat::Table => {
                    println!("{}", text_identity(family, basis, n, &e.coefficients));
                    print!("{}", table_rows(&e.coefficients));
                }
                ExpandFormat::Json => println!("{}", to_json(&ExpansionRecord::new(family, basis, n, &e))),
                ExpandFormat::Latex => println!("{}", latex_identity(family, basis, n, &e.coefficients)),
            }
            ExitCode::SUCCESS
        }
        Command::Verify { target, max_n, literal_eq8, literal_eq9 } => {
            let targets = VerifyTarget::parse_many(&target).unwrap_or_else(|e| usage_error(e.to_string()));
            let reports = run_targets(&targets, max_n, VerifyOptions { literal_eq8, literal_eq9 });
            let (mut passed, mut total) = (0, 0);
            for r in &reports {
                print!("{}", r.render());
                passed += r.passed();
                total += r.checks.len();
            }
            println!("total: {passed}/{total} passed");
            if passed == total {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Table { families, bases, max_n, format } => {
            check_cap(max_n, cli.cap);
            let mut records = Vec::new();
            for &family in &families {
                for &kind in &bases {
                    for n in 0..=max_n {
                        match expansion(family, kind, n, SourceArg::All) {
                            Ok(e) => records.push(ExpansionRecord::new(family, kind, n, &e)),
                            Err(m) => return mismatch_exit(&m),
                        }
                    }
                }
            }
            match format {
                TableFormat::Json => println!("{}", to_json(&records)),
                TableFormat::Latex => {
                    let lines: Vec<_> = records
                        .iter()
                        .map(|r| (r.family, r.basis, r.n, r.rationals().expect("rendered by this process")))
                        .collect();
                    print!("{}", latex_align(&lines));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Moment { k, sign, m } => {
            println!("{}", moment(MomentKey::new(k, sign, m)));
            ExitCode::SUCCESS
        }
    }
}
