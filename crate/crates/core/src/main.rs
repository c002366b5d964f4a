use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use qpknot::azform::to_az_form;
use qpknot::expr::{parse_and_eval, parse_monomial};
use qpknot::output::{render_numbers, render_series, OutputFormat};
use qpknot::qp::{family_spec, qp_number, Family, QPSpec};
use qpknot::skein::{knot_series, link_series, InvariantKind, InvariantSeries, SeriesValue};
use qpknot::verify::{run_all, run_check, CheckReport};
use qpknot::{Error, LaurentPoly};

#[derive(Parser)]
#[command(name = "qpknot", version, about = "Deformed numbers and torus-knot polynomials, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print [n] for a named family or an arbitrary monomial pair
    #[command(group(ArgGroup::new("which").required(true).args(["family", "spec"])))]
    QpNum {
        /// alexander | jones | homfly | h1 | h2 | bmq
        #[arg(long)]
        family: Option<Family>,
        /// A monomial pair `u,v`, e.g. `q,p`
        #[arg(long)]
        spec: Option<String>,
        /// An index `N` or an inclusive range `A..B`
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the knot series T(2m+1,2) or the link series L(n,2)
    #[command(group(ArgGroup::new("indexing").required(true).args(["knots", "links"])))]
    Series {
        #[arg(long)]
        invariant: InvariantKind,
        #[arg(long)]
        knots: bool,
        #[arg(long)]
        links: bool,
        /// Largest m (knots) or n (links)
        #[arg(long)]
        max: usize,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Run the named identity checks; exits 1 if any fails
    Verify {
        #[arg(long)]
        check: Option<String>,
        #[arg(long, default_value_t = 50)]
        n_max: usize,
        /// text | json
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Tabulate the torus knots T(2m+1,2), m = 0..=max
    Table {
        #[arg(long)]
        invariant: InvariantKind,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Rewrite entries in the variables (a, z), z = t^(1/2) - t^(-1/2)
        #[arg(long)]
        az: bool,
    },
    /// Evaluate an expression, or check an identity `lhs == rhs`
    Eval {
        expr: String,
        /// Treat EXPR as `lhs == rhs`; exits 1 when the sides differ
        #[arg(long)]
        assert: bool,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn parse_range(s: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::BadRange(format!("expected N or A..B, got `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn family_label(f: Family, n: usize) -> String {
    match f {
        Family::Alexander => format!("[{n}]^{{A}}"),
        Family::Jones => format!("[{n}]^{{V}}"),
        Family::Homfly => format!("[{n}]^{{H}}"),
        Family::H1 => format!("[{n}]^{{H_1}}"),
        Family::H2 => format!("[{n}]^{{H_2}}"),
        Family::BMq => format!("[{n}]_{{q}}"),
    }
}

fn print_report(r: &CheckReport, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", r.to_json()),
        _ => {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("{status} {} (n_max={}): {}", r.name, r.n_max, r.detail);
        }
    }
}

fn to_az_series(series: InvariantSeries) -> Result<InvariantSeries, Error> {
    let entries = series
        .entries
        .into_iter()
        .map(|e| match e {
            Some(SeriesValue::Laurent(p)) => to_az_form(&p).map(|az| Some(SeriesValue::AZ(az))),
            other => Ok(other),
        })
        .collect::<Result<_, _>>()?;
    Ok(InvariantSeries { entries, ..series })
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::QpNum { family, spec, n, format } => {
            let (lo, hi) = parse_range(&n)?;
            let (pair, label): (QPSpec, Box<dyn Fn(usize) -> String>) = match (family, spec) {
                (Some(f), _) => (family_spec(f), Box::new(move |n| family_label(f, n))),
                (None, Some(s)) => {
                    let (u, v) = s
                        .split_once(',')
                        .ok_or_else(|| Error::BadRange(format!("--spec expects `u,v`, got `{s}`")))?;
                    let pair = QPSpec::new(parse_monomial(u)?, parse_monomial(v)?)?;
                    (pair, Box::new(|n| format!("[{n}]_{{u,v}}")))
                }
                (None, None) => unreachable!("clap requires one of --family/--spec"),
            };
            let rows = (lo..=hi)
                .map(|k| Ok((k as usize, qp_number(&pair, k)?)))
                .collect::<Result<Vec<(usize, LaurentPoly)>, Error>>()?;
            if format == OutputFormat::Text && rows.len() == 1 {
                println!("{}", rows[0].1);
            } else {
                print!("{}", render_numbers(&rows, format, label));
            }
        }
        Command::Series { invariant, knots, links: _, max, format } => {
            let series = if knots {
                knot_series(invariant, max)
            } else {
                link_series(invariant, max)?
            };
            print!("{}", render_series(&series, format, false));
        }
        Command::Verify { check, n_max, format } => {
            let reports = match check {
                Some(name) => vec![run_check(&name, n_max)?],
                None => run_all(n_max)?,
            };
            for r in &reports {
                print_report(r, format);
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(Outcome::CheckFailed);
            }
        }
        Command::Table { invariant, max, format, az } => {
            let mut series = knot_series(invariant, max);
            if az {
                series = to_az_series(series)?;
            }
            print!("{}", render_series(&series, format, true));
        }
        Command::Eval { expr, assert, format } => {
            let show = |p: &LaurentPoly| match format {
                OutputFormat::Json => p.to_json(),
                OutputFormat::Latex => format!("${}$", p.to_latex()),
                _ => p.to_text(),
            };
            if assert {
                let (lhs, rhs) = expr
                    .split_once("==")
                    .ok_or_else(|| Error::BadRange("--assert expects `lhs == rhs`".into()))?;
                let (l, r) = (parse_and_eval(lhs)?, parse_and_eval(rhs)?);
                if l == r {
                    println!("holds: {}", show(&l));
                } else {
                    println!("fails: lhs = {}, rhs = {}", show(&l), show(&r));
                    return Ok(Outcome::CheckFailed);
                }
            } else {
                println!("{}", show(&parse_and_eval(&expr)?));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
