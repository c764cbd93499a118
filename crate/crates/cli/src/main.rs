//! `trilucas`: compute, tabulate and verify Tribonacci-Lucas values from the
//! command line.
//!
//! Exit status is 0 when every outcome is the predicted one, 1 when some
//! check produced an unexpected residual, and 2 on usage errors.

mod checks;
mod range;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trilucas::seq::{self, SequenceKind};
use trilucas::series::{tribonacci_gf, tribonacci_lucas_gf, tribonacci_lucas_number_gf};
use trilucas::BigInt;

use checks::{Grid, Outcome};

#[derive(Debug, Parser)]
#[command(name = "trilucas", version, about = "Tribonacci and Tribonacci-Lucas numbers, polynomials and identities")]
struct Cli {
    /// Emit a single JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one sequence value.
    Compute {
        kind: Kind,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Evaluate a polynomial kind at this point (exact for integers).
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Use companion-matrix powering instead of the linear recurrence.
        #[arg(long)]
        fast: bool,
    },
    /// Check an identity over a parameter grid.
    Verify {
        identity: Identity,
        /// Range `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = range::parse_range, allow_hyphen_values = true)]
        n: Option<RangeInclusive<i64>>,
        #[arg(long, value_parser = range::parse_range, allow_hyphen_values = true)]
        m: Option<RangeInclusive<i64>>,
        #[arg(long, value_parser = range::parse_range, allow_hyphen_values = true)]
        j: Option<RangeInclusive<i64>>,
        /// Comma-separated evaluation points for `binet-numeric`.
        #[arg(long, value_parser = range::parse_reals, allow_hyphen_values = true)]
        x: Option<range::Points>,
    },
    /// Print the first coefficients of a generating function.
    Expand { which: Series, count: usize },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Kind {
    TribonacciNumber,
    TribonacciLucasNumber,
    TribonacciPoly,
    TribonacciLucasPoly,
}

impl Kind {
    fn sequence(self) -> SequenceKind {
        match self {
            Kind::TribonacciNumber => SequenceKind::TribonacciNumber,
            Kind::TribonacciLucasNumber => SequenceKind::TribonacciLucasNumber,
            Kind::TribonacciPoly => SequenceKind::TribonacciPoly,
            Kind::TribonacciLucasPoly => SequenceKind::TribonacciLucasPoly,
        }
    }

    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Identity {
    Thm2,
    Thm4,
    Thm6Corrected,
    Thm6AsPrinted,
    BinetNumeric,
    Gf,
    IncompleteCompletion,
    ClosedForms,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Series {
    KPoly,
    KNumber,
    TPoly,
}

fn name_of<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().unwrap().get_name().to_string()
}

struct Output {
    command: &'static str,
    params: Value,
    results: Vec<Value>,
    lines: Vec<String>,
    failures: usize,
}

impl Output {
    fn emit(&self, json_mode: bool) -> ExitCode {
        if json_mode {
            let doc = json!({
                "command": self.command,
                "params": self.params,
                "results": self.results,
                "failures": self.failures,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        } else {
            for line in &self.lines {
                println!("{line}");
            }
        }
        if self.failures == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn range_json(r: &Option<RangeInclusive<i64>>) -> Value {
    match r {
        Some(r) => json!(format!("{}..{}", r.start(), r.end())),
        None => Value::Null,
    }
}

fn compute(kind: Kind, n: i64, at: Option<String>, fast: bool) -> Result<Output, String> {
    let seq_kind = kind.sequence();
    let value = if fast {
        seq::fast_eval(seq_kind, n)
    } else {
        seq::eval(seq_kind, n)
    };
    let text = match (&at, value.as_poly()) {
        (None, _) => value.to_string(),
        (Some(_), None) => {
            return Err(format!("--at only applies to polynomial kinds, not {}", kind.name()))
        }
        (Some(point), Some(p)) => {
            if let Ok(x0) = point.trim().parse::<BigInt>() {
                p.eval_int(&x0).to_string()
            } else {
                match point.trim().parse::<f64>() {
                    Ok(x0) if x0.is_finite() => p.eval_real(x0).to_string(),
                    _ => return Err(format!("--at expects a finite number, got {point:?}")),
                }
            }
        }
    };
    Ok(Output {
        command: "compute",
        params: json!({"kind": kind.name(), "n": n, "at": at, "fast": fast}),
        results: vec![json!(text)],
        lines: vec![text],
        failures: 0,
    })
}

fn verify(identity: Identity, grid: Grid) -> Output {
    let outcomes: Vec<Outcome> = match identity {
        Identity::Thm2 => checks::thm2(&grid),
        Identity::Thm4 => checks::thm4(&grid),
        Identity::Thm6Corrected => checks::thm6_corrected(&grid),
        Identity::Thm6AsPrinted => checks::thm6_as_printed(&grid),
        Identity::BinetNumeric => checks::binet_numeric(&grid),
        Identity::Gf => checks::gf(&grid),
        Identity::IncompleteCompletion => checks::incomplete_completion(&grid),
        Identity::ClosedForms => checks::closed_forms(&grid),
    };
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let expected_failures = outcomes.iter().filter(|o| !o.pass && o.expected).count();
    let failures = outcomes.iter().filter(|o| !o.expected).count();
    let mut lines: Vec<String> = outcomes.iter().map(Outcome::line).collect();
    lines.push(format!(
        "{passed} passed, {} failed ({expected_failures} expected, {failures} unexpected)",
        outcomes.len() - passed
    ));
    Output {
        command: "verify",
        params: json!({
            "identity": name_of(&identity),
            "n": range_json(&grid.n),
            "m": range_json(&grid.m),
            "j": range_json(&grid.j),
            "x": grid.x,
        }),
        results: outcomes.iter().map(Outcome::to_json).collect(),
        lines,
        failures,
    }
}

fn expand(which: Series, count: usize) -> Output {
    let series = match which {
        Series::KPoly => tribonacci_lucas_gf(),
        Series::KNumber => tribonacci_lucas_number_gf(),
        Series::TPoly => tribonacci_gf(),
    };
    let coeffs: Vec<String> = series.coefficients().take(count).map(|c| c.to_string()).collect();
    Output {
        command: "expand",
        params: json!({"which": name_of(&which), "count": count}),
        results: coeffs.iter().map(|c| json!(c)).collect(),
        lines: coeffs,
        failures: 0,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let output = match cli.command {
        Command::Compute { kind, n, at, fast } => match compute(kind, n, at, fast) {
            Ok(o) => o,
            Err(msg) => return usage_error(msg),
        },
        Command::Verify { identity, n, m, j, x } => verify(
            identity,
            Grid {
                n,
                m,
                j,
                x: x.map(|p| p.0),
            },
        ),
        Command::Expand { which, count } => expand(which, count),
    };
    output.emit(cli.json)
}
