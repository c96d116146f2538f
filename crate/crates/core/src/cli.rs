//! `qplane` command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit status with
//! the rendered output, so the binary stays a thin wrapper.
//!
//! Exit status: 0 on success with every identity holding, 1 when an
//! identity fails, 2 on usage, parse or evaluation errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coeff::{parse_rational, RationalScalar};
use crate::expr::{caret_diagnostic, elaborate, parse};
use crate::identities::{battery, run_suite, Check, IdentityId, IdentityReport};
use crate::plane::{PlaneElement, TruncationOrder};

/// Upper bound on every numeric command-line parameter.
pub const MAX_PARAM: u32 = 64;
pub const DEFAULT_ORDER: u32 = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qplane",
    version,
    about = "Exact q-exponential identities on the quantum plane xy = q^-1 yx"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Direct,
    Reversed,
    Intermediate,
    Qbinom,
    Xpower,
    Coeff5,
    Classical,
}

fn bounded(s: &str) -> Result<u32, String> {
    let v: u32 = s
        .parse()
        .map_err(|_| format!("expected a nonnegative integer, got {s:?}"))?;
    if v > MAX_PARAM {
        return Err(format!("{v} exceeds the maximum of {MAX_PARAM}"));
    }
    Ok(v)
}

fn rational_arg(s: &str) -> Result<RationalScalar, String> {
    parse_rational(s).ok_or_else(|| format!("expected a rational A or A/B, got {s:?}"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal-order and expand an expression
    Normalize {
        expr: String,
        /// Truncation order (total degree)
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = bounded)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one identity instance
    Check {
        #[arg(value_enum)]
        identity: CheckName,
        /// Truncation order (direct, reversed, intermediate, classical) or
        /// power (qbinom)
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = bounded)]
        order: u32,
        /// First index (coeff5)
        #[arg(long, value_parser = bounded)]
        m: Option<u32>,
        /// Power (xpower) or second index (coeff5)
        #[arg(long, value_parser = bounded)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full identity battery
    Suite {
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = bounded)]
        max_order: u32,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = bounded)]
        max_mn: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand an expression and evaluate its coefficients at a rational q
    Eval {
        expr: String,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        q: RationalScalar,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = bounded)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Exit status plus what the process should print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        Self {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::usage(text),
            };
        }
    };
    match cli.command {
        Command::Normalize {
            expr,
            order,
            format,
        } => normalize(&expr, order, format),
        Command::Check {
            identity,
            order,
            m,
            n,
            format,
        } => check(identity, order, m, n, format),
        Command::Suite {
            max_order,
            max_mn,
            format,
        } => suite(max_order, max_mn, format),
        Command::Eval {
            expr,
            q,
            order,
            format,
        } => eval(&expr, &q, order, format),
    }
}

fn expand(input: &str, order: u32) -> Result<PlaneElement, Outcome> {
    let ast = parse(input)
        .map_err(|e| Outcome::usage(caret_diagnostic(input, e.pos, &e.kind.to_string()) + "\n"))?;
    elaborate(&ast, TruncationOrder(order))
        .map_err(|e| Outcome::usage(caret_diagnostic(input, e.pos, &e.message) + "\n"))
}

#[derive(Serialize)]
struct TermRecord {
    x: u32,
    y: u32,
    coeff: String,
}

fn term_records(e: &PlaneElement) -> Vec<TermRecord> {
    e.render_order()
        .into_iter()
        .map(|((x, y), c)| TermRecord {
            x,
            y,
            coeff: c.to_string(),
        })
        .collect()
}

fn normalize(input: &str, order: u32, format: Format) -> Outcome {
    let e = match expand(input, order) {
        Ok(e) => e,
        Err(o) => return o,
    };
    match format {
        Format::Text => Outcome::ok(format!("{e}\n")),
        Format::Json => Outcome::ok(
            json!({
                "input": input,
                "order": order,
                "result": e.to_string(),
                "terms": term_records(&e),
            })
            .to_string()
                + "\n",
        ),
    }
}

fn eval(input: &str, q0: &RationalScalar, order: u32, format: Format) -> Outcome {
    let e = match expand(input, order) {
        Ok(e) => e,
        Err(o) => return o,
    };
    let values = match e.specialize(q0) {
        Ok(v) => v,
        Err(err) => return Outcome::usage(format!("error: {err}\n")),
    };
    match format {
        Format::Text => Outcome::ok(format!("{values}\n")),
        Format::Json => Outcome::ok(
            json!({
                "input": input,
                "q": crate::coeff::fmt_rational(q0),
                "order": order,
                "result": values.to_string(),
                "terms": term_records(&values),
            })
            .to_string()
                + "\n",
        ),
    }
}

fn check(name: CheckName, order: u32, m: Option<u32>, n: Option<u32>, format: Format) -> Outcome {
    let missing = |flag: &str| {
        Outcome::usage(format!(
            "error: `check {}` requires --{flag}\n",
            name.to_possible_value().expect("named").get_name()
        ))
    };
    let order = TruncationOrder(order);
    let check = match name {
        CheckName::Direct => Check::Direct(order),
        CheckName::Reversed => Check::Reversed(order),
        CheckName::Intermediate => Check::Intermediate(order),
        CheckName::Classical => Check::ClassicalLimit(order),
        CheckName::Qbinom => Check::Qbinom(order.get()),
        CheckName::Xpower => match n {
            None => return missing("n"),
            Some(0) => return Outcome::usage("error: xpower requires --n >= 1\n".into()),
            Some(n) => Check::Xpower(n),
        },
        CheckName::Coeff5 => match (m, n) {
            (Some(m), Some(n)) => Check::Coeff5(m, n),
            (None, _) => return missing("m"),
            (_, None) => return missing("n"),
        },
    };
    let report = check.run();
    let stdout = match format {
        Format::Text => format!("{report}\n"),
        Format::Json => serde_json::to_string(&report.record()).expect("serializable") + "\n",
    };
    Outcome {
        status: exit_status(std::slice::from_ref(&report)),
        stdout,
        stderr: String::new(),
    }
}

fn suite(max_order: u32, max_mn: u32, format: Format) -> Outcome {
    let reports = run_suite(&battery(max_order, max_mn));
    let stdout = match format {
        Format::Text => render_suite_text(&reports),
        Format::Json => {
            let records: Vec<_> = reports.iter().map(IdentityReport::record).collect();
            serde_json::to_string(&records).expect("serializable") + "\n"
        }
    };
    Outcome {
        status: exit_status(&reports),
        stdout,
        stderr: String::new(),
    }
}

/// 0 when every report holds, 1 otherwise.
pub fn exit_status(reports: &[IdentityReport]) -> i32 {
    if reports.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn render_suite_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let held = reports.iter().filter(|r| r.holds).count();
    out.push_str(&format!("{held}/{} checks hold\n", reports.len()));
    for id in IdentityId::ALL {
        let of_kind: Vec<_> = reports.iter().filter(|r| r.identity == id).collect();
        if !of_kind.is_empty() {
            let ok = of_kind.iter().filter(|r| r.holds).count();
            out.push_str(&format!("  {id}: {ok}/{}\n", of_kind.len()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("qplane").chain(args.iter().copied()))
    }

    #[test]
    fn normalize_commutes() {
        let o = cli(&["normalize", "y*x"]);
        assert_eq!(o.status, EXIT_OK);
        assert_eq!(o.stdout, "(q)*x*y\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(cli(&["frobnicate"]).status, EXIT_USAGE);
        assert_eq!(cli(&["check", "direct", "--order", "65"]).status, EXIT_USAGE);
        assert_eq!(cli(&["check", "xpower"]).status, EXIT_USAGE);
        assert_eq!(cli(&["check", "coeff5", "--m", "2"]).status, EXIT_USAGE);
        let o = cli(&["normalize", "x^(2)"]);
        assert_eq!(o.status, EXIT_USAGE);
        assert!(o.stderr.contains("exponent"));
        assert!(!cli(&["normalize", "--bogus", "x"]).stderr.is_empty());
    }

    #[test]
    fn checks() {
        assert_eq!(cli(&["check", "coeff5", "--m", "3", "--n", "2"]).status, EXIT_OK);
        assert_eq!(cli(&["check", "xpower", "--n", "4"]).status, EXIT_OK);
        assert_eq!(cli(&["check", "classical", "--order", "4"]).status, EXIT_OK);
    }

    #[test]
    fn eval_at_rational_q() {
        let o = cli(&["eval", "y*x + x^2", "--q", "2/3"]);
        assert_eq!(o.status, EXIT_OK);
        assert_eq!(o.stdout, "x^2 + (2/3)*x*y\n");
        let o = cli(&["eval", "expq(x)", "--q", "-1", "--order", "3"]);
        assert_eq!(o.status, EXIT_USAGE);
        assert!(o.stderr.contains("pole"));
    }

    #[test]
    fn help_is_success() {
        let o = cli(&["--help"]);
        assert_eq!(o.status, EXIT_OK);
        assert!(o.stdout.contains("normalize"));
    }
}
