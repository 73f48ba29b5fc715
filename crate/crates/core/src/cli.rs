//! The `ackgood` command line.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::goodstein::{grun, Mode};
use crate::nat::{ack_eval, tower_ack, Arg, BoundedNat, EvalBudget};
use crate::nf::{
    base_change, classify, eval_term, normal_form, predecessor_with, sandwich, validate_nf, PredMode,
    Validity,
};
use crate::ordinal::{fund_seq, gamma, stepdown, to_ordinal, StepdownOutcome};
use crate::term::parse;
use crate::verify::{parse_nat, run_suite, SuiteConfig, SUITES};
use crate::{Error, Nat, NfTerm, OrdTerm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ackgood", version, about = "Ackermannian Goodstein sequences and their ordinals")]
struct Cli {
    /// Cap on the decimal length of intermediate values.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_digits: u64,
    /// Cap on recursive unfoldings.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_calls: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normal form of m in base k.
    Nf {
        #[arg(long, value_parser = nat)]
        m: Nat,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// Sandwiching sequence rows `a b m_i`.
    Sandwich {
        #[arg(long, value_parser = nat)]
        m: Nat,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// Value of a term, or of `A_a(k,b)` with --a/--b.
    Eval {
        #[arg(long, conflicts_with_all = ["a", "b"])]
        term: Option<String>,
        #[arg(long, value_parser = nat, requires = "b")]
        a: Option<Nat>,
        #[arg(long, value_parser = nat, requires = "a")]
        b: Option<Nat>,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// Base change `k -> l` of a number or a term.
    Bch {
        #[arg(long, value_parser = nat)]
        from: Nat,
        #[arg(long, value_parser = nat)]
        to: Nat,
        #[command(flatten)]
        input: Input,
    },
    /// Ordinal image of a normal form.
    Ord {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// One fundamental-sequence step `[x] xi`.
    Fs {
        #[arg(long)]
        ord: String,
        #[arg(long, value_parser = nat)]
        x: Nat,
    },
    /// Iterated step-down `<n> xi` until zero.
    Stepdown {
        #[arg(long)]
        ord: String,
        #[arg(long, default_value_t = 1000)]
        max: u64,
    },
    /// Goodstein trace.
    Goodstein {
        #[arg(long, value_parser = nat)]
        seed: Nat,
        #[arg(long, value_enum, default_value_t = ModeArg::Concrete)]
        mode: ModeArg,
        #[arg(long, default_value_t = 100)]
        max_steps: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The ordinal gamma_n.
    Gamma {
        #[arg(long)]
        n: usize,
    },
    /// Normal form of `m - 1` from the normal form of `m`.
    Pred {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
        /// Accept a smaller normal form when the exact one is out of budget.
        #[arg(long)]
        lower_bound: bool,
    },
    /// Case A/B/C of a normal form.
    Classify {
        #[arg(long)]
        term: String,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// Checks that a term is the normal form of its value.
    Validate {
        #[arg(long)]
        term: String,
        #[arg(long, default_value = "2", value_parser = nat)]
        base: Nat,
    },
    /// Runs a named invariant suite, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Overrides the suite's sweep size.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    #[arg(long, value_parser = nat)]
    m: Option<Nat>,
    #[arg(long)]
    term: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Concrete,
    Symbolic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Text,
    Json,
}

fn nat(s: &str) -> std::result::Result<Nat, String> {
    parse_nat(s).ok_or_else(|| format!("not a natural number: {s}"))
}

enum Fail {
    Usage(String),
    Budget(String),
    Verify,
    Io,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Blowup | Error::Overflow => Fail::Budget(e.to_string()),
            e => Fail::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(_: std::io::Error) -> Self {
        Fail::Io
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs `ackgood` with `args` (including the program name), writing normal
/// output to `out`. Returns the exit code.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let budget = EvalBudget {
        max_digits: cli.max_digits.max(1),
        max_calls: cli.max_calls,
        ..Default::default()
    };
    match dispatch(cli.cmd, &budget, out) {
        Ok(()) => EXIT_OK,
        Err(Fail::Usage(m)) => {
            let _ = writeln!(out, "error: {m}");
            EXIT_USAGE
        }
        Err(Fail::Budget(m)) => {
            let _ = writeln!(out, "budget exceeded: {m}");
            EXIT_BUDGET
        }
        Err(Fail::Verify) => EXIT_VERIFY,
        Err(Fail::Io) => EXIT_USAGE,
    }
}

fn nf_term(s: &str) -> Result<NfTerm, Fail> {
    parse(s).map_err(|e| Fail::Usage(e.to_string()))
}

fn ord_term(s: &str) -> Result<OrdTerm, Fail> {
    parse(s).map_err(|e| Fail::Usage(e.to_string()))
}

fn input_term(input: &Input, k: &Nat) -> Result<NfTerm, Fail> {
    match (&input.m, &input.term) {
        (Some(m), _) => Ok(normal_form(m, k)?),
        (_, Some(t)) => nf_term(t),
        _ => Err(Fail::Usage("one of --m or --term is required".into())),
    }
}

fn require_normal(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<(), Fail> {
    match validate_nf(t, k, budget)? {
        Validity::Valid => Ok(()),
        Validity::Invalid(why) => Err(Fail::Usage(format!("{t} is not in base-{k} normal form: {why}"))),
        Validity::Exceeded => Err(Fail::Budget(format!("cannot check normality of {t}"))),
    }
}

fn dispatch(cmd: Cmd, budget: &EvalBudget, out: Out) -> Result<(), Fail> {
    match cmd {
        Cmd::Nf { m, base } => writeln!(out, "{}", normal_form(&m, &base)?)?,
        Cmd::Sandwich { m, base } => {
            for s in sandwich(&m, &base)?.steps {
                writeln!(out, "{} {} {}", s.a, s.b, s.value)?;
            }
        }
        Cmd::Eval { term, a, b, base } => match (term, a, b) {
            (Some(t), _, _) => match eval_term(&nf_term(&t)?, &base, budget)? {
                BoundedNat::Value(v) => writeln!(out, "{v}")?,
                BoundedNat::Exceeded => return Err(Fail::Budget(format!("value of {t}"))),
            },
            (None, Some(a), Some(b)) => {
                let arg = Arg::Nat(b.clone());
                match ack_eval(&a, &base, &arg, budget)? {
                    BoundedNat::Value(v) => writeln!(out, "{v}")?,
                    BoundedNat::Exceeded => match tower_ack(&a, &base, &arg, budget) {
                        Some(t) => writeln!(out, "{t}")?,
                        None => return Err(Fail::Budget(format!("A_{a}({base},{b})"))),
                    },
                }
            }
            _ => return Err(Fail::Usage("eval needs --term or --a with --b".into())),
        },
        Cmd::Bch { from, to, input } => {
            let t = input_term(&input, &from)?;
            if input.term.is_some() {
                require_normal(&t, &from, budget)?;
            }
            writeln!(out, "{}", base_change(&t, &from, &to)?)?;
        }
        Cmd::Ord { input, base } => writeln!(out, "{}", to_ordinal(&input_term(&input, &base)?))?,
        Cmd::Fs { ord, x } => writeln!(out, "{}", fund_seq(&ord_term(&ord)?, &x)?)?,
        Cmd::Stepdown { ord, max } => {
            let rep = stepdown(&ord_term(&ord)?, max);
            writeln!(out, "1 {}", rep.start)?;
            for (x, t) in &rep.steps {
                writeln!(out, "{x} {t}")?;
            }
            match rep.outcome {
                StepdownOutcome::ReachedZero(l) => writeln!(out, "reached zero at {l}")?,
                StepdownOutcome::BudgetExceeded => {
                    return Err(Fail::Budget(format!("no zero within {max} steps")))
                }
            }
        }
        Cmd::Goodstein {
            seed,
            mode,
            max_steps,
            format,
        } => {
            let mode = match mode {
                ModeArg::Concrete => Mode::Concrete,
                ModeArg::Symbolic => Mode::Symbolic,
            };
            let tr = grun(&seed, mode, max_steps, budget);
            if format == Format::Json {
                let s = serde_json::to_string_pretty(&tr).map_err(|e| Fail::Usage(e.to_string()))?;
                writeln!(out, "{s}")?;
            } else {
                for e in &tr.entries {
                    writeln!(out, "{} {} {} {}", e.i, e.base, e.nf, e.ordinal)?;
                }
                writeln!(out, "{}", serde_json::to_string(&tr.outcome).expect("plain enum"))?;
            }
        }
        Cmd::Gamma { n } => writeln!(out, "{}", gamma(n))?,
        Cmd::Pred {
            input,
            base,
            lower_bound,
        } => {
            let t = input_term(&input, &base)?;
            if input.term.is_some() {
                require_normal(&t, &base, budget)?;
            }
            let mode = if lower_bound {
                PredMode::LowerBound
            } else {
                PredMode::Exact
            };
            let p = predecessor_with(&t, &base, budget, mode)?;
            writeln!(out, "{}", p.term)?;
            if p.truncated {
                writeln!(out, "(lower bound)")?;
            }
        }
        Cmd::Classify { term, base } => {
            let t = nf_term(&term)?;
            writeln!(out, "{:?}", classify(&t, &base)?)?;
        }
        Cmd::Validate { term, base } => match validate_nf(&nf_term(&term)?, &base, budget)? {
            Validity::Valid => writeln!(out, "valid")?,
            Validity::Invalid(why) => {
                writeln!(out, "invalid: {why}")?;
                return Err(Fail::Verify);
            }
            Validity::Exceeded => return Err(Fail::Budget("value too large to validate".into())),
        },
        Cmd::Verify {
            suite,
            seed,
            limit,
            format,
        } => {
            let cfg = SuiteConfig {
                limit,
                seed,
                budget: budget.clone(),
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.iter().map(|(n, _)| *n).collect()
            } else if SUITES.iter().any(|(n, _)| *n == suite) {
                vec![suite.as_str()]
            } else {
                let known: Vec<_> = SUITES.iter().map(|(n, _)| *n).collect();
                return Err(Fail::Usage(format!("unknown suite {suite}; known: {}", known.join(", "))));
            };
            let mut ok = true;
            let mut reports = Vec::new();
            for name in names {
                let rep = run_suite(name, &cfg).expect("listed suite");
                ok &= rep.passed();
                if format == Format::Text {
                    let verdict = if rep.passed() { "PASS" } else { "FAIL" };
                    writeln!(out, "{name}: {verdict} checked={} failed={}", rep.checked, rep.failed)?;
                    for n in &rep.notes {
                        writeln!(out, "  note: {n}")?;
                    }
                    for f in &rep.failures {
                        writeln!(out, "  fail: {f}")?;
                    }
                }
                reports.push(rep);
            }
            if format == Format::Json {
                writeln!(out, "{}", json!({ "seed": seed, "passed": ok, "suites": reports }))?;
            }
            if !ok {
                return Err(Fail::Verify);
            }
        }
    }
    Ok(())
}
