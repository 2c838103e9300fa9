//! `dseq`: derive, compose, check and evaluate truncated D-sequences.
//!
//! Exit status is 0 when every checked entry passes, 1 when any fails and 2
//! on input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dseq_core::comonad::CdFixtures;
use dseq_core::{
    check_cd_axioms, check_coalgebra, check_comonad_laws, check_ds_primed, check_ds_unprimed,
    check_input_laws, check_tangent_naturality, faa_univariate, nth_symbolic_derivative, omega,
    pattern_restrict, selftest, AnyDoc, Base, EqualityConfig, LawReport, MapDoc, Mor, Morphism,
    Rational, Seq, SeqDoc, SuiteBundle,
};
use serde_json::json;

const DEFAULT_MAX_ORDER: usize = 4;

#[derive(Parser)]
#[command(
    name = "dseq",
    version,
    about = "Truncated D-sequences over exact polynomial maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OrderArgs {
    /// Truncation order N (terms f_0..f_N).
    #[arg(long, default_value_t = 3)]
    order: usize,
    /// Permit orders above the guard (4, or DSEQ_MAX_ORDER).
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write ω(f, N) for a map file.
    Derive {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write ω(f) ∗ ω(g), or a single term of it.
    Compose {
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        term: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run law suites on a map (via ω) or on a sequence file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Relative tolerance for elementary maps.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Compare Faà di Bruno with the iterated differential of the composite.
    Faa {
        #[arg(long)]
        inner: PathBuf,
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Evaluate one term of a sequence file.
    Eval {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        term: usize,
        /// Comma-separated rationals, e.g. "3,1/2".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Run every seeded battery.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Ds,
    Comonad,
    Coalgebra,
    Cd,
    Laws,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn max_order() -> Result<usize, InputError> {
    match std::env::var("DSEQ_MAX_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| {
            InputError(format!(
                "DSEQ_MAX_ORDER must be a natural number, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn guard(order: usize, allow_large: bool) -> Result<(), InputError> {
    let max = max_order()?;
    if order > max && !allow_large {
        return Err(InputError(format!(
            "order {order} exceeds the limit {max}; pass --allow-large or set DSEQ_MAX_ORDER"
        )));
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_map(path: &Path) -> Result<Mor, InputError> {
    let doc = MapDoc::from_json(&read(path)?)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    doc.to_mor()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_seq(path: &Path) -> Result<Seq, InputError> {
    let doc = SeqDoc::from_json(&read(path)?)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    doc.to_seq()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(value: &impl serde::Serialize, out: Option<&Path>) -> Result<(), InputError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_bundle(bundle: &SuiteBundle, format: Format) -> Result<(), InputError> {
    match format {
        Format::Json => emit(bundle, None),
        Format::Text => {
            for s in &bundle.suites {
                let ok = s.entries.iter().filter(|e| e.pass).count();
                let mark = if s.passed() { "ok  " } else { "FAIL" };
                println!("{mark} {} {ok}/{}", s.suite, s.entries.len());
                for line in s.summary_lines() {
                    println!("     {line}");
                }
            }
            println!("{}", if bundle.pass { "PASS" } else { "FAIL" });
            Ok(())
        }
    }
}

/// Fixtures built from one sequence `f : A → B`.
fn cd_fixtures(f: &Seq) -> Result<CdFixtures<Mor>, InputError> {
    let (base, a, b, order) = (f.base(), f.dom(), f.cod(), f.order());
    let ff = f.pair(f)?;
    let sum = f.add(f)?;
    let mut composites = vec![
        (f.clone(), Seq::identity(base, b, order)),
        (Seq::identity(base, a, order), f.clone()),
        (ff.clone(), Seq::proj(base, b, b, 0, order)),
    ];
    if a == b {
        composites.push((f.clone(), f.clone()));
    }
    Ok(CdFixtures {
        singles: vec![f.clone(), sum.clone(), ff.clone()],
        sums: vec![(f.clone(), f.clone()), (sum, f.clone())],
        pairs: vec![(f.clone(), f.clone()), (ff.clone(), ff)],
        composites,
    })
}

fn run_check(
    input: &Path,
    suite: Suite,
    order: OrderArgs,
    format: Format,
    tolerance: f64,
) -> Outcome {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(InputError(format!(
            "tolerance must be a nonnegative number, got {tolerance}"
        )));
    }
    let cfg = EqualityConfig::with_tolerance(tolerance);
    let text = read(input)?;
    let doc =
        AnyDoc::from_json(&text).map_err(|e| InputError(format!("{}: {e}", input.display())))?;
    let (seq, map) = match doc {
        AnyDoc::Map(m) => {
            guard(order.order, order.allow_large)?;
            let f: Mor = m
                .to_mor()
                .map_err(|e| InputError(format!("{}: {e}", input.display())))?;
            (omega(&f, order.order), f)
        }
        AnyDoc::Seq(s) => {
            guard(s.order, order.allow_large)?;
            let seq: Seq = s
                .to_seq()
                .map_err(|e| InputError(format!("{}: {e}", input.display())))?;
            let f0 = seq.terms()[0].clone();
            (seq, f0)
        }
    };
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut suites: Vec<LawReport> = Vec::new();
    if wants(Suite::Ds) {
        suites.push(check_ds_primed(&seq, &cfg)?);
        suites.push(check_ds_unprimed(&seq, &cfg)?);
        if seq.order() >= 1 {
            suites.push(check_tangent_naturality(&seq, &cfg)?);
        }
    }
    if wants(Suite::Comonad) {
        suites.push(check_comonad_laws(&seq, &cfg)?);
    }
    if wants(Suite::Coalgebra) {
        suites.push(check_coalgebra(&map, seq.order(), &cfg)?);
    }
    if wants(Suite::Cd) {
        suites.push(check_cd_axioms(&cd_fixtures(&seq)?, &cfg)?);
    }
    if wants(Suite::Laws) {
        suites.push(check_input_laws(&seq, &cfg)?);
    }
    let bundle = SuiteBundle::new(suites);
    emit_bundle(&bundle, format)?;
    Ok(bundle.pass)
}

fn parse_point(text: &str) -> Result<Vec<Rational>, InputError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<Rational>()
                .ok()
                .filter(|_| !s.is_empty())
                .ok_or_else(|| InputError(format!("not a rational number: {s:?}")))
        })
        .collect()
}

fn run_eval(seq: &Path, term: usize, point: &str) -> Outcome {
    let f = read_seq(seq)?;
    let m = f.term(term)?;
    let point = parse_point(point)?;
    if point.len() != m.dom() {
        return Err(InputError(format!(
            "term {term} takes {} coordinates, got {}",
            m.dom(),
            point.len()
        )));
    }
    let value = match m.base() {
        Base::Poly => json!(m
            .eval_exact(&point)?
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()),
        Base::Elementary => {
            let xs: Vec<f64> = point.iter().map(dseq_core::Scalar::to_f64).collect();
            json!(m.eval_f64(&xs)?)
        }
    };
    emit(&json!({ "term": term, "value": value }), None)?;
    Ok(true)
}

fn run_faa(inner: &Path, outer: &Path, n: usize, allow_large: bool) -> Outcome {
    guard(n, allow_large)?;
    let (f, g) = (read_map(inner)?, read_map(outer)?);
    let (fp, gp) = (f.as_poly()?, g.as_poly()?);
    let faa = faa_univariate(fp, gp, n)?;
    let iterated = nth_symbolic_derivative(&f.compose(&g)?, n);
    let restricted = pattern_restrict(iterated.as_poly()?, n)?;
    let equal = faa == restricted;
    let out = json!({
        "n": n,
        "faa": MapDoc::from_poly(&faa),
        "iterated": MapDoc::from_poly(&restricted),
        "equal": equal,
    });
    emit(&out, None)?;
    Ok(equal)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Derive { map, order, out } => {
            guard(order.order, order.allow_large)?;
            let f = read_map(&map)?;
            emit(&SeqDoc::from_seq(&omega(&f, order.order)), out.as_deref())?;
            Ok(true)
        }
        Command::Compose {
            first,
            second,
            order,
            term,
            out,
        } => {
            guard(order.order, order.allow_large)?;
            let (f, g) = (read_map(&first)?, read_map(&second)?);
            let fg = omega(&f, order.order).compose(&omega(&g, order.order))?;
            match term {
                Some(n) => emit(&MapDoc::from_mor(fg.term(n)?), out.as_deref())?,
                None => emit(&SeqDoc::from_seq(&fg), out.as_deref())?,
            }
            Ok(true)
        }
        Command::Check {
            input,
            suite,
            order,
            format,
            tolerance,
        } => run_check(&input, suite, order, format, tolerance),
        Command::Faa {
            inner,
            outer,
            n,
            allow_large,
        } => run_faa(&inner, &outer, n, allow_large),
        Command::Eval { seq, term, point } => run_eval(&seq, term, &point),
        Command::Selftest {
            seed,
            trials,
            format,
        } => {
            let bundle = selftest(seed, trials as usize)?;
            emit_bundle(&bundle, format)?;
            Ok(bundle.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
