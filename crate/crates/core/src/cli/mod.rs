//! Command-line interface. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{expected_survivors, heine_group, run_classification, GroupElement};
use crate::contiguous::{
    generators, ideal_membership, three_term, verify_report, ThreeTermRelation, DEFAULT_TRUNCATION, GENERATOR_NAMES,
};
use crate::diffop::DiffOperator;
use crate::error::Error;
use crate::exactalg::{LaurentPoly, Var};
use crate::numerics::{
    eval_term, phi21, rng_from_seed, sample_point, verify_g_ratios, verify_symmetry, Complex, EvalConfig,
};
use crate::paramgroup::ShiftOp;
use crate::qterm::QHypTerm;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qheine", version, about = "Contiguous relations and symmetries of the basic hypergeometric series")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct NumArgs {
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Significand bits.
    #[arg(long, default_value_t = 128)]
    pub precision: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

impl NumArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig { precision: self.precision, tol: self.tol, ..EvalConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// The series itself.
    Phi21,
    /// Heine's prefactor `(b, az; q)_∞ / (c, z; q)_∞`.
    HeinePrefactor,
    /// The second-solution prefactor `g`.
    G,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize the relation among three shifts, e.g. `relation A 1 Z`.
    Relation {
        #[arg(num_args = 3, value_names = ["X1", "X2", "X3"])]
        shifts: Vec<String>,
        #[arg(long, env = "QHEINE_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Check the seven generators against the series.
    VerifyGenerators {
        #[arg(long, env = "QHEINE_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Decide ideal membership of an operator given as JSON (file or `-`).
    Membership {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, env = "QHEINE_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Run the candidate filter for symmetries.
    Classify {
        /// Print the table of canonical candidates as LaTeX.
        #[arg(long)]
        emit_table: bool,
    },
    /// List the twelve symmetries with generator words.
    Group,
    /// Check symmetries numerically at random points.
    VerifySymmetry {
        /// Generator word such as `h·ab·h` (also `h*ab*h`), or `all`.
        #[arg(long, default_value = "all")]
        element: String,
        #[command(flatten)]
        num: NumArgs,
    },
    /// Compare shift quotients of `g` with their closed forms at random points.
    GRatios {
        #[command(flatten)]
        num: NumArgs,
    },
    /// Evaluate a quantity at a point; missing coordinates are sampled.
    Eval {
        #[arg(value_enum)]
        what: Quantity,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[command(flatten)]
        num: NumArgs,
    },
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(i32, String), Usage>;

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn term_text(x: &ShiftOp, p: &LaurentPoly, first: bool) -> String {
    let s = p.to_string();
    let single = p.len() == 1;
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) if single => (true, rest.to_string()),
        _ => (false, s),
    };
    let core = if x.is_identity() {
        body
    } else if single && body == "1" {
        x.to_string()
    } else if single {
        format!("{body}·{x}")
    } else {
        format!("({body})·{x}")
    };
    match (first, neg) {
        (true, true) => format!("-{core}"),
        (true, false) => core,
        (false, true) => format!(" - {core}"),
        (false, false) => format!(" + {core}"),
    }
}

/// `p_1·X_1 + p_2·X_2 + p_3·X_3` in plain text.
pub fn relation_text(rel: &ThreeTermRelation) -> String {
    rel.shifts.iter().zip(&rel.coeffs).enumerate().map(|(i, (x, p))| term_text(x, p, i == 0)).collect()
}

fn cmd_relation(shifts: &[String], k: usize, fmt: Format) -> Outcome {
    let xs: Vec<ShiftOp> = shifts.iter().map(|s| ShiftOp::parse(s)).collect::<crate::Result<_>>()?;
    let mut rel = three_term(xs[0], xs[1], xs[2])?;
    let ok = rel.verify(k)?;
    let out = match fmt {
        Format::Text => {
            let status = if ok { format!("verified to order {k}") } else { format!("FAILED at order ≤ {k}") };
            format!("{}\n{status}\n", relation_text(&rel))
        }
        Format::Latex => format!("{}\n", rel.to_latex()),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rel).unwrap()),
    };
    Ok((exit_for(ok), out))
}

fn cmd_verify_generators(k: usize, fmt: Format) -> Outcome {
    if k < 1 {
        return Err(Usage("truncation must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for (name, g) in GENERATOR_NAMES.iter().zip(generators()) {
        rows.push((name, verify_report(&g, k)?, g));
    }
    let ok = rows.iter().all(|r| r.1.passed);
    let out = match fmt {
        Format::Text => {
            let mut s = String::new();
            for (n, r, _) in &rows {
                let how = if r.all_orders { "all orders" } else { "truncated" };
                s.push_str(&format!("{n}: {} ({how}, K = {k})\n", if r.passed { "ok" } else { "FAILED" }));
            }
            s
        }
        Format::Latex => {
            rows.iter().map(|(n, _, g)| format!("{} &= {} \\\\\n", n.replace('_', "_{") + "}", g.to_latex())).collect()
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(n, r, g)| json!({"name": n, "passed": r.passed, "all_orders": r.all_orders, "operator": g}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"truncation": k, "generators": v})).unwrap())
        }
    };
    Ok((exit_for(ok), out))
}

fn cmd_membership(input: &str, k: usize, fmt: Format) -> Outcome {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Usage(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Usage(format!("{input}: {e}")))?
    };
    let d: DiffOperator = serde_json::from_str(&text).map_err(|e| Usage(format!("operator JSON: {e}")))?;
    let member = ideal_membership(&d)?;
    let series = verify_report(&d, k)?;
    let out = match fmt {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({"member": member, "series_check": series.passed, "truncation": k}))
                .unwrap()
        ),
        Format::Latex => format!("{} {} \\mathcal{{I}}\n", d.to_latex(), if member { "\\in" } else { "\\notin" }),
        Format::Text => format!(
            "{}\nmember: {member}\nseries check to order {k}: {}\n",
            d,
            if series.passed { "vanishes" } else { "nonzero" }
        ),
    };
    Ok((exit_for(member), out))
}

fn cmd_classify(emit_table: bool, fmt: Format) -> Outcome {
    let r = run_classification()?;
    let ok = r.survivors == expected_survivors();
    let mut out = match fmt {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r).unwrap()),
        _ => {
            let names: Vec<String> = r.survivors.iter().map(|y| ShiftOp(*y).to_string()).collect();
            let mut s = format!("{} candidates, survivors (up to inversion): {}", r.candidates.len(), names.join(", "));
            s.push_str(&format!("\nfilter time {:.0} ms\n", r.timings.total_ms));
            s
        }
    };
    if emit_table || fmt == Format::Latex {
        out.push_str(&r.latex_table());
    }
    Ok((exit_for(ok), out))
}

fn element_text(e: &GroupElement) -> String {
    let w = if e.word.is_empty() { "1" } else { &e.word };
    format!("{w}: {} with {}", e.transformation.term, e.transformation.mat)
}

fn cmd_group(fmt: Format) -> Outcome {
    let g = heine_group()?;
    let out = match fmt {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&g).unwrap()),
        Format::Text => {
            let mut s = format!("{} elements\n", g.len());
            for e in &g {
                s.push_str(&element_text(e));
                s.push('\n');
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{ll}\n");
            for e in &g {
                let poch: Vec<String> = e
                    .transformation
                    .term
                    .pochhammers()
                    .iter()
                    .map(|(x, m)| format!("({x};q)_\\infty^{{{m}}}"))
                    .collect();
                s.push_str(&format!(
                    "${}$ & ${}$ \\\\\n",
                    if e.word.is_empty() { "1" } else { &e.word },
                    poch.join(" ")
                ));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn normalize_word(w: &str) -> String {
    w.split(|c: char| c == '·' || c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()).collect::<Vec<_>>().join("·")
}

fn cmd_verify_symmetry(element: &str, num: &NumArgs, fmt: Format) -> Outcome {
    let cfg = num.config();
    cfg.validate()?;
    let g = heine_group()?;
    let chosen: Vec<&GroupElement> = if element == "all" {
        g.iter().collect()
    } else {
        let w = normalize_word(element);
        let w = if w == "1" { String::new() } else { w };
        let found: Vec<_> = g.iter().filter(|e| e.word == w).collect();
        if found.is_empty() {
            return Err(Usage(format!("no group element with word '{element}'")));
        }
        found
    };
    let mut rows = Vec::new();
    for e in chosen {
        rows.push((e.word.clone(), verify_symmetry(&e.transformation, num.samples, &cfg, num.seed)?));
    }
    let ok = rows.iter().all(|r| r.1.passed);
    let out = match fmt {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(w, r)| json!({"word": w, "report": r})).collect();
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        _ => rows
            .iter()
            .map(|(w, r)| {
                let w = if w.is_empty() { "1" } else { w };
                format!(
                    "{w}: max rel err {:.3e} over {} points ({})\n",
                    r.max_rel_err,
                    r.samples,
                    if r.passed { "ok" } else { "FAILED" }
                )
            })
            .collect(),
    };
    Ok((exit_for(ok), out))
}

fn cmd_g_ratios(num: &NumArgs, fmt: Format) -> Outcome {
    let cfg = num.config();
    cfg.validate()?;
    let mut rng = rng_from_seed(num.seed);
    let mut reports = Vec::new();
    for _ in 0..num.samples {
        reports.push(verify_g_ratios(&sample_point(&mut rng, cfg.precision), &cfg)?);
    }
    let ok = reports.iter().all(|r| r.passed);
    let out = match fmt {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports).unwrap()),
        _ => {
            let mut s = String::new();
            if let Some(first) = reports.first() {
                for (i, r) in first.ratios.iter().enumerate() {
                    let worst = reports.iter().map(|rep| rep.ratios[i].rel_err).fold(0.0, f64::max);
                    s.push_str(&format!("{}: g({})/g = {}  max rel err {worst:.3e}\n", r.shift, r.shift, r.expected));
                }
            }
            s.push_str(if ok { "ok\n" } else { "FAILED\n" });
            s
        }
    };
    Ok((exit_for(ok), out))
}

fn parse_complex(s: &str, p: usize) -> Result<Complex, Usage> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |x: &str| x.parse::<f64>().map_err(|_| Usage(format!("cannot parse number '{x}'")));
    match parts.as_slice() {
        [re] => Ok(Complex::from_f64(num(re)?, 0.0, p)),
        [re, im] => Ok(Complex::from_f64(num(re)?, num(im)?, p)),
        _ => Err(Usage(format!("expected 're' or 're,im', got '{s}'"))),
    }
}

fn cmd_eval(what: Quantity, coords: [&Option<String>; 5], num: &NumArgs, fmt: Format) -> Outcome {
    let cfg = num.config();
    cfg.validate()?;
    let mut pt = sample_point(&mut rng_from_seed(num.seed), cfg.precision);
    for (v, s) in Var::ALL.iter().zip(coords) {
        if let Some(s) = s {
            pt = pt.with(*v, parse_complex(s, cfg.precision)?);
        }
    }
    let value = match what {
        Quantity::Phi21 => phi21(&pt, &cfg),
        Quantity::HeinePrefactor => eval_term(&QHypTerm::heine_prefactor(), &pt, &cfg),
        Quantity::G => eval_term(&QHypTerm::second_solution_prefactor(), &pt, &cfg),
    };
    let value = match value {
        Ok(v) => v,
        Err(e) => return Ok((EXIT_FAIL, format!("{e}\n"))),
    };
    let point: Vec<String> = Var::ALL.iter().map(|v| format!("{}={}", v.name(), pt.get(*v))).collect();
    let out = match fmt {
        Format::Json => {
            let (re, im) = value.to_f64();
            let coords: serde_json::Map<_, _> =
                Var::ALL.iter().map(|v| (v.name().to_string(), json!(pt.get(*v).to_f64()))).collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"point": coords, "value": [re, im]})).unwrap())
        }
        _ => format!("{}\n{value}\n", point.join(" ")),
    };
    Ok((EXIT_OK, out))
}

fn dispatch(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Relation { shifts, truncation } => cmd_relation(shifts, *truncation, fmt),
        Command::VerifyGenerators { truncation } => cmd_verify_generators(*truncation, fmt),
        Command::Membership { input, truncation } => cmd_membership(input, *truncation, fmt),
        Command::Classify { emit_table } => cmd_classify(*emit_table, fmt),
        Command::Group => cmd_group(fmt),
        Command::VerifySymmetry { element, num } => cmd_verify_symmetry(element, num, fmt),
        Command::GRatios { num } => cmd_g_ratios(num, fmt),
        Command::Eval { what, a, b, c, z, q, num } => cmd_eval(*what, [a, b, c, z, q], num, fmt),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli) {
        Ok((code, text)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Convenience for tests and examples.
pub fn run_to_string(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qheine").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
