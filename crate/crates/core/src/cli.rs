//! Command-line front end. `run` does all the work and returns what to print
//! and the exit status, so it can be driven from tests without a process.
//!
//! Exit codes: 0 success, 1 disagreement between methods, 2 bad input,
//! 3 mathematics outside what the solvers handle, 4 no general-position
//! placement within the retry budget.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::difference::{
    build_difference_table, default_max_depth, infer_recurrence, LinearRecurrence, Sequence,
};
use crate::error::Error;
use crate::genfunc::{build_ogf, partial_fractions, solve_genfunc};
use crate::geometry::{self, Placement, DEFAULT_RETRY_BUDGET};
use crate::moser;
use crate::numeric::{Polynomial, Rational};
use crate::report::{big_value, Envelope};
use crate::solver::{fit_homogeneous_recurrence, solve_charpoly, to_moser_variable, ClosedForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "recurlab",
    version,
    about = "Infer, solve and cross-check linear recurrences exactly"
)]
pub struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest m counted geometrically.
    #[arg(long, global = true, env = "RECURLAB_GEOM_CAP", default_value_t = 15)]
    pub geom_cap: u64,

    /// Use seeded random point placement instead of the fixed generic sequence.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Difference table and predicted next term.
    Table {
        #[command(flatten)]
        input: SequenceInput,
        /// Deepest difference row to compute.
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Closed form of the inferred (or given) recurrence.
    Solve {
        #[command(flatten)]
        input: SequenceInput,
        #[arg(long, value_enum, default_value_t = SolveMethod::Both)]
        method: SolveMethod,
        /// Recurrence coefficients, highest shift first, e.g. "1,-1,-1".
        #[arg(long, requires = "init")]
        coeffs: Option<String>,
        /// Initial terms a(0), ..., a(d-1) for --coeffs.
        #[arg(long, requires = "coeffs")]
        init: Option<String>,
        /// Right-hand side polynomial in n, ascending coefficients. Default 0.
        #[arg(long, requires = "coeffs")]
        rhs: Option<String>,
    },
    /// Regions cut out by chords between m points on a circle.
    Regions {
        #[arg(long = "m")]
        m: u64,
        #[arg(long, value_enum, default_value_t = RegionMethod::All)]
        method: RegionMethod,
        /// Distinct geometric configurations to count.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Count a fixed degenerate configuration instead.
        #[arg(long, value_enum)]
        degenerate: Option<Degenerate>,
    },
    /// Cross-check every method against the others.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_m: u64,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
}

#[derive(Debug, Args)]
pub struct SequenceInput {
    /// Comma-separated integers or p/q rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub seq: Option<String>,
    /// The first N region counts 1, 2, 4, 8, ... (default 6).
    #[arg(long, num_args = 0..=1, default_missing_value = "6")]
    pub moser: Option<usize>,
    /// File with one term per line; '#' starts a comment.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Charpoly,
    Genfunc,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionMethod {
    Binomial,
    Polynomial,
    Sum,
    Euler,
    Geometric,
    All,
}

impl RegionMethod {
    fn tag(self) -> &'static str {
        match self {
            RegionMethod::Binomial => "binomial",
            RegionMethod::Polynomial => "polynomial",
            RegionMethod::Sum => "sum",
            RegionMethod::Euler => "euler",
            RegionMethod::Geometric => "geometric",
            RegionMethod::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Degenerate {
    Hexagon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Lib(e) => match e {
                Error::NoConstantRow
                | Error::UnsupportedRoots { .. }
                | Error::NotPolynomial
                | Error::SingularMatrix { .. } => EXIT_UNSUPPORTED,
                Error::PlacementBudgetExceeded { .. } => EXIT_DEGENERATE,
                Error::DivisionByZero
                | Error::InvalidArgument(_)
                | Error::SequenceTooShort { .. }
                | Error::DuplicateParameter(_)
                | Error::Parse { .. } => EXIT_INPUT,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(s) => s.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        let kind = match self.code() {
            EXIT_UNSUPPORTED => "unsupported",
            EXIT_DEGENERATE => "degeneracy",
            _ => "input",
        };
        let mut obj = json!({ "kind": kind, "message": self.message() });
        if let Failure::Lib(Error::UnsupportedRoots { residual }) = self {
            obj["residual"] = json!(residual);
            obj["residual_text"] = json!(residual.display_in("x"));
        }
        json!({ "error": obj })
    }
}

struct Report {
    code: i32,
    envelope: Envelope,
    text: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let (name, result) = match &cli.command {
        Command::Table { input, max_depth } => ("table", cmd_table(input, *max_depth)),
        Command::Solve {
            input,
            method,
            coeffs,
            init,
            rhs,
        } => (
            "solve",
            cmd_solve(
                input,
                *method,
                coeffs.as_deref(),
                init.as_deref(),
                rhs.as_deref(),
            ),
        ),
        Command::Regions {
            m,
            method,
            trials,
            degenerate,
        } => (
            "regions",
            cmd_regions(cli, *m, *method, *trials, *degenerate),
        ),
        Command::Verify { max_m, trials } => ("verify", cmd_verify(cli, *max_m, *trials)),
    };
    match result {
        Ok(report) => Outcome {
            code: report.code,
            stdout: if cli.json {
                to_json_line(&report.envelope)
            } else {
                report.text
            },
            stderr: String::new(),
        },
        Err(failure) => {
            let code = failure.code();
            if cli.json {
                let env = Envelope::new(name, Value::Null, failure.to_json(), vec![]);
                Outcome {
                    code,
                    stdout: to_json_line(&env),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {}\n", failure.message()),
                }
            }
        }
    }
}

fn to_json_line(env: &Envelope) -> String {
    let mut s = serde_json::to_string_pretty(env).expect("envelope serializes");
    s.push('\n');
    s
}

fn join(terms: &[Rational]) -> String {
    terms
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<Rational>, Failure> {
    Sequence::parse(s)
        .map(|seq| seq.terms)
        .map_err(|e| Failure::Input(format!("--{flag}: {e}")))
}

/// The sequence plus an echo of where it came from, and whether it is the
/// circle-division sequence.
fn load_sequence(input: &SequenceInput) -> Result<Option<(Sequence, Value, bool)>, Failure> {
    let given = [
        input.seq.is_some(),
        input.moser.is_some(),
        input.file.is_some(),
    ];
    match given.iter().filter(|&&g| g).count() {
        0 => return Ok(None),
        1 => {}
        _ => {
            return Err(Failure::Input(
                "give only one of --seq, --moser, --file".into(),
            ))
        }
    }
    let (seq, source) = if let Some(s) = &input.seq {
        (Sequence::parse(s)?, "seq")
    } else if let Some(n) = input.moser {
        if n < 1 {
            return Err(Failure::Input("--moser needs at least one term".into()));
        }
        (moser::moser_sequence(n)?, "moser")
    } else {
        let path = input.file.as_ref().expect("one input given");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join("\n");
        (Sequence::parse(&body)?, "file")
    };
    let is_moser = source == "moser" || moser::moser_sequence(seq.len()).is_ok_and(|m| m == seq);
    let echo = json!({ "source": source, "terms": seq.terms });
    Ok(Some((seq, echo, is_moser)))
}

fn require_sequence(input: &SequenceInput) -> Result<(Sequence, Value, bool), Failure> {
    load_sequence(input)?
        .ok_or_else(|| Failure::Input("give a sequence with --seq, --moser or --file".into()))
}

fn cmd_table(input: &SequenceInput, max_depth: Option<usize>) -> Result<Report, Failure> {
    let (seq, echo, _) = require_sequence(input)?;
    let depth = max_depth.unwrap_or_else(|| default_max_depth(&seq));
    let table = build_difference_table(&seq, depth)?;
    let next = table.predict_next().ok();

    let mut text = format!("sequence: {}\n", join(&seq.terms));
    for (k, row) in table.rows.iter().enumerate() {
        let _ = writeln!(text, "row {k}: {}", join(row));
    }
    match (&table.constant_depth, &next) {
        (Some(d), Some(v)) => {
            let _ = writeln!(text, "constant row: {d}\nnext: {v}");
        }
        _ => text.push_str("no constant row; cannot predict the next term\n"),
    }
    let result = json!({
        "rows": table.rows,
        "constant_depth": table.constant_depth,
        "next": next,
    });
    let code = if next.is_some() {
        EXIT_OK
    } else {
        EXIT_UNSUPPORTED
    };
    let envelope = Envelope::new(
        "table",
        json!({ "sequence": echo, "max_depth": depth }),
        result,
        vec!["differences".into()],
    );
    Ok(Report {
        code,
        envelope,
        text,
    })
}

fn recurrence_json(rec: &LinearRecurrence) -> Value {
    json!({
        "text": rec.to_string(),
        "order": rec.order(),
        "coefficients": rec.coefficients(),
        "rhs": rec.rhs(),
        "initial_conditions": rec.initial_conditions(),
    })
}

fn cmd_solve(
    input: &SequenceInput,
    method: SolveMethod,
    coeffs: Option<&str>,
    init: Option<&str>,
    rhs: Option<&str>,
) -> Result<Report, Failure> {
    let loaded = load_sequence(input)?;
    let mut text = String::new();
    let (rec, inputs, is_moser, origin) = match (coeffs, loaded) {
        (Some(_), Some(_)) => {
            return Err(Failure::Input(
                "give either a sequence or --coeffs, not both".into(),
            ));
        }
        (Some(c), None) => {
            let coefficients = parse_list("coeffs", c)?;
            let initial = parse_list("init", init.unwrap_or(""))?;
            let rhs_poly = match rhs {
                Some(r) => Polynomial::new(parse_list("rhs", r)?),
                None => Polynomial::zero(),
            };
            let rec =
                LinearRecurrence::new(coefficients.clone(), rhs_poly.clone(), initial.clone())?;
            let echo = json!({ "coefficients": coefficients, "initial_conditions": initial, "rhs": rhs_poly });
            (rec, echo, false, "given")
        }
        (None, Some((seq, echo, is_moser))) => {
            let table = build_difference_table(&seq, default_max_depth(&seq))?;
            match infer_recurrence(&table) {
                Ok(rec) => (rec, json!({ "sequence": echo }), is_moser, "differences"),
                Err(Error::NoConstantRow) => match fit_homogeneous_recurrence(&seq) {
                    Some(rec) => (rec, json!({ "sequence": echo }), false, "homogeneous fit"),
                    None => return Err(Failure::Lib(Error::NoConstantRow)),
                },
                Err(e) => return Err(e.into()),
            }
        }
        (None, None) => {
            return Err(Failure::Input(
                "give a sequence (--seq, --moser, --file) or --coeffs with --init".into(),
            ));
        }
    };
    let _ = writeln!(text, "recurrence ({origin}): {rec}");
    let _ = writeln!(
        text,
        "initial conditions: {}",
        join(rec.initial_conditions())
    );

    let mut forms: Vec<ClosedForm> = Vec::new();
    let mut result = Map::new();
    result.insert("recurrence".into(), recurrence_json(&rec));
    result.insert("recurrence_origin".into(), json!(origin));
    if matches!(method, SolveMethod::Charpoly | SolveMethod::Both) {
        forms.push(solve_charpoly(&rec)?);
    }
    if matches!(method, SolveMethod::Genfunc | SolveMethod::Both) {
        let ogf = build_ogf(&rec)?;
        let pf = partial_fractions(&ogf)?;
        let _ = writeln!(text, "generating function: {ogf}");
        let _ = writeln!(text, "partial fractions: {pf}");
        result.insert("generating_function".into(), json!(ogf));
        result.insert("partial_fractions".into(), json!(pf));
        forms.push(solve_genfunc(&rec)?);
    }
    let mut closed = Map::new();
    for cf in &forms {
        let _ = writeln!(text, "{}: a(n) = {cf}", cf.method);
        closed.insert(cf.method.to_string(), json!(cf));
    }
    result.insert("closed_forms".into(), Value::Object(closed));

    if is_moser {
        let in_m = to_moser_variable(&forms[0])?;
        let _ = writeln!(text, "with m = n + 1: f(m) = {in_m}");
        result.insert("moser_variable".into(), json!(in_m));
    }

    let tags = forms.iter().map(|cf| cf.method.to_string()).collect();
    let mut envelope = Envelope::new("solve", inputs, Value::Object(result), tags);
    let mut code = EXIT_OK;
    if forms.len() == 2 {
        let agree = forms[0].same_function(&forms[1]);
        let _ = writeln!(text, "agreement: {agree}");
        envelope = envelope.with_agreement(agree);
        if !agree {
            code = EXIT_DISAGREEMENT;
        }
    }
    Ok(Report {
        code,
        envelope,
        text,
    })
}

fn symbolic(method: RegionMethod, m: u64) -> Result<BigInt, Error> {
    match method {
        RegionMethod::Binomial => moser::regions_binomial(m),
        RegionMethod::Polynomial => moser::regions_polynomial(m),
        RegionMethod::Sum => moser::regions_binomial_sum(m),
        RegionMethod::Euler => moser::regions_euler(m),
        RegionMethod::Geometric | RegionMethod::All => unreachable!("not a symbolic method"),
    }
}

const SYMBOLIC: [RegionMethod; 4] = [
    RegionMethod::Binomial,
    RegionMethod::Polynomial,
    RegionMethod::Sum,
    RegionMethod::Euler,
];

fn placement(seed: Option<u64>, variant: u64) -> Placement {
    match seed {
        Some(seed) => Placement::Seeded { seed, variant },
        None => Placement::Generic { variant },
    }
}

fn cmd_regions(
    cli: &Cli,
    m: u64,
    method: RegionMethod,
    trials: usize,
    degenerate: Option<Degenerate>,
) -> Result<Report, Failure> {
    if m < 1 {
        return Err(Failure::Input("--m must be at least 1".into()));
    }
    if trials < 1 {
        return Err(Failure::Input("--trials must be at least 1".into()));
    }
    let wants_geometric = matches!(method, RegionMethod::Geometric | RegionMethod::All);
    if degenerate.is_some() {
        if m != 6 {
            return Err(Failure::Input("--degenerate hexagon needs --m 6".into()));
        }
        if !wants_geometric {
            return Err(Failure::Input(
                "--degenerate applies to the geometric method".into(),
            ));
        }
    }
    if method == RegionMethod::Geometric && m > cli.geom_cap {
        return Err(Failure::Input(format!(
            "m = {m} exceeds the geometric cap {}",
            cli.geom_cap
        )));
    }

    let inputs = json!({
        "m": m,
        "method": method.tag(),
        "trials": trials,
        "degenerate": degenerate.map(|_| "hexagon"),
        "seed": cli.seed,
        "geom_cap": cli.geom_cap,
    });
    let mut text = format!("m = {m}\n");
    let mut counts = Map::new();
    let mut tags = Vec::new();
    let mut values: Vec<BigInt> = Vec::new();

    let methods: Vec<RegionMethod> = match method {
        RegionMethod::All => SYMBOLIC.to_vec(),
        RegionMethod::Geometric => vec![],
        other => vec![other],
    };
    for meth in methods {
        let v = symbolic(meth, m)?;
        let _ = writeln!(text, "{}: {v}", meth.tag());
        counts.insert(meth.tag().into(), big_value(&v));
        tags.push(meth.tag().to_string());
        values.push(v);
    }

    let mut result = Map::new();
    result.insert("m".into(), json!(m));
    if wants_geometric && m <= cli.geom_cap {
        let configs: Vec<Placement> = match degenerate {
            Some(Degenerate::Hexagon) => vec![Placement::Explicit(geometry::hexagon_params())],
            None => (0..trials as u64).map(|v| placement(cli.seed, v)).collect(),
        };
        let mut reports = Vec::new();
        let mut geo_counts = Vec::new();
        for (i, p) in configs.iter().enumerate() {
            let arr = geometry::build_arrangement(m as usize, p, DEFAULT_RETRY_BUDGET, true)?;
            let r = geometry::count_regions(&arr)?;
            let _ = writeln!(
                text,
                "geometric[{i}]: {} (V = {}, E = {}, general_position = {})",
                r.regions, r.vertices, r.edges, r.general_position
            );
            values.push(BigInt::from(r.regions));
            geo_counts.push(json!(r.regions));
            reports.push(json!({
                "params": arr.params(),
                "report": r,
                "degeneracy": arr.degeneracy,
            }));
        }
        counts.insert("geometric".into(), Value::Array(geo_counts));
        result.insert("geometric".into(), Value::Array(reports));
        tags.push("geometric".into());
    } else if wants_geometric {
        let _ = writeln!(text, "geometric: skipped (m > cap {})", cli.geom_cap);
        result.insert(
            "geometric_skipped".into(),
            json!(format!("m > cap {}", cli.geom_cap)),
        );
    }
    result.insert("counts".into(), Value::Object(counts));

    let mut envelope = Envelope::new("regions", inputs, Value::Object(result), tags);
    let mut code = EXIT_OK;
    if method == RegionMethod::All {
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        let _ = writeln!(text, "agreement: {agree}");
        envelope = envelope.with_agreement(agree);
        if !agree {
            code = EXIT_DISAGREEMENT;
        }
    }
    Ok(Report {
        code,
        envelope,
        text,
    })
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn moser_solver_checks(max_m: u64) -> Result<Vec<Check>, Error> {
    let rec = moser::moser_recurrence();
    let cp = solve_charpoly(&rec)?;
    let gf = solve_genfunc(&rec)?;
    let in_m = to_moser_variable(&cp)?;
    let iterated = rec.iterate(max_m.max(4) as usize)?;
    let mut checks = vec![
        Check {
            name: "solver charpoly = genfunc".into(),
            pass: cp.same_function(&gf),
            detail: format!("{cp} vs {gf}"),
        },
        Check {
            name: "solver closed form in m".into(),
            pass: in_m.polynomial().as_ref() == Some(&moser::regions_poly()),
            detail: format!("f(m) = {in_m}"),
        },
    ];
    let mut first_bad = None;
    for m in 1..=max_m {
        let expected = Rational::from(moser::regions_binomial(m)?);
        let n = m as i64 - 1;
        let ok = cp.evaluate(n)? == expected
            && gf.evaluate(n)? == expected
            && iterated.terms[n as usize] == expected;
        if !ok && first_bad.is_none() {
            first_bad = Some(m);
        }
    }
    checks.push(Check {
        name: format!("solver values and iteration, m = 1..{max_m}"),
        pass: first_bad.is_none(),
        detail: match first_bad {
            Some(m) => format!("first mismatch at m = {m}"),
            None => "closed forms and forward iteration match".into(),
        },
    });
    Ok(checks)
}

fn cmd_verify(cli: &Cli, max_m: u64, trials: usize) -> Result<Report, Failure> {
    if max_m < 1 {
        return Err(Failure::Input("--max-m must be at least 1".into()));
    }
    if trials < 1 {
        return Err(Failure::Input("--trials must be at least 1".into()));
    }
    let mut checks = Vec::new();
    for m in 1..=max_m {
        let values = SYMBOLIC
            .iter()
            .map(|&meth| symbolic(meth, m))
            .collect::<Result<Vec<_>, _>>()?;
        let pass = values.windows(2).all(|w| w[0] == w[1]);
        checks.push(Check {
            name: format!("symbolic m = {m}"),
            pass,
            detail: values
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        });
    }
    checks.extend(moser_solver_checks(max_m)?);
    let geo_max = max_m.min(cli.geom_cap);
    for m in 1..=geo_max {
        let v =
            geometry::verify_against_formula(m as usize, trials, cli.seed, DEFAULT_RETRY_BUDGET)?;
        let detail = match &v.counterexample {
            Some(c) => format!(
                "expected {}, counted {} at params [{}]",
                v.expected,
                c.regions,
                c.params
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            None => format!(
                "{} over {} configurations",
                v.counts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                v.trials
            ),
        };
        checks.push(Check {
            name: format!("geometric m = {m}"),
            pass: v.pass,
            detail,
        });
    }

    let all_pass = checks.iter().all(|c| c.pass);
    let first_failure = checks.iter().find(|c| !c.pass);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "{} {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    if let Some(c) = first_failure {
        let _ = writeln!(text, "first disagreement: {}: {}", c.name, c.detail);
    }
    let _ = writeln!(text, "agreement: {all_pass}");
    let result = json!({
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
            .collect::<Vec<_>>(),
        "geometric_max_m": geo_max,
        "first_failure": first_failure.map(|c| json!({ "name": c.name, "detail": c.detail })),
    });
    let inputs =
        json!({ "max_m": max_m, "trials": trials, "seed": cli.seed, "geom_cap": cli.geom_cap });
    let tags = [
        "binomial",
        "polynomial",
        "sum",
        "euler",
        "charpoly",
        "genfunc",
        "geometric",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let envelope = Envelope::new("verify", inputs, result, tags).with_agreement(all_pass);
    let code = if all_pass { EXIT_OK } else { EXIT_DISAGREEMENT };
    Ok(Report {
        code,
        envelope,
        text,
    })
}
