//! Command-line front end: document I/O, canonical reports, commands and the benchmark.
//!
//! [`run`] parses arguments, executes one command and returns the text to print together with
//! the process exit code, so the binary is a thin wrapper and the commands are testable
//! in-process.

pub mod bench;
pub mod canonical;
pub mod document;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::duality::{character_table, fourier_matrix, CharacterTable};
use crate::error::{Error, Result};
use crate::hshp::{exact_distribution, make_coset_oracle, CosetOracle, HshpInstance, Policy};
use crate::hypergroup::FiniteHypergroup;
use crate::selftest;
use crate::subobjects::{
    annihilator, cosets, enumerate_subhypergroups_with_cap, lemma23_conditions, quotient,
    Subhypergroup, DEFAULT_CAP,
};

use canonical::{digest, to_canonical_string};

#[derive(Debug, Parser)]
#[command(name = "hyperg", version, about = "Finite commutative hypergroups: characters, Fourier transform, hidden sub-hypergroup simulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Document path or `preset:NAME`
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comparison tolerance for commands that report a pass/fail threshold
    #[arg(long)]
    pub tol: Option<f64>,
    /// Run the acceptance checks associated with this command instead
    #[arg(long)]
    pub selftest: bool,
    /// Include wall-clock times in the report
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms and print the Haar measure
    Validate(Common),
    /// Characters and Plancherel measure in canonical order
    Chartable {
        #[command(flatten)]
        common: Common,
        /// JSON file `{"characters": [[v, ...], ...]}` with entries `x` or `[re, im]`
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// The unitary Fourier matrix and its unitarity residual
    Qft(Common),
    /// Subhypergroups with cosets, annihilators and the annihilator-condition report
    Subs {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Simulate the hidden sub-hypergroup algorithm and reconstruct H
    Hshp {
        #[command(flatten)]
        common: Common,
        /// Hidden subhypergroup for demo mode, e.g. `0,1`
        #[arg(long, conflicts_with = "oracle")]
        hidden: Option<String>,
        /// JSON label map `{"labels": [l0, l1, ...]}`
        #[arg(long)]
        oracle: Option<PathBuf>,
        /// Shots per batch (default 4⌈log₂|K|⌉ + 8)
        #[arg(long)]
        shots: Option<usize>,
        #[arg(long, default_value_t = 16)]
        max_batches: usize,
    },
    /// Time dense against factorized Fourier application on Z2(θ)^⊗k
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long, default_value_t = 0.5)]
        theta: f64,
        /// Also write the timing table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Validate(c) | Command::Qft(c) => c,
            Command::Chartable { common, .. }
            | Command::Subs { common, .. }
            | Command::Hshp { common, .. }
            | Command::Bench { common, .. } => common,
        }
    }

    /// Acceptance criteria exercised by `--selftest`.
    pub fn criteria(&self) -> &'static [u8] {
        match self {
            Command::Validate(_) => &[1, 2, 3],
            Command::Chartable { .. } => &[1, 2, 3, 9],
            Command::Qft(_) => &[2, 3, 4],
            Command::Subs { .. } => &[5],
            Command::Hshp { .. } => &[6, 7, 8],
            Command::Bench { .. } => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        }
    }
}

/// A titled table for the `table` and `tsv` formats.
#[derive(Debug, Clone)]
pub struct Section {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    fn new(title: impl Into<String>, header: &[&str]) -> Self {
        Section {
            title: title.into(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

/// Results of one command before formatting.
pub struct Output {
    pub digest: Option<String>,
    pub results: Value,
    pub sections: Vec<Section>,
}

/// Text to print and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Document(_) => 4,
        Error::Unresolved { .. } => 3,
        _ => 2,
    }
}

/// Machine-readable error document.
pub fn error_json(e: &Error) -> Value {
    let (kind, details) = match e {
        Error::AxiomViolation(r) => ("AxiomViolation", json!(r)),
        Error::DimensionMismatch(m) => ("DimensionMismatch", json!(m)),
        Error::DegenerateHaar { element, mass } => {
            ("DegenerateHaar", json!({"element": element, "mass": mass}))
        }
        Error::NotCommutative { residual } => ("NotCommutative", json!({"residual": residual})),
        Error::CharacterDefect { found, expected } => {
            ("CharacterDefect", json!({"found": found, "expected": expected}))
        }
        Error::NonOrthogonal { residual } => ("NonOrthogonal", json!({"residual": residual})),
        Error::NotUnitary { residual } => ("NotUnitary", json!({"residual": residual})),
        Error::NotStrong { coefficient, indices } => {
            ("NotStrong", json!({"coefficient": coefficient, "indices": indices}))
        }
        Error::CapExceeded { cap } => ("CapExceeded", json!({"cap": cap})),
        Error::NotAPartition(m) => ("NotAPartition", json!(m)),
        Error::NotClosed { members } => ("NotClosed", json!({"members": members})),
        Error::ParamOutOfRange { family, constraint } => {
            ("ParamOutOfRange", json!({"family": family, "constraint": constraint}))
        }
        Error::NotASubgroup(m) => ("NotASubgroup", json!({"members": m})),
        Error::InvalidGroup(m) => ("InvalidGroup", json!(m)),
        Error::EquivalenceFailure { character, coset } => {
            ("EquivalenceFailure", json!({"character": character, "coset": coset}))
        }
        Error::NormDrift { stage, norm } => ("NormDrift", json!({"stage": stage, "norm": norm})),
        Error::Unresolved { batches, candidate, reason } => (
            "Unresolved",
            json!({"batches": batches, "candidate": candidate, "reason": reason}),
        ),
        Error::Usage(m) => ("Usage", json!(m)),
        Error::Document(m) => ("Document", json!(m)),
        Error::Io(io) => ("Io", json!(io.kind().to_string())),
    };
    json!({"error": {"kind": kind, "message": e.to_string(), "details": details, "exit_code": exit_code(e)}})
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, stdout: e.to_string() };
        }
    };
    let echo = std::iter::once("hyperg".to_string())
        .chain(argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    execute(&cli.command, &echo)
}

fn execute(command: &Command, echo: &str) -> Outcome {
    let common = command.common();
    if common.selftest {
        return selftest_outcome(command, echo);
    }
    let start = Instant::now();
    let result = dispatch(command);
    let elapsed = start.elapsed();
    let (code, text) = match result {
        Ok(output) => {
            let mut report = json!({
                "command": echo,
                "digest": output.digest,
                "seed": common.seed,
                "results": output.results,
            });
            if common.timings {
                report["wall_times"] = json!({"total_seconds": elapsed.as_secs_f64()});
            }
            (0, render(common.format, &report, &output.sections))
        }
        Err(e) => (exit_code(&e), to_canonical_string(&error_json(&e))),
    };
    if let (Some(path), 0) = (&common.out, code) {
        if let Err(e) = std::fs::write(path, &text) {
            let e = Error::Io(e);
            return Outcome { code: exit_code(&e), stdout: to_canonical_string(&error_json(&e)) };
        }
        return Outcome { code, stdout: String::new() };
    }
    Outcome { code, stdout: text }
}

fn selftest_outcome(command: &Command, echo: &str) -> Outcome {
    let common = command.common();
    let results: Vec<selftest::CriterionResult> =
        command.criteria().iter().map(|&id| selftest::run(id)).collect();
    let passed = results.iter().all(|r| r.passed);
    let mut section = Section::new("selftest", &["criterion", "status", "name", "detail"]);
    for r in &results {
        section.row(vec![
            r.id.to_string(),
            if r.passed { "PASS" } else { "FAIL" }.into(),
            r.name.into(),
            r.detail.clone(),
        ]);
    }
    let mut report = json!({"command": echo, "selftest": results, "passed": passed});
    if common.timings {
        report["wall_times"] =
            json!(results.iter().map(|r| r.elapsed.as_secs_f64()).collect::<Vec<_>>());
    }
    Outcome { code: if passed { 0 } else { 1 }, stdout: render(common.format, &report, &[section]) }
}

fn load_input(common: &Common) -> Result<FiniteHypergroup> {
    let input = common
        .input
        .as_deref()
        .ok_or_else(|| Error::Usage("--input PATH|preset:NAME is required".into()))?;
    document::load(input)
}

fn dispatch(command: &Command) -> Result<Output> {
    match command {
        Command::Validate(c) => cmd_validate(&load_input(c)?),
        Command::Chartable { common, expected } => {
            cmd_chartable(&load_input(common)?, expected.as_ref(), common.tol.unwrap_or(1e-9))
        }
        Command::Qft(c) => cmd_qft(&load_input(c)?, c.tol.unwrap_or(1e-10)),
        Command::Subs { common, cap } => cmd_subs(&load_input(common)?, *cap),
        Command::Hshp { common, hidden, oracle, shots, max_batches } => {
            let k = load_input(common)?;
            let oracle = match (hidden, oracle) {
                (Some(h), _) => {
                    let members = parse_members(h)?;
                    make_coset_oracle(&k, &Subhypergroup::certify(&k, members)?)?
                }
                (None, Some(path)) => load_oracle(path, k.order())?,
                (None, None) => return Err(Error::Usage("hshp needs --hidden or --oracle".into())),
            };
            let mut policy = Policy::for_order(k.order());
            if let Some(s) = shots {
                policy.batch_size = (*s).max(1);
            }
            policy.max_batches = (*max_batches).max(1);
            cmd_hshp(&k, &oracle, common.seed, policy)
        }
        Command::Bench { common, max_k, theta, csv } => {
            cmd_bench(*theta, *max_k, common.seed, csv.as_ref(), common.tol.unwrap_or(1e-10))
        }
    }
}

fn parse_members(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse().map_err(|_| Error::Usage(format!("bad element index {p:?}"))))
        .collect()
}

fn load_oracle(path: &PathBuf, order: usize) -> Result<CosetOracle> {
    #[derive(serde::Deserialize)]
    struct LabelMap {
        labels: Vec<usize>,
    }
    let text = std::fs::read_to_string(path)?;
    let map: LabelMap = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?;
    if map.labels.len() != order {
        return Err(Error::DimensionMismatch(format!(
            "oracle has {} labels for a hypergroup of order {order}",
            map.labels.len()
        )));
    }
    Ok(CosetOracle::from_labels(&map.labels))
}

fn fmt_f(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn fmt_c(z: Complex64) -> String {
    if z.im.abs() < 5e-7 {
        fmt_f(z.re)
    } else {
        format!("{}{}{}i", fmt_f(z.re), if z.im < 0.0 { "-" } else { "+" }, fmt_f(z.im.abs()))
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn table_json(t: &CharacterTable) -> Value {
    Value::Array(
        t.characters()
            .iter()
            .map(|c| Value::Array(c.values().iter().map(|&z| complex_json(z)).collect()))
            .collect(),
    )
}

pub fn cmd_validate(k: &FiniteHypergroup) -> Result<Output> {
    let mut summary = Section::new("hypergroup", &["field", "value"]);
    summary.row(vec!["name".into(), k.name().into()]);
    summary.row(vec!["order".into(), k.order().to_string()]);
    summary.row(vec!["commutative".into(), k.is_commutative().to_string()]);
    summary.row(vec!["hermitian".into(), k.is_hermitian().to_string()]);
    summary.row(vec!["group".into(), k.is_group().to_string()]);
    summary.row(vec!["total Haar mass".into(), fmt_f(k.total_mass())]);
    let mut elements = Section::new("elements", &["x", "inverse", "haar"]);
    for x in 0..k.order() {
        elements.row(vec![x.to_string(), k.inv(x).to_string(), fmt_f(k.haar()[x])]);
    }
    Ok(Output {
        digest: Some(digest(k)),
        results: json!({
            "name": k.name(),
            "order": k.order(),
            "valid": true,
            "commutative": k.is_commutative(),
            "commutativity_residual": k.commutativity_residual(),
            "hermitian": k.is_hermitian(),
            "group": k.is_group(),
            "involution": k.involution(),
            "haar": k.haar(),
            "total_mass": k.total_mass(),
        }),
        sections: vec![summary, elements],
    })
}

fn parse_expected(path: &PathBuf) -> Result<Vec<Vec<Complex64>>> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?;
    let rows = v["characters"]
        .as_array()
        .ok_or_else(|| Error::Document("expected table needs a \"characters\" array".into()))?;
    let entry = |e: &Value| -> Result<Complex64> {
        match e {
            Value::Number(n) => Ok(Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::String(s) => Ok(Complex64::new(document::parse_rational(s)?, 0.0)),
            Value::Array(p) if p.len() == 2 => Ok(Complex64::new(
                p[0].as_f64().ok_or_else(|| Error::Document("bad real part".into()))?,
                p[1].as_f64().ok_or_else(|| Error::Document("bad imaginary part".into()))?,
            )),
            _ => Err(Error::Document(format!("bad character value {e}"))),
        }
    };
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Document("character rows must be arrays".into()))?
                .iter()
                .map(entry)
                .collect()
        })
        .collect()
}

pub fn cmd_chartable(k: &FiniteHypergroup, expected: Option<&PathBuf>, tol: f64) -> Result<Output> {
    let t = character_table(k)?;
    let n = k.order();
    let mut header: Vec<String> = vec!["character".into(), "plancherel".into()];
    header.extend((0..n).map(|x| format!("x={x}")));
    let mut chars = Section { title: "characters".into(), header, rows: Vec::new() };
    for rho in 0..t.len() {
        let mut row = vec![format!("χ{rho}"), fmt_f(t.plancherel()[rho])];
        row.extend((0..n).map(|x| fmt_c(t.value(rho, x))));
        chars.row(row);
    }
    let mut haar = Section::new("haar", &["x", "haar"]);
    for x in 0..n {
        haar.row(vec![x.to_string(), fmt_f(k.haar()[x])]);
    }
    let mut results = json!({
        "characters": table_json(&t),
        "haar": k.haar(),
        "plancherel": t.plancherel(),
    });
    let mut sections = vec![chars, haar];
    if let Some(path) = expected {
        let rows = parse_expected(path)?;
        let perm: Vec<Option<usize>> = rows
            .iter()
            .map(|r| if r.len() == n { t.find(r, tol) } else { None })
            .collect();
        let mut s = Section::new("expected table", &["expected row", "canonical index"]);
        for (i, p) in perm.iter().enumerate() {
            s.row(vec![i.to_string(), p.map_or("missing".into(), |v| v.to_string())]);
        }
        sections.push(s);
        results["expected_permutation"] = json!(perm);
        results["expected_matches"] = json!(perm.iter().all(Option::is_some) && rows.len() == t.len());
    }
    Ok(Output { digest: Some(digest(k)), results, sections })
}

pub fn cmd_qft(k: &FiniteHypergroup, tol: f64) -> Result<Output> {
    let t = character_table(k)?;
    let f = fourier_matrix(k, &t)?;
    let n = f.dim();
    let residual = f.unitarity_residual();
    let mut header: Vec<String> = vec!["row".into()];
    header.extend((0..n).map(|x| format!("x={x}")));
    let mut m = Section { title: "Fourier matrix (rows in canonical character order)".into(), header, rows: Vec::new() };
    for r in 0..n {
        let mut row = vec![format!("χ{r}")];
        row.extend((0..n).map(|x| fmt_c(f.entry(r, x))));
        m.row(row);
    }
    let mut s = Section::new("unitarity", &["field", "value"]);
    s.row(vec!["max |FF† − I|".into(), format!("{residual:.3e}")]);
    s.row(vec!["unitary".into(), (residual <= tol).to_string()]);
    let matrix: Vec<Vec<Value>> =
        (0..n).map(|r| (0..n).map(|x| complex_json(f.entry(r, x))).collect()).collect();
    Ok(Output {
        digest: Some(digest(k)),
        results: json!({
            "matrix": matrix,
            "unitarity_residual": residual,
            "tolerance": tol,
            "unitary": residual <= tol,
        }),
        sections: vec![m, s],
    })
}

pub fn cmd_subs(k: &FiniteHypergroup, cap: usize) -> Result<Output> {
    let subs = enumerate_subhypergroups_with_cap(k, cap)?;
    let table = if k.is_commutative() { Some(character_table(k)?) } else { None };
    let mut section = Section::new(
        "subhypergroups",
        &["H", "cosets", "annihilator", "(i)≡(ii)≡(iii)", "quotient order"],
    );
    let mut entries = Vec::new();
    for h in &subs {
        let mut entry = json!({"members": h.members()});
        let mut row = vec![format!("{:?}", h.members())];
        match cosets(k, h) {
            Ok(part) => {
                row.push(format!("{:?}", part.blocks));
                entry["cosets"] = json!(part.blocks);
                entry["coset_mass"] = json!(part.block_mass);
            }
            Err(e) => {
                row.push(e.to_string());
                entry["cosets_error"] = json!(e.to_string());
            }
        }
        match &table {
            Some(t) => {
                let perp = annihilator(t, h);
                row.push(format!("{:?}", perp.characters));
                entry["annihilator"] = json!(perp.characters);
                let lemma = lemma23_conditions(k, t, h)?;
                let dis = lemma.disagreements();
                row.push(if dis.is_empty() { "yes".into() } else { format!("no at {dis:?}") });
                entry["lemma23"] = json!(lemma);
                entry["lemma23_disagreements"] = json!(dis);
                let q = quotient(k, h)?;
                row.push(q.order().to_string());
                entry["quotient_order"] = json!(q.order());
            }
            None => row.extend(["n/a (not commutative)".into(), "n/a".into(), "n/a".into()]),
        }
        section.row(row);
        entries.push(entry);
    }
    Ok(Output {
        digest: Some(digest(k)),
        results: json!({"subhypergroups": entries, "commutative": k.is_commutative()}),
        sections: vec![section],
    })
}

pub fn cmd_hshp(k: &FiniteHypergroup, oracle: &CosetOracle, seed: u64, policy: Policy) -> Result<Output> {
    let inst = HshpInstance::new(k)?;
    let run = inst.solve(oracle, seed, policy)?;
    let exact = exact_distribution(k, &inst.table, &run.reconstructed)?;
    let mut counts = vec![0usize; inst.table.len()];
    for &r in &run.observed {
        counts[r] += 1;
    }
    let mut summary = Section::new("hshp", &["field", "value"]);
    summary.row(vec!["reconstructed".into(), format!("{:?}", run.reconstructed.members())]);
    summary.row(vec!["verified".into(), run.verified.to_string()]);
    summary.row(vec!["batches".into(), run.batches.to_string()]);
    summary.row(vec!["shots".into(), run.shots.to_string()]);
    if let Some(h) = oracle.hidden() {
        summary.row(vec!["hidden".into(), format!("{:?}", h.members())]);
    }
    let mut dist = Section::new("characters", &["character", "observed", "exact probability"]);
    for (rho, (&c, &p)) in counts.iter().zip(&exact.marginal).enumerate() {
        dist.row(vec![format!("χ{rho}"), c.to_string(), fmt_f(p)]);
    }
    let labels: Vec<usize> = (0..k.order()).map(|x| oracle.evaluate(x)).collect();
    Ok(Output {
        digest: Some(digest(k)),
        results: json!({
            "run": run,
            "hidden": oracle.hidden(),
            "oracle_labels": labels,
            "exact": exact,
            "characters": table_json(&inst.table),
        }),
        sections: vec![summary, dist],
    })
}

pub fn cmd_bench(theta: f64, max_k: usize, seed: u64, csv: Option<&PathBuf>, tol: f64) -> Result<Output> {
    if !(1..=12).contains(&max_k) {
        return Err(Error::Usage("--max-k must be between 1 and 12".into()));
    }
    let report = bench::run_bench(theta, max_k, seed)?;
    if let Some(path) = csv {
        std::fs::write(path, report.to_csv())?;
    }
    let mut section = Section::new(
        format!("Z2({theta})^k: dense vs factorized Fourier application"),
        &["k", "dim", "dense ns", "factorized ns", "speedup", "max |diff|"],
    );
    for r in &report.rows {
        section.row(vec![
            r.k.to_string(),
            r.dim.to_string(),
            format!("{:.1}", r.dense_ns),
            format!("{:.1}", r.factorized_ns),
            format!("{:.2}", r.dense_ns / r.factorized_ns),
            format!("{:.1e}", r.max_diff),
        ]);
    }
    let mut summary = Section::new("summary", &["field", "value"]);
    summary.row(vec![
        "crossover k".into(),
        report.crossover.map_or("none".into(), |k| k.to_string()),
    ]);
    summary.row(vec![
        format!("product-hypergroup cross-check (k ≤ {})", report.cross_checked_up_to),
        format!("{:.1e}", report.cross_check_residual),
    ]);
    let base = crate::constructions::z2_theta(theta)?;
    let agree = report.rows.iter().all(|r| r.max_diff <= tol) && report.cross_check_residual <= 1e-9;
    Ok(Output {
        digest: Some(digest(&base)),
        results: json!({"bench": report, "outputs_agree": agree, "tolerance": tol}),
        sections: vec![section, summary],
    })
}

fn render(format: Format, report: &Value, sections: &[Section]) -> String {
    match format {
        Format::Json => to_canonical_string(report),
        Format::Tsv => {
            let mut out = String::new();
            for s in sections {
                out.push_str(&format!("# {}\n{}\n", s.title, s.header.join("\t")));
                for r in &s.rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for key in ["command", "digest", "seed"] {
                if let Some(v) = report.get(key).filter(|v| !v.is_null()) {
                    let text = v.as_str().map_or_else(|| v.to_string(), str::to_string);
                    out.push_str(&format!("{key}: {text}\n"));
                }
            }
            for s in sections {
                out.push('\n');
                out.push_str(&s.title);
                out.push('\n');
                let cols = s.header.len();
                let width: Vec<usize> = (0..cols)
                    .map(|c| {
                        std::iter::once(&s.header[c])
                            .chain(s.rows.iter().filter_map(|r| r.get(c)))
                            .map(|t| t.chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    let mut l = cells
                        .iter()
                        .zip(&width)
                        .map(|(t, w)| format!("{t}{}", " ".repeat(w - t.chars().count())))
                        .collect::<Vec<_>>()
                        .join("  ");
                    l.truncate(l.trim_end().len());
                    l.push('\n');
                    l
                };
                out.push_str(&line(&s.header));
                for r in &s.rows {
                    out.push_str(&line(r));
                }
            }
            if let Some(w) = report.get("wall_times") {
                out.push_str(&format!("\nwall times: {w}\n"));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("hyperg").chain(args.iter().copied()))
    }

    #[test]
    fn qft_bose_mesner_json() {
        let out = run_args(&["qft", "--input", "preset:bose_mesner_square", "--format", "json"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["results"]["unitary"], json!(true));
        let m00 = v["results"]["matrix"][0][0][0].as_f64().unwrap();
        assert!((m00 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn missing_input_is_a_usage_error() {
        let out = run_args(&["validate"]);
        assert_eq!(out.code, 2);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], json!("Usage"));
    }

    #[test]
    fn members_parse() {
        assert_eq!(parse_members("0, 2,4").unwrap(), vec![0, 2, 4]);
        assert!(parse_members("0,x").is_err());
    }

    #[test]
    fn table_and_tsv_render() {
        let out = run_args(&["chartable", "--input", "preset:z2_theta_1_2"]);
        assert!(out.stdout.contains("characters\ncharacter  plancherel"), "{}", out.stdout);
        let tsv = run_args(&["chartable", "--input", "preset:z2_theta_1_2", "--format", "tsv"]);
        assert!(tsv.stdout.contains("χ1\t0.666667\t1.000000\t-0.500000"), "{}", tsv.stdout);
    }
}
