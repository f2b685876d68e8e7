use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use anyhow::{anyhow, bail, Context, Result};
use arcperm_core::arcs::{is_arc, is_b_arc, Family};
use arcperm_core::canonical::{
    decompose_a, decompose_b, fmaj_from_exponents, is_arc_by_exponents, is_b_arc_by_exponents, maj_from_exponents,
};
use arcperm_core::formulas::{verify, FormulaId, Status, VerificationReport};
use arcperm_core::patterns::{
    arc_forbidden, b_arc_forbidden, first_occurrence_a, first_occurrence_b, left_unimodal_forbidden,
    signed_arc_forbidden,
};
use arcperm_core::{Permutation, SignedPermutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::json::{report_json, StatProfileJson};

/// Largest `n` accepted by `verify --n-max` without `--force`.
pub const VERIFY_LIMIT: usize = 10;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "arcperm", version, about = "Arc permutations, their signed analogues and their enumerators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Lines,
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = OutputFormat::Lines)]
    pub format: OutputFormat,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Des,
    Maj,
    Fmaj,
    Fdes,
    Neg,
    Inv,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown set {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the members of a set in generator order.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        set: Family,
        #[arg(long)]
        n: usize,
        /// Exceed the size guard.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Print every statistic of one permutation.
    Stats {
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Defaults to B when the word has a negative entry, A otherwise.
        #[arg(long, value_enum)]
        group: Option<Group>,
        #[command(flatten)]
        output: Output,
    },
    /// Membership test with a failing prefix/suffix and a pattern witness.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_parser = parse_family)]
        set: Family,
        #[command(flatten)]
        output: Output,
    },
    /// Canonical factorization into powers of the cycles c_m.
    Decompose {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compare closed forms with brute-force enumerators.
    Verify {
        /// A formula name, a character family name, or `all`.
        #[arg(long, default_value = "all")]
        formula: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Distribution of one statistic over a set.
    Table {
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long, value_parser = parse_family)]
        set: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
}

/// Rendered output and exit code of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

pub fn main_with(args: impl IntoIterator<Item = OsString>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let out_path = match &cli.command {
        Command::Enumerate { output, .. }
        | Command::Stats { output, .. }
        | Command::Check { output, .. }
        | Command::Decompose { output, .. }
        | Command::Verify { output, .. }
        | Command::Table { output, .. } => output.out.clone(),
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match out_path {
        Some(path) => std::fs::write(&path, &outcome.text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(outcome.text.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(outcome.code)
}

/// Runs one command; every `Err` is a usage or parse error.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Enumerate { set, n, force, output } => enumerate(*set, *n, *force, output.format),
        Command::Stats { perm, group, output } => stats(perm, *group, output.format),
        Command::Check { perm, set, output } => check(perm, *set, output.format),
        Command::Decompose { group, perm, output } => decompose(*group, perm, output.format),
        Command::Verify {
            formula,
            n_max,
            n_min,
            force,
            output,
        } => {
            let ids = FormulaId::resolve(formula).map_err(|_| anyhow!("unknown formula {formula:?}"))?;
            if *n_max > VERIFY_LIMIT {
                guard_override(*force, *n_max, VERIFY_LIMIT)?;
            }
            let report = run_verification(&ids, *n_min, *n_max)?;
            Ok(verify_outcome(&report, output.format))
        }
        Command::Table {
            stat,
            set,
            n,
            force,
            output,
        } => table(*stat, *set, *n, *force, output.format),
    }
}

fn guard_override(force: bool, n: usize, limit: usize) -> Result<()> {
    if !force {
        bail!("n = {n} exceeds the size guard {limit}; pass --force to continue");
    }
    eprintln!("warning: n = {n} exceeds the size guard {limit}; continuing because of --force");
    Ok(())
}

fn members(set: Family, n: usize, force: bool) -> Result<Vec<SignedPermutation>> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let limit = set.default_limit();
    if n > limit {
        guard_override(force, n, limit)?;
        return Ok(set.generate_with_limit(n, n)?);
    }
    Ok(set.generate(n)?)
}

fn json_text(value: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?)
}

/// A flat record rendered as `key: value` lines, `field,value` CSV or a JSON object.
fn record_text(record: &impl Serialize, format: OutputFormat) -> Result<String> {
    let value = serde_json::to_value(record)?;
    let Value::Object(map) = &value else {
        bail!("record is not an object");
    };
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    };
    match format {
        OutputFormat::Json => json_text(&value),
        OutputFormat::Csv => csv_text(&["field", "value"], map.iter().map(|(k, v)| vec![k.clone(), scalar(v)])),
        OutputFormat::Lines => Ok(map.iter().fold(String::new(), |mut s, (k, v)| {
            let _ = writeln!(s, "{k}: {}", scalar(v));
            s
        })),
    }
}

pub fn enumerate(set: Family, n: usize, force: bool, format: OutputFormat) -> Result<Outcome> {
    let all = members(set, n, force)?;
    let text = match format {
        OutputFormat::Lines => {
            let mut s = String::new();
            for p in &all {
                let _ = writeln!(s, "{p}");
            }
            let _ = writeln!(s, "count: {}", all.len());
            s
        }
        OutputFormat::Csv => csv_text(
            &["index", "permutation"],
            all.iter().enumerate().map(|(i, p)| vec![(i + 1).to_string(), p.to_string()]),
        )?,
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Listing {
                set: String,
                n: usize,
                count: usize,
                permutations: Vec<String>,
            }
            json_text(&Listing {
                set: set.to_string(),
                n,
                count: all.len(),
                permutations: all.iter().map(ToString::to_string).collect(),
            })?
        }
    };
    Ok(Outcome::ok(text))
}

fn parse_signed(perm: &str) -> Result<SignedPermutation> {
    perm.parse().map_err(|e| anyhow!("invalid permutation {perm:?}: {e}"))
}

fn parse_unsigned(perm: &str) -> Result<Permutation> {
    perm.parse().map_err(|e| anyhow!("invalid permutation {perm:?}: {e}"))
}

pub fn stats(perm: &str, group: Option<Group>, format: OutputFormat) -> Result<Outcome> {
    let p = parse_signed(perm)?;
    let signed = p.word().iter().any(|&v| v < 0);
    let group = group.unwrap_or(if signed { Group::B } else { Group::A });
    if group == Group::A && signed {
        bail!("{p} has negative entries; use --group B");
    }
    let profile = StatProfileJson::from(&p.stats());
    if format == OutputFormat::Json || group == Group::B {
        return Ok(Outcome::ok(record_text(&profile, format)?));
    }
    #[derive(Serialize)]
    struct TypeA {
        des_set: Vec<usize>,
        des: usize,
        maj: usize,
        inv: usize,
        sign: i8,
    }
    let a = TypeA {
        des_set: profile.des_set,
        des: profile.des,
        maj: profile.maj,
        inv: profile.inv,
        sign: profile.sign,
    };
    Ok(Outcome::ok(record_text(&a, format)?))
}

#[derive(Serialize)]
struct Verdict {
    permutation: String,
    set: String,
    verdict: &'static str,
    violation: Option<String>,
    witness_pattern: Option<String>,
    witness_positions: Option<Vec<usize>>,
}

pub fn check(perm: &str, set: Family, format: OutputFormat) -> Result<Outcome> {
    let p = parse_signed(perm)?;
    let failure = set.violation(&p);
    let positive = p.word().iter().all(|&v| v > 0);
    let witness: Option<(String, Vec<usize>)> = match (set, &failure) {
        (_, None) => None,
        (Family::Arc, Some(_)) if positive => {
            first_occurrence_a(&p.absolute(), &arc_forbidden()).map(|o| (o.pattern.to_string(), o.positions))
        }
        (Family::LeftUnimodal, Some(_)) if positive => first_occurrence_a(&p.absolute(), &left_unimodal_forbidden())
            .map(|o| (o.pattern.to_string(), o.positions)),
        (Family::SignedArc, Some(_)) => {
            first_occurrence_b(&p, &signed_arc_forbidden()).map(|o| (o.pattern.to_string(), o.positions))
        }
        (Family::BArc, Some(_)) => {
            first_occurrence_b(&p, &b_arc_forbidden()).map(|o| (o.pattern.to_string(), o.positions))
        }
        _ => None,
    };
    let (witness_pattern, witness_positions) = witness.unzip();
    let v = Verdict {
        permutation: p.to_string(),
        set: set.to_string(),
        verdict: if failure.is_none() { "MEMBER" } else { "NON-MEMBER" },
        violation: failure.map(|f| f.to_string()),
        witness_pattern,
        witness_positions,
    };
    if format != OutputFormat::Lines {
        return Ok(Outcome::ok(record_text(&v, format)?));
    }
    let mut s = format!("{}\n", v.verdict);
    if let Some(viol) = &v.violation {
        let _ = writeln!(s, "violation: {viol}");
    }
    if let (Some(pat), Some(pos)) = (&v.witness_pattern, &v.witness_positions) {
        let pos: Vec<String> = pos.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "witness: {pat} at positions {}", pos.join(","));
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct Decomposition {
    group: &'static str,
    permutation: String,
    k: Vec<u32>,
    sum: u32,
    statistic: &'static str,
    value: usize,
    identity_holds: bool,
    recomposed: String,
    round_trip: bool,
    family: &'static str,
    member: bool,
    member_by_exponents: bool,
}

pub fn decompose(group: Group, perm: &str, format: OutputFormat) -> Result<Outcome> {
    let d = match group {
        Group::A => {
            let p = parse_unsigned(perm)?;
            let e = decompose_a(&p);
            let back = e.recompose();
            Decomposition {
                group: "A",
                permutation: p.to_string(),
                k: e.exponents().to_vec(),
                sum: e.total(),
                statistic: "maj",
                value: p.maj(),
                identity_holds: maj_from_exponents(&e) as usize == p.maj(),
                round_trip: back == p,
                recomposed: back.to_string(),
                family: "arc",
                member: is_arc(&p),
                member_by_exponents: is_arc_by_exponents(&e),
            }
        }
        Group::B => {
            let p = parse_signed(perm)?;
            let e = decompose_b(&p);
            let back = e.recompose();
            Decomposition {
                group: "B",
                permutation: p.to_string(),
                k: e.exponents().to_vec(),
                sum: e.total(),
                statistic: "fmaj",
                value: p.fmaj(),
                identity_holds: fmaj_from_exponents(&e) as usize == p.fmaj(),
                round_trip: back == p,
                recomposed: back.to_string(),
                family: "b-arc",
                member: is_b_arc(&p),
                member_by_exponents: is_b_arc_by_exponents(&e),
            }
        }
    };
    if format != OutputFormat::Lines {
        return Ok(Outcome::ok(record_text(&d, format)?));
    }
    let k: Vec<String> = d.k.iter().map(ToString::to_string).collect();
    let mut s = String::new();
    let _ = writeln!(s, "k=[{}]", k.join(","));
    let _ = writeln!(s, "sum {}", d.sum);
    let _ = writeln!(s, "{} {} (equals sum: {})", d.statistic, d.value, d.identity_holds);
    let _ = writeln!(s, "recomposed {} (round trip: {})", d.recomposed, d.round_trip);
    let _ = writeln!(s, "{}: {} (by exponents: {})", d.family, d.member, d.member_by_exponents);
    Ok(Outcome::ok(s))
}

/// Verifies each formula over `n_min..=n_max`, one thread per formula;
/// rows come back in the order of `ids`.
pub fn run_verification(ids: &[FormulaId], n_min: usize, n_max: usize) -> Result<VerificationReport> {
    let reports: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| scope.spawn(move || verify(id, n_min..=n_max)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut all = VerificationReport::default();
    for r in reports {
        all.extend(r?);
    }
    Ok(all)
}

/// Renders a report; the exit code is 1 iff some row is `MISMATCH`.
pub fn verify_outcome(report: &VerificationReport, format: OutputFormat) -> Outcome {
    let code = if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK };
    let text = match format {
        OutputFormat::Json => json_text(&report_json(report)).expect("report serializes"),
        OutputFormat::Csv => {
            let show = |p: &Option<arcperm_core::Poly>| p.as_ref().map(ToString::to_string).unwrap_or_default();
            csv_text(
                &["formula", "n", "status", "lhs", "rhs", "diff", "note"],
                report.rows.iter().map(|r| {
                    vec![
                        r.formula.clone(),
                        r.n.to_string(),
                        r.status.to_string(),
                        r.lhs.to_string(),
                        show(&r.rhs),
                        show(&r.diff),
                        r.note.clone().unwrap_or_default(),
                    ]
                }),
            )
            .expect("in-memory csv")
        }
        OutputFormat::Lines => verify_table(report),
    };
    Outcome { text, code }
}

fn verify_table(report: &VerificationReport) -> String {
    let width = report.rows.iter().map(|r| r.formula.len()).max().unwrap_or(7).max(7);
    let mut s = format!("{:<width$}  {:>3}  status\n", "formula", "n");
    let mut counts = BTreeMap::new();
    for r in &report.rows {
        *counts.entry(r.status.as_str()).or_insert(0usize) += 1;
        let _ = writeln!(s, "{:<width$}  {:>3}  {}", r.formula, r.n, r.status);
        if r.status == Status::Mismatch {
            let rhs = r.rhs.as_ref().map_or("-".to_string(), ToString::to_string);
            let diff = r.diff.as_ref().map_or("-".to_string(), ToString::to_string);
            let _ = writeln!(s, "    lhs:  {}\n    rhs:  {rhs}\n    diff: {diff}", r.lhs);
        }
        if let Some(note) = &r.note {
            let _ = writeln!(s, "    note: {note}");
        }
    }
    let summary: Vec<String> = [Status::Equal, Status::Mismatch, Status::OutOfStatedRange]
        .iter()
        .map(|st| format!("{} {}", counts.get(st.as_str()).copied().unwrap_or(0), st))
        .collect();
    let _ = writeln!(s, "total {}: {}", report.rows.len(), summary.join(", "));
    s
}

pub fn table(stat: Stat, set: Family, n: usize, force: bool, format: OutputFormat) -> Result<Outcome> {
    let stat_name = format!("{stat:?}").to_lowercase();
    let b_only = matches!(stat, Stat::Fmaj | Stat::Fdes | Stat::Neg);
    if b_only && !set.is_signed() {
        bail!("{stat_name} is a type-B statistic but {set} contains unsigned permutations only");
    }
    let note = (stat == Stat::Inv && set.is_signed()).then(|| "inv computed on |pi|".to_string());
    let all = members(set, n, force)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for p in &all {
        let value = match stat {
            Stat::Des => p.des(),
            Stat::Maj => p.maj(),
            Stat::Fmaj => p.fmaj(),
            Stat::Fdes => p.fdes(),
            Stat::Neg => p.neg(),
            Stat::Inv => p.absolute().inv(),
        };
        *counts.entry(value).or_default() += 1;
    }
    let text = match format {
        OutputFormat::Lines => {
            let mut s = String::new();
            if let Some(note) = &note {
                let _ = writeln!(s, "# {note}");
            }
            let _ = writeln!(s, "{stat_name} count");
            for (v, c) in &counts {
                let _ = writeln!(s, "{v} {c}");
            }
            let _ = writeln!(s, "total {}", all.len());
            s
        }
        OutputFormat::Csv => {
            if let Some(note) = &note {
                eprintln!("note: {note}");
            }
            csv_text(&["value", "count"], counts.iter().map(|(v, c)| vec![v.to_string(), c.to_string()]))?
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Entry {
                value: usize,
                count: u64,
            }
            #[derive(Serialize)]
            struct Distribution {
                stat: String,
                set: String,
                n: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                note: Option<String>,
                total: usize,
                counts: Vec<Entry>,
            }
            json_text(&Distribution {
                stat: stat_name,
                set: set.to_string(),
                n,
                note,
                total: all.len(),
                counts: counts.iter().map(|(&value, &count)| Entry { value, count }).collect(),
            })?
        }
    };
    Ok(Outcome::ok(text))
}
