//! The `gauge-quandle` command line.
//!
//! [`run`] parses arguments and returns the exit code with everything that
//! would be printed, so the binary is a two-line wrapper and tests can drive
//! the commands in-process.
//!
//! Exit codes: 0 when the check passes, 1 when a verification fails, 2 on
//! unreadable or invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bundle::{BundleFile, DiscreteBundle, EquivariantMap, MapFile};
use crate::error::Error;
use crate::gauge::{self, GaugeQuandle};
use crate::group::{catalog, FiniteGroup, GroupFile, Subgroup};
use crate::lie::{run_sweep, SweepConfig};
use crate::rack::{
    associated_quandle, is_morphism, morphism_witness, verify_rack, MagmaTable, QuandleFile, RackReport,
};

/// Tables with at most this many rows are printed in human output.
pub const PRINT_LIMIT: usize = 12;
const DEFAULT_CENSUS_CAP: u128 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "gauge-quandle", version, about = "Racks and quandles from gauge transformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a quandle file against the rack and quandle axioms.
    Verify {
        quandle: PathBuf,
        /// Pass when the table is a rack, idempotent or not.
        #[arg(long)]
        rack: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Build the gauge quandle of an equivariant map.
    Build {
        bundle: PathBuf,
        map: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Build the rack `p₁·f(p₂)` of an equivariant map and its associated quandle.
    Rack {
        bundle: PathBuf,
        map: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Classify the gauge quandles of all equivariant maps up to isomorphism.
    Census {
        bundle: PathBuf,
        /// Largest number of maps to enumerate.
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: u128,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Transport one fiber to its chart and compare with the Alexander quandle.
    Fiber {
        bundle: PathBuf,
        map: PathBuf,
        #[arg(long)]
        base: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quotient a gauge quandle by a subgroup acting on the right.
    Reduce {
        bundle: PathBuf,
        map: PathBuf,
        /// Comma-separated subgroup elements, as indices or labels.
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// The quandle on right cosets of a subgroup for a centralizing element.
    Homogeneous {
        /// Catalog name or path to a group file.
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the numerical Lie-quandle sweep described by a config file.
    LieCheck {
        config: PathBuf,
        /// Overrides the seed in the config.
        #[arg(long)]
        seed: u64,
        /// Overrides the tolerance in the config.
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Self { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok((passed, stdout)) => Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() },
        Err(Failure::Input(e)) => Outcome::input_error(e),
        Err(Failure::Verification(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("fail: {e}\n") },
    }
}

enum Failure {
    Input(String),
    Verification(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NormalizerViolation { .. } | Error::CentralizerViolation { .. } | Error::NotWellDefined(_) => {
                Failure::Verification(e)
            }
            e => Failure::Input(e.to_string()),
        }
    }
}

type Run = Result<(bool, String), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    std::fs::write(path, to_json(value)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Pretty JSON with arrays of plain numbers kept on one line, so tables read row by row.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("serializable");
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty.as_str();
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let after = &rest[open + 1..];
        let close = after.find(['[', ']', '{', '"']);
        match close {
            // strings never hold a raw newline, so this only matches structural arrays
            Some(i) if after.as_bytes()[i] == b']' && after[..i].contains('\n') => {
                let items: Vec<&str> = after[..i].split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
                out.push('[');
                out.push_str(&items.join(", "));
                out.push(']');
                rest = &after[i + 1..];
            }
            _ => {
                out.push('[');
                rest = after;
            }
        }
    }
    out.push_str(rest);
    out.push('\n');
    out
}

fn load_bundle(path: &Path) -> Result<DiscreteBundle, Failure> {
    Ok(DiscreteBundle::from_file(&read_json::<BundleFile>(path)?)?)
}

fn load_map(bundle: &DiscreteBundle, path: &Path) -> Result<EquivariantMap, Failure> {
    Ok(EquivariantMap::from_file(bundle, &read_json::<MapFile>(path)?)?)
}

fn load_gauge(bundle: &Path, map: &Path) -> Result<GaugeQuandle, Failure> {
    let b = load_bundle(bundle)?;
    let f = load_map(&b, map)?;
    Ok(gauge::build(&f))
}

fn load_group(name_or_path: &str) -> Result<FiniteGroup, Failure> {
    let path = Path::new(name_or_path);
    if path.is_file() {
        Ok(FiniteGroup::from_file(read_json::<GroupFile>(path)?)?)
    } else {
        Ok(catalog(name_or_path)?)
    }
}

fn parse_subgroup(g: &FiniteGroup, list: &str) -> Result<Subgroup, Failure> {
    let elements = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| g.parse_element(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subgroup::new(g, elements)?)
}

/// The operation table with row and column headers, columns aligned.
pub fn render_table(m: &MagmaTable) -> String {
    let n = m.size();
    let labels: Vec<String> = (0..n).map(|x| m.label(x)).collect();
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(1);
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "◁");
    for l in &labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}-+{}", "-".repeat(width), "-".repeat((width + 1) * n));
    for x in 0..n {
        let _ = write!(out, "{:>width$} |", labels[x]);
        for y in 0..n {
            let _ = write!(out, " {:>width$}", labels[m.op(x, y)]);
        }
        out.push('\n');
    }
    out
}

fn table_section(out: &mut String, m: &MagmaTable) {
    if m.size() <= PRINT_LIMIT {
        out.push_str(&render_table(m));
    } else {
        let _ = writeln!(out, "({} elements; table omitted)", m.size());
    }
}

fn render_report(out: &mut String, r: &RackReport) {
    let _ = writeln!(out, "rack:    {}", if r.is_rack { "yes" } else { "no" });
    let _ = writeln!(out, "quandle: {}", if r.is_quandle { "yes" } else { "no" });
    if let Some(&(x, y, z)) = r.sd_violations.first() {
        let _ = writeln!(
            out,
            "self-distributivity fails at (x, y, z) = ({x}, {y}, {z}); {} violating triples",
            r.sd_violations.len()
        );
    }
    if !r.bijectivity_violations.is_empty() {
        let _ = writeln!(out, "right translations not bijective for y in {:?}", r.bijectivity_violations);
    }
    if !r.idem_violations.is_empty() {
        let _ = writeln!(out, "x ◁ x != x for x in {:?}", r.idem_violations);
    }
}

fn execute(command: &Command) -> Run {
    match command {
        Command::Verify { quandle, rack, common } => {
            let file: QuandleFile = read_json(quandle)?;
            let table = MagmaTable::try_from(file)?;
            let report = verify_rack(&table);
            let passed = if *rack { report.is_rack } else { report.is_quandle };
            if common.json {
                return Ok((passed, to_json(&report)));
            }
            let mut out = String::new();
            render_report(&mut out, &report);
            Ok((passed, out))
        }
        Command::Build { bundle, map, out, common } => {
            let q = load_gauge(bundle, map)?;
            let file = q.to_file();
            if let Some(path) = out {
                write_json(path, &file)?;
            }
            if common.json {
                return Ok((true, to_json(&file)));
            }
            let mut text = String::new();
            let b = q.bundle();
            let _ = writeln!(
                text,
                "gauge quandle over {} with base of size {}: {} points",
                b.group().name(),
                b.base_size(),
                b.total_size()
            );
            table_section(&mut text, q.table());
            Ok((true, text))
        }
        Command::Rack { bundle, map, out, common } => {
            let b = load_bundle(bundle)?;
            let f = load_map(&b, map)?;
            let rack = gauge::rack_from_map(&f);
            let report = verify_rack(&rack);
            let associated = associated_quandle(&rack)?;
            let agrees = associated.same_operation(gauge::build(&f).table());
            if let Some(path) = out {
                write_json(path, &QuandleFile::from(rack.clone()))?;
            }
            let passed = report.is_rack && agrees;
            if common.json {
                let value = serde_json::json!({
                    "rack": QuandleFile::from(rack),
                    "report": report,
                    "associated_quandle_matches_gauge_quandle": agrees,
                });
                return Ok((passed, to_json(&value)));
            }
            let mut text = String::new();
            table_section(&mut text, &rack);
            render_report(&mut text, &report);
            let _ = writeln!(text, "associated quandle equals gauge quandle: {}", if agrees { "yes" } else { "no" });
            Ok((passed, text))
        }
        Command::Census { bundle, cap, out, common } => {
            let b = load_bundle(bundle)?;
            let c = gauge::census(&b, *cap)?;
            if let Some(path) = out {
                write_json(path, &c)?;
            }
            if common.json {
                return Ok((true, to_json(&c)));
            }
            let g = b.group();
            let mut text = String::new();
            let _ = writeln!(text, "{} maps, {} isomorphism classes", c.maps, c.classes.len());
            let reps: Vec<String> = c
                .classes
                .iter()
                .map(|k| k.representative.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(", "))
                .collect();
            let width = reps.iter().map(|r| r.chars().count()).max().unwrap_or(0).max("representative".len());
            let _ = writeln!(text, "{:>5}  {:<width$}  {:>4}", "class", "representative", "size");
            for (i, (k, rep)) in c.classes.iter().zip(&reps).enumerate() {
                let _ = writeln!(text, "{i:>5}  {rep:<width$}  {:>4}", k.size);
            }
            Ok((true, text))
        }
        Command::Fiber { bundle, map, base, common } => {
            let q = load_gauge(bundle, map)?;
            let t = gauge::transport_fiber(&q, *base)?;
            let alexander = gauge::fiber_alexander(&q, *base)?;
            let fiber = gauge::fiber_quandle(&q, *base)?;
            let equal = t.table.same_operation(&alexander);
            let witness = morphism_witness(&t.psi, &fiber, &t.table);
            let passed = equal && witness.is_none() && is_morphism(&t.psi, &fiber, &t.table);
            if common.json {
                let value = serde_json::json!({
                    "base": t.base,
                    "points": t.points,
                    "psi": t.psi,
                    "table": QuandleFile::from(t.table.clone()),
                    "equals_alexander": equal,
                    "morphism_witness": witness,
                    "passed": passed,
                });
                return Ok((passed, to_json(&value)));
            }
            let mut text = String::new();
            let _ = writeln!(text, "fiber over base point {} in chart coordinates", t.base);
            table_section(&mut text, &t.table);
            let _ = writeln!(text, "equals generalized Alexander quandle: {}", if equal { "yes" } else { "no" });
            match witness {
                None => {
                    let _ = writeln!(text, "chart map is a quandle morphism: yes");
                }
                Some((x, y)) => {
                    let _ = writeln!(text, "chart map is a quandle morphism: no, fails at ({x}, {y})");
                }
            }
            Ok((passed, text))
        }
        Command::Reduce { bundle, map, subgroup, out, common } => {
            let q = load_gauge(bundle, map)?;
            let h = parse_subgroup(q.bundle().group(), subgroup)?;
            let r = gauge::reduce(&q, &h)?;
            let file = QuandleFile::from(r.table.clone());
            if let Some(path) = out {
                write_json(path, &file)?;
            }
            if common.json {
                let value = serde_json::json!({ "classes": r.classes, "quandle": file });
                return Ok((true, to_json(&value)));
            }
            let mut text = String::new();
            let _ = writeln!(text, "{} classes", r.classes.len());
            for (i, class) in r.classes.iter().enumerate() {
                let labels: Vec<String> = class.iter().map(|&p| q.table().label(p)).collect();
                let _ = writeln!(text, "  [{i}] = {{{}}}", labels.join(", "));
            }
            table_section(&mut text, &r.table);
            Ok((true, text))
        }
        Command::Homogeneous { group, subgroup, element, out, common } => {
            let g = load_group(group)?;
            let h = parse_subgroup(&g, subgroup)?;
            let c = g.parse_element(element)?;
            let hq = gauge::homogeneous_quandle(&g, &h, c)?;
            let file = QuandleFile::from(hq.table.clone());
            if let Some(path) = out {
                write_json(path, &file)?;
            }
            if common.json {
                let value = serde_json::json!({ "cosets": hq.cosets, "quandle": file });
                return Ok((true, to_json(&value)));
            }
            let mut text = String::new();
            let _ = writeln!(text, "{} right cosets", hq.cosets.len());
            for (i, coset) in hq.cosets.iter().enumerate() {
                let labels: Vec<String> = coset.iter().map(|&x| g.label(x)).collect();
                let _ = writeln!(text, "  [{i}] = {{{}}}", labels.join(", "));
            }
            table_section(&mut text, &hq.table);
            Ok((true, text))
        }
        Command::LieCheck { config, seed, tolerance, out, common } => {
            let mut cfg: SweepConfig = read_json(config)?;
            cfg.seed = *seed;
            if let Some(t) = tolerance {
                cfg.tolerance = *t;
            }
            let report = run_sweep(&cfg)?;
            if let Some(path) = out {
                write_json(path, &report)?;
            }
            if common.json {
                return Ok((report.passed, to_json(&report)));
            }
            let mut text = String::new();
            let _ = writeln!(
                text,
                "{} sweep: {} base points, {} samples, seed {}",
                report.model, report.base_points, report.samples, report.seed
            );
            let width = report.axioms.iter().map(|r| r.check.len()).max().unwrap_or(0);
            for r in &report.axioms {
                let _ = writeln!(
                    text,
                    "  {:<width$}  {:>10.3e}  (tol {:.0e})  {}",
                    r.check,
                    r.max_residual,
                    r.tolerance,
                    if r.passed { "pass" } else { "FAIL" }
                );
            }
            let n = &report.noether;
            let _ = writeln!(
                text,
                "  noether: directions agree on {}/{} random pairs; {}/{} matched pairs fix both ways (max residual {:.3e})  {}",
                n.random_agreements,
                n.random_pairs,
                n.constructed_fixing_both_ways,
                n.constructed_pairs,
                n.max_constructed_residual,
                if n.passed { "pass" } else { "FAIL" }
            );
            Ok((report.passed, text))
        }
    }
}
