//! Command-line front end: classification, oracle cross-checks, exhaustive
//! verification, Yang–Baxter solutions and export.
//!
//! [`run`] writes everything to the supplied writer (or to `--output`) and
//! returns the process exit code: `0` on success, `1` when a check
//! disagrees with its expected value, `2` on bad input or I/O failure.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skewbrace_core::brace::{
    are_isomorphic, brace_from_regular, is_biskew, lambda_of, verify_skew_axioms,
};
use skewbrace_core::eprime::EPrimeTable;
use skewbrace_core::export::{table_to_csv, BraceDescriptor, CatalogExport, SolutionExport};
use skewbrace_core::families::all_family_subgroups;
use skewbrace_core::oracle::{enumerate_regular_bruteforce, DEFAULT_ORACLE_BUDGET};
use skewbrace_core::orbits::compute_orbits;
use skewbrace_core::ybe::YbeReport;
use skewbrace_core::{
    catalog, catalog_entries, solution_from_brace, BraceLabel, GroupKind, Params, SkewBrace,
};

/// Largest `p` accepted by `classify`.
pub const MAX_CLASSIFY_P: u64 = 10_000;
/// Largest `pq` for which Cayley tables are materialized.
pub const MAX_TABLE_ORDER: usize = 500;
/// Largest `pq` for which `classify` runs the quadratic bi-skew check.
pub const MAX_BISKEW_ORDER: usize = 5_000;
/// Default output directory for `export`.
pub const OUT_DIR_ENV: &str = "SKEWBRACE_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] skewbrace_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("serializing output: {0}")]
    Json(#[from] serde_json::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "skewbrace", version, about = "Skew braces of order pq")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List the skew braces of order pq up to isomorphism.
    Classify(RunConfig),
    /// Enumerate regular subgroups by brute force and compare with the
    /// closed forms.
    OracleCheck(RunConfig),
    /// Check the brace axioms and the bi-skew property on every brace.
    Verify(RunConfig),
    /// Build and check the Yang–Baxter solution of every brace.
    Ybe(RunConfig),
    /// Write brace descriptors and Cayley tables to files.
    Export(RunConfig),
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
    /// Residue of multiplicative order q modulo p; the smallest one if omitted.
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub include_tables: bool,
    /// Largest pq for the brute-force enumeration.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u64,
    /// Output file, or output directory for `export`.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(p: u64, q: u64) -> Self {
        RunConfig {
            p,
            q,
            g: None,
            format: Format::Text,
            include_tables: false,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            output: None,
        }
    }

    fn params(&self) -> CliResult<Params> {
        Ok(match self.g {
            Some(g) => Params::with_generator(self.p, self.q, g)?,
            None => Params::new(self.p, self.q)?,
        })
    }
}

/// Text written by a command and whether every check passed.
struct Report {
    body: String,
    ok: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, ok: true }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            code
        }
    }
}

pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Classify(c) => classify(c).and_then(|r| emit(c, r, out)),
        Command::OracleCheck(c) => oracle_check(c).and_then(|r| emit(c, r, out)),
        Command::Verify(c) => verify(c).and_then(|r| emit(c, r, out)),
        Command::Ybe(c) => ybe(c).and_then(|r| emit(c, r, out)),
        Command::Export(c) => export(c).and_then(|r| {
            out.write_all(r.body.as_bytes())?;
            Ok(r.ok)
        }),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            let _ = writeln!(err, "error: verification mismatch");
            EXIT_MISMATCH
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(config: &RunConfig, report: Report, out: &mut dyn Write) -> CliResult<bool> {
    match &config.output {
        Some(path) => write_file(path, &report.body)?,
        None => out.write_all(report.body.as_bytes())?,
    }
    Ok(report.ok)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn require_tables(params: &Params) -> CliResult<()> {
    if params.order() > MAX_TABLE_ORDER {
        return Err(CliError::Usage(format!(
            "pq = {} exceeds the table limit {MAX_TABLE_ORDER}",
            params.order()
        )));
    }
    Ok(())
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let map = |e: csv::Error| CliError::Usage(e.to_string());
    w.write_record(header).map_err(map)?;
    for r in rows {
        w.write_record(r).map_err(map)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of ascii fields"))
}

fn expected_count(params: &Params) -> usize {
    if params.congruent() {
        2 * params.q() as usize + 2
    } else {
        1
    }
}

/// `|ker λ|` predicted for a catalog label.
fn expected_kernel(params: &Params, label: BraceLabel) -> Option<usize> {
    let (p, q) = (params.p() as usize, params.q() as usize);
    match label {
        BraceLabel::TrivialC | BraceLabel::TrivialM => Some(p * q),
        BraceLabel::CyclicNontrivial | BraceLabel::Gamma { .. } => Some(p),
        BraceLabel::KerQ => Some(q),
        BraceLabel::Mu { .. } => Some(1),
        _ => None,
    }
}

/// Braces known to be bi-skew; the rest are computed only.
fn expected_biskew(label: BraceLabel) -> Option<bool> {
    match label {
        BraceLabel::TrivialC
        | BraceLabel::TrivialM
        | BraceLabel::CyclicNontrivial
        | BraceLabel::Gamma { .. } => Some(true),
        _ => None,
    }
}

fn descriptor_rows(ds: &[BraceDescriptor]) -> Vec<Vec<String>> {
    ds.iter()
        .map(|d| {
            vec![
                d.label.to_string(),
                d.add_kind.to_string(),
                opt(d.mult_iso),
                d.ker_lambda.to_string(),
                opt(d.biskew),
                opt(d.formula),
            ]
        })
        .collect()
}

const DESCRIPTOR_HEADER: [&str; 6] = ["label", "add", "mult", "ker_lambda", "biskew", "formula"];

fn classify(config: &RunConfig) -> CliResult<Report> {
    if config.p > MAX_CLASSIFY_P {
        return Err(CliError::Usage(format!(
            "classify accepts p <= {MAX_CLASSIFY_P}, got {}",
            config.p
        )));
    }
    let params = config.params()?;
    let descriptors: Vec<BraceDescriptor> = if config.include_tables {
        require_tables(&params)?;
        catalog(&params)
            .iter()
            .map(|b| BraceDescriptor::of_brace(b, true))
            .collect()
    } else {
        let with_biskew = params.order() <= MAX_BISKEW_ORDER;
        catalog_entries(&params)
            .iter()
            .map(|e| BraceDescriptor::of_entry(&params, e, with_biskew))
            .collect()
    };
    let ok = descriptors.len() == expected_count(&params)
        && descriptors.iter().all(|d| {
            expected_kernel(&params, d.label) == Some(d.ker_lambda)
                && expected_biskew(d.label).is_none_or(|e| d.biskew.is_none_or(|b| b == e))
        });

    let body = match config.format {
        Format::Json => {
            serde_json::to_string_pretty(&CatalogExport::new(&params, descriptors))? + "\n"
        }
        Format::Csv => csv_string(&DESCRIPTOR_HEADER, &descriptor_rows(&descriptors))?,
        Format::Text => {
            let mut s = String::new();
            if descriptors.len() == 1 {
                writeln!(s, "1 skew brace (trivial, cyclic)").unwrap();
            } else {
                writeln!(s, "{} skew braces", descriptors.len()).unwrap();
            }
            writeln!(
                s,
                "p = {}, q = {}, g = {}",
                params.p(),
                params.q(),
                opt(params.g())
            )
            .unwrap();
            for r in descriptor_rows(&descriptors) {
                writeln!(
                    s,
                    "  {:<18} add={} mult={} |ker λ|={:<6} biskew={:<5} x∘y = {}",
                    r[0], r[1], r[2], r[3], r[4], r[5]
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Report { body, ok })
}

#[derive(Serialize)]
struct KindCheck {
    add_kind: GroupKind,
    oracle_subgroups: usize,
    family_subgroups: usize,
    subgroups_match: bool,
    e_prime: Vec<(String, usize)>,
    e_prime_expected: Vec<(String, usize)>,
    e_prime_match: bool,
    orbits: usize,
    orbits_expected: usize,
    /// Catalog label matched by the brace of each orbit representative.
    orbit_braces: Vec<Option<String>>,
    orbit_braces_match: bool,
}

impl KindCheck {
    fn ok(&self) -> bool {
        self.subgroups_match
            && self.e_prime_match
            && self.orbits == self.orbits_expected
            && self.orbit_braces_match
    }
}

fn check_kind(
    params: &Params,
    kind: GroupKind,
    budget: u64,
    cat: &[SkewBrace],
) -> CliResult<KindCheck> {
    let oracle = enumerate_regular_bruteforce(params, kind, budget)?;
    let families = all_family_subgroups(params, kind)?;
    let mut fam_sorted: Vec<_> = families.iter().map(|s| s.elements().to_vec()).collect();
    fam_sorted.sort();
    let mut orc_sorted: Vec<_> = oracle.iter().map(|s| s.elements().to_vec()).collect();
    orc_sorted.sort();

    let observed = EPrimeTable::from_subgroups(params, kind, &oracle);
    let expected = EPrimeTable::closed_form(params, kind)?;
    let orbits = compute_orbits(params, &oracle)?;
    let same_kind: Vec<&SkewBrace> = cat.iter().filter(|b| b.add_kind() == kind).collect();

    let mut orbit_braces = Vec::with_capacity(orbits.len());
    let mut hits = vec![0usize; same_kind.len()];
    for o in &orbits {
        let b = brace_from_regular(params, kind, &o.representative)?;
        let found = same_kind.iter().position(|c| are_isomorphic(&b, c));
        if let Some(i) = found {
            hits[i] += 1;
        }
        orbit_braces.push(found.map(|i| same_kind[i].label().to_string()));
    }
    let table = |t: &EPrimeTable| {
        t.entries()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Vec<_>>()
    };
    Ok(KindCheck {
        add_kind: kind,
        oracle_subgroups: oracle.len(),
        family_subgroups: families.len(),
        subgroups_match: fam_sorted == orc_sorted,
        e_prime: table(&observed),
        e_prime_expected: table(&expected),
        e_prime_match: observed.agrees_with(&expected),
        orbits: orbits.len(),
        orbits_expected: same_kind.len(),
        orbit_braces,
        orbit_braces_match: hits.iter().all(|&h| h == 1),
    })
}

fn oracle_check(config: &RunConfig) -> CliResult<Report> {
    let params = config.params()?;
    let cat = catalog(&params);
    let checks = params
        .kinds()
        .into_iter()
        .map(|k| check_kind(&params, k, config.oracle_budget, &cat))
        .collect::<CliResult<Vec<_>>>()?;
    let ok = checks.iter().all(KindCheck::ok);
    let body = match config.format {
        Format::Json => serde_json::to_string_pretty(&checks)? + "\n",
        Format::Csv => {
            let mut rows = Vec::new();
            for c in &checks {
                for (k, v) in &c.e_prime_expected {
                    let seen = c.e_prime.iter().find(|(kk, _)| kk == k).map_or(0, |x| x.1);
                    rows.push(vec![k.clone(), seen.to_string(), v.to_string()]);
                }
            }
            csv_string(&["count", "oracle", "closed_form"], &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                writeln!(s, "additive group {}", c.add_kind).unwrap();
                writeln!(
                    s,
                    "  regular subgroups: oracle {} / families {} ({})",
                    c.oracle_subgroups,
                    c.family_subgroups,
                    verdict(c.subgroups_match)
                )
                .unwrap();
                for (k, v) in &c.e_prime_expected {
                    let seen = c.e_prime.iter().find(|(kk, _)| kk == k).map_or(0, |x| x.1);
                    writeln!(
                        s,
                        "  {k} = {seen} (closed form {v}, {})",
                        verdict(seen == *v)
                    )
                    .unwrap();
                }
                writeln!(
                    s,
                    "  orbits: {} (expected {}, {})",
                    c.orbits,
                    c.orbits_expected,
                    verdict(c.orbits == c.orbits_expected)
                )
                .unwrap();
                writeln!(
                    s,
                    "  orbit braces: {} ({})",
                    c.orbit_braces
                        .iter()
                        .map(|x| opt(x.clone()))
                        .collect::<Vec<_>>()
                        .join(", "),
                    verdict(c.orbit_braces_match)
                )
                .unwrap();
            }
            writeln!(s, "{}", if ok { "all checks passed" } else { "MISMATCH" }).unwrap();
            s
        }
    };
    Ok(Report { body, ok })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

#[derive(Serialize)]
struct VerifyRow {
    label: BraceLabel,
    add_kind: GroupKind,
    axioms: bool,
    witness: Option<[usize; 3]>,
    biskew: bool,
    ker_lambda: Option<usize>,
}

fn verify(config: &RunConfig) -> CliResult<Report> {
    let params = config.params()?;
    require_tables(&params)?;
    let rows: Vec<VerifyRow> = catalog(&params)
        .iter()
        .map(|b| {
            let rep = verify_skew_axioms(b);
            VerifyRow {
                label: b.label(),
                add_kind: b.add_kind(),
                axioms: rep.passed(),
                witness: rep.law_violation,
                biskew: is_biskew(b),
                ker_lambda: lambda_of(b).ok().map(|l| l.kernel_size()),
            }
        })
        .collect();
    let ok = rows.iter().all(|r| {
        r.axioms
            && expected_biskew(r.label).is_none_or(|e| e == r.biskew)
            && r.ker_lambda == expected_kernel(&params, r.label)
    });
    let body = match config.format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => csv_string(
            &["label", "add", "axioms", "biskew", "ker_lambda"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.to_string(),
                        r.add_kind.to_string(),
                        r.axioms.to_string(),
                        r.biskew.to_string(),
                        opt(r.ker_lambda),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                writeln!(
                    s,
                    "{:<18} add={} axioms={} biskew={} |ker λ|={}",
                    r.label.to_string(),
                    r.add_kind,
                    verdict(r.axioms),
                    r.biskew,
                    opt(r.ker_lambda)
                )
                .unwrap();
            }
            writeln!(s, "{}", if ok { "all checks passed" } else { "MISMATCH" }).unwrap();
            s
        }
    };
    Ok(Report { body, ok })
}

#[derive(Serialize)]
struct YbeRow {
    label: BraceLabel,
    add_kind: GroupKind,
    size: usize,
    #[serde(flatten)]
    report: YbeReport,
}

fn ybe(config: &RunConfig) -> CliResult<Report> {
    let params = config.params()?;
    require_tables(&params)?;
    let mut exports = Vec::new();
    for b in catalog(&params) {
        exports.push(SolutionExport::new(&b, solution_from_brace(&b)?));
    }
    let ok = exports
        .iter()
        .all(|e| e.report.is_solution() && e.report.involutive == (e.add_kind == GroupKind::C));
    let rows: Vec<YbeRow> = exports
        .iter()
        .map(|e| YbeRow {
            label: e.label,
            add_kind: e.add_kind,
            size: e.size,
            report: e.report,
        })
        .collect();
    let body = match config.format {
        Format::Json if config.include_tables => serde_json::to_string_pretty(&exports)? + "\n",
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => csv_string(
            &[
                "label",
                "add",
                "size",
                "braid",
                "nondegenerate",
                "involutive",
            ],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.to_string(),
                        r.add_kind.to_string(),
                        r.size.to_string(),
                        r.report.braid.to_string(),
                        r.report.nondegenerate.to_string(),
                        r.report.involutive.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                writeln!(
                    s,
                    "{:<18} add={} size={} braid={} nondegenerate={} involutive={}",
                    r.label.to_string(),
                    r.add_kind,
                    r.size,
                    r.report.braid,
                    r.report.nondegenerate,
                    r.report.involutive
                )
                .unwrap();
            }
            writeln!(s, "{}", if ok { "all checks passed" } else { "MISMATCH" }).unwrap();
            s
        }
    };
    Ok(Report { body, ok })
}

fn slug(label: BraceLabel) -> String {
    let raw = label.to_string().to_lowercase();
    let mut s: String = raw
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    while s.ends_with('_') {
        s.pop();
    }
    s
}

fn export(config: &RunConfig) -> CliResult<Report> {
    let params = config.params()?;
    require_tables(&params)?;
    let dir = config
        .output
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|source| CliError::Io {
        path: dir.clone(),
        source,
    })?;
    let cat = catalog(&params);
    let descriptors: Vec<BraceDescriptor> = cat
        .iter()
        .map(|b| BraceDescriptor::of_brace(b, true))
        .collect();
    let stem = format!("catalog_p{}_q{}", params.p(), params.q());
    let mut written = Vec::new();
    match config.format {
        Format::Json => {
            let path = dir.join(format!("{stem}.json"));
            write_file(
                &path,
                &(CatalogExport::new(&params, descriptors).to_json()? + "\n"),
            )?;
            written.push(path);
        }
        Format::Csv => {
            let path = dir.join(format!("{stem}.csv"));
            write_file(
                &path,
                &csv_string(&DESCRIPTOR_HEADER, &descriptor_rows(&descriptors))?,
            )?;
            written.push(path);
            let n = params.order();
            for (i, b) in cat.iter().enumerate() {
                for (which, table) in [("add", b.add_table()), ("circ", b.circ_table())] {
                    let path = dir.join(format!("{stem}_{i:02}_{}_{which}.csv", slug(b.label())));
                    write_file(&path, &table_to_csv(table, n)?)?;
                    written.push(path);
                }
            }
        }
        Format::Text => {
            let path = dir.join(format!("{stem}.txt"));
            let mut s = String::new();
            for r in descriptor_rows(&descriptors) {
                writeln!(s, "{}", r.join("\t")).unwrap();
            }
            write_file(&path, &s)?;
            written.push(path);
        }
    }
    let mut body = String::new();
    for p in &written {
        writeln!(body, "wrote {}", p.display()).unwrap();
    }
    Ok(Report::ok(body))
}
