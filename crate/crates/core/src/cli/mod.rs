//! The `jets` command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and returns the
//! rendered output together with the exit status: 0 on success, 1 for
//! invalid input, 2 when a descriptor fails validation.

use std::fmt::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{fano_seshadri_cap, floor_gap_witness, pn_verdict, CanonicalClass, PnVerdict};
use crate::catalog::{self, PointClass, SeshadriDatum, Source, VarietyRecord};
use crate::chern::{jet_c1, mori_positivity_check, MoriVerdict, SplittingType};
use crate::error::Error;
use crate::exactmath::{cmp_to_nth_root, perfect_nth_root, Rational, RootOrdering};
use crate::sections::{table_rows, two_value_threshold, SectionModel, SurfaceSections};

pub mod descriptor;
pub mod render;

pub use descriptor::Descriptor;

/// Largest `k` any table command accepts.
pub const K_MAX: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Latex,
}

/// Inclusive range of `k`, written `A..B` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange {
    pub from: u64,
    pub to: u64,
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").unwrap_or((s, s));
        let parse = |x: &str| x.parse::<u64>().map_err(|_| format!("bad k range {s:?}; expected A..B"));
        let range = KRange { from: parse(a)?, to: parse(b)? };
        if range.from == 0 || range.from > range.to {
            return Err(format!("k range {s:?} must satisfy 1 <= A <= B"));
        }
        if range.to > K_MAX {
            return Err(format!("k range {s:?} exceeds the limit {K_MAX}"));
        }
        Ok(range)
    }
}

#[derive(Parser, Debug)]
#[command(name = "jets", about = "Jet-generation bounds from Seshadri constants", version)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Raw intervals for s(kL,x)
    Bounds(TableArgs),
    /// Table laid out with one column per k
    Table {
        #[command(flatten)]
        args: TableArgs,
        /// Prune candidates by counting sections
        #[arg(long)]
        prune: bool,
    },
    /// Intervals pruned by section counts, with h0 per k
    Prune(TableArgs),
    /// Smallest k with floor((k+1) eps) - b > floor(k eps)
    Lemma {
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        b: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// First Chern class of the jet bundle J_k(L) on an n-fold
    Chern {
        #[arg(long)]
        n: u32,
        /// Defaults to n + 1
        #[arg(long)]
        k: Option<u64>,
        /// Also evaluate at L = -K
        #[arg(long)]
        anticanonical: bool,
        /// Splitting type a_1,...,a_n of T_X along a rational curve
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        splitting: Option<Vec<i64>>,
        /// Degree of -K_X on that curve; defaults to the sum of the a_i
        #[arg(long)]
        b: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Caps, case analysis and characterization verdicts for a descriptor
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List the built-in descriptors
    CatalogList {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check a descriptor's invariants
    Validate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value = "1..10")]
    k: KRange,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args, Debug, Default)]
struct SourceArgs {
    /// Built-in descriptor id
    #[arg(long)]
    catalog: Option<String>,
    /// JSON descriptor file
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    class: Option<CanonicalClass>,
    #[arg(long)]
    degree: Option<u64>,
    #[arg(long)]
    eps: Option<Rational>,
    #[arg(long = "point-class")]
    point_class: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    chi: Option<i64>,
    #[arg(long = "L2")]
    l2: Option<u64>,
    #[arg(long = "LK", allow_negative_numbers = true)]
    lk: Option<i64>,
    #[arg(long = "exact-from")]
    exact_from: Option<u64>,
}

/// Where the descriptor comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum SourceSpec {
    Catalog(String),
    File(PathBuf),
    Inline(Box<VarietyRecord>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Bounds,
    Table { prune: bool },
    Prune,
    Lemma { eps: Rational, b: u64 },
    Chern { n: u32, k: Option<u64>, anticanonical: bool, splitting: Option<(Vec<i64>, Option<i64>)> },
    Classify,
    CatalogList,
    Validate,
}

/// A fully parsed invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub k_range: KRange,
    pub format: Format,
    pub source: Option<SourceSpec>,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation { .. } => Failure::validation(e.to_string()),
            other => Failure::input(other.to_string()),
        }
    }
}

impl SourceArgs {
    fn has_inline(&self) -> bool {
        self.n.is_some()
            || self.class.is_some()
            || self.degree.is_some()
            || self.eps.is_some()
            || self.point_class.is_some()
            || self.chi.is_some()
            || self.l2.is_some()
            || self.lk.is_some()
            || self.exact_from.is_some()
    }

    fn into_spec(self) -> Result<SourceSpec, Failure> {
        let inline = self.has_inline();
        match (self.catalog, self.file, inline) {
            (Some(_), Some(_), _) => Err(Failure::input("--catalog and --file are mutually exclusive")),
            (Some(_), None, true) | (None, Some(_), true) => Err(Failure::input(
                "inline descriptor flags (--n, --class, --degree, --eps, --chi, --L2, --LK) \
                 cannot be combined with --catalog or --file",
            )),
            (Some(id), None, false) => Ok(SourceSpec::Catalog(id)),
            (None, Some(path), false) => Ok(SourceSpec::File(path)),
            (None, None, true) => Ok(SourceSpec::Inline(Box::new(inline_record(
                self.n,
                self.class,
                self.degree,
                self.eps,
                self.point_class,
                (self.chi, self.l2, self.lk, self.exact_from),
            )?))),
            (None, None, false) => Err(Failure::input("no descriptor: use --catalog, --file or inline flags")),
        }
    }
}

fn inline_record(
    n: Option<u32>,
    class: Option<CanonicalClass>,
    degree: Option<u64>,
    eps: Option<Rational>,
    point_class: Option<String>,
    surface: (Option<i64>, Option<u64>, Option<i64>, Option<u64>),
) -> Result<VarietyRecord, Failure> {
    let (Some(n), Some(class), Some(degree)) = (n, class, degree) else {
        return Err(Failure::input("inline descriptors need --n, --class and --degree"));
    };
    let sections = match surface {
        (Some(chi), Some(l2), Some(l_dot_k), exact_from) => {
            Some(SectionModel::Surface(SurfaceSections { chi, l2, l_dot_k, exact_from }))
        }
        (None, None, None, None) => None,
        _ => return Err(Failure::input("surface data needs all of --chi, --L2 and --LK")),
    };
    if point_class.is_some() && eps.is_none() {
        return Err(Failure::input("--point-class needs --eps"));
    }
    Ok(VarietyRecord {
        id: "inline".into(),
        name: "inline descriptor".into(),
        n,
        class,
        degree,
        eps: eps.map(|value| SeshadriDatum {
            value,
            point_class: point_class
                .as_deref()
                .map_or(PointClass::Special("unspecified".into()), PointClass::from_label),
            source: Source::User,
            note: String::new(),
        }),
        sections,
        singular_curve: None,
        known_s: Vec::new(),
    })
}

const DEFAULT_K: KRange = KRange { from: 1, to: 10 };

impl RunConfig {
    /// Parses a full argument list, program name first.
    pub fn from_args<I, T>(args: I) -> Result<RunConfig, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let table = |args: TableArgs, command| (command, args.k, args.format, Some(args.source));
        let (command, k_range, format, source) = match cli.command {
            CommandArgs::Bounds(args) => table(args, Command::Bounds),
            CommandArgs::Table { args, prune } => table(args, Command::Table { prune }),
            CommandArgs::Prune(args) => table(args, Command::Prune),
            CommandArgs::Lemma { eps, b, format } => (Command::Lemma { eps, b }, DEFAULT_K, format, None),
            CommandArgs::Chern { n, k, anticanonical, splitting, b, format } => {
                (Command::Chern { n, k, anticanonical, splitting: splitting.map(|a| (a, b)) }, DEFAULT_K, format, None)
            }
            CommandArgs::Classify { source, format } => (Command::Classify, DEFAULT_K, format, Some(source)),
            CommandArgs::CatalogList { format } => (Command::CatalogList, DEFAULT_K, format, None),
            CommandArgs::Validate { source, format } => (Command::Validate, DEFAULT_K, format, Some(source)),
        };
        let source = match source.map(SourceArgs::into_spec).transpose() {
            Ok(s) => s,
            Err(f) => {
                return Err(clap::Error::raw(clap::error::ErrorKind::ArgumentConflict, format!("{}\n", f.message)))
            }
        };
        Ok(RunConfig { command, k_range, format, source })
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::from_args(args) {
        Ok(config) => execute(&config),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

/// Runs a parsed configuration.
pub fn execute(config: &RunConfig) -> Outcome {
    let mut warnings = String::new();
    match dispatch(config, &mut warnings) {
        Ok(stdout) => {
            let code = if warnings.is_empty() { 0 } else { 2 };
            Outcome { code, stdout, stderr: warnings }
        }
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn resolve(source: &Option<SourceSpec>, validate: bool) -> Result<VarietyRecord, Failure> {
    let rec = match source {
        None => return Err(Failure::input("no descriptor given")),
        Some(SourceSpec::Catalog(id)) => {
            return catalog::fetch(id).map_err(Failure::from);
        }
        Some(SourceSpec::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            VarietyRecord::try_from(Descriptor::from_json(&text)?)?
        }
        Some(SourceSpec::Inline(rec)) => (**rec).clone(),
    };
    if validate {
        let violations = catalog::validate(&rec);
        if !violations.is_empty() {
            let reasons: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(Failure::validation(format!("descriptor {:?} is invalid: {}", rec.id, reasons.join("; "))));
        }
    }
    Ok(rec)
}

fn dispatch(config: &RunConfig, warnings: &mut String) -> Result<String, Failure> {
    let format = config.format;
    match &config.command {
        Command::Bounds | Command::Table { .. } | Command::Prune => {
            let rec = resolve(&config.source, true)?;
            let prune = matches!(config.command, Command::Prune | Command::Table { prune: true });
            let rows = table_rows(&rec, config.k_range.from, config.k_range.to, prune)?;
            for r in rows.iter().filter(|r| r.is_empty()) {
                let _ = writeln!(
                    warnings,
                    "warning: no value of [{},{}] at k = {} survives pruning (h0 = {}); descriptor is inconsistent",
                    r.raw.s_lo,
                    r.raw.s_hi,
                    r.k,
                    r.h0.unwrap_or(0)
                );
            }
            Ok(match (format, &config.command) {
                (Format::Csv, _) => render::csv(&rows),
                (Format::Json, _) => render::json(&rec, &rows),
                (Format::Latex, _) => render::latex_table(&rows),
                (Format::Plain, Command::Table { .. }) => render::plain_table(&rec, &rows),
                (Format::Plain, _) => render::plain_rows(&rec, &rows),
            })
        }
        Command::Lemma { eps, b } => {
            if !eps.is_positive() {
                return Err(Failure::input(format!("--eps must be positive, got {eps}")));
            }
            let witness = floor_gap_witness(eps, *b);
            match format {
                Format::Plain => Ok(match witness {
                    Some(k) => format!("witness k={k}\n"),
                    None => {
                        format!("no witness: floor((k+1)*{eps}) - {b} <= floor(k*{eps}) for all k since {eps} <= {b}\n")
                    }
                }),
                Format::Json => Ok(pretty(&json!({ "eps": eps.to_string(), "b": b, "witness": witness }))),
                _ => Err(Failure::input("lemma supports --format plain or json")),
            }
        }
        Command::Chern { n, k, anticanonical, splitting } => chern_output(*n, *k, *anticanonical, splitting, format),
        Command::Classify => {
            let rec = resolve(&config.source, true)?;
            classify(&rec, format)
        }
        Command::CatalogList => catalog_list(format),
        Command::Validate => {
            let rec = resolve(&config.source, false)?;
            let violations = catalog::validate(&rec);
            let reasons: Vec<String> = violations.iter().map(ToString::to_string).collect();
            let out = match format {
                Format::Plain if reasons.is_empty() => format!("ok: {}\n", rec.id),
                Format::Plain => reasons.iter().map(|r| format!("{}: {r}\n", rec.id)).collect(),
                Format::Json => pretty(&json!({ "id": rec.id, "violations": reasons })),
                _ => return Err(Failure::input("validate supports --format plain or json")),
            };
            // The report goes to stdout either way; a warning makes the exit status 2.
            if !violations.is_empty() {
                let _ = writeln!(warnings, "{} violation(s) in {:?}", violations.len(), rec.id);
            }
            Ok(out)
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn chern_output(
    n: u32,
    k: Option<u64>,
    anticanonical: bool,
    splitting: &Option<(Vec<i64>, Option<i64>)>,
    format: Format,
) -> Result<String, Failure> {
    if n == 0 {
        return Err(Failure::input("--n must be at least 1"));
    }
    let k = k.unwrap_or(u64::from(n) + 1);
    let c1 = jet_c1(n, k);
    let at_minus_k = c1.at_anticanonical();
    let mori = match splitting {
        Some((a, b)) => {
            let b = b.unwrap_or_else(|| a.iter().sum());
            let st = SplittingType::new(a.clone(), b)?;
            if st.dim() != n as usize {
                return Err(Failure::input(format!("splitting type has {} entries, expected n = {n}", st.dim())));
            }
            let verdict = mori_positivity_check(&st);
            Some((st, verdict))
        }
        None => None,
    };
    match format {
        Format::Plain => {
            let mut out = format!("c1 = {c1}");
            if anticanonical {
                if at_minus_k == 0.into() {
                    out.push_str("; trivial for L = −K");
                } else {
                    let _ = write!(out, "; for L = −K: c1 = {at_minus_k}·K");
                }
            }
            out.push('\n');
            if let Some((st, verdict)) = &mori {
                let _ = match verdict {
                    MoriVerdict::AllPositive => writeln!(
                        out,
                        "splitting {:?}, b = {}: (n+1)a_i - b >= 0 for all i, so every a_i > 0",
                        st.a_list(),
                        st.b()
                    ),
                    MoriVerdict::ConstraintViolated { index } => {
                        writeln!(out, "splitting {:?}, b = {}: (n+1)a_i - b < 0 at i = {index}", st.a_list(), st.b())
                    }
                };
            }
            Ok(out)
        }
        Format::Json => {
            let mut v = json!({
                "n": n,
                "k": k,
                "a": c1.a.to_string(),
                "b": c1.b.to_string(),
            });
            if anticanonical {
                v["anticanonical_K_coefficient"] = json!(at_minus_k.to_string());
                v["trivial"] = json!(at_minus_k == 0.into());
            }
            if let Some((st, verdict)) = &mori {
                v["splitting"] = json!({
                    "a": st.a_list(),
                    "b": st.b(),
                    "all_positive": *verdict == MoriVerdict::AllPositive,
                    "violated_index": match verdict {
                        MoriVerdict::ConstraintViolated { index } => Some(*index),
                        MoriVerdict::AllPositive => None,
                    },
                });
            }
            Ok(pretty(&v))
        }
        _ => Err(Failure::input("chern supports --format plain or json")),
    }
}

fn classify(rec: &VarietyRecord, format: Format) -> Result<String, Failure> {
    let mut facts: Vec<(String, String)> = Vec::new();
    let mut fact = |k: &str, v: String| facts.push((k.to_string(), v));
    fact("id", rec.id.clone());
    fact("class", rec.class.to_string());
    fact("n", rec.n.to_string());
    fact("degree", rec.degree.to_string());
    let eps = rec.eps.as_ref().map(|d| &d.value);
    fact("eps", eps.map_or_else(|| "unknown".into(), ToString::to_string));

    match rec.class {
        CanonicalClass::Fano => {
            let cap = fano_seshadri_cap(rec.n, rec.degree);
            fact("seshadri_cap", cap.effective_cap().to_string());
            fact(
                "root",
                if cap.root_is_integer {
                    format!("{}-th root of {} is an integer", rec.n, rec.degree)
                } else {
                    format!("{}-th root of {} is irrational", rec.n, rec.degree)
                },
            );
            if let Some(eps) = eps {
                let verdict = match pn_verdict(rec.n, rec.degree, eps) {
                    PnVerdict::IsProjectiveSpace => "projective space",
                    PnVerdict::BoundViolated => "bound violated",
                    PnVerdict::NoConclusion => "no conclusion",
                };
                fact("verdict", verdict.into());
            }
        }
        CanonicalClass::TrivialK => {
            if let Some(eps) = eps {
                let root = perfect_nth_root(rec.degree, rec.n);
                let alternative = cmp_to_nth_root(eps, rec.degree, rec.n) == RootOrdering::Equal && root.is_some();
                fact(
                    "case",
                    if alternative {
                        format!("eps is the integer root; k*eps - {} <= s <= k*eps", rec.n + 1)
                    } else {
                        format!("floor(k*eps) - {} <= s <= floor(k*eps)", rec.n)
                    },
                );
                if let (true, Some(e), Some(s)) = (alternative && rec.n == 2, root, rec.surface()) {
                    let k0 = two_value_threshold(s, e)?;
                    fact("two_value_from", format!("s in {{k*{e}-3, k*{e}-2}} forced for k >= {k0}"));
                }
            }
        }
        CanonicalClass::General => fact("case", "only s <= floor(k*eps) holds".into()),
    }
    if let Some(curve) = &rec.singular_curve {
        fact(
            "singular_curve",
            format!(
                "eps = {}/{} with mult {} >= 2: s < k*eps for every k",
                curve.data.l_dot_c, curve.data.m, curve.data.m
            ),
        );
    }

    match format {
        Format::Plain => Ok(facts.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                facts.into_iter().map(|(k, v)| (k, json!(v))).collect();
            Ok(pretty(&serde_json::Value::Object(map)))
        }
        _ => Err(Failure::input("classify supports --format plain or json")),
    }
}

fn catalog_list(format: Format) -> Result<String, Failure> {
    let records = catalog::load_catalog()?;
    let eps = |r: &VarietyRecord| r.eps.as_ref().map(|d| d.value.to_string());
    match format {
        Format::Plain => {
            let mut out = String::new();
            for r in &records {
                let _ = writeln!(
                    out,
                    "{:<22} n={} {:<8} degree={:<4} eps={:<5} {}",
                    r.id,
                    r.n,
                    r.class,
                    r.degree,
                    eps(r).unwrap_or_else(|| "-".into()),
                    r.name
                );
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("id,n,class,degree,eps\n");
            for r in &records {
                let _ = writeln!(out, "{},{},{},{},{}", r.id, r.n, r.class, r.degree, eps(r).unwrap_or_default());
            }
            Ok(out)
        }
        Format::Json => {
            let list: Vec<serde_json::Value> = records
                .iter()
                .map(|r| serde_json::from_str(&Descriptor::from(r).to_canonical_json()).expect("valid json"))
                .collect();
            Ok(pretty(&json!(list)))
        }
        Format::Latex => Err(Failure::input("catalog-list supports plain, csv or json")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jets(args: &str) -> Outcome {
        run(std::iter::once("jets").chain(args.split_whitespace()))
    }

    #[test]
    fn k_range_parsing() {
        assert_eq!("1..10".parse::<KRange>().unwrap(), KRange { from: 1, to: 10 });
        assert_eq!("7".parse::<KRange>().unwrap(), KRange { from: 7, to: 7 });
        for bad in ["0..3", "5..4", "1..1000001", "a..b", ""] {
            assert!(bad.parse::<KRange>().is_err(), "{bad}");
        }
    }

    #[test]
    fn lemma_command() {
        let out = jets("lemma --eps 7/3 --b 2");
        assert_eq!((out.code, out.stdout.as_str()), (0, "witness k=2\n"));
        assert!(jets("lemma --eps 2 --b 2").stdout.starts_with("no witness"));
        assert_eq!(jets("lemma --eps -1 --b 2").code, 1);
    }

    #[test]
    fn chern_command() {
        let out = jets("chern --n 4 --k 5 --anticanonical");
        assert_eq!(out.stdout, "c1 = 126·L + 126·K; trivial for L = −K\n");
        let out = jets("chern --n 2 --k 2 --anticanonical");
        assert_eq!(out.stdout, "c1 = 6·L + 4·K; for L = −K: c1 = -2·K\n");
        let out = jets("chern --n 2 --splitting 0,3");
        assert!(out.stdout.contains("< 0 at i = 1"), "{}", out.stdout);
        assert_eq!(jets("chern --n 2 --splitting 1,1,1").code, 1);
    }

    #[test]
    fn source_conflicts_exit_one() {
        let out = jets("bounds --catalog ppas --eps 4/3");
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("cannot be combined"), "{}", out.stderr);
        assert_eq!(jets("bounds --catalog ppas --file x.json").code, 1);
        assert_eq!(jets("bounds").code, 1);
        let out = jets("bounds --catalog nonesuch");
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("unknown catalog id"));
        assert_eq!(jets("bounds --catalog ppas --k 0..3").code, 1);
        assert_eq!(jets("frobnicate").code, 1);
    }

    #[test]
    fn inline_descriptor() {
        let out = jets("bounds --n 2 --class trivialK --degree 2 --eps 4/3 --k 3..3 --format csv");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, format!("{}\n3,2,4,,2,4,true\n", render::CSV_HEADER));
        let out = jets("prune --n 2 --class trivialK --degree 2 --eps 4/3 --chi 0 --L2 2 --LK 0 --exact-from 1 --k 3..3 --format csv");
        assert_eq!(out.stdout, format!("{}\n3,2,4,9,2,2,true\n", render::CSV_HEADER));
        // eps above the root of the degree
        let out = jets("validate --n 2 --class trivialK --degree 2 --eps 3/2");
        assert_eq!(out.code, 2);
        assert!(out.stdout.contains("degree-bound violation"));
        assert_eq!(jets("bounds --n 2 --class trivialK --degree 2 --eps 3/2").code, 2);
        assert_eq!(jets("bounds --n 2 --class trivialK --eps 1").code, 1);
    }

    #[test]
    fn classify_command() {
        let out = jets("classify --catalog quartic_generic");
        assert!(out.stdout.contains("forced for k >= 3"), "{}", out.stdout);
        let out = jets("classify --catalog projective_space_3");
        assert!(out.stdout.contains("verdict: projective space"));
        let out = jets("classify --catalog del_pezzo_8");
        assert!(out.stdout.contains("seshadri_cap: 1"));
        let out = jets("classify --catalog ppas --format json");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v["singular_curve"].as_str().unwrap().starts_with("eps = 4/3"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = jets("--help");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("table"));
    }
}
