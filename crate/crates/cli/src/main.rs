//! `ddc`: cosets, splittings, code construction, analysis, worked examples and
//! table reproduction from the command line.
//!
//! Exit status: 0 on success, 1 on usage or domain errors, 2 when `diff`
//! finds a mismatching cell.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ddc_core::codeprops::{analyze, classify, AnalysisOptions, DistanceChoice, DEFAULT_EXHAUSTIVE_BUDGET};
use ddc_core::ddc::{build, CodeKind, DdcCode};
use ddc_core::search::{
    compare_with_expected, lookup_example, registry, scan, to_csv, verify_witnesses, GoldenTable, SearchConfig,
};
use ddc_core::splitting::{cyclotomic_cosets, enumerate_coset_splittings, splitting_from_s1};
use ddc_core::Field;

#[derive(Parser)]
#[command(name = "ddc", version, about = "Duadic double circulant codes over GF(2), GF(3), GF(4), GF(5), GF(7)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclotomic cosets of `base` modulo `n`.
    Cosets {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        base: u32,
        #[arg(long)]
        json: bool,
    },
    /// Coset splittings of `n` for a cyclotomic base, one per swap pair.
    Splittings {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        base: u32,
        #[arg(long)]
        json: bool,
    },
    /// Build a pure or bordered code and print it as JSON (or matrix text).
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Print only the generator matrix text.
        #[arg(long)]
        text: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance and duality of a code given by flags or by a JSON file.
    Analyze {
        /// Code JSON as written by `build` (`-` for stdin).
        #[arg(long, conflicts_with_all = ["q", "n", "s1"])]
        input: Option<PathBuf>,
        #[command(flatten)]
        code: OptionalCodeArgs,
        #[command(flatten)]
        analysis: AnalysisArgs,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce a built-in worked example.
    Example {
        #[arg(long, required_unless_present = "seed_registry")]
        id: Option<String>,
        /// Run distance computations that take longer than desk scale.
        #[arg(long)]
        deep: bool,
        /// List the built-in example registry.
        #[arg(long)]
        seed_registry: bool,
        #[command(flatten)]
        analysis: AnalysisArgs,
        #[arg(long)]
        json: bool,
    },
    /// Scan every coset splitting and parameter tuple for a range of `n`.
    Table {
        #[arg(long)]
        q: u8,
        #[arg(long, default_value_t = 4)]
        base: u32,
        #[arg(long, default_value_t = 3)]
        min_n: u32,
        #[arg(long)]
        max_n: u32,
        /// Restrict to one code kind.
        #[arg(long)]
        kind: Option<KindArg>,
        /// Allow lengths beyond desk scale.
        #[arg(long)]
        deep: bool,
        /// Scan every (r, s, t) instead of skipping the s > t half.
        #[arg(long)]
        no_dedup: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// Emit rows with witness codes as JSON instead of CSV.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a computed table with a golden table (both CSV).
    Diff {
        computed: PathBuf,
        expected: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Pure,
    Bordered,
}

impl From<KindArg> for CodeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pure => CodeKind::Pure,
            KindArg::Bordered => CodeKind::Bordered,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exhaustive,
    Accelerated,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    q: u8,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "pure")]
    kind: KindArg,
    /// Comma-separated first side of the splitting; the other side is its complement.
    #[arg(long, value_delimiter = ',')]
    s1: Vec<u32>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct OptionalCodeArgs {
    #[arg(long)]
    q: Option<u8>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "pure")]
    kind: KindArg,
    #[arg(long, value_delimiter = ',')]
    s1: Vec<u32>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value = "0")]
    r: String,
    #[arg(long, default_value = "0")]
    s: String,
    #[arg(long, default_value = "0")]
    t: String,
    #[arg(long, default_value = "0")]
    alpha: String,
    #[arg(long, default_value = "0")]
    beta: String,
    #[arg(long, default_value = "0")]
    gamma: String,
}

#[derive(Args)]
struct AnalysisArgs {
    /// Largest number of codewords the exhaustive engine may enumerate.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
    budget: u128,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long)]
    workers: Option<usize>,
}

impl AnalysisArgs {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            exhaustive_budget: self.budget,
            wd_budget: self.budget,
            distance: match self.method {
                MethodArg::Auto => DistanceChoice::Auto,
                MethodArg::Exhaustive => DistanceChoice::Exhaustive,
                MethodArg::Accelerated => DistanceChoice::Accelerated,
            },
            count_minimum_words: true,
        }
    }
}

fn build_code(q: u8, n: u32, kind: CodeKind, s1: &[u32], p: &ParamArgs) -> Result<DdcCode> {
    let field = Field::new(q)?;
    if s1.is_empty() {
        bail!("--s1 is required");
    }
    let sp = splitting_from_s1(n, s1)?;
    let sym = |s: &str| field.parse_symbol(s);
    let rst = [sym(&p.r)?, sym(&p.s)?, sym(&p.t)?];
    let border = match kind {
        CodeKind::Pure => None,
        CodeKind::Bordered => Some([sym(&p.alpha)?, sym(&p.beta)?, sym(&p.gamma)?]),
    };
    Ok(build(kind, field, &sp, rst, border)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn print_report(report: &ddc_core::codeprops::CodeReport, label: &str, json: bool) -> Result<()> {
    if json {
        return emit(None, &report.to_json());
    }
    let d = &report.duality;
    let mut line = format!("{label}: [{}, {}, {}]", report.length, report.dimension, report.distance);
    if let Some(a) = report.a_d {
        line.push_str(&format!(" A_{}={a}", report.distance));
    }
    line.push_str(&format!(" self-dual={}", d.self_dual_euclidean));
    if let Some(h) = d.self_dual_hermitian {
        line.push_str(&format!(" hermitian-self-dual={h}"));
    }
    if let Some(t) = d.binary_type {
        line.push_str(&format!(" type={t:?}"));
    }
    match d.formally_self_dual.holds() {
        Some(v) => line.push_str(&format!(" formally-self-dual={v}")),
        None => line.push_str(" formally-self-dual=unknown"),
    }
    line.push_str(&format!(" ({})", report.method));
    emit(None, &line)
}

/// Largest `n` scanned without `--deep`.
fn desk_limit(q: u8) -> u32 {
    match q {
        2 => 19,
        3 => 13,
        4 | 5 => 7,
        _ => 5,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cosets { n, base, json } => {
            let part = cyclotomic_cosets(n, base)?;
            let text = if json {
                serde_json::to_string_pretty(&json!({ "n": part.n, "base": part.base, "cosets": part.cosets }))?
            } else {
                part.cosets
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            emit(None, &text)?;
        }
        Command::Splittings { n, base, json } => {
            let all = enumerate_coset_splittings(n, base)?;
            let text = if json {
                serde_json::to_string_pretty(&all)?
            } else if all.is_empty() {
                format!("no {base}-cyclotomic coset splitting of {n}")
            } else {
                all.iter()
                    .map(|s| format!("S1={:?} S2={:?} witnesses={:?}", s.s1, s.s2, s.witnesses))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            emit(None, &text)?;
        }
        Command::Build { code, text, out } => {
            let c = build_code(code.q, code.n, code.kind.into(), &code.s1, &code.params)?;
            let body = if text { c.generator.to_text() } else { c.to_json() };
            emit(out.as_ref(), &body)?;
        }
        Command::Analyze { input, code, analysis, json } => {
            let c = match input {
                Some(path) => DdcCode::from_json(&read_input(&path)?)?,
                None => {
                    let (Some(q), Some(n)) = (code.q, code.n) else {
                        bail!("give either --input or --q, --n and --s1");
                    };
                    build_code(q, n, code.kind.into(), &code.s1, &code.params)?
                }
            };
            let opts = analysis.options();
            let report = ddc_core::par::with_workers(analysis.workers, || analyze(&c, &opts))?;
            print_report(&report, &c.label(), json)?;
        }
        Command::Example { id, deep, seed_registry, analysis, json } => {
            if seed_registry {
                emit(None, &serde_json::to_string_pretty(registry())?)?;
                return Ok(ExitCode::SUCCESS);
            }
            let spec = lookup_example(id.as_deref().unwrap_or_default())?;
            let code = spec.build()?;
            if spec.deep && !deep {
                let duality = classify(&code, analysis.budget)?;
                let value = json!({
                    "id": spec.id,
                    "length": code.length(),
                    "dim": code.dimension(),
                    "d": null,
                    "self_dual": duality.self_dual_euclidean,
                    "hermitian_self_dual": duality.self_dual_hermitian,
                    "type": duality.binary_type,
                    "formally_self_dual": duality.formally_self_dual.holds(),
                    "formally_self_dual_evidence": duality.formally_self_dual,
                    "note": "distance skipped; pass --deep to compute it",
                    "provenance": code.to_json_value(),
                });
                if json {
                    emit(None, &serde_json::to_string_pretty(&value)?)?;
                } else {
                    emit(
                        None,
                        &format!(
                            "{}: [{}, {}, ?] self-dual={}{} formally-self-dual={} (distance needs --deep)",
                            spec.id,
                            code.length(),
                            code.dimension(),
                            duality.self_dual_euclidean,
                            duality.binary_type.map(|t| format!(" type={t:?}")).unwrap_or_default(),
                            duality.formally_self_dual.holds().map_or("unknown".to_string(), |v| v.to_string())
                        ),
                    )?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let opts = analysis.options();
            let report = ddc_core::par::with_workers(analysis.workers, || analyze(&code, &opts))?;
            print_report(&report, spec.id, json)?;
        }
        Command::Table { q, base, min_n, max_n, kind, deep, no_dedup, workers, json, csv: _, out } => {
            let field = Field::new(q)?;
            if max_n > desk_limit(q) && !deep {
                bail!("n up to {max_n} over GF({q}) is beyond desk scale (limit {}); pass --deep", desk_limit(q));
            }
            let mut config = SearchConfig::new(field, base, SearchConfig::odd_range(min_n, max_n));
            if let Some(k) = kind {
                config.kinds = vec![k.into()];
            }
            config.dedup = !no_dedup;
            config.workers = workers;
            let mut rows = Vec::new();
            let mut skipped = Vec::new();
            let mut failures = Vec::new();
            for &n in &config.n_values {
                let started = std::time::Instant::now();
                let one = SearchConfig { n_values: vec![n], ..config.clone() };
                let outcome = scan(&one)?;
                eprintln!("n={n}: {} rows in {:.1?}", outcome.rows.len(), started.elapsed());
                rows.extend(outcome.rows);
                skipped.extend(outcome.skipped);
                failures.extend(outcome.failures);
            }
            for n in &skipped {
                eprintln!("skipped n={n}: gcd({base}, {n}) != 1");
            }
            for f in &failures {
                eprintln!("failed: {f}");
            }
            let problems = verify_witnesses(field, &rows)?;
            if !problems.is_empty() {
                bail!("witness check failed:\n{}", problems.join("\n"));
            }
            let body = if json {
                serde_json::to_string_pretty(&json!({ "q": q, "base": base, "rows": rows, "skipped": skipped }))?
            } else {
                to_csv(field, &rows)
            };
            emit(out.as_ref(), &body)?;
        }
        Command::Diff { computed, expected, json } => {
            let got = GoldenTable::parse(&read_input(&computed)?)?;
            let want = GoldenTable::parse(&read_input(&expected)?)?;
            let report = compare_with_expected(&got, &want);
            if json {
                emit(None, &serde_json::to_string_pretty(&report)?)?;
            } else {
                emit(None, &report.to_string())?;
            }
            if report.has_mismatch() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
