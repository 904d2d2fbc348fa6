//! Command-line front end.
//!
//! [`render`] produces the exact bytes a command writes, [`run`] adds file
//! output and exit codes: 0 success, 1 failure, 2 usage error, 3 bound
//! violation.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::characters::{CharacterCache, CharacterTable, CHARACTER_TABLE_BOUND};
use crate::family::{FamilyKind, WeightFamily};
use crate::hurwitz::{fd_character, hde_all, HURWITZ_D_BOUND, HURWITZ_N_BOUND};
use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::{parse_rational, Param, Rational, Scalar};
use crate::symfun::SymmetricAlgebra;
use crate::table::{latex_scalar, ClassTable};
use crate::tau::{tau_tables, TAU_D_BOUND, TAU_N_BOUND};
use crate::verify::{self, Criterion, VerifyOptions, VerifyReport};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// Largest degree accepted by `macdonald`.
pub const MACDONALD_N_BOUND: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Argument parsing failed, or help or version was requested.
    #[error("{0}")]
    Clap(#[from] clap::Error),
    #[error("{what} exceeds enumeration bound ({what} = {value}, bound {bound})")]
    Bound {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("{0}")]
    Failed(String),
    /// Verification ran but some check failed; carries the report text.
    #[error("verification failed")]
    VerifyFailed(Vec<u8>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Clap(e) if !e.use_stderr() => 0,
            CliError::Clap(_) => EXIT_USAGE,
            CliError::Bound { .. } => EXIT_BOUND,
            CliError::Failed(_) | CliError::VerifyFailed(_) => EXIT_FAILURE,
        }
    }
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "qhurwitz", version, about = "Weighted Hurwitz numbers and tau-function tables")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Opts {
    /// Degree n of the symmetric group.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Largest |λ| for tau tables.
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Largest z-degree d.
    #[arg(long, global = true)]
    pub dmax: Option<usize>,
    /// macdonald, e, h, hl, jack or classical.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Comma-separated rational parameters c_i.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// `symbolic`, or bindings such as `q=1/3,t=2/5`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mode: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Shift N of the tau function.
    #[arg(long = "N", global = true, allow_hyphen_values = true)]
    pub shift: Option<i64>,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// File of `key=value` lines; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of S_n.
    Chars,
    /// Macdonald P_λ in the monomial basis, with b_λ.
    Macdonald,
    /// Weight series coefficients of a family.
    Weights,
    /// F^d tables for d = 0..dmax.
    Fd,
    /// H^(d,e) tables for d = 0..dmax, e = 0..d.
    Hde,
    /// Schur and power-sum tables of the tau function.
    Tau,
    /// Run an identity suite (a criterion name or number, or `all`).
    Verify {
        #[arg(default_value = "all")]
        criterion: String,
    },
    /// Manage the character table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum CacheAction {
    List,
    Clear,
    Path,
    /// Compute and store tables for 1..=n.
    Warm,
}

impl Opts {
    /// Fill unset options from `key=value` lines.
    pub fn merge_config(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim().to_string());
            let bad = |_| CliError::Usage(format!("config line {}: bad value for `{key}`", lineno + 1));
            match key {
                "n" => fill(&mut self.n, || value.parse().map_err(bad))?,
                "nmax" => fill(&mut self.nmax, || value.parse().map_err(bad))?,
                "dmax" => fill(&mut self.dmax, || value.parse().map_err(bad))?,
                "seed" => fill(&mut self.seed, || value.parse().map_err(bad))?,
                "trials" => fill(&mut self.trials, || value.parse().map_err(bad))?,
                "threads" => fill(&mut self.threads, || value.parse().map_err(bad))?,
                "N" => fill(&mut self.shift, || value.parse().map_err(bad))?,
                "family" => fill(&mut self.family, || Ok(value))?,
                "c" => fill(&mut self.c, || Ok(value))?,
                "mode" => fill(&mut self.mode, || Ok(value))?,
                "format" => fill(&mut self.format, || {
                    Format::from_str(&value, true).map_err(|_| CliError::Usage(format!("unknown format `{value}`")))
                })?,
                "cache-dir" => fill(&mut self.cache_dir, || Ok(PathBuf::from(value)))?,
                "output" => fill(&mut self.output, || Ok(PathBuf::from(value)))?,
                _ => return Err(CliError::Usage(format!("config line {}: unknown key `{key}`", lineno + 1))),
            }
        }
        Ok(())
    }

    fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }

    fn c_list(&self) -> Result<Vec<Rational>, CliError> {
        let Some(text) = &self.c else {
            return Ok(vec![Rational::from_integer(1.into())]);
        };
        text.split(',')
            .map(|s| parse_rational(s.trim()).map_err(|e| CliError::Usage(format!("--c: {e}"))))
            .collect()
    }

    /// The family from `--family`, `--c` and `--mode`.
    pub fn family(&self) -> Result<WeightFamily, CliError> {
        let kind: FamilyKind = self
            .family
            .as_deref()
            .unwrap_or("macdonald")
            .parse()
            .map_err(|e| CliError::Usage(format!("--family: {e}")))?;
        let mut fam = WeightFamily::new(kind, self.c_list()?);
        for (p, v) in parse_mode(self.mode.as_deref())? {
            fam = fam.bind(p, v).map_err(|e| CliError::Usage(format!("--mode: {e}")))?;
        }
        Ok(fam)
    }
}

fn fill<T>(slot: &mut Option<T>, value: impl FnOnce() -> Result<T, CliError>) -> Result<(), CliError> {
    if slot.is_none() {
        *slot = Some(value()?);
    }
    Ok(())
}

/// `symbolic` or a comma-separated list of `param=rational`.
pub fn parse_mode(mode: Option<&str>) -> Result<Vec<(Param, Rational)>, CliError> {
    let mode = mode.unwrap_or("symbolic").trim();
    if mode == "symbolic" || mode.is_empty() {
        return Ok(Vec::new());
    }
    mode.split(',')
        .map(|item| {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--mode: expected param=value, got `{item}`")))?;
            let p = Param::from_symbol(k.trim())
                .ok_or_else(|| CliError::Usage(format!("--mode: unknown parameter `{}`", k.trim())))?;
            let v = parse_rational(v.trim()).map_err(|e| CliError::Usage(format!("--mode: {e}")))?;
            Ok((p, v))
        })
        .collect()
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<(), CliError> {
    if value > bound {
        Err(CliError::Bound { what, value, bound })
    } else {
        Ok(())
    }
}

fn require_n(opts: &Opts) -> Result<usize, CliError> {
    opts.n.ok_or_else(|| CliError::Usage("--n is required".to_string()))
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s.into_bytes()
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

/// Several class tables as one CSV with `d` and `e` columns.
pub fn tables_to_csv(tables: &[ClassTable]) -> Vec<u8> {
    csv_bytes(
        &["d", "e", "mu", "nu", "value"],
        tables.iter().flat_map(|t| {
            let e = t.e().map(|e| e.to_string()).unwrap_or_default();
            t.cells()
                .map(move |(mu, nu, v)| vec![t.d().to_string(), e.clone(), mu.to_string(), nu.to_string(), v.to_string()])
                .collect::<Vec<_>>()
        }),
    )
}

/// Several class tables as consecutive LaTeX tabulars, each under a comment.
pub fn tables_to_latex(tables: &[ClassTable]) -> Vec<u8> {
    let mut out = String::new();
    for t in tables {
        match t.e() {
            Some(e) => out.push_str(&format!("% n = {}, d = {}, e = {}\n", t.n(), t.d(), e)),
            None => out.push_str(&format!("% n = {}, d = {}\n", t.n(), t.d())),
        }
        out.push_str(&t.to_latex());
    }
    out.into_bytes()
}

fn emit_tables(tables: &[ClassTable], format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(tables),
        Format::Csv => tables_to_csv(tables),
        Format::Latex => tables_to_latex(tables),
    }
}

fn chars(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let n = require_n(opts)?;
    check_bound("n", n, CHARACTER_TABLE_BOUND)?;
    let cache = CharacterCache::resolve(opts.cache_dir.as_deref());
    let (table, _) = cache.get(n).map_err(failed)?;
    Ok(match opts.format() {
        Format::Json => to_json(&table),
        Format::Csv => csv_bytes(
            &["lambda", "mu", "chi"],
            table.irreps.iter().zip(&table.chi).flat_map(|(lambda, row)| {
                table
                    .classes
                    .iter()
                    .zip(row)
                    .map(|(mu, x)| vec![lambda.to_string(), mu.to_string(), x.to_string()])
                    .collect::<Vec<_>>()
            }),
        ),
        Format::Latex => chars_latex(&table).into_bytes(),
    })
}

fn chars_latex(table: &CharacterTable) -> String {
    let mut out = format!("\\begin{{tabular}}{{c|{}}}\n$\\lambda \\backslash \\mu$", "r".repeat(table.classes.len()));
    for mu in &table.classes {
        out.push_str(&format!(" & ${mu}$"));
    }
    out.push_str(" \\\\\n\\hline\n");
    for (lambda, row) in table.irreps.iter().zip(&table.chi) {
        out.push_str(&format!("${lambda}$"));
        for x in row {
            out.push_str(&format!(" & ${x}$"));
        }
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[derive(Serialize)]
struct MacdonaldEntry {
    lambda: Partition,
    b_lambda: Scalar,
    monomial: Vec<(Partition, Scalar)>,
}

fn macdonald(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let n = require_n(opts)?;
    check_bound("n", n, MACDONALD_N_BOUND)?;
    let mut fam = WeightFamily::new(FamilyKind::Macdonald, vec![Rational::from_integer(1.into())]);
    for (p, v) in parse_mode(opts.mode.as_deref())? {
        fam = fam.bind(p, v).map_err(|e| CliError::Usage(format!("--mode: {e}")))?;
    }
    let alg = SymmetricAlgebra::new(fam.q().clone(), fam.t().clone(), Scalar::one()).map_err(failed)?;
    let mut entries = Vec::new();
    for lambda in enumerate_partitions(n).map_err(failed)? {
        let p = alg.macdonald_p(&lambda).map_err(failed)?;
        let b = alg.b_lambda(&lambda).map_err(failed)?;
        let monomial = p
            .coeffs()
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (mu.clone(), c.clone()))
            .collect();
        entries.push(MacdonaldEntry { lambda, b_lambda: b, monomial });
    }
    Ok(match opts.format() {
        Format::Json => to_json(&entries),
        Format::Csv => csv_bytes(
            &["lambda", "kind", "mu", "value"],
            entries.iter().flat_map(|e| {
                std::iter::once(vec![e.lambda.to_string(), "b".into(), String::new(), e.b_lambda.to_string()]).chain(
                    e.monomial
                        .iter()
                        .map(|(mu, c)| vec![e.lambda.to_string(), "m".into(), mu.to_string(), c.to_string()]),
                )
            }),
        ),
        Format::Latex => {
            let mut out = String::new();
            for e in &entries {
                let terms: Vec<String> = e
                    .monomial
                    .iter()
                    .map(|(mu, c)| format!("\\left({}\\right) m_{{{mu}}}", latex_scalar(c)))
                    .collect();
                out.push_str(&format!("P_{{{}}} &= {} \\\\\n", e.lambda, terms.join(" + ")));
                out.push_str(&format!("b_{{{}}} &= {} \\\\\n", e.lambda, latex_scalar(&e.b_lambda)));
            }
            out.into_bytes()
        }
    })
}

#[derive(Serialize)]
struct WeightsOutput<'a> {
    family: &'a WeightFamily,
    order: usize,
    coeffs: &'a [Scalar],
}

fn weights(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let fam = opts.family()?;
    let order = opts.dmax.unwrap_or(4);
    check_bound("d", order, TAU_D_BOUND)?;
    let series = fam.series(order).map_err(failed)?;
    Ok(match opts.format() {
        Format::Json => to_json(&WeightsOutput {
            family: &fam,
            order,
            coeffs: series.coeffs(),
        }),
        Format::Csv => csv_bytes(
            &["k", "coefficient"],
            series.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]),
        ),
        Format::Latex => {
            let mut out = String::new();
            for (k, c) in series.coeffs().iter().enumerate() {
                out.push_str(&format!("[z^{{{k}}}] &= {} \\\\\n", latex_scalar(c)));
            }
            out.into_bytes()
        }
    })
}

fn fd(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let n = require_n(opts)?;
    let dmax = opts.dmax.unwrap_or(2);
    check_bound("n", n, TAU_N_BOUND)?;
    check_bound("d", dmax, TAU_D_BOUND)?;
    let fam = opts.family()?;
    let tables = (0..=dmax)
        .map(|d| fd_character(n, d, &fam).map_err(failed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(emit_tables(&tables, opts.format()))
}

fn hde(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let n = require_n(opts)?;
    let dmax = opts.dmax.unwrap_or(2);
    check_bound("n", n, HURWITZ_N_BOUND)?;
    check_bound("d", dmax, HURWITZ_D_BOUND)?;
    let fam = opts.family()?;
    let mut tables = Vec::new();
    for d in 0..=dmax {
        tables.extend(hde_all(n, d, &fam).map_err(failed)?);
    }
    Ok(emit_tables(&tables, opts.format()))
}

fn tau(opts: &Opts) -> Result<Vec<u8>, CliError> {
    let nmax = opts.nmax.or(opts.n).unwrap_or(3);
    let dmax = opts.dmax.unwrap_or(2);
    check_bound("n", nmax, TAU_N_BOUND)?;
    check_bound("d", dmax, TAU_D_BOUND)?;
    let fam = opts.family()?;
    let table = tau_tables(nmax, dmax, opts.shift.unwrap_or(0), &fam).map_err(failed)?;
    Ok(match opts.format() {
        Format::Json => to_json(&table),
        Format::Csv => table.to_csv().into_bytes(),
        Format::Latex => table.to_latex().into_bytes(),
    })
}

fn verify_cmd(opts: &Opts, which: &str) -> Result<Vec<u8>, CliError> {
    let criteria: Vec<Criterion> = if which == "all" {
        Criterion::ALL.to_vec()
    } else {
        vec![which.parse().map_err(|e: verify::VerifyError| CliError::Usage(e.to_string()))?]
    };
    let mut vo = VerifyOptions::default();
    if let Some(n) = opts.n {
        check_bound("n", n, HURWITZ_N_BOUND)?;
        vo.n_max = n;
    }
    if let Some(d) = opts.dmax {
        check_bound("d", d, HURWITZ_D_BOUND)?;
        vo.d_max = d;
    }
    if opts.c.is_some() {
        vo.c_lists = vec![opts.c_list()?];
    }
    vo.seed = opts.seed.unwrap_or(vo.seed);
    vo.trials = opts.trials.unwrap_or(vo.trials);
    let reports = criteria
        .iter()
        .map(|&c| verify::run(c, &vo).map_err(failed))
        .collect::<Result<Vec<VerifyReport>, _>>()?;
    let bytes = match opts.format {
        Some(Format::Json) => to_json(&reports),
        _ => reports.iter().map(VerifyReport::render).collect::<String>().into_bytes(),
    };
    if reports.iter().all(VerifyReport::passed) {
        Ok(bytes)
    } else {
        Err(CliError::VerifyFailed(bytes))
    }
}

fn cache_cmd(opts: &Opts, action: CacheAction) -> Result<Vec<u8>, CliError> {
    let cache = CharacterCache::resolve(opts.cache_dir.as_deref());
    let text = match action {
        CacheAction::Path => format!("{}\n", cache.dir().display()),
        CacheAction::List => cache.list().iter().map(|n| format!("{n}\n")).collect(),
        CacheAction::Clear => format!("removed {} tables\n", cache.clear().map_err(failed)?),
        CacheAction::Warm => {
            let n = opts.n.unwrap_or(8);
            check_bound("n", n, CHARACTER_TABLE_BOUND)?;
            for k in 1..=n {
                cache.get(k).map_err(failed)?;
            }
            format!("cached tables for n = 1..{n}\n")
        }
    };
    Ok(text.into_bytes())
}

fn parse(args: &[String]) -> Result<Cli, CliError> {
    let argv = std::iter::once("qhurwitz".to_string()).chain(args.iter().cloned());
    let mut cli = Cli::try_parse_from(argv)?;
    if let Some(path) = cli.opts.config.clone() {
        let text = fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        cli.opts.merge_config(&text)?;
    }
    Ok(cli)
}

fn dispatch(cli: &Cli) -> Result<Vec<u8>, CliError> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Chars => chars(opts),
        Command::Macdonald => macdonald(opts),
        Command::Weights => weights(opts),
        Command::Fd => fd(opts),
        Command::Hde => hde(opts),
        Command::Tau => tau(opts),
        Command::Verify { criterion } => verify_cmd(opts, criterion),
        Command::Cache { action } => cache_cmd(opts, *action),
    }
}

/// Output bytes of a command line (without the program name).
pub fn render(args: &[String]) -> Result<Vec<u8>, CliError> {
    let cli = parse(args)?;
    match cli.opts.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(failed)?
            .install(|| dispatch(&cli)),
        None => dispatch(&cli),
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    use std::io::Write;
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| failed(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout().write_all(bytes).map_err(failed),
    }
}

/// Run a command line and return the process exit code.
pub fn run(args: &[String]) -> i32 {
    let output = parse(args).ok().and_then(|c| c.opts.output);
    match render(args) {
        Ok(bytes) => match write_output(output.as_deref(), &bytes) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            CliError::Clap(e).exit_code()
        }
        Err(CliError::VerifyFailed(bytes)) => {
            let _ = write_output(output.as_deref(), &bytes);
            EXIT_FAILURE
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn bound_violation_exits_three() {
        let e = render(&args("fd --n 9")).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_BOUND);
        assert!(e.to_string().starts_with("n exceeds enumeration bound"));
        assert_eq!(render(&args("chars --n 11")).unwrap_err().exit_code(), EXIT_BOUND);
        assert_eq!(render(&args("hde --n 6")).unwrap_err().exit_code(), EXIT_BOUND);
    }

    #[test]
    fn usage_errors_exit_two() {
        for bad in ["fd", "frobnicate", "fd --n 3 --family nope", "fd --n 3 --mode q=x", "weights --family e --mode t=1/2"] {
            assert_eq!(render(&args(bad)).unwrap_err().exit_code(), EXIT_USAGE, "{bad}");
        }
    }

    #[test]
    fn config_fills_unset_flags_only() {
        let mut o = Opts {
            n: Some(3),
            ..Opts::default()
        };
        o.merge_config("# comment\nn = 5\ndmax=2\nfamily=hl\nformat=csv\n").unwrap();
        assert_eq!(o.n, Some(3));
        assert_eq!(o.dmax, Some(2));
        assert_eq!(o.family.as_deref(), Some("hl"));
        assert_eq!(o.format, Some(Format::Csv));
        assert!(o.merge_config("bogus=1").is_err());
    }

    #[test]
    fn mode_parsing() {
        let m = parse_mode(Some("q=1/3, t=-2/5")).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[1].0, Param::T);
        assert!(parse_mode(Some("symbolic")).unwrap().is_empty());
        assert!(parse_mode(Some("z=1")).is_err());
    }

    #[test]
    fn fd_csv_has_d_column() {
        let out = String::from_utf8(render(&args("fd --n 2 --dmax 1 --family classical --format csv")).unwrap()).unwrap();
        assert!(out.starts_with("d,e,mu,nu,value\n0,,[2],[2],"));
        assert_eq!(out.lines().count(), 1 + 2 * 4);
    }
}
