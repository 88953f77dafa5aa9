//! Command-line front end. [`run`] writes to any `Write` so tests can drive
//! every command in-process; the `indpoly` binary only maps the outcome to an
//! exit code.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    asymptotic_probes, check_reflected_identities, log_concavity_report, theorem_sweep,
    AnalysisError,
};
use crate::engines::{closed_form_tg, Engine, EngineError, BRUTE_FORCE_MAX_VERTICES};
use crate::family::{build_family, FamilyError, FamilySpec};
use crate::poly::{DensePolynomial, PolyJson};
use crate::tree::{RootedTree, TreeError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{path}: line {line}: {source}")]
    TreeFile {
        path: PathBuf,
        line: usize,
        source: TreeError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials of trees and their log-concavity breaks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Family member: P,m | S2,t | T,m,t | TG,m,t
    #[arg(long, conflicts_with = "tree")]
    pub family: Option<FamilySpec>,
    /// File with one tree per line in `<n>:_,p1,...` form
    #[arg(long)]
    pub tree: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the tree of a family member
    Build {
        /// Family as separate words, e.g. `TG 2 5`
        words: Vec<String>,
        #[arg(long)]
        family: Option<FamilySpec>,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the independence polynomial
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "dp")]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Log-concavity report of the independence polynomial
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "dp")]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Check the reflected identities for TG_{m,t} (one instance or a grid)
    Identities {
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Check every 1 <= m <= M together with --max-t
        #[arg(long, requires = "max_t")]
        max_m: Option<u32>,
        #[arg(long)]
        max_t: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Growth of reflected coefficients c_k(m,t) over a range of t
    Probe {
        #[arg(long)]
        m: u32,
        /// Defaults to every k <= 2m
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 10)]
        t_min: u32,
        #[arg(long, default_value_t = 40)]
        t_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Violation sets of TG_{m,t} for t = 0..=t_max
    Sweep {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 12)]
        t_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Recompute the published violation sets
    Reproduce {
        #[command(flatten)]
        output: Output,
    },
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Build { output, .. }
            | Command::Compute { output, .. }
            | Command::Analyze { output, .. }
            | Command::Identities { output, .. }
            | Command::Probe { output, .. }
            | Command::Sweep { output, .. }
            | Command::Reproduce { output } => output,
        }
    }
}

/// Runs a parsed command, writing to `--out` when given and to `stdout`
/// otherwise. `Ok(false)` means the command ran but found a mismatch.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<bool, CliError> {
    let (text, ok) = render(&cli.command)?;
    match &cli.command.output().out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(ok)
}

fn render(command: &Command) -> Result<(String, bool), CliError> {
    let fmt = |default: Format| command.output().format.unwrap_or(default);
    match command {
        Command::Build { words, family, .. } => {
            let spec = match (family, words.is_empty()) {
                (Some(spec), true) => *spec,
                (None, false) => words.join(",").parse()?,
                _ => return Err(CliError::Usage("give the family either positionally or with --family".into())),
            };
            Ok((cmd_build(&spec, fmt(Format::Text))?, true))
        }
        Command::Compute { input, engine, .. } => {
            let polys = compute_all(input, *engine)?;
            Ok((cmd_compute(&polys, fmt(Format::Json))?, true))
        }
        Command::Analyze { input, engine, .. } => {
            let polys = compute_all(input, *engine)?;
            Ok((cmd_analyze(&polys, fmt(Format::Json))?, true))
        }
        Command::Identities { m, t, max_m, max_t, .. } => {
            let grid: Vec<(u32, u32)> = match (m, t, max_m, max_t) {
                (Some(m), Some(t), None, None) => vec![(*m, *t)],
                (None, None, Some(mm), Some(tm)) => {
                    (1..=*mm).flat_map(|m| (0..=*tm).map(move |t| (m, t))).collect()
                }
                _ => return Err(CliError::Usage("use either --m and --t, or --max-m and --max-t".into())),
            };
            cmd_identities(&grid, fmt(Format::Text))
        }
        Command::Probe { m, k, t_min, t_max, .. } => {
            Ok((cmd_probe(*m, *k, *t_min, *t_max, fmt(Format::Csv))?, true))
        }
        Command::Sweep { m, t_max, .. } => Ok((cmd_sweep(*m, *t_max, fmt(Format::Text))?, true)),
        Command::Reproduce { .. } => {
            let report = reproduce(&|m, t| closed_form_tg(u64::from(m), u64::from(t)));
            let ok = report.all_match();
            Ok((report.render(fmt(Format::Text)), ok))
        }
    }
}

/// Where a polynomial came from, as it appears in JSON output.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Source {
    Family(FamilySpec),
    Tree { tree: String },
}

pub fn cmd_build(spec: &FamilySpec, format: Format) -> Result<String, CliError> {
    let tree = build_family(spec)?;
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Built<'a> {
                family: &'a FamilySpec,
                tree: String,
            }
            let built = Built { family: spec, tree: tree.serialize() };
            format!("{}\n", serde_json::to_string(&built).expect("serializable"))
        }
        Format::Text | Format::Csv => format!("{tree}\n"),
    })
}

fn compute_all(input: &Input, engine: Engine) -> Result<Vec<(Source, DensePolynomial)>, CliError> {
    match (&input.family, &input.tree) {
        (Some(spec), None) => {
            spec.validate()?;
            let n = spec.vertex_count();
            if engine == Engine::BruteForce && n > BRUTE_FORCE_MAX_VERTICES as u64 {
                return Err(EngineError::TooLarge { n: n as usize, max: BRUTE_FORCE_MAX_VERTICES }.into());
            }
            let tree = if engine == Engine::ClosedForm {
                RootedTree::single_vertex()
            } else {
                build_family(spec)?
            };
            Ok(vec![(Source::Family(*spec), engine.run_family(spec, &tree)?)])
        }
        (None, Some(path)) => {
            let trees = read_tree_file(path)?;
            if let Some(big) = trees.iter().find(|t| t.len() > BRUTE_FORCE_MAX_VERTICES) {
                if engine == Engine::BruteForce {
                    return Err(EngineError::TooLarge { n: big.len(), max: BRUTE_FORCE_MAX_VERTICES }.into());
                }
            }
            trees
                .into_iter()
                .map(|tree| {
                    let poly = engine.run_tree(&tree)?;
                    Ok((Source::Tree { tree: tree.serialize() }, poly))
                })
                .collect()
        }
        _ => Err(CliError::Usage("give exactly one of --family or --tree".into())),
    }
}

pub fn read_tree_file(path: &PathBuf) -> Result<Vec<RootedTree>, CliError> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| {
            RootedTree::parse(line).map_err(|source| CliError::TreeFile {
                path: path.clone(),
                line: i + 1,
                source,
            })
        })
        .collect()
}

pub fn cmd_compute(polys: &[(Source, DensePolynomial)], format: Format) -> Result<String, CliError> {
    let mut out = String::new();
    match format {
        Format::Json => {
            for (_, p) in polys {
                out.push_str(&p.to_json());
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("k,coefficient\n");
            for (_, p) in polys {
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{k},{c}").unwrap();
                }
            }
        }
        Format::Text => {
            for (_, p) in polys {
                writeln!(out, "{p}").unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct ReportJson<'a> {
    family: &'a Source,
    degree: usize,
    coeffs: Vec<String>,
    violations: Vec<usize>,
    diffs_sign: String,
    unimodal: bool,
}

pub fn cmd_analyze(polys: &[(Source, DensePolynomial)], format: Format) -> Result<String, CliError> {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("k,coefficient,diff_sign,violation\n");
    }
    for (source, p) in polys {
        let report = log_concavity_report(p)?;
        match format {
            Format::Json => {
                let PolyJson { coeffs } = p.to_json_value();
                let json = ReportJson {
                    family: source,
                    degree: report.degree,
                    coeffs,
                    violations: report.violations.clone(),
                    diffs_sign: report.diffs_sign(),
                    unimodal: report.unimodal,
                };
                out.push_str(&serde_json::to_string(&json).expect("serializable"));
                out.push('\n');
            }
            Format::Csv => {
                let signs: Vec<char> = report.diffs_sign().chars().collect();
                for (k, c) in p.coeffs().iter().enumerate() {
                    let sign = k.checked_sub(1).and_then(|i| signs.get(i)).map_or(String::new(), char::to_string);
                    let violation = report.violations.contains(&k);
                    writeln!(out, "{k},{c},{sign},{violation}").unwrap();
                }
            }
            Format::Text => {
                writeln!(out, "degree: {}", report.degree).unwrap();
                writeln!(out, "violations: {}", set_text(&report.violations)).unwrap();
                writeln!(out, "unimodal: {} (mode at {})", report.unimodal, report.mode_index).unwrap();
                writeln!(out, "diff signs: {}", report.diffs_sign()).unwrap();
            }
        }
    }
    Ok(out)
}

fn cmd_identities(grid: &[(u32, u32)], format: Format) -> Result<(String, bool), CliError> {
    #[derive(Serialize)]
    struct Row {
        m: u32,
        t: u32,
        holds: bool,
        failure: Option<String>,
    }
    let mut rows = Vec::with_capacity(grid.len());
    for &(m, t) in grid {
        let row = match check_reflected_identities(m, t) {
            Ok(()) => Row { m, t, holds: true, failure: None },
            Err(AnalysisError::Identity(f)) => Row { m, t, holds: false, failure: Some(f.to_string()) },
            Err(e) => return Err(e.into()),
        };
        rows.push(row);
    }
    let ok = rows.iter().all(|r| r.holds);
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string(&rows).expect("serializable"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("m,t,holds\n");
            for r in &rows {
                writeln!(out, "{},{},{}", r.m, r.t, r.holds).unwrap();
            }
        }
        Format::Text => {
            for r in &rows {
                match &r.failure {
                    None => writeln!(out, "TG({},{}): all reflected identities hold", r.m, r.t).unwrap(),
                    Some(f) => writeln!(out, "TG({},{}): {f}", r.m, r.t).unwrap(),
                }
            }
        }
    }
    Ok((out, ok))
}

pub fn cmd_probe(m: u32, k: Option<usize>, t_min: u32, t_max: u32, format: Format) -> Result<String, CliError> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=2 * m as usize).collect(),
    };
    let probes = asymptotic_probes(m, &ks, t_min..=t_max)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("t,k,c_k_bitlength,residual,predicted_exponent\n");
            for p in &probes {
                for ((t, bits), r) in p.t_values.iter().zip(&p.bit_lengths).zip(&p.residuals) {
                    writeln!(out, "{t},{},{bits},{r:.6},{}", p.k, p.predicted_exponent).unwrap();
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct ProbeJson<'a> {
                m: u32,
                k: usize,
                t_values: &'a [u32],
                c_k_bitlengths: &'a [u64],
                residuals: Vec<String>,
                measured_slope: String,
                predicted_exponent: usize,
                passes: bool,
            }
            let rows: Vec<_> = probes
                .iter()
                .map(|p| ProbeJson {
                    m: p.m,
                    k: p.k,
                    t_values: &p.t_values,
                    c_k_bitlengths: &p.bit_lengths,
                    residuals: p.residuals.iter().map(|r| format!("{r:.6}")).collect(),
                    measured_slope: format!("{:.6}", p.measured_slope),
                    predicted_exponent: p.predicted_exponent,
                    passes: p.passes(),
                })
                .collect();
            out.push_str(&serde_json::to_string(&rows).expect("serializable"));
            out.push('\n');
        }
        Format::Text => {
            for p in &probes {
                writeln!(
                    out,
                    "m={} k={}: slope {:.6} vs u_k = {}, residual drift {}",
                    p.m,
                    p.k,
                    p.measured_slope,
                    p.predicted_exponent,
                    if p.residuals_bounded() { "bounded" } else { "UNBOUNDED" },
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

pub fn cmd_sweep(m: u32, t_max: u32, format: Format) -> Result<String, CliError> {
    let sweep = theorem_sweep(m, t_max)?;
    let mut out = String::new();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                t: u32,
                degree: usize,
                violations: &'a [usize],
            }
            #[derive(Serialize)]
            struct SweepJson<'a> {
                m: u32,
                t_max: u32,
                rows: Vec<Row<'a>>,
                minimal_t: Option<u32>,
                pattern_holds: bool,
            }
            let json = SweepJson {
                m,
                t_max,
                rows: sweep
                    .rows
                    .iter()
                    .map(|r| Row { t: r.t, degree: r.degree, violations: &r.violations })
                    .collect(),
                minimal_t: sweep.minimal_t,
                pattern_holds: sweep.pattern_holds,
            };
            out.push_str(&serde_json::to_string(&json).expect("serializable"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("t,degree,violation_count,violations\n");
            for r in &sweep.rows {
                let list: Vec<String> = r.violations.iter().map(usize::to_string).collect();
                writeln!(out, "{},{},{},{}", r.t, r.degree, r.violations.len(), list.join(" ")).unwrap();
            }
        }
        Format::Text => {
            for r in &sweep.rows {
                writeln!(out, "TG({m},{}): degree {}, violations {}", r.t, r.degree, set_text(&r.violations)).unwrap();
            }
            match sweep.minimal_t {
                Some(t0) => writeln!(
                    out,
                    "exactly {m} violations for all t in [{t0}, {t_max}]; alternating pattern from the top: {}",
                    sweep.pattern_holds
                )
                .unwrap(),
                None => writeln!(out, "no t <= {t_max} starts a run of exactly {m} violations").unwrap(),
            }
        }
    }
    Ok(out)
}

fn set_text(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Published (m, t, violation set) triples for TG_{m,t}.
pub const GOLDEN_CASES: [(u32, u32, &[usize]); 3] = [
    (2, 5, &[34, 36]),
    (4, 6, &[78, 80, 82, 84]),
    (5, 6, &[97, 99, 101, 103, 105]),
];

#[derive(Debug, Clone, Serialize)]
pub struct GoldenResult {
    pub m: u32,
    pub t: u32,
    pub expected_degree: usize,
    pub degree: Option<usize>,
    pub expected: Vec<usize>,
    pub computed: Vec<usize>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproduceReport {
    pub cases: Vec<GoldenResult>,
    pub all_match: bool,
}

impl ReproduceReport {
    pub fn all_match(&self) -> bool {
        self.all_match
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string(self).expect("serializable")),
            Format::Csv => {
                let mut out = String::from("m,t,degree,expected,computed,matches\n");
                for c in &self.cases {
                    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    let degree = c.degree.map_or(String::new(), |d| d.to_string());
                    writeln!(out, "{},{},{degree},{},{},{}", c.m, c.t, join(&c.expected), join(&c.computed), c.matches).unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for c in &self.cases {
                    let mark = if c.matches { "✓" } else { "✗" };
                    write!(out, "TG({},{}): {} {mark}", c.m, c.t, set_text(&c.computed)).unwrap();
                    if !c.matches {
                        write!(
                            out,
                            " expected {} with degree {}, got degree {}",
                            set_text(&c.expected),
                            c.expected_degree,
                            c.degree.map_or("undefined".to_string(), |d| d.to_string()),
                        )
                        .unwrap();
                    }
                    out.push('\n');
                }
                writeln!(out, "{}", if self.all_match { "all golden cases match" } else { "MISMATCH" }).unwrap();
                out
            }
        }
    }
}

/// Runs the golden cases against `engine`, which maps (m, t) to I(TG_{m,t}).
pub fn reproduce(engine: &dyn Fn(u32, u32) -> DensePolynomial) -> ReproduceReport {
    let cases: Vec<GoldenResult> = GOLDEN_CASES
        .iter()
        .map(|&(m, t, expected)| {
            let poly = engine(m, t);
            let expected_degree = 3 * (t as usize + 1) * m as usize + 1;
            let computed = log_concavity_report(&poly).map(|r| r.violations).unwrap_or_default();
            let matches = poly.degree() == Some(expected_degree) && computed == expected;
            GoldenResult {
                m,
                t,
                expected_degree,
                degree: poly.degree(),
                expected: expected.to_vec(),
                computed,
                matches,
            }
        })
        .collect();
    let all_match = cases.iter().all(|c| c.matches);
    ReproduceReport { cases, all_match }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (String, bool) {
        let cli = Cli::try_parse_from(std::iter::once("indpoly").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let ok = run(&cli, &mut buf).unwrap();
        (String::from_utf8(buf).unwrap(), ok)
    }

    #[test]
    fn build_variants() {
        assert_eq!(run_args(&["build", "path", "2"]).0, "2:_,0\n");
        assert_eq!(run_args(&["build", "--family", "P,2"]).0, "2:_,0\n");
        assert!(run_args(&["build", "TG", "2", "5"]).0.starts_with("70:_,"));
    }

    #[test]
    fn corrupted_engine_fails_reproduction() {
        let report = reproduce(&|m, t| closed_form_tg(u64::from(m), u64::from(t)).shift(1));
        assert!(!report.all_match());
        let report = reproduce(&|_, _| DensePolynomial::zero());
        assert!(!report.all_match());
        assert!(report.render(Format::Text).contains("MISMATCH"));
    }
}
