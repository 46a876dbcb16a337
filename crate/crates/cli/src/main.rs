//! `llt`: compute, verify and draw coinversion LLT polynomials.

mod input;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use llt_core::checks::{run_criterion, Corpus, CriterionResult};
use llt_core::lattice::{config_from_fillings, enumerate_configs, partition_function};
use llt_core::relations::{canonical_family_order, transfer_matrix, ArcShape};
use llt_core::swap::{
    bead_sequence, classify_unique, count_noncrossing_matchings, enumerate_noncrossing_matchings, has_unique_matching,
    induced_matching, phi, swap_check, walks, weight_change, BeadSequence, Matching, Walk, WeightChange,
};
use llt_core::tableaux::llt_poly;
use llt_core::{LatticeConfig, Polynomial};
use serde::Serialize;
use serde_json::json;

use crate::input::{parse_family, parse_tuple, read_source, Job};

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Core(llt_core::Error),
    /// A requested check ran and failed.
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Core(e) if e.is_schema() => 2,
            CliError::Core(e) if e.is_invariant() => 4,
            CliError::Core(_) => 3,
            CliError::Failed(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Schema(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<llt_core::Error> for CliError {
    fn from(e: llt_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
    Tikz,
}

#[derive(Parser)]
#[command(name = "llt", version, about = "Coinversion LLT polynomials, vertex-model swaps and bead matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Args)]
struct Source {
    /// JSON input file, or `-` for standard input.
    #[arg(long, conflicts_with = "tuple")]
    input: Option<String>,
    /// Tuple in compact notation, e.g. `((8,7,6),(4,3,2)/(2,0,0))`.
    #[arg(long)]
    tuple: Option<String>,
    /// Alphabet size; overrides `n` in the input.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// LLT polynomial by tableau enumeration.
    Compute(Source),
    /// Partition function of the vertex model.
    Lattice {
        #[command(flatten)]
        source: Source,
        /// Include every configuration in JSON output.
        #[arg(long)]
        dump: bool,
        /// Configuration drawn in svg/tikz output.
        #[arg(long, default_value_t = 0)]
        config: usize,
    },
    /// Walks, color-flip image and weight change of one configuration.
    Swap {
        #[command(flatten)]
        source: Source,
        /// Configuration index in enumeration order, unless the input gives fillings.
        #[arg(long, default_value_t = 0)]
        config: usize,
    },
    /// Bead sequence of a two-shape tuple.
    Beads(Source),
    /// Non-crossing matchings of the bead sequence.
    Matchings(Source),
    /// Transfer matrix and basis polynomials of a family.
    Relations {
        #[arg(long)]
        input: Option<String>,
        /// Strictly decreasing values generating the family.
        #[arg(long, value_delimiter = ',', conflicts_with = "input")]
        values: Option<Vec<u32>>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Acceptance criteria on a named corpus.
    Verify {
        /// `desk` or `small`.
        #[arg(long, default_value = "desk")]
        corpus: String,
        /// Criteria to run (default: all).
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<u8>>,
    },
}

fn load(src: &Source) -> Result<Job, CliError> {
    let text = match (&src.input, &src.tuple) {
        (Some(path), _) => read_source(path)?,
        (None, Some(t)) => t.clone(),
        (None, None) => return Err(CliError::Schema("give --input or --tuple".into())),
    };
    let mut job = parse_tuple(&text)?;
    if src.n.is_some() {
        job.n = src.n;
    }
    Ok(job)
}

fn need_n(n: Option<usize>) -> Result<usize, CliError> {
    match n {
        Some(0) => Err(CliError::Core(llt_core::Error::ZeroAlphabet)),
        Some(n) => Ok(n),
        None => Err(CliError::Schema("alphabet size missing: pass --n or set \"n\"".into())),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn no_diagram(what: &str) -> CliError {
    CliError::Schema(format!("{what} has no diagram output; use json or text"))
}

fn compute(src: &Source, format: Format) -> Result<String, CliError> {
    let job = load(src)?;
    let n = need_n(job.n)?;
    let l = llt_poly(&job.tuple, n)?;
    match format {
        Format::Json => Ok(to_json(&json!({"tuple": job.tuple.to_string(), "n": n, "llt": l, "text": l.to_string()}))),
        Format::Text => Ok(l.to_string()),
        _ => Err(no_diagram("compute")),
    }
}

fn pick_config(job: &Job, n: usize, index: usize) -> Result<LatticeConfig, CliError> {
    if let Some(f) = &job.fillings {
        return Ok(config_from_fillings(&job.tuple, n, f)?);
    }
    let mut all = enumerate_configs(&job.tuple, n)?;
    let count = all.len();
    if index >= count {
        return Err(CliError::Core(llt_core::Error::IndexOutOfRange { index, bound: count }));
    }
    Ok(all.swap_remove(index))
}

fn lattice(src: &Source, dump: bool, index: usize, format: Format) -> Result<String, CliError> {
    let job = load(src)?;
    let n = need_n(job.n)?;
    match format {
        Format::Text => Ok(partition_function(&job.tuple, n)?.to_string()),
        Format::Json => {
            let z = partition_function(&job.tuple, n)?;
            let mut out =
                json!({"tuple": job.tuple.to_string(), "n": n, "partition_function": z, "text": z.to_string()});
            if dump {
                out["configs"] = serde_json::to_value(enumerate_configs(&job.tuple, n)?).expect("serializable");
            }
            Ok(to_json(&out))
        }
        Format::Svg | Format::Tikz => {
            let cfg = pick_config(&job, n, index)?;
            Ok(if format == Format::Svg { render::config_svg(&cfg, &[]) } else { render::config_tikz(&cfg, &[]) })
        }
    }
}

#[derive(Serialize)]
struct SwapReport {
    tuple: String,
    swapped: String,
    n: usize,
    config: LatticeConfig,
    image: LatticeConfig,
    walks: Vec<Walk>,
    matching: Matching,
    weight_change: WeightChange,
    /// Exponent `w` with `L = t^w L_swap` when the bead matching is unique.
    exponent: Option<i64>,
}

fn swap(src: &Source, index: usize, format: Format) -> Result<String, CliError> {
    let job = load(src)?;
    let n = need_n(job.n)?;
    job.tuple.ensure_pair()?;
    let cfg = pick_config(&job, n, index)?;
    let ws = walks(&cfg)?;
    match format {
        Format::Svg => return Ok(render::config_svg(&cfg, &ws)),
        Format::Tikz => return Ok(render::config_tikz(&cfg, &ws)),
        _ => {}
    }
    let report = SwapReport {
        tuple: job.tuple.to_string(),
        swapped: job.tuple.swap_adjacent(1)?.to_string(),
        n,
        image: phi(&cfg)?,
        matching: induced_matching(&cfg)?,
        weight_change: weight_change(&cfg)?,
        exponent: swap_check(&job.tuple, n)?,
        walks: ws,
        config: cfg,
    };
    if format == Format::Json {
        return Ok(to_json(&report));
    }
    let mut lines = vec![format!("tuple {} -> {}", report.tuple, report.swapped)];
    for w in &report.walks {
        let sw: String = w.switches.iter().map(|s| format!("{s:?}")).collect();
        lines.push(format!("walk {:?} {} -> {:?} {} switches [{sw}]", w.start.side, w.start, w.end.side, w.end));
    }
    lines.push(format!("matching {}", report.matching));
    lines.push(format!("weight change {}", report.weight_change.by_arcs));
    match report.exponent {
        Some(w) => lines.push(format!("unique matching: L = t^{w} L_swap")),
        None => lines.push("matching not unique".into()),
    }
    Ok(lines.join("\n"))
}

fn beads(src: &Source, format: Format) -> Result<String, CliError> {
    let job = load(src)?;
    let b = bead_sequence(&job.tuple)?;
    Ok(match format {
        Format::Json => to_json(&json!({"tuple": job.tuple.to_string(), "beads": b, "text": b.to_string()})),
        Format::Text => b.to_string(),
        Format::Svg => render::beads_svg(&b, &[]),
        Format::Tikz => render::beads_tikz(&b, &[]),
    })
}

#[derive(Serialize)]
struct MatchingReport {
    beads: BeadSequence,
    matchings: Vec<Matching>,
    count: u64,
    unique: bool,
    classified_unique: bool,
}

fn matchings(src: &Source, format: Format) -> Result<String, CliError> {
    let job = load(src)?;
    let b = bead_sequence(&job.tuple)?;
    let ms = enumerate_noncrossing_matchings(&b);
    let report = MatchingReport {
        count: count_noncrossing_matchings(&b),
        unique: has_unique_matching(&b),
        classified_unique: classify_unique(&b),
        matchings: ms,
        beads: b,
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Svg => render::beads_svg(&report.beads, &report.matchings),
        Format::Tikz => render::beads_tikz(&report.beads, &report.matchings),
        Format::Text => {
            let mut lines = vec![report.beads.to_string()];
            lines.extend(report.matchings.iter().map(|m| format!("  {m}")));
            lines.push(format!(
                "count {} unique {} classified {}",
                report.count, report.unique, report.classified_unique
            ));
            lines.join("\n")
        }
    })
}

fn exponent_cell(w: Option<i64>) -> serde_json::Value {
    w.map_or(serde_json::Value::Null, |k| json!({"exp": k}))
}

fn t_cell(w: Option<i64>) -> String {
    match w {
        None => "0".into(),
        Some(0) => "1".into(),
        Some(1) => "t".into(),
        Some(k) => format!("t^{k}"),
    }
}

fn relations(
    input: Option<&str>,
    values: Option<&[u32]>,
    n: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let (family, json_n) = match (input, values) {
        (Some(path), _) => {
            let f = parse_family(&read_source(path)?)?;
            (f.family, f.n)
        }
        (None, Some(v)) => (llt_core::relations::catalan_family(v)?, None),
        (None, None) => return Err(CliError::Schema("give --input or --values".into())),
    };
    let n = need_n(n.or(json_n))?;
    let family = canonical_family_order(&family)?;
    let m = transfer_matrix(&family, n)?;
    let order: Vec<&ArcShape> = m.order.iter().collect();
    match format {
        Format::Json => {
            let rows: Vec<Vec<serde_json::Value>> =
                m.rows.iter().map(|r| r.iter().map(|w| exponent_cell(*w)).collect()).collect();
            let g: Vec<&Polynomial> = m.g.iter().collect();
            let names: Vec<String> = family.iter().map(|t| t.to_string()).collect();
            Ok(to_json(&json!({"family": names, "order": order, "rows": rows, "basis": m.basis, "g": g})))
        }
        Format::Text => {
            let mut lines = Vec::new();
            for (j, shape) in order.iter().enumerate() {
                lines.push(format!("M{} {:?}", j + 1, shape));
            }
            for (t, row) in family.iter().zip(&m.rows) {
                let cells: Vec<String> = row.iter().map(|w| t_cell(*w)).collect();
                lines.push(format!("{t}: ({})", cells.join(", ")));
            }
            for (j, g) in m.g.iter().enumerate() {
                lines.push(format!("g{} = {g}", j + 1));
            }
            Ok(lines.join("\n"))
        }
        _ => Err(no_diagram("relations")),
    }
}

fn verify(corpus: &str, criteria: Option<&[u8]>, format: Format) -> Result<String, CliError> {
    let corpus = Corpus::named(corpus)?;
    let ids: Vec<u8> = criteria.map_or_else(|| (1..=10).collect(), <[u8]>::to_vec);
    let results: Vec<CriterionResult> = ids.iter().map(|&id| run_criterion(id, &corpus)).collect();
    let out = match format {
        Format::Json => to_json(&json!({"corpus": corpus.name, "results": results})),
        Format::Text => results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
        _ => return Err(no_diagram("verify")),
    };
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| r.to_string()).collect();
    if failed.is_empty() {
        Ok(out)
    } else {
        println!("{out}");
        Err(CliError::Failed(failed.join("\n")))
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Schema(format!("cannot start {w} workers: {e}")))?;
    }
    let f = cli.format;
    match &cli.command {
        Command::Compute(src) => compute(src, f),
        Command::Lattice { source, dump, config } => lattice(source, *dump, *config, f),
        Command::Swap { source, config } => swap(source, *config, f),
        Command::Beads(src) => beads(src, f),
        Command::Matchings(src) => matchings(src, f),
        Command::Relations { input, values, n } => relations(input.as_deref(), values.as_deref(), *n, f),
        Command::Verify { corpus, criteria } => verify(corpus, criteria.as_deref(), f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
