//! Command-line front end: dimension tables, relation oracles, graph
//! property suites and export.

mod checks;
pub mod export;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::depth2::{bracket_kernel, schneps_check};
use crate::graph::write_graph;
use crate::theta::{cohomology_dim, expected_dim, expected_relation_count, psi_relation_space, relation_space, RelationVector};
use crate::{Error, Result};

pub use checks::MAX_SIZE_CAP;
pub use export::{parse_graph_spec, write_atomic};
pub use report::{CheckLine, ReportRecord, Status, SCHEMA};

#[derive(Parser, Debug)]
#[command(name = "grt2", version, about = "Two-loop graph cohomology and depth-two relations in grt1")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cohomology dimensions of the theta complex against the closed form.
    Dims(DimsArgs),
    /// Linear relations among depth-two brackets.
    Relations(RelationsArgs),
    /// Graph complex property suites.
    Graphs(GraphsArgs),
    /// Write relations, dimension tables or a graph to a file.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct DimsArgs {
    #[arg(long, default_value_t = 51)]
    pub max_weight: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub degree: u8,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Psi,
    Rank,
    Ihara,
    All,
}

#[derive(clap::Args, Debug)]
pub struct RelationsArgs {
    /// A single even weight.
    #[arg(long, conflicts_with = "max_weight")]
    pub weight: Option<u32>,
    /// All even weights from 8 up to this one (28 when neither is given).
    #[arg(long)]
    pub max_weight: Option<u32>,
    #[arg(long, value_enum, default_value_t = Oracle::All)]
    pub oracle: Oracle,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphCheck {
    DSquared,
    Encoding,
    Bowtie,
    Filtration,
    ThetaIdentity,
}

#[derive(clap::Args, Debug)]
pub struct GraphsArgs {
    #[arg(long, value_enum)]
    pub check: GraphCheck,
    /// Largest number of internal vertices of any graph built by the suite.
    #[arg(long, default_value_t = 12)]
    pub size_cap: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportWhat {
    Relations,
    Dims,
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Csv,
    Graphtext,
}

#[derive(clap::Args, Debug)]
pub struct ExportArgs {
    #[arg(long, value_enum)]
    pub what: ExportWhat,
    #[arg(long)]
    pub out: PathBuf,
    /// Defaults to json for relations, csv for dims, graphtext for graphs.
    #[arg(long, value_enum)]
    pub format: Option<ExportFormat>,
    /// Weight of the exported relations.
    #[arg(long, default_value_t = 12)]
    pub weight: u32,
    /// Largest weight of the exported dimension table.
    #[arg(long, default_value_t = 51)]
    pub max_weight: u32,
    /// Cohomological degree of the exported dimension table.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub degree: u8,
    /// `theta:<grade>:<k1>,<k2>,<k3>`, `wheel:<n>`, `figure-eight:<a>,<b>`
    /// or `bowtie:<p>,<q>`.
    #[arg(long, default_value = "theta:1:2,4,0")]
    pub graph: String,
}

/// Applies `GRT2_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("GRT2_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Usage(format!("GRT2_THREADS must be a positive integer, got `{value}`")))?;
    // a pool that is already built keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub weight: u32,
    pub dim: usize,
    pub closed_form: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn dim_rows(degree: u8, max_weight: u32) -> Vec<DimRow> {
    (1..=max_weight)
        .map(|k| {
            let dim = cohomology_dim(degree, k);
            let closed_form = expected_dim(degree, k);
            DimRow {
                weight: k,
                dim,
                closed_form,
                matches: dim == closed_form,
            }
        })
        .collect()
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn dims(args: &DimsArgs, out: &mut dyn Write) -> Result<Status> {
    if args.max_weight < 1 {
        return Err(Error::Usage("--max-weight must be at least 1".into()));
    }
    let rows = dim_rows(args.degree, args.max_weight);
    let status = Status::from_pass(rows.iter().all(|r| r.matches));
    let text = match args.format {
        TableFormat::Csv => export::dims_csv(args.degree, &rows),
        TableFormat::Json => {
            let record = ReportRecord::new(
                "dims",
                &[("max-weight", args.max_weight.to_string()), ("degree", args.degree.to_string())],
                status,
                json!({ "rows": rows }),
            );
            format!("{}\n", record.to_json())
        }
        TableFormat::Text => {
            let mut s = format!("H^{} of the theta complex\nweight  dim  closed form  match\n", args.degree);
            for r in &rows {
                s.push_str(&format!(
                    "{:>6}  {:>3}  {:>11}  {}\n",
                    r.weight,
                    r.dim,
                    r.closed_form,
                    if r.matches { "yes" } else { "NO" }
                ));
            }
            s.push_str(&format!("status: {}\n", if status.is_fail() { "fail" } else { "pass" }));
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(status)
}

fn check_weight(k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k));
    }
    if k < 8 {
        return Err(Error::WeightTooSmall(k, 8));
    }
    Ok(())
}

/// Result of the relation oracles at one weight.
#[derive(Clone, Debug, Serialize)]
pub struct WeightRelations {
    pub weight: u32,
    pub expected_count: usize,
    pub vectors: Vec<Vec<String>>,
    pub checks: Vec<CheckLine>,
}

fn render_vector(v: &RelationVector) -> Vec<String> {
    v.integer_coefficients().iter().map(|c| c.to_string()).collect()
}

pub fn relations_at(k: u32, oracle: Oracle) -> Result<WeightRelations> {
    check_weight(k)?;
    let expected_count = expected_relation_count(k);
    let mut checks = Vec::new();
    let vectors = match oracle {
        Oracle::Psi => psi_relation_space(k)?,
        Oracle::Rank => relation_space(k)?,
        Oracle::Ihara => bracket_kernel(k)?,
        Oracle::All => {
            let psi = psi_relation_space(k)?;
            let rank = relation_space(k)?;
            let ihara = bracket_kernel(k)?;
            checks.push(CheckLine::new(
                format!("k={k}: psi and rank oracles span the same space"),
                psi == rank,
                "",
            ));
            checks.push(CheckLine::new(
                format!("k={k}: rank and Ihara oracles span the same space"),
                rank == ihara,
                "",
            ));
            let all_pass = psi.iter().chain(&rank).chain(&ihara).all(schneps_check);
            checks.push(CheckLine::new(
                format!("k={k}: every oracle vector passes the symmetry criterion"),
                all_pass,
                "",
            ));
            checks.push(CheckLine::new(
                format!("k={k}: dimension is floor((k-4)/4) - floor((k-2)/6)"),
                rank.len() == expected_count,
                format!("{} found, {expected_count} expected", rank.len()),
            ));
            rank
        }
    };
    Ok(WeightRelations {
        weight: k,
        expected_count,
        vectors: vectors.iter().map(render_vector).collect(),
        checks,
    })
}

fn relations(args: &RelationsArgs, out: &mut dyn Write) -> Result<Status> {
    let weights: Vec<u32> = match (args.weight, args.max_weight) {
        (Some(k), _) => {
            check_weight(k)?;
            vec![k]
        }
        (None, max) => {
            let max = max.unwrap_or(28);
            if max < 8 {
                return Err(Error::WeightTooSmall(max, 8));
            }
            (8..=max).step_by(2).collect()
        }
    };
    let results = weights
        .iter()
        .map(|&k| relations_at(k, args.oracle))
        .collect::<Result<Vec<_>>>()?;
    let pass = results.iter().all(|r| r.checks.iter().all(|c| c.pass));
    let status = if args.oracle == Oracle::All {
        Status::from_pass(pass)
    } else {
        Status::Info
    };
    let text = match args.format {
        ReportFormat::Json => {
            let mut params = vec![("oracle", format!("{:?}", args.oracle).to_lowercase())];
            match args.weight {
                Some(k) => params.push(("weight", k.to_string())),
                None => params.push(("max-weight", args.max_weight.unwrap_or(28).to_string())),
            }
            let record = ReportRecord::new("relations", &params, status, json!({ "weights": results }));
            format!("{}\n", record.to_json())
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("k={}: {} relation(s)\n", r.weight, r.vectors.len()));
                for v in &r.vectors {
                    s.push_str(&format!("  ({})\n", v.join(", ")));
                }
                for c in &r.checks {
                    s.push_str(&format!("  {}\n", c.render()));
                }
            }
            if status != Status::Info {
                s.push_str(&format!("status: {}\n", if status.is_fail() { "fail" } else { "pass" }));
            }
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(status)
}

pub fn graph_suite(check: GraphCheck, cap: usize) -> Result<Vec<CheckLine>> {
    if cap > MAX_SIZE_CAP {
        return Err(Error::Usage(format!("--size-cap is at most {MAX_SIZE_CAP}, got {cap}")));
    }
    match check {
        GraphCheck::DSquared => checks::d_squared(cap),
        GraphCheck::Encoding => checks::encoding(cap),
        GraphCheck::Bowtie => checks::bowtie(cap),
        GraphCheck::Filtration => checks::filtration(cap),
        GraphCheck::ThetaIdentity => checks::theta_identity(cap),
    }
}

fn graphs(args: &GraphsArgs, out: &mut dyn Write) -> Result<Status> {
    let lines = graph_suite(args.check, args.size_cap)?;
    let status = Status::from_pass(lines.iter().all(|c| c.pass));
    let check = args.check.to_possible_value().expect("named").get_name().to_string();
    let text = match args.format {
        ReportFormat::Json => {
            let record = ReportRecord::new(
                "graphs",
                &[("check", check), ("size-cap", args.size_cap.to_string())],
                status,
                json!({ "checks": lines }),
            );
            format!("{}\n", record.to_json())
        }
        ReportFormat::Text => {
            let mut s = String::new();
            if lines.is_empty() {
                s.push_str("nothing to check below this size cap\n");
            }
            for c in &lines {
                s.push_str(&c.render());
                s.push('\n');
            }
            s.push_str(&format!("status: {}\n", if status.is_fail() { "fail" } else { "pass" }));
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(status)
}

fn export(args: &ExportArgs, out: &mut dyn Write) -> Result<Status> {
    let format = args.format.unwrap_or(match args.what {
        ExportWhat::Relations => ExportFormat::Json,
        ExportWhat::Dims => ExportFormat::Csv,
        ExportWhat::Graph => ExportFormat::Graphtext,
    });
    let mismatch = || {
        Error::Usage(format!(
            "cannot export {:?} as {:?}",
            args.what, format
        ).to_lowercase())
    };
    let mut status = Status::Info;
    let contents = match (args.what, format) {
        (ExportWhat::Relations, ExportFormat::Json | ExportFormat::Csv) => {
            check_weight(args.weight)?;
            let vectors = relation_space(args.weight)?;
            if format == ExportFormat::Json {
                export::relations_json(args.weight, &vectors)
            } else {
                export::relations_csv(args.weight, &vectors)
            }
        }
        (ExportWhat::Dims, ExportFormat::Json | ExportFormat::Csv) => {
            let rows = dim_rows(args.degree, args.max_weight);
            status = Status::from_pass(rows.iter().all(|r| r.matches));
            if format == ExportFormat::Json {
                export::dims_json(args.degree, &rows)
            } else {
                export::dims_csv(args.degree, &rows)
            }
        }
        (ExportWhat::Graph, ExportFormat::Graphtext) => write_graph(&parse_graph_spec(&args.graph)?),
        _ => return Err(mismatch()),
    };
    write_atomic(&args.out, &contents)?;
    writeln!(out, "wrote {}", args.out.display()).map_err(io_err)?;
    Ok(status)
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Dims(a) => dims(a, out),
        Command::Relations(a) => relations(a, out),
        Command::Graphs(a) => graphs(a, out),
        Command::Export(a) => export(a, out),
    }
}
