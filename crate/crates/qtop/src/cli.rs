//! Command-line front end: parse space descriptions, dispatch analyses, and
//! emit JSON, aligned-table or CSV reports with stable schemas.
//!
//! Exit codes: 0 success, 1 domain error, 2 size limit, 64 usage error.
//! Every failure prints a one-line JSON error object on standard error.

use crate::catalog;
use crate::coverbasis::{generate_neighborhood, PointwiseCover};
use crate::error::Error;
use crate::finspace::{FinMap, FinSpace, DEFAULT_SIZE_LIMIT};
use crate::freetop::build_reduced_group;
use crate::report::{self, space_to_json};
use crate::suspension;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "qtop",
    version,
    about = "Exact workbench for finite topological spaces and truncated free quasitopological groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Path components of a space and its refined group truncations
    Analyze(ReportArgs),
    /// Treat the input as a path-component space; reduction truncations
    AnalyzeDirect(ReportArgs),
    /// The reduction-topology group at one truncation level
    FrGroup(ReportArgs),
    /// Quotient powers of the component projection and the exchange check
    CheckPowers(ReportArgs),
    /// Generated neighborhoods of a quotient map under the minimal cover
    CoverBasis(CoverBasisArgs),
    /// All topologies on a small labelled carrier
    Enumerate(EnumerateArgs),
    /// Separation and group-level verdicts for spaces
    Classify(ClassifyArgs),
    /// List builtin spaces
    Catalog(CatalogArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Space JSON file: {"labels": [...], "opens": [[...]]} or {"labels": [...], "upset": [[...]]}
    #[arg(long)]
    input: Option<PathBuf>,
    /// Builtin name, e.g. sierpinski, discrete(3), nonhausdorff_grid(2)
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
    Csv,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    source: Source,
    /// Truncation level
    #[arg(long, default_value_t = 3)]
    level: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Carrier size bound (default 5000; QTOP_SIZE_LIMIT overrides)
    #[arg(long)]
    size_limit: Option<usize>,
}

#[derive(Args)]
struct CoverBasisArgs {
    #[command(flatten)]
    source: Source,
    /// Partition blocks like "0,1;2"; defaults to path components
    #[arg(long)]
    blocks: Option<String>,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[arg(long)]
    size_limit: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Carrier size (raw up to 4 points, up to 5 with --up-to-homeo)
    #[arg(long)]
    points: usize,
    /// One representative per homeomorphism class
    #[arg(long)]
    up_to_homeo: bool,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Space JSON file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Builtin name
    #[arg(long)]
    builtin: Option<String>,
    /// Classify all topologies on this many points, up to homeomorphism
    #[arg(long)]
    points: Option<usize>,
    /// Level for the group verdicts
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[arg(long)]
    size_limit: Option<usize>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type CliResult = std::result::Result<String, Failure>;

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!("{}", report::error_json("Usage", &e.to_string()));
            return 64;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", report::error_json(e.code(), &e.to_string()));
            e.exit_code()
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", report::error_json("Usage", &msg));
            64
        }
    }
}

fn size_limit(flag: Option<usize>) -> std::result::Result<usize, Failure> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("QTOP_SIZE_LIMIT") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Failure::Usage(format!("QTOP_SIZE_LIMIT is not a number: {raw:?}"))),
        Err(_) => Ok(DEFAULT_SIZE_LIMIT),
    }
}

fn load_space(source: &Source) -> std::result::Result<(String, FinSpace), Failure> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::Domain(Error::InvalidInput(format!(
                "cannot read {}: {e}",
                path.display()
            )))
        })?;
        let space = report::parse_space(&text)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".to_string());
        Ok((name, space))
    } else if let Some(name) = &source.builtin {
        let space = catalog::builtin(name)?;
        Ok((name.clone(), space))
    } else {
        Err(Failure::Usage(
            "exactly one input source is required".into(),
        ))
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Analyze(args) => run_analyze(args, false),
        Command::AnalyzeDirect(args) => run_analyze(args, true),
        Command::FrGroup(args) => run_fr_group(args),
        Command::CheckPowers(args) => run_check_powers(args),
        Command::CoverBasis(args) => run_cover_basis(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Classify(args) => run_classify(args),
        Command::Catalog(args) => run_catalog(args),
    }
}

fn to_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn bool_str(b: bool) -> String {
    b.to_string()
}

fn run_analyze(args: ReportArgs, direct: bool) -> CliResult {
    let (_, space) = load_space(&args.source)?;
    let limit = size_limit(args.size_limit)?;
    let rep = if direct {
        suspension::analyze_direct(&space, args.level, limit)?
    } else {
        suspension::analyze(&space, args.level, limit)?
    };
    let json = report::suspension_to_json(&rep);
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!("qtop {TOOL_VERSION}\n"));
            out.push_str(&format!(
                "route: {}   input points: {}   max level: {}\n",
                json.route,
                space.point_count(),
                json.max_level
            ));
            out.push_str(&format!(
                "components: {}   rank: {}   discrete: {}\n",
                json.components, json.rank, json.discrete
            ));
            out.push_str(&format!(
                "powers of the component projection quotient (i <= {}): {}\n",
                json.max_level,
                match json.condition1_powers_quotient {
                    Some(b) => b.to_string(),
                    None => "not applicable".to_string(),
                }
            ));
            out.push_str(&format!(
                "further conditions: {}\n",
                json.condition2_3_status
            ));
            out.push_str(&format!("note: {}\n", json.note));
            let rows: Vec<Vec<String>> = json
                .levels
                .iter()
                .map(|l| {
                    vec![
                        l.level.to_string(),
                        l.group.words.len().to_string(),
                        bool_str(l.t1),
                        bool_str(l.discrete),
                        bool_str(l.closed_in_top),
                        bool_str(l.subspace_equal),
                        bool_str(l.multiplication_continuous),
                    ]
                })
                .collect();
            out.push_str(&render_table(
                &[
                    "level",
                    "words",
                    "t1",
                    "discrete",
                    "closed_in_top",
                    "subspace_eq",
                    "mult_cont",
                ],
                &rows,
            ));
            Ok(out)
        }
        OutFormat::Csv => Err(Failure::Usage(
            "csv is supported for enumerate, classify and catalog only".into(),
        )),
    }
}

fn run_fr_group(args: ReportArgs) -> CliResult {
    let (_, space) = load_space(&args.source)?;
    let limit = size_limit(args.size_limit)?;
    let group = build_reduced_group(&space, args.level, limit)?;
    let json = report::group_report(&group);
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!("qtop {TOOL_VERSION}\n"));
            out.push_str(&format!(
                "level: {}   words: {}   t1: {}   discrete: {}\n",
                json.level,
                json.group.words.len(),
                json.group.t1,
                json.group.discrete
            ));
            if let Some((v, w)) = &json.group.t1_witness {
                out.push_str(&format!(
                    "t1 witness: every open set containing [{w}] contains [{v}]\n"
                ));
            }
            out.push_str(&format!(
                "identity closure: {}\n",
                json.group.identity_closure.join(", ")
            ));
            let rows: Vec<Vec<String>> = json
                .group
                .words
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    vec![
                        i.to_string(),
                        w.clone(),
                        format!(
                            "{{{}}}",
                            json.group.opens[i]
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    ]
                })
                .collect();
            out.push_str(&render_table(&["idx", "word", "min_open"], &rows));
            Ok(out)
        }
        OutFormat::Csv => Err(Failure::Usage(
            "csv is supported for enumerate, classify and catalog only".into(),
        )),
    }
}

fn run_check_powers(args: ReportArgs) -> CliResult {
    let (_, space) = load_space(&args.source)?;
    let limit = size_limit(args.size_limit)?;
    let json = report::powers_report(&space, args.level, limit)?;
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!("qtop {TOOL_VERSION}\n"));
            out.push_str(&format!(
                "level: {}   components: {}\n",
                json.level,
                json.pi0.labels.len()
            ));
            let rows: Vec<Vec<String>> = json
                .powers
                .iter()
                .map(|r| vec![r.n.to_string(), bool_str(r.power_quotient)])
                .collect();
            out.push_str(&render_table(&["n", "power_quotient"], &rows));
            out.push_str(&format!(
                "all powers quotient: {}   doubled powers quotient: {}   exchange iso: {}\n",
                json.powers_quotient, json.doubled_powers_quotient, json.psi_iso
            ));
            Ok(out)
        }
        OutFormat::Csv => Err(Failure::Usage(
            "csv is supported for enumerate, classify and catalog only".into(),
        )),
    }
}

fn parse_blocks(text: &str) -> std::result::Result<Vec<Vec<usize>>, Failure> {
    let mut blocks = Vec::new();
    for chunk in text.split(';') {
        let mut block = Vec::new();
        for item in chunk.split(',') {
            let trimmed = item.trim();
            if trimmed.is_empty() {
                continue;
            }
            let idx: usize = trimmed
                .parse()
                .map_err(|_| Failure::Usage(format!("bad block member {trimmed:?}")))?;
            block.push(idx);
        }
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    if blocks.is_empty() {
        return Err(Failure::Usage("no blocks given".into()));
    }
    Ok(blocks)
}

fn run_cover_basis(args: CoverBasisArgs) -> CliResult {
    let (_, space) = load_space(&args.source)?;
    let _ = size_limit(args.size_limit)?;
    let (blocks, codomain, projection): (Vec<Vec<usize>>, FinSpace, FinMap) = match &args.blocks {
        Some(text) => {
            let blocks = parse_blocks(text)?;
            let (cod, proj) = catalog::quotient_by_blocks(&space, blocks.clone())?;
            (blocks, cod, proj)
        }
        None => {
            let p = space.path_components();
            let blocks: Vec<Vec<usize>> = p.blocks().iter().map(|b| b.to_indices()).collect();
            let (cod, proj) = space.quotient(&p)?;
            (blocks, cod, proj)
        }
    };
    let cover = PointwiseCover::minimal(&space);
    let mut neighborhoods = Vec::new();
    for z in 0..codomain.point_count() {
        let g = generate_neighborhood(&projection, z, &cover)?;
        neighborhoods.push(report::NeighborhoodJson {
            point: codomain.label(z).to_string(),
            members: g
                .set
                .iter()
                .map(|i| codomain.label(i).to_string())
                .collect(),
            iterations: g.iterations,
        });
    }
    let json = report::CoverBasisJson {
        tool: "qtop".into(),
        version: TOOL_VERSION.into(),
        input: space_to_json(&space),
        blocks,
        codomain: space_to_json(&codomain),
        cover: "minimal".into(),
        neighborhoods,
    };
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!("qtop {TOOL_VERSION}\n"));
            out.push_str("cover: minimal\n");
            let rows: Vec<Vec<String>> = json
                .neighborhoods
                .iter()
                .map(|n| {
                    vec![
                        n.point.clone(),
                        n.members.join(" "),
                        n.iterations.to_string(),
                    ]
                })
                .collect();
            out.push_str(&render_table(
                &["point", "neighborhood", "iterations"],
                &rows,
            ));
            Ok(out)
        }
        OutFormat::Csv => Err(Failure::Usage(
            "csv is supported for enumerate, classify and catalog only".into(),
        )),
    }
}

fn run_enumerate(args: EnumerateArgs) -> CliResult {
    let spaces = catalog::enumerate_topologies(args.points, args.up_to_homeo)?;
    let rows: Vec<report::EnumerateRowJson> = spaces
        .iter()
        .enumerate()
        .map(|(id, s)| {
            let sep = s.separation();
            report::EnumerateRowJson {
                id,
                points: s.point_count(),
                opens: s.open_sets().map(|o| o.len()).unwrap_or(0),
                components: s.path_components().block_count(),
                t0: sep.t0,
                t1: sep.t1,
                discrete: sep.discrete,
                h_prime: sep.h_prime,
                upset: space_to_json(s).upset.unwrap(),
            }
        })
        .collect();
    let json = report::EnumerateJson {
        tool: "qtop".into(),
        version: TOOL_VERSION.into(),
        points: args.points,
        up_to_homeo: args.up_to_homeo,
        count: rows.len(),
        rows,
    };
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table | OutFormat::Csv => {
            let headers = [
                "id",
                "points",
                "opens",
                "components",
                "t0",
                "t1",
                "discrete",
                "h_prime",
            ];
            let cells: Vec<Vec<String>> = json
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.points.to_string(),
                        r.opens.to_string(),
                        r.components.to_string(),
                        bool_str(r.t0),
                        bool_str(r.t1),
                        bool_str(r.discrete),
                        bool_str(r.h_prime),
                    ]
                })
                .collect();
            if args.format == OutFormat::Table {
                let mut out = format!("qtop {TOOL_VERSION}\n");
                out.push_str(&render_table(&headers, &cells));
                Ok(out)
            } else {
                Ok(render_csv(&headers, &cells))
            }
        }
    }
}

fn run_classify(args: ClassifyArgs) -> CliResult {
    let sources = usize::from(args.input.is_some())
        + usize::from(args.builtin.is_some())
        + usize::from(args.points.is_some());
    if sources != 1 {
        return Err(Failure::Usage(
            "exactly one of --input, --builtin, --points is required".into(),
        ));
    }
    let limit = size_limit(args.size_limit)?;
    let named: Vec<(String, FinSpace)> = if let Some(points) = args.points {
        catalog::enumerate_topologies(points, true)?
            .into_iter()
            .enumerate()
            .map(|(i, s)| (format!("n{points}#{i:02}"), s))
            .collect()
    } else {
        let source = Source {
            input: args.input.clone(),
            builtin: args.builtin.clone(),
        };
        let (name, space) = load_space(&source)?;
        vec![(name, space)]
    };
    let rows = catalog::classify(&named, args.level, limit)?;
    let json = report::ClassifyJson {
        tool: "qtop".into(),
        version: TOOL_VERSION.into(),
        level: args.level,
        rows: rows
            .iter()
            .map(|r| report::ClassifyRowJson {
                name: r.name.clone(),
                points: r.points,
                opens: r.opens,
                t0: r.t0,
                t1: r.t1,
                discrete: r.discrete,
                h_prime: r.h_prime,
                f_t1: r.f_t1,
                f_pairs_separable: r.f_pairs_separable,
                mult_1_1: r.mult_1_1,
                coherence_1_2_closed: r.coherence_1_2_closed,
                coherence_1_2_subspace: r.coherence_1_2_subspace,
            })
            .collect(),
    };
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table | OutFormat::Csv => {
            let headers = [
                "name",
                "points",
                "opens",
                "t0",
                "t1",
                "discrete",
                "h_prime",
                "f_t1",
                "f_pairs_separable",
                "mult_1_1",
                "coh_1_2_closed",
                "coh_1_2_subspace",
            ];
            let cells: Vec<Vec<String>> = json
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.points.to_string(),
                        r.opens.to_string(),
                        bool_str(r.t0),
                        bool_str(r.t1),
                        bool_str(r.discrete),
                        bool_str(r.h_prime),
                        bool_str(r.f_t1),
                        bool_str(r.f_pairs_separable),
                        bool_str(r.mult_1_1),
                        bool_str(r.coherence_1_2_closed),
                        bool_str(r.coherence_1_2_subspace),
                    ]
                })
                .collect();
            if args.format == OutFormat::Table {
                let mut out = format!("qtop {TOOL_VERSION} (level {})\n", json.level);
                out.push_str(&render_table(&headers, &cells));
                Ok(out)
            } else {
                Ok(render_csv(&headers, &cells))
            }
        }
    }
}

fn run_catalog(args: CatalogArgs) -> CliResult {
    let rows: Vec<report::CatalogRowJson> = catalog::entries()
        .iter()
        .map(|e| report::CatalogRowJson {
            name: e.name.clone(),
            points: e.space.point_count(),
            opens: e.space.open_sets().map(|o| o.len()).unwrap_or(0),
            notes: e.notes.clone(),
        })
        .collect();
    let json = report::CatalogJson {
        tool: "qtop".into(),
        version: TOOL_VERSION.into(),
        rows,
    };
    match args.format {
        OutFormat::Json => Ok(to_pretty(&json)),
        OutFormat::Table | OutFormat::Csv => {
            let headers = ["name", "points", "opens", "notes"];
            let cells: Vec<Vec<String>> = json
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.points.to_string(),
                        r.opens.to_string(),
                        r.notes.clone(),
                    ]
                })
                .collect();
            if args.format == OutFormat::Table {
                let mut out = format!("qtop {TOOL_VERSION}\n");
                out.push_str(&render_table(&headers, &cells));
                Ok(out)
            } else {
                Ok(render_csv(&headers, &cells))
            }
        }
    }
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], widths: &[usize]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        &widths,
    ));
    for row in rows {
        out.push_str(&line(row, &widths));
    }
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn render_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("# qtop {TOOL_VERSION}\n");
    out.push_str(&headers.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
