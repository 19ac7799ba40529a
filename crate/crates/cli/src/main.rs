use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hgmorph::dot::export_dot;
use hgmorph::format::{parse_hypergraph, parse_subset, serialize_hypergraph, serialize_subset};
use hgmorph::grid::{gen_grid, EdgeModel};
use hgmorph::laws::{check_law, Law};
use hgmorph::pipeline::{parse_pipeline, run_pipeline, Value};
use hgmorph::Hypergraph;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: hgmorph::Error,
    },
    #[error(transparent)]
    Morph(#[from] hgmorph::Error),
    #[error("{0}")]
    Usage(String),
}

/// Morphological operators on hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "hgmorph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an operator pipeline on a subset document.
    Run(RunArgs),
    /// Check algebraic laws exhaustively on a small hypergraph.
    CheckLaws(CheckLawsArgs),
    /// Generate a hypergraph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Render a hypergraph as Graphviz DOT on stdout.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Subset document: a `vset` line, an `eset` line, or both.
    #[arg(long)]
    input: PathBuf,
    /// Steps separated by `;`, e.g. `edelta; veps`.
    #[arg(long)]
    pipeline: String,
    #[arg(long)]
    out: PathBuf,
    /// Print the per-step trace on stdout.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Args)]
struct CheckLawsArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated law names; defaults to every standard law.
    #[arg(long, value_delimiter = ',')]
    laws: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Grid hypergraph with vertices numbered row-major.
    Grid(GridArgs),
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    width: usize,
    #[arg(long)]
    height: usize,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "cross4")]
    model: String,
}

#[derive(Debug, Args)]
struct ExportDotArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Subhypergraph document to colour.
    #[arg(long)]
    highlight: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Hypergraph, CliError> {
    let hg = parse_hypergraph(&read(path)?).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })?;
    if hg.has_empty_edges() {
        let ids: Vec<_> = hg
            .empty_edges()
            .map(|e| hg.edge_id(e).into_owned())
            .collect();
        eprintln!(
            "warning: {}: empty hyperedges {}",
            path.display(),
            ids.join(" ")
        );
    }
    Ok(hg)
}

fn load_subset<'h>(hg: &'h Hypergraph, path: &Path) -> Result<Value<'h>, CliError> {
    parse_subset(hg, &read(path)?).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn run(args: RunArgs) -> Result<ExitCode, CliError> {
    let hg = load_graph(&args.graph)?;
    let pipeline = parse_pipeline(&args.pipeline)?;
    let input = load_subset(&hg, &args.input)?;
    let (output, trace) = run_pipeline(input, &pipeline)?;
    write(&args.out, &serialize_subset(&output))?;
    if args.trace {
        print!("{trace}");
    }
    Ok(ExitCode::SUCCESS)
}

fn check_laws(args: CheckLawsArgs) -> Result<ExitCode, CliError> {
    let hg = load_graph(&args.graph)?;
    let laws = match args.laws {
        Some(names) => names
            .iter()
            .map(|n| n.trim().parse::<Law>())
            .collect::<Result<Vec<_>, _>>()?,
        None => Law::all(),
    };
    let instance = args
        .graph
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "H".into());
    let mut failed = false;
    for law in laws {
        let report = check_law(law, &hg)?.with_instance(instance.as_str());
        failed |= !report.passed();
        println!("{report}");
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn gen(command: GenCommand) -> Result<ExitCode, CliError> {
    match command {
        GenCommand::Grid(args) => {
            let model: EdgeModel = args.model.parse()?;
            let hg = gen_grid(args.width, args.height, model)?;
            write(&args.out, &serialize_hypergraph(&hg))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn export(args: ExportDotArgs) -> Result<ExitCode, CliError> {
    let hg = load_graph(&args.graph)?;
    let highlight = match &args.highlight {
        Some(path) => match load_subset(&hg, path)? {
            Value::Hypergraph(x) => Some(x),
            other => {
                return Err(CliError::Usage(format!(
                    "{}: highlight must be a subhypergraph (a `vset` line then an `eset` line), found a {}",
                    path.display(),
                    other.domain()
                )))
            }
        },
        None => None,
    };
    print!("{}", export_dot(&hg, highlight.as_ref())?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::CheckLaws(args) => check_laws(args),
        Command::Gen(command) => gen(command),
        Command::ExportDot(args) => export(args),
    };
    result.unwrap_or_else(|err| {
        eprintln!("error: {err}");
        ExitCode::from(2)
    })
}
