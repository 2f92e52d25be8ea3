use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qfock::qfock_core::certify::Filter;
use qfock::qfock_core::embedding::Route;
use qfock::report::{merge_table, ReportDocument};
use qfock::runner::{dimension_cap_from_env, run_certify, run_embed, RouteChoice, RunConfig, Target};
use qfock::CliError;

#[derive(Parser)]
#[command(name = "qfock", version)]
#[command(about = "Exact certification of q-boson realizations of A_{n-1}^q and the A_{k1-1}^q + A_{k2-1}^q embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run relation batteries and write a report
    Certify(CertifyArgs),
    /// Build the embedded generators and write their operator bundles
    Embed(EmbedArgs),
    /// Merge JSON reports into a relation × configuration table
    Report {
        /// Report files written by `certify --format json`
        paths: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CertifyArgs {
    /// Rank parameter: check A_{n-1}^q on n modes
    #[arg(long, conflicts_with_all = ["embed", "k1", "k2"])]
    n: Option<usize>,
    /// Embedding shape, e.g. 3x2
    #[arg(long, value_parser = parse_shape, conflicts_with_all = ["k1", "k2"])]
    embed: Option<(usize, usize)>,
    #[arg(long, requires = "k2")]
    k1: Option<usize>,
    #[arg(long, requires = "k1")]
    k2: Option<usize>,
    /// Comma-separated total boson numbers
    #[arg(long, value_delimiter = ',', required = true)]
    levels: Vec<u32>,
    /// Root denominator D of t = q^(1/D); default 2, or 2*k1*k2 for embeddings
    #[arg(long)]
    root: Option<u32>,
    /// Comma-separated relation id prefixes, e.g. cw.B+,rll
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,
    /// Output file; standard output if absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Leave wall time out, for byte-reproducible reports
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    All,
    Boson,
    Delta,
    Weyl,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    k1: usize,
    #[arg(long)]
    k2: usize,
    #[arg(long)]
    level: u32,
    #[arg(long, value_enum, default_value = "all")]
    route: RouteArg,
    #[arg(long)]
    root: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected AxB, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("expected AxB, got {s:?}"));
    Ok((parse(a)?, parse(b)?))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn certify(args: CertifyArgs) -> Result<bool, CliError> {
    let target = match (args.n, args.embed, args.k1.zip(args.k2)) {
        (Some(n), None, None) => Target::Algebra { n },
        (None, Some((k1, k2)), None) | (None, None, Some((k1, k2))) => Target::Embedding { k1, k2 },
        _ => return Err(CliError::Config("give exactly one of --n, --embed AxB, or --k1/--k2".into())),
    };
    let config = RunConfig::new(target, args.levels, args.root, Filter::new(args.families), dimension_cap_from_env()?)?;
    let doc = run_certify(&config, !args.no_timing)?;
    let text = match args.format {
        Format::Json => to_json(&doc),
        Format::Text => doc.to_text(),
    };
    write_output(args.out.as_deref(), &text)?;
    if args.out.is_some() {
        let s = &doc.summary;
        println!(
            "{}: {} relations, {} passed, {} failed, {} flagged",
            s.status, s.relations, s.passed, s.failed, s.flagged
        );
    }
    Ok(!doc.failed())
}

fn embed(args: EmbedArgs) -> Result<bool, CliError> {
    let routes = match args.route {
        RouteArg::All => RouteChoice::All,
        RouteArg::Boson => RouteChoice::One(Route::Boson),
        RouteArg::Delta => RouteChoice::One(Route::Delta),
        RouteArg::Weyl => RouteChoice::One(Route::Weyl),
    };
    let out = run_embed(args.k1, args.k2, args.level, routes, args.root, dimension_cap_from_env()?)?;
    write_output(args.out.as_deref(), &to_json(&out))?;
    if args.out.is_some() {
        println!("route diff: {}", out.route_diff);
    }
    Ok(out.route_diff != "different")
}

fn report(paths: Vec<PathBuf>) -> Result<bool, CliError> {
    if paths.is_empty() {
        return Err(CliError::Config("no report files given".into()));
    }
    let mut docs = Vec::with_capacity(paths.len());
    for path in paths {
        let text = fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
        let doc: ReportDocument = serde_json::from_str(&text).map_err(|source| CliError::Json { path, source })?;
        docs.push(doc);
    }
    let (table, failed) = merge_table(&docs);
    write_output(None, &table)?;
    Ok(!failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Certify(args) => certify(args),
        Command::Embed(args) => embed(args),
        Command::Report { paths } => report(paths),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
