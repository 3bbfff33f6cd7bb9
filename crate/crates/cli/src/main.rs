use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rectcross::bounds::{compare_constants, construction_bound};
use rectcross::counter::{count_crossings, count_patterns_parallel};
use rectcross::geometry::validate_general_position;
use rectcross::io::{self, verify_records, RecordTable};
use rectcross::oracle::{oracle_count, oracle_pattern_tally};
use rectcross::search::{self, SearchConfig};
use rectcross::PointSet;

#[derive(Parser)]
#[command(name = "rectcross", version, about = "Crossing counts of straight-line complete graph drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count crossings of the complete graph drawn on a point set.
    Count {
        file: PathBuf,
        /// Also print the type-A / type-B pattern tally.
        #[arg(long)]
        patterns: bool,
        /// Cross-check with the brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Check that a point set is in general position.
    GpCheck { file: PathBuf },
    /// Local search for a set with fewer crossings.
    Search(SearchArgs),
    /// Asymptotic coefficient implied by an odd-size set.
    Bound(BoundArgs),
    /// Compare point-set files against the published record table.
    Records {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Draw the complete graph on a point set as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, conflicts_with_all = ["random", "span"])]
    start: Option<PathBuf>,
    /// Number of random start points.
    #[arg(long, requires = "span")]
    random: Option<usize>,
    /// Random start coordinates are drawn from [-span, span].
    #[arg(long, requires = "random")]
    span: Option<i64>,
    #[arg(long)]
    seed: u64,
    /// Mean offset magnitude, in lattice units.
    #[arg(long)]
    mean: f64,
    #[arg(long, default_value_t = 100_000)]
    iters: u64,
    /// Iterations without improvement before doubling (default 20 n²).
    #[arg(long)]
    stale: Option<u64>,
    #[arg(long, default_value_t = search::DEFAULT_MAX_DOUBLINGS)]
    max_doublings: u32,
    /// Write the incumbent here periodically and at exit.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 10_000)]
    checkpoint_every: u64,
    /// Verify with the brute-force oracle on small sets.
    #[arg(long)]
    oracle_checks: bool,
    /// Write the final set here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, conflicts_with_all = ["m", "cr"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "cr")]
    m: Option<u64>,
    #[arg(long, requires = "m")]
    cr: Option<u64>,
    #[arg(long, default_value_t = 6)]
    digits: usize,
}

fn read_set(path: &Path) -> Result<PointSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_pointset(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_count(file: &Path, patterns: bool, oracle: bool) -> Result<()> {
    let set = read_set(file)?;
    let tally = count_patterns_parallel(&set)?;
    let crossings = tally.crossings()?;
    println!("points: {}", set.len());
    println!("crossings: {crossings}");
    if patterns {
        println!("patterns: A={} B={} total={}", tally.a, tally.b, tally.total);
    }
    if oracle {
        let brute = oracle_count(&set)?;
        println!("oracle: {brute}");
        if brute != crossings {
            bail!("oracle disagrees: sweep {crossings}, oracle {brute}");
        }
        if patterns {
            let t = oracle_pattern_tally(&set)?;
            println!("oracle patterns: A={} B={} total={}", t.a, t.b, t.total);
            if t != tally {
                bail!("oracle pattern tally disagrees");
            }
        }
    }
    Ok(())
}

fn cmd_gp_check(file: &Path) -> Result<()> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let points = io::parse_points(&text)?;
    validate_general_position(&points)?;
    if points.len() < 3 {
        bail!("a point set needs at least 3 points, got {}", points.len());
    }
    println!("ok: {} points in general position", points.len());
    Ok(())
}

fn write_checkpoint(path: &Path, set: &PointSet, summary: &str) -> Result<()> {
    fs::write(path, io::format_checkpoint(set, summary))
        .with_context(|| format!("writing checkpoint {}", path.display()))
}

fn cmd_search(args: &SearchArgs) -> Result<()> {
    let start = match (&args.start, args.random, args.span) {
        (Some(path), _, _) => read_set(path)?,
        (None, Some(n), Some(span)) => {
            let mut rng = search::rng_from_seed(args.seed);
            search::random_start(n, span, &mut rng)?
        }
        _ => bail!("give either --start FILE or --random N --span B"),
    };
    let mut config = SearchConfig::new(args.seed, args.mean, start.len());
    config.iteration_budget = args.iters;
    config.max_doublings = args.max_doublings;
    config.oracle_checks = args.oracle_checks;
    if let Some(stale) = args.stale {
        config.stale_threshold = stale;
    }
    if args.checkpoint.is_some() {
        config.checkpoint_every = Some(args.checkpoint_every);
    }

    let initial = count_crossings(&start)?;
    let mut checkpoint_error = None;
    let trace = search::run_with_checkpoints(&config, &start, |c| {
        if let Some(path) = &args.checkpoint {
            if let Err(e) = write_checkpoint(path, c.set, &c.summary()) {
                checkpoint_error.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = checkpoint_error {
        return Err(e);
    }
    if let Some(path) = &args.checkpoint {
        write_checkpoint(path, &trace.best_set, &trace.summary())?;
    }

    eprintln!("start: {initial} crossings");
    eprintln!("{}", trace.summary());
    let text = io::serialize_pointset(&trace.best_set);
    match &args.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_bound(args: &BoundArgs) -> Result<()> {
    let (m, cr) = match (&args.file, args.m, args.cr) {
        (Some(path), _, _) => {
            let set = read_set(path)?;
            (set.len() as u64, count_crossings(&set)?)
        }
        (None, Some(m), Some(cr)) => (m, cr),
        _ => bail!("give either --file FILE or --m M --cr C"),
    };
    let bound = construction_bound(m, cr)?;
    println!("m={m} cr={cr}");
    print!("{}", compare_constants(&bound, args.digits));
    Ok(())
}

fn cmd_records(files: &[PathBuf]) -> Result<()> {
    let mut computed = BTreeMap::new();
    for file in files {
        let set = read_set(file)?;
        let count = count_crossings(&set)?;
        computed
            .entry(set.len())
            .and_modify(|c: &mut u64| *c = (*c).min(count))
            .or_insert(count);
    }
    print!("{}", verify_records(&computed, &RecordTable::published()));
    Ok(())
}

fn cmd_render(file: &Path, output: &Path) -> Result<()> {
    let set = read_set(file)?;
    fs::write(output, io::render_svg(&set)).with_context(|| format!("writing {}", output.display()))
}

fn main() -> ExitCode {
    env_logger::Builder::new()
        .filter_level(log::LevelFilter::Warn)
        .init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count { file, patterns, oracle } => cmd_count(file, *patterns, *oracle),
        Command::GpCheck { file } => cmd_gp_check(file),
        Command::Search(args) => cmd_search(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Records { files } => cmd_records(files),
        Command::Render { file, output } => cmd_render(file, output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
