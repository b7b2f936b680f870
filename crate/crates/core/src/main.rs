use clap::{Args, Parser, Subcommand, ValueEnum};
use itp_search::bench::{self, Source, TrialStats, KAPPA1_GRID, KAPPA2_GRID};
use itp_search::datasets::{self, Sequence};
use itp_search::distributions::DistributionSpec;
use itp_search::oracle::{self, BinaryRule, ItpRule};
use itp_search::{checks, minmax_bound, SearchConfig, Variant};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Sorted-list search with a guaranteed worst case: ITP, binary and
/// interpolation search, plus the harness that compares them.
#[derive(Parser)]
#[command(name = "itp-search", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant and oracle suites and print pass/fail per suite.
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Mean ITP query counts over a grid of kappa1 x kappa2 values.
    SweepKappa(SweepKappaArgs),
    /// Query-count statistics per strategy across list sizes.
    SweepN(SweepNArgs),
    /// Benchmark the strategies on a list read from a file.
    BenchFile(BenchFileArgs),
    /// Compare the exhaustive oracles with the closed-form bounds.
    OracleCheck {
        /// Largest list size checked by the adversarial enumeration.
        #[arg(long, default_value_t = 256)]
        max_n: usize,
    },
    /// Write a generated sequence, one value per line.
    Generate {
        #[arg(long, value_enum)]
        kind: SequenceArg,
        #[arg(long)]
        n: usize,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Number of Monte Carlo trials.
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed; trial t draws from stream t of this seed.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Query cap; runs that reach it are reported as cap hits.
    #[arg(long, default_value_t = SearchConfig::DEFAULT_CAP)]
    cap: u32,
    /// Added to ceil(log2 n) to form N_max for the relaxed variant.
    #[arg(long, default_value_t = SearchConfig::DEFAULT_NMAX_EXTRA)]
    nmax_extra: f64,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepKappaArgs {
    #[arg(long, default_value_t = 200_000)]
    n: usize,
    /// kappa1 grid, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = KAPPA1_GRID)]
    kappa1: Vec<f64>,
    /// kappa2 grid, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = KAPPA2_GRID)]
    kappa2: Vec<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Strict)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = DistributionArg::Uniform)]
    distribution: DistributionArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SweepNArgs {
    /// List sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_KAPPA1)]
    kappa1: f64,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_KAPPA2)]
    kappa2: f64,
    /// ITP variants to run next to binary and interpolation search.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [VariantArg::Relaxed])]
    variant: Vec<VariantArg>,
    #[arg(long, value_enum, default_value_t = DistributionArg::Uniform)]
    distribution: DistributionArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchFileArgs {
    #[arg(long)]
    input: PathBuf,
    /// Treat each line as a text key and encode it in base 27.
    #[arg(long, conflicts_with = "column")]
    text: bool,
    /// 1-based CSV column holding the numbers.
    #[arg(long)]
    column: Option<usize>,
    /// Keep repeated numeric keys instead of merging them.
    #[arg(long)]
    keep_duplicates: bool,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_KAPPA1)]
    kappa1: f64,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_KAPPA2)]
    kappa2: f64,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [VariantArg::Relaxed])]
    variant: Vec<VariantArg>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Strict,
    Relaxed,
    Local,
}

impl VariantArg {
    fn variant(self, extra: f64) -> Variant {
        match self {
            VariantArg::Strict => Variant::Strict,
            VariantArg::Relaxed => Variant::Relaxed { extra },
            VariantArg::Local => Variant::Local,
        }
    }
}

impl std::fmt::Display for VariantArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_possible_value().expect("no skipped variants").get_name().fmt(f)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DistributionArg {
    Uniform,
    Gaussian,
    Exponential,
    Triangular,
    Step,
}

impl DistributionArg {
    fn spec(self) -> DistributionSpec {
        match self {
            DistributionArg::Uniform => DistributionSpec::Uniform,
            DistributionArg::Gaussian => DistributionSpec::gaussian(),
            DistributionArg::Exponential => DistributionSpec::exponential(),
            DistributionArg::Triangular => DistributionSpec::Triangular,
            DistributionArg::Step => DistributionSpec::step(),
        }
    }
}

impl std::fmt::Display for DistributionArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_possible_value().expect("no skipped variants").get_name().fmt(f)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceArg {
    Primes,
    Fibonacci,
    Harmonic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(command: Command) -> AnyResult<bool> {
    match command {
        Command::Verify { seed } => Ok(verify(seed)),
        Command::SweepKappa(args) => {
            let c = &args.common;
            let spec = args.distribution.spec();
            note_rejection(&spec);
            let table = bench::sweep_kappa(
                &args.kappa1,
                &args.kappa2,
                args.variant.variant(c.nmax_extra),
                spec,
                args.n,
                c.trials.unwrap_or(10_000),
                c.seed,
                c.cap,
            )?;
            emit(c, &table.rows)?;
            Ok(true)
        }
        Command::SweepN(args) => {
            let c = &args.common;
            let spec = args.distribution.spec();
            note_rejection(&spec);
            let strategies = strategies(args.kappa1, args.kappa2, &args.variant, c);
            let rows = bench::sweep_n(&args.n, spec, &strategies, c.trials.unwrap_or(500), c.seed)?;
            emit(c, &rows)?;
            Ok(true)
        }
        Command::BenchFile(args) => {
            let c = &args.common;
            let dataset = if args.text {
                datasets::load_text(&args.input)?
            } else {
                datasets::load_numeric(&args.input, args.column, !args.keep_duplicates)?
            };
            eprintln!(
                "{}: n = {}, ceil(log2 n) = {}, merged duplicates = {}",
                dataset.name,
                dataset.list.n(),
                minmax_bound(dataset.list.n()),
                dataset.dedup_count
            );
            let strategies = strategies(args.kappa1, args.kappa2, &args.variant, c);
            let rows = bench::run_trials(
                &Source::Dataset(&dataset),
                &strategies,
                c.trials.unwrap_or(1000),
                c.seed,
            )?;
            emit(c, &rows)?;
            Ok(true)
        }
        Command::OracleCheck { max_n } => oracle_check(max_n),
        Command::Generate { kind, n, output } => {
            let kind = match kind {
                SequenceArg::Primes => Sequence::Primes,
                SequenceArg::Fibonacci => Sequence::Fibonacci,
                SequenceArg::Harmonic => Sequence::Harmonic,
            };
            let dataset = datasets::generate(kind, n)?;
            let mut out = sink(output.as_ref())?;
            for v in dataset.list.values() {
                writeln!(out, "{v}")?;
            }
            out.flush()?;
            Ok(true)
        }
    }
}

fn strategies(kappa1: f64, kappa2: f64, variants: &[VariantArg], c: &Common) -> Vec<SearchConfig> {
    let mut out = vec![
        SearchConfig::binary().with_cap(c.cap),
        SearchConfig::interpolation().with_cap(c.cap),
    ];
    out.extend(
        variants
            .iter()
            .map(|v| SearchConfig::itp(kappa1, kappa2, v.variant(c.nmax_extra)).with_cap(c.cap)),
    );
    out
}

fn sink(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(c: &Common, rows: &[TrialStats]) -> AnyResult<()> {
    bench::write_csv(sink(c.output.as_ref())?, rows)?;
    Ok(())
}

fn note_rejection(spec: &DistributionSpec) {
    if spec.uses_rejection() {
        eprintln!("note: {spec} samples outside (0, 1) are redrawn (rejection sampling)");
    }
}

fn verify(seed: u64) -> bool {
    let mut all = true;
    for check in checks::desk_suite(seed) {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        println!("{tag}  {}: {}", check.name, check.detail);
        all &= check.passed;
    }
    all
}

fn oracle_check(max_n: usize) -> AnyResult<bool> {
    if max_n > oracle::WORST_DEPTH_LIMIT {
        return Err(format!("--max-n is limited to {}", oracle::WORST_DEPTH_LIMIT).into());
    }
    let strict = SearchConfig::itp(
        SearchConfig::DEFAULT_KAPPA1,
        SearchConfig::DEFAULT_KAPPA2,
        Variant::Strict,
    );
    println!("n,ceil_log2,minimax,binary_worst,itp_strict_worst,c2_formula,c2_tree");
    let depths = oracle::minimax_depths(max_n);
    let mut ok = true;
    for (n, &minimax) in depths.iter().enumerate().skip(2) {
        let bound = minmax_bound(n);
        let binary = oracle::strategy_worst_depth(BinaryRule, n)?;
        let itp = oracle::strategy_worst_depth(ItpRule::new(strict, n), n)?;
        let tree = oracle::binary_tree_profile(n).avg_depth;
        ok &= minimax == bound && binary == bound && itp <= bound;
        println!(
            "{n},{bound},{minimax},{binary},{itp},{:.6},{:.6}",
            oracle::average_depth_c2(n),
            *tree.numer() as f64 / *tree.denom() as f64
        );
    }
    Ok(ok)
}
