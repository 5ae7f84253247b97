use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jonquieres::cli::{self, Options, DEFAULT_SELFTEST_COUNT};
use jonquieres::groebner::Limits;
use jonquieres::instance::InstanceFile;
use jonquieres::report::Report;

#[derive(Parser)]
#[command(
    name = "jonq",
    version,
    about = "Implicit equations of de Jonquieres parametrizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Cremona map against its inverse and print the inversion factors.
    VerifyCremona(Common),
    /// Compute the implicit monoid equation and its degree data.
    Implicitize(Common),
    /// Conductor, mapping cone and regularity checks.
    Analyze(Common),
    /// Downgraded Rees ideal, monoid association and saturation identities.
    Rees(Common),
    /// Randomized property suites over the built-in Cremona families.
    Selftest {
        #[command(flatten)]
        common: Common,
        /// Number of random instances.
        #[arg(long, default_value_t = DEFAULT_SELFTEST_COUNT)]
        count: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Instance file (optional for selftest).
    file: Option<PathBuf>,
    /// Cross-check against Groebner elimination.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Degree bound for syzygy verification.
    #[arg(long = "deg-bound")]
    deg_bound: Option<u32>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// `N` or `pairs=N,sat=K,members=M`.
    #[arg(long)]
    budget: Option<String>,
    /// Print `key = value` lines.
    #[arg(long)]
    machine: bool,
    /// Record wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

fn parse_budget(spec: &str, opts: &mut Options) -> Result<(), String> {
    let mut limits = opts.limits;
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part.split_once('=').unwrap_or(("pairs", part));
        let n: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("budget value `{value}` is not an integer"))?;
        match key.trim() {
            "pairs" => {
                limits = Limits {
                    max_pairs: Some(n),
                    ..limits
                }
            }
            "sat" => limits = limits.with_saturation_cap(n),
            "members" => opts.members = n,
            other => return Err(format!("unknown budget `{other}`")),
        }
    }
    opts.limits = limits;
    Ok(())
}

fn options(common: &Common, inst: Option<&InstanceFile>) -> Result<Options, String> {
    let mut opts = Options {
        oracle: common.oracle,
        jobs: common.jobs.max(1),
        timings: common.timings,
        ..Options::default()
    };
    if let Some(inst) = inst {
        let opt = |k: &str| inst.option_u64(k).map_err(|e| e.to_string());
        if let Some(s) = opt("seed")? {
            opts.seed = s;
        }
        if let Some(b) = opt("deg_bound")? {
            opts.deg_bound = Some(b as u32);
        }
        if let Some(b) = inst.options.get("budget") {
            parse_budget(b, &mut opts)?;
        }
    }
    if let Some(s) = common.seed {
        opts.seed = s;
    }
    if let Some(b) = common.deg_bound {
        opts.deg_bound = Some(b);
    }
    if let Some(b) = &common.budget {
        parse_budget(b, &mut opts)?;
    }
    Ok(opts)
}

fn load(common: &Common, required: bool) -> Result<Option<InstanceFile>, jonquieres::Error> {
    match &common.file {
        Some(path) => InstanceFile::from_path(path).map(Some),
        None if required => Err(jonquieres::Error::Hypothesis("an instance file is required".into())),
        None => Ok(None),
    }
}

fn emit(report: &Report, machine: bool) {
    if machine {
        print!("{}", report.to_machine());
    } else {
        print!("{}", report.to_human());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, count) = match &cli.command {
        Command::VerifyCremona(c) | Command::Implicitize(c) | Command::Analyze(c) | Command::Rees(c) => (c, None),
        Command::Selftest { common, count } => (common, Some(*count)),
    };
    let inst = match load(common, count.is_none()) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = match options(common, inst.as_ref()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match (&cli.command, &inst) {
        (Command::VerifyCremona(_), Some(i)) => cli::cmd_verify_cremona(i),
        (Command::Implicitize(_), Some(i)) => cli::cmd_implicitize(i, &opts),
        (Command::Analyze(_), Some(i)) => cli::cmd_analyze(i, &opts),
        (Command::Rees(_), Some(i)) => cli::cmd_rees(i, &opts),
        (Command::Selftest { count, .. }, i) => cli::cmd_selftest(opts.seed, *count, i.as_ref(), &opts),
        _ => unreachable!("instance loaded for file commands"),
    };
    match result {
        Ok(report) => {
            emit(&report, common.machine);
            ExitCode::from(cli::report_exit_code(&report) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
