use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nichemo::harness::{
    dump_population, read_results, render_tables, run_experiment, run_single, ConfigOverrides, ExperimentConfig,
    Parallelism, RESULTS_FILE, TABLES_FILE,
};
use nichemo::{AlgorithmKind, Error, ProblemKind, ProblemSpec64, Result};

#[derive(Parser)]
#[command(name = "nichemo", version, about = "Niching NSGA-II / SPEA2 benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full problem × algorithm × run matrix and write all artifacts.
    Run(Shared),
    /// One run of one algorithm on one problem; prints its indicators.
    Single {
        #[command(flatten)]
        shared: Shared,
        /// Run index; the seed is base seed + index.
        #[arg(long, default_value_t = 0)]
        run: usize,
        /// Write the non-dominated final members to this CSV.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Re-render the comparison tables from a results CSV.
    Table {
        #[command(flatten)]
        shared: Shared,
        /// Results CSV; defaults to `<out>/results.csv`.
        #[arg(long)]
        results: Option<PathBuf>,
    },
    /// Export the Pareto set and front reference samples.
    DumpRefsets(Shared),
}

#[derive(Args)]
struct Shared {
    /// TOML experiment file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated problem names.
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<String>>,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<String>>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    evals: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    refsize: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads, or `auto`.
    #[arg(long)]
    jobs: Option<String>,
}

impl Shared {
    fn resolve(self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path).map_err(|e| match e {
                Error::Io(io) => Error::Config(format!("cannot read {}: {io}", path.display())),
                other => other,
            })?,
            None => ExperimentConfig::default(),
        };
        let parallelism = self.jobs.as_deref().map(str::parse::<Parallelism>).transpose()?;
        cfg.apply(ConfigOverrides {
            problems: self.problems,
            algorithms: self.algorithms,
            runs: self.runs,
            population_size: self.pop,
            max_evaluations: self.evals,
            base_seed: self.seed,
            reference_set_size: self.refsize,
            output_directory: self.out,
            parallelism,
        });
        cfg.validate()?;
        Ok(cfg)
    }
}

fn single_pair(cfg: &ExperimentConfig) -> Result<(ProblemKind, AlgorithmKind)> {
    match (cfg.problem_kinds()?.as_slice(), cfg.algorithm_kinds()?.as_slice()) {
        ([p], [a]) => Ok((*p, *a)),
        _ => Err(Error::Config("single needs exactly one problem and one algorithm".into())),
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Run(shared) => {
            let cfg = shared.resolve()?;
            let tables = run_experiment(&cfg)?;
            print!("{}", tables.render());
            eprintln!("results written to {}", cfg.output_directory.display());
        }
        Command::Single { shared, run, dump } => {
            let cfg = shared.resolve()?;
            let (p, a) = single_pair(&cfg)?;
            let r = run_single(p, a, run, &cfg)?;
            println!("problem={} algorithm={} run={} seed={}", p.id(), a.id(), r.run_index, r.seed);
            println!("igdx={:.6e} igd_plus={:.6e} evaluations={}", r.igdx, r.igd_plus, r.evaluations_used);
            if let Some(path) = dump {
                dump_population(&r, &path)?;
            }
        }
        Command::Table { shared, results } => {
            let cfg = shared.resolve()?;
            let path = results.unwrap_or_else(|| cfg.output_directory.join(RESULTS_FILE));
            let text = render_tables(&read_results(&path)?)?;
            print!("{text}");
            if let Some(dir) = path.parent() {
                std::fs::write(dir.join(TABLES_FILE), &text)?;
            }
        }
        Command::DumpRefsets(shared) => {
            let cfg = shared.resolve()?;
            let dir = cfg.output_directory.join("refsets");
            for p in cfg.problem_kinds()? {
                ProblemSpec64::new(p).export_reference_sets(cfg.reference_set_size, &dir)?;
            }
            eprintln!("reference sets written to {}", dir.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::IncompleteData(missing) = &e {
                for (p, a) in missing {
                    eprintln!("  missing: {p} / {a}");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
