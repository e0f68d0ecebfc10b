use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hamaudit::harness::{
    bench_scaling, compare_one, fuzz_campaign, run_oracle, shrink, CampaignConfig, Family,
    HarnessError, Limits,
};
use hamaudit::matching::DEFAULT_ENUMERATION_LIMIT;
use hamaudit::{
    decide_exact_via_matchings, decide_paper_with, parse_graph, DecideOptions, Digraph,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hamaudit",
    version,
    about = "Audit the Z-mapping Hamiltonicity pipeline"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the matching-cover rank pipeline and print its verdict.
    Decide {
        file: PathBuf,
        #[arg(long)]
        strong_prefilter: bool,
    },
    /// Exact Hamiltonicity via Held–Karp or budgeted backtracking.
    Oracle { file: PathBuf },
    /// Exact decision by enumerating perfect matchings of the Z-map.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Compare pipeline, exact decider and oracle. Exit code 2 on discrepancy.
    Compare {
        file: PathBuf,
        /// Write the shrunken discrepancy (arc-list format) into this directory.
        #[arg(long)]
        archive: Option<PathBuf>,
    },
    /// Random campaign. Exit code 2 if any discrepancy was archived.
    Fuzz {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex-count range `A..B` (inclusive) or a single `N`.
        #[arg(long, default_value = "6")]
        n: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.35)]
        p: f64,
        /// Cycle lengths for `disjoint-cycles`, comma separated.
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock statistics (makes the report run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Shrink a discrepancy instance and print it in arc-list format.
    Shrink { file: PathBuf },
    /// Time the pipeline on Gnp digraphs; CSV on standard output.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100,200,400,800")]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gnp,
    DegreeBoundTwo,
    SingleCycle,
    DisjointCycles,
    Prism,
    File,
}

fn read_graph(path: &Path) -> Result<Digraph, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_graph(&text)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => parse(s).map(|n| (n, n)),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let limits = Limits::default();
    match cli.command {
        Command::Decide {
            file,
            strong_prefilter,
        } => {
            let d = read_graph(&file)?;
            let opts = DecideOptions {
                strong_connectivity_prefilter: strong_prefilter,
            };
            print_json(&decide_paper_with(&d, opts));
        }
        Command::Oracle { file } => {
            let d = read_graph(&file)?;
            match run_oracle(&d, &limits)? {
                Some(r) => print_json(&r),
                None => return Err("oracle budget exhausted".into()),
            }
        }
        Command::Exact { file, limit } => {
            let d = read_graph(&file)?;
            print_json(&decide_exact_via_matchings(&d, limit.max(1)));
        }
        Command::Compare { file, archive } => {
            let d = read_graph(&file)?;
            let record = compare_one(&d, &limits)?;
            let shrunk = if record.discrepancy == Some(true) {
                Some(shrink(&d, &limits)?)
            } else {
                None
            };
            if let (Some(dir), Some(s)) = (&archive, &shrunk) {
                fs::create_dir_all(dir)?;
                let stem = file
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("instance");
                fs::write(
                    dir.join(format!("{stem}.pre.arcs")),
                    s.pre_compaction.to_arclist(),
                )?;
                fs::write(
                    dir.join(format!("{stem}.min.arcs")),
                    s.minimized.to_arclist(),
                )?;
            }
            print_json(&serde_json::json!({ "record": record, "shrunk": shrunk }));
            if record.discrepancy == Some(true) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Fuzz {
            family,
            n,
            trials,
            seed,
            p,
            lengths,
            file,
            out,
            timings,
            threads,
        } => {
            let family = match family {
                FamilyArg::Gnp => Family::Gnp { p },
                FamilyArg::DegreeBoundTwo => Family::DegreeBoundTwo,
                FamilyArg::SingleCycle => Family::SingleCycle,
                FamilyArg::DisjointCycles => Family::DisjointCycles { lengths },
                FamilyArg::Prism => Family::Prism,
                FamilyArg::File => Family::FromFile {
                    path: file.ok_or("--family file needs --file")?,
                },
            };
            let (n_min, n_max) = parse_range(&n)?;
            let config = CampaignConfig {
                family,
                n_min,
                n_max,
                trials,
                master_seed: seed,
                limits,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()?;
            let mut report = pool.install(|| fuzz_campaign(&config))?;
            if !timings {
                report = report.without_timing();
            }
            let json = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => fs::write(path, json + "\n")?,
                None => println!("{json}"),
            }
            if !report.discrepancies.is_empty() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Shrink { file } => {
            let d = read_graph(&file)?;
            print!("{}", shrink(&d, &limits)?.minimized.to_arclist());
        }
        Command::Bench {
            n_list,
            p,
            seed,
            repeats,
        } => {
            let table = bench_scaling(&n_list, p, seed, repeats)?;
            print!("{}", table.to_csv());
            match table.slope {
                Some(s) => eprintln!("loglog slope of total time: {s:.3}"),
                None => eprintln!("loglog slope of total time: undefined (one row)"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
