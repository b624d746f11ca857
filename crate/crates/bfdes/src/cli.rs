//! Command-line frontend.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
//! parse error, 3 state budget exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::automaton::parse_event_string;
use crate::format::{
    automaton_to_json, finitelang_to_json, parse_automaton, parse_finitelang, parse_ucmap,
    render_report, report_to_json,
};
use crate::interval::IntervalDegree;
use crate::lang::{infimal_closed_controllable, supremal_controllable, ValueLattice};
use crate::ncfd::{GridSpec, Ncfd};
use crate::supervisory::{
    check_controllability, check_nonblocking_supervision, SupervisoryError, DEFAULT_STATE_BUDGET,
};
use crate::traffic::{compare_controllers, run_simulation, Mode, TrafficConfig};

const LATTICE_CLOSURE_CAP: usize = 4096;

#[derive(Parser)]
#[command(name = "bfdes", version, about = "Bi-fuzzy discrete event systems toolkit")]
pub struct Cli {
    /// State budget for reachability searches.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_BUDGET)]
    pub budget: usize,
    /// Grid step used when embedding interval degrees as NCFDs.
    #[arg(long, global = true, default_value_t = 0.1)]
    pub grid: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check bi-fuzzy controllability of a specification against a plant.
    Check {
        plant: PathBuf,
        spec: PathBuf,
        uc: PathBuf,
        /// Also check the marked-language closure condition.
        #[arg(long)]
        nonblocking: bool,
        /// Emit the machine-readable report instead of the text table.
        #[arg(long)]
        json: bool,
    },
    /// Parallel-compose two automata and print the result as JSON.
    Compose { left: PathBuf, right: PathBuf },
    /// Print the language degree of one event string (dot-separated, empty for the empty string).
    Eval {
        automaton: PathBuf,
        string: String,
        /// Print the marked degree instead.
        #[arg(long)]
        marked: bool,
    },
    /// Supremal and infimal controllable approximations of a finite language.
    Approx {
        /// Specification language file.
        spec: PathBuf,
        /// Plant language file (prefix-closed superlanguage).
        plant: PathBuf,
        uc: PathBuf,
        /// Lattice file: JSON array of NCFD strings. Defaults to the meet/join
        /// closure of every value appearing in the inputs.
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
    /// Compare two degrees by centroid; exit 0 when the first ranks at least as high.
    Rank {
        /// NCFD string, or an interval `lo..hi` embedded on the grid.
        a: String,
        b: String,
    },
    /// Traffic-signal simulation.
    Traffic(TrafficCmd),
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct TrafficCmd {
    #[command(subcommand)]
    compare: Option<TrafficSub>,
    #[command(flatten)]
    run: TrafficRunArgs,
}

#[derive(Args)]
pub struct TrafficRunArgs {
    /// Total arrival rate in vehicles per hour.
    #[arg(long)]
    rate: Option<f64>,
    #[arg(long, default_value = "bfdes", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Full TrafficConfig JSON; --rate/--mode/--seed override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the per-cycle `cycle,avg_queue` CSV to this path.
    #[arg(long)]
    queue_csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TrafficSub {
    /// Mean-delay comparison of both modes across rates and seeds (CSV on stdout).
    Compare {
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [720.0, 1800.0, 2480.0])]
        rates: Vec<f64>,
        /// Number of seeds to average over.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// First seed of the consecutive range.
        #[arg(long, default_value_t = 1)]
        seed_start: u64,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "bfdes" => Ok(Mode::Bfdes),
        "fdes" => Ok(Mode::Fdes),
        other => Err(format!("unknown mode {other:?} (expected bfdes or fdes)")),
    }
}

fn fail(e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {e}");
    2
}

fn parse_degree(s: &str, grid: f64) -> Result<Ncfd, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: f64 = lo.trim().parse().map_err(|_| format!("bad interval bound in {s:?}"))?;
        let hi: f64 = hi.trim().parse().map_err(|_| format!("bad interval bound in {s:?}"))?;
        let iv = IntervalDegree::new(lo, hi).map_err(|e| e.to_string())?;
        let grid = GridSpec::new(grid).map_err(|e| e.to_string())?;
        Ok(iv.embed(grid))
    } else {
        s.parse().map_err(|e: crate::ncfd::NcfdError| e.to_string())
    }
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { plant, spec, uc, nonblocking, json } => {
            let plant = match parse_automaton(&plant) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let spec = match parse_automaton(&spec) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let uc = match parse_ucmap(&uc) {
                Ok(m) => m,
                Err(e) => return fail(e),
            };
            let result = if nonblocking {
                check_nonblocking_supervision(&plant, &spec, &uc, cli.budget)
            } else {
                check_controllability(&plant, &spec, &uc, cli.budget)
            };
            let report = match result {
                Ok(r) => r,
                Err(e @ SupervisoryError::StateBudgetExceeded { .. }) => {
                    eprintln!("error: {e}");
                    return 3;
                }
                Err(e) => return fail(e),
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report_to_json(&report))
                        .expect("plain data serializes")
                );
            } else {
                print!("{}", render_report(&plant, &spec, &uc, &report));
            }
            let positive = if nonblocking {
                report.nonblocking_achievable()
            } else {
                report.is_controllable()
            };
            if positive {
                0
            } else {
                1
            }
        }
        Command::Compose { left, right } => {
            let left = match parse_automaton(&left) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let right = match parse_automaton(&right) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            println!("{}", automaton_to_json(&left.parallel_compose(&right)));
            0
        }
        Command::Eval { automaton, string, marked } => {
            let g = match parse_automaton(&automaton) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let s = parse_event_string(&string);
            let degree = if marked { g.marked_degree(&s) } else { g.language_degree(&s) };
            match degree {
                Ok(d) => {
                    println!("{d}");
                    0
                }
                Err(e) => fail(e),
            }
        }
        Command::Approx { spec, plant, uc, lattice } => {
            let k = match parse_finitelang(&spec) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let m = match parse_finitelang(&plant) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let uc = match parse_ucmap(&uc) {
                Ok(u) => u,
                Err(e) => return fail(e),
            };
            let lattice = match lattice {
                Some(path) => {
                    let src = match std::fs::read_to_string(&path) {
                        Ok(s) => s,
                        Err(e) => return fail(format!("{}: {e}", path.display())),
                    };
                    let strings: Vec<String> = match serde_json::from_str(&src) {
                        Ok(v) => v,
                        Err(e) => return fail(format!("{}: {e}", path.display())),
                    };
                    let mut values = Vec::new();
                    for s in &strings {
                        match s.parse::<Ncfd>() {
                            Ok(v) => values.push(v),
                            Err(e) => return fail(format!("{}: {s:?}: {e}", path.display())),
                        }
                    }
                    match ValueLattice::new(values) {
                        Ok(l) => l,
                        Err(e) => return fail(e),
                    }
                }
                None => {
                    let mut seed: Vec<Ncfd> =
                        k.degrees().values().chain(m.degrees().values()).cloned().collect();
                    seed.extend(uc.events().map(|(_, d)| d.clone()));
                    match ValueLattice::closure(seed, LATTICE_CLOSURE_CAP) {
                        Ok(l) => l,
                        Err(e) => return fail(e),
                    }
                }
            };
            let sup = match supremal_controllable(&k, &m, &uc, &lattice) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let inf = match infimal_closed_controllable(&k, &m, &uc, &lattice) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let doc = serde_json::json!({
                "supremal": serde_json::from_str::<serde_json::Value>(&finitelang_to_json(&sup))
                    .expect("emitted JSON parses"),
                "infimal": serde_json::from_str::<serde_json::Value>(&finitelang_to_json(&inf))
                    .expect("emitted JSON parses"),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("plain data serializes"));
            0
        }
        Command::Rank { a, b } => {
            let da = match parse_degree(&a, cli.grid) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            let db = match parse_degree(&b, cli.grid) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            println!("a = {da}");
            println!("b = {db}");
            println!("centroid(a) = {:.6}", da.centroid());
            println!("centroid(b) = {:.6}", db.centroid());
            if da.rank_geq(&db) {
                println!("a >= b");
                0
            } else {
                println!("a < b");
                1
            }
        }
        Command::Traffic(cmd) => match cmd.compare {
            Some(TrafficSub::Compare { rates, seeds, seed_start }) => {
                let seed_list: Vec<u64> = (seed_start..seed_start + seeds).collect();
                match compare_controllers(&rates, &seed_list) {
                    Ok(table) => {
                        print!("{}", table.to_csv());
                        0
                    }
                    Err(e) => fail(e),
                }
            }
            None => {
                let args = cmd.run;
                let mut cfg = match &args.config {
                    Some(path) => {
                        let src = match std::fs::read_to_string(path) {
                            Ok(s) => s,
                            Err(e) => return fail(format!("{}: {e}", path.display())),
                        };
                        match serde_json::from_str::<TrafficConfig>(&src) {
                            Ok(c) => c,
                            Err(e) => return fail(format!("{}: {e}", path.display())),
                        }
                    }
                    None => {
                        let Some(rate) = args.rate else {
                            return fail("traffic requires --rate or --config");
                        };
                        TrafficConfig::with_mode(args.mode, rate, args.seed)
                    }
                };
                if args.config.is_some() {
                    if let Some(rate) = args.rate {
                        cfg.arrival_rate = rate;
                    }
                    cfg.mode = args.mode;
                    cfg.seed = args.seed;
                }
                let result = match run_simulation(&cfg) {
                    Ok(r) => r,
                    Err(e) => return fail(e),
                };
                if let Some(path) = &args.queue_csv {
                    if let Err(e) = std::fs::write(path, result.queue_csv()) {
                        return fail(format!("{}: {e}", path.display()));
                    }
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result).expect("plain data serializes")
                );
                0
            }
        },
    }
}

/// Entry point for the binary: parse arguments and dispatch.
pub fn main() -> i32 {
    run(Cli::parse())
}
