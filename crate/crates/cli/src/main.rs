//! `multcoef`: exact representation-theoretic multiplicities from the
//! command line.
//!
//! Exit codes: 0 success, 1 internal defect (self-test mismatch), 2 parse
//! error, 3 infeasible/budget exceeded, 4 size mismatch.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use multcoef_core::error::Error;
use multcoef_core::growth::{classify_growth, GrowthReport};
use multcoef_core::kronecker::{
    kronecker_full, CharTableCache, KronConfig, KronQuery, KronStrategy,
};
use multcoef_core::lr::{lr_small_skew, lr_via_polytope, lr_via_tableaux, multi_lr, MultiLRQuery};
use multcoef_core::partition::{parse_composition, parse_partition, Partition};
use multcoef_core::plethysm::{plethysm_with_strategy, PlethConfig, PlethQuery, PlethStrategy};
use multcoef_core::selftest::{run_level, Level};
use multcoef_core::tableaux::{count_ssyt_brute, kostka, SkewShape};
use multcoef_core::BigUint;

mod bench;

#[derive(Parser)]
#[command(
    name = "multcoef",
    about = "Exact Kostka, Littlewood-Richardson, Kronecker and plethysm coefficients",
    version
)]
struct Cli {
    /// Emit one JSON object per result instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for the character-table disk cache
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Run every applicable algorithm for the query and require agreement
    #[arg(long, global = true)]
    paranoid: bool,
    /// Largest aft for which the Kronecker Jacobi-Trudi path runs
    #[arg(long, global = true, default_value_t = 6)]
    aft_threshold: usize,
    /// Largest n for which the exponential-time oracles (character tables)
    /// are built
    #[arg(long, global = true, default_value_t = 18)]
    oracle_budget_n: usize,
    /// Seed for sampled sweeps (quick self-test level)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension f^lambda by the hook-length formula
    Dim { lambda: String },
    /// Growth classification (aft/Durfee witnesses and verified bounds)
    Classify { lambda: String },
    /// Kostka number K_{lambda/mu, nu}; shape syntax: "5,4,2" or "5,4,2/2,1"
    Kostka { shape: String, weight: String },
    /// Littlewood-Richardson coefficient c^lambda_{mu nu}
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long, value_enum, default_value_t = LrAlgo::Auto)]
        algo: LrAlgo,
    },
    /// Multi-LR coefficient: s_lambda in the product of the factors
    Multilr {
        lambda: String,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Kronecker coefficient g(lambda, mu, nu)
    Kron {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long, value_enum, default_value_t = KronStrategyArg::Auto)]
        strategy: KronStrategyArg,
    },
    /// Plethysm coefficient a^lambda_{d,m} of h_d[h_m]
    Pleth {
        lambda: String,
        d: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = PlethPathArg::Auto)]
        path: PlethPathArg,
    },
    /// Run the oracle-equivalence and invariant sweeps
    Selftest {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
    /// Scaling benchmark over a named query family (JSON lines + slope)
    Bench {
        #[arg(long, value_enum)]
        family: bench::Family,
        /// Comma-separated sizes, e.g. 20,30,40,60
        #[arg(long, value_delimiter = ',', required = true)]
        n_grid: Vec<usize>,
        /// Per-query wall-clock budget; the grid truncates beyond it
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LrAlgo {
    Auto,
    Tab,
    Poly,
    Small,
}

#[derive(Clone, Copy, ValueEnum)]
enum KronStrategyArg {
    Auto,
    Jt,
    Char,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlethPathArg {
    Auto,
    General,
    Reduced,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::InnerNotContained => 2,
        Error::SizeMismatch(_) => 4,
        Error::Infeasible(_) | Error::PreconditionViolated(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// One answer line: the bare value in text mode, a JSON record otherwise.
fn emit(cli: &Cli, query: String, value: &BigUint, path: &str, started: Instant) {
    if cli.json {
        let record = json!({
            "query": query,
            "value": value.to_string(),
            "path": path,
            "time_ms": started.elapsed().as_secs_f64() * 1e3,
        });
        println!("{record}");
    } else {
        println!("{value}");
    }
}

fn parse_shape(text: &str) -> Result<SkewShape, Error> {
    let (outer, inner) = match text.split_once('/') {
        Some((o, i)) => (parse_partition(o)?, parse_partition(i)?),
        None => (parse_partition(text)?, Partition::empty()),
    };
    SkewShape::new(outer, inner)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let started = Instant::now();
    match &cli.command {
        Command::Dim { lambda } => {
            let lam = parse_partition(lambda)?;
            let value = lam.dimension();
            emit(cli, format!("dim {lam}"), &value, "hook-length", started);
        }
        Command::Classify { lambda } => {
            let lam = parse_partition(lambda)?;
            let report = classify_growth(&lam);
            print_classification(cli, &report, started);
        }
        Command::Kostka { shape, weight } => {
            let shape = parse_shape(shape)?;
            let w = parse_composition(weight)?;
            let value = kostka(&shape, &w);
            if cli.paranoid && shape.size() <= 10 {
                let brute = count_ssyt_brute(&shape, w.parts());
                assert_eq!(value, brute, "paranoid: GT vs brute force disagree");
            }
            emit(cli, format!("kostka {shape} {w}"), &value, "gt-polytope", started);
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            algo,
        } => {
            let lam = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let (value, path) = match algo {
                LrAlgo::Tab => (lr_via_tableaux(&lam, &mu, &nu), "tableaux"),
                LrAlgo::Poly => (lr_via_polytope(&lam, &mu, &nu), "polytope"),
                LrAlgo::Small => (lr_small_skew(&lam, &mu, &nu), "small-skew"),
                LrAlgo::Auto => (lr_via_polytope(&lam, &mu, &nu), "polytope"),
            };
            if cli.paranoid {
                let tab = lr_via_tableaux(&lam, &mu, &nu);
                let poly = lr_via_polytope(&lam, &mu, &nu);
                assert_eq!(tab, poly, "paranoid: LR paths disagree");
                assert_eq!(value, poly, "paranoid: LR paths disagree");
                if nu.size() <= 10 {
                    assert_eq!(
                        lr_small_skew(&lam, &mu, &nu),
                        poly,
                        "paranoid: LR paths disagree"
                    );
                }
            }
            emit(cli, format!("lr {lam} {mu} {nu}"), &value, path, started);
        }
        Command::Multilr { lambda, factors } => {
            let lam = parse_partition(lambda)?;
            let factors: Result<Vec<Partition>, _> =
                factors.iter().map(|f| parse_partition(f)).collect();
            let query = MultiLRQuery {
                lambda: lam.clone(),
                factors: factors?,
            };
            let value = multi_lr(&query);
            let desc = query
                .factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            emit(cli, format!("multilr {lam} {desc}"), &value, "multi-lr", started);
        }
        Command::Kron {
            lambda,
            mu,
            nu,
            strategy,
        } => {
            let query = KronQuery::new(
                parse_partition(lambda)?,
                parse_partition(mu)?,
                parse_partition(nu)?,
            );
            let config = KronConfig {
                aft_threshold: cli.aft_threshold,
                char_max_n: cli.oracle_budget_n,
            };
            let cache = CharTableCache::new(cli.cache_dir.clone());
            let strategy = match strategy {
                KronStrategyArg::Auto => KronStrategy::Auto,
                KronStrategyArg::Jt => KronStrategy::Jt,
                KronStrategyArg::Char => KronStrategy::Character,
            };
            let out = kronecker_full(&query, strategy, &config, &cache)?;
            if cli.paranoid {
                let jt = multcoef_core::kronecker::kronecker_jt(&query)?;
                assert_eq!(jt, out.value, "paranoid: Kronecker paths disagree");
                if query.lambda.size() <= config.char_max_n {
                    let ch =
                        multcoef_core::kronecker::kronecker_character_with(&cache, &query)?;
                    assert_eq!(ch, out.value, "paranoid: Kronecker paths disagree");
                }
            }
            emit(
                cli,
                format!("kron {} {} {}", query.lambda, query.mu, query.nu),
                &out.value,
                out.path.as_str(),
                started,
            );
        }
        Command::Pleth { lambda, d, m, path } => {
            let query = PlethQuery::new(parse_partition(lambda)?, *d, *m);
            let config = PlethConfig::default();
            let strategy = match path {
                PlethPathArg::Auto => PlethStrategy::Auto,
                PlethPathArg::General => PlethStrategy::General,
                PlethPathArg::Reduced => PlethStrategy::Reduced,
                PlethPathArg::Oracle => PlethStrategy::Oracle,
            };
            let (value, taken) = plethysm_with_strategy(&query, strategy, &config)?;
            if cli.paranoid {
                if query.d * query.lambda.len() <= config.general_budget {
                    let general = multcoef_core::plethysm::plethysm_hh(&query)?;
                    assert_eq!(general, value, "paranoid: plethysm paths disagree");
                }
                if let Ok(oracle) = multcoef_core::plethysm::plethysm_oracle(&query) {
                    assert_eq!(oracle, value, "paranoid: plethysm paths disagree");
                }
            }
            emit(
                cli,
                format!("pleth {} {} {}", query.lambda, d, m),
                &value,
                taken.as_str(),
                started,
            );
        }
        Command::Selftest { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let reports = run_level(level, cli.seed);
            let mut all_ok = true;
            for report in &reports {
                all_ok &= report.ok();
                if cli.json {
                    let record = json!({
                        "suite": report.name,
                        "checked": report.checked,
                        "ok": report.ok(),
                        "failures": report.failures,
                    });
                    println!("{record}");
                } else if report.ok() {
                    println!("ok   {} ({} instances)", report.name, report.checked);
                } else {
                    println!(
                        "FAIL {} ({} instances): {}",
                        report.name, report.checked, report.failures[0]
                    );
                }
            }
            if !all_ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            family,
            n_grid,
            budget_secs,
        } => {
            bench::run(cli, *family, n_grid, *budget_secs)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_classification(cli: &Cli, report: &GrowthReport, started: Instant) {
    if cli.json {
        let bounds: Vec<_> = report
            .bounds_checked
            .iter()
            .map(|(name, ok)| json!({"bound": name, "holds": ok}))
            .collect();
        let record = json!({
            "query": format!("classify {}", report.partition),
            "n": report.n,
            "aft": report.aft,
            "durfee": report.durfee,
            "dimension": report.dimension.to_string(),
            "class": report.class.as_str(),
            "bounds": bounds,
            "time_ms": started.elapsed().as_secs_f64() * 1e3,
        });
        println!("{record}");
    } else {
        println!(
            "{} (n={}, aft={}, durfee={}, f={})",
            describe_class(report),
            report.n,
            report.aft,
            report.durfee,
            report.dimension
        );
        for (name, ok) in &report.bounds_checked {
            println!("  bound {name}: {}", if *ok { "holds" } else { "VIOLATED" });
        }
    }
}

fn describe_class(report: &GrowthReport) -> String {
    use multcoef_core::growth::GrowthClass;
    match &report.class {
        GrowthClass::PolynomialWitness { k } => format!("PolynomialWitness(k={k})"),
        GrowthClass::ExponentialBand { durfee } => format!("ExponentialBand(durfee={durfee})"),
        GrowthClass::SuperexponentialBand { durfee } => {
            format!("SuperexponentialBand(durfee={durfee})")
        }
    }
}
