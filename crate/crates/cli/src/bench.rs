//! The scaling benchmark harness: runs a named query family over a size
//! grid, emitting one JSON record per query and a closing least-squares
//! log-log slope. Values are cross-checked against the character oracle
//! wherever the overlap budget allows.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use serde_json::json;

use multcoef_core::error::{Error, Result};
use multcoef_core::families;
use multcoef_core::kronecker::{
    kronecker_character, kronecker_full, CharTableCache, KronConfig, KronStrategy,
};
use multcoef_core::lr::lr_via_polytope;
use multcoef_core::plethysm::plethysm_dispatch;
use multcoef_core::BigUint;

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    /// Kronecker with nu = (n-2,1,1) and balanced lambda = mu
    KronAft2,
    /// Plethysm with lambda = (n-1,1), m = 2, d = n/2
    PlethAft1,
    /// LR polytope on a three-row skew family
    LrPoly,
}

impl Family {
    fn name(&self) -> &'static str {
        match self {
            Family::KronAft2 => "kron-aft2",
            Family::PlethAft1 => "pleth-aft1",
            Family::LrPoly => "lr-poly",
        }
    }
}

struct Record {
    n: usize,
    query: String,
    value: BigUint,
    path: &'static str,
    seconds: f64,
    aft: usize,
    durfee: usize,
    /// Kronecker families only: exact `f_second * f_third / f_max`,
    /// reported as a diagnostic, never asserted.
    dim_ratio: Option<String>,
}

pub fn run(cli: &super::Cli, family: Family, grid: &[usize], budget_secs: u64) -> Result<()> {
    let budget = Duration::from_secs(budget_secs);
    let config = KronConfig::default();
    let cache = CharTableCache::new(cli.cache_dir.clone());
    let mut records: Vec<Record> = Vec::new();

    for &n in grid {
        let started = Instant::now();
        let record = match run_one(family, n, &config, &cache)? {
            Some(mut record) => {
                record.seconds = started.elapsed().as_secs_f64();
                record
            }
            None => {
                eprintln!(
                    "warning: family {} is not defined at n={n}; skipping",
                    family.name()
                );
                continue;
            }
        };
        let mut line = json!({
            "family": family.name(),
            "n": record.n,
            "query": record.query,
            "value": record.value.to_string(),
            "path": record.path,
            "time_ms": record.seconds * 1e3,
            "aft": record.aft,
            "durfee": record.durfee,
        });
        if let Some(ratio) = &record.dim_ratio {
            line["dim_ratio"] = json!(ratio);
        }
        println!("{line}");
        let over_budget = started.elapsed() > budget;
        records.push(record);
        if over_budget {
            eprintln!(
                "warning: n={n} exceeded the {budget_secs} s budget; truncating the grid"
            );
            break;
        }
    }

    if records.len() >= 2 {
        let slope = loglog_slope(&records);
        println!("{}", json!({"family": family.name(), "slope": slope}));
    }
    Ok(())
}

fn run_one(
    family: Family,
    n: usize,
    config: &KronConfig,
    cache: &CharTableCache,
) -> Result<Option<Record>> {
    match family {
        Family::KronAft2 => {
            let Some(q) = families::kron_aft2_query(n) else {
                return Ok(None);
            };
            let out = kronecker_full(&q, KronStrategy::Auto, config, cache)?;
            // overlap with the character oracle at desk scale
            if n <= 12 {
                let oracle = kronecker_character(&q)?;
                if oracle != out.value {
                    return Err(Error::Infeasible(format!(
                        "bench value mismatch against the character oracle at n={n}"
                    )));
                }
            }
            let ratio = multcoef_core::growth::dim_ratio_kron(&q.lambda, &q.mu, &q.nu, 2)
                .expect("sizes match");
            Ok(Some(Record {
                n,
                query: format!("kron {} {} {}", q.lambda, q.mu, q.nu),
                value: out.value,
                path: out.path.as_str(),
                seconds: 0.0,
                aft: q.nu.aft(),
                durfee: q.lambda.durfee(),
                dim_ratio: Some(ratio.ratio.to_string()),
            }))
        }
        Family::PlethAft1 => {
            let Some(q) = families::pleth_aft1_query(n) else {
                return Ok(None);
            };
            let (value, path) = plethysm_dispatch(&q)?;
            Ok(Some(Record {
                n,
                query: format!("pleth {} {} {}", q.lambda, q.d, q.m),
                value,
                path: path.as_str(),
                seconds: 0.0,
                aft: q.lambda.aft(),
                durfee: q.lambda.durfee(),
                dim_ratio: None,
            }))
        }
        Family::LrPoly => {
            let Some((lam, mu, nu)) = families::lr_poly_query(n) else {
                return Ok(None);
            };
            let value = lr_via_polytope(&lam, &mu, &nu);
            Ok(Some(Record {
                n,
                query: format!("lr {lam} {mu} {nu}"),
                value,
                path: "polytope",
                seconds: 0.0,
                aft: lam.aft(),
                durfee: lam.durfee(),
                dim_ratio: None,
            }))
        }
    }
}

/// Least-squares slope of ln(time) against ln(n) across the grid.
fn loglog_slope(records: &[Record]) -> f64 {
    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.n as f64).ln(), r.seconds.max(1e-9).ln()))
        .collect();
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
