//! Naive versus fast splitting on generated instances.

use std::time::Instant;

use rayon::prelude::*;

use crate::augment::{augment, Algo};
use crate::check::AssertLevel;
use crate::error::{Error, Result};
use crate::gen::generate;
use crate::graph::Capacity;

pub const CSV_HEADER: &str = "n,m,k,algo,seed,wall_time_ms,maximal_splits,mincut_calls,added_total";

/// Largest instance size the bench accepts.
pub const MAX_BENCH_N: usize = 200;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub k: Capacity,
    pub density: Density,
    pub max_cap: Capacity,
    pub level: AssertLevel,
}

/// Edge probability of generated instances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    Probability(f64),
    /// `p = d / (n − 1)`, capped at 1, so the expected degree stays `d`.
    AverageDegree(f64),
}

impl Density {
    pub fn probability(self, n: usize) -> f64 {
        match self {
            Density::Probability(p) => p,
            Density::AverageDegree(d) => (d / (n as f64 - 1.0)).min(1.0),
        }
    }
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![10, 20, 30, 40],
            trials: 5,
            seed: 1,
            k: 2,
            density: Density::AverageDegree(3.0),
            max_cap: 3,
            level: AssertLevel::Off,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub k: Capacity,
    pub algo: Algo,
    pub seed: u64,
    pub wall_time_ms: f64,
    pub maximal_splits: u64,
    pub mincut_calls: u64,
    pub added_total: Capacity,
    /// `|N(s)|` of the extension. Not part of the CSV.
    pub s_neighbors: usize,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{},{},{}",
            self.n,
            self.m,
            self.k,
            self.algo,
            self.seed,
            self.wall_time_ms,
            self.maximal_splits,
            self.mincut_calls,
            self.added_total
        )
    }
}

/// Seed of trial `trial` at size `n`: `seed + 1_000_003·n + trial`, wrapping.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed.wrapping_add(1_000_003u64.wrapping_mul(n as u64)).wrapping_add(trial as u64)
}

fn run_instance(cfg: &BenchConfig, n: usize, trial: usize) -> Result<Vec<BenchRecord>> {
    let seed = instance_seed(cfg.seed, n, trial);
    let wrap = |e: Error| Error::Instance { n, seed, source: Box::new(e) };
    let g = generate(n, cfg.density.probability(n), cfg.max_cap, seed).map_err(wrap)?;
    let mut rows = Vec::with_capacity(2);
    for algo in [Algo::Fast, Algo::Naive] {
        let start = Instant::now();
        let (_, res) = augment(&g, cfg.k, algo, cfg.level).map_err(wrap)?;
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRecord {
            n,
            m: g.edge_count(),
            k: cfg.k,
            algo,
            seed,
            wall_time_ms,
            maximal_splits: res.stats.maximal_splits,
            mincut_calls: res.stats.mincut_calls,
            added_total: res.total,
            s_neighbors: res.stats.initial_neighbors,
        });
    }
    if rows[0].added_total != rows[1].added_total {
        return Err(wrap(Error::internal(format!(
            "fast added {} but naive added {}",
            rows[0].added_total, rows[1].added_total
        ))));
    }
    let fast_bound = 2 * (4 * n as u64 + 2);
    if rows[0].maximal_splits > fast_bound {
        return Err(wrap(Error::internal(format!(
            "fast used {} maximal splits, more than {fast_bound}",
            rows[0].maximal_splits
        ))));
    }
    Ok(rows)
}

/// Runs both algorithms on every `(size, trial)` instance in parallel.
/// Rows come back ordered by size, then trial, then algorithm.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if let Some(&n) = cfg.sizes.iter().find(|&&n| !(3..=MAX_BENCH_N).contains(&n)) {
        return Err(Error::pre(format!("bench sizes must lie in 3..={MAX_BENCH_N}, got {n}")));
    }
    let jobs: Vec<(usize, usize)> = cfg.sizes.iter().flat_map(|&n| (0..cfg.trials).map(move |t| (n, t))).collect();
    let results: Vec<Result<Vec<BenchRecord>>> = jobs.par_iter().map(|&(n, t)| run_instance(cfg, n, t)).collect();
    let mut rows = Vec::with_capacity(2 * jobs.len());
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Least-squares slope of `ln y` against `ln x` over points with positive
/// coordinates. `None` with fewer than two distinct `x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> =
        points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if logs.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
