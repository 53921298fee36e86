//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::cell::Cell;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{compare_formulas_with_scans, g2, p3, random_2k_star, random_star, Draw};
use conn2k::bench::{loglog_slope, run_bench, BenchConfig, Density};
use conn2k::gen::generate;
use conn2k::oracle::{bf_admissible, bf_is_2k_conn, bf_min_augmentation, bf_restricted_min_cut};
use conn2k::{
    augment, is_2k_conn_in_v, is_pair_admissible, minimal_even_extension_checked, restricted_min_cut, Algo,
    AssertLevel, CapGraph, Capacity, Error, StarGraph,
};

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const OPTIMALITY_LIMIT: Duration = Duration::from_secs(300);
const BENCH_LIMIT: Duration = Duration::from_secs(600);

const OPTIMALITY_INSTANCES: usize = 300;
const EXHAUSTIVE_MAX_V: usize = 4;
const EXHAUSTIVE_MAX_CAP: u64 = 2;
const RANDOM_CUT_INSTANCES: usize = 1000;
const RANDOM_CUT_MAX_V: usize = 12;
const ADMISSIBLE_INSTANCES: usize = 500;
const FORMULA_INSTANCES: usize = 500;
const SMALL_MAX_V: usize = 6;
const AGREEMENT_INSTANCES: usize = 200;
const BENCH_SIZES: [usize; 7] = [10, 15, 20, 25, 30, 35, 40];
const BENCH_TRIALS: usize = 30;
const FAST_EXPONENT: (f64, f64) = (0.8, 1.3);
const NAIVE_EXPONENT_MIN: f64 = 1.7;

thread_local! {
    static FULL_RUNS: Cell<u64> = const { Cell::new(0) };
    static FULL_FAILURES: Cell<u64> = const { Cell::new(0) };
}

/// `augment` under full assertions. Internal errors are tallied for the
/// structural-assertion criterion and then reported to the caller.
fn augment_full(g: &CapGraph, k: Capacity, algo: Algo) -> conn2k::Result<(CapGraph, conn2k::AugmentationResult)> {
    FULL_RUNS.with(|c| c.set(c.get() + 1));
    let out = augment(g, k, algo, AssertLevel::Full);
    if let Err(Error::Internal(msg)) = &out {
        FULL_FAILURES.with(|c| c.set(c.get() + 1));
        eprintln!("structural assertion fired: {msg}");
    }
    out
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<f64, String> {
    let secs = start.elapsed().as_secs_f64();
    ensure(start.elapsed() < limit, || format!("took {secs:.2} s, limit {} s", limit.as_secs()))?;
    Ok(secs)
}

fn golden_extension() -> Outcome {
    let start = Instant::now();
    let ext =
        minimal_even_extension_checked(&p3(), 2, Some(&[0, 1, 2]), AssertLevel::Full).map_err(|e| e.to_string())?;
    ensure(ext.s_capacities() == vec![3, 2, 3], || format!("P3 capacities {:?}", ext.s_capacities()))?;
    ensure(ext.total() == 8, || format!("P3 total {}", ext.total()))?;
    let ext =
        minimal_even_extension_checked(&g2(), 2, Some(&[0, 1, 2, 3]), AssertLevel::Full).map_err(|e| e.to_string())?;
    ensure(ext.s_capacities() == vec![1, 0, 0, 1], || format!("G2 capacities {:?}", ext.s_capacities()))?;
    let secs = within(start, GOLDEN_LIMIT)?;
    Ok(format!("P3 (3,2,3) total 8, G2 (1,0,0,1), {secs:.3} s"))
}

fn golden_augmentation() -> Outcome {
    let start = Instant::now();
    for algo in [Algo::Fast, Algo::Naive] {
        for (name, g, want) in [("P3", p3(), 4), ("G2", g2(), 1)] {
            let (out, res) = augment_full(&g, 2, algo).map_err(|e| format!("{name} {algo}: {e}"))?;
            ensure(res.total == want, || format!("{name} {algo}: total {} instead of {want}", res.total))?;
            let h = StarGraph::isolated(&out);
            ensure(is_2k_conn_in_v(&h, 2).unwrap().ok, || format!("{name} {algo}: result fails conncheck"))?;
            ensure(bf_is_2k_conn(&h, 2).unwrap().ok, || format!("{name} {algo}: result fails the biset oracle"))?;
        }
    }
    let secs = within(start, GOLDEN_LIMIT)?;
    Ok(format!("P3 total 4, G2 total 1 with both algorithms, {secs:.3} s"))
}

fn optimality() -> Outcome {
    let start = Instant::now();
    let mut d = Draw::new(0x0A11);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < OPTIMALITY_INSTANCES {
        attempts += 1;
        ensure(attempts < 20 * OPTIMALITY_INSTANCES, || format!("only {checked} usable instances"))?;
        let n = d.range(3, 5) as usize;
        let k = d.range(2, 3);
        let p = d.pick(&[0.3, 0.5, 0.7, 0.9, 1.0]);
        let g = generate(n, p, d.range(1, 3), d.range(0, 1 << 48)).unwrap();
        let (_, res) = augment_full(&g, k, Algo::Fast).map_err(|e| e.to_string())?;
        // The exhaustive search handles budgets up to 6, i.e. totals up to 7.
        if res.total == 0 || res.total > 7 {
            continue;
        }
        let better = bf_min_augmentation(&g, k, res.total - 1).map_err(|e| e.to_string())?;
        ensure(better.is_none(), || format!("{g:?}, k={k}: oracle found {better:?} below {}", res.total))?;
        checked += 1;
    }
    let secs = within(start, OPTIMALITY_LIMIT)?;
    Ok(format!("{checked} instances with totals 1..=7, none improvable, {secs:.1} s"))
}

fn cut_agreement(h: &StarGraph) -> Result<(), String> {
    let fast = restricted_min_cut(h).unwrap();
    let slow = bf_restricted_min_cut(h).unwrap();
    ensure(fast.value == slow.value, || format!("{h:?}: {} vs {}", fast.value, slow.value))?;
    ensure(h.cut_capacity(&fast.side) == fast.value, || format!("{h:?}: side does not realise the value"))
}

fn cut_oracle() -> Outcome {
    let mut exhaustive = 0;
    for nv in 2..=EXHAUSTIVE_MAX_V {
        let size = nv + 1;
        let pairs: Vec<(usize, usize)> = (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))).collect();
        let base = EXHAUSTIVE_MAX_CAP + 1;
        for code in 0..base.pow(pairs.len() as u32) {
            let mut g = CapGraph::new(size);
            let mut rest = code;
            for &(u, v) in &pairs {
                let c = rest % base;
                rest /= base;
                if c > 0 {
                    g.add_capacity(u, v, c).unwrap();
                }
            }
            cut_agreement(&StarGraph::from_graph(g).unwrap())?;
            exhaustive += 1;
        }
    }
    let mut d = Draw::new(0x0A14);
    for _ in 0..RANDOM_CUT_INSTANCES {
        let nv = d.range(2, RANDOM_CUT_MAX_V as u64) as usize;
        let p = d.pick(&[0.1, 0.3, 0.6, 1.0]);
        let h = random_star(&mut d, nv, p, 5, 5);
        cut_agreement(&h)?;
    }
    Ok(format!(
        "{exhaustive} exhaustive star graphs (|V| <= 4, caps <= 2) and {RANDOM_CUT_INSTANCES} random (|V| <= 12)"
    ))
}

fn admissibility() -> Outcome {
    let mut d = Draw::new(0x0A15);
    let mut pairs = 0;
    for _ in 0..ADMISSIBLE_INSTANCES {
        let nv = d.range(3, SMALL_MAX_V as u64) as usize;
        let k = d.range(2, 3);
        let h = random_2k_star(&mut d, nv, k);
        let nbrs = h.s_neighbors();
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i..] {
                if u == v && h.s_capacity(u) < 2 {
                    continue;
                }
                let fast = is_pair_admissible(&h, k, u, v).unwrap();
                let slow = bf_admissible(&h, k, u, v).unwrap();
                ensure(fast == slow, || format!("{h:?}, k={k}, ({u},{v}): {fast} vs {slow}"))?;
                pairs += 1;
            }
        }
        augment_full(&h.without_s(), k, Algo::Fast).map_err(|e| e.to_string())?;
    }
    Ok(format!("{ADMISSIBLE_INSTANCES} instances, {pairs} neighbor pairs"))
}

fn formulas() -> Outcome {
    let mut d = Draw::new(0x0A16);
    let mut comparisons = 0;
    for _ in 0..FORMULA_INSTANCES {
        let nv = d.range(3, SMALL_MAX_V as u64) as usize;
        let k = d.range(2, 3);
        let h = random_2k_star(&mut d, nv, k);
        comparisons += compare_formulas_with_scans(&h, k)?;
        augment_full(&h.without_s(), k, Algo::Naive).map_err(|e| e.to_string())?;
    }
    Ok(format!("{FORMULA_INSTANCES} instances, {comparisons} alpha comparisons"))
}

fn structural() -> Outcome {
    let runs = FULL_RUNS.with(Cell::get);
    let failures = FULL_FAILURES.with(Cell::get);
    ensure(runs > 0, || "no full-assertion runs recorded".into())?;
    ensure(failures == 0, || format!("{failures} of {runs} full-assertion runs hit an internal error"))?;
    Ok(format!("{runs} pipeline runs under full assertions, none fired"))
}

fn agreement_and_scaling() -> Outcome {
    let start = Instant::now();
    let cfg = BenchConfig {
        sizes: BENCH_SIZES.to_vec(),
        trials: BENCH_TRIALS,
        seed: 0x0A18,
        k: 2,
        density: Density::AverageDegree(3.0),
        max_cap: 3,
        level: AssertLevel::Cheap,
    };
    let rows = run_bench(&cfg).map_err(|e| e.to_string())?;
    let instances = rows.len() / 2;
    ensure(instances >= AGREEMENT_INSTANCES, || format!("only {instances} instances"))?;
    for pair in rows.chunks(2) {
        ensure(pair[0].added_total == pair[1].added_total, || format!("totals differ at seed {}", pair[0].seed))?;
    }
    let secs = within(start, BENCH_LIMIT)?;

    let fast: Vec<(f64, f64)> =
        rows.iter().filter(|r| r.algo == Algo::Fast).map(|r| (r.n as f64, r.maximal_splits as f64)).collect();
    let naive: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.algo == Algo::Naive)
        .map(|r| (r.s_neighbors as f64, r.maximal_splits as f64))
        .collect();
    let fe = loglog_slope(&fast).ok_or("no fast data to fit")?;
    let ne = loglog_slope(&naive).ok_or("no naive data to fit")?;
    let summary = format!(
        "{instances} instances agree; fast exponent in n {fe:.2} (want {:.1}..{:.1}), naive exponent in |N(s)| {ne:.2} (want >= {NAIVE_EXPONENT_MIN}), {secs:.1} s",
        FAST_EXPONENT.0, FAST_EXPONENT.1
    );
    ensure(fe >= FAST_EXPONENT.0 && fe <= FAST_EXPONENT.1 && ne >= NAIVE_EXPONENT_MIN, || summary.clone())?;
    Ok(summary)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden extension", golden_extension),
        ("golden augmentation", golden_augmentation),
        ("optimality at desk scale", optimality),
        ("min-cut oracle equivalence", cut_oracle),
        ("admissibility equivalence", admissibility),
        ("closed-form maximal operations", formulas),
        ("structural assertions", structural),
        ("naive/fast agreement and scaling", agreement_and_scaling),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
