use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use conn2k::bench::{run_bench, to_csv, BenchConfig, Density};
use conn2k::conncheck::Witness;
use conn2k::gen::generate;
use conn2k::graph::lift;
use conn2k::oracle;
use conn2k::{
    augment, global_min_cut, is_2k_conn_in_v, minimal_even_extension_checked, parse_instance, restricted_min_cut,
    write_instance, Algo, AssertLevel, CapGraph, Capacity, CutResult, Error, Result, StarGraph, VertexSet,
};

#[derive(Parser)]
#[command(name = "conn2k", version, about = "Minimum (2,k)-connectivity augmentation")]
struct Cli {
    /// Runtime self-checks: off, cheap or full.
    #[arg(long, global = true, default_value = "off")]
    assert_level: AssertLevel,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exit 0 if the graph is (2,k)-connected, 1 otherwise.
    Check(KFile),
    /// Print a minimal even extension.
    Extend(KFile),
    /// Compute a minimum (2,k)-connected augmentation.
    Augment(AugmentArgs),
    /// Minimum cut; with -s, the cut restricted to sides meeting V − s.
    Mincut(MincutArgs),
    /// Exhaustive reference computations for small instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Compare naive and fast splitting on generated instances (CSV).
    Bench(BenchArgs),
}

#[derive(Args)]
struct KFile {
    #[arg(short)]
    k: Capacity,
    file: PathBuf,
}

#[derive(Args)]
struct AugmentArgs {
    #[arg(short)]
    k: Capacity,
    #[arg(long, default_value = "fast")]
    algo: Algo,
    /// Re-check the result and exit 1 if it is not (2,k)-connected.
    #[arg(long)]
    verify: bool,
    /// Append iteration and operation counts.
    #[arg(long)]
    stats: bool,
    /// Also write the augmented graph as an instance file.
    #[arg(short)]
    o: Option<PathBuf>,
    file: PathBuf,
}

#[derive(Args)]
struct MincutArgs {
    /// 1-based id of the vertex playing s.
    #[arg(short)]
    s: Option<usize>,
    file: PathBuf,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Biset enumeration (|V| <= 8).
    Check(KFile),
    /// Cut enumeration (|V| <= 20).
    Mincut(MincutArgs),
    /// Smallest augmentation within a budget (|V| <= 5, budget <= 6).
    Opt {
        #[arg(short)]
        k: Capacity,
        #[arg(long)]
        budget: Capacity,
        file: PathBuf,
    },
    /// Obstacle search in the star graph whose s is the given vertex (|V| <= 8).
    Obstacle {
        #[arg(short)]
        k: Capacity,
        #[arg(short)]
        s: usize,
        file: PathBuf,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(short)]
    n: usize,
    #[arg(short, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 3)]
    max_cap: Capacity,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short)]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10,20,30,40")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(short, default_value_t = 2)]
    k: Capacity,
    /// Fixed edge probability.
    #[arg(short, conflicts_with = "degree")]
    p: Option<f64>,
    /// Expected vertex degree; the edge probability becomes D/(n-1).
    #[arg(long, default_value_t = 3.0)]
    degree: f64,
    #[arg(long, default_value_t = 3)]
    max_cap: Capacity,
}

fn read_graph(path: &Path) -> Result<CapGraph> {
    parse_instance(&fs::read_to_string(path)?)
}

fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn print_witness(w: &Witness) {
    match w {
        Witness::Cut(cut) => println!("witness cut {} value {}", ids(&cut.side), cut.value),
        Witness::Biset { biset, f } => {
            println!("witness biset outer {} inner {} f {}", ids(biset.outer()), ids(biset.inner()), f)
        }
    }
}

fn verdict_exit(ok: bool, witness: Option<&Witness>) -> u8 {
    if ok {
        println!("ok");
        0
    } else {
        println!("not (2,k)-connected");
        if let Some(w) = witness {
            print_witness(w);
        }
        1
    }
}

/// `g` with vertex `s` (1-based) as the external vertex, plus the map from
/// ground indices back to `g`'s indices.
fn star_of(g: &CapGraph, s: usize) -> Result<(StarGraph, Vec<usize>)> {
    if s == 0 || s > g.n() {
        return Err(Error::Precondition(format!("vertex {s} is not in 1..={}", g.n())));
    }
    StarGraph::with_external(g, s - 1)
}

fn print_cut(cut: &CutResult, original: Option<&[usize]>, universe: usize) {
    let side = match original {
        Some(map) => lift(&cut.side, map, universe),
        None => cut.side.clone(),
    };
    println!("value {}", cut.value);
    println!("side {}", ids(&side));
}

fn run(cli: Cli) -> Result<u8> {
    let level = cli.assert_level;
    match cli.command {
        Command::Check(a) => {
            let g = read_graph(&a.file)?;
            let v = is_2k_conn_in_v(&StarGraph::isolated(&g), a.k)?;
            Ok(verdict_exit(v.ok, v.witness.as_ref()))
        }
        Command::Extend(a) => {
            let g = read_graph(&a.file)?;
            let ext = minimal_even_extension_checked(&g, a.k, None, level)?;
            for (v, c) in ext.s_capacities().iter().enumerate() {
                println!("s {} {}", v + 1, c);
            }
            println!("total {}", ext.total());
            Ok(0)
        }
        Command::Augment(a) => {
            let g = read_graph(&a.file)?;
            let (out, res) = augment(&g, a.k, a.algo, level)?;
            println!("c algo={} k={} n={}", a.algo, a.k, g.n());
            for &(u, v, c) in &res.added {
                println!("a {} {} {}", u + 1, v + 1, c);
            }
            println!("s total {}", res.total);
            if a.stats {
                let st = &res.stats;
                println!("c iters={} maxsplits={} mincuts={}", st.iterations, st.maximal_splits, st.mincut_calls);
            }
            if let Some(path) = &a.o {
                let comment = format!("augmented with k={} algo={} total={}", a.k, a.algo, res.total);
                fs::write(path, write_instance(&out, &[comment]))?;
            }
            if a.verify && !is_2k_conn_in_v(&StarGraph::isolated(&out), a.k)?.ok {
                eprintln!("verification failed: result is not (2,{})-connected", a.k);
                return Ok(1);
            }
            Ok(0)
        }
        Command::Mincut(a) => {
            let g = read_graph(&a.file)?;
            match a.s {
                Some(s) => {
                    let (h, map) = star_of(&g, s)?;
                    print_cut(&restricted_min_cut(&h)?, Some(&map), g.n());
                }
                None => print_cut(&global_min_cut(&g)?, None, g.n()),
            }
            Ok(0)
        }
        Command::Oracle(cmd) => run_oracle(cmd),
        Command::Gen(a) => {
            let g = generate(a.n, a.p, a.max_cap, a.seed)?;
            let comment = format!("gen n={} p={} max_cap={} seed={}", a.n, a.p, a.max_cap, a.seed);
            let text = write_instance(&g, &[comment]);
            match &a.o {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Bench(a) => {
            let cfg = BenchConfig {
                sizes: a.sizes,
                trials: a.trials,
                seed: a.seed,
                k: a.k,
                density: a.p.map_or(Density::AverageDegree(a.degree), Density::Probability),
                max_cap: a.max_cap,
                level,
            };
            print!("{}", to_csv(&run_bench(&cfg)?));
            Ok(0)
        }
    }
}

fn run_oracle(cmd: OracleCommand) -> Result<u8> {
    match cmd {
        OracleCommand::Check(a) => {
            let g = read_graph(&a.file)?;
            let v = oracle::bf_is_2k_conn(&StarGraph::isolated(&g), a.k)?;
            Ok(verdict_exit(v.ok, v.witness.as_ref()))
        }
        OracleCommand::Mincut(a) => {
            let g = read_graph(&a.file)?;
            match a.s {
                Some(s) => {
                    let (h, map) = star_of(&g, s)?;
                    print_cut(&oracle::bf_restricted_min_cut(&h)?, Some(&map), g.n());
                }
                None => print_cut(&oracle::bf_restricted_min_cut(&StarGraph::isolated(&g))?, None, g.n()),
            }
            Ok(0)
        }
        OracleCommand::Opt { k, budget, file } => {
            let g = read_graph(&file)?;
            match oracle::bf_min_augmentation(&g, k, budget)? {
                Some((added, total)) => {
                    for (u, v, c) in added {
                        println!("a {} {} {}", u + 1, v + 1, c);
                    }
                    println!("s total {total}");
                    Ok(0)
                }
                None => {
                    println!("none within budget {budget}");
                    Ok(1)
                }
            }
        }
        OracleCommand::Obstacle { k, s, file } => {
            let g = read_graph(&file)?;
            let (h, map) = star_of(&g, s)?;
            match oracle::find_obstacle(&h, k)? {
                Some(ob) => {
                    println!(
                        "obstacle special {}{}",
                        map[ob.special] + 1,
                        if ob.is_vacuous() { " vacuous" } else { "" }
                    );
                    for b in &ob.bisets {
                        let outer = lift(b.outer(), &map, g.n());
                        let inner = lift(b.inner(), &map, g.n());
                        println!("biset outer {} inner {}", ids(&outer), ids(&inner));
                    }
                }
                None => println!("none"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
