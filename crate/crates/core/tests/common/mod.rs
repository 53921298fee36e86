#![allow(dead_code)]

use conn2k::oracle::bf_is_2k_conn;
use conn2k::{CapGraph, Capacity, StarGraph, VertexId};
use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn graph(n: usize, edges: &[(VertexId, VertexId, Capacity)]) -> CapGraph {
    CapGraph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn star(nv: usize, s_caps: &[Capacity], edges: &[(VertexId, VertexId, Capacity)]) -> StarGraph {
    let mut h = StarGraph::isolated(&graph(nv, edges));
    for (v, &c) in s_caps.iter().enumerate() {
        h.set_s_capacity(v, c).unwrap();
    }
    h
}

pub fn p3() -> CapGraph {
    graph(3, &[(0, 1, 1), (1, 2, 1)])
}

pub fn g2() -> CapGraph {
    graph(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 2), (1, 3, 2), (2, 3, 2)])
}

pub fn triangle2() -> CapGraph {
    graph(3, &[(0, 1, 2), (1, 2, 2), (0, 2, 2)])
}

/// Deterministic stream for test instance parameters.
pub struct Draw(SplitMix64);

impl Draw {
    pub fn new(seed: u64) -> Self {
        Draw(SplitMix64::seed_from_u64(seed))
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.0.next_u64() % (hi - lo + 1)
    }

    pub fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.range(0, items.len() as u64 - 1) as usize]
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random star graph: a generated graph on `nv` vertices plus `s`-capacities
/// uniform in `0..=max_s`.
pub fn random_star(d: &mut Draw, nv: usize, p: f64, max_cap: Capacity, max_s: Capacity) -> StarGraph {
    let mut g = CapGraph::new(nv);
    for u in 0..nv {
        for v in u + 1..nv {
            if d.unit() < p {
                g.add_capacity(u, v, d.range(1, max_cap)).unwrap();
            }
        }
    }
    let mut h = StarGraph::isolated(&g);
    for v in 0..nv {
        h.set_s_capacity(v, d.range(0, max_s)).unwrap();
    }
    h
}

/// Random star graph that is `(2,k)`-connected in `V`, by rejection.
/// `s`-capacities are drawn from `0..=2k`, so acceptance is frequent.
pub fn random_2k_star(d: &mut Draw, nv: usize, k: Capacity) -> StarGraph {
    loop {
        let p = d.pick(&[0.3, 0.5, 0.8]);
        let h = random_star(d, nv, p, 3, 2 * k);
        if bf_is_2k_conn(&h, k).unwrap().ok {
            return h;
        }
    }
}

/// The hand-built obstacle: triangle `a, b, c` with unit caps, each joined
/// to `t` by capacity 3, every `s`-capacity 1, `k = 3`.
pub fn obstacle_fixture() -> (StarGraph, Capacity) {
    let h = star(4, &[1, 1, 1, 1], &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 3), (1, 3, 3), (2, 3, 3)]);
    (h, 3)
}

/// Compares the four closed-form maximal operations against incremental
/// scans on one star graph that is `(2,k)`-connected in `V`. Returns the
/// number of comparisons, or a description of the first mismatch.
pub fn compare_formulas_with_scans(h: &StarGraph, k: Capacity) -> Result<usize, String> {
    use conn2k::oracle::{bf_restricted_min_cut, scan_max_reduce, scan_max_split};
    use conn2k::{blocks, is_2k_conn_in_v, max_reduce_2k, max_reduce_kec, max_split_2k, max_split_kec};

    let kec = |t: Capacity| move |g: &StarGraph| Ok(bf_restricted_min_cut(g)?.value >= t);
    let conn = |g: &StarGraph| Ok(bf_is_2k_conn(g, k)?.ok);
    let mut count = 0;
    let nbrs = h.s_neighbors();

    let mut subjects = vec![(h.clone(), 2 * k, None)];
    for x in 0..h.v_count() {
        let (hx, map) = h.without(x).unwrap();
        subjects.push((hx, k, Some(map)));
    }
    for (g, t, map) in &subjects {
        let local: Vec<VertexId> = match map {
            Some(m) => g.s_neighbors().into_iter().filter(|&v| nbrs.contains(&m[v])).collect(),
            None => g.s_neighbors(),
        };
        for (i, &v) in local.iter().enumerate() {
            let formula = max_reduce_kec(g, *t, v).unwrap().alpha;
            let scan = scan_max_reduce(g, v, kec(*t)).unwrap();
            if formula != scan {
                return Err(format!("reduce at {t}: formula {formula}, scan {scan}, v={v}, {g:?}"));
            }
            count += 1;
            for &u in &local[i + 1..] {
                let formula = max_split_kec(g, *t, v, u).unwrap().alpha;
                let scan = scan_max_split(g, v, u, kec(*t)).unwrap();
                if formula != scan {
                    return Err(format!("split at {t}: formula {formula}, scan {scan}, ({v},{u}), {g:?}"));
                }
                count += 1;
            }
        }
    }

    for (i, &v) in nbrs.iter().enumerate() {
        let (alpha, _) = max_reduce_2k(h, k, v).unwrap();
        let scan = scan_max_reduce(h, v, conn).unwrap();
        if alpha != scan {
            return Err(format!("(2,k) reduce: formula {alpha}, scan {scan}, v={v}, {h:?}"));
        }
        count += 1;
        for &u in &nbrs[i + 1..] {
            let out = max_split_2k(h, k, v, u).unwrap();
            let scan = scan_max_split(h, v, u, conn).unwrap();
            if out.alpha != scan {
                return Err(format!("(2,k) split: formula {}, scan {scan}, ({v},{u}), {h:?}", out.alpha));
            }
            if !is_2k_conn_in_v(&out.graph, k).unwrap().ok {
                return Err(format!("split graph lost connectivity, ({v},{u}), {h:?}"));
            }
            let residual = out.graph.s_capacity(v) > 0 && out.graph.s_capacity(u) > 0;
            match (&out.blocker, residual) {
                (Some(b), true) => {
                    if !blocks(&out.graph, k, b, v, u).unwrap() || b.wall().len() > 1 {
                        return Err(format!("bad blocker {b:?} for ({v},{u}), {h:?}"));
                    }
                    if is_2k_conn_in_v(&out.graph.split(v, u, 1).unwrap(), k).unwrap().ok {
                        return Err(format!("one more split of ({v},{u}) is still admissible, {h:?}"));
                    }
                }
                (None, false) => {}
                _ => return Err(format!("blocker presence does not match residual capacity, ({v},{u})")),
            }
            count += 1;
        }
    }
    Ok(count)
}
