//! Exhaustive reference implementations.
//!
//! Everything here works on a dense capacity matrix built once per call and
//! shares no cut code with the fast paths, so agreement between the two is
//! meaningful. Each routine enforces a hard size bound.

use std::ops::ControlFlow;

use crate::biset::Biset;
use crate::conncheck::{ConnVerdict, Witness};
use crate::error::{Error, Result};
use crate::graph::{CapGraph, Capacity, StarGraph, VertexId};
use crate::mincut::CutResult;
use crate::set::VertexSet;

pub const BISET_BOUND: usize = 8;
pub const MINCUT_BOUND: usize = 20;
pub const ADMISSIBLE_BOUND: usize = 6;
pub const OBSTACLE_BOUND: usize = 8;
pub const AUGMENT_VERTEX_BOUND: usize = 5;
pub const AUGMENT_BUDGET_BOUND: Capacity = 6;

fn bound(what: &str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::BoundExceeded(format!("{what} supports at most {limit} vertices, got {n}")));
    }
    Ok(())
}

/// Dense view of a star graph: `cap[u][v]` over `V + s` with `s` last, and
/// the total degree of every vertex.
struct Dense {
    n: usize,
    cap: Vec<Vec<Capacity>>,
    deg: Vec<Capacity>,
}

impl Dense {
    fn of(g: &CapGraph) -> Self {
        let size = g.n();
        let mut cap = vec![vec![0; size]; size];
        for (u, v, c) in g.edges() {
            cap[u][v] = c;
            cap[v][u] = c;
        }
        let deg = cap.iter().map(|row| row.iter().sum()).collect();
        Dense { n: size, cap, deg }
    }

    /// `c(δ(S))` for a mask over the first 64 vertices.
    fn cut(&self, mask: u64) -> Capacity {
        let mut total = 0;
        for u in (0..self.n).filter(|&u| mask >> u & 1 == 1) {
            total += self.deg[u];
            for w in (0..self.n).filter(|&w| mask >> w & 1 == 1) {
                total -= self.cap[u][w];
            }
        }
        total
    }

    /// `k·|wall| + c(inner → everything outside outer)`.
    fn f(&self, k: Capacity, outer: u64, inner: u64) -> Capacity {
        let mut total = k * (outer & !inner).count_ones() as Capacity;
        for u in (0..self.n).filter(|&u| inner >> u & 1 == 1) {
            total += self.deg[u];
            for w in (0..self.n).filter(|&w| outer >> w & 1 == 1) {
                total -= self.cap[u][w];
            }
        }
        total
    }
}

/// Visits every biset on `0..n` as `(outer, inner)` masks, trivial ones
/// included. Each vertex is out, wall or inner according to the base-3
/// digits of a counter, least significant digit first.
pub(crate) fn for_each_biset(n: usize, mut visit: impl FnMut(u64, u64) -> ControlFlow<()>) {
    let mut digits = vec![0u8; n];
    let (mut outer, mut inner) = (0u64, 0u64);
    loop {
        if visit(outer, inner).is_break() {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            match digits[i] {
                1 => {
                    outer |= 1 << i;
                    break;
                }
                2 => {
                    inner |= 1 << i;
                    break;
                }
                _ => {
                    digits[i] = 0;
                    outer &= !(1 << i);
                    inner &= !(1 << i);
                    i += 1;
                }
            }
        }
    }
}

fn is_trivial_mask(n: usize, outer: u64, inner: u64) -> bool {
    inner == 0 || outer.count_ones() as usize == n
}

fn biset_of(n: usize, outer: u64, inner: u64) -> Biset {
    Biset::new(VertexSet::from_mask(n, outer), VertexSet::from_mask(n, inner)).expect("inner is a subset of outer")
}

/// `(2,k)`-connectivity in `V` by evaluating `f` on every nontrivial biset.
/// The first violator in enumeration order is returned as the witness.
pub fn bf_is_2k_conn(h: &StarGraph, k: Capacity) -> Result<ConnVerdict> {
    bf_is_2k_conn_bounded(h, k, BISET_BOUND)
}

pub fn bf_is_2k_conn_bounded(h: &StarGraph, k: Capacity, limit: usize) -> Result<ConnVerdict> {
    let n = h.v_count();
    bound("biset enumeration", n, limit.min(63))?;
    if n < 3 {
        return Err(Error::pre(format!("(2,k)-connectivity needs |V| >= 3, got {n}")));
    }
    if k < 2 {
        return Err(Error::pre(format!("k must be at least 2, got {k}")));
    }
    let dense = Dense::of(h.graph());
    let mut witness = None;
    for_each_biset(n, |outer, inner| {
        if is_trivial_mask(n, outer, inner) {
            return ControlFlow::Continue(());
        }
        let f = dense.f(k, outer, inner);
        if f < 2 * k {
            witness = Some(Witness::Biset { biset: biset_of(n, outer, inner), f });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    Ok(ConnVerdict { ok: witness.is_none(), witness, mincut_calls: 0 })
}

/// Minimum of `c(δ(S))` over `∅ ≠ S ⊊ V`. Ties go to the smallest mask.
pub fn bf_restricted_min_cut(h: &StarGraph) -> Result<CutResult> {
    let n = h.v_count();
    bound("cut enumeration", n, MINCUT_BOUND)?;
    if n < 2 {
        return Err(Error::pre(format!("a cut of V needs |V| >= 2, got {n}")));
    }
    let dense = Dense::of(h.graph());
    let mut best: Option<(Capacity, u64)> = None;
    for mask in 1..(1u64 << n) - 1 {
        let c = dense.cut(mask);
        if best.is_none_or(|(b, _)| c < b) {
            best = Some((c, mask));
        }
    }
    let (value, mask) = best.expect("at least one proper subset");
    Ok(CutResult { value, side: VertexSet::from_mask(n, mask) })
}

fn require_pair(h: &StarGraph, u: VertexId, v: VertexId) -> Result<()> {
    for x in [u, v] {
        if x >= h.v_count() || h.s_capacity(x) == 0 {
            return Err(Error::pre(format!("vertex {x} is not a neighbor of s")));
        }
    }
    Ok(())
}

/// Every nontrivial biset blocking `(su, sv)`, by literal evaluation of the
/// blocking definition. `u = v` is allowed.
pub fn bf_blocking_bisets(h: &StarGraph, k: Capacity, u: VertexId, v: VertexId) -> Result<Vec<Biset>> {
    let n = h.v_count();
    bound("blocking enumeration", n, ADMISSIBLE_BOUND)?;
    require_pair(h, u, v)?;
    let dense = Dense::of(h.graph());
    let (bu, bv) = (1u64 << u, 1u64 << v);
    let mut found = Vec::new();
    for_each_biset(n, |outer, inner| {
        if is_trivial_mask(n, outer, inner) {
            return ControlFlow::Continue(());
        }
        let f = dense.f(k, outer, inner);
        let both_inner = inner & bu != 0 && inner & bv != 0;
        let both_outer = outer & bu != 0 && outer & bv != 0;
        let one_inner = inner & (bu | bv) != 0;
        if (f <= 2 * k + 1 && both_inner) || (f == 2 * k && both_outer && one_inner) {
            found.push(biset_of(n, outer, inner));
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// Admissibility of one split of `(su, sv)` as emptiness of the blocker list.
pub fn bf_admissible(h: &StarGraph, k: Capacity, u: VertexId, v: VertexId) -> Result<bool> {
    Ok(bf_blocking_bisets(h, k, u, v)?.is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstacle {
    pub special: VertexId,
    pub bisets: Vec<Biset>,
}

impl Obstacle {
    /// `N(s) = {t}`: the covering family is empty and only the parity
    /// condition carries content.
    pub fn is_vacuous(&self) -> bool {
        self.bisets.is_empty()
    }
}

/// Searches for a special neighbor `t` and a family of tight wall-`{t}`
/// bisets with pairwise disjoint inner sets covering `N(s) − t`.
pub fn find_obstacle(h: &StarGraph, k: Capacity) -> Result<Option<Obstacle>> {
    let n = h.v_count();
    bound("obstacle search", n, OBSTACLE_BOUND)?;
    if !bf_is_2k_conn(h, k)?.ok {
        return Err(Error::pre("obstacle search requires a graph that is (2,k)-connected in V"));
    }
    if !h.s_degree().is_multiple_of(2) {
        return Err(Error::pre("obstacle search requires an even s-degree"));
    }
    let dense = Dense::of(h.graph());
    let nbr_mask: u64 = h.s_neighbors().iter().map(|&v| 1u64 << v).sum();

    for t in h.s_neighbors() {
        if h.s_capacity(t).is_multiple_of(2) || !bf_is_2k_conn(&h.reduce(t, 1)?, k)?.ok {
            continue;
        }
        let tb = 1u64 << t;
        let mut candidates: Vec<u64> = (1..1u64 << n)
            .filter(|&inner| inner & tb == 0)
            .filter(|&inner| (inner | tb).count_ones() as usize != n)
            .filter(|&inner| dense.f(k, inner | tb, inner) == 2 * k)
            .collect();
        candidates.sort_by_key(|&m| (m.count_ones(), m));
        let targets = nbr_mask & !tb;
        let mut chosen = Vec::new();
        if cover(&candidates, targets, 0, &mut chosen) {
            let bisets = chosen.iter().map(|&inner| biset_of(n, inner | tb, inner)).collect();
            return Ok(Some(Obstacle { special: t, bisets }));
        }
    }
    Ok(None)
}

/// Picks the lowest uncovered target and tries every candidate containing it
/// that avoids the inner sets used so far.
fn cover(candidates: &[u64], uncovered: u64, used: u64, chosen: &mut Vec<u64>) -> bool {
    if uncovered == 0 {
        return true;
    }
    let target = uncovered & uncovered.wrapping_neg();
    for &c in candidates {
        if c & target == 0 || c & used != 0 {
            continue;
        }
        chosen.push(c);
        if cover(candidates, uncovered & !c, used | c, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Re-evaluates the four obstacle conditions literally.
pub fn verify_obstacle(h: &StarGraph, k: Capacity, ob: &Obstacle) -> Result<bool> {
    let n = h.v_count();
    bound("obstacle check", n, OBSTACLE_BOUND)?;
    let t = ob.special;
    if t >= n || h.s_capacity(t).is_multiple_of(2) || !bf_is_2k_conn(&h.reduce(t, 1)?, k)?.ok {
        return Ok(false);
    }
    let dense = Dense::of(h.graph());
    let mut covered = VertexSet::empty(n);
    for (i, b) in ob.bisets.iter().enumerate() {
        if b.ground() != n || b.wall() != VertexSet::singleton(n, t) || b.is_trivial() {
            return Ok(false);
        }
        let mask = |s: &VertexSet| s.iter().map(|v| 1u64 << v).sum::<u64>();
        if dense.f(k, mask(b.outer()), mask(b.inner())) != 2 * k {
            return Ok(false);
        }
        if ob.bisets[..i].iter().any(|other| !other.inner().is_disjoint(b.inner())) {
            return Ok(false);
        }
        covered = covered.union(b.inner());
    }
    Ok(h.s_neighbors().into_iter().filter(|&v| v != t).all(|v| covered.contains(v)))
}

/// Added edges `(u, v, capacity)` and their total.
pub type Augmentation = (Vec<(VertexId, VertexId, Capacity)>, Capacity);

/// Smallest set of added capacities, total at most `budget`, that makes `g`
/// `(2,k)`-connected. Totals are tried in increasing order.
pub fn bf_min_augmentation(g: &CapGraph, k: Capacity, budget: Capacity) -> Result<Option<Augmentation>> {
    let n = g.n();
    bound("augmentation search", n, AUGMENT_VERTEX_BOUND)?;
    if budget > AUGMENT_BUDGET_BOUND {
        return Err(Error::BoundExceeded(format!(
            "augmentation search supports budgets up to {AUGMENT_BUDGET_BOUND}, got {budget}"
        )));
    }
    if n < 3 {
        return Err(Error::pre(format!("(2,k)-connectivity needs |V| >= 3, got {n}")));
    }
    if k < 2 {
        return Err(Error::pre(format!("k must be at least 2, got {k}")));
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut dense = Dense::of(g);
    let mut amounts = vec![0; pairs.len()];
    for total in 0..=budget {
        if distribute(&mut dense, k, &pairs, &mut amounts, 0, total) {
            let added = pairs.iter().zip(&amounts).filter(|(_, &a)| a > 0).map(|(&(u, v), &a)| (u, v, a)).collect();
            return Ok(Some((added, total)));
        }
    }
    Ok(None)
}

/// Enumerates the ways to put exactly `left` units on `pairs[i..]`, updating
/// `dense` in place, and stops at the first connected one.
fn distribute(
    dense: &mut Dense,
    k: Capacity,
    pairs: &[(VertexId, VertexId)],
    amounts: &mut [Capacity],
    i: usize,
    left: Capacity,
) -> bool {
    if i == pairs.len() {
        return left == 0 && plain_conn(dense, k);
    }
    let (u, v) = pairs[i];
    let least = if i + 1 == pairs.len() { left } else { 0 };
    for a in least..=left {
        dense.cap[u][v] += a;
        dense.cap[v][u] += a;
        dense.deg[u] += a;
        dense.deg[v] += a;
        amounts[i] = a;
        let hit = distribute(dense, k, pairs, amounts, i + 1, left - a);
        dense.cap[u][v] -= a;
        dense.cap[v][u] -= a;
        dense.deg[u] -= a;
        dense.deg[v] -= a;
        if hit {
            return true;
        }
    }
    amounts[i] = 0;
    false
}

fn plain_conn(dense: &Dense, k: Capacity) -> bool {
    let n = dense.n;
    let mut ok = true;
    for_each_biset(n, |outer, inner| {
        if !is_trivial_mask(n, outer, inner) && dense.f(k, outer, inner) < 2 * k {
            ok = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    ok
}

/// Largest `α ≤ c(sv)` such that `pred` holds after reducing `sv` by every
/// amount up to `α`.
pub fn scan_max_reduce(
    h: &StarGraph,
    v: VertexId,
    mut pred: impl FnMut(&StarGraph) -> Result<bool>,
) -> Result<Capacity> {
    let mut alpha = 0;
    while alpha < h.s_capacity(v) && pred(&h.reduce(v, alpha + 1)?)? {
        alpha += 1;
    }
    Ok(alpha)
}

/// Largest `α ≤ min(c(su), c(sv))` such that `pred` holds after splitting
/// `(su, sv)` by every amount up to `α`.
pub fn scan_max_split(
    h: &StarGraph,
    u: VertexId,
    v: VertexId,
    mut pred: impl FnMut(&StarGraph) -> Result<bool>,
) -> Result<Capacity> {
    let gamma = h.s_capacity(u).min(h.s_capacity(v));
    let mut alpha = 0;
    while alpha < gamma && pred(&h.split(u, v, alpha + 1)?)? {
        alpha += 1;
    }
    Ok(alpha)
}
