//! Capacity reduction, splitting off, and their maximal versions.
//!
//! The edge-connectivity routines each need a single restricted min cut of
//! the graph where the operation is applied in full (`γ` units):
//!
//! * reducing `sv`: `α = min(γ, γ − k + λ(H_γ))` with `γ = c(sv)`;
//! * splitting `(su, sv)`: `α = min(γ, ⌊γ + (λ(H_γ) − k) / 2⌋)` with
//!   `γ = min(c(su), c(sv))`.
//!
//! The `(2,k)` versions take the minimum of the threshold-`2k` value on `H`
//! and threshold-`k` values on every `H − x`.

use crate::biset::Biset;
use crate::error::{Error, Result};
use crate::graph::{lift, Capacity, StarGraph, VertexId};
use crate::mincut::restricted_min_cut;
use crate::set::VertexSet;

impl StarGraph {
    /// `(H, c)_v^α`: `c(sv)` decreased by `alpha`.
    pub fn reduce(&self, v: VertexId, alpha: Capacity) -> Result<StarGraph> {
        if v >= self.v_count() {
            return Err(Error::pre(format!("vertex {v} is not in the ground set")));
        }
        if alpha > self.s_capacity(v) {
            return Err(Error::pre(format!("cannot reduce c(s{v}) = {} by {alpha}", self.s_capacity(v))));
        }
        let mut h = self.clone();
        let s = h.s();
        h.graph_mut().sub_capacity(s, v, alpha)?;
        Ok(h)
    }

    /// `(H, c)_{u,v}^α`: `alpha` units of `su` and `sv` replaced by `uv`.
    /// For `u = v` the arising loop is dropped.
    pub fn split(&self, u: VertexId, v: VertexId, alpha: Capacity) -> Result<StarGraph> {
        for x in [u, v] {
            if x >= self.v_count() || self.s_capacity(x) == 0 {
                return Err(Error::pre(format!("vertex {x} is not a neighbor of s")));
            }
        }
        let (cu, cv) = (self.s_capacity(u), self.s_capacity(v));
        let s = self.s();
        let mut h = self.clone();
        if u == v {
            if 2 * alpha > cu {
                return Err(Error::pre(format!("cannot split (s{u}, s{u}) {alpha} times with c(s{u}) = {cu}")));
            }
            h.graph_mut().sub_capacity(s, u, 2 * alpha)?;
            return Ok(h);
        }
        if alpha > cu.min(cv) {
            return Err(Error::pre(format!("cannot split (s{u}, s{v}) {alpha} times with capacities {cu} and {cv}")));
        }
        let g = h.graph_mut();
        g.sub_capacity(s, u, alpha)?;
        g.sub_capacity(s, v, alpha)?;
        g.add_capacity(u, v, alpha)?;
        Ok(h)
    }
}

/// Result of a maximal reduction or split at the edge-connectivity level.
#[derive(Clone, Debug)]
pub struct KecOutcome {
    pub alpha: Capacity,
    pub graph: StarGraph,
    /// When residual capacity remains: a tight set `S ⊊ V` containing the
    /// touched vertices.
    pub witness: Option<VertexSet>,
}

fn require_neighbor(h: &StarGraph, v: VertexId) -> Result<()> {
    if v >= h.v_count() || h.s_capacity(v) == 0 {
        return Err(Error::pre(format!("vertex {v} is not a neighbor of s")));
    }
    Ok(())
}

/// Largest `α` with `(H, c)_v^α` `k`-edge-connected in `V`.
///
/// `h` must be `k`-edge-connected in `V`; this is not re-checked.
pub fn max_reduce_kec(h: &StarGraph, k: Capacity, v: VertexId) -> Result<KecOutcome> {
    require_neighbor(h, v)?;
    let gamma = h.s_capacity(v);
    let full = h.reduce(v, gamma)?;
    let cut = restricted_min_cut(&full)?;
    let alpha = if cut.value >= k { gamma } else { gamma.saturating_sub(k - cut.value) };
    let witness = (alpha < gamma).then(|| {
        debug_assert!(cut.side.contains(v));
        cut.side
    });
    Ok(KecOutcome { alpha, graph: h.reduce(v, alpha)?, witness })
}

/// Largest `α` with `(H, c)_{u,v}^α` `k`-edge-connected in `V`, `u ≠ v`.
///
/// `h` must be `k`-edge-connected in `V`; this is not re-checked.
pub fn max_split_kec(h: &StarGraph, k: Capacity, u: VertexId, v: VertexId) -> Result<KecOutcome> {
    require_neighbor(h, u)?;
    require_neighbor(h, v)?;
    if u == v {
        return Err(Error::pre("maximal split needs two distinct neighbors"));
    }
    let gamma = h.s_capacity(u).min(h.s_capacity(v));
    let full = h.split(u, v, gamma)?;
    let cut = restricted_min_cut(&full)?;
    // ⌊γ + (λ − k) / 2⌋, clamped to [0, γ]
    let alpha = if cut.value >= k {
        gamma
    } else {
        let deficit = k - cut.value;
        gamma.saturating_sub(deficit.div_ceil(2))
    };
    let witness = (alpha < gamma).then(|| {
        debug_assert!(cut.side.contains(u) && cut.side.contains(v));
        cut.side
    });
    Ok(KecOutcome { alpha, graph: h.split(u, v, alpha)?, witness })
}

/// Counts restricted min-cut computations made by the `(2,k)` routines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutCounter(pub u64);

/// Largest `α` with `(H, c)_v^α` `(2,k)`-connected in `V`, and the result.
pub fn max_reduce_2k(h: &StarGraph, k: Capacity, v: VertexId) -> Result<(Capacity, StarGraph)> {
    let mut counter = CutCounter::default();
    max_reduce_2k_counted(h, k, v, &mut counter)
}

pub(crate) fn max_reduce_2k_counted(
    h: &StarGraph,
    k: Capacity,
    v: VertexId,
    counter: &mut CutCounter,
) -> Result<(Capacity, StarGraph)> {
    require_neighbor(h, v)?;
    let mut alpha = max_reduce_kec(h, 2 * k, v)?.alpha;
    counter.0 += 1;
    for x in (0..h.v_count()).filter(|&x| x != v) {
        if alpha == 0 {
            break;
        }
        let (hx, original) = h.without(x)?;
        let vx = original.iter().position(|&o| o == v).expect("v survives deleting x");
        alpha = alpha.min(max_reduce_kec(&hx, k, vx)?.alpha);
        counter.0 += 1;
    }
    Ok((alpha, h.reduce(v, alpha)?))
}

/// Result of a maximal `(2,k)` splitting off.
#[derive(Clone, Debug)]
pub struct SplitOutcome {
    pub graph: StarGraph,
    pub alpha: Capacity,
    /// Present exactly when both `c(su)` and `c(sv)` stay positive; it blocks
    /// `(su, sv)` in `graph`.
    pub blocker: Option<Biset>,
    pub mincut_calls: u64,
}

enum Binding {
    Global(Option<VertexSet>),
    Deleted { x: VertexId, witness: Option<VertexSet> },
}

/// Maximal splitting off of `(su, sv)` with `u ≠ v` keeping `(2,k)`-connectivity in `V`.
///
/// The blocker is taken from the first binding constraint in the order:
/// global `2k` cut, then deleted vertices `x ∉ {u, v}` ascending, then `u`,
/// then `v`.
pub fn max_split_2k(h: &StarGraph, k: Capacity, u: VertexId, v: VertexId) -> Result<SplitOutcome> {
    require_neighbor(h, u)?;
    require_neighbor(h, v)?;
    if u == v {
        return Err(Error::pre("maximal (2,k) split needs two distinct neighbors"));
    }
    let ground = h.v_count();
    let global = max_split_kec(h, 2 * k, u, v)?;
    let mut calls = 1;
    let mut alpha = global.alpha;
    let mut binding = Binding::Global(global.witness);

    let deleted = (0..ground).filter(|&x| x != u && x != v).chain([u, v]);
    for x in deleted {
        if alpha == 0 {
            break;
        }
        let (hx, original) = h.without(x)?;
        let local = |w: VertexId| original.iter().position(|&o| o == w).expect("vertex survives deletion");
        let outcome = if x == u {
            max_reduce_kec(&hx, k, local(v))?
        } else if x == v {
            max_reduce_kec(&hx, k, local(u))?
        } else {
            max_split_kec(&hx, k, local(u), local(v))?
        };
        calls += 1;
        if outcome.alpha < alpha {
            alpha = outcome.alpha;
            let witness = outcome.witness.map(|s| lift(&s, &original, ground));
            binding = Binding::Deleted { x, witness };
        }
    }

    let graph = h.split(u, v, alpha)?;
    let residual = graph.s_capacity(u) > 0 && graph.s_capacity(v) > 0;
    let blocker = if residual {
        let built = match binding {
            Binding::Global(Some(s)) => Biset::plain(s),
            Binding::Deleted { x, witness: Some(s) } => Biset::with_wall(s, x),
            _ => return Err(Error::internal("binding constraint of a maximal split has no tight set")),
        };
        Some(built)
    } else {
        None
    };
    Ok(SplitOutcome { graph, alpha, blocker, mincut_calls: calls })
}
