//! Connectivity predicates in `V` for star graphs.
//!
//! `(2,k)`-connectivity in `V` splits into one global condition and one
//! condition per deleted vertex: `λ(V) ≥ 2k` in `H`, and `λ(V − x) ≥ k` in
//! `H − x` for every `x ∈ V`. A failure of the second kind is reported as a
//! biset `(S + x, S)` with a one-vertex wall.

use crate::biset::{f_value, Biset};
use crate::error::{Error, Result};
use crate::graph::{lift, Capacity, StarGraph, VertexId};
use crate::mincut::{restricted_min_cut, CutResult};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A cut `S ⊆ V` whose capacity is below the requirement.
    Cut(CutResult),
    /// A nontrivial biset whose `f` value is below `2k`.
    Biset { biset: Biset, f: Capacity },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnVerdict {
    pub ok: bool,
    pub witness: Option<Witness>,
    /// Number of restricted min-cut computations performed.
    pub mincut_calls: u64,
}

impl ConnVerdict {
    fn pass(mincut_calls: u64) -> Self {
        ConnVerdict { ok: true, witness: None, mincut_calls }
    }

    fn fail(witness: Witness, mincut_calls: u64) -> Self {
        ConnVerdict { ok: false, witness: Some(witness), mincut_calls }
    }
}

pub(crate) fn check_k(k: Capacity) -> Result<()> {
    if k < 2 {
        return Err(Error::pre(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

pub(crate) fn check_ground(h: &StarGraph) -> Result<()> {
    if h.v_count() < 3 {
        return Err(Error::pre(format!("(2,k)-connectivity needs |V| >= 3, got {}", h.v_count())));
    }
    Ok(())
}

/// `k`-edge-connectivity in `V`: `λ(V) ≥ k`.
pub fn is_kec_in_v(h: &StarGraph, k: Capacity) -> Result<ConnVerdict> {
    let cut = restricted_min_cut(h)?;
    Ok(if cut.value >= k { ConnVerdict::pass(1) } else { ConnVerdict::fail(Witness::Cut(cut), 1) })
}

/// `(2,k)`-connectivity in `V`.
pub fn is_2k_conn_in_v(h: &StarGraph, k: Capacity) -> Result<ConnVerdict> {
    check_ground(h)?;
    check_k(k)?;
    let cut = restricted_min_cut(h)?;
    let mut calls = 1;
    if cut.value < 2 * k {
        return Ok(ConnVerdict::fail(Witness::Cut(cut), calls));
    }
    for x in 0..h.v_count() {
        let (hx, original) = h.without(x)?;
        let cut = restricted_min_cut(&hx)?;
        calls += 1;
        if cut.value < k {
            let inner = lift(&cut.side, &original, h.v_count());
            let biset = Biset::with_wall(inner, x);
            let f = f_value(h, k, &biset);
            return Ok(ConnVerdict::fail(Witness::Biset { biset, f }, calls));
        }
    }
    Ok(ConnVerdict::pass(calls))
}

fn require_neighbor(h: &StarGraph, v: VertexId) -> Result<()> {
    if v >= h.v_count() || h.s_capacity(v) == 0 {
        return Err(Error::pre(format!("vertex {v} is not a neighbor of s")));
    }
    Ok(())
}

/// Whether splitting off one unit of `(su, sv)` keeps `(2,k)`-connectivity in `V`.
pub fn is_pair_admissible(h: &StarGraph, k: Capacity, u: VertexId, v: VertexId) -> Result<bool> {
    require_neighbor(h, u)?;
    require_neighbor(h, v)?;
    if u == v && h.s_capacity(u) < 2 {
        return Err(Error::pre(format!("splitting (s{u}, s{u}) needs c(s{u}) >= 2")));
    }
    let split = h.split(u, v, 1)?;
    Ok(is_2k_conn_in_v(&split, k)?.ok)
}

/// `U = { v : reducing c(sv) by one keeps (2,k)-connectivity in V }`.
///
/// Vertices with `c(sv) = 0` are excluded: the reduction is undefined for them.
pub fn u_set(h: &StarGraph, k: Capacity) -> Result<VertexSet> {
    if !is_2k_conn_in_v(h, k)?.ok {
        return Err(Error::pre("u_set requires a graph that is (2,k)-connected in V"));
    }
    let mut u = VertexSet::empty(h.v_count());
    for v in h.s_neighbors() {
        if is_2k_conn_in_v(&h.reduce(v, 1)?, k)?.ok {
            u.insert(v);
        }
    }
    Ok(u)
}
