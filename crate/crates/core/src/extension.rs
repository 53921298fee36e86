//! Minimal even extensions for `(2,k)`-connectivity.
//!
//! Every vertex starts with an `s`-edge of capacity `2k`, which already makes
//! the star graph `(2,k)`-connected in `V`. The capacities are then reduced
//! greedily, one vertex at a time in the given order, and finally the total
//! is made even by raising the last odd `s`-edge in the order by one.

use crate::check::AssertLevel;
use crate::conncheck::{check_k, is_2k_conn_in_v, u_set};
use crate::error::{Error, Result};
use crate::graph::{CapGraph, Capacity, StarGraph, VertexId};
use crate::splitoff::{max_reduce_2k_counted, CutCounter};

#[derive(Clone, Debug)]
pub struct Extension {
    pub star: StarGraph,
    pub order: Vec<VertexId>,
    /// Vertex whose `s`-edge was raised to make the total even.
    pub parity_fixed_at: Option<VertexId>,
    pub mincut_calls: u64,
}

impl Extension {
    pub fn s_capacities(&self) -> Vec<Capacity> {
        (0..self.star.v_count()).map(|v| self.star.s_capacity(v)).collect()
    }

    pub fn total(&self) -> Capacity {
        self.star.s_degree()
    }
}

fn validate_order(n: usize, order: &[VertexId]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::pre(format!("order is not a permutation of 0..{n}")));
        }
    }
    if order.len() != n {
        return Err(Error::pre(format!("order is not a permutation of 0..{n}")));
    }
    Ok(())
}

/// Computes a minimal even extension of `g`. `order` defaults to ascending
/// vertex index.
pub fn minimal_even_extension(g: &CapGraph, k: Capacity, order: Option<&[VertexId]>) -> Result<Extension> {
    minimal_even_extension_checked(g, k, order, AssertLevel::Off)
}

pub fn minimal_even_extension_checked(
    g: &CapGraph,
    k: Capacity,
    order: Option<&[VertexId]>,
    level: AssertLevel,
) -> Result<Extension> {
    let n = g.n();
    if n < 3 {
        return Err(Error::pre(format!("(2,k)-connectivity needs at least 3 vertices, got {n}")));
    }
    check_k(k)?;
    let order: Vec<VertexId> = match order {
        Some(o) => {
            validate_order(n, o)?;
            o.to_vec()
        }
        None => (0..n).collect(),
    };

    let mut star = StarGraph::isolated(g);
    for v in 0..n {
        star.set_s_capacity(v, 2 * k)?;
    }
    if level.full() && !is_2k_conn_in_v(&star, k)?.ok {
        return Err(Error::internal("initial 2k extension is not (2,k)-connected in V"));
    }

    let mut counter = CutCounter::default();
    for &v in &order {
        if star.s_capacity(v) > 0 {
            star = max_reduce_2k_counted(&star, k, v, &mut counter)?.1;
        }
    }

    let mut parity_fixed_at = None;
    if star.s_degree() % 2 == 1 {
        let v = *order.iter().rev().find(|&&v| star.s_capacity(v) % 2 == 1).expect("an odd total has an odd term");
        star.set_s_capacity(v, star.s_capacity(v) + 1)?;
        parity_fixed_at = Some(v);
    }

    let ext = Extension { star, order, parity_fixed_at, mincut_calls: counter.0 };
    if level.cheap() {
        verify_extension(&ext, k, level)?;
    }
    Ok(ext)
}

/// Re-checks the structural properties of a minimal even extension: even
/// total (cheap); `(2,k)`-connectivity, even capacities on `U`, and no
/// feasible double reduction (full).
pub fn verify_extension(ext: &Extension, k: Capacity, level: AssertLevel) -> Result<()> {
    let h = &ext.star;
    if !h.s_degree().is_multiple_of(2) {
        return Err(Error::internal("extension has odd s-degree"));
    }
    if !level.full() {
        return Ok(());
    }
    if !is_2k_conn_in_v(h, k)?.ok {
        return Err(Error::internal("extension is not (2,k)-connected in V"));
    }
    for v in u_set(h, k)?.iter() {
        if !h.s_capacity(v).is_multiple_of(2) {
            return Err(Error::internal(format!("vertex {v} is in U but c(s{v}) is odd")));
        }
    }
    for v in h.s_neighbors() {
        if h.s_capacity(v) >= 2 && is_2k_conn_in_v(&h.reduce(v, 2)?, k)?.ok {
            return Err(Error::internal(format!("c(s{v}) can still be reduced by 2")));
        }
    }
    Ok(())
}
