//! Bisets and the `f` function.
//!
//! A biset is a pair `(outer, inner)` with `inner ⊆ outer`; its wall is
//! `outer − inner`. For a star graph, bisets live on `V` and `s` is always
//! outside the outer set. Hence
//!
//! ```text
//! f(X) = k·|wall(X)| + c(edges from inner to (V + s) − outer)
//! ```
//!
//! counts edges from the inner set to `s`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CapGraph, Capacity, StarGraph, VertexId};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Biset {
    outer: VertexSet,
    inner: VertexSet,
}

impl Biset {
    pub fn new(outer: VertexSet, inner: VertexSet) -> Result<Self> {
        if outer.universe() != inner.universe() {
            return Err(Error::pre("biset sides over different ground sets"));
        }
        if !inner.is_subset(&outer) {
            return Err(Error::pre(format!("inner set {inner:?} is not contained in outer set {outer:?}")));
        }
        Ok(Biset { outer, inner })
    }

    /// `(set, set)`: a biset with empty wall.
    pub fn plain(set: VertexSet) -> Self {
        Biset { outer: set.clone(), inner: set }
    }

    /// `(set + x, set)`; `x` must not be in `set`.
    pub fn with_wall(set: VertexSet, x: VertexId) -> Self {
        let mut outer = set.clone();
        outer.insert(x);
        debug_assert!(!set.contains(x));
        Biset { outer, inner: set }
    }

    pub fn empty(ground: usize) -> Self {
        Biset::plain(VertexSet::empty(ground))
    }

    #[inline]
    pub fn outer(&self) -> &VertexSet {
        &self.outer
    }

    #[inline]
    pub fn inner(&self) -> &VertexSet {
        &self.inner
    }

    pub fn ground(&self) -> usize {
        self.outer.universe()
    }

    pub fn wall(&self) -> VertexSet {
        self.outer.difference(&self.inner)
    }

    /// `(Ω − inner, Ω − outer)` over the biset's own ground set.
    pub fn complement(&self) -> Self {
        Biset { outer: self.inner.complement(), inner: self.outer.complement() }
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground() != other.ground() {
            return Err(Error::pre(format!("biset ground sets differ: {} vs {}", self.ground(), other.ground())));
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Biset { outer: self.outer.union(&other.outer), inner: self.inner.union(&other.inner) })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Biset { outer: self.outer.intersection(&other.outer), inner: self.inner.intersection(&other.inner) })
    }

    /// `X − Y = X ∩ complement(Y)`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.intersect(&other.complement())
    }

    /// Trivial with respect to its ground set: empty inner set or full outer set.
    pub fn is_trivial(&self) -> bool {
        self.inner.is_empty() || self.outer.len() == self.ground()
    }

    /// Same biset over a larger ground (for example `V + s`).
    pub fn with_ground(&self, ground: usize) -> Self {
        Biset { outer: self.outer.with_universe(ground), inner: self.inner.with_universe(ground) }
    }
}

impl fmt::Debug for Biset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.outer, self.inner)
    }
}

/// `f` over an arbitrary graph whose vertex set is the biset's ground.
/// Vertices of `g` beyond the ground count as outside the outer set.
pub fn f_in_graph(g: &CapGraph, k: Capacity, x: &Biset) -> Capacity {
    k * x.wall().len() as Capacity + g.capacity_between(&x.inner, |v| !x.outer.contains(v))
}

/// `f(X)` in a star graph; `X` is a biset on `V`.
pub fn f_value(h: &StarGraph, k: Capacity, x: &Biset) -> Capacity {
    f_in_graph(h.graph(), k, x)
}

fn require_s_neighbor(h: &StarGraph, v: VertexId) -> Result<()> {
    if v >= h.v_count() || h.s_capacity(v) == 0 {
        return Err(Error::pre(format!("vertex {v} is not a neighbor of s")));
    }
    Ok(())
}

/// Whether `x` blocks the pair `(su, sv)`. `u = v` is allowed.
pub fn blocks(h: &StarGraph, k: Capacity, x: &Biset, u: VertexId, v: VertexId) -> Result<bool> {
    require_s_neighbor(h, u)?;
    require_s_neighbor(h, v)?;
    Ok(blocks_unchecked(h, k, x, u, v))
}

pub(crate) fn blocks_unchecked(h: &StarGraph, k: Capacity, x: &Biset, u: VertexId, v: VertexId) -> bool {
    if x.is_trivial() {
        return false;
    }
    let f = f_value(h, k, x);
    let both_inner = x.inner.contains(u) && x.inner.contains(v);
    let both_outer = x.outer.contains(u) && x.outer.contains(v);
    let one_inner = x.inner.contains(u) || x.inner.contains(v);
    (f <= 2 * k + 1 && both_inner) || (f == 2 * k && both_outer && one_inner)
}

/// Whether `x` blocks some pair `(su, sv)` with `u ≠ v`.
pub fn is_horrifying(h: &StarGraph, k: Capacity, x: &Biset) -> bool {
    if x.is_trivial() {
        return false;
    }
    let nbrs = h.s_neighbor_set();
    let in_inner = x.inner.intersection(&nbrs).len();
    let in_outer = x.outer.intersection(&nbrs).len();
    let f = f_value(h, k, x);
    // Distinct u, v both inner; or both in the outer set with one inner.
    let horrifying = (f <= 2 * k + 1 && in_inner >= 2) || (f == 2 * k && in_inner >= 1 && in_outer >= 2);
    debug_assert!(!horrifying || x.wall().len() <= 1, "horrifying biset {x:?} has a wall of size > 1");
    horrifying
}
