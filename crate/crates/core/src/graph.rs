//! Capacitated undirected graphs and cut arithmetic.
//!
//! Vertices are dense indices `0..n`. A [`StarGraph`] is a [`CapGraph`] on
//! `n + 1` vertices whose last vertex is the designated external vertex `s`;
//! the remaining vertices form the ground set `V`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::VertexSet;

pub type VertexId = usize;
pub type Capacity = u64;

/// Largest capacity accepted on a single input edge.
pub const MAX_INPUT_CAPACITY: Capacity = 1 << 32;

/// Undirected simple graph with strictly positive integer capacities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapGraph {
    adj: Vec<BTreeMap<VertexId, Capacity>>,
    edges: usize,
}

impl CapGraph {
    pub fn new(n: usize) -> Self {
        CapGraph { adj: vec![BTreeMap::new(); n], edges: 0 }
    }

    /// Builds a graph from `(u, v, capacity)` triples. Pairs repeating an
    /// earlier pair are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId, Capacity)>) -> Result<Self> {
        let mut g = CapGraph::new(n);
        for (u, v, c) in edges {
            g.check_pair(u, v)?;
            if g.capacity(u, v) > 0 {
                return Err(Error::pre(format!("duplicate edge {u}-{v}")));
            }
            if c == 0 {
                return Err(Error::pre(format!("edge {u}-{v} has capacity 0")));
            }
            g.add_capacity(u, v, c)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of vertex pairs with positive capacity.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// `c(u, v)`, zero when the edge is absent.
    #[inline]
    pub fn capacity(&self, u: VertexId, v: VertexId) -> Capacity {
        self.adj.get(u).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    /// Neighbors of `v` with their capacities, in increasing index order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Capacity)> + '_ {
        self.adj[v].iter().map(|(&u, &c)| (u, c))
    }

    pub fn degree(&self, v: VertexId) -> Capacity {
        self.adj[v].values().sum()
    }

    /// Every edge once, as `(u, v, c)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Capacity)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, m)| m.range(u + 1..).map(move |(&v, &c)| (u, v, c)))
    }

    pub fn total_capacity(&self) -> Capacity {
        self.edges().map(|(_, _, c)| c).sum()
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        if u >= self.n() || v >= self.n() {
            return Err(Error::pre(format!("vertex pair {u}-{v} out of range for n={}", self.n())));
        }
        if u == v {
            return Err(Error::pre(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    /// Adds `amount` to `c(u, v)`, creating the edge if needed.
    pub fn add_capacity(&mut self, u: VertexId, v: VertexId, amount: Capacity) -> Result<()> {
        self.check_pair(u, v)?;
        if amount == 0 {
            return Ok(());
        }
        let slot = self.adj[u].entry(v).or_insert(0);
        if *slot == 0 {
            self.edges += 1;
        }
        *slot += amount;
        let c = *slot;
        self.adj[v].insert(u, c);
        Ok(())
    }

    /// Subtracts `amount` from `c(u, v)`, deleting the edge when it reaches zero.
    pub fn sub_capacity(&mut self, u: VertexId, v: VertexId, amount: Capacity) -> Result<()> {
        self.check_pair(u, v)?;
        let current = self.capacity(u, v);
        if current < amount {
            return Err(Error::pre(format!("c({u},{v}) = {current} is less than {amount}")));
        }
        if amount == 0 {
            return Ok(());
        }
        if current == amount {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
            self.edges -= 1;
        } else {
            self.adj[u].insert(v, current - amount);
            self.adj[v].insert(u, current - amount);
        }
        Ok(())
    }

    /// `c(δ(S))`: capacity of edges with exactly one end in `set`.
    pub fn cut_capacity(&self, set: &VertexSet) -> Capacity {
        self.capacity_between(set, |v| !set.contains(v))
    }

    /// `c(δ(X, Y))`: capacity between `X − Y` and `Y − X`.
    pub fn delta_between(&self, x: &VertexSet, y: &VertexSet) -> Capacity {
        let x_only = x.difference(y);
        let y_only = y.difference(x);
        self.capacity_between(&x_only, |v| y_only.contains(v))
    }

    /// `c(δ̄(X, Y))`: capacity between `X ∩ Y` and `V − (X ∪ Y)`.
    pub fn delta_bar(&self, x: &VertexSet, y: &VertexSet) -> Capacity {
        let both = x.intersection(y);
        let either = x.union(y);
        self.capacity_between(&both, |v| !either.contains(v))
    }

    /// Capacity of edges from members of `from` to vertices accepted by `to`.
    pub(crate) fn capacity_between(&self, from: &VertexSet, to: impl Fn(VertexId) -> bool) -> Capacity {
        from.iter()
            .filter(|&u| u < self.n())
            .flat_map(|u| self.adj[u].iter())
            .filter(|(&v, _)| to(v))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Deletes vertex `x` and every edge at it.
    ///
    /// Remaining vertices keep their relative order: old index `i > x`
    /// becomes `i - 1`. The returned table maps new indices to old ones.
    pub fn remove_vertex(&self, x: VertexId) -> Result<(CapGraph, Vec<VertexId>)> {
        if x >= self.n() {
            return Err(Error::pre(format!("vertex {x} out of range for n={}", self.n())));
        }
        if self.n() < 2 {
            return Err(Error::pre("removing the only vertex leaves an empty graph"));
        }
        let original: Vec<VertexId> = (0..self.n()).filter(|&v| v != x).collect();
        let renumber = |v: VertexId| if v > x { v - 1 } else { v };
        let mut g = CapGraph::new(self.n() - 1);
        for (u, v, c) in self.edges() {
            if u != x && v != x {
                g.add_capacity(renumber(u), renumber(v), c)?;
            }
        }
        Ok((g, original))
    }
}

/// A capacitated graph on `V + s` with `s` the highest-indexed vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGraph {
    graph: CapGraph,
}

impl StarGraph {
    /// Extends `g` with an isolated external vertex.
    pub fn isolated(g: &CapGraph) -> Self {
        let mut graph = CapGraph::new(g.n() + 1);
        for (u, v, c) in g.edges() {
            graph.add_capacity(u, v, c).expect("edge copied from a valid graph");
        }
        StarGraph { graph }
    }

    /// Wraps a graph whose last vertex plays the role of `s`.
    pub fn from_graph(graph: CapGraph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::pre("a star graph needs at least the external vertex"));
        }
        Ok(StarGraph { graph })
    }

    /// Makes vertex `s` of `g` the external vertex. The other vertices keep
    /// their relative order; the table maps ground indices back to `g`.
    pub fn with_external(g: &CapGraph, s: VertexId) -> Result<(Self, Vec<VertexId>)> {
        if s >= g.n() {
            return Err(Error::pre(format!("vertex {s} out of range for n={}", g.n())));
        }
        let mut original: Vec<VertexId> = (0..g.n()).filter(|&v| v != s).chain([s]).collect();
        let mut index = vec![0; g.n()];
        for (new, &old) in original.iter().enumerate() {
            index[old] = new;
        }
        let mut graph = CapGraph::new(g.n());
        for (u, v, c) in g.edges() {
            graph.add_capacity(index[u], index[v], c)?;
        }
        original.pop();
        Ok((StarGraph { graph }, original))
    }

    #[inline]
    pub fn graph(&self) -> &CapGraph {
        &self.graph
    }

    pub(crate) fn graph_mut(&mut self) -> &mut CapGraph {
        &mut self.graph
    }

    /// `|V|`, not counting `s`.
    #[inline]
    pub fn v_count(&self) -> usize {
        self.graph.n() - 1
    }

    #[inline]
    pub fn s(&self) -> VertexId {
        self.graph.n() - 1
    }

    /// The ground set `V` as a vertex set.
    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.v_count())
    }

    /// `c(sv)`.
    #[inline]
    pub fn s_capacity(&self, v: VertexId) -> Capacity {
        self.graph.capacity(self.s(), v)
    }

    /// `c(δ(s))`.
    pub fn s_degree(&self) -> Capacity {
        self.graph.degree(self.s())
    }

    /// `N(s)` in increasing order.
    pub fn s_neighbors(&self) -> Vec<VertexId> {
        self.graph.neighbors(self.s()).map(|(v, _)| v).collect()
    }

    pub fn s_neighbor_set(&self) -> VertexSet {
        VertexSet::from_iter_in(self.v_count(), self.graph.neighbors(self.s()).map(|(v, _)| v))
    }

    pub fn is_s_isolated(&self) -> bool {
        self.graph.neighbors(self.s()).next().is_none()
    }

    /// Sets `c(sv)` to `cap`.
    pub fn set_s_capacity(&mut self, v: VertexId, cap: Capacity) -> Result<()> {
        let s = self.s();
        let current = self.s_capacity(v);
        if cap >= current {
            self.graph.add_capacity(s, v, cap - current)
        } else {
            self.graph.sub_capacity(s, v, current - cap)
        }
    }

    /// `c(δ(S))` for `S ⊆ V`; `s` is always on the far side.
    pub fn cut_capacity(&self, set: &VertexSet) -> Capacity {
        self.graph.capacity_between(set, |v| !set.contains(v))
    }

    /// Deletes `x ∈ V`. The result is a star graph on `V − x` (with `s` again
    /// last); the table maps its ground indices back to this graph.
    pub fn without(&self, x: VertexId) -> Result<(StarGraph, Vec<VertexId>)> {
        if x >= self.v_count() {
            return Err(Error::pre(format!("vertex {x} is not in the ground set")));
        }
        let (graph, mut original) = self.graph.remove_vertex(x)?;
        original.pop();
        Ok((StarGraph { graph }, original))
    }

    /// Input graph with `s` deleted.
    pub fn without_s(&self) -> CapGraph {
        self.graph.remove_vertex(self.s()).expect("s is a vertex").0
    }
}

/// Maps a set over a vertex-deleted graph back to the parent ground set.
pub fn lift(set: &VertexSet, original: &[VertexId], universe: usize) -> VertexSet {
    VertexSet::from_iter_in(universe, set.iter().map(|v| original[v]))
}
