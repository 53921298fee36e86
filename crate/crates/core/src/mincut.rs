//! Minimum cuts by maximum-adjacency ordering and contraction.
//!
//! [`restricted_min_cut`] computes `λ(V)` of a star graph: the minimum of
//! `c(δ(S))` over `∅ ≠ S ⊊ V`, so that no side of the cut is `{s}` alone.
//! Every phase starts its ordering at `s`. The last two vertices of a phase
//! with at least three supernodes are then both different from `s`, so the
//! phase cut separates two vertices of `V` and is admissible. Only the final
//! two-supernode phase would produce the forbidden cut `{s} | V`, and it is
//! skipped.
//!
//! Phases scan a dense attachment array (`O(n²)` per phase) instead of a
//! heap; ties go to the supernode with the smallest original index.

use crate::error::{Error, Result};
use crate::graph::{CapGraph, Capacity, StarGraph, VertexId};
use crate::set::VertexSet;

/// A cut value with one side of the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub value: Capacity,
    /// For star graphs the side not containing `s`, as a subset of `V`.
    pub side: VertexSet,
}

struct Contraction {
    n: usize,
    weight: Vec<Capacity>,
    members: Vec<Vec<VertexId>>,
    label: Vec<VertexId>,
    alive: Vec<usize>,
}

struct Phase {
    order: Vec<usize>,
    attachment: Vec<Capacity>,
}

impl Contraction {
    fn new(g: &CapGraph) -> Self {
        let n = g.n();
        let mut weight = vec![0; n * n];
        for (u, v, c) in g.edges() {
            weight[u * n + v] = c;
            weight[v * n + u] = c;
        }
        Contraction {
            n,
            weight,
            members: (0..n).map(|v| vec![v]).collect(),
            label: (0..n).collect(),
            alive: (0..n).collect(),
        }
    }

    #[inline]
    fn w(&self, a: usize, b: usize) -> Capacity {
        self.weight[a * self.n + b]
    }

    /// One maximum-adjacency ordering of the alive supernodes from `start`.
    fn phase(&self, start: usize) -> Phase {
        let mut attach = vec![0 as Capacity; self.n];
        let mut taken = vec![false; self.n];
        let mut order = Vec::with_capacity(self.alive.len());
        let mut attachment = Vec::with_capacity(self.alive.len());
        let mut next = start;
        let mut next_att = 0;
        loop {
            taken[next] = true;
            order.push(next);
            attachment.push(next_att);
            if order.len() == self.alive.len() {
                break;
            }
            for &j in &self.alive {
                if !taken[j] {
                    attach[j] += self.w(next, j);
                }
            }
            let mut best: Option<usize> = None;
            for &j in &self.alive {
                if taken[j] {
                    continue;
                }
                best = match best {
                    None => Some(j),
                    Some(b) if attach[j] > attach[b] || (attach[j] == attach[b] && self.label[j] < self.label[b]) => {
                        Some(j)
                    }
                    keep => keep,
                };
            }
            next = best.expect("an untaken supernode remains");
            next_att = attach[next];
        }
        Phase { order, attachment }
    }

    fn merge(&mut self, into: usize, from: usize) {
        for &j in &self.alive {
            if j != into && j != from {
                let w = self.w(into, j) + self.w(from, j);
                self.weight[into * self.n + j] = w;
                self.weight[j * self.n + into] = w;
            }
        }
        self.weight[into * self.n + from] = 0;
        self.weight[from * self.n + into] = 0;
        let moved = std::mem::take(&mut self.members[from]);
        self.members[into].extend(moved);
        self.label[into] = self.label[into].min(self.label[from]);
        self.alive.retain(|&j| j != from);
    }

    fn members_of(&self, nodes: &[usize], universe: usize) -> VertexSet {
        VertexSet::from_iter_in(universe, nodes.iter().flat_map(|&j| self.members[j].iter().copied()))
    }

    /// Contracts until `stop` supernodes remain; returns the best phase cut.
    /// `universe` is the size of the returned side's vertex set.
    fn run(mut self, start_vertex: VertexId, stop: usize, universe: usize) -> CutResult {
        let mut best: Option<CutResult> = None;
        while self.alive.len() > stop {
            let phase = self.phase(start_vertex);
            // A zero attachment after the start node means the ordered prefix
            // is disconnected from everything else.
            if let Some(pos) = (2..phase.order.len()).find(|&p| phase.attachment[p] == 0) {
                return CutResult { value: 0, side: self.members_of(&phase.order[pos..], universe) };
            }
            let len = phase.order.len();
            let (last, prev) = (phase.order[len - 1], phase.order[len - 2]);
            let value = phase.attachment[len - 1];
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(CutResult { value, side: self.members_of(&[last], universe) });
            }
            self.merge(prev, last);
        }
        best.expect("at least one phase ran")
    }
}

/// `λ(V)` of a star graph with one minimizing side `S ⊆ V` (`s ∉ S`).
pub fn restricted_min_cut(h: &StarGraph) -> Result<CutResult> {
    if h.v_count() < 2 {
        return Err(Error::pre(format!("restricted min cut needs |V| >= 2, got {}", h.v_count())));
    }
    // The s-supernode is never merged while three or more supernodes remain.
    Ok(Contraction::new(h.graph()).run(h.s(), 2, h.v_count()))
}

/// Ordinary global minimum cut. The reported side never contains vertex 0.
pub fn global_min_cut(g: &CapGraph) -> Result<CutResult> {
    if g.n() < 2 {
        return Err(Error::pre(format!("global min cut needs at least 2 vertices, got {}", g.n())));
    }
    let c = Contraction::new(g);
    // A zero attachment at position 1 already disconnects vertex 0.
    let phase = c.phase(0);
    if let Some(pos) = (1..phase.order.len()).find(|&p| phase.attachment[p] == 0) {
        return Ok(CutResult { value: 0, side: c.members_of(&phase.order[pos..], g.n()) });
    }
    Ok(c.run(0, 1, g.n()))
}

/// Maximum-adjacency ordering of `g` from `start`, with the attachment of
/// the final vertex (the value of a minimum cut separating the last two).
pub fn ma_order(g: &CapGraph, start: VertexId) -> Result<(Vec<VertexId>, Capacity)> {
    if start >= g.n() {
        return Err(Error::pre(format!("start vertex {start} out of range for n={}", g.n())));
    }
    let phase = Contraction::new(g).phase(start);
    let last = *phase.attachment.last().expect("ordering is nonempty");
    Ok((phase.order, last))
}
