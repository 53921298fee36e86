//! Complete admissible splitting off and the augmentation pipeline.
//!
//! Both procedures start from a minimal even extension and split pairs of
//! `s`-edges maximally until `s` is isolated. The naive one visits every pair
//! of the initial neighbor list once. The fast one keeps a biset `X` that
//! records which pairs are known to be blocked, and needs only a linear
//! number of maximal splits.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::biset::{blocks_unchecked, f_value, is_horrifying, Biset};
use crate::check::{AssertLevel, FULL_ORACLE_LIMIT};
use crate::conncheck::is_2k_conn_in_v;
use crate::error::{Error, Result};
use crate::extension::{minimal_even_extension_checked, Extension};
use crate::graph::{CapGraph, Capacity, StarGraph, VertexId};
use crate::oracle;
use crate::set::VertexSet;
use crate::splitoff::{max_split_2k, SplitOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    Naive,
    Fast,
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Algo::Naive),
            "fast" => Ok(Algo::Fast),
            other => Err(format!("unknown algorithm `{other}` (expected naive or fast)")),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Naive => "naive",
            Algo::Fast => "fast",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitStats {
    /// Loop iterations (fast) or pairs visited with both endpoints alive (naive).
    pub iterations: u64,
    pub maximal_splits: u64,
    /// Restricted min-cut computations, including those of the extension
    /// when produced by [`augment`].
    pub mincut_calls: u64,
    /// `|N(s)|` of the extension the splitting started from.
    pub initial_neighbors: usize,
    /// Progress measure `|N(s)| + |N(s) − X_O|` before the first and after
    /// every iteration. Empty for the naive procedure.
    pub m_trace: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentationResult {
    /// Added edges `(u, v, capacity)` with `u < v`, merged per pair, sorted.
    pub added: Vec<(VertexId, VertexId, Capacity)>,
    pub total: Capacity,
    pub stats: SplitStats,
}

struct Splitter {
    h: StarGraph,
    k: Capacity,
    level: AssertLevel,
    added: BTreeMap<(VertexId, VertexId), Capacity>,
    stats: SplitStats,
}

impl Splitter {
    fn new(ext: &Extension, k: Capacity, level: AssertLevel) -> Result<Self> {
        if !ext.star.s_degree().is_multiple_of(2) {
            return Err(Error::pre("extension has odd s-degree"));
        }
        let stats = SplitStats { initial_neighbors: ext.star.s_neighbors().len(), ..SplitStats::default() };
        Ok(Splitter { h: ext.star.clone(), k, level, added: BTreeMap::new(), stats })
    }

    fn split(&mut self, u: VertexId, v: VertexId) -> Result<SplitOutcome> {
        let out = max_split_2k(&self.h, self.k, u, v)?;
        self.stats.maximal_splits += 1;
        self.stats.mincut_calls += out.mincut_calls;
        if out.alpha > 0 {
            *self.added.entry((u.min(v), u.max(v))).or_default() += out.alpha;
        }
        if self.level.cheap() {
            if let Some(b) = &out.blocker {
                if !blocks_unchecked(&out.graph, self.k, b, u, v) {
                    return Err(Error::internal(format!("returned biset {b:?} does not block (s{u}, s{v})")));
                }
            }
        }
        self.h = out.graph.clone();
        if self.level.full() {
            self.full_step_check()?;
        }
        Ok(out)
    }

    fn full_step_check(&self) -> Result<()> {
        let h = &self.h;
        if !is_2k_conn_in_v(h, self.k)?.ok {
            return Err(Error::internal("split graph is not (2,k)-connected in V"));
        }
        if h.v_count() <= FULL_ORACLE_LIMIT {
            if !oracle::bf_is_2k_conn(h, self.k)?.ok {
                return Err(Error::internal("biset enumeration disagrees: split graph is not (2,k)-connected"));
            }
            if let Some(obstacle) = oracle::find_obstacle(h, self.k)? {
                return Err(Error::internal(format!("split graph contains an obstacle at {}", obstacle.special)));
            }
        }
        Ok(())
    }

    fn finish(self, ext: &Extension) -> Result<AugmentationResult> {
        if !self.h.is_s_isolated() {
            return Err(Error::internal(format!(
                "s is still adjacent to {:?} after complete splitting",
                self.h.s_neighbors()
            )));
        }
        let added: Vec<_> = self.added.into_iter().map(|((u, v), c)| (u, v, c)).collect();
        let total: Capacity = added.iter().map(|e| e.2).sum();
        if self.level.cheap() && 2 * total != ext.total() {
            return Err(Error::internal(format!("added {total} but the extension has s-degree {}", ext.total())));
        }
        Ok(AugmentationResult { added, total, stats: self.stats })
    }
}

/// Splits every pair of the initial neighbor list once, in lexicographic
/// order. Pairs with a vanished endpoint are skipped.
pub fn naive_complete_split(ext: &Extension, k: Capacity, level: AssertLevel) -> Result<AugmentationResult> {
    let mut sp = Splitter::new(ext, k, level)?;
    let nbrs = sp.h.s_neighbors();
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            if sp.h.s_capacity(u) == 0 {
                break;
            }
            if sp.h.s_capacity(v) == 0 {
                continue;
            }
            sp.stats.iterations += 1;
            sp.split(u, v)?;
        }
    }
    let bound = (nbrs.len() * nbrs.len().saturating_sub(1) / 2) as u64;
    if level.cheap() && sp.stats.maximal_splits > bound {
        return Err(Error::internal(format!("{} maximal splits exceed {bound}", sp.stats.maximal_splits)));
    }
    sp.finish(ext)
}

fn progress(h: &StarGraph, x: &Biset) -> usize {
    let nbrs = h.s_neighbor_set();
    nbrs.len() + nbrs.difference(x.outer()).len()
}

fn smallest(set: VertexSet) -> Option<VertexId> {
    set.first()
}

/// Complete admissible splitting off with linearly many maximal splits.
pub fn fast_complete_split(ext: &Extension, k: Capacity, level: AssertLevel) -> Result<AugmentationResult> {
    let mut sp = Splitter::new(ext, k, level)?;
    let n = sp.h.v_count();
    let budget = 4 * n as u64 + 2;
    let mut x = Biset::empty(n);
    sp.stats.m_trace.push(progress(&sp.h, &x));

    while sp.h.s_neighbors().len() >= 2 {
        if sp.stats.iterations == budget {
            return Err(Error::internal(format!("iteration budget {budget} exhausted")));
        }
        sp.stats.iterations += 1;
        let horrifying = is_horrifying(&sp.h, k, &x);

        if !horrifying {
            let nbrs = sp.h.s_neighbors();
            let out = sp.split(nbrs[0], nbrs[1])?;
            if let Some(b) = out.blocker {
                x = b;
            }
        } else {
            let nbrs = sp.h.s_neighbor_set();
            let u = smallest(x.inner().intersection(&nbrs)).expect("a horrifying biset has an inner neighbor");
            let v = smallest(nbrs.difference(x.outer()))
                .ok_or_else(|| Error::internal("every neighbor of s lies in the outer set of X"))?;
            let out = sp.split(u, v)?;
            if let Some(y) = out.blocker {
                let xy = x.union(&y)?;
                if is_horrifying(&sp.h, k, &xy) {
                    x = xy;
                } else if x.inner().intersection(&sp.h.s_neighbor_set()).is_subset(y.inner()) {
                    x = y;
                } else {
                    let nbrs = sp.h.s_neighbor_set();
                    let z = smallest(x.inner().difference(y.inner()).intersection(&nbrs))
                        .expect("the subset test failed, so a witness exists");
                    let out = sp.split(v, z)?;
                    if let Some(zb) = out.blocker {
                        x = xy.union(&zb)?;
                    }
                }
            }
        }

        let m = progress(&sp.h, &x);
        if level.cheap() {
            check_state(&sp.h, k, &x, horrifying, m, &sp.stats.m_trace)?;
        }
        sp.stats.m_trace.push(m);
    }

    if level.cheap() && sp.stats.maximal_splits > 2 * budget {
        return Err(Error::internal(format!("{} maximal splits exceed {}", sp.stats.maximal_splits, 2 * budget)));
    }
    sp.finish(ext)
}

/// Bounds on `X` and the progress measure after one iteration. `else_branch`
/// tells whether the iteration started from a horrifying `X`.
fn check_state(h: &StarGraph, k: Capacity, x: &Biset, else_branch: bool, m: usize, trace: &[usize]) -> Result<()> {
    let f = f_value(h, k, x);
    if f > 2 * k + 1 || x.wall().len() > 1 || x.outer().len() == h.v_count() {
        return Err(Error::internal(format!("X = {x:?} violates its bounds (f = {f})")));
    }
    let prev = *trace.last().expect("trace starts with the initial measure");
    if m > prev {
        return Err(Error::internal(format!("progress measure grew from {prev} to {m}")));
    }
    if else_branch && m == prev {
        return Err(Error::internal(format!("progress measure stalled at {m} in a horrifying step")));
    }
    if trace.len() >= 2 && m >= trace[trace.len() - 2] {
        return Err(Error::internal(format!("progress measure did not drop over two iterations (still {m})")));
    }
    Ok(())
}

/// Extension, complete splitting, and deletion of `s`. Returns the augmented
/// graph together with the list of added edges.
pub fn augment(g: &CapGraph, k: Capacity, algo: Algo, level: AssertLevel) -> Result<(CapGraph, AugmentationResult)> {
    let ext = minimal_even_extension_checked(g, k, None, level)?;
    let mut result = match algo {
        Algo::Naive => naive_complete_split(&ext, k, level)?,
        Algo::Fast => fast_complete_split(&ext, k, level)?,
    };
    result.stats.mincut_calls += ext.mincut_calls;

    let mut out = g.clone();
    for &(u, v, c) in &result.added {
        out.add_capacity(u, v, c)?;
    }
    if level.full() {
        let h = StarGraph::isolated(&out);
        if !is_2k_conn_in_v(&h, k)?.ok {
            return Err(Error::internal("augmented graph is not (2,k)-connected"));
        }
        if h.v_count() <= FULL_ORACLE_LIMIT && !oracle::bf_is_2k_conn(&h, k)?.ok {
            return Err(Error::internal("biset enumeration rejects the augmented graph"));
        }
    }
    Ok((out, result))
}
