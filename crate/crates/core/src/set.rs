//! Bit-mask vertex sets.
//!
//! A [`VertexSet`] carries the size of its universe so that complements
//! are well defined. Universes of up to 64 vertices store a single inline
//! word; larger universes spill to the heap.

use std::fmt;

use smallvec::SmallVec;

use crate::graph::VertexId;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { universe, words: smallvec::smallvec![0; universe.div_ceil(WORD)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn singleton(universe: usize, v: VertexId) -> Self {
        let mut set = Self::empty(universe);
        set.insert(v);
        set
    }

    /// Builds a set from a low-order bit mask (bit `i` = vertex `i`). Bits at or
    /// beyond the universe are dropped.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe >= WORD { u64::MAX } else { (1u64 << universe) - 1 };
            set.words[0] = mask & keep;
        }
        set
    }

    pub fn from_iter_in(universe: usize, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut set = Self::empty(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Panics if `v` lies outside the universe.
    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        assert!(v < self.universe, "vertex {v} outside universe of size {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    /// Vertices beyond the universe are never members.
    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<VertexId> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    /// Same members over a different universe. Panics if a member does not fit.
    pub fn with_universe(&self, universe: usize) -> Self {
        Self::from_iter_in(universe, self.iter())
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
