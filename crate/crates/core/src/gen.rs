//! Seeded random instances.
//!
//! The stream is the reference SplitMix64 with initial state `seed`. Pairs
//! `(u, v)`, `u < v`, are visited in lexicographic order. For each pair one output `r` is drawn and
//! the edge is kept when `(r >> 11) · 2⁻⁵³ < p`; a kept edge then draws one
//! more output `q` and gets capacity `1 + q mod max_cap`.

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{CapGraph, Capacity};

pub fn generate(n: usize, p: f64, max_cap: Capacity, seed: u64) -> Result<CapGraph> {
    if n < 3 {
        return Err(Error::pre(format!("generated instances need n >= 3, got {n}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::pre(format!("edge probability must lie in [0, 1], got {p}")));
    }
    if max_cap == 0 {
        return Err(Error::pre("max_cap must be at least 1"));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut g = CapGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let r = rng.next_u64();
            if ((r >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p {
                let cap = 1 + rng.next_u64() % max_cap;
                g.add_capacity(u, v, cap)?;
            }
        }
    }
    Ok(g)
}
