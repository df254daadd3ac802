#![allow(dead_code)]

use hgpart::generators::{random_hypergraph, RandomSpec};
use hgpart::{Hypergraph, VectorFunction};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn spec(n: usize, m: usize, connected: bool) -> RandomSpec {
    RandomSpec {
        n,
        m,
        max_arity: 3,
        max_mult: 2,
        connected,
    }
}

/// Random hypergraph with `1..=max_n` vertices.
pub fn hypergraph(max_n: usize, connected: bool) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n, 0usize..12, any::<u64>()).prop_map(move |(n, extra, seed)| {
        // half the available edge slots, so rejection sampling never stalls
        let slots = n * (n - 1) / 2 + n * (n - 1) * n.saturating_sub(2) / 6;
        let m = if n == 1 { 0 } else { (n - 1 + extra).min(slots.max(n - 1)) };
        random_hypergraph(spec(n, m, connected), seed).expect("spec is feasible")
    })
}

/// Random `f` with `sum_i f_i(v) = d(v) + slack(v)`, `slack` in `0..=max_slack`.
pub fn degree_function(h: &Hypergraph, p: usize, max_slack: u32, seed: u64) -> VectorFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = h
        .degrees()
        .into_iter()
        .map(|d| {
            let total = d as u32 + rng.random_range(0..=max_slack);
            let mut r = vec![0u32; p];
            for _ in 0..total {
                r[rng.random_range(0..p)] += 1;
            }
            r
        })
        .collect();
    VectorFunction::new(p, rows).unwrap()
}

pub fn names(h: &Hypergraph, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| h.vertex(i).to_string()).collect()
}
