//! Deterministic constructions and a seeded random generator.

use std::collections::HashMap;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Vertex names `v0, v1, ...`, zero padded so that name order is index order.
pub fn vertex_names(n: usize) -> Vec<String> {
    let w = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0w$}")).collect()
}

fn edge_name(i: usize, m: usize) -> String {
    let w = m.saturating_sub(1).to_string().len();
    format!("e{i:0w$}")
}

fn build(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
    let m = edges.len();
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(i, mut vs)| {
            vs.sort_unstable();
            (edge_name(i, m), vs)
        })
        .collect();
    Hypergraph::from_parts(vertex_names(n), edges)
}

fn combinations(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < q - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, q, cur, out);
            cur.pop();
        }
    }
    rec(0, n, q, &mut cur, &mut out);
    out
}

/// `K_n^q`: every `q`-subset of `n` vertices is an edge.
pub fn complete_uniform(n: usize, q: usize) -> Result<Hypergraph> {
    if q < 2 || q > n {
        return Err(Error::Invalid(format!("complete_uniform needs 2 <= q <= n, got n={n} q={q}")));
    }
    Ok(build(n, combinations(n, q)))
}

/// Edgeless hypergraph on `n` vertices.
pub fn edgeless(n: usize) -> Hypergraph {
    build(n, Vec::new())
}

pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::Invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect()))
}

pub fn path(n: usize) -> Result<Hypergraph> {
    if n < 1 {
        return Err(Error::Invalid("path needs n >= 1".into()));
    }
    Ok(build(n, (1..n).map(|i| vec![i - 1, i]).collect()))
}

/// `tH`: each edge replaced by `t` parallel copies named `<edge>.<k>`.
pub fn t_fold(h: &Hypergraph, t: usize) -> Result<Hypergraph> {
    if t < 1 {
        return Err(Error::Invalid("t_fold needs t >= 1".into()));
    }
    if t == 1 {
        return Ok(h.clone());
    }
    let w = (t - 1).to_string().len();
    let mut edges = Vec::with_capacity(h.size() * t);
    for e in h.edges() {
        for k in 0..t {
            edges.push((format!("{}.{k:0w$}", e.name()), e.vertices().to_vec()));
        }
    }
    Ok(Hypergraph::from_parts(h.vertices().to_vec(), edges))
}

/// Complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push(vec![i, a + j]);
        }
    }
    build(a + b, edges)
}

/// Parameters for [`random_hypergraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    pub max_arity: usize,
    pub max_mult: usize,
    pub connected: bool,
}

pub fn random_hypergraph(spec: RandomSpec, seed: u64) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(spec, &mut rng)
}

/// Same as [`random_hypergraph`] but drawing from a caller-owned generator.
pub fn random_with<R: Rng>(spec: RandomSpec, rng: &mut R) -> Result<Hypergraph> {
    let RandomSpec {
        n,
        m,
        max_arity,
        max_mult,
        connected,
    } = spec;
    if max_arity < 2 || max_mult < 1 {
        return Err(Error::Invalid("random_hypergraph needs max_arity >= 2 and max_mult >= 1".into()));
    }
    if n < 2 && m > 0 {
        return Err(Error::Invalid("edges need at least two vertices".into()));
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut count: HashMap<Vec<usize>, usize> = HashMap::new();
    let max_arity = max_arity.min(n.max(2));
    if connected && n > 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut covered = 1;
        while covered < n {
            let k = rng.random_range(2..=max_arity).min(n - covered + 1);
            let mut e = vec![order[rng.random_range(0..covered)]];
            e.extend_from_slice(&order[covered..covered + k - 1]);
            covered += k - 1;
            e.sort_unstable();
            *count.entry(e.clone()).or_default() += 1;
            edges.push(e);
        }
        if edges.len() > m {
            return Err(Error::Invalid(format!(
                "cannot connect {n} vertices with {m} edges"
            )));
        }
    }
    let all: Vec<usize> = (0..n).collect();
    while edges.len() < m {
        let mut placed = false;
        for _ in 0..200 {
            let k = rng.random_range(2..=max_arity);
            let mut e: Vec<usize> = all.choose_multiple(rng, k).copied().collect();
            e.sort_unstable();
            let c = count.entry(e.clone()).or_default();
            if *c < max_mult {
                *c += 1;
                edges.push(e);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Invalid(format!(
                "cannot place {m} edges on {n} vertices with multiplicity <= {max_mult}"
            )));
        }
    }
    Ok(build(n, edges))
}
