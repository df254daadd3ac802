//! Strict degeneracy by peeling, and the coloring number.

use std::collections::{BTreeMap, BTreeSet};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::hypergraph::Hypergraph;
use crate::vset::VSet;

/// Per-vertex threshold `h(v)`, aligned with the vertex order of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarFunction {
    values: Vec<u32>,
}

impl ScalarFunction {
    pub fn new(values: Vec<u32>) -> Self {
        ScalarFunction { values }
    }

    pub fn constant(h: &Hypergraph, k: u32) -> Self {
        ScalarFunction {
            values: vec![k; h.order()],
        }
    }

    pub fn from_map(h: &Hypergraph, map: &BTreeMap<String, u32>) -> Result<Self> {
        let mut values = vec![0; h.order()];
        let mut seen = 0;
        for (name, &x) in map {
            values[h.require(name)?] = x;
            seen += 1;
        }
        if seen != h.order() {
            let missing = h.vertices().iter().find(|v| !map.contains_key(*v)).unwrap();
            return Err(Error::UnknownVertex(missing.clone()));
        }
        Ok(ScalarFunction { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, i: usize) -> u32 {
        self.values[i]
    }

    pub(crate) fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.values.len() != h.order() {
            return Err(Error::Invalid(format!(
                "function has {} values for {} vertices",
                self.values.len(),
                h.order()
            )));
        }
        Ok(())
    }
}

/// Removal order proving strict degeneracy, or the stuck core disproving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegeneracyWitness {
    RemovalOrder(Vec<String>),
    Core(Vec<String>),
}

impl DegeneracyWitness {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, DegeneracyWitness::RemovalOrder(_))
    }
}

/// Strict degeneracy of the subframe on `s` for universes of at most 64
/// vertices, without allocating. `None` when the universe is larger.
pub(crate) fn degenerate_small<F: Fn(usize) -> u32>(fr: &Frame, s: &VSet, h: F) -> Option<bool> {
    let mut alive = s.word()?;
    let mut edges: SmallVec<[u64; 32]> = SmallVec::new();
    let mut deg = [0u32; 64];
    for e in &fr.edges {
        let m = e.m.word()?;
        if m & alive == m {
            edges.push(m);
            let mut x = m;
            while x != 0 {
                deg[x.trailing_zeros() as usize] += 1;
                x &= x - 1;
            }
        }
    }
    'outer: while alive != 0 {
        let mut x = alive;
        while x != 0 {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            if deg[v] < h(v) {
                alive &= !(1 << v);
                for m in edges.iter_mut() {
                    if *m >> v & 1 == 1 {
                        let mut y = *m & !(1 << v);
                        while y != 0 {
                            deg[y.trailing_zeros() as usize] -= 1;
                            y &= y - 1;
                        }
                        *m = 0;
                    }
                }
                continue 'outer;
            }
        }
        return Some(false);
    }
    Some(true)
}

/// Peels `fr[s]`, deleting the smallest vertex with degree below its
/// threshold until nothing qualifies. Returns the order or the stuck core.
pub(crate) fn peel<F: Fn(usize) -> u32>(fr: &Frame, s: &VSet, h: F) -> std::result::Result<Vec<usize>, VSet> {
    let n = fr.n;
    let mut deg = vec![0u32; n];
    let alive_e: Vec<&VSet> = fr.edges.iter().filter(|e| e.m.is_subset(s)).map(|e| &e.m).collect();
    // incidence lists in one flat buffer
    let mut start = vec![0usize; n + 1];
    for m in &alive_e {
        for v in m.iter() {
            deg[v] += 1;
            start[v + 1] += 1;
        }
    }
    for v in 0..n {
        start[v + 1] += start[v];
    }
    let mut fill = start.clone();
    let mut flat = vec![0u32; start[n]];
    for (k, m) in alive_e.iter().enumerate() {
        for v in m.iter() {
            flat[fill[v]] = k as u32;
            fill[v] += 1;
        }
    }
    let mut dead = vec![false; alive_e.len()];
    let mut alive = s.clone();
    let mut ready = VSet::empty(n);
    for v in s.iter() {
        if deg[v] < h(v) {
            ready.insert(v);
        }
    }
    let mut order = Vec::with_capacity(s.len());
    while let Some(v) = ready.first() {
        ready.remove(v);
        alive.remove(v);
        order.push(v);
        for &k in &flat[start[v]..start[v + 1]] {
            let k = k as usize;
            if dead[k] {
                continue;
            }
            dead[k] = true;
            for u in alive_e[k].iter() {
                if u != v {
                    deg[u] -= 1;
                    if deg[u] < h(u) && alive.contains(u) {
                        ready.insert(u);
                    }
                }
            }
        }
    }
    if alive.is_empty() {
        Ok(order)
    } else {
        Err(alive)
    }
}

/// Whether every non-empty subhypergraph has a vertex with degree below `h`.
pub fn is_strictly_degenerate(h: &Hypergraph, f: &ScalarFunction) -> Result<DegeneracyWitness> {
    f.check(h)?;
    let fr = Frame::of(h);
    let name = |v: usize| h.vertex(v).to_string();
    Ok(match peel(&fr, &fr.verts, |v| f.get(v)) {
        Ok(order) => DegeneracyWitness::RemovalOrder(order.into_iter().map(name).collect()),
        Err(core) => DegeneracyWitness::Core(core.iter().map(name).collect()),
    })
}

pub(crate) fn col_frame(fr: &Frame, s: &VSet) -> u32 {
    if s.is_empty() {
        return 0;
    }
    let sub = fr.induced(s);
    let mut deg = sub.degrees();
    let mut queue: BTreeSet<(u32, usize)> = s.iter().map(|v| (deg[v], v)).collect();
    let mut alive = s.clone();
    let mut dead = vec![false; sub.edges.len()];
    let mut worst = 0;
    while let Some((d, v)) = queue.pop_first() {
        worst = worst.max(d);
        alive.remove(v);
        for (k, e) in sub.edges.iter().enumerate() {
            if dead[k] || !e.m.contains(v) {
                continue;
            }
            dead[k] = true;
            for u in e.m.iter() {
                if u != v && alive.contains(u) {
                    queue.remove(&(deg[u], u));
                    deg[u] -= 1;
                    queue.insert((deg[u], u));
                }
            }
        }
    }
    worst + 1
}

/// Smallest `k` with `H` strictly `k`-degenerate; 0 for the empty hypergraph.
pub fn col(h: &Hypergraph) -> u32 {
    let fr = Frame::of(h);
    col_frame(&fr, &fr.verts)
}
