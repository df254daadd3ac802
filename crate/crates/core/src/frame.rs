//! Index-based working view of a hypergraph used by the search code.
//!
//! A `Frame` lives in the index universe of some original [`Hypergraph`]:
//! vertices keep their original indices and edges keep their original
//! positions as `id`, so shrinking and deleting never renumber anything.

use crate::hypergraph::Hypergraph;
use crate::vset::VSet;

#[derive(Clone, Debug)]
pub(crate) struct FEdge {
    pub id: usize,
    pub m: VSet,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub n: usize,
    pub verts: VSet,
    pub edges: Vec<FEdge>,
}

impl Frame {
    pub fn of(h: &Hypergraph) -> Frame {
        let n = h.order();
        let edges = h
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| FEdge {
                id,
                m: VSet::from_iter(n, e.vertices().iter().copied()),
                len: e.arity(),
            })
            .collect();
        Frame {
            n,
            verts: VSet::full(n),
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for e in &self.edges {
            for v in e.m.iter() {
                d[v] += 1;
            }
        }
        d
    }

    /// Ordinary-edge multiplicities between `z` and every vertex.
    pub fn mu_row(&self, z: usize) -> Vec<u32> {
        let mut mu = vec![0u32; self.n];
        for e in &self.edges {
            if e.len == 2 && e.m.contains(z) {
                for v in e.m.iter() {
                    if v != z {
                        mu[v] += 1;
                    }
                }
            }
        }
        mu
    }

    pub fn shrink_vertex(&self, z: usize) -> Frame {
        let mut verts = self.verts.clone();
        verts.remove(z);
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if e.m.contains(z) {
                if e.len > 2 {
                    let mut m = e.m.clone();
                    m.remove(z);
                    edges.push(FEdge {
                        id: e.id,
                        m,
                        len: e.len - 1,
                    });
                }
            } else {
                edges.push(e.clone());
            }
        }
        Frame {
            n: self.n,
            verts,
            edges,
        }
    }

    /// Induced subframe on `s` (which must be a subset of `verts`).
    pub fn induced(&self, s: &VSet) -> Frame {
        Frame {
            n: self.n,
            verts: s.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.m.is_subset(s))
                .cloned()
                .collect(),
        }
    }

    pub fn neighbors(&self) -> Vec<VSet> {
        let mut adj = vec![VSet::empty(self.n); self.n];
        for e in &self.edges {
            for v in e.m.iter() {
                adj[v].union_with(&e.m);
            }
        }
        for (v, a) in adj.iter_mut().enumerate() {
            a.remove(v);
        }
        adj
    }

    pub fn components(&self) -> Vec<VSet> {
        let adj = self.neighbors();
        let mut left = self.verts.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VSet::empty(self.n);
            comp.insert(s);
            let mut frontier = vec![s];
            while let Some(v) = frontier.pop() {
                for u in adj[v].iter() {
                    if !comp.contains(u) {
                        comp.insert(u);
                        frontier.push(u);
                    }
                }
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
