//! Immutable multihypergraph value type.
//!
//! Vertices and edges carry string identifiers. Internally vertices are
//! indexed densely in sorted identifier order, so index order is also the
//! identifier order used for tie-breaking everywhere in the crate.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Exactly two vertices.
    Ordinary,
    /// Three or more vertices.
    Hyperedge,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    name: String,
    vertices: Vec<usize>,
}

impl Edge {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Sorted vertex indices of the incidence set.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn arity(&self) -> usize {
        self.vertices.len()
    }

    pub fn kind(&self) -> EdgeKind {
        if self.vertices.len() == 2 {
            EdgeKind::Ordinary
        } else {
            EdgeKind::Hyperedge
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
}

impl Default for Hypergraph {
    fn default() -> Self {
        Hypergraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph from vertex names and named incidence lists.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, Vec<S>)>,
        S: Into<String>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0].clone()));
            }
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for (name, members) in edges {
            let name: String = name.into();
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateEdge(name));
            }
            let mut vs = Vec::with_capacity(members.len());
            for m in members {
                let m: String = m.into();
                match index.get(&m) {
                    Some(&i) => vs.push(i),
                    None => return Err(Error::UnknownVertex(m)),
                }
            }
            vs.sort_unstable();
            if vs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Loop(name));
            }
            if vs.len() < 2 {
                return Err(Error::Arity(name));
            }
            out.push(Edge { name, vertices: vs });
        }
        out.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(Hypergraph {
            vertices: names,
            index,
            edges: out,
        })
    }

    /// Builds from already validated parts; vertex names must be sorted and
    /// distinct, incidence lists sorted, of size at least 2 and in range.
    pub(crate) fn from_parts(vertices: Vec<String>, mut edges: Vec<(String, Vec<usize>)>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        edges.sort_by(|a, b| a.0.cmp(&b.0));
        let edges = edges
            .into_iter()
            .map(|(name, vertices)| {
                debug_assert!(vertices.len() >= 2);
                Edge { name, vertices }
            })
            .collect();
        Hypergraph {
            vertices,
            index,
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_names(&self, e: &Edge) -> Vec<&str> {
        e.vertices.iter().map(|&i| self.vertex(i)).collect()
    }

    pub fn degree(&self, v: &str) -> Result<usize> {
        let i = self.require(v)?;
        Ok(self.degree_at(i))
    }

    pub fn degree_at(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.vertices.contains(&i)).count()
    }

    /// Degrees of all vertices in index order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for e in &self.edges {
            for &v in &e.vertices {
                d[v] += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of ordinary edges with incidence set exactly `{u, v}`.
    pub fn multiplicity(&self, u: &str, v: &str) -> Result<usize> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        if a == b {
            return Err(Error::Invalid(format!(
                "multiplicity needs two distinct vertices, got `{u}` twice"
            )));
        }
        Ok(self.multiplicity_at(a, b))
    }

    pub fn multiplicity_at(&self, a: usize, b: usize) -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .filter(|e| e.vertices.len() == 2 && e.vertices[0] == a && e.vertices[1] == b)
            .count()
    }

    fn index_set<S: AsRef<str>>(&self, xs: &[S]) -> Result<Vec<bool>> {
        let mut keep = vec![false; self.order()];
        for x in xs {
            keep[self.require(x.as_ref())?] = true;
        }
        Ok(keep)
    }

    fn restrict(&self, keep: &[bool], shrinking: bool) -> Hypergraph {
        let mut remap = vec![usize::MAX; self.order()];
        let mut names = Vec::new();
        for (i, n) in self.vertices.iter().enumerate() {
            if keep[i] {
                remap[i] = names.len();
                names.push(n.clone());
            }
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let inside: Vec<usize> = e
                .vertices
                .iter()
                .filter(|&&v| keep[v])
                .map(|&v| remap[v])
                .collect();
            let ok = if shrinking {
                inside.len() >= 2
            } else {
                inside.len() == e.vertices.len()
            };
            if ok {
                edges.push((e.name.clone(), inside));
            }
        }
        Hypergraph::from_parts(names, edges)
    }

    /// `H[X]`: edges whose whole incidence set lies in `X`.
    pub fn induced<S: AsRef<str>>(&self, xs: &[S]) -> Result<Hypergraph> {
        Ok(self.restrict(&self.index_set(xs)?, false))
    }

    /// `H(X)`: edges meeting `X` in at least two vertices, truncated to `X`.
    pub fn shrink<S: AsRef<str>>(&self, xs: &[S]) -> Result<Hypergraph> {
        Ok(self.restrict(&self.index_set(xs)?, true))
    }

    /// `H - X`.
    pub fn delete<S: AsRef<str>>(&self, xs: &[S]) -> Result<Hypergraph> {
        let mut keep = self.index_set(xs)?;
        keep.iter_mut().for_each(|k| *k = !*k);
        Ok(self.restrict(&keep, false))
    }

    /// `H ÷ v`.
    pub fn shrink_vertex(&self, v: &str) -> Result<Hypergraph> {
        let mut keep = vec![true; self.order()];
        keep[self.require(v)?] = false;
        Ok(self.restrict(&keep, true))
    }

    pub(crate) fn induced_mask(&self, keep: &[bool]) -> Hypergraph {
        self.restrict(keep, false)
    }

    /// Identifies `v1` of `h1` with `v2` of `h2` into a new vertex `vstar`.
    pub fn merge(h1: &Hypergraph, v1: &str, h2: &Hypergraph, v2: &str, vstar: &str) -> Result<Hypergraph> {
        h1.require(v1)?;
        h2.require(v2)?;
        let mut names: Vec<String> = Vec::with_capacity(h1.order() + h2.order() - 1);
        names.extend(h1.vertices.iter().filter(|n| *n != v1).cloned());
        names.extend(h2.vertices.iter().filter(|n| *n != v2).cloned());
        names.push(vstar.to_string());
        let mut check = BTreeSet::new();
        for n in &names {
            if !check.insert(n.as_str()) {
                return Err(Error::Collision(n.clone()));
            }
        }
        let mut enames = BTreeSet::new();
        for e in h1.edges.iter().chain(h2.edges.iter()) {
            if !enames.insert(e.name.as_str()) {
                return Err(Error::Collision(e.name.clone()));
            }
        }
        let rename = |h: &Hypergraph, old: &str, e: &Edge| -> (String, Vec<String>) {
            let vs = e
                .vertices
                .iter()
                .map(|&i| {
                    let n = h.vertex(i);
                    if n == old { vstar.to_string() } else { n.to_string() }
                })
                .collect();
            (e.name.clone(), vs)
        };
        let mut edges: Vec<(String, Vec<String>)> = h1.edges.iter().map(|e| rename(h1, v1, e)).collect();
        edges.extend(h2.edges.iter().map(|e| rename(h2, v2, e)));
        Hypergraph::new(names, edges)
    }

    /// One edge per distinct incidence set; keeps the smallest edge name.
    pub fn underlying_simple(&self) -> Hypergraph {
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            if seen.insert(e.vertices.clone()) {
                edges.push((e.name.clone(), e.vertices.clone()));
            }
        }
        Hypergraph::from_parts(self.vertices.clone(), edges)
    }

    /// True if no two edges share an incidence set.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(&e.vertices))
    }

    /// True if every edge is ordinary.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.vertices.len() == 2)
    }

    /// Renames every vertex and edge by prefixing it.
    pub fn prefixed(&self, prefix: &str) -> Hypergraph {
        let names = self.vertices.iter().map(|n| format!("{prefix}{n}")).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| (format!("{prefix}{}", e.name), e.vertices.clone()))
            .collect();
        Hypergraph::from_parts(names, edges)
    }

    /// Incidence sets as a sorted multiset, ignoring edge names.
    pub fn edge_multiset(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .edges
            .iter()
            .map(|e| e.vertices.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_uniform, cycle, t_fold};

    fn hyperedge() -> Hypergraph {
        Hypergraph::new(["a", "b", "c"], [("e", vec!["a", "b", "c"])]).unwrap()
    }

    #[test]
    fn degrees() {
        let k4 = complete_uniform(4, 2).unwrap();
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let k3 = t_fold(&complete_uniform(3, 2).unwrap(), 2).unwrap();
        assert!(k3.degrees().iter().all(|&d| d == 4));
        assert_eq!(hyperedge().degree("a").unwrap(), 1);
        assert!(matches!(hyperedge().degree("z"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn multiplicities() {
        let c = t_fold(&cycle(5).unwrap(), 3).unwrap();
        let u = c.vertex(0).to_string();
        let v = c.vertex(1).to_string();
        assert_eq!(c.multiplicity(&u, &v).unwrap(), 3);
        assert_eq!(hyperedge().multiplicity("a", "b").unwrap(), 0);
        assert!(hyperedge().multiplicity("a", "a").is_err());
    }

    #[test]
    fn induced_and_shrink() {
        let h = hyperedge();
        let i = h.induced(&["a", "b"]).unwrap();
        assert_eq!((i.order(), i.size()), (2, 0));
        let s = h.shrink(&["a", "b"]).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.edges()[0].kind(), EdgeKind::Ordinary);
        assert_eq!(s.edges()[0].name(), "e");
        assert_eq!(h.induced(h.vertices()).unwrap(), h);
        assert_eq!(h.shrink(h.vertices()).unwrap(), h);
        let d = h.delete(&["c"]).unwrap();
        assert_eq!((d.order(), d.size()), (2, 0));
        assert!(h.induced(&["q"]).is_err());
    }

    #[test]
    fn c4_shrink_is_path() {
        let c4 = cycle(4).unwrap();
        let p = c4.shrink_vertex(c4.vertex(0)).unwrap();
        assert_eq!((p.order(), p.size()), (3, 2));
    }

    #[test]
    fn rejects_loops_and_short_edges() {
        assert!(matches!(
            Hypergraph::new(["a", "b"], [("x", vec!["a", "a"])]),
            Err(Error::Loop(_))
        ));
        assert!(matches!(
            Hypergraph::new(["a", "b"], [("x", vec!["a"])]),
            Err(Error::Arity(_))
        ));
        assert!(matches!(
            Hypergraph::new(["a", "a"], Vec::<(&str, Vec<&str>)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn merge_two_edges() {
        let a = Hypergraph::new(["x", "y"], [("e1", vec!["x", "y"])]).unwrap();
        let b = Hypergraph::new(["u", "w"], [("e2", vec!["u", "w"])]).unwrap();
        let m = Hypergraph::merge(&a, "y", &b, "u", "m").unwrap();
        assert_eq!((m.order(), m.size()), (3, 2));
        assert_eq!(m.degree("m").unwrap(), 2);
        assert!(Hypergraph::merge(&a, "y", &a, "x", "m").is_err());
    }

    #[test]
    fn underlying() {
        let c = t_fold(&cycle(5).unwrap(), 3).unwrap();
        let s = c.underlying_simple();
        assert_eq!(s.size(), 5);
        assert_eq!(s.underlying_simple(), s);
    }
}
