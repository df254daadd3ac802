//! Connectivity, separating vertices and the block decomposition.

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::hypergraph::Hypergraph;
use crate::vset::VSet;

/// Blocks, separating vertices and the bipartite block/cut-vertex tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    /// Sorted vertex names of each block, blocks ordered by smallest vertex.
    pub blocks: Vec<Vec<String>>,
    /// Names of the edges that lie in each block.
    pub block_edges: Vec<Vec<String>>,
    pub cut_vertices: Vec<String>,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, String)>,
}

impl BlockTree {
    /// Blocks containing at most one separating vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.tree_edges.iter().filter(|(i, _)| *i == b).count() <= 1)
            .collect()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct BlockInfo {
    pub verts: VSet,
    pub list: Vec<usize>,
    /// Positions into the frame's edge list.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct Blocks {
    pub blocks: Vec<BlockInfo>,
    pub cut: VSet,
    /// Block indices containing each vertex (universe indexed).
    pub of_vertex: Vec<Vec<usize>>,
}

/// Block decomposition of every component of `fr` by low-point search on the
/// skeleton graph, where each edge is replaced by a clique.
pub(crate) fn decompose(fr: &Frame) -> Blocks {
    let n = fr.n;
    let adj: Vec<Vec<usize>> = fr.neighbors().iter().map(|a| a.iter().collect()).collect();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut sets: Vec<VSet> = Vec::new();
    let mut estack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbour position)
    let mut call: Vec<(usize, usize, usize)> = Vec::new();
    for root in fr.verts.iter() {
        if disc[root] != u32::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = time;
            time += 1;
            sets.push(VSet::from_iter(n, [root]));
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        call.push((root, usize::MAX, 0));
        while let Some(top) = call.last_mut() {
            let (v, parent, pos) = *top;
            if pos < adj[v].len() {
                top.2 += 1;
                let w = adj[v][pos];
                if disc[w] == u32::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    estack.push((v, w));
                    call.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut s = VSet::empty(n);
                        while let Some((a, b)) = estack.pop() {
                            s.insert(a);
                            s.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        sets.push(s);
                    }
                }
            }
        }
    }
    let mut infos: Vec<BlockInfo> = sets
        .into_iter()
        .map(|verts| BlockInfo {
            list: verts.iter().collect(),
            verts,
            edges: Vec::new(),
        })
        .collect();
    infos.sort_by(|a, b| a.list.cmp(&b.list));
    let mut of_vertex = vec![Vec::new(); n];
    for (i, b) in infos.iter().enumerate() {
        for &v in &b.list {
            of_vertex[v].push(i);
        }
    }
    for (k, e) in fr.edges.iter().enumerate() {
        let mut it = e.m.iter();
        let a = it.next().expect("edge has two vertices");
        let b = it.next().expect("edge has two vertices");
        let bi = of_vertex[a]
            .iter()
            .copied()
            .find(|&bi| infos[bi].verts.contains(b))
            .expect("edge clique lies in a block");
        infos[bi].edges.push(k);
    }
    let mut cut = VSet::empty(n);
    for v in fr.verts.iter() {
        if of_vertex[v].len() >= 2 {
            cut.insert(v);
        }
    }
    Blocks {
        blocks: infos,
        cut,
        of_vertex,
    }
}

/// Vertex sets of the connected components, ordered by smallest vertex.
pub fn components(h: &Hypergraph) -> Vec<Vec<String>> {
    Frame::of(h)
        .components()
        .into_iter()
        .map(|c| c.iter().map(|v| h.vertex(v).to_string()).collect())
        .collect()
}

pub fn is_connected(h: &Hypergraph) -> bool {
    Frame::of(h).is_connected()
}

/// Vertices `v` such that `H ÷ v` is neither empty nor connected, computed
/// per component.
pub fn separating_vertices(h: &Hypergraph) -> Vec<String> {
    let b = decompose(&Frame::of(h));
    b.cut.iter().map(|v| h.vertex(v).to_string()).collect()
}

/// Same answer as [`separating_vertices`] for connected input, straight from
/// the definition: shrink each vertex away and test connectivity.
pub fn separating_vertices_by_definition(h: &Hypergraph) -> Vec<String> {
    let fr = Frame::of(h);
    fr.verts
        .iter()
        .filter(|&v| {
            let s = fr.shrink_vertex(v);
            s.order() > 0 && !s.is_connected()
        })
        .map(|v| h.vertex(v).to_string())
        .collect()
}

pub fn blocks(h: &Hypergraph) -> Result<BlockTree> {
    if h.is_empty() {
        return Err(Error::Empty);
    }
    let fr = Frame::of(h);
    if !fr.is_connected() {
        return Err(Error::Disconnected);
    }
    let b = decompose(&fr);
    let name = |v: usize| h.vertex(v).to_string();
    let mut tree_edges = Vec::new();
    for (i, bl) in b.blocks.iter().enumerate() {
        for &v in &bl.list {
            if b.cut.contains(v) {
                tree_edges.push((i, name(v)));
            }
        }
    }
    Ok(BlockTree {
        blocks: b
            .blocks
            .iter()
            .map(|bl| bl.list.iter().map(|&v| name(v)).collect())
            .collect(),
        block_edges: b
            .blocks
            .iter()
            .map(|bl| {
                let mut es: Vec<String> = bl
                    .edges
                    .iter()
                    .map(|&k| h.edges()[fr.edges[k].id].name().to_string())
                    .collect();
                es.sort();
                es
            })
            .collect(),
        cut_vertices: b.cut.iter().map(name).collect(),
        tree_edges,
    })
}

/// Indices of end-blocks (leaves of the block tree, or the only block).
pub fn end_blocks(h: &Hypergraph) -> Result<Vec<usize>> {
    Ok(blocks(h)?.end_blocks())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn hg(vs: &[&str], es: &[&[&str]]) -> Hypergraph {
        Hypergraph::new(
            vs.iter().copied(),
            es.iter()
                .enumerate()
                .map(|(i, e)| (format!("e{i}"), e.iter().map(|s| s.to_string()).collect())),
        )
        .unwrap()
    }

    #[test]
    fn components_basic() {
        assert_eq!(components(&cycle(5).unwrap()).len(), 1);
        let h = hg(&["a", "b", "c", "x", "y"], &[&["a", "b"], &["b", "c"], &["a", "c"], &["x", "y"]]);
        assert_eq!(components(&h).len(), 2);
        assert!(is_connected(&hg(&["a", "b", "c"], &[&["a", "b", "c"]])));
        assert!(components(&Hypergraph::default()).is_empty());
    }

    #[test]
    fn separating() {
        let p = path(3).unwrap();
        assert_eq!(separating_vertices(&p), vec!["v1"]);
        assert!(separating_vertices(&hg(&["a", "b", "c"], &[&["a", "b", "c"]])).is_empty());
        let two = hg(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["c", "d", "e"]]);
        assert_eq!(separating_vertices(&two), vec!["c"]);
        assert_eq!(separating_vertices_by_definition(&two), vec!["c"]);
    }

    #[test]
    fn block_lists() {
        let c = blocks(&cycle(6).unwrap()).unwrap();
        assert_eq!(c.blocks.len(), 1);
        assert!(c.cut_vertices.is_empty());
        assert_eq!(c.end_blocks(), vec![0]);
        let p = blocks(&path(3).unwrap()).unwrap();
        assert_eq!(p.blocks, vec![vec!["v0", "v1"], vec!["v1", "v2"]]);
        assert_eq!(p.cut_vertices, vec!["v1"]);
        assert_eq!(p.end_blocks(), vec![0, 1]);
        let single = hg(&["a"], &[]);
        assert_eq!(blocks(&single).unwrap().blocks, vec![vec!["a"]]);
        assert!(blocks(&hg(&["a", "b"], &[])).is_err());
    }

    #[test]
    fn cycle_with_pendant_chain() {
        // 2-connected core on a0..a3 plus a chain of double edges a0-u1-u2-a2
        let h = hg(
            &["a0", "a1", "a2", "a3", "u1", "u2"],
            &[
                &["a0", "a1"],
                &["a1", "a2"],
                &["a2", "a3"],
                &["a3", "a0"],
                &["a0", "u1"],
                &["a0", "u1"],
                &["u1", "u2"],
                &["u1", "u2"],
                &["u2", "a2"],
            ],
        );
        assert_eq!(blocks(&h).unwrap().blocks.len(), 1);
        let h = hg(
            &["a0", "a1", "a2", "u1", "u2"],
            &[&["a0", "a1"], &["a1", "a2"], &["a2", "a0"], &["a0", "u1"], &["a0", "u1"], &["u1", "u2"], &["u1", "u2"]],
        );
        let t = blocks(&h).unwrap();
        assert_eq!(
            t.blocks,
            vec![vec!["a0", "a1", "a2"], vec!["a0", "u1"], vec!["u1", "u2"]]
        );
        assert_eq!(t.cut_vertices, vec!["a0", "u1"]);
        assert_eq!(t.block_edges[1], vec!["e3", "e4"]);
    }
}
