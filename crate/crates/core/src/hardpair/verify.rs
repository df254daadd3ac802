//! Certificate checking that shares nothing with the recognizer beyond the
//! hypergraph type: block structure is checked from the definition.

use std::collections::{BTreeSet, HashMap};

use super::{BlockTypeTag, HardPairCertificate, VectorFunction};
use crate::hypergraph::Hypergraph;
use crate::structure::is_connected;

fn tag_holds(sub: &Hypergraph, tag: &BlockTypeTag, rows: &HashMap<&str, &Vec<u32>>, p: usize) -> bool {
    let d = sub.degrees();
    let n = sub.order();
    let row = |i: usize| rows[sub.vertex(i)];
    match tag {
        BlockTypeTag::M { j } => {
            (1..=p).contains(j)
                && (0..n).all(|i| {
                    row(i)
                        .iter()
                        .enumerate()
                        .all(|(c, &x)| x as usize == if c + 1 == *j { d[i] } else { 0 })
                })
        }
        BlockTypeTag::K { t, counts } => {
            let t = *t as usize;
            if t == 0 || counts.len() != p || n < 3 || !sub.is_graph() {
                return false;
            }
            if counts.iter().sum::<u32>() as usize != n - 1 || counts.iter().filter(|&&c| c > 0).count() < 2 {
                return false;
            }
            if sub.size() != t * n * (n - 1) / 2 {
                return false;
            }
            for a in 0..n {
                for b in a + 1..n {
                    if sub.multiplicity_at(a, b) != t {
                        return false;
                    }
                }
            }
            (0..n).all(|i| row(i).iter().zip(counts).all(|(&x, &c)| x as usize == t * c as usize))
        }
        BlockTypeTag::C { t, k, l } => {
            let t = *t as usize;
            if t == 0 || k == l || !(1..=p).contains(k) || !(1..=p).contains(l) {
                return false;
            }
            if n < 5 || n % 2 == 0 || !sub.is_graph() || sub.size() != t * n {
                return false;
            }
            let mut nbrs = vec![BTreeSet::new(); n];
            for e in sub.edges() {
                let (a, b) = (e.vertices()[0], e.vertices()[1]);
                nbrs[a].insert(b);
                nbrs[b].insert(a);
                if sub.multiplicity_at(a, b) != t {
                    return false;
                }
            }
            if nbrs.iter().any(|s| s.len() != 2) {
                return false;
            }
            (0..n).all(|i| {
                row(i).iter().enumerate().all(|(c, &x)| {
                    let want = if c + 1 == *k || c + 1 == *l { t } else { 0 };
                    x as usize == want
                })
            })
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let nx = parent[y];
        parent[y] = r;
        y = nx;
    }
    r
}

/// Re-checks every certificate claim: block decomposition, per-block type
/// equations, and the decomposition `f = sum of f_B`.
pub fn verify_certificate(h: &Hypergraph, f: &VectorFunction, cert: &HardPairCertificate) -> bool {
    if f.check(h).is_err() || cert.p != f.p() || h.is_empty() || !is_connected(h) || cert.blocks.is_empty() {
        return false;
    }
    let p = cert.p;
    let n = h.order();
    let nb = cert.blocks.len();
    let mut member: Vec<Vec<bool>> = Vec::with_capacity(nb);
    for b in &cert.blocks {
        if b.vertices.is_empty() || b.f.len() != b.vertices.len() || b.f.iter().any(|r| r.len() != p) {
            return false;
        }
        if n >= 2 && b.vertices.len() < 2 {
            return false;
        }
        let mut m = vec![false; n];
        for v in &b.vertices {
            match h.index_of(v) {
                Some(i) if !m[i] => m[i] = true,
                _ => return false,
            }
        }
        member.push(m);
    }
    let in_blocks: Vec<usize> = (0..n).map(|v| member.iter().filter(|m| m[v]).count()).collect();
    if in_blocks.contains(&0) {
        return false;
    }
    for a in 0..nb {
        for b in a + 1..nb {
            if (0..n).filter(|&v| member[a][v] && member[b][v]).count() > 1 {
                return false;
            }
        }
    }
    for e in h.edges() {
        let holders = member
            .iter()
            .filter(|m| e.vertices().iter().all(|&v| m[v]))
            .count();
        if holders != 1 {
            return false;
        }
    }
    // block/cut-vertex incidence graph must be a tree
    let cuts: Vec<usize> = (0..n).filter(|&v| in_blocks[v] >= 2).collect();
    let nodes = nb + cuts.len();
    let mut parent: Vec<usize> = (0..nodes).collect();
    let mut links = 0;
    for (ci, &v) in cuts.iter().enumerate() {
        for (b, m) in member.iter().enumerate() {
            if m[v] {
                links += 1;
                let (x, y) = (find(&mut parent, nb + ci), find(&mut parent, b));
                if x == y {
                    return false;
                }
                parent[x] = y;
            }
        }
    }
    if links + 1 != nodes {
        return false;
    }
    let mut sums = vec![0u32; n * p];
    for (b, m) in cert.blocks.iter().zip(&member) {
        let names: Vec<&str> = b.vertices.iter().map(String::as_str).collect();
        let Ok(sub) = h.induced(&names) else {
            return false;
        };
        if !is_connected(&sub) {
            return false;
        }
        if sub.order() >= 2 {
            for v in sub.vertices() {
                match sub.shrink_vertex(v) {
                    Ok(s) if is_connected(&s) => {}
                    _ => return false,
                }
            }
        }
        let rows: HashMap<&str, &Vec<u32>> = names.iter().copied().zip(b.f.iter()).collect();
        if !tag_holds(&sub, &b.tag, &rows, p) {
            return false;
        }
        for (name, r) in &rows {
            let v = h.index_of(name).unwrap();
            debug_assert!(m[v]);
            if in_blocks[v] == 1 && r.as_slice() != f.get(v) {
                return false;
            }
            for (s, &x) in sums[v * p..(v + 1) * p].iter_mut().zip(r.iter()) {
                *s += x;
            }
        }
    }
    (0..n).all(|v| &sums[v * p..(v + 1) * p] == f.get(v))
}
