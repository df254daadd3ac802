use std::collections::HashMap;

use smallvec::SmallVec;

use super::{BlockTypeTag, CertifiedBlock, HardPairCertificate};
use crate::frame::Frame;
use crate::hypergraph::Hypergraph;
use crate::structure::Blocks;

#[derive(Clone, Copy, Debug, Default)]
struct Shape {
    complete_t: Option<u32>,
    cycle_t: Option<u32>,
}

/// Block structure of one hypergraph, reusable across many functions `f`.
#[derive(Clone, Debug)]
pub(crate) struct HardCtx {
    pub blocks: Blocks,
    deg: Vec<u32>,
    /// Degree inside each block, aligned with the block's vertex list.
    bdeg: Vec<Vec<u32>>,
    shape: Vec<Shape>,
    verts: Vec<usize>,
}

pub(crate) type BlockVerdict = (usize, BlockTypeTag, Vec<u32>);

fn shape_of(fr: &Frame, list: &[usize], edges: &[usize]) -> Shape {
    let n = list.len();
    let mut s = Shape::default();
    if n < 3 || edges.iter().any(|&k| fr.edges[k].len != 2) {
        return s;
    }
    let pos: HashMap<usize, usize> = list.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut mult: HashMap<(usize, usize), u32> = HashMap::new();
    for &k in edges {
        let mut it = fr.edges[k].m.iter();
        let a = pos[&it.next().unwrap()];
        let b = pos[&it.next().unwrap()];
        *mult.entry((a, b)).or_default() += 1;
    }
    let t = *mult.values().next().unwrap();
    if mult.values().any(|&m| m != t) {
        return s;
    }
    if mult.len() == n * (n - 1) / 2 {
        s.complete_t = Some(t);
    }
    if n >= 5 && n % 2 == 1 && mult.len() == n {
        let mut nb = vec![0; n];
        for &(a, b) in mult.keys() {
            nb[a] += 1;
            nb[b] += 1;
        }
        if nb.iter().all(|&d| d == 2) {
            s.cycle_t = Some(t);
        }
    }
    s
}

impl HardCtx {
    pub fn new(fr: &Frame, blocks: Blocks) -> Self {
        let deg = fr.degrees();
        let mut bdeg = Vec::with_capacity(blocks.blocks.len());
        let mut shape = Vec::with_capacity(blocks.blocks.len());
        for b in &blocks.blocks {
            let mut d = vec![0u32; b.list.len()];
            for &k in &b.edges {
                for (i, &v) in b.list.iter().enumerate() {
                    if fr.edges[k].m.contains(v) {
                        d[i] += 1;
                    }
                }
            }
            bdeg.push(d);
            shape.push(shape_of(fr, &b.list, &b.edges));
        }
        HardCtx {
            blocks,
            deg,
            bdeg,
            shape,
            verts: fr.verts.iter().collect(),
        }
    }

    pub fn classify<'f>(&self, b: usize, get: &dyn Fn(usize) -> &'f [u32], p: usize) -> Option<BlockTypeTag> {
        let mut fb = Vec::with_capacity(self.blocks.blocks[b].list.len() * p);
        for &v in &self.blocks.blocks[b].list {
            fb.extend_from_slice(get(v));
        }
        self.classify_flat(b, &fb, p)
    }

    /// `fb` is aligned with the block's vertex list.
    pub fn classify_flat(&self, b: usize, fb: &[u32], p: usize) -> Option<BlockTypeTag> {
        let d = &self.bdeg[b];
        let n = d.len();
        let row = |i: usize| &fb[i * p..(i + 1) * p];
        // M
        let j = match d.iter().position(|&x| x > 0) {
            None => Some(0),
            Some(i) => {
                let r = row(i);
                let j = r.iter().position(|&x| x > 0);
                j.filter(|&j| r[j] == d[i])
            }
        };
        if let Some(j) = j {
            let ok = (0..n).all(|i| {
                row(i)
                    .iter()
                    .enumerate()
                    .all(|(c, &x)| x == if c == j { d[i] } else { 0 })
            });
            if ok {
                return Some(BlockTypeTag::M { j: j + 1 });
            }
        }
        let first = row(0);
        if (1..n).any(|i| row(i) != first) {
            return None;
        }
        let nonzero = first.iter().filter(|&&x| x > 0).count();
        if nonzero < 2 {
            return None;
        }
        let sh = self.shape[b];
        if let Some(t) = sh.complete_t {
            if first.iter().all(|&x| x % t == 0)
                && first.iter().map(|&x| x / t).sum::<u32>() == n as u32 - 1
            {
                return Some(BlockTypeTag::K {
                    t,
                    counts: first.iter().map(|&x| x / t).collect(),
                });
            }
        }
        if let Some(t) = sh.cycle_t {
            if nonzero == 2 && first.iter().all(|&x| x == 0 || x == t) {
                let mut it = first.iter().enumerate().filter(|(_, &x)| x > 0).map(|(c, _)| c + 1);
                let k = it.next().unwrap();
                let l = it.next().unwrap();
                return Some(BlockTypeTag::C { t, k, l });
            }
        }
        None
    }

    /// Leaf-strips the block tree, pinning each `f_B` from a vertex that is no
    /// longer shared with any remaining block.
    pub fn certify(&self, f: &[u32], p: usize) -> Option<Vec<BlockVerdict>> {
        let mut out = Vec::with_capacity(self.blocks.blocks.len());
        self.strip(f, p, Some(&mut out))?;
        out.sort_by_key(|x| x.0);
        Some(out)
    }

    /// Same verdict as [`HardCtx::certify`] without building the certificate.
    pub fn accepts(&self, f: &[u32], p: usize) -> bool {
        self.strip(f, p, None).is_some()
    }

    fn strip(&self, f: &[u32], p: usize, mut out: Option<&mut Vec<BlockVerdict>>) -> Option<()> {
        for &v in &self.verts {
            let s: u32 = f[v * p..(v + 1) * p].iter().sum();
            if s != self.deg[v] {
                return None;
            }
        }
        let bl = &self.blocks.blocks;
        let nb = bl.len();
        let fb_of = |b: usize, res: &[u32]| -> SmallVec<[u32; 32]> {
            let mut fb = SmallVec::with_capacity(bl[b].list.len() * p);
            for &v in &bl[b].list {
                fb.extend_from_slice(&res[v * p..(v + 1) * p]);
            }
            fb
        };
        let mut emit = |b: usize, tag: BlockTypeTag, fb: &[u32]| {
            if let Some(o) = out.as_deref_mut() {
                o.push((b, tag, fb.to_vec()));
            }
        };
        if nb == 1 {
            let fb = fb_of(0, f);
            let tag = self.classify_flat(0, &fb, p)?;
            emit(0, tag, &fb);
            return Some(());
        }
        let mut res: SmallVec<[u32; 64]> = SmallVec::from_slice(f);
        let mut count: SmallVec<[usize; 32]> = self.blocks.of_vertex.iter().map(Vec::len).collect();
        let mut att: SmallVec<[usize; 16]> = bl
            .iter()
            .map(|b| b.list.iter().filter(|&&v| count[v] >= 2).count())
            .collect();
        let mut removed: SmallVec<[bool; 16]> = SmallVec::from_elem(false, nb);
        for _ in 0..nb - 1 {
            let b = (0..nb).find(|&b| !removed[b] && att[b] == 1)?;
            let list = &bl[b].list;
            let ci = list.iter().position(|&v| count[v] >= 2)?;
            let c = list[ci];
            let ui = if ci == 0 { 1 } else { 0 };
            let u = list[ui];
            let ru = &res[u * p..(u + 1) * p];
            let du = self.bdeg[b][ui];
            let mut support = ru.iter().enumerate().filter(|(_, &x)| x > 0);
            let single = match (support.next(), support.next()) {
                (Some((j, &x)), None) if x == du => Some(j),
                _ => None,
            };
            let fc: SmallVec<[u32; 8]> = match single {
                Some(j) => {
                    let mut r = SmallVec::from_elem(0, p);
                    r[j] = self.bdeg[b][ci];
                    r
                }
                None => SmallVec::from_slice(ru),
            };
            let mut fb = fb_of(b, &res);
            fb[ci * p..(ci + 1) * p].copy_from_slice(&fc);
            let tag = self.classify_flat(b, &fb, p)?;
            for (x, y) in res[c * p..(c + 1) * p].iter_mut().zip(&fc) {
                *x = x.checked_sub(*y)?;
            }
            removed[b] = true;
            count[c] -= 1;
            if count[c] == 1 {
                for &o in &self.blocks.of_vertex[c] {
                    if !removed[o] {
                        att[o] -= 1;
                    }
                }
            }
            emit(b, tag, &fb);
        }
        let b = (0..nb).find(|&b| !removed[b])?;
        let fb = fb_of(b, &res);
        let tag = self.classify_flat(b, &fb, p)?;
        emit(b, tag, &fb);
        Some(())
    }

    pub fn to_certificate(&self, h: &Hypergraph, verdicts: &[BlockVerdict], p: usize) -> HardPairCertificate {
        HardPairCertificate {
            p,
            blocks: verdicts
                .iter()
                .map(|(b, tag, fb)| CertifiedBlock {
                    vertices: self.blocks.blocks[*b]
                        .list
                        .iter()
                        .map(|&v| h.vertex(v).to_string())
                        .collect(),
                    tag: tag.clone(),
                    f: fb.chunks(p).map(<[u32]>::to_vec).collect(),
                })
                .collect(),
        }
    }
}
