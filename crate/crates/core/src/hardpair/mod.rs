//! Hard pairs: recognition with certificates, verification, construction.

mod build;
mod recognize;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

pub use build::{make_hard, random_plan, HardPlan, MergePoint};
pub(crate) use recognize::HardCtx;
pub use verify::verify_certificate;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::hypergraph::Hypergraph;
use crate::structure::decompose;

/// `p` non-negative integers per vertex, aligned with a hypergraph's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorFunction {
    p: usize,
    data: Vec<u32>,
}

impl VectorFunction {
    pub fn new(p: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if p == 0 {
            return Err(Error::Invalid("vector functions need p >= 1".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * p);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != p {
                return Err(Error::Ragged {
                    vertex: format!("#{i}"),
                    found: r.len(),
                    expected: p,
                });
            }
            data.extend(r);
        }
        Ok(VectorFunction { p, data })
    }

    /// Same vector at every one of `n` vertices.
    pub fn constant(n: usize, row: &[u32]) -> Self {
        VectorFunction {
            p: row.len(),
            data: row.repeat(n),
        }
    }

    pub fn from_map(h: &Hypergraph, p: usize, map: &BTreeMap<String, Vec<u32>>) -> Result<Self> {
        let mut rows = vec![None; h.order()];
        for (name, r) in map {
            if r.len() != p {
                return Err(Error::Ragged {
                    vertex: name.clone(),
                    found: r.len(),
                    expected: p,
                });
            }
            rows[h.require(name)?] = Some(r.clone());
        }
        let mut out = Vec::with_capacity(h.order());
        for (i, r) in rows.into_iter().enumerate() {
            out.push(r.ok_or_else(|| Error::UnknownVertex(h.vertex(i).to_string()))?);
        }
        VectorFunction::new(p, out)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.p
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.p..(i + 1) * self.p]
    }

    pub fn set(&mut self, i: usize, row: &[u32]) {
        assert_eq!(row.len(), self.p);
        self.data[i * self.p..(i + 1) * self.p].copy_from_slice(row);
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.p)
    }

    pub(crate) fn flat(&self) -> &[u32] {
        &self.data
    }

    pub fn sum_at(&self, i: usize) -> u32 {
        self.get(i).iter().sum()
    }

    /// Values keyed by vertex name.
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, Vec<u32>> {
        h.vertices()
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), self.get(i).to_vec()))
            .collect()
    }

    /// Restriction to the vertices of `sub`, matched by name.
    pub fn restrict(&self, h: &Hypergraph, sub: &Hypergraph) -> Result<Self> {
        let mut data = Vec::with_capacity(sub.order() * self.p);
        for v in sub.vertices() {
            data.extend_from_slice(self.get(h.require(v)?));
        }
        Ok(VectorFunction { p: self.p, data })
    }

    pub(crate) fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.len() != h.order() {
            return Err(Error::Invalid(format!(
                "function covers {} vertices, hypergraph has {}",
                self.len(),
                h.order()
            )));
        }
        Ok(())
    }
}

/// Block type of a hard pair. Coordinates are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockTypeTag {
    /// `f_B(v) = d_B(v) e_j`.
    M { j: usize },
    /// `B = tK_n`, `f_B = t (n_1, ..., n_p)`.
    K { t: u32, counts: Vec<u32> },
    /// `B = tC_n` with `n >= 5` odd, `f_B = t (e_k + e_l)`.
    C { t: u32, k: usize, l: usize },
}

impl fmt::Display for BlockTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockTypeTag::M { j } => write!(f, "M j={j}"),
            BlockTypeTag::K { t, counts } => {
                write!(f, "K t={t} counts")?;
                for c in counts {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            BlockTypeTag::C { t, k, l } => write!(f, "C t={t} coords {k} {l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedBlock {
    /// Sorted vertex names of the block.
    pub vertices: Vec<String>,
    pub tag: BlockTypeTag,
    /// `f_B`, one row per entry of `vertices`.
    pub f: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardPairCertificate {
    pub p: usize,
    pub blocks: Vec<CertifiedBlock>,
}

/// Classifies a single block against the M, K and C patterns.
pub fn classify_block(b: &Hypergraph, fb: &VectorFunction) -> Result<Option<BlockTypeTag>> {
    fb.check(b)?;
    if b.is_empty() {
        return Err(Error::Empty);
    }
    let fr = Frame::of(b);
    if !fr.is_connected() {
        return Err(Error::NotABlock("disconnected".into()));
    }
    let blocks = decompose(&fr);
    if blocks.blocks.len() != 1 {
        let c = blocks.cut.first().unwrap();
        return Err(Error::NotABlock(format!("`{}` separates it", b.vertex(c))));
    }
    let ctx = HardCtx::new(&fr, blocks);
    Ok(ctx.classify(0, &|v| fb.get(v), fb.p()))
}

/// Recognizes a hard pair and returns its certificate.
pub fn is_hard(h: &Hypergraph, f: &VectorFunction) -> Result<Option<HardPairCertificate>> {
    f.check(h)?;
    if h.is_empty() {
        return Err(Error::Empty);
    }
    let fr = Frame::of(h);
    if !fr.is_connected() {
        return Err(Error::Disconnected);
    }
    let ctx = HardCtx::new(&fr, decompose(&fr));
    Ok(ctx.certify(f.flat(), f.p()).map(|c| ctx.to_certificate(h, &c, f.p())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_uniform, cycle, path, t_fold};

    fn tag(h: &Hypergraph, row: &[u32]) -> Option<BlockTypeTag> {
        classify_block(h, &VectorFunction::constant(h.order(), row)).unwrap()
    }

    #[test]
    fn classify_examples() {
        let k4 = t_fold(&complete_uniform(4, 2).unwrap(), 2).unwrap();
        assert_eq!(
            tag(&k4, &[0, 4, 2]),
            Some(BlockTypeTag::K {
                t: 2,
                counts: vec![0, 2, 1]
            })
        );
        let c5 = t_fold(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(tag(&c5, &[3, 3, 0]), Some(BlockTypeTag::C { t: 3, k: 1, l: 2 }));
        assert_eq!(tag(&cycle(4).unwrap(), &[1, 1]), None);
        assert_eq!(tag(&cycle(4).unwrap(), &[2, 0]), Some(BlockTypeTag::M { j: 1 }));
        assert_eq!(tag(&cycle(7).unwrap(), &[0, 2]), Some(BlockTypeTag::M { j: 2 }));
        let e = complete_uniform(3, 3).unwrap();
        assert_eq!(tag(&e, &[1]), Some(BlockTypeTag::M { j: 1 }));
        // tC_3 is a tK_3
        let c3 = t_fold(&cycle(3).unwrap(), 2).unwrap();
        assert_eq!(
            tag(&c3, &[2, 2]),
            Some(BlockTypeTag::K {
                t: 2,
                counts: vec![1, 1]
            })
        );
        assert!(classify_block(&path(3).unwrap(), &VectorFunction::constant(3, &[1])).is_err());
    }

    #[test]
    fn hard_examples() {
        let c5 = cycle(5).unwrap();
        let cert = is_hard(&c5, &VectorFunction::constant(5, &[1, 1])).unwrap().unwrap();
        assert_eq!(cert.blocks.len(), 1);
        assert_eq!(cert.blocks[0].tag, BlockTypeTag::C { t: 1, k: 1, l: 2 });
        let k4 = complete_uniform(4, 2).unwrap();
        let cert = is_hard(&k4, &VectorFunction::constant(4, &[1, 1, 1])).unwrap().unwrap();
        assert_eq!(
            cert.blocks[0].tag,
            BlockTypeTag::K {
                t: 1,
                counts: vec![1, 1, 1]
            }
        );
        assert!(is_hard(&path(3).unwrap(), &VectorFunction::constant(3, &[1, 1])).unwrap().is_none());
    }

    #[test]
    fn merged_monoblocks() {
        // two triangles sharing v2, monoblocks on different coordinates
        let h = Hypergraph::new(
            ["a", "b", "c", "x", "y"],
            [
                ("1", vec!["a", "b"]),
                ("2", vec!["b", "c"]),
                ("3", vec!["a", "c"]),
                ("4", vec!["c", "x"]),
                ("5", vec!["x", "y"]),
                ("6", vec!["c", "y"]),
            ],
        )
        .unwrap();
        let f = VectorFunction::new(2, vec![vec![2, 0], vec![2, 0], vec![2, 2], vec![0, 2], vec![0, 2]]).unwrap();
        let cert = is_hard(&h, &f).unwrap().unwrap();
        assert_eq!(cert.blocks.len(), 2);
        assert!(verify_certificate(&h, &f, &cert));
        let g = VectorFunction::new(2, vec![vec![2, 0], vec![2, 0], vec![3, 1], vec![0, 2], vec![0, 2]]).unwrap();
        assert!(is_hard(&h, &g).unwrap().is_none());
    }

    #[test]
    fn single_vertex_zero_is_hard() {
        let h = crate::generators::edgeless(1);
        let cert = is_hard(&h, &VectorFunction::constant(1, &[0, 0])).unwrap().unwrap();
        assert_eq!(cert.blocks[0].tag, BlockTypeTag::M { j: 1 });
        assert!(is_hard(&h, &VectorFunction::constant(1, &[0, 1])).unwrap().is_none());
    }
}
