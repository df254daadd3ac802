//! The partition solver, partition verification and degree-bound refinement.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::SmallVec;

use crate::degeneracy::{degenerate_small, peel};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::hardpair::{HardCtx, HardPairCertificate, VectorFunction};
use crate::hypergraph::Hypergraph;
use crate::structure::decompose;
use crate::vset::VSet;

static FALLBACKS: AtomicUsize = AtomicUsize::new(0);
static FALLBACK_LOG: Mutex<Vec<String>> = Mutex::new(Vec::new());

/// Number of times the exhaustive fallback ran in this process.
pub fn fallback_count() -> usize {
    FALLBACKS.load(Ordering::Relaxed)
}

/// Descriptions of the instances on which the fallback ran.
pub fn fallback_log() -> Vec<String> {
    FALLBACK_LOG.lock().map(|l| l.clone()).unwrap_or_default()
}

/// Class index per vertex, 0-based, aligned with the hypergraph's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    p: usize,
    classes: Vec<usize>,
}

impl Partition {
    pub fn new(p: usize, classes: Vec<usize>) -> Self {
        Partition { p, classes }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn members(&self, i: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&v| self.classes[v] == i).collect()
    }

    /// Vertex names of class `i` (0-based).
    pub fn member_names(&self, h: &Hypergraph, i: usize) -> Vec<String> {
        self.members(i).into_iter().map(|v| h.vertex(v).to_string()).collect()
    }

    /// The induced subhypergraph `H_i` (0-based `i`).
    pub fn class_hypergraph(&self, h: &Hypergraph, i: usize) -> Hypergraph {
        let keep: Vec<bool> = self.classes.iter().map(|&c| c == i).collect();
        h.induced_mask(&keep)
    }

    /// Vertex name to 1-based class.
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, usize> {
        h.vertices()
            .iter()
            .cloned()
            .zip(self.classes.iter().map(|c| c + 1))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Partition(Partition),
    /// One certificate per hard component, keyed by the component's vertices.
    Hard(Vec<(Vec<String>, HardPairCertificate)>),
}

impl SolveResult {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            SolveResult::Partition(p) => Some(p),
            SolveResult::Hard(_) => None,
        }
    }

    pub fn is_hard(&self) -> bool {
        matches!(self, SolveResult::Hard(_))
    }
}

/// Counters from one solve call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search nodes expanded.
    pub nodes: usize,
    /// Components that needed the exhaustive fallback.
    pub fallbacks: usize,
}

fn check_precondition(h: &Hypergraph, d: &[usize], f: &VectorFunction) -> Result<()> {
    f.check(h)?;
    for (v, &dv) in d.iter().enumerate() {
        if (f.sum_at(v) as usize) < dv {
            return Err(Error::Precondition {
                vertex: h.vertex(v).to_string(),
                reason: format!("sum of f is {} but degree is {dv}", f.sum_at(v)),
            });
        }
    }
    Ok(())
}

/// Whether `s` induces a strictly `f_j`-degenerate subframe.
fn class_ok(fr: &Frame, s: &VSet, f: &[u32], p: usize, j: usize) -> bool {
    degenerate_small(fr, s, |v| f[v * p + j]).unwrap_or_else(|| peel(fr, s, |v| f[v * p + j]).is_ok())
}

/// Backtracking over vertex assignments in index order; partial classes that
/// already fail are pruned since failure is inherited by supersets.
pub(crate) fn exhaustive(fr: &Frame, f: &[u32], p: usize) -> Option<Vec<(usize, usize)>> {
    let verts: Vec<usize> = fr.verts.iter().collect();
    let mut sets = vec![VSet::empty(fr.n); p];
    let mut out = Vec::with_capacity(verts.len());
    fn rec(
        k: usize,
        verts: &[usize],
        fr: &Frame,
        f: &[u32],
        p: usize,
        sets: &mut [VSet],
        out: &mut Vec<(usize, usize)>,
    ) -> bool {
        if k == verts.len() {
            return true;
        }
        let v = verts[k];
        for j in 0..p {
            sets[j].insert(v);
            if class_ok(fr, &sets[j], f, p, j) {
                out.push((v, j));
                if rec(k + 1, verts, fr, f, p, sets, out) {
                    return true;
                }
                out.pop();
            }
            sets[j].remove(v);
        }
        false
    }
    rec(0, &verts, fr, f, p, &mut sets, &mut out).then_some(out)
}

/// Structure of `H(X)` for one vertex set `X`, independent of `f`.
#[derive(Debug)]
struct Node {
    fr: Frame,
    deg: Vec<u32>,
    comps: Vec<VSet>,
    /// Present when `H(X)` is connected.
    ctx: Option<HardCtx>,
    nonsep: Vec<usize>,
    /// `mu[k]`: multiplicity row of `nonsep[k]`.
    mu: Vec<Vec<u32>>,
    /// `H(X - nonsep[k])`, linked on first use.
    kids: Vec<OnceLock<Arc<Node>>>,
    /// `H[comps[k]]` when disconnected, linked on first use.
    parts: Vec<OnceLock<Arc<Node>>>,
}

impl Node {
    fn new(fr: Frame) -> Node {
        let deg = fr.degrees();
        let comps = fr.components();
        let (ctx, nonsep, mu) = if comps.len() == 1 && fr.order() > 1 {
            let blocks = decompose(&fr);
            let mut ns = fr.verts.clone();
            ns.difference_with(&blocks.cut);
            let nonsep: Vec<usize> = ns.iter().collect();
            let mu = nonsep.iter().map(|&z| fr.mu_row(z)).collect();
            (Some(HardCtx::new(&fr, blocks)), nonsep, mu)
        } else if comps.len() == 1 {
            (Some(HardCtx::new(&fr, decompose(&fr))), Vec::new(), Vec::new())
        } else {
            (None, Vec::new(), Vec::new())
        };
        let kids = nonsep.iter().map(|_| OnceLock::new()).collect();
        let parts = if comps.len() > 1 {
            comps.iter().map(|_| OnceLock::new()).collect()
        } else {
            Vec::new()
        };
        Node {
            fr,
            deg,
            comps,
            ctx,
            nonsep,
            mu,
            kids,
            parts,
        }
    }
}

const CACHE_LIMIT: usize = 1 << 16;

/// Nodes keyed by vertex set. The frame of `H(X)` does not depend on the
/// order in which vertices were shrunk away, so entries are shared by every
/// search path and every `f`.
#[derive(Debug, Default)]
struct NodeCache {
    map: Mutex<HashMap<VSet, Arc<Node>>>,
}

impl NodeCache {
    fn part(&self, node: &Node, k: usize) -> Arc<Node> {
        node.parts[k]
            .get_or_init(|| self.get(&node.comps[k], || node.fr.induced(&node.comps[k])))
            .clone()
    }

    fn kid(&self, node: &Node, k: usize) -> Arc<Node> {
        node.kids[k]
            .get_or_init(|| {
                let z = node.nonsep[k];
                let mut rest = node.fr.verts.clone();
                rest.remove(z);
                self.get(&rest, || node.fr.shrink_vertex(z))
            })
            .clone()
    }

    fn get(&self, x: &VSet, make: impl FnOnce() -> Frame) -> Arc<Node> {
        if let Some(n) = self.map.lock().ok().and_then(|m| m.get(x).cloned()) {
            return n;
        }
        let node = Arc::new(Node::new(make()));
        if let Ok(mut m) = self.map.lock() {
            if m.len() < CACHE_LIMIT {
                m.entry(x.clone()).or_insert_with(|| node.clone());
            }
        }
        node
    }
}

struct Search<'a> {
    p: usize,
    cache: &'a NodeCache,
    failed: HashSet<(VSet, Vec<u32>)>,
    nodes: usize,
}

impl Search<'_> {
    fn key(&self, fr: &Frame, f: &[u32]) -> (VSet, Vec<u32>) {
        let p = self.p;
        let mut r = Vec::with_capacity(fr.order() * p);
        for v in fr.verts.iter() {
            r.extend_from_slice(&f[v * p..(v + 1) * p]);
        }
        (fr.verts.clone(), r)
    }

    fn hard(&self, node: &Node, f: &[u32]) -> bool {
        let p = self.p;
        if node
            .fr
            .verts
            .iter()
            .any(|v| f[v * p..(v + 1) * p].iter().sum::<u32>() != node.deg[v])
        {
            return false;
        }
        match &node.ctx {
            Some(ctx) => ctx.accepts(f, p),
            None => (0..node.comps.len()).any(|k| {
                let sub = self.cache.part(node, k);
                sub.ctx.as_ref().is_some_and(|ctx| ctx.accepts(f, p))
            }),
        }
    }

    /// Reduction search on a node none of whose components is hard. On
    /// success the assignment is appended to `out`; on failure `out` is unchanged.
    fn run(&mut self, node: &Node, f: &[u32], out: &mut Vec<(usize, usize)>) -> bool {
        let p = self.p;
        let fr = &node.fr;
        self.nodes += 1;
        match fr.order() {
            0 => return true,
            1 => {
                let v = fr.verts.first().unwrap();
                return match (0..p).find(|&j| f[v * p + j] >= 1) {
                    Some(j) => {
                        out.push((v, j));
                        true
                    }
                    None => false,
                };
            }
            _ => {}
        }
        if node.comps.len() > 1 {
            let mark = out.len();
            for k in 0..node.comps.len() {
                let sub = self.cache.part(node, k);
                if !self.run(&sub, f, out) {
                    out.truncate(mark);
                    return false;
                }
            }
            return true;
        }
        if !self.failed.is_empty() && self.failed.contains(&self.key(fr, f)) {
            return false;
        }
        let slack = |z: usize| f[z * p..(z + 1) * p].iter().sum::<u32>() > node.deg[z];
        let order = (0..node.nonsep.len())
            .filter(|&k| slack(node.nonsep[k]))
            .chain((0..node.nonsep.len()).filter(|&k| !slack(node.nonsep[k])));
        for k in order {
            let z = node.nonsep[k];
            let mut js: SmallVec<[usize; 8]> = (0..p).filter(|&j| f[z * p + j] > 0).collect();
            js.sort_by_key(|&j| std::cmp::Reverse(f[z * p + j]));
            if js.is_empty() {
                continue;
            }
            let sub = self.cache.kid(node, k);
            let mu = &node.mu[k];
            for j in js {
                let mut g: SmallVec<[u32; 64]> = SmallVec::from_slice(f);
                for v in sub.fr.verts.iter() {
                    g[v * p + j] = g[v * p + j].saturating_sub(mu[v]);
                }
                if self.hard(&sub, &g) {
                    continue;
                }
                if self.run(&sub, &g, out) {
                    out.push((z, j));
                    return true;
                }
            }
        }
        let key = self.key(fr, f);
        self.failed.insert(key);
        false
    }
}

/// A hypergraph with its components and block structures computed once, for
/// answering many `f` queries.
#[derive(Debug)]
pub struct Prepared {
    h: Hypergraph,
    top: Frame,
    deg: Vec<usize>,
    comps: Vec<Arc<Node>>,
    cache: NodeCache,
}

impl Clone for Prepared {
    fn clone(&self) -> Self {
        Prepared::new(&self.h)
    }
}

impl Prepared {
    pub fn new(h: &Hypergraph) -> Self {
        let fr = Frame::of(h);
        let cache = NodeCache::default();
        let comps = fr
            .components()
            .into_iter()
            .map(|c| cache.get(&c, || fr.induced(&c)))
            .collect();
        Prepared {
            h: h.clone(),
            deg: h.degrees(),
            top: fr,
            comps,
            cache,
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    /// Hard-pair certificate for a connected hypergraph.
    pub fn is_hard(&self, f: &VectorFunction) -> Result<Option<HardPairCertificate>> {
        f.check(&self.h)?;
        match self.comps.len() {
            0 => Err(Error::Empty),
            1 => {
                let ctx = self.comps[0].ctx.as_ref().expect("component is connected");
                Ok(ctx.certify(f.flat(), f.p()).map(|c| ctx.to_certificate(&self.h, &c, f.p())))
            }
            _ => Err(Error::Disconnected),
        }
    }

    pub fn solve(&self, f: &VectorFunction) -> Result<SolveResult> {
        self.solve_with_stats(f).map(|r| r.0)
    }

    pub fn solve_with_stats(&self, f: &VectorFunction) -> Result<(SolveResult, SolveStats)> {
        check_precondition(&self.h, &self.deg, f)?;
        let p = f.p();
        let mut stats = SolveStats::default();
        let mut hard = Vec::new();
        for node in &self.comps {
            let ctx = node.ctx.as_ref().expect("component is connected");
            if !ctx.accepts(f.flat(), p) {
                continue;
            }
            if let Some(c) = ctx.certify(f.flat(), p) {
                let names = node.fr.verts.iter().map(|v| self.h.vertex(v).to_string()).collect();
                hard.push((names, ctx.to_certificate(&self.h, &c, p)));
            }
        }
        if !hard.is_empty() {
            return Ok((SolveResult::Hard(hard), stats));
        }
        let mut classes = vec![usize::MAX; self.h.order()];
        let mut found = Vec::with_capacity(self.h.order());
        for node in &self.comps {
            let mut s = Search {
                p,
                cache: &self.cache,
                failed: HashSet::new(),
                nodes: 0,
            };
            found.clear();
            let ok = s.run(node, f.flat(), &mut found);
            stats.nodes += s.nodes;
            if !ok {
                stats.fallbacks += 1;
                FALLBACKS.fetch_add(1, Ordering::Relaxed);
                if let Ok(mut log) = FALLBACK_LOG.lock() {
                    if log.len() < 1000 {
                        log.push(describe(&self.h, &node.fr, f));
                    }
                }
                found = exhaustive(&node.fr, f.flat(), p).ok_or_else(|| {
                    Error::Internal("non-hard component has no f-partition".into())
                })?;
            }
            for &(v, j) in &found {
                classes[v] = j;
            }
        }
        let part = Partition::new(p, classes);
        if !partition_ok(&self.top, f, &part) {
            return Err(Error::Internal("solver produced an invalid partition".into()));
        }
        Ok((SolveResult::Partition(part), stats))
    }
}

fn describe(h: &Hypergraph, sub: &Frame, f: &VectorFunction) -> String {
    let mut s = String::new();
    for v in sub.verts.iter() {
        s.push_str(&format!("{}={:?} ", h.vertex(v), f.get(v)));
    }
    for e in &sub.edges {
        let names: Vec<&str> = e.m.iter().map(|v| h.vertex(v)).collect();
        s.push_str(&format!("[{}]", names.join(" ")));
    }
    s
}

/// An `f`-partition, or certificates for the hard components.
pub fn solve(h: &Hypergraph, f: &VectorFunction) -> Result<SolveResult> {
    Prepared::new(h).solve(f)
}

/// True iff `part` is total and every class is strictly `f_i`-degenerate.
pub fn verify_partition(h: &Hypergraph, f: &VectorFunction, part: &Partition) -> bool {
    if f.check(h).is_err() || part.p != f.p() || part.classes.len() != h.order() {
        return false;
    }
    partition_ok(&Frame::of(h), f, part)
}

fn partition_ok(fr: &Frame, f: &VectorFunction, part: &Partition) -> bool {
    if part.classes.iter().any(|&c| c >= part.p) {
        return false;
    }
    let p = part.p;
    let mut sets: SmallVec<[VSet; 4]> = SmallVec::from_elem(VSet::empty(fr.n), p);
    for (v, &c) in part.classes.iter().enumerate() {
        sets[c].insert(v);
    }
    sets.iter().enumerate().all(|(j, s)| class_ok(fr, s, f.flat(), p, j))
}

/// One executed move of the degree-bound refinement. Classes are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftMove {
    pub vertex: String,
    pub from: usize,
    pub to: usize,
    pub weight_before: i64,
    pub weight_after: i64,
}

/// `W = sum_i (|E(H_i)| - sum_{v in H_i} f_i(v))`.
pub fn partition_weight(h: &Hypergraph, f: &VectorFunction, part: &Partition) -> i64 {
    let inner = h
        .edges()
        .iter()
        .filter(|e| {
            let c = part.classes[e.vertices()[0]];
            e.vertices().iter().all(|&v| part.classes[v] == c)
        })
        .count() as i64;
    let fsum: i64 = (0..h.order())
        .map(|v| i64::from(f.get(v)[part.classes[v]]))
        .sum();
    inner - fsum
}

/// Edges at `v` whose other vertices all lie in class `j`.
fn degree_into(h: &Hypergraph, classes: &[usize], v: usize, j: usize) -> u32 {
    h.edges()
        .iter()
        .filter(|e| e.vertices().contains(&v) && e.vertices().iter().all(|&u| u == v || classes[u] == j))
        .count() as u32
}

pub fn enforce_degree_bounds(h: &Hypergraph, f: &VectorFunction, part: &Partition) -> Result<Partition> {
    enforce_degree_bounds_traced(h, f, part).map(|r| r.0)
}

/// Moves vertices whose class degree exceeds `f_i(v)` to a class with room,
/// recording each move and the weight before and after it.
pub fn enforce_degree_bounds_traced(
    h: &Hypergraph,
    f: &VectorFunction,
    part: &Partition,
) -> Result<(Partition, Vec<ShiftMove>)> {
    check_precondition(h, &h.degrees(), f)?;
    if !verify_partition(h, f, part) {
        return Err(Error::Invalid("input is not an f-partition".into()));
    }
    let p = part.p;
    let mut cur = part.clone();
    let mut moves = Vec::new();
    loop {
        let over = (0..h.order()).find(|&v| {
            let i = cur.classes[v];
            degree_into(h, &cur.classes, v, i) > f.get(v)[i]
        });
        let Some(v) = over else { break };
        let i = cur.classes[v];
        let j = (0..p)
            .filter(|&j| j != i)
            .find(|&j| degree_into(h, &cur.classes, v, j) < f.get(v)[j])
            .ok_or_else(|| Error::Internal(format!("no class can take `{}`", h.vertex(v))))?;
        let before = partition_weight(h, f, &cur);
        cur.classes[v] = j;
        let after = partition_weight(h, f, &cur);
        moves.push(ShiftMove {
            vertex: h.vertex(v).to_string(),
            from: i,
            to: j,
            weight_before: before,
            weight_after: after,
        });
        if after >= before {
            return Err(Error::Internal("weight did not decrease".into()));
        }
    }
    if !verify_partition(h, f, &cur) {
        return Err(Error::Internal("refinement broke the partition".into()));
    }
    Ok((cur, moves))
}
