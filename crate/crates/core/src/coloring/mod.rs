//! List coloring, degree-constrained partitions, point partitions and
//! choosability, all as reductions to [`solve`](crate::partition::solve).

mod choose;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

pub use choose::{chi_and_chi_list, chromatic_number, is_k_choosable, list_chromatic_number, CHOOSE_GUARD, CHROMATIC_GUARD};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::hardpair::{HardPairCertificate, VectorFunction};
use crate::hypergraph::Hypergraph;
use crate::partition::{enforce_degree_bounds, exhaustive, Partition, SolveResult, Prepared};
use crate::structure::is_connected;

/// Allowed colors per vertex, aligned with a hypergraph's vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<String>>,
}

/// Numbers compare numerically and sort before other names.
pub fn color_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

impl ListAssignment {
    pub fn new<S: Into<String>>(lists: Vec<Vec<S>>) -> Self {
        ListAssignment {
            lists: lists
                .into_iter()
                .map(|l| l.into_iter().map(Into::into).collect())
                .collect(),
        }
    }

    /// The same list at each of `n` vertices.
    pub fn uniform<S: AsRef<str>>(n: usize, colors: &[S]) -> Self {
        let l: BTreeSet<String> = colors.iter().map(|c| c.as_ref().to_string()).collect();
        ListAssignment { lists: vec![l; n] }
    }

    pub fn from_map(h: &Hypergraph, map: &BTreeMap<String, Vec<String>>) -> Result<Self> {
        let mut lists = vec![None; h.order()];
        for (v, l) in map {
            lists[h.require(v)?] = Some(l.iter().cloned().collect());
        }
        let mut out = Vec::with_capacity(h.order());
        for (i, l) in lists.into_iter().enumerate() {
            out.push(l.ok_or_else(|| Error::UnknownVertex(h.vertex(i).to_string()))?);
        }
        Ok(ListAssignment { lists: out })
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: usize) -> &BTreeSet<String> {
        &self.lists[v]
    }

    /// Union of all lists in color order.
    pub fn colors(&self) -> Vec<String> {
        let all: BTreeSet<&String> = self.lists.iter().flatten().collect();
        let mut out: Vec<String> = all.into_iter().cloned().collect();
        out.sort_by(|a, b| color_order(a, b));
        out
    }

    fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.lists.len() != h.order() {
            return Err(Error::Invalid(format!(
                "{} lists for {} vertices",
                self.lists.len(),
                h.order()
            )));
        }
        Ok(())
    }
}

/// A color per vertex, aligned with the vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<String>,
}

impl Coloring {
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, String> {
        h.vertices().iter().cloned().zip(self.colors.iter().cloned()).collect()
    }
}

/// No edge has all its vertices in one color.
pub fn is_proper_coloring(h: &Hypergraph, c: &Coloring) -> bool {
    c.colors.len() == h.order()
        && h.edges().iter().all(|e| {
            let first = &c.colors[e.vertices()[0]];
            e.vertices().iter().any(|&v| &c.colors[v] != first)
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListColorResult {
    Coloring(Coloring),
    Hard(Vec<(Vec<String>, HardPairCertificate)>),
}

/// `f_i(v) = s` if the `i`-th color (in color order) is in `L(v)`, else 0.
/// Returns the function and the color order used.
pub fn list_to_vector(h: &Hypergraph, l: &ListAssignment, s: u32) -> Result<(VectorFunction, Vec<String>)> {
    l.check(h)?;
    let colors = l.colors();
    let p = colors.len().max(1);
    let rows = (0..h.order())
        .map(|v| {
            let mut r = vec![0; p];
            for (i, c) in colors.iter().enumerate() {
                if l.get(v).contains(c) {
                    r[i] = s;
                }
            }
            r
        })
        .collect();
    Ok((VectorFunction::new(p, rows)?, colors))
}

fn color_via_solve(h: &Hypergraph, l: &ListAssignment, s: u32) -> Result<ListColorResult> {
    let (f, colors) = list_to_vector(h, l, s)?;
    Ok(match Prepared::new(h).solve(&f)? {
        SolveResult::Partition(part) => ListColorResult::Coloring(Coloring {
            colors: part.classes().iter().map(|&i| colors[i].clone()).collect(),
        }),
        SolveResult::Hard(c) => ListColorResult::Hard(c),
    })
}

/// Proper `L`-coloring, or certificates showing none exists.
pub fn list_color(h: &Hypergraph, l: &ListAssignment) -> Result<ListColorResult> {
    l.check(h)?;
    for (v, d) in h.degrees().into_iter().enumerate() {
        if l.get(v).len() < d {
            return Err(Error::Precondition {
                vertex: h.vertex(v).to_string(),
                reason: format!("list has {} colors but degree is {d}", l.get(v).len()),
            });
        }
    }
    color_via_solve(h, l, 1)
}

/// Proper `L`-coloring found by exhaustive search, with no list-size
/// hypothesis. Intended for small inputs.
pub fn list_color_exhaustive(h: &Hypergraph, l: &ListAssignment) -> Result<Option<Coloring>> {
    let (f, colors) = list_to_vector(h, l, 1)?;
    if h.order() > 16 {
        return Err(Error::TooLarge(format!("exhaustive list coloring on {} vertices", h.order())));
    }
    let fr = Frame::of(h);
    Ok(exhaustive(&fr, f.flat(), f.p()).map(|a| {
        let mut out = vec![String::new(); h.order()];
        for (v, j) in a {
            out[v] = colors[j].clone();
        }
        Coloring { colors: out }
    }))
}

/// `Some(description)` if `h` is `tK_n` or `tC_n` with `n` odd.
pub fn excluded_shape(h: &Hypergraph) -> Option<String> {
    let n = h.order();
    if n == 1 {
        return Some("K_1".into());
    }
    if !h.is_graph() || h.size() == 0 {
        return None;
    }
    let t = h.multiplicity_at(h.edges()[0].vertices()[0], h.edges()[0].vertices()[1]);
    let simple = h.underlying_simple();
    if simple.size() * t != h.size() || simple.edges().iter().any(|e| h.multiplicity_at(e.vertices()[0], e.vertices()[1]) != t) {
        return None;
    }
    if simple.size() == n * (n - 1) / 2 {
        return Some(format!("{t}K_{n}"));
    }
    if n % 2 == 1 && simple.size() == n && simple.degrees().iter().all(|&d| d == 2) && is_connected(h) {
        return Some(format!("{t}C_{n}"));
    }
    None
}

/// Partition with `col(H_i) <= k_i` and `Δ(H_i) <= k_i`.
pub fn degree_constrained_partition(h: &Hypergraph, k: &[u32]) -> Result<Partition> {
    if h.is_empty() {
        return Err(Error::Empty);
    }
    if !is_connected(h) {
        return Err(Error::Disconnected);
    }
    if k.len() < 2 || k.contains(&0) {
        return Err(Error::Invalid("need p >= 2 and every k_i >= 1".into()));
    }
    let total: u32 = k.iter().sum();
    let d = h.degrees();
    if let Some(v) = (0..h.order()).find(|&v| d[v] > total as usize) {
        return Err(Error::Precondition {
            vertex: h.vertex(v).to_string(),
            reason: format!("degree {} exceeds sum of k = {total}", d[v]),
        });
    }
    if let Some(shape) = excluded_shape(h) {
        return Err(Error::ExcludedShape(shape));
    }
    let f = VectorFunction::constant(h.order(), k);
    match Prepared::new(h).solve(&f)? {
        SolveResult::Partition(part) => enforce_degree_bounds(h, &f, &part),
        SolveResult::Hard(_) => Err(Error::Internal("constant function produced a hard pair".into())),
    }
}

/// How a degeneracy level `s` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DegeneracyConvention {
    /// Classes strictly `s`-degenerate.
    #[default]
    Strict,
    /// Classes `s`-degenerate in the min-degree sense, i.e. strictly `(s+1)`-degenerate.
    LickWhite,
}

impl DegeneracyConvention {
    pub fn threshold(self, s: u32) -> u32 {
        match self {
            DegeneracyConvention::Strict => s,
            DegeneracyConvention::LickWhite => s + 1,
        }
    }
}

pub const POINT_PARTITION_GUARD: usize = 16;

/// Least `k` with a partition into `k` classes each at degeneracy level `s`,
/// with a witness partition.
pub fn point_partition_number(h: &Hypergraph, s: u32, conv: DegeneracyConvention) -> Result<(usize, Partition)> {
    if s == 0 {
        return Err(Error::Invalid("s must be at least 1".into()));
    }
    if h.is_empty() {
        return Ok((0, Partition::new(0, Vec::new())));
    }
    let thr = conv.threshold(s);
    let delta = h.max_degree() as u32;
    let prep = Prepared::new(h);
    let fr = Frame::of(h);
    for k in 1..=h.order() {
        let f = VectorFunction::constant(h.order(), &vec![thr; k]);
        if k as u32 * thr >= delta {
            if let SolveResult::Partition(part) = prep.solve(&f)? {
                return Ok((k, part));
            }
        } else {
            if h.order() > POINT_PARTITION_GUARD {
                return Err(Error::TooLarge(format!(
                    "exhaustive point partition on {} vertices",
                    h.order()
                )));
            }
            if let Some(a) = exhaustive(&fr, f.flat(), k) {
                let mut classes = vec![0; h.order()];
                for (v, j) in a {
                    classes[v] = j;
                }
                return Ok((k, Partition::new(k, classes)));
            }
        }
    }
    Err(Error::Internal("singleton classes always work".into()))
}

/// `L`-coloring whose color classes are strictly `s`-degenerate.
pub fn is_lxs_choosable(h: &Hypergraph, l: &ListAssignment, s: u32) -> Result<ListColorResult> {
    l.check(h)?;
    if s == 0 {
        return Err(Error::Invalid("s must be at least 1".into()));
    }
    for (v, d) in h.degrees().into_iter().enumerate() {
        if (l.get(v).len() as u64) * u64::from(s) < d as u64 {
            return Err(Error::Precondition {
                vertex: h.vertex(v).to_string(),
                reason: format!("s*|L(v)| = {} is below degree {d}", l.get(v).len() as u64 * u64::from(s)),
            });
        }
    }
    color_via_solve(h, l, s)
}
