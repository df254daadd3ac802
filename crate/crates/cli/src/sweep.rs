//! Small-instance enumeration and the equivalence sweep between the hard-pair
//! recognizer, the solver and the brute-force oracle.

use std::collections::{BTreeMap, HashSet};

use hgpart::generators::{random_with, RandomSpec};
use hgpart::oracle::Oracle;
use hgpart::{is_connected, Hypergraph, Prepared, SolveResult, VectorFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounds for the hypergraph family.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub max_n: usize,
    pub max_m: usize,
    pub max_arity: usize,
    pub max_mult: usize,
}

impl Default for Family {
    fn default() -> Self {
        Family {
            max_n: 5,
            max_m: 8,
            max_arity: 3,
            max_mult: 2,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .iter()
        .map(|e| e.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

fn relabel(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    for (v, &w) in perm.iter().enumerate() {
        if mask >> v & 1 == 1 {
            out |= 1 << w;
        }
    }
    out
}

/// Isomorphism-invariant key: the lexicographically least sorted edge-mask
/// list over permutations that keep degrees non-increasing.
pub fn canonical_key(h: &Hypergraph) -> (usize, Vec<u32>) {
    let n = h.order();
    let masks = edge_masks(h);
    let deg = h.degrees();
    let mut best: Option<Vec<u32>> = None;
    // vertices grouped by degree, highest first; only permute within groups
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(g) if deg[g[0]] == deg[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let group_perms: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g.len())).collect();
    let mut idx = vec![0usize; groups.len()];
    let mut perm = vec![0usize; n];
    loop {
        let mut pos = 0;
        for (g, gp) in groups.iter().zip(&group_perms).zip(&idx).map(|((g, gp), &i)| (g, &gp[i])) {
            for (k, &v) in g.iter().enumerate() {
                perm[v] = pos + gp[k];
            }
            pos += g.len();
        }
        let mut cand: Vec<u32> = masks.iter().map(|&m| relabel(m, &perm)).collect();
        cand.sort_unstable();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return (n, best.unwrap_or_default());
            }
            idx[k] += 1;
            if idx[k] < group_perms[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn from_masks(n: usize, masks: &[u32]) -> Hypergraph {
    let names = hgpart::generators::vertex_names(n);
    let w = masks.len().saturating_sub(1).to_string().len();
    Hypergraph::new(
        names.clone(),
        masks.iter().enumerate().map(|(i, &m)| {
            (
                format!("e{i:0w$}"),
                (0..n).filter(|v| m >> v & 1 == 1).map(|v| names[v].clone()).collect::<Vec<_>>(),
            )
        }),
    )
    .expect("masks describe a valid hypergraph")
}

fn edge_types(n: usize, max_arity: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|m| (2..=max_arity).contains(&(m.count_ones() as usize)))
        .collect()
}

/// Every connected hypergraph on exactly `n` vertices in the family, one per
/// isomorphism class, or `None` if the edge-type space is too big to scan.
/// Fewest edges a connected member of order `n` can have.
fn min_edges(n: usize, fam: Family) -> usize {
    (n - 1).div_ceil(fam.max_arity.max(2) - 1)
}

pub fn exhaustive_of_order(n: usize, fam: Family) -> Option<Vec<Hypergraph>> {
    if n == 1 {
        return Some(vec![from_masks(1, &[])]);
    }
    let types = edge_types(n, fam.max_arity);
    let space = (fam.max_mult as u64 + 1).checked_pow(types.len() as u32)?;
    if space > 200_000 {
        return None;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut mult = vec![0usize; types.len()];
    loop {
        let m: usize = mult.iter().sum();
        if m >= min_edges(n, fam) && m <= fam.max_m {
            let masks: Vec<u32> = types
                .iter()
                .zip(&mult)
                .flat_map(|(&t, &k)| std::iter::repeat_n(t, k))
                .collect();
            let h = from_masks(n, &masks);
            if is_connected(&h) && seen.insert(canonical_key(&h)) {
                out.push(h);
            }
        }
        let mut k = 0;
        loop {
            if k == mult.len() {
                return Some(out);
            }
            mult[k] += 1;
            if mult[k] <= fam.max_mult {
                break;
            }
            mult[k] = 0;
            k += 1;
        }
    }
}

/// Canonical sample: every isomorphism class for orders small enough to scan,
/// then seeded random classes of the remaining orders until `target` is
/// reached. Output is sorted by order and then by canonical key.
pub fn canonical_sample(fam: Family, target: usize, seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: BTreeMap<(usize, Vec<u32>), Hypergraph> = BTreeMap::new();
    let mut sampled_orders = Vec::new();
    for n in 1..=fam.max_n {
        match exhaustive_of_order(n, fam) {
            Some(hs) => {
                for h in hs {
                    found.insert(canonical_key(&h), h);
                }
            }
            None => sampled_orders.push(n),
        }
    }
    if !sampled_orders.is_empty() {
        // the sampled orders get at least half the budget
        let want = target.saturating_sub(found.len()).max(target / 2);
        let mut got = 0;
        let mut attempts = 0;
        while got < want && attempts < want * 200 {
            attempts += 1;
            let n = sampled_orders[rng.random_range(0..sampled_orders.len())];
            let m = rng.random_range(min_edges(n, fam)..=fam.max_m);
            let spec = RandomSpec {
                n,
                m,
                max_arity: fam.max_arity,
                max_mult: fam.max_mult,
                connected: true,
            };
            let Ok(h) = random_with(spec, &mut rng) else { continue };
            let key = canonical_key(&h);
            if !found.contains_key(&key) {
                let h = from_masks(n, &key.1);
                found.insert(key, h);
                got += 1;
            }
        }
    }
    found.into_values().collect()
}

/// Calls `visit` on each function [`degree_functions`] would return, in the
/// same order, reusing one buffer.
pub fn each_degree_function(h: &Hypergraph, p: usize, cap: u32, mut visit: impl FnMut(&VectorFunction)) {
    fn compositions(total: u32, p: usize, cap: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p);
        fn rec(left: u32, p: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() + 1 == p {
                if left <= cap {
                    cur.push(left);
                    out.push(cur.clone());
                    cur.pop();
                }
                return;
            }
            for x in 0..=left.min(cap) {
                cur.push(x);
                rec(left - x, p, cap, cur, out);
                cur.pop();
            }
        }
        if p > 0 {
            rec(total, p, cap, &mut cur, &mut out);
        }
        out
    }
    let choices: Vec<Vec<Vec<u32>>> = h.degrees().iter().map(|&d| compositions(d as u32, p, cap)).collect();
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let rows = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
    let mut f = VectorFunction::new(p, rows).expect("rows have p entries");
    loop {
        visit(&f);
        let mut k = idx.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                f.set(k, &choices[k][idx[k]]);
                break;
            }
            idx[k] = 0;
            f.set(k, &choices[k][0]);
        }
    }
}

/// Every `f` with `p` coordinates, `f_i <= cap` and `sum_i f_i(v) = d(v)`,
/// in lexicographic order of the flat value vector.
pub fn degree_functions(h: &Hypergraph, p: usize, cap: u32) -> Vec<VectorFunction> {
    let mut out = Vec::new();
    each_degree_function(h, p, cap, |f| out.push(f.clone()));
    out
}

/// Counters for one slice of the sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub hypergraphs: usize,
    pub pairs: usize,
    pub hard: usize,
    pub partitionable: usize,
    pub disagreements: usize,
    pub unverified: usize,
    pub fallbacks: usize,
}

impl Tally {
    pub fn add(&mut self, o: &Tally) {
        self.hypergraphs += o.hypergraphs;
        self.pairs += o.pairs;
        self.hard += o.hard;
        self.partitionable += o.partitionable;
        self.disagreements += o.disagreements;
        self.unverified += o.unverified;
        self.fallbacks += o.fallbacks;
    }
}

/// A pair on which the recognizer, the solver and the oracle did not line up.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub hypergraph: Hypergraph,
    pub f: VectorFunction,
    pub what: String,
}

/// Checks one pair; returns a description of any inconsistency.
pub fn check_pair(prep: &Prepared, oracle: &Oracle, f: &VectorFunction, t: &mut Tally) -> Option<String> {
    let h = prep.hypergraph();
    t.pairs += 1;
    let hard = match prep.is_hard(f) {
        Ok(c) => c,
        Err(e) => return Some(format!("is_hard failed: {e}")),
    };
    let verdict = match oracle.partitionable(f) {
        Ok(v) => v,
        Err(e) => return Some(format!("oracle failed: {e}")),
    };
    if hard.is_some() {
        t.hard += 1;
    }
    if verdict.partitionable {
        t.partitionable += 1;
    }
    if hard.is_some() == verdict.partitionable {
        t.disagreements += 1;
        return Some(format!(
            "recognizer says hard={} but oracle says partitionable={}",
            hard.is_some(),
            verdict.partitionable
        ));
    }
    if let Some(c) = &hard {
        if !hgpart::verify_certificate(h, f, c) {
            t.unverified += 1;
            return Some("certificate rejected by verifier".into());
        }
    }
    match prep.solve_with_stats(f) {
        Ok((res, stats)) => {
            t.fallbacks += stats.fallbacks;
            match res {
                SolveResult::Partition(part) => {
                    if !verdict.partitionable || !oracle.is_f_partition(f, &part) {
                        t.unverified += 1;
                        return Some("solve returned an invalid partition".into());
                    }
                }
                SolveResult::Hard(_) => {
                    if verdict.partitionable {
                        t.unverified += 1;
                        return Some("solve returned certificates on a partitionable pair".into());
                    }
                }
            }
        }
        Err(e) => {
            t.unverified += 1;
            return Some(format!("solve failed: {e}"));
        }
    }
    None
}

/// Result of [`equivalence_sweep`]: per-order tallies and the first few mismatches.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub by_order: BTreeMap<usize, Tally>,
    pub mismatches: Vec<Mismatch>,
    /// Pairs the oracle found not partitionable, as (index into the input, f).
    pub non_partitionable: Vec<(usize, VectorFunction)>,
}

impl SweepReport {
    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for x in self.by_order.values() {
            t.add(x);
        }
        t
    }
}

/// All degree-sum functions with `p` in `ps` and entries at most `cap`, over
/// every hypergraph in `hs`.
pub fn equivalence_sweep(hs: &[Hypergraph], ps: &[usize], cap: u32) -> SweepReport {
    let mut rep = SweepReport::default();
    for (idx, h) in hs.iter().enumerate() {
        let prep = Prepared::new(h);
        let oracle = Oracle::new(h).expect("sweep instances are small");
        let t = rep.by_order.entry(h.order()).or_default();
        t.hypergraphs += 1;
        for &p in ps {
            each_degree_function(h, p, cap, |f| {
                let before = t.partitionable;
                let problem = check_pair(&prep, &oracle, f, t);
                if problem.is_none() && t.partitionable == before {
                    rep.non_partitionable.push((idx, f.clone()));
                }
                if let Some(what) = problem {
                    if rep.mismatches.len() < 20 {
                        rep.mismatches.push(Mismatch {
                            hypergraph: h.clone(),
                            f: f.clone(),
                            what,
                        });
                    }
                }
            });
        }
    }
    rep
}
