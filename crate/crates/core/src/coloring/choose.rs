//! Exact chromatic and list-chromatic numbers for small hypergraphs.
//!
//! Choosability is decided by searching for a bad list assignment. Only
//! assignments whose color classes induce connected subhypergraphs on at least
//! two vertices need to be considered: a disconnected class can be split into
//! one fresh color per component without changing list sizes, and a vertex
//! alone in its class is colorable last, which reduces to the same question on
//! a smaller vertex set (checked first). Assignments are enumerated as
//! multisets of classes grouped by their smallest vertex.

use std::collections::HashMap;

use crate::degeneracy::col;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const CHOOSE_GUARD: usize = 10;
pub const CHROMATIC_GUARD: usize = 20;

struct Small {
    n: usize,
    edges: Vec<u32>,
}

impl Small {
    fn of(h: &Hypergraph) -> Small {
        let s = h.underlying_simple();
        Small {
            n: s.order(),
            edges: s
                .edges()
                .iter()
                .map(|e| e.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
                .collect(),
        }
    }

    fn full(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    fn deg_in(&self, s: u32, v: usize) -> u32 {
        self.edges
            .iter()
            .filter(|&&e| e & s == e && e >> v & 1 == 1)
            .count() as u32
    }

    fn connected_in(&self, t: u32) -> bool {
        let mut comp = t & t.wrapping_neg();
        loop {
            let mut next = comp;
            for &e in &self.edges {
                if e & t == e && e & comp != 0 {
                    next |= e;
                }
            }
            if next == comp {
                return comp == t;
            }
            comp = next;
        }
    }
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| m >> v & 1 == 1)
}

fn colorable_with(sm: &Small, k: u32) -> bool {
    let n = sm.n;
    // edges indexed by their largest vertex
    let mut by_max = vec![Vec::new(); n];
    for &e in &sm.edges {
        by_max[31 - e.leading_zeros() as usize].push(e);
    }
    let mut color = vec![0u32; n];
    fn rec(v: usize, used: u32, k: u32, n: usize, by_max: &[Vec<u32>], color: &mut [u32]) -> bool {
        if v == n {
            return true;
        }
        for c in 0..k.min(used + 1) {
            color[v] = c;
            let ok = by_max[v].iter().all(|&e| bits(e).any(|u| color[u] != c));
            if ok && rec(v + 1, used.max(c + 1), k, n, by_max, color) {
                return true;
            }
        }
        false
    }
    rec(0, 0, k, n, &by_max, &mut color)
}

/// Exact chromatic number by backtracking.
pub fn chromatic_number(h: &Hypergraph) -> Result<u32> {
    if h.order() > CHROMATIC_GUARD {
        return Err(Error::TooLarge(format!("chromatic number on {} vertices", h.order())));
    }
    let sm = Small::of(h);
    if sm.n == 0 {
        return Ok(0);
    }
    let mut k = 1;
    while !colorable_with(&sm, k) {
        k += 1;
    }
    Ok(k)
}

struct Chooser<'a> {
    sm: &'a Small,
    memo: HashMap<(u32, u32), bool>,
}

struct Bad<'a> {
    sm: &'a Small,
    s: u32,
    k: u32,
    classes: Vec<u32>,
    by_min: Vec<Vec<usize>>,
    count: Vec<u32>,
    lists: Vec<Vec<usize>>,
    colors: Vec<u32>,
    last: Option<(usize, usize)>,
}

impl Bad<'_> {
    fn search(&mut self) -> bool {
        let Some(pivot) = bits(self.s).find(|&v| self.count[v] < self.k) else {
            return !self.guaranteed();
        };
        let start = match self.last {
            Some((pv, idx)) if pv == pivot => idx,
            _ => 0,
        };
        for idx in start..self.by_min[pivot].len() {
            let t = self.classes[self.by_min[pivot][idx]];
            if bits(t).any(|u| self.count[u] >= self.k) {
                continue;
            }
            let id = self.colors.len();
            self.colors.push(t);
            for u in bits(t) {
                self.count[u] += 1;
                self.lists[u].push(id);
            }
            let saved = self.last.replace((pivot, idx));
            let prune = self.count[pivot] == self.k && self.guaranteed();
            if !prune && self.search() {
                return true;
            }
            self.last = saved;
            for u in bits(t) {
                self.count[u] -= 1;
                self.lists[u].pop();
            }
            self.colors.pop();
        }
        false
    }

    /// True if some coloring of the finished vertices leaves the rest
    /// greedily colorable however the remaining colors are distributed.
    fn guaranteed(&self) -> bool {
        let fin: u32 = bits(self.s).filter(|&v| self.count[v] == self.k).fold(0, |m, v| m | 1 << v);
        let order: Vec<usize> = bits(fin).collect();
        let mut phi = vec![usize::MAX; self.sm.n];
        self.phi_dfs(0, &order, 0, &mut phi, fin)
    }

    fn phi_dfs(&self, i: usize, order: &[usize], done: u32, phi: &mut [usize], fin: u32) -> bool {
        if i == order.len() {
            return self.residual_ok(phi, fin);
        }
        let v = order[i];
        let done = done | 1 << v;
        for &c in &self.lists[v] {
            phi[v] = c;
            let ok = self
                .sm
                .edges
                .iter()
                .filter(|&&e| e & done == e && e >> v & 1 == 1)
                .all(|&e| bits(e).any(|u| phi[u] != c));
            if ok && self.phi_dfs(i + 1, order, done, phi, fin) {
                return true;
            }
        }
        phi[v] = usize::MAX;
        false
    }

    fn residual_ok(&self, phi: &[usize], fin: u32) -> bool {
        let u_set = self.s & !fin;
        if u_set == 0 {
            return true;
        }
        let n = self.sm.n;
        let mut avail = vec![0i64; n];
        for u in bits(u_set) {
            let blocked = self.lists[u]
                .iter()
                .filter(|&&c| {
                    self.sm.edges.iter().any(|&e| {
                        e & self.s == e && e & u_set == 1 << u && bits(e & !(1 << u)).all(|w| phi[w] == c)
                    })
                })
                .count();
            avail[u] = i64::from(self.k - self.count[u]) + (self.lists[u].len() - blocked) as i64;
        }
        let resid: Vec<u32> = self
            .sm
            .edges
            .iter()
            .copied()
            .filter(|&e| {
                if e & self.s != e || (e & u_set).count_ones() < 2 {
                    return false;
                }
                let mut fc = bits(e & fin).map(|w| phi[w]);
                match fc.next() {
                    None => true,
                    Some(c) => fc.all(|x| x == c),
                }
            })
            .collect();
        let mut alive = u_set;
        let mut dead = vec![false; resid.len()];
        loop {
            let pick = bits(alive).find(|&u| {
                let d = resid
                    .iter()
                    .zip(&dead)
                    .filter(|&(&e, &dd)| !dd && e >> u & 1 == 1)
                    .count() as i64;
                d < avail[u]
            });
            let Some(u) = pick else { break };
            alive &= !(1 << u);
            for (e, dd) in resid.iter().zip(dead.iter_mut()) {
                if e >> u & 1 == 1 {
                    *dd = true;
                }
            }
        }
        alive == 0
    }
}

impl Chooser<'_> {
    fn core(&self, mut s: u32, k: u32) -> u32 {
        loop {
            match bits(s).find(|&v| self.sm.deg_in(s, v) < k) {
                Some(v) => s &= !(1 << v),
                None => return s,
            }
        }
    }

    fn choosable(&mut self, s: u32, k: u32) -> bool {
        if s == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let s = self.core(s, k);
        if s == 0 {
            return true;
        }
        if let Some(&r) = self.memo.get(&(s, k)) {
            return r;
        }
        for v in bits(s) {
            if !self.choosable(s & !(1 << v), k) {
                self.memo.insert((s, k), false);
                return false;
            }
        }
        let r = !self.exists_bad(s, k);
        self.memo.insert((s, k), r);
        r
    }

    fn exists_bad(&self, s: u32, k: u32) -> bool {
        let n = self.sm.n;
        let mut classes = Vec::new();
        let mut t = s;
        while t != 0 {
            if t.count_ones() >= 2 && self.sm.connected_in(t) {
                classes.push(t);
            }
            t = (t - 1) & s;
        }
        classes.sort_unstable();
        let mut by_min = vec![Vec::new(); n];
        for (i, &t) in classes.iter().enumerate() {
            by_min[t.trailing_zeros() as usize].push(i);
        }
        let mut bad = Bad {
            sm: self.sm,
            s,
            k,
            classes,
            by_min,
            count: vec![0; n],
            lists: vec![Vec::new(); n],
            colors: Vec::new(),
            last: None,
        };
        bad.search()
    }
}

/// Whether every assignment of `k`-element lists admits a proper coloring.
pub fn is_k_choosable(h: &Hypergraph, k: u32) -> Result<bool> {
    if h.order() > CHOOSE_GUARD {
        return Err(Error::TooLarge(format!("choosability on {} vertices", h.order())));
    }
    // identical lists already fail
    if chromatic_number(h)? > k {
        return Ok(false);
    }
    let sm = Small::of(h);
    let mut c = Chooser {
        sm: &sm,
        memo: HashMap::new(),
    };
    Ok(c.choosable(sm.full(), k))
}

/// Exact list-chromatic number.
pub fn list_chromatic_number(h: &Hypergraph) -> Result<u32> {
    chi_and_chi_list(h, CHOOSE_GUARD).map(|r| r.1)
}

/// `(χ, χ^ℓ)`, refusing inputs with more than `bound` vertices.
pub fn chi_and_chi_list(h: &Hypergraph, bound: usize) -> Result<(u32, u32)> {
    if h.order() > bound.min(CHOOSE_GUARD) {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds bound {}",
            h.order(),
            bound.min(CHOOSE_GUARD)
        )));
    }
    let chi = chromatic_number(h)?;
    let simple = h.underlying_simple();
    let upper = col(&simple);
    let sm = Small::of(h);
    let mut c = Chooser {
        sm: &sm,
        memo: HashMap::new(),
    };
    for k in chi..upper {
        if c.choosable(sm.full(), k) {
            return Ok((chi, k));
        }
    }
    Ok((chi, upper))
}
