//! Brute-force ground truth by subset enumeration. Deliberately independent
//! of the peeling, block and search code.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::hardpair::VectorFunction;
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;

pub const DEGENERATE_GUARD: usize = 12;
pub const PARTITION_GUARD: usize = 10;
pub const ASSIGNMENT_GUARD: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub partitionable: bool,
    pub witness: Option<Partition>,
}

/// Per-hypergraph tables, reusable across many threshold functions.
#[derive(Debug)]
pub struct Oracle {
    n: usize,
    /// `deg[t * n + v]`: degree of `v` in the subhypergraph induced by mask `t`.
    deg: Vec<u8>,
    /// Validity tables already built, keyed by packed threshold row.
    tables: Mutex<HashMap<u64, Arc<Vec<bool>>, BuildHasherDefault<WordHasher>>>,
}

/// Multiplicative hash for the packed `u64` keys.
#[derive(Default)]
struct WordHasher(u64);

impl Hasher for WordHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(u64::from(b));
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }

    fn finish(&self) -> u64 {
        self.0 ^ (self.0 >> 32)
    }
}

impl Clone for Oracle {
    fn clone(&self) -> Self {
        Oracle {
            n: self.n,
            deg: self.deg.clone(),
            tables: Mutex::default(),
        }
    }
}

const TABLE_CACHE_LIMIT: usize = 1 << 14;

impl Oracle {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        let n = h.order();
        if n > DEGENERATE_GUARD {
            return Err(Error::TooLarge(format!("oracle needs at most {DEGENERATE_GUARD} vertices, got {n}")));
        }
        let masks: Vec<u32> = h
            .edges()
            .iter()
            .map(|e| e.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut deg = vec![0u8; (1usize << n) * n];
        for t in 0..1u32 << n {
            for &m in &masks {
                if m & t == m {
                    for v in 0..n {
                        if m >> v & 1 == 1 {
                            deg[t as usize * n + v] = deg[t as usize * n + v].saturating_add(1);
                        }
                    }
                }
            }
        }
        Ok(Oracle {
            n,
            deg,
            tables: Mutex::default(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Table over all masks: does the induced subhypergraph pass the
    /// definition of strict `h`-degeneracy?
    fn ok_table(&self, h: impl Fn(usize) -> u32) -> Vec<bool> {
        let n = self.n;
        let full = 1usize << n;
        // bad[t]: t non-empty and no vertex of t has degree below h
        let mut bad: Vec<bool> = (0..full)
            .map(|t| {
                t != 0
                    && (0..n)
                        .filter(|&v| t >> v & 1 == 1)
                        .all(|v| u32::from(self.deg[t * n + v]) >= h(v))
            })
            .collect();
        for v in 0..n {
            for t in 0..full {
                if t >> v & 1 == 1 && bad[t ^ (1 << v)] {
                    bad[t] = true;
                }
            }
        }
        bad.into_iter().map(|b| !b).collect()
    }

    /// Five bits per vertex. Thresholds above `d(v) + 1` act like `d(v) + 1`,
    /// so they are clamped; `None` if some degree is too large to pack.
    fn row_key(&self, h: impl Fn(usize) -> u32) -> Option<u64> {
        let n = self.n;
        let full = (1usize << n) - 1;
        let mut key = 0u64;
        for v in 0..n {
            let d = u32::from(self.deg[full * n + v]);
            if d >= 31 {
                return None;
            }
            key |= u64::from(h(v).min(d + 1)) << (5 * v);
        }
        Some(key)
    }

    fn cached_table(&self, h: impl Fn(usize) -> u32) -> Arc<Vec<bool>> {
        let Some(key) = self.row_key(&h) else {
            return Arc::new(self.ok_table(h));
        };
        if let Some(t) = self.tables.lock().ok().and_then(|m| m.get(&key).cloned()) {
            return t;
        }
        let t = Arc::new(self.ok_table(h));
        if let Ok(mut m) = self.tables.lock() {
            if m.len() < TABLE_CACHE_LIMIT {
                m.insert(key, t.clone());
            }
        }
        t
    }

    /// Definition-level check that `part` is an `f`-partition.
    pub fn is_f_partition(&self, f: &VectorFunction, part: &Partition) -> bool {
        let n = self.n;
        if f.len() != n || part.classes().len() != n || part.p() != f.p() {
            return false;
        }
        let mut masks = vec![0usize; f.p()];
        for (v, &c) in part.classes().iter().enumerate() {
            match masks.get_mut(c) {
                Some(m) => *m |= 1 << v,
                None => return false,
            }
        }
        masks.iter().enumerate().all(|(i, &m)| self.cached_table(|v| f.get(v)[i])[m])
    }

    pub fn strictly_degenerate(&self, mask: u32, h: impl Fn(usize) -> u32) -> bool {
        let n = self.n;
        let mut sub = mask as usize;
        loop {
            if sub != 0
                && (0..n)
                    .filter(|&v| sub >> v & 1 == 1)
                    .all(|v| u32::from(self.deg[sub * n + v]) >= h(v))
            {
                return false;
            }
            if sub == 0 {
                return true;
            }
            sub = (sub - 1) & mask as usize;
        }
    }

    /// First valid assignment in lexicographic order (vertex 0 varies slowest).
    pub fn partitionable(&self, f: &VectorFunction) -> Result<OracleVerdict> {
        let n = self.n;
        let p = f.p();
        if f.len() != n {
            return Err(Error::Invalid("function does not match hypergraph".into()));
        }
        if n > PARTITION_GUARD || (p as u64).checked_pow(n as u32).is_none_or(|x| x > ASSIGNMENT_GUARD) {
            return Err(Error::TooLarge(format!("p^n too large for oracle (p={p}, n={n})")));
        }
        let ok: Vec<Arc<Vec<bool>>> = (0..p).map(|i| self.cached_table(|v| f.get(v)[i])).collect();
        let mut classes = vec![0usize; n];
        let mut masks = vec![0usize; p];
        fn rec(v: usize, n: usize, ok: &[Arc<Vec<bool>>], masks: &mut [usize], classes: &mut [usize]) -> bool {
            if v == n {
                return true;
            }
            for i in 0..ok.len() {
                masks[i] |= 1 << v;
                // every subset of a valid class is valid, so partial checks prune soundly
                if ok[i][masks[i]] {
                    classes[v] = i;
                    if rec(v + 1, n, ok, masks, classes) {
                        return true;
                    }
                }
                masks[i] &= !(1 << v);
            }
            false
        }
        let found = rec(0, n, &ok, &mut masks, &mut classes);
        Ok(OracleVerdict {
            partitionable: found,
            witness: found.then(|| Partition::new(p, classes)),
        })
    }
}

pub fn brute_strictly_degenerate(h: &Hypergraph, f: &crate::degeneracy::ScalarFunction) -> Result<bool> {
    f.check(h)?;
    let o = Oracle::new(h)?;
    let full = if h.order() == 32 { u32::MAX } else { (1u32 << h.order()) - 1 };
    Ok(o.strictly_degenerate(full, |v| f.get(v)))
}

pub fn brute_partitionable(h: &Hypergraph, f: &VectorFunction) -> Result<OracleVerdict> {
    f.check(h)?;
    if h.order() > PARTITION_GUARD {
        return Err(Error::TooLarge(format!("oracle needs at most {PARTITION_GUARD} vertices")));
    }
    Oracle::new(h)?.partitionable(f)
}
