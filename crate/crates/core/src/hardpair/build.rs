use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VectorFunction;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::generators::{complete_uniform, cycle, random_with, t_fold, RandomSpec};
use crate::hypergraph::Hypergraph;
use crate::structure::{blocks, decompose};

/// Which vertex of an operand gets merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergePoint {
    /// Position in the operand's sorted vertex list.
    Index(usize),
    /// Drawn from the seeded generator.
    Random,
}

/// Recursive description of a hard pair. Coordinates are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HardPlan {
    Mono { block: Hypergraph, j: usize },
    Complete { t: u32, counts: Vec<u32> },
    OddCycle { t: u32, n: usize, k: usize, l: usize },
    Merge {
        left: Box<HardPlan>,
        at_left: MergePoint,
        right: Box<HardPlan>,
        at_right: MergePoint,
    },
}

impl HardPlan {
    pub fn merge(left: HardPlan, right: HardPlan) -> HardPlan {
        HardPlan::Merge {
            left: Box::new(left),
            at_left: MergePoint::Random,
            right: Box::new(right),
            at_right: MergePoint::Random,
        }
    }

    pub fn base_count(&self) -> usize {
        match self {
            HardPlan::Merge { left, right, .. } => left.base_count() + right.base_count(),
            _ => 1,
        }
    }
}

type Built = (Hypergraph, BTreeMap<String, Vec<u32>>);

fn unit(p: usize, j: usize, x: u32) -> Vec<u32> {
    let mut r = vec![0; p];
    r[j - 1] = x;
    r
}

fn check_coord(j: usize, p: usize) -> Result<()> {
    if j == 0 || j > p {
        return Err(Error::Invalid(format!("coordinate {j} outside 1..={p}")));
    }
    Ok(())
}

fn build_rec(plan: &HardPlan, p: usize, prefix: bool, next: &mut usize, rng: &mut ChaCha8Rng) -> Result<Built> {
    let base = |h: Hypergraph, rows: Vec<Vec<u32>>, next: &mut usize| -> Built {
        let h = if prefix {
            let hp = h.prefixed(&format!("b{}.", *next));
            *next += 1;
            hp
        } else {
            h
        };
        let f = h.vertices().iter().cloned().zip(rows).collect();
        (h, f)
    };
    match plan {
        HardPlan::Mono { block, j } => {
            check_coord(*j, p)?;
            if block.is_empty() {
                return Err(Error::Empty);
            }
            let fr = Frame::of(block);
            if !fr.is_connected() || decompose(&fr).blocks.len() != 1 {
                return Err(Error::NotABlock("monoblock base must be a block".into()));
            }
            let rows = block.degrees().into_iter().map(|d| unit(p, *j, d as u32)).collect();
            Ok(base(block.clone(), rows, next))
        }
        HardPlan::Complete { t, counts } => {
            let n = counts.iter().sum::<u32>() as usize + 1;
            if *t == 0 || counts.len() != p || n < 3 || counts.iter().filter(|&&c| c > 0).count() < 2 {
                return Err(Error::Invalid(format!("bad complete block t={t} counts={counts:?}")));
            }
            let h = t_fold(&complete_uniform(n, 2)?, *t as usize)?;
            let row: Vec<u32> = counts.iter().map(|c| c * t).collect();
            Ok(base(h, vec![row; n], next))
        }
        HardPlan::OddCycle { t, n, k, l } => {
            check_coord(*k, p)?;
            check_coord(*l, p)?;
            if *t == 0 || k == l || *n < 5 || n % 2 == 0 {
                return Err(Error::Invalid(format!("bad odd cycle t={t} n={n} coords {k} {l}")));
            }
            let h = t_fold(&cycle(*n)?, *t as usize)?;
            let mut row = unit(p, *k, *t);
            row[*l - 1] = *t;
            Ok(base(h, vec![row; *n], next))
        }
        HardPlan::Merge {
            left,
            at_left,
            right,
            at_right,
        } => {
            let (h1, f1) = build_rec(left, p, prefix, next, rng)?;
            let (h2, f2) = build_rec(right, p, prefix, next, rng)?;
            let pick = |h: &Hypergraph, at: &MergePoint, rng: &mut ChaCha8Rng| -> Result<String> {
                let i = match at {
                    MergePoint::Index(i) => *i,
                    MergePoint::Random => rng.random_range(0..h.order()),
                };
                h.vertices()
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::Invalid(format!("merge index {i} out of range")))
            };
            let v1 = pick(&h1, at_left, rng)?;
            let v2 = pick(&h2, at_right, rng)?;
            let h = Hypergraph::merge(&h1, &v1, &h2, &v2, &v1)?;
            let mut f = f1;
            let star: Vec<u32> = f[&v1].iter().zip(&f2[&v2]).map(|(a, b)| a + b).collect();
            for (k, v) in f2 {
                if k != v2 {
                    f.insert(k, v);
                }
            }
            f.insert(v1, star);
            Ok((h, f))
        }
    }
}

/// Builds `(H, f)` from a plan by repeated merging.
pub fn make_hard(plan: &HardPlan, p: usize, seed: u64) -> Result<(Hypergraph, VectorFunction)> {
    if p == 0 {
        return Err(Error::Invalid("p must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 0;
    let (h, f) = build_rec(plan, p, plan.base_count() > 1, &mut next, &mut rng)?;
    let f = VectorFunction::from_map(&h, p, &f)?;
    Ok((h, f))
}

fn random_base<R: Rng>(p: usize, rng: &mut R) -> HardPlan {
    let kind = if p < 2 { 0 } else { rng.random_range(0..3) };
    match kind {
        0 => {
            let n = rng.random_range(2..=5);
            let m = rng.random_range(n - 1..=if n == 2 { 2 } else { n + 2 });
            let spec = RandomSpec {
                n,
                m,
                max_arity: 3,
                max_mult: 2,
                connected: true,
            };
            let h = random_with(spec, rng).expect("connected spec is feasible");
            let t = blocks(&h).expect("connected");
            let best = t.blocks.iter().max_by_key(|b| b.len()).unwrap();
            let block = h.induced(best).unwrap();
            HardPlan::Mono {
                block,
                j: rng.random_range(1..=p),
            }
        }
        1 => {
            let n = rng.random_range(3..=5usize);
            loop {
                let mut counts = vec![0u32; p];
                for _ in 0..n - 1 {
                    counts[rng.random_range(0..p)] += 1;
                }
                if counts.iter().filter(|&&c| c > 0).count() >= 2 {
                    return HardPlan::Complete {
                        t: rng.random_range(1..=2),
                        counts,
                    };
                }
            }
        }
        _ => {
            let k = rng.random_range(1..=p);
            let mut l = rng.random_range(1..p);
            if l >= k {
                l += 1;
            }
            HardPlan::OddCycle {
                t: rng.random_range(1..=2),
                n: if rng.random_bool(0.7) { 5 } else { 7 },
                k,
                l,
            }
        }
    }
}

/// A random plan with between 1 and `max_blocks` base blocks.
pub fn random_plan<R: Rng>(p: usize, max_blocks: usize, rng: &mut R) -> HardPlan {
    let count = rng.random_range(1..=max_blocks.max(1));
    let mut plan = random_base(p, rng);
    for _ in 1..count {
        plan = HardPlan::merge(plan, random_base(p, rng));
    }
    plan
}
