mod common;

use hgpart::format::{emit_certificates, emit_partition, parse_report};
use hgpart::oracle::Oracle;
use hgpart::partition::{enforce_degree_bounds_traced, partition_weight};
use hgpart::{is_hard, solve, verify_certificate, verify_partition, Partition, SolveResult, VectorFunction};
use proptest::prelude::*;

/// Every `f` on `h` with `f_i(v) <= cap` and `sum_i f_i(v) >= d(v)`.
fn all_functions(h: &hgpart::Hypergraph, p: usize, cap: u32) -> Vec<VectorFunction> {
    let rows: Vec<Vec<Vec<u32>>> = h
        .degrees()
        .iter()
        .map(|&d| {
            let mut out = Vec::new();
            let mut r = vec![0u32; p];
            loop {
                if r.iter().sum::<u32>() as usize >= d {
                    out.push(r.clone());
                }
                let mut k = 0;
                while k < p && r[k] == cap {
                    r[k] = 0;
                    k += 1;
                }
                if k == p {
                    break;
                }
                r[k] += 1;
            }
            out
        })
        .collect();
    let mut fs = Vec::new();
    let mut idx = vec![0usize; rows.len()];
    loop {
        fs.push(VectorFunction::new(p, idx.iter().zip(&rows).map(|(&i, r)| r[i].clone()).collect()).unwrap());
        let mut k = 0;
        while k < idx.len() && idx[k] + 1 == rows[k].len() {
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
        idx[k] += 1;
    }
    fs
}

#[test]
fn solver_matches_oracle_exhaustively_on_small_connected() {
    let mut pairs = 0;
    for seed in 0..60u64 {
        let n = 2 + (seed % 4) as usize;
        let spec = common::spec(n, n - 1 + (seed % 3) as usize, true);
        let Ok(h) = hgpart::generators::random_hypergraph(spec, seed) else {
            continue;
        };
        if h.max_degree() > 4 {
            continue;
        }
        let o = Oracle::new(&h).unwrap();
        for f in all_functions(&h, 2, 2) {
            pairs += 1;
            let truth = o.partitionable(&f).unwrap().partitionable;
            let hard = is_hard(&h, &f).unwrap();
            assert_eq!(hard.is_none(), truth, "{h:?} {f:?}");
            match solve(&h, &f).unwrap() {
                SolveResult::Partition(part) => {
                    assert!(truth);
                    assert!(o.is_f_partition(&f, &part));
                }
                SolveResult::Hard(certs) => {
                    assert!(!truth);
                    assert_eq!(certs.len(), 1);
                    assert!(verify_certificate(&h, &f, &certs[0].1));
                }
            }
        }
    }
    assert!(pairs > 1000, "{pairs}");
}

/// Smallest `W` over all `p`-partitions that are `f`-partitions.
fn min_weight(h: &hgpart::Hypergraph, f: &VectorFunction) -> i64 {
    let n = h.order();
    let p = f.p();
    let mut best = i64::MAX;
    for code in 0..p.pow(n as u32) {
        let mut c = code;
        let classes: Vec<usize> = (0..n)
            .map(|_| {
                let x = c % p;
                c /= p;
                x
            })
            .collect();
        let part = Partition::new(p, classes);
        if verify_partition(h, f, &part) {
            best = best.min(partition_weight(h, f, &part));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solve_is_sound(h in common::hypergraph(9, false), seed in any::<u64>(), p in 1usize..4) {
        let f = common::degree_function(&h, p, 1, seed);
        match solve(&h, &f).unwrap() {
            SolveResult::Partition(part) => {
                prop_assert!(verify_partition(&h, &f, &part));
                let text = emit_partition(&h, &part);
                let back = parse_report(&text).unwrap().partition(&h, p).unwrap();
                prop_assert_eq!(back, part);
            }
            SolveResult::Hard(certs) => {
                prop_assert!(!certs.is_empty());
                let back = parse_report(&emit_certificates(&certs)).unwrap().certificates;
                prop_assert_eq!(&back, &certs);
                for (comp, cert) in &certs {
                    let sub = h.induced(comp).unwrap();
                    let fs = f.restrict(&h, &sub).unwrap();
                    prop_assert!(verify_certificate(&sub, &fs, cert));
                }
            }
        }
    }

    #[test]
    fn refinement_strictly_lowers_weight(h in common::hypergraph(6, true), seed in any::<u64>()) {
        let f = common::degree_function(&h, 2, 1, seed);
        let Some(start) = solve(&h, &f).unwrap().partition().cloned() else {
            return Ok(());
        };
        let (end, moves) = enforce_degree_bounds_traced(&h, &f, &start).unwrap();
        prop_assert!(verify_partition(&h, &f, &end));
        for m in &moves {
            prop_assert!(m.weight_after < m.weight_before);
        }
        let w0 = partition_weight(&h, &f, &start);
        prop_assert!(moves.len() as i64 <= w0 - min_weight(&h, &f));
        // every vertex now meets its class bound
        for v in 0..h.order() {
            let i = end.class_of(v);
            let cls = end.class_hypergraph(&h, i);
            prop_assert!(cls.degree(h.vertex(v)).unwrap() as u32 <= f.get(v)[i]);
        }
    }
}
