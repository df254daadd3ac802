//! Acceptance suite. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use hgpart::catalog;
use hgpart::coloring::degree_constrained_partition;
use hgpart::format::{parse_instance, parse_report};
use hgpart::generators::{random_hypergraph, RandomSpec};
use hgpart::hardpair::random_plan;
use hgpart::oracle::Oracle;
use hgpart::partition::{enforce_degree_bounds_traced, fallback_count, partition_weight};
use hgpart::{
    col, is_hard, make_hard, separating_vertices, solve, verify_certificate, verify_partition, BlockTypeTag,
    Hypergraph, Partition, SolveResult, VectorFunction,
};
use hgpart_cli::census::{connected_graphs, hypergraph_sample, run_census};
use hgpart_cli::sweep::{canonical_sample, equivalence_sweep, Family, SweepReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn with(f: &VectorFunction, v: usize, i: usize, delta: i64) -> VectorFunction {
    let mut g = f.clone();
    let mut row = f.get(v).to_vec();
    row[i] = (row[i] as i64 + delta).max(0) as u32;
    g.set(v, &row);
    g
}

/// Every assignment of `n` vertices to `p` classes.
fn assignments(n: usize, p: usize) -> impl Iterator<Item = Partition> {
    (0..p.pow(n as u32)).map(move |mut c| {
        let classes = (0..n)
            .map(|_| {
                let x = c % p;
                c /= p;
                x
            })
            .collect();
        Partition::new(p, classes)
    })
}

fn criterion_1(hs: &[Hypergraph], rep: &SweepReport) -> Verdict {
    let t = rep.total();
    let detail = format!(
        "{} hypergraphs, {} pairs, {} hard, {} disagreements, {} unverified",
        t.hypergraphs, t.pairs, t.hard, t.disagreements, t.unverified
    );
    ensure(hs.len() >= 2000 && t.hypergraphs == hs.len(), || format!("only {} hypergraphs", hs.len()))?;
    ensure(t.disagreements == 0 && t.unverified == 0 && rep.mismatches.is_empty(), || {
        format!("{detail}; first: {:?}", rep.mismatches.first().map(|m| &m.what))
    })?;
    Ok(detail)
}

fn criterion_2() -> Verdict {
    let mut perturbed = 0;
    let mut confirmed = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rng.random_range(1..=4);
        let plan = random_plan(p, 4, &mut rng);
        let (h, f) = make_hard(&plan, p, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let cert = is_hard(&h, &f).map_err(|e| e.to_string())?;
        let cert = cert.ok_or_else(|| format!("seed {seed}: built pair not recognized"))?;
        ensure(verify_certificate(&h, &f, &cert), || format!("seed {seed}: certificate rejected"))?;
        if h.order() <= 8 {
            let o = Oracle::new(&h).map_err(|e| e.to_string())?;
            ensure(!o.partitionable(&f).unwrap().partitionable, || {
                format!("seed {seed}: oracle partitions a built pair")
            })?;
            confirmed += 1;
        }
        for v in 0..h.order() {
            for i in 0..p {
                let g = with(&f, v, i, 1);
                perturbed += 1;
                ensure(is_hard(&h, &g).unwrap().is_none(), || format!("seed {seed}: +1 at ({v},{i}) still hard"))?;
                let ok = match solve(&h, &g).map_err(|e| e.to_string())? {
                    SolveResult::Partition(part) => verify_partition(&h, &g, &part),
                    SolveResult::Hard(_) => false,
                };
                ensure(ok, || format!("seed {seed}: +1 at ({v},{i}) not partitioned"))?;
            }
        }
    }
    Ok(format!("500 built pairs ({confirmed} oracle-confirmed), {perturbed} perturbations partitioned"))
}

fn criterion_3() -> Verdict {
    let (k4, fk) = catalog::doubled_k4();
    let c = is_hard(&k4, &fk).unwrap().ok_or("doubled K4 not hard")?;
    ensure(matches!(c.blocks[0].tag, BlockTypeTag::K { t: 2, .. }), || format!("{:?}", c.blocks[0].tag))?;
    let (c5, fc) = catalog::tripled_c5();
    let c = is_hard(&c5, &fc).unwrap().ok_or("tripled C5 not hard")?;
    ensure(matches!(c.blocks[0].tag, BlockTypeTag::C { t: 3, .. }), || format!("{:?}", c.blocks[0].tag))?;

    let h = catalog::degree_six_example();
    let check = |part: &Partition, how: &str| -> Result<(), String> {
        for i in 0..2 {
            let cls = part.class_hypergraph(&h, i);
            ensure(col(&cls) <= 3 && cls.max_degree() <= 3, || {
                format!("{how}: class {} has col {} and max degree {}", i + 1, col(&cls), cls.max_degree())
            })?;
        }
        Ok(())
    };
    let part = degree_constrained_partition(&h, &[3, 3]).map_err(|e| e.to_string())?;
    check(&part, "library")?;

    let inst = hgpart(&["gen", "catalog", "degree-six"], None).stdout;
    let r = hgpart(&["refine-degrees", "--k", "3,3", "-"], Some(&inst));
    ensure(r.code == 0, || r.stderr.clone())?;
    let parsed = parse_instance(&inst).map_err(|e| e.to_string())?;
    let part = parse_report(&r.stdout)
        .and_then(|rep| rep.partition(&parsed.hypergraph, 2))
        .map_err(|e| e.to_string())?;
    check(&part, "binary")?;
    Ok("doubled K4 is type K, tripled C5 is type C, degree-six example splits with col and max degree <= 3".into())
}

fn criterion_4() -> Verdict {
    let graphs = connected_graphs(7);
    ensure(graphs.len() == 996, || format!("{} connected graphs on <= 7 vertices", graphs.len()))?;
    let hypers = hypergraph_sample(5, 2000, 0);
    let (gt, gbad) = run_census(&graphs).map_err(|e| e.to_string())?;
    let (ht, hbad) = run_census(&hypers).map_err(|e| e.to_string())?;
    let tight: usize = gt.values().chain(ht.values()).map(|t| t.tight).sum();
    ensure(gbad.is_empty() && hbad.is_empty(), || {
        format!("exception: {:?}", gbad.first().or(hbad.first()).map(|x| &x.1))
    })?;
    Ok(format!(
        "{} graphs and {} hypergraphs, {tight} tight, 0 exceptions",
        graphs.len(),
        hypers.len()
    ))
}

fn degree_law() -> Result<usize, String> {
    let mut checks = 0;
    let mut seed = 0u64;
    while checks < 10_000 {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=8);
        let spec = RandomSpec {
            n,
            m: rng.random_range(0..=2 * n),
            max_arity: 4,
            max_mult: 3,
            connected: false,
        };
        let Ok(h) = random_hypergraph(spec, seed) else { continue };
        let v = h.vertex(rng.random_range(0..n)).to_string();
        let s = h.shrink_vertex(&v).unwrap();
        for u in s.vertices() {
            let want = h.degree(u).unwrap() - h.multiplicity(u, &v).unwrap();
            ensure(s.degree(u).unwrap() == want, || format!("seed {seed}: degree of {u} after shrinking {v}"))?;
            checks += 1;
        }
    }
    Ok(checks)
}

/// Properties every non-partitionable pair from the sweep must have.
fn hard_pair_properties(h: &Hypergraph, f: &VectorFunction) -> Result<(), String> {
    let n = h.order();
    let p = f.p();
    let o = Oracle::new(h).unwrap();
    let sep = separating_vertices(h);
    let tag = || format!("{:?} {:?}", h.edge_multiset(), f);

    // raising any single value makes it partitionable
    for v in 0..n {
        for i in 0..p {
            ensure(o.partitionable(&with(f, v, i, 1)).unwrap().partitionable, || {
                format!("+1 at ({v},{i}) not partitionable: {}", tag())
            })?;
        }
    }

    for z in (0..n).filter(|&z| !sep.iter().any(|s| s == h.vertex(z))) {
        let name = h.vertex(z);
        for j in (0..p).filter(|&j| f.get(z)[j] > 0) {
            for v in (0..n).filter(|&v| v != z) {
                let mu = h.multiplicity_at(z, v) as u32;
                ensure(f.get(v)[j] >= mu, || format!("f_{j}({v}) < mu({z},{v}): {}", tag()))?;
            }
            if n < 2 {
                continue;
            }
            let s = h.shrink_vertex(name).unwrap();
            let rows = (0..n)
                .filter(|&v| v != z)
                .map(|v| {
                    let mut r = f.get(v).to_vec();
                    r[j] = r[j].saturating_sub(h.multiplicity_at(z, v) as u32);
                    r
                })
                .collect();
            let g = VectorFunction::new(p, rows).unwrap();
            ensure(!Oracle::new(&s).unwrap().partitionable(&g).unwrap().partitionable, || {
                format!("reduction at ({z},{j}) became partitionable: {}", tag())
            })?;
        }
    }

    // every f-partition of H - u covers u's edges exactly f_i(u) times per class
    for u in 0..n {
        let name = h.vertex(u);
        let rest = h.delete(&[name]).unwrap();
        let fr = f.restrict(h, &rest).unwrap();
        let or = Oracle::new(&rest).unwrap();
        ensure(rest.order() == 0 || or.partitionable(&fr).unwrap().partitionable, || {
            format!("H - {name} not partitionable: {}", tag())
        })?;
        let at_u: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .filter(|e| e.vertices().contains(&u))
            .map(|e| {
                e.vertices()
                    .iter()
                    .filter(|&&x| x != u)
                    .map(|&x| rest.index_of(h.vertex(x)).unwrap())
                    .collect()
            })
            .collect();
        for part in assignments(rest.order(), p) {
            if !or.is_f_partition(&fr, &part) {
                continue;
            }
            let mut count = vec![0u32; p];
            for others in &at_u {
                let i = part.class_of(others[0]);
                ensure(others.iter().all(|&x| part.class_of(x) == i), || {
                    format!("edge at {name} split by an f-partition of H - {name}: {}", tag())
                })?;
                count[i] += 1;
            }
            ensure(count == f.get(u), || format!("edges at {name} per class {count:?}: {}", tag()))?;
        }
    }
    Ok(())
}

fn shifting() -> Result<usize, String> {
    let mut runs = 0;
    for seed in 0..400u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=6);
        let p = rng.random_range(2..=3);
        let spec = RandomSpec {
            n,
            m: rng.random_range(n - 1..=2 * n),
            max_arity: 3,
            max_mult: 2,
            connected: true,
        };
        let Ok(h) = random_hypergraph(spec, seed) else { continue };
        let rows = h
            .degrees()
            .iter()
            .map(|&d| {
                let mut r = vec![0u32; p];
                for _ in 0..d + rng.random_range(0..=1) {
                    r[rng.random_range(0..p)] += 1;
                }
                r
            })
            .collect();
        let f = VectorFunction::new(p, rows).unwrap();
        let SolveResult::Partition(start) = solve(&h, &f).unwrap() else { continue };
        let (end, moves) = enforce_degree_bounds_traced(&h, &f, &start).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_partition(&h, &f, &end), || format!("seed {seed}: result not an f-partition"))?;
        ensure(moves.iter().all(|m| m.weight_after < m.weight_before), || {
            format!("seed {seed}: weight did not drop")
        })?;
        let w_min = assignments(n, p)
            .filter(|q| verify_partition(&h, &f, q))
            .map(|q| partition_weight(&h, &f, &q))
            .min()
            .unwrap();
        let w0 = partition_weight(&h, &f, &start);
        ensure(moves.len() as i64 <= w0 - w_min, || {
            format!("seed {seed}: {} moves but W0 - Wmin = {}", moves.len(), w0 - w_min)
        })?;
        runs += 1;
    }
    Ok(runs)
}

fn criterion_5(hs: &[Hypergraph], rep: &SweepReport) -> Verdict {
    let laws = degree_law()?;
    for (idx, f) in &rep.non_partitionable {
        hard_pair_properties(&hs[*idx], f)?;
    }
    let runs = shifting()?;
    Ok(format!(
        "{laws} degree-law checks, {} non-partitionable pairs, {runs} shifting runs",
        rep.non_partitionable.len()
    ))
}

struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn run_bin(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hgpart"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

struct Text {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hgpart(args: &[&str], stdin: Option<&str>) -> Text {
    let r = run_bin(args, stdin);
    Text {
        code: r.code,
        stdout: String::from_utf8_lossy(&r.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&r.stderr).into_owned(),
    }
}

fn criterion_6() -> Verdict {
    let random = hgpart(&["gen", "random", "--n", "7", "--m", "9", "--seed", "3", "--f", "2,2,2"], None).stdout;
    let hard = hgpart(&["gen", "hard", "--p", "3", "--blocks", "3", "--seed", "5"], None).stdout;
    let six = hgpart(&["gen", "catalog", "degree-six"], None).stdout;
    let lists = hgpart(&["gen", "catalog", "list-example"], None).stdout;
    let cases: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["gen", "random", "--n", "7", "--m", "9", "--seed", "3", "--f", "2,2,2"], None),
        (vec!["gen", "hard", "--p", "3", "--blocks", "3", "--seed", "5"], None),
        (vec!["gen", "catalog", "hexagon-ring"], None),
        (vec!["partition", "-"], Some(&random)),
        (vec!["partition", "-"], Some(&hard)),
        (vec!["is-hard", "-"], Some(&hard)),
        (vec!["blocks", "-"], Some(&hard)),
        (vec!["col", "-"], Some(&random)),
        (vec!["alpha", "--s", "2", "-"], Some(&six)),
        (vec!["refine-degrees", "--k", "3,3", "-"], Some(&six)),
        (vec!["list-color", "-"], Some(&lists)),
        (vec!["oracle-check", "--count", "30", "--seed", "9"], None),
        (vec!["census", "--max-n", "3", "--count", "50"], None),
        (vec!["census", "--kind", "brooks", "--max-n", "5", "--count", "100"], None),
    ];
    for (args, stdin) in &cases {
        let a = run_bin(args, *stdin);
        let b = run_bin(args, *stdin);
        ensure(a.code == b.code && a.stdout == b.stdout && a.stderr == b.stderr, || {
            format!("`hgpart {}` differs between runs", args.join(" "))
        })?;
        ensure(!a.stdout.is_empty() || !a.stderr.is_empty(), || {
            format!("`hgpart {}` printed nothing", args.join(" "))
        })?;
    }
    Ok(format!("{} commands byte-identical across two runs", cases.len()))
}

fn criterion_7(rep: &SweepReport) -> Verdict {
    let t = rep.total();
    Ok(format!(
        "{} exhaustive fallbacks in the sweep ({} in this process)",
        t.fallbacks,
        fallback_count()
    ))
}

fn main() {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, started: Instant, v: Verdict| {
        let secs = started.elapsed().as_secs_f64();
        match v {
            Ok(msg) => println!("[PASS] {id} {name}: {msg} ({secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {msg} ({secs:.1}s)");
            }
        }
    };

    let t = Instant::now();
    let hs = canonical_sample(Family::default(), 2000, 0);
    let rep = equivalence_sweep(&hs, &[2, 3], 3);
    report(1, "recognizer matches oracle", t, criterion_1(&hs, &rep));

    let t = Instant::now();
    report(2, "constructed pairs are hard and tight", t, criterion_2());
    let t = Instant::now();
    report(3, "worked examples", t, criterion_3());
    let t = Instant::now();
    report(4, "list-coloring census", t, criterion_4());
    let t = Instant::now();
    report(5, "structural properties", t, criterion_5(&hs, &rep));
    let t = Instant::now();
    report(6, "deterministic output", t, criterion_6());
    let t = Instant::now();
    report(7, "fallback count", t, criterion_7(&rep));

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
