//! Command definitions and handlers. Handlers build the full stdout text and
//! an exit code; `main` only prints them.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgpart::catalog;
use hgpart::coloring::{
    degree_constrained_partition, list_color, list_color_exhaustive, point_partition_number, DegeneracyConvention,
    ListAssignment, ListColorResult,
};
use hgpart::degeneracy::{DegeneracyWitness, ScalarFunction};
use hgpart::format::{
    emit_certificates, emit_coloring, emit_instance, emit_partition, instance_with_vector, parse_instance, parse_report,
    Instance, Labels,
};
use hgpart::generators::{complete_uniform, cycle, path, random_hypergraph, t_fold, RandomSpec};
use hgpart::hardpair::{make_hard, random_plan};
use hgpart::oracle::Oracle;
use hgpart::{
    blocks, col, enforce_degree_bounds, is_strictly_degenerate, verify_certificate, verify_partition, Error,
    Hypergraph, Prepared, SolveResult, VectorFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::{connected_graphs, hypergraph_sample, run_census};
use crate::sweep::{canonical_sample, check_pair, degree_functions, equivalence_sweep, Family, Tally};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_HARD: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hgpart", version, about = "Partitions of hypergraphs into strictly degenerate parts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// Instance file, or `-` for standard input.
    pub file: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Convention {
    Strict,
    LickWhite,
}

#[derive(Clone, Copy, Debug, ValueEnum, Default)]
pub enum CensusKind {
    /// Recognizer vs. oracle on every degree-sum function.
    #[default]
    Equivalence,
    /// List-chromatic number against maximum degree.
    Brooks,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Block decomposition and block-cut tree.
    Blocks {
        #[command(flatten)]
        input: InputArg,
    },
    /// Coloring number.
    Col {
        #[command(flatten)]
        input: InputArg,
    },
    /// Strict degeneracy with respect to one coordinate of the instance's function.
    Degenerate {
        #[command(flatten)]
        input: InputArg,
        /// 1-based coordinate.
        #[arg(long, default_value_t = 1)]
        coord: usize,
    },
    /// Hard-pair recognition with certificate.
    IsHard {
        #[command(flatten)]
        input: InputArg,
    },
    /// f-partition or hard-pair certificates.
    Partition {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Partition whose classes also respect degree bounds. With `--k`, uses the
    /// constant function k; otherwise the instance's function.
    RefineDegrees {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated bounds, e.g. `3,3`.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<u32>>,
    },
    /// Proper coloring from the instance's lists.
    ListColor {
        #[command(flatten)]
        input: InputArg,
    },
    /// Point-partition number.
    Alpha {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, value_enum, default_value_t = Convention::Strict)]
        convention: Convention,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Random small instances checked against the brute-force oracle.
    OracleCheck {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random hypergraphs.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Functions tried per hypergraph.
        #[arg(long, default_value_t = 40)]
        per: usize,
    },
    /// Small-instance sweep with a per-order table.
    Census {
        #[arg(long, value_enum, default_value_t)]
        kind: CensusKind,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Hypergraphs in the equivalence sweep or the hypergraph part of the Brooks census.
        #[arg(long, default_value_t = 2000)]
        count: usize,
        /// Comma-separated numbers of classes.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        p: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-check a command's output against an instance.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Output of `partition`, `is-hard`, `list-color` or `refine-degrees`.
        report: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// `tK_n^q`.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Constant function attached to every vertex, e.g. `1,1,1`.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u32>>,
    },
    /// `tC_n`.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u32>>,
    },
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u32>>,
    },
    /// `t` parallel copies of every edge of an instance file.
    Tfold {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        t: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long, default_value_t = 1)]
        max_mult: usize,
        #[arg(long, default_value_t = false)]
        disconnected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u32>>,
    },
    /// Random hard pair built by merging basic blocks.
    Hard {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        blocks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A named example instance.
    Catalog {
        /// One of: hexagon-ring, doubled-k4, tripled-c5, degree-six, list-example, petersen.
        name: String,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn hard(stdout: String) -> Self {
        Outcome {
            code: EXIT_HARD,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok(o) => o,
        Err(e) => e.into(),
    }
}

fn read_input(input: &InputArg) -> hgpart::Result<Instance> {
    let text = if input.file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Invalid(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Error::Invalid(format!("{}: {e}", input.file.display())))?
    };
    parse_instance(&text)
}

fn need_vector(inst: &Instance) -> hgpart::Result<&VectorFunction> {
    inst.vector()
        .ok_or_else(|| Error::Invalid("instance needs f-values on every vertex (`v name f1 .. fp`)".into()))
}

fn need_lists(inst: &Instance) -> hgpart::Result<&ListAssignment> {
    inst.lists()
        .ok_or_else(|| Error::Invalid("instance needs color lists on every vertex (`l name c1 ..`)".into()))
}

fn join<S: AsRef<str>>(xs: impl IntoIterator<Item = S>) -> String {
    xs.into_iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().join(" ")
}

fn attach(h: Hypergraph, f: Option<&[u32]>) -> Instance {
    match f {
        Some(row) => instance_with_vector(&h, &VectorFunction::constant(h.order(), row)),
        None => Instance {
            p: 0,
            hypergraph: h,
            labels: Labels::Bare,
        },
    }
}

fn dispatch(cmd: &Command) -> hgpart::Result<Outcome> {
    match cmd {
        Command::Blocks { input } => cmd_blocks(&read_input(input)?),
        Command::Col { input } => {
            let h = read_input(input)?.hypergraph;
            Ok(Outcome::ok(format!(
                "result col\ncol {}\nmax-degree {}\n",
                col(&h),
                h.max_degree()
            )))
        }
        Command::Degenerate { input, coord } => cmd_degenerate(&read_input(input)?, *coord),
        Command::IsHard { input } => {
            let inst = read_input(input)?;
            let f = need_vector(&inst)?;
            let h = &inst.hypergraph;
            match Prepared::new(h).is_hard(f)? {
                Some(c) => Ok(Outcome::hard(emit_certificates(&[(h.vertices().to_vec(), c)]))),
                None => Ok(Outcome::ok("result not-hard\n".into())),
            }
        }
        Command::Partition { input, format: _ } => {
            let inst = read_input(input)?;
            let f = need_vector(&inst)?;
            Ok(solve_outcome(&inst.hypergraph, f, false)?)
        }
        Command::RefineDegrees { input, k } => {
            let inst = read_input(input)?;
            let h = &inst.hypergraph;
            match k {
                Some(k) => {
                    let part = degree_constrained_partition(h, k)?;
                    let f = VectorFunction::constant(h.order(), k);
                    Ok(Outcome::ok(partition_text(h, &f, &part, true)))
                }
                None => Ok(solve_outcome(h, need_vector(&inst)?, true)?),
            }
        }
        Command::ListColor { input } => cmd_list_color(&read_input(input)?),
        Command::Alpha { input, s, convention } => {
            let h = read_input(input)?.hypergraph;
            let conv = match convention {
                Convention::Strict => DegeneracyConvention::Strict,
                Convention::LickWhite => DegeneracyConvention::LickWhite,
            };
            let (k, part) = point_partition_number(&h, *s, conv)?;
            let mut out = emit_partition(&h, &part);
            let _ = writeln!(out, "alpha {k}");
            let _ = writeln!(out, "threshold {}", conv.threshold(*s));
            Ok(Outcome::ok(out))
        }
        Command::Gen { kind } => cmd_gen(kind),
        Command::OracleCheck {
            max_n,
            p,
            seed,
            count,
            per,
        } => cmd_oracle_check(*max_n, *p, *seed, *count, *per),
        Command::Census {
            kind,
            max_n,
            count,
            p,
            seed,
        } => match kind {
            CensusKind::Equivalence => cmd_census(*max_n, *count, p, *seed),
            CensusKind::Brooks => cmd_brooks(*max_n, *count, *seed),
        },
        Command::Verify { input, report } => {
            let inst = read_input(input)?;
            let text = std::fs::read_to_string(report)
                .map_err(|e| Error::Invalid(format!("{}: {e}", report.display())))?;
            cmd_verify(&inst, &text)
        }
    }
}

fn cmd_blocks(inst: &Instance) -> hgpart::Result<Outcome> {
    let t = blocks(&inst.hypergraph)?;
    let mut s = format!("result blocks count={}\n", t.blocks.len());
    for (i, (b, es)) in t.blocks.iter().zip(&t.block_edges).enumerate() {
        let _ = writeln!(s, "members {i} {}", join(b));
        let _ = writeln!(s, "edges {i} {}", join(es).trim_end());
    }
    let _ = writeln!(s, "cut {}", join(&t.cut_vertices));
    for (b, v) in &t.tree_edges {
        let _ = writeln!(s, "tree {b} {v}");
    }
    let _ = writeln!(s, "end-blocks {}", join(t.end_blocks().iter().map(usize::to_string)));
    Ok(Outcome::ok(s.lines().map(|l| l.trim_end().to_string() + "\n").collect()))
}

fn cmd_degenerate(inst: &Instance, coord: usize) -> hgpart::Result<Outcome> {
    let h = &inst.hypergraph;
    let f = need_vector(inst)?;
    if coord == 0 || coord > f.p() {
        return Err(Error::Invalid(format!("--coord must be in 1..={}", f.p())));
    }
    let sf = ScalarFunction::new(f.rows().map(|r| r[coord - 1]).collect());
    Ok(match is_strictly_degenerate(h, &sf)? {
        DegeneracyWitness::RemovalOrder(order) => Outcome::ok(format!("result degenerate\norder {}\n", join(&order))),
        DegeneracyWitness::Core(core) => Outcome::hard(format!("result not-degenerate\ncore {}\n", join(&core))),
    })
}

fn partition_text(h: &Hypergraph, f: &VectorFunction, part: &hgpart::Partition, bounds: bool) -> String {
    let mut s = emit_partition(h, part);
    if bounds {
        for i in 0..part.p() {
            let sub = part.class_hypergraph(h, i);
            let _ = writeln!(s, "class {} size={} col={} max-degree={}", i + 1, sub.order(), col(&sub), sub.max_degree());
        }
        let within = (0..h.order()).all(|v| {
            let i = part.class_of(v);
            let sub = part.class_hypergraph(h, i);
            let name = h.vertex(v);
            sub.degree(name).unwrap_or(0) as u32 <= f.get(v)[i]
        });
        let _ = writeln!(s, "degree-bounds {}", if within { "ok" } else { "violated" });
    }
    s
}

fn solve_outcome(h: &Hypergraph, f: &VectorFunction, refine: bool) -> hgpart::Result<Outcome> {
    match Prepared::new(h).solve(f)? {
        SolveResult::Partition(part) => {
            let part = if refine { enforce_degree_bounds(h, f, &part)? } else { part };
            Ok(Outcome::ok(partition_text(h, f, &part, refine)))
        }
        SolveResult::Hard(certs) => Ok(Outcome::hard(emit_certificates(&certs))),
    }
}

fn cmd_list_color(inst: &Instance) -> hgpart::Result<Outcome> {
    let h = &inst.hypergraph;
    let l = need_lists(inst)?;
    let d = h.degrees();
    let enough = (0..h.order()).all(|v| l.get(v).len() >= d[v]);
    if enough {
        return Ok(match list_color(h, l)? {
            ListColorResult::Coloring(c) => Outcome::ok(emit_coloring(h, &c)),
            ListColorResult::Hard(certs) => Outcome::hard(emit_certificates(&certs)),
        });
    }
    let mut out = match list_color_exhaustive(h, l)? {
        Some(c) => Outcome::ok(emit_coloring(h, &c)),
        None => Outcome::hard("result uncolorable\n".into()),
    };
    out.stderr = "note: some list is shorter than the degree; used exhaustive search\n".into();
    out.stdout.push_str("method exhaustive\n");
    Ok(out)
}

fn cmd_gen(kind: &GenKind) -> hgpart::Result<Outcome> {
    let inst = match kind {
        GenKind::Complete { n, q, t, f } => attach(t_fold(&complete_uniform(*n, *q)?, *t)?, f.as_deref()),
        GenKind::Cycle { n, t, f } => attach(t_fold(&cycle(*n)?, *t)?, f.as_deref()),
        GenKind::Path { n, f } => attach(path(*n)?, f.as_deref()),
        GenKind::Tfold { input, t } => {
            let inst = read_input(input)?;
            let h = t_fold(&inst.hypergraph, *t)?;
            Instance {
                p: inst.p,
                hypergraph: h,
                labels: inst.labels,
            }
        }
        GenKind::Random {
            n,
            m,
            max_arity,
            max_mult,
            disconnected,
            seed,
            f,
        } => {
            let spec = RandomSpec {
                n: *n,
                m: *m,
                max_arity: *max_arity,
                max_mult: *max_mult,
                connected: !disconnected,
            };
            attach(random_hypergraph(spec, *seed)?, f.as_deref())
        }
        GenKind::Hard { p, blocks, seed } => {
            if *p == 0 || *blocks == 0 {
                return Err(Error::Invalid("need p >= 1 and blocks >= 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let plan = random_plan(*p, *blocks, &mut rng);
            let (h, f) = make_hard(&plan, *p, rng.random())?;
            instance_with_vector(&h, &f)
        }
        GenKind::Catalog { name } => {
            let (h, f, l) = catalog::by_name(name).ok_or_else(|| {
                Error::Invalid(format!("unknown catalog name `{name}`; known: {}", catalog::NAMES.join(", ")))
            })?;
            match (f, l) {
                (Some(f), _) => instance_with_vector(&h, &f),
                (None, Some(l)) => Instance {
                    p: l.colors().len(),
                    hypergraph: h,
                    labels: Labels::Lists(l),
                },
                (None, None) => attach(h, None),
            }
        }
    };
    Ok(Outcome::ok(emit_instance(&inst)))
}

fn random_degree_function<R: Rng>(h: &Hypergraph, p: usize, rng: &mut R) -> VectorFunction {
    let rows = h
        .degrees()
        .into_iter()
        .map(|d| {
            let mut r = vec![0u32; p];
            for _ in 0..d {
                r[rng.random_range(0..p)] += 1;
            }
            r
        })
        .collect();
    VectorFunction::new(p, rows).expect("rows have p entries")
}

fn cmd_oracle_check(max_n: usize, p: usize, seed: u64, count: usize, per: usize) -> hgpart::Result<Outcome> {
    if max_n == 0 || max_n > hgpart::oracle::PARTITION_GUARD || p == 0 {
        return Err(Error::Invalid(format!(
            "need 1 <= --max-n <= {} and --p >= 1",
            hgpart::oracle::PARTITION_GUARD
        )));
    }
    if (p as u64).checked_pow(max_n as u32).is_none_or(|x| x > hgpart::oracle::ASSIGNMENT_GUARD) {
        return Err(Error::TooLarge("p^max-n exceeds the oracle guard".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    let mut first = None;
    let mut check = |h: &Hypergraph, fs: Vec<VectorFunction>, t: &mut Tally| -> hgpart::Result<()> {
        let prep = Prepared::new(h);
        let oracle = Oracle::new(h)?;
        t.hypergraphs += 1;
        for f in fs {
            if let Some(what) = check_pair(&prep, &oracle, &f, t) {
                first.get_or_insert_with(|| emit_instance(&instance_with_vector(h, &f)) + "# " + &what + "\n");
            }
        }
        Ok(())
    };
    for _ in 0..count {
        let n = rng.random_range(1..=max_n);
        // pairs and triples, each at most twice
        let slots = 2 * (n * n.saturating_sub(1) / 2 + n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
        let h = loop {
            let m = if n == 1 { 0 } else { rng.random_range(n - 1..=(2 * n).min(slots)) };
            let spec = RandomSpec {
                n,
                m,
                max_arity: 3.min(n.max(2)),
                max_mult: 2,
                connected: true,
            };
            // a nearly full edge budget can fail to place; draw again
            if let Ok(h) = random_hypergraph(spec, rng.random()) {
                break h;
            }
        };
        let all = degree_functions(&h, p, u32::MAX);
        let fs = if all.len() <= per {
            all
        } else {
            (0..per).map(|_| random_degree_function(&h, p, &mut rng)).collect()
        };
        check(&h, fs, &mut t)?;
    }
    // hard pairs are rare among random functions, so add generated ones and
    // their one-step perturbations
    let mut hard_checked = 0;
    let mut attempts = 0;
    while hard_checked < count / 4 && attempts < count * 20 {
        attempts += 1;
        let plan = random_plan(p, 2, &mut rng);
        let (h, f) = make_hard(&plan, p, rng.random())?;
        if h.order() > max_n {
            continue;
        }
        hard_checked += 1;
        let mut fs = vec![f.clone()];
        let v = rng.random_range(0..h.order());
        let i = rng.random_range(0..p);
        let mut g = f.clone();
        let mut row = g.get(v).to_vec();
        row[i] += 1;
        g.set(v, &row);
        fs.push(g);
        check(&h, fs, &mut t)?;
    }
    let mut s = String::new();
    let _ = writeln!(s, "result oracle-check");
    let _ = writeln!(s, "max-n {max_n}");
    let _ = writeln!(s, "p {p}");
    let _ = writeln!(s, "seed {seed}");
    let _ = writeln!(s, "hypergraphs {}", t.hypergraphs);
    let _ = writeln!(s, "pairs {}", t.pairs);
    let _ = writeln!(s, "hard {}", t.hard);
    let _ = writeln!(s, "partitionable {}", t.partitionable);
    let _ = writeln!(s, "unverified {}", t.unverified);
    let _ = writeln!(s, "fallbacks {}", t.fallbacks);
    let _ = writeln!(s, "disagreements: {}", t.disagreements);
    let mut out = Outcome::ok(s);
    if t.disagreements + t.unverified > 0 {
        out.code = EXIT_USAGE;
        out.stderr = first.unwrap_or_default();
    }
    Ok(out)
}

fn cmd_census(max_n: usize, count: usize, ps: &[usize], seed: u64) -> hgpart::Result<Outcome> {
    if !(1..=6).contains(&max_n) || ps.is_empty() || ps.iter().any(|&p| p == 0 || p > 4) {
        return Err(Error::Invalid("census needs 1 <= --max-n <= 6 and every p in 1..=4".into()));
    }
    let fam = Family {
        max_n,
        ..Family::default()
    };
    let hs = canonical_sample(fam, count, seed);
    let rep = equivalence_sweep(&hs, ps, 3);
    let mut s = String::new();
    let _ = writeln!(s, "result census");
    let _ = writeln!(s, "# n hypergraphs pairs hard partitionable disagreements unverified fallbacks");
    for (n, t) in &rep.by_order {
        let _ = writeln!(
            s,
            "row {n} {} {} {} {} {} {} {}",
            t.hypergraphs, t.pairs, t.hard, t.partitionable, t.disagreements, t.unverified, t.fallbacks
        );
    }
    let t = rep.total();
    let _ = writeln!(
        s,
        "total {} {} {} {} {} {} {}",
        t.hypergraphs, t.pairs, t.hard, t.partitionable, t.disagreements, t.unverified, t.fallbacks
    );
    let _ = writeln!(s, "disagreements: {}", t.disagreements);
    let mut out = Outcome::ok(s);
    if let Some(m) = rep.mismatches.first() {
        out.code = EXIT_USAGE;
        out.stderr = emit_instance(&instance_with_vector(&m.hypergraph, &m.f)) + "# " + &m.what + "\n";
    }
    Ok(out)
}

fn cmd_brooks(max_n: usize, count: usize, seed: u64) -> hgpart::Result<Outcome> {
    if !(1..=hgpart::coloring::CHOOSE_GUARD).contains(&max_n) {
        return Err(Error::Invalid(format!(
            "brooks census needs 1 <= --max-n <= {}",
            hgpart::coloring::CHOOSE_GUARD
        )));
    }
    let graphs = connected_graphs(max_n.min(7));
    let hypers = hypergraph_sample(max_n.min(5), count, seed);
    let (gt, gbad) = run_census(&graphs)?;
    let (ht, hbad) = run_census(&hypers)?;
    let mut s = String::new();
    let _ = writeln!(s, "result census-brooks");
    let _ = writeln!(s, "# kind n instances tight exceptions");
    for (kind, table) in [("graph", &gt), ("hypergraph", &ht)] {
        for (n, t) in table {
            let _ = writeln!(s, "row {kind} {n} {} {} {}", t.instances, t.tight, t.exceptions);
        }
    }
    let _ = writeln!(s, "exceptions: {}", gbad.len() + hbad.len());
    let mut out = Outcome::ok(s);
    if let Some((h, row)) = gbad.first().or(hbad.first()) {
        out.code = EXIT_USAGE;
        out.stderr = format!("{}# {row:?}\n", emit_instance(&attach(h.clone(), None)));
    }
    Ok(out)
}

fn cmd_verify(inst: &Instance, text: &str) -> hgpart::Result<Outcome> {
    let h = &inst.hypergraph;
    let rep = parse_report(text)?;
    let verdict = match rep.result.as_deref() {
        Some("partition") => {
            let f = need_vector(inst)?;
            let part = rep.partition(h, f.p())?;
            verify_partition(h, f, &part)
        }
        Some("hard") => {
            let f = need_vector(inst)?;
            let covered: usize = rep.certificates.iter().map(|c| c.0.len()).sum();
            !rep.certificates.is_empty()
                && covered <= h.order()
                && rep.certificates.iter().all(|(comp, cert)| {
                    let sub = match h.induced(comp) {
                        Ok(s) => s,
                        Err(_) => return false,
                    };
                    let is_component = hgpart::components(h).iter().any(|c| {
                        let mut a = c.clone();
                        let mut b = comp.clone();
                        a.sort();
                        b.sort();
                        a == b
                    });
                    let g = match f.restrict(h, &sub) {
                        Ok(g) => g,
                        Err(_) => return false,
                    };
                    is_component && verify_certificate(&sub, &g, cert)
                })
        }
        Some("coloring") => {
            let l = need_lists(inst)?;
            let mut colors = Vec::with_capacity(h.order());
            let mut ok = rep.colors.len() == h.order();
            for (v, name) in h.vertices().iter().enumerate() {
                match rep.colors.get(name) {
                    Some(c) if l.get(v).contains(c) => colors.push(c.clone()),
                    _ => ok = false,
                }
            }
            ok && hgpart::coloring::is_proper_coloring(h, &hgpart::coloring::Coloring { colors })
        }
        other => {
            return Err(Error::Invalid(format!(
                "cannot verify result `{}`",
                other.unwrap_or("<missing>")
            )))
        }
    };
    Ok(if verdict {
        Outcome::ok("result verified\n".into())
    } else {
        Outcome::hard("result rejected\n".into())
    })
}
