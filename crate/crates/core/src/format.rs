//! Line-oriented text formats: instance files and command reports.
//!
//! Instance files:
//!
//! ```text
//! hg 2
//! # comment
//! v a 1 1        vertex with f-values (exactly p of them)
//! l b red blue   vertex with a color list (instead of f-values)
//! e x a b        edge
//! ```
//!
//! Reports use one record per line; see [`parse_report`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::coloring::{color_order, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::hardpair::{BlockTypeTag, CertifiedBlock, HardPairCertificate, VectorFunction};
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labels {
    Vector(VectorFunction),
    Lists(ListAssignment),
    /// Vertices declared without values (`p = 0` headers or bare `v` lines).
    Bare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub p: usize,
    pub hypergraph: Hypergraph,
    pub labels: Labels,
}

impl Instance {
    pub fn vector(&self) -> Option<&VectorFunction> {
        match &self.labels {
            Labels::Vector(f) => Some(f),
            _ => None,
        }
    }

    pub fn lists(&self) -> Option<&ListAssignment> {
        match &self.labels {
            Labels::Lists(l) => Some(l),
            _ => None,
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn strip(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[derive(PartialEq, Clone, Copy)]
enum Mode {
    Unset,
    Values,
    Lists,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut p: Option<usize> = None;
    let mut mode = Mode::Unset;
    let mut vertices: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
    let mut edges: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut edge_names = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks: Vec<&str> = strip(raw).split_whitespace().collect();
        let Some(&head) = toks.first() else { continue };
        if head != "hg" && p.is_none() {
            return Err(perr(line, "expected header `hg <p>` first"));
        }
        match head {
            "hg" => {
                if p.is_some() {
                    return Err(perr(line, "duplicate header"));
                }
                if toks.len() != 2 {
                    return Err(perr(line, "header is `hg <p>`"));
                }
                p = Some(toks[1].parse().map_err(|_| perr(line, format!("bad p `{}`", toks[1])))?);
            }
            "v" | "l" => {
                if toks.len() < 2 {
                    return Err(perr(line, "missing vertex name"));
                }
                let m = if head == "v" { Mode::Values } else { Mode::Lists };
                if mode != Mode::Unset && mode != m {
                    return Err(perr(line, "mixed `v` and `l` vertex lines"));
                }
                mode = m;
                let name = toks[1].to_string();
                if vertices.contains_key(&name) {
                    return Err(perr(line, format!("duplicate vertex `{name}`")));
                }
                let rest: Vec<String> = toks[2..].iter().map(|s| s.to_string()).collect();
                if m == Mode::Values {
                    let p = p.unwrap();
                    if rest.len() != p {
                        return Err(perr(
                            line,
                            format!("ragged vector at `{name}`: {} values, expected {p}", rest.len()),
                        ));
                    }
                    for r in &rest {
                        r.parse::<u32>()
                            .map_err(|_| perr(line, format!("bad value `{r}` at `{name}`")))?;
                    }
                } else {
                    let set: BTreeSet<&String> = rest.iter().collect();
                    if set.len() != rest.len() {
                        return Err(perr(line, format!("repeated color in list of `{name}`")));
                    }
                }
                vertices.insert(name, (line, rest));
            }
            "e" => {
                if toks.len() < 2 {
                    return Err(perr(line, "missing edge name"));
                }
                let name = toks[1].to_string();
                if !edge_names.insert(name.clone()) {
                    return Err(perr(line, format!("duplicate edge `{name}`")));
                }
                let vs: Vec<String> = toks[2..].iter().map(|s| s.to_string()).collect();
                let set: BTreeSet<&String> = vs.iter().collect();
                if set.len() != vs.len() {
                    return Err(perr(line, format!("loop: edge `{name}` repeats a vertex")));
                }
                if vs.len() < 2 {
                    return Err(perr(line, format!("edge `{name}` has arity {} < 2", vs.len())));
                }
                edges.push((line, name, vs));
            }
            other => return Err(perr(line, format!("unknown record `{other}`"))),
        }
    }
    let p = p.ok_or_else(|| perr(0, "missing header `hg <p>`"))?;
    for (line, name, vs) in &edges {
        if let Some(v) = vs.iter().find(|v| !vertices.contains_key(*v)) {
            return Err(perr(*line, format!("edge `{name}` uses undeclared vertex `{v}`")));
        }
    }
    let h = Hypergraph::new(
        vertices.keys().cloned(),
        edges.into_iter().map(|(_, n, vs)| (n, vs)),
    )?;
    let labels = match mode {
        Mode::Values if p > 0 => {
            let rows = vertices
                .values()
                .map(|(_, r)| r.iter().map(|x| x.parse().unwrap()).collect())
                .collect();
            Labels::Vector(VectorFunction::new(p, rows)?)
        }
        Mode::Lists => Labels::Lists(ListAssignment::new(vertices.into_values().map(|(_, r)| r).collect())),
        _ => Labels::Bare,
    };
    Ok(Instance {
        p,
        hypergraph: h,
        labels,
    })
}

fn join<I: IntoIterator<Item = S>, S: AsRef<str>>(it: I) -> String {
    let v: Vec<String> = it.into_iter().map(|s| s.as_ref().to_string()).collect();
    v.join(" ")
}

fn nums(r: &[u32]) -> String {
    join(r.iter().map(u32::to_string))
}

/// Canonical text: header, vertices by name, edges by name.
pub fn emit_instance(inst: &Instance) -> String {
    let h = &inst.hypergraph;
    let mut s = format!("hg {}\n", inst.p);
    for (i, name) in h.vertices().iter().enumerate() {
        match &inst.labels {
            Labels::Vector(f) => {
                let _ = writeln!(s, "v {name} {}", nums(f.get(i)));
            }
            Labels::Lists(l) => {
                let mut cs: Vec<&String> = l.get(i).iter().collect();
                cs.sort_by(|a, b| color_order(a, b));
                let _ = writeln!(s, "l {name} {}", join(cs).trim_end());
            }
            Labels::Bare => {
                let _ = writeln!(s, "v {name}");
            }
        }
    }
    for e in h.edges() {
        let _ = writeln!(s, "e {} {}", e.name(), join(h.edge_names(e)));
    }
    s.lines().map(|l| l.trim_end().to_string() + "\n").collect()
}

pub fn instance_with_vector(h: &Hypergraph, f: &VectorFunction) -> Instance {
    Instance {
        p: f.p(),
        hypergraph: h.clone(),
        labels: Labels::Vector(f.clone()),
    }
}

pub fn tag_line(tag: &BlockTypeTag, n: usize) -> String {
    match tag {
        BlockTypeTag::M { j } => format!("type M j={j} n={n}"),
        BlockTypeTag::K { t, counts } => format!("type K t={t} n={n} counts {}", nums(counts)),
        BlockTypeTag::C { t, k, l } => format!("type C t={t} n={n} coords {k} {l}"),
    }
}

pub fn emit_partition(h: &Hypergraph, part: &Partition) -> String {
    let mut s = format!("result partition p={}\n", part.p());
    for (i, name) in h.vertices().iter().enumerate() {
        let _ = writeln!(s, "assign {name} {}", part.class_of(i) + 1);
    }
    s
}

pub fn emit_coloring(h: &Hypergraph, c: &Coloring) -> String {
    let mut s = "result coloring\n".to_string();
    for (name, col) in h.vertices().iter().zip(&c.colors) {
        let _ = writeln!(s, "color {name} {col}");
    }
    s
}

pub fn emit_certificates(certs: &[(Vec<String>, HardPairCertificate)]) -> String {
    let mut s = format!("result hard components={}\n", certs.len());
    for (comp, cert) in certs {
        let _ = writeln!(s, "component p={} {}", cert.p, join(comp));
        for b in &cert.blocks {
            let _ = writeln!(s, "block {}", join(&b.vertices));
            let _ = writeln!(s, "{}", tag_line(&b.tag, b.vertices.len()));
            for (v, r) in b.vertices.iter().zip(&b.f) {
                let _ = writeln!(s, "fb {v} {}", nums(r));
            }
        }
    }
    s
}

/// Parsed command output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    /// Value of the `result` line, e.g. `partition`, `hard`, `coloring`.
    pub result: Option<String>,
    /// Vertex to 1-based class.
    pub assignment: BTreeMap<String, usize>,
    pub colors: BTreeMap<String, String>,
    pub certificates: Vec<(Vec<String>, HardPairCertificate)>,
    /// Any other `key value...` lines, in order.
    pub fields: Vec<(String, Vec<String>)>,
}

fn parse_tag(line: usize, toks: &[&str]) -> Result<BlockTypeTag> {
    let kv = |key: &str| -> Result<u64> {
        toks.iter()
            .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
            .ok_or_else(|| perr(line, format!("missing `{key}=` in type line")))?
            .parse()
            .map_err(|_| perr(line, format!("bad `{key}` value")))
    };
    let after = |word: &str| -> Result<Vec<u64>> {
        let i = toks
            .iter()
            .position(|t| *t == word)
            .ok_or_else(|| perr(line, format!("missing `{word}`")))?;
        toks[i + 1..]
            .iter()
            .map(|t| t.parse().map_err(|_| perr(line, format!("bad number `{t}`"))))
            .collect()
    };
    match toks.get(1).copied() {
        Some("M") => Ok(BlockTypeTag::M { j: kv("j")? as usize }),
        Some("K") => Ok(BlockTypeTag::K {
            t: kv("t")? as u32,
            counts: after("counts")?.into_iter().map(|x| x as u32).collect(),
        }),
        Some("C") => {
            let c = after("coords")?;
            if c.len() != 2 {
                return Err(perr(line, "C needs two coords"));
            }
            Ok(BlockTypeTag::C {
                t: kv("t")? as u32,
                k: c[0] as usize,
                l: c[1] as usize,
            })
        }
        _ => Err(perr(line, "unknown block type")),
    }
}

/// Parses the output of any command.
pub fn parse_report(text: &str) -> Result<Report> {
    let mut r = Report::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks: Vec<&str> = strip(raw).split_whitespace().collect();
        let Some(&head) = toks.first() else { continue };
        match head {
            "result" => r.result = toks.get(1).map(|s| s.to_string()),
            "assign" => {
                if toks.len() != 3 {
                    return Err(perr(line, "assign <vertex> <class>"));
                }
                let c = toks[2].parse().map_err(|_| perr(line, "bad class"))?;
                r.assignment.insert(toks[1].to_string(), c);
            }
            "color" => {
                if toks.len() != 3 {
                    return Err(perr(line, "color <vertex> <color>"));
                }
                r.colors.insert(toks[1].to_string(), toks[2].to_string());
            }
            "component" => {
                let p = toks
                    .get(1)
                    .and_then(|t| t.strip_prefix("p="))
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| perr(line, "component p=<p> <vertices>"))?;
                r.certificates.push((
                    toks[2..].iter().map(|s| s.to_string()).collect(),
                    HardPairCertificate { p, blocks: Vec::new() },
                ));
            }
            "block" => {
                let cert = &mut r
                    .certificates
                    .last_mut()
                    .ok_or_else(|| perr(line, "block outside component"))?
                    .1;
                cert.blocks.push(CertifiedBlock {
                    vertices: toks[1..].iter().map(|s| s.to_string()).collect(),
                    tag: BlockTypeTag::M { j: 0 },
                    f: Vec::new(),
                });
            }
            "type" => {
                let tag = parse_tag(line, &toks)?;
                let b = r
                    .certificates
                    .last_mut()
                    .and_then(|c| c.1.blocks.last_mut())
                    .ok_or_else(|| perr(line, "type outside block"))?;
                b.tag = tag;
            }
            "fb" => {
                let b = r
                    .certificates
                    .last_mut()
                    .and_then(|c| c.1.blocks.last_mut())
                    .ok_or_else(|| perr(line, "fb outside block"))?;
                if b.f.len() >= b.vertices.len() || toks.get(1) != b.vertices.get(b.f.len()).map(String::as_str).as_ref() {
                    return Err(perr(line, "fb rows must follow the block's vertex order"));
                }
                let row = toks[2..]
                    .iter()
                    .map(|t| t.parse().map_err(|_| perr(line, format!("bad number `{t}`"))))
                    .collect::<Result<Vec<u32>>>()?;
                b.f.push(row);
            }
            key => r.fields.push((key.to_string(), toks[1..].iter().map(|s| s.to_string()).collect())),
        }
    }
    Ok(r)
}

impl Report {
    pub fn partition(&self, h: &Hypergraph, p: usize) -> Result<Partition> {
        let mut classes = vec![usize::MAX; h.order()];
        for (v, &c) in &self.assignment {
            if c == 0 || c > p {
                return Err(Error::Invalid(format!("class {c} of `{v}` outside 1..={p}")));
            }
            classes[h.require(v)?] = c - 1;
        }
        if let Some(i) = classes.iter().position(|&c| c == usize::MAX) {
            return Err(Error::UnknownVertex(h.vertex(i).to_string()));
        }
        Ok(Partition::new(p, classes))
    }

    pub fn field(&self, key: &str) -> Option<&[String]> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardpair::is_hard;

    const C5: &str = "hg 2\n# five cycle\nv a 1 1\nv b 1 1\nv c 1 1\nv d 1 1\nv e 1 1\ne 1 a b\ne 2 b c\ne 3 c d\ne 4 d e\ne 5 e a  # closing edge\n";

    #[test]
    fn parse_c5() {
        let inst = parse_instance(C5).unwrap();
        assert_eq!(inst.hypergraph.order(), 5);
        assert_eq!(inst.hypergraph.size(), 5);
        assert!(inst.vector().unwrap().rows().all(|r| r == [1, 1]));
    }

    #[test]
    fn emit_is_normalized() {
        let inst = parse_instance(C5).unwrap();
        let out = emit_instance(&inst);
        assert!(out.starts_with("hg 2\nv a 1 1\n"));
        assert!(out.ends_with("e 5 a e\n"));
        assert_eq!(emit_instance(&parse_instance(&out).unwrap()), out);
    }

    #[test]
    fn parse_errors_have_lines() {
        let e = parse_instance("hg 1\nv a 1\nv b 1\ne x a a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, ref msg } if msg.contains("loop")));
        let e = parse_instance("hg 2\nv a 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, ref msg } if msg.contains("ragged")));
        let e = parse_instance("hg 1\nv a 1\nl b x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_instance("hg 1\nv a 1\nv a 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_instance("hg 1\nv a 1\ne x a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, ref msg } if msg.contains("arity")));
        assert!(parse_instance("v a 1\n").is_err());
    }

    #[test]
    fn lists_round_trip() {
        let text = "hg 3\nl a 1 2\nl b 2 10 3\ne x a b\n";
        let inst = parse_instance(text).unwrap();
        assert!(inst.lists().is_some());
        assert_eq!(emit_instance(&inst), "hg 3\nl a 1 2\nl b 2 3 10\ne x a b\n");
    }

    #[test]
    fn certificate_round_trip() {
        let inst = parse_instance(C5).unwrap();
        let f = inst.vector().unwrap();
        let cert = is_hard(&inst.hypergraph, f).unwrap().unwrap();
        let certs = vec![(inst.hypergraph.vertices().to_vec(), cert)];
        let text = emit_certificates(&certs);
        assert!(text.contains("type C t=1 n=5 coords 1 2"));
        let r = parse_report(&text).unwrap();
        assert_eq!(r.result.as_deref(), Some("hard"));
        assert_eq!(r.certificates, certs);
    }

    #[test]
    fn partition_round_trip() {
        let inst = parse_instance(C5).unwrap();
        let part = Partition::new(2, vec![0, 1, 0, 1, 1]);
        let r = parse_report(&emit_partition(&inst.hypergraph, &part)).unwrap();
        assert_eq!(r.partition(&inst.hypergraph, 2).unwrap(), part);
    }
}
