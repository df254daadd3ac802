//! Fixed example instances used by tests, the CLI and the Python bindings.

use std::collections::BTreeMap;

use crate::coloring::ListAssignment;
use crate::generators::{complete_uniform, cycle, t_fold};
use crate::hardpair::VectorFunction;
use crate::hypergraph::Hypergraph;

fn hg(vertices: &[&str], edges: &[&[&str]]) -> Hypergraph {
    let w = edges.len().saturating_sub(1).to_string().len();
    Hypergraph::new(
        vertices.iter().copied(),
        edges
            .iter()
            .enumerate()
            .map(|(i, e)| (format!("e{i:0w$}"), e.iter().map(|s| s.to_string()).collect())),
    )
    .expect("catalog instance is well formed")
}

/// Doubled 6-cycle `u1..u6` with spokes to an inner ring `w1..w6`, inner
/// chords and three hyperedges. With `f = d e_1` it is a monoblock; the outer
/// vertices have degree 6 and the inner ones degree 4.
pub fn hexagon_ring() -> Hypergraph {
    let mut edges: Vec<Vec<&str>> = Vec::new();
    let u = ["u1", "u2", "u3", "u4", "u5", "u6"];
    let w = ["w1", "w2", "w3", "w4", "w5", "w6"];
    for i in 0..6 {
        edges.push(vec![u[i], u[(i + 1) % 6]]);
        edges.push(vec![u[i], u[(i + 1) % 6]]);
        edges.push(vec![u[i], w[i]]);
    }
    for (a, b) in [("w1", "w6"), ("w1", "w4"), ("w2", "w3"), ("w2", "w5"), ("w3", "w6"), ("w4", "w5")] {
        edges.push(vec![a, b]);
    }
    edges.push(vec!["u1", "u2", "w1", "w2"]);
    edges.push(vec!["u4", "u5", "w4", "w5"]);
    edges.push(vec!["u3", "w3", "w6", "u6"]);
    let refs: Vec<&[&str]> = edges.iter().map(Vec::as_slice).collect();
    let mut vs = u.to_vec();
    vs.extend(w);
    hg(&vs, &refs)
}

pub fn hexagon_ring_function() -> VectorFunction {
    let h = hexagon_ring();
    VectorFunction::new(2, h.degrees().into_iter().map(|d| vec![d as u32, 0]).collect()).unwrap()
}

/// `2K_4` with `f ≡ (0,4,2)`.
pub fn doubled_k4() -> (Hypergraph, VectorFunction) {
    let h = t_fold(&complete_uniform(4, 2).unwrap(), 2).unwrap();
    (h, VectorFunction::constant(4, &[0, 4, 2]))
}

/// `3C_5` with `f ≡ (3,3,0)`.
pub fn tripled_c5() -> (Hypergraph, VectorFunction) {
    let h = t_fold(&cycle(5).unwrap(), 3).unwrap();
    (h, VectorFunction::constant(5, &[3, 3, 0]))
}

/// 11 vertices, 20 ordinary edges and three hyperedges, maximum degree 6.
pub fn degree_six_example() -> Hypergraph {
    hg(
        &["v1", "v2", "v3", "u1", "u2", "u3", "u4", "w1", "w2", "w3", "w4"],
        &[
            &["v1", "w1"],
            &["v1", "w2"],
            &["v1", "w3"],
            &["v1", "w4"],
            &["v2", "u1"],
            &["v2", "u2"],
            &["v2", "u3"],
            &["v3", "u1"],
            &["v3", "u3"],
            &["v3", "u4"],
            &["u1", "u4"],
            &["u1", "w1"],
            &["u1", "w2"],
            &["u2", "u3"],
            &["u2", "w2"],
            &["u2", "w3"],
            &["u3", "w3"],
            &["u3", "w4"],
            &["u4", "w4"],
            &["u4", "w1"],
            &["v2", "u1", "u2"],
            &["v3", "u3", "u4"],
            &["v1", "w1", "w2", "w3", "w4"],
        ],
    )
}

/// Eight vertices with a list assignment over four colors.
pub fn list_example() -> (Hypergraph, ListAssignment) {
    let h = hg(
        &["v1", "v2", "v3", "v4", "u1", "u2", "u3", "u4"],
        &[
            &["v1", "v2"],
            &["v1", "u1"],
            &["v2", "u2"],
            &["v2", "v3"],
            &["v3", "u3"],
            &["v3", "v4"],
            &["v4", "u3"],
            &["v4", "u4"],
            &["v4", "v1"],
            &["u1", "u2"],
            &["u2", "u3"],
            &["u3", "u4"],
            &["u4", "u1"],
            &["v1", "v2", "u1"],
            &["v3", "v4", "u3", "u4"],
            &["v2", "v3", "u2"],
        ],
    );
    let lists: BTreeMap<String, Vec<String>> = [
        ("v1", vec!["1", "2", "4"]),
        ("v2", vec!["1", "3"]),
        ("v3", vec!["2", "4"]),
        ("v4", vec!["3", "4"]),
        ("u1", vec!["1", "3", "4"]),
        ("u2", vec!["2", "3"]),
        ("u3", vec!["1", "4"]),
        ("u4", vec!["2", "3", "4"]),
    ]
    .into_iter()
    .map(|(v, l)| (v.to_string(), l.into_iter().map(String::from).collect()))
    .collect();
    let l = ListAssignment::from_map(&h, &lists).unwrap();
    (h, l)
}

pub fn petersen() -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(vec![i, (i + 1) % 5]);
        edges.push(vec![i, i + 5]);
        edges.push(vec![5 + i, 5 + (i + 2) % 5]);
    }
    let names: Vec<String> = (0..10).map(|i| format!("p{i}")).collect();
    Hypergraph::new(
        names.clone(),
        edges
            .into_iter()
            .enumerate()
            .map(|(k, e)| (format!("e{k:02}"), e.into_iter().map(|i| names[i].clone()).collect())),
    )
    .unwrap()
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["hexagon-ring", "doubled-k4", "tripled-c5", "degree-six", "list-example", "petersen"];

/// Catalog entry as `(hypergraph, optional function, optional lists)`.
pub fn by_name(name: &str) -> Option<(Hypergraph, Option<VectorFunction>, Option<ListAssignment>)> {
    Some(match name {
        "hexagon-ring" => (hexagon_ring(), Some(hexagon_ring_function()), None),
        "doubled-k4" => {
            let (h, f) = doubled_k4();
            (h, Some(f), None)
        }
        "tripled-c5" => {
            let (h, f) = tripled_c5();
            (h, Some(f), None)
        }
        "degree-six" => {
            let h = degree_six_example();
            let f = VectorFunction::constant(h.order(), &[3, 3]);
            (h, Some(f), None)
        }
        "list-example" => {
            let (h, l) = list_example();
            (h, None, Some(l))
        }
        "petersen" => {
            let h = petersen();
            let f = VectorFunction::constant(h.order(), &[1, 2]);
            (h, Some(f), None)
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardpair::{is_hard, BlockTypeTag};

    #[test]
    fn hexagon_ring_is_monoblock() {
        let h = hexagon_ring();
        let d = h.degrees();
        for (i, v) in h.vertices().iter().enumerate() {
            assert_eq!(d[i], if v.starts_with('u') { 6 } else { 4 });
        }
        let cert = is_hard(&h, &hexagon_ring_function()).unwrap().unwrap();
        assert_eq!(cert.blocks.len(), 1);
        assert_eq!(cert.blocks[0].tag, BlockTypeTag::M { j: 1 });
    }

    #[test]
    fn degree_six_shape() {
        let h = degree_six_example();
        assert_eq!((h.order(), h.size()), (11, 23));
        assert_eq!(h.max_degree(), 6);
        assert!(h.is_simple());
    }

    #[test]
    fn petersen_is_cubic() {
        let h = petersen();
        assert!(h.degrees().iter().all(|&d| d == 3));
        assert_eq!(h.size(), 15);
    }
}
