//! Python bindings. Functions are keyed by vertex name, so values cross the
//! boundary as plain dicts and lists.

use std::collections::BTreeMap;

use hgpart::coloring::{self, ListAssignment, ListColorResult};
use hgpart::format::{emit_certificates, emit_instance, instance_with_vector, parse_instance, Instance, Labels};
use hgpart::oracle::Oracle;
use hgpart::{degeneracy::ScalarFunction, SolveResult, VectorFunction};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: hgpart::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Hypergraph", module = "hgpart_py", frozen, skip_from_py_object)]
pub struct PyHypergraph {
    inner: hgpart::Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    /// `edges` is a list of vertex lists; edges are named `e0`, `e1`, ...
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<Vec<String>>) -> PyResult<Self> {
        let w = edges.len().saturating_sub(1).to_string().len();
        let named = edges.into_iter().enumerate().map(|(i, e)| (format!("e{i:0w$}"), e));
        let inner = hgpart::Hypergraph::new(vertices, named).map_err(err)?;
        Ok(PyHypergraph { inner })
    }

    /// Parses the text instance format; returns the hypergraph and its vector
    /// function, if any.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<(Self, Option<BTreeMap<String, Vec<u32>>>)> {
        let inst = parse_instance(text).map_err(err)?;
        let f = inst.vector().map(|f| f.to_map(&inst.hypergraph));
        Ok((PyHypergraph { inner: inst.hypergraph }, f))
    }

    fn to_text(&self, f: Option<BTreeMap<String, Vec<u32>>>) -> PyResult<String> {
        let inst = match f {
            Some(m) => instance_with_vector(&self.inner, &vector(&self.inner, &m)?),
            None => Instance {
                p: 0,
                hypergraph: self.inner.clone(),
                labels: Labels::Bare,
            },
        };
        Ok(emit_instance(&inst))
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    fn edges(&self) -> Vec<Vec<String>> {
        self.inner.edge_multiset()
    }

    fn degree(&self, v: &str) -> PyResult<usize> {
        self.inner.degree(v).map_err(err)
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn multiplicity(&self, u: &str, v: &str) -> PyResult<usize> {
        self.inner.multiplicity(u, v).map_err(err)
    }

    fn is_connected(&self) -> bool {
        hgpart::is_connected(&self.inner)
    }

    fn separating_vertices(&self) -> Vec<String> {
        hgpart::separating_vertices(&self.inner)
    }

    fn blocks(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(hgpart::blocks(&self.inner).map_err(err)?.blocks)
    }

    fn col(&self) -> u32 {
        hgpart::col(&self.inner)
    }

    fn shrink_vertex(&self, v: &str) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: self.inner.shrink_vertex(v).map_err(err)?,
        })
    }

    fn delete(&self, vs: Vec<String>) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: self.inner.delete(&vs).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

fn vector(h: &hgpart::Hypergraph, m: &BTreeMap<String, Vec<u32>>) -> PyResult<VectorFunction> {
    let p = m.values().next().map_or(0, Vec::len);
    VectorFunction::from_map(h, p, m).map_err(err)
}

/// Strict `f`-degeneracy for a scalar function given per vertex.
#[pyfunction]
fn is_strictly_degenerate(h: &PyHypergraph, f: BTreeMap<String, u32>) -> PyResult<bool> {
    let f = ScalarFunction::from_map(&h.inner, &f).map_err(err)?;
    Ok(hgpart::is_strictly_degenerate(&h.inner, &f).map_err(err)?.is_degenerate())
}

/// Returns `("partition", {vertex: class})` with 1-based classes, or
/// `("hard", certificate_text)`.
#[pyfunction]
fn solve(h: &PyHypergraph, f: BTreeMap<String, Vec<u32>>) -> PyResult<(String, Py<PyAny>)> {
    let fv = vector(&h.inner, &f)?;
    Python::attach(|py| match hgpart::solve(&h.inner, &fv).map_err(err)? {
        SolveResult::Partition(part) => {
            let m = part.to_map(&h.inner);
            Ok(("partition".to_string(), m.into_pyobject(py)?.into_any().unbind()))
        }
        SolveResult::Hard(certs) => Ok((
            "hard".to_string(),
            emit_certificates(&certs).into_pyobject(py)?.into_any().unbind(),
        )),
    })
}

/// Certificate text if `(h, f)` is a hard pair, else `None`.
#[pyfunction]
fn is_hard(h: &PyHypergraph, f: BTreeMap<String, Vec<u32>>) -> PyResult<Option<String>> {
    let fv = vector(&h.inner, &f)?;
    let cert = hgpart::is_hard(&h.inner, &fv).map_err(err)?;
    Ok(cert.map(|c| emit_certificates(&[(h.inner.vertices().to_vec(), c)])))
}

/// Brute-force answer, for small inputs only.
#[pyfunction]
fn oracle_partitionable(h: &PyHypergraph, f: BTreeMap<String, Vec<u32>>) -> PyResult<bool> {
    let fv = vector(&h.inner, &f)?;
    let o = Oracle::new(&h.inner).map_err(err)?;
    Ok(o.partitionable(&fv).map_err(err)?.partitionable)
}

/// Random hard pair built from `blocks` basic blocks.
#[pyfunction]
#[pyo3(signature = (p, blocks=3, seed=0))]
fn random_hard(p: usize, blocks: usize, seed: u64) -> PyResult<(PyHypergraph, BTreeMap<String, Vec<u32>>)> {
    use hgpart::hardpair::random_plan;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let plan = random_plan(p.max(1), blocks, &mut rng);
    let (h, f) = hgpart::make_hard(&plan, p, seed).map_err(err)?;
    let m = f.to_map(&h);
    Ok((PyHypergraph { inner: h }, m))
}

/// Proper coloring from per-vertex lists, or `None` with the hard blocks
/// reported through the certificate text in the second slot.
#[pyfunction]
fn list_color(
    h: &PyHypergraph,
    lists: BTreeMap<String, Vec<String>>,
) -> PyResult<(Option<BTreeMap<String, String>>, Option<String>)> {
    let l = ListAssignment::from_map(&h.inner, &lists).map_err(err)?;
    Ok(match coloring::list_color(&h.inner, &l).map_err(err)? {
        ListColorResult::Coloring(c) => (Some(c.to_map(&h.inner)), None),
        ListColorResult::Hard(certs) => (None, Some(emit_certificates(&certs))),
    })
}

/// `(chi, chi_list)` for at most ten vertices.
#[pyfunction]
fn chromatic_numbers(h: &PyHypergraph) -> PyResult<(u32, u32)> {
    coloring::chi_and_chi_list(&h.inner, coloring::CHOOSE_GUARD).map_err(err)
}

#[pymodule]
fn hgpart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(is_strictly_degenerate, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(is_hard, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_partitionable, m)?)?;
    m.add_function(wrap_pyfunction!(random_hard, m)?)?;
    m.add_function(wrap_pyfunction!(list_color, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_numbers, m)?)?;
    Ok(())
}
