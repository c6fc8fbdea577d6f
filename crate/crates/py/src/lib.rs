//! Python bindings. Graphs cross the boundary as `Graph` objects or graph6
//! strings; reports come back as plain dicts with rationals as `"p/q"`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use turanlab::lab;
use turanlab::{Computing, Rational};

create_exception!(
    turanlab_py,
    TuranlabError,
    PyException,
    "Domain error; the message starts with its name."
);

fn err(e: turanlab::Error) -> PyErr {
    TuranlabError::new_err(format!("{}: {e}", e.name()))
}

fn rational(s: &str) -> PyResult<Rational> {
    turanlab::parse_rational(s).map_err(err)
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(x).expect("reports serialize");
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Graph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph(turanlab::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        turanlab::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        turanlab::graph_from_graph6(text).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        turanlab::Graph::complete(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        turanlab::Graph::cycle(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        turanlab::Graph::path(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn petersen() -> Self {
        PyGraph(turanlab::Graph::petersen())
    }

    #[staticmethod]
    fn turan(n: usize, parts: usize) -> PyResult<Self> {
        turanlab::turan_graph(n, parts).map(PyGraph).map_err(err)
    }

    fn blow_up(&self, t: usize) -> PyResult<Self> {
        turanlab::blow_up(&self.0, t).map(PyGraph).map_err(err)
    }

    fn to_graph6(&self) -> String {
        turanlab::graph_to_graph6(&self.0)
    }

    fn canonical_graph6(&self) -> String {
        turanlab::canon::canonical_graph6(&self.0)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        turanlab::canon::are_isomorphic(&self.0, &other.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.0.n() {
            return Err(pyo3::exceptions::PyIndexError::new_err("vertex out of range"));
        }
        Ok(self.0.degree(v))
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.to_graph6())
    }
}

#[pyfunction]
fn count_copies(h: &PyGraph, g: &PyGraph) -> PyResult<u64> {
    turanlab::count_copies(&h.0, &g.0).map_err(err)
}

#[pyfunction]
fn count_cliques(r: usize, g: &PyGraph) -> PyResult<u64> {
    turanlab::count_cliques(r, &g.0).map_err(err)
}

#[pyfunction]
fn count_automorphisms(h: &PyGraph) -> u64 {
    turanlab::count_automorphisms(&h.0)
}

#[pyfunction]
fn chromatic_number(g: &PyGraph) -> usize {
    turanlab::chromatic_number(&g.0)
}

#[pyfunction]
fn exists_homomorphism(f: &PyGraph, h: &PyGraph) -> bool {
    turanlab::exists_homomorphism(&f.0, &h.0)
}

#[pyfunction]
fn is_degenerate_pair(h: &PyGraph, f: &PyGraph) -> PyResult<bool> {
    turanlab::is_degenerate_pair(&h.0, &f.0).map_err(err)
}

#[pyfunction]
fn zykov_clique_bound(n: usize, r: usize, k: usize) -> PyResult<u64> {
    turanlab::zykov_clique_bound(n, r, k).map_err(err)
}

#[pyfunction]
fn enumerate_free_graphs(n: usize, f: &PyGraph) -> PyResult<Vec<PyGraph>> {
    Ok(turanlab::enumerate_free_graphs(n, &f.0)
        .map_err(err)?
        .map(PyGraph)
        .collect())
}

#[pyfunction]
fn generalized_turan<'py>(py: Python<'py>, n: usize, h: &PyGraph, f: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let rec = py.detach(|| turanlab::generalized_turan(n, &h.0, &f.0)).map_err(err)?;
    to_py(py, &rec)
}

#[pyfunction]
fn density_bracket<'py>(py: Python<'py>, h: &PyGraph, f: &PyGraph, max_n: usize) -> PyResult<Bound<'py, PyAny>> {
    let b = lab::density_bracket(&h.0, &f.0, max_n, &mut Computing { catalog: None }).map_err(err)?;
    to_py(py, &b)
}

#[pyfunction]
fn check_ratio_monotone<'py>(py: Python<'py>, table: Vec<(usize, u64)>, h_size: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &lab::check_ratio_monotone(&table, h_size).map_err(err)?)
}

#[pyfunction]
fn heavy_subset_census<'py>(
    py: Python<'py>,
    g: &PyGraph,
    h: &PyGraph,
    m: usize,
    threshold: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let t = rational(threshold)?;
    to_py(py, &lab::heavy_subset_census(&g.0, &h.0, m, t).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (g, h, f, c, max_n = 8))]
fn supersaturation_check<'py>(
    py: Python<'py>,
    g: &PyGraph,
    h: &PyGraph,
    f: &PyGraph,
    c: &str,
    max_n: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let c = rational(c)?;
    let mut source = Computing { catalog: None };
    let bracket = lab::density_bracket(&h.0, &f.0, max_n, &mut source).map_err(err)?;
    to_py(
        py,
        &lab::supersaturation_check(&g.0, &h.0, &f.0, c, &bracket, &mut source).map_err(err)?,
    )
}

#[pyfunction]
fn symmetrize<'py>(py: Python<'py>, g: &PyGraph, r: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &lab::symmetrize(&g.0, r).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (g, r, k, alpha, q = None, beta = None))]
fn greedy_min_copy_deletion<'py>(
    py: Python<'py>,
    g: &PyGraph,
    r: usize,
    k: usize,
    alpha: &str,
    q: Option<&str>,
    beta: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let alpha = rational(alpha)?;
    let q = q.map(rational).transpose()?;
    let beta = beta.map(rational).transpose()?;
    to_py(
        py,
        &lab::greedy_min_copy_deletion(&g.0, r, k, alpha, q, beta).map_err(err)?,
    )
}

#[pyfunction]
fn degree_lower_bound<'py>(py: Python<'py>, n: usize, k: usize, r: usize, alpha: &str) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &lab::degree_lower_bound(n, k, r, rational(alpha)?).map_err(err)?)
}

#[pyfunction]
fn check_degree_lemma<'py>(
    py: Python<'py>,
    g: &PyGraph,
    x: usize,
    k: usize,
    r: usize,
    alpha: &str,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &lab::check_degree_lemma(&g.0, x, k, r, rational(alpha)?).map_err(err)?,
    )
}

#[pyfunction]
fn turan_edit_distance<'py>(py: Python<'py>, g: &PyGraph, parts: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &lab::turan_edit_distance(&g.0, parts).map_err(err)?)
}

#[pymodule]
fn turanlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TuranlabError", m.py().get_type::<TuranlabError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(count_copies, m)?)?;
    m.add_function(wrap_pyfunction!(count_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(count_automorphisms, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(exists_homomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(is_degenerate_pair, m)?)?;
    m.add_function(wrap_pyfunction!(zykov_clique_bound, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_free_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_turan, m)?)?;
    m.add_function(wrap_pyfunction!(density_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(check_ratio_monotone, m)?)?;
    m.add_function(wrap_pyfunction!(heavy_subset_census, m)?)?;
    m.add_function(wrap_pyfunction!(supersaturation_check, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrize, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_min_copy_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(degree_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_degree_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(turan_edit_distance, m)?)?;
    Ok(())
}
