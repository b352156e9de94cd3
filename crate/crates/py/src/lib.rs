//! Python bindings. Exact rationals cross the boundary as
//! `fractions.Fraction`; reports arrive as plain dicts.

use matchbound::bounds;
use matchbound::constructions::{self, Block, GeneratedGraph, TreeMode};
use matchbound::fuzz::{self, FuzzConfig};
use matchbound::matching;
use matchbound::rational::{exact_string, parse_rational, Rational};
use matchbound::region::{self, BoundingBox, RationalPoint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, value: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((exact_string(value),))
}

/// Accepts `Fraction`, `int`, or a `"p/q"` / decimal string.
fn rational_arg(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&value.str()?.to_string()).map_err(value_error)
}

fn json_to_py<'py>(py: Python<'py>, text: serde_json::Result<String>) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text.map_err(value_error)?,))
}

#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: matchbound::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: matchbound::Graph::new(n, edges).map_err(value_error)? })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self { inner: matchbound::Graph::parse_edge_list(text).map_err(value_error)? })
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn to_dot(&self, name: &str) -> String {
        self.inner.to_dot(name)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_k_regular(&self, k: usize) -> bool {
        self.inner.is_k_regular(k)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

#[pyfunction]
fn maximum_matching(g: &PyGraph) -> Vec<(usize, usize)> {
    matching::maximum_matching(&g.inner).edges
}

#[pyfunction]
fn matching_number(g: &PyGraph) -> usize {
    matching::matching_number(&g.inner)
}

/// `(value, witness)` of the exhaustive Tutte-Berge minimum.
#[pyfunction]
#[pyo3(signature = (g, max_n = matching::DEFAULT_TUTTE_BERGE_LIMIT))]
fn tutte_berge(g: &PyGraph, max_n: usize) -> PyResult<(usize, Vec<usize>)> {
    let cert = matching::tutte_berge(&g.inner, max_n).map_err(value_error)?;
    Ok((cert.value, cert.witness))
}

#[pyfunction]
fn audit<'py>(py: Python<'py>, g: &PyGraph, k: usize) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, serde_json::to_string(&bounds::audit_graph(&g.inner, k).map_err(value_error)?))
}

/// `(a_k, b_k)` of the main bound.
#[pyfunction]
fn main_coefficients<'py>(py: Python<'py>, k: usize) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let c = bounds::main_coefficients(k).map_err(value_error)?;
    Ok((fraction(py, &c.a_k)?, fraction(py, &c.b_k)?))
}

/// Bounds for a connected graph, keyed by name.
#[pyfunction]
#[pyo3(signature = (n, m, k, regular = false))]
fn lower_bound_connected<'py>(py: Python<'py>, n: usize, m: usize, k: usize, regular: bool) -> PyResult<Bound<'py, PyDict>> {
    let values = bounds::lower_bound_connected(n, m, k, regular.then_some(n)).map_err(value_error)?;
    let dict = PyDict::new(py);
    for bound in values {
        dict.set_item(bound.name, fraction(py, &bound.value)?)?;
    }
    Ok(dict)
}

#[pyfunction]
fn kregular_reference_bound<'py>(py: Python<'py>, n: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &bounds::kregular_reference_bound(n, k).map_err(value_error)?)
}

fn generated<'py>(py: Python<'py>, g: GeneratedGraph) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let meta = PyDict::new(py);
    meta.set_item("n", g.predicted_n)?;
    meta.set_item("m", g.predicted_m)?;
    meta.set_item("alpha_predicted", g.predicted_alpha)?;
    meta.set_item("link_vertices", g.link_vertices)?;
    Ok((PyGraph { inner: g.graph }, meta))
}

/// `G_{k,r}`; `blocks` is "gadgets", "singles" or a 0/1 string.
#[pyfunction]
#[pyo3(signature = (k, r, blocks = "gadgets"))]
fn family_gkr<'py>(py: Python<'py>, k: usize, r: usize, blocks: &str) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let choices = Block::parse_choices(blocks, constructions::gkr_block_count(k, r)).map_err(value_error)?;
    generated(py, constructions::family_gkr(k, r, &choices).map_err(value_error)?)
}

/// `H_{k,r}` on a canonical tree (`mode` "tree" or "regular") or on `tree`,
/// whose side containing vertex 0 is V2.
#[pyfunction]
#[pyo3(signature = (k, r = None, mode = "tree", tree = None))]
fn family_hkr<'py>(
    py: Python<'py>,
    k: usize,
    r: Option<usize>,
    mode: &str,
    tree: Option<PyGraph>,
) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let tree = match (tree, r) {
        (Some(t), _) => constructions::BipartiteTree::rooted_at_zero(t.inner).map_err(value_error)?,
        (None, Some(r)) => {
            let mode = match mode {
                "tree" => TreeMode::Tree,
                "regular" => TreeMode::Regular,
                other => return Err(value_error(format!("mode must be 'tree' or 'regular', got {other:?}"))),
            };
            constructions::canonical_tree(k, r, mode).map_err(value_error)?
        }
        (None, None) => return Err(value_error("pass either r or tree")),
    };
    generated(py, constructions::family_hkr(k, &tree).map_err(value_error)?)
}

#[pyfunction]
fn family_fkr<'py>(py: Python<'py>, k: usize, r: usize) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    generated(py, constructions::family_fkr(k, r).map_err(value_error)?)
}

type PyObj<'py> = Bound<'py, PyAny>;

/// `[(name, slope, intercept)]` with `β <= slope·γ + intercept`.
#[pyfunction]
fn half_spaces<'py>(py: Python<'py>, k: usize) -> PyResult<Vec<(&'static str, PyObj<'py>, PyObj<'py>)>> {
    region::half_spaces(k)
        .map_err(value_error)?
        .iter()
        .map(|h| Ok((h.name, fraction(py, &h.slope)?, fraction(py, &h.intercept)?)))
        .collect()
}

fn points<'py>(py: Python<'py>, list: &[RationalPoint]) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    list.iter().map(|p| Ok((fraction(py, &p.gamma)?, fraction(py, &p.beta)?))).collect()
}

#[pyfunction]
fn extreme_points<'py>(py: Python<'py>, k: usize) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    points(py, &region::extreme_points(k).map_err(value_error)?)
}

/// "good" or "bad".
#[pyfunction]
fn classify(k: usize, gamma: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<&'static str> {
    let p = RationalPoint::new(rational_arg(gamma)?, rational_arg(beta)?);
    Ok(match region::classify_pair(k, &p).map_err(value_error)? {
        region::Classification::Good => "good",
        region::Classification::Bad => "bad",
    })
}

#[pyfunction]
fn is_boundary(k: usize, gamma: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<bool> {
    let p = RationalPoint::new(rational_arg(gamma)?, rational_arg(beta)?);
    region::is_boundary(k, &p).map_err(value_error)
}

/// Counterclockwise vertices of `L_k` clipped to `bbox = (gmin, gmax, bmin, bmax)`.
#[pyfunction]
#[pyo3(signature = (k, bbox = None))]
fn region_polygon<'py>(
    py: Python<'py>,
    k: usize,
    bbox: Option<(PyObj<'py>, PyObj<'py>, PyObj<'py>, PyObj<'py>)>,
) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    let bbox = match bbox {
        Some((g0, g1, b0, b1)) => {
            BoundingBox::new(rational_arg(&g0)?, rational_arg(&g1)?, rational_arg(&b0)?, rational_arg(&b1)?)
        }
        None => BoundingBox::plot_window(),
    };
    points(py, &region::region_polygon(k, &bbox).map_err(value_error)?)
}

#[pyfunction]
#[pyo3(signature = (k, trials, max_n, seed = 0, allow_regular = false))]
fn run_fuzz<'py>(
    py: Python<'py>,
    k: usize,
    trials: usize,
    max_n: usize,
    seed: u64,
    allow_regular: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let config = FuzzConfig { k, trials, max_n, seed, forbid_regular_components: !allow_regular };
    let outcome = py.detach(|| fuzz::run_fuzz(&config)).map_err(value_error)?;
    json_to_py(py, serde_json::to_string(&outcome))
}

#[pymodule]
fn pymatchbound(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(maximum_matching, m)?)?;
    m.add_function(wrap_pyfunction!(matching_number, m)?)?;
    m.add_function(wrap_pyfunction!(tutte_berge, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(main_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound_connected, m)?)?;
    m.add_function(wrap_pyfunction!(kregular_reference_bound, m)?)?;
    m.add_function(wrap_pyfunction!(family_gkr, m)?)?;
    m.add_function(wrap_pyfunction!(family_hkr, m)?)?;
    m.add_function(wrap_pyfunction!(family_fkr, m)?)?;
    m.add_function(wrap_pyfunction!(half_spaces, m)?)?;
    m.add_function(wrap_pyfunction!(extreme_points, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(region_polygon, m)?)?;
    m.add_function(wrap_pyfunction!(run_fuzz, m)?)?;
    Ok(())
}
