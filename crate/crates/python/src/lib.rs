//! Python bindings. Structured results come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

use hss_stab::cli::rational_json;
use hss_stab::stability::{certify_restriction_with, EngineOptions};
use hss_stab::{
    spaces, Claim, CohomologyQuery, HssSpace, Oracle, Resolution, SpaceFamily, SweepParams, Verifier,
};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_bound_py_any(py),
            None => n.as_u64().map_or_else(|| n.as_f64().into_bound_py_any(py), |u| u.into_bound_py_any(py)),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(to_py(py, x)?)?;
            }
            Ok(list.into_any())
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, to_py(py, x)?)?;
            }
            Ok(dict.into_any())
        }
    }
}

fn serialized<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(x).map_err(err)?)
}

/// A compact irreducible Hermitian symmetric space, e.g. Space("A:2,3").
#[pyclass(name = "Space", frozen, eq, hash, from_py_object, module = "hss_stab_py")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySpace {
    inner: HssSpace,
}

#[pymethods]
impl PySpace {
    #[new]
    fn new(key: &str) -> PyResult<Self> {
        Ok(PySpace {
            inner: key.parse().map_err(err)?,
        })
    }

    #[getter]
    fn key(&self) -> String {
        self.inner.key()
    }

    #[getter]
    fn dimension(&self) -> u32 {
        self.inner.dimension()
    }

    #[getter]
    fn index(&self) -> u32 {
        self.inner.index()
    }

    #[getter]
    fn embedding_degree(&self) -> Option<u32> {
        self.inner.embedding_degree()
    }

    #[getter]
    fn is_exceptional(&self) -> bool {
        self.inner.is_exceptional()
    }

    /// p · index / dim as "num/den" or an integer.
    fn slope_threshold<'py>(&self, py: Python<'py>, p: u32) -> PyResult<Bound<'py, PyAny>> {
        if p > self.inner.dimension() {
            return Err(err(format!("p = {p} exceeds the dimension")));
        }
        to_py(py, &rational_json(&self.inner.slope_threshold(p)))
    }

    fn __repr__(&self) -> String {
        format!("Space('{}')", self.inner.key())
    }

    fn __str__(&self) -> String {
        self.inner.key()
    }
}

fn space_of(obj: &Bound<'_, PyAny>) -> PyResult<HssSpace> {
    if let Ok(s) = obj.extract::<PySpace>() {
        return Ok(s.inner);
    }
    let key: String = obj.extract()?;
    key.parse().map_err(err)
}

/// The seven catalog rows.
#[pyfunction]
fn catalog(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    serialized(py, &spaces::catalog())
}

/// Whether H^q(Omega^p(l)) is nonzero, with witnesses.
#[pyfunction]
#[pyo3(signature = (space, p, q, l, witness_cap = 16))]
fn nonvanishing<'py>(
    py: Python<'py>,
    space: &Bound<'py, PyAny>,
    p: u32,
    q: u32,
    l: i64,
    witness_cap: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let query = CohomologyQuery::new(space_of(space)?, p, q, l).map_err(err)?;
    serialized(py, &Oracle::with_witness_cap(witness_cap).nonvanishing(&query))
}

/// Serre dual indices (p', q', l').
#[pyfunction]
fn serre_dual(space: &Bound<'_, PyAny>, p: u32, q: u32, l: i64) -> PyResult<(u32, u32, i64)> {
    let query = CohomologyQuery::new(space_of(space)?, p, q, l).map_err(err)?;
    let d = hss_stab::serre_dual(&query);
    Ok((d.p(), d.q(), d.l()))
}

type Table = Vec<((u32, u32), u64)>;

/// Nonzero (p, q) pairs at twist l with their witness counts, or None when
/// the oracle does not cover the twist.
#[pyfunction]
fn table(space: &Bound<'_, PyAny>, l: i64) -> PyResult<Option<Table>> {
    let space = space_of(space)?;
    Ok(Oracle::default().table(&space, l).map(|t| t.into_iter().collect()))
}

/// Terms of the Koszul resolution for the given hypersurface degrees.
#[pyfunction]
fn koszul(degrees: Vec<u32>) -> PyResult<String> {
    Ok(Resolution::koszul(&degrees).map_err(err)?.to_string())
}

/// Stability verdict for Omega_Y restricted to X, given a resolution such
/// as "ci:2,3" or "raw:[{2},{4}]".
#[pyfunction]
#[pyo3(signature = (space, resolution, accept_asserted = false, workers = None))]
fn certify<'py>(
    py: Python<'py>,
    space: &Bound<'py, PyAny>,
    resolution: &str,
    accept_asserted: bool,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let space = space_of(space)?;
    let res: Resolution = resolution.parse().map_err(err)?;
    let opts = EngineOptions {
        accept_asserted_exceptional: accept_asserted,
        workers,
    };
    let v = py.detach(|| certify_restriction_with(&space, &res, &opts)).map_err(err)?;
    serialized(py, &v)
}

/// Tabulated verdict for a smooth divisor of degree d in P^2, P^3, Q^2, Q^3.
#[pyfunction]
fn small_dimension_verdict<'py>(py: Python<'py>, space: &Bound<'py, PyAny>, d: u32) -> PyResult<Bound<'py, PyAny>> {
    let v = hss_stab::small_dimension_verdict(&space_of(space)?, d).map_err(err)?;
    serialized(py, &v)
}

/// Langer's bound as "num/den" or an integer.
#[pyfunction]
fn langer_bound<'py>(py: Python<'py>, space: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let b = hss_stab::langer_bound(&space_of(space)?).map_err(err)?;
    to_py(py, &rational_json(&b))
}

#[pyfunction]
fn surface_invariants(py: Python<'_>, d: u32) -> PyResult<Bound<'_, PyAny>> {
    serialized(py, &hss_stab::q3_surface_invariants(d).map_err(err)?)
}

/// Runs a sweep by claim name or tag; returns one report per family for
/// the slope bound and a single-element list otherwise.
#[pyfunction]
#[pyo3(signature = (
    claim, *, a_max = 6, b_max = 6, l_margin = 2, n_max = None, l_max = None, family = None,
    family_max = None, order_min = 1, order_max = 4, bound = 2, samples = 10_000, seed = 0,
    workers = None, timing = false
))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    claim: &str,
    a_max: u32,
    b_max: u32,
    l_margin: u32,
    n_max: Option<u32>,
    l_max: Option<u32>,
    family: Option<&str>,
    family_max: Option<u32>,
    order_min: u32,
    order_max: u32,
    bound: u32,
    samples: u64,
    seed: u64,
    workers: Option<usize>,
    timing: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let claim: Claim = claim.parse().map_err(err)?;
    let params = SweepParams {
        a_max,
        b_max,
        l_margin,
        n_max,
        l_max,
        family: family.map(str::parse::<SpaceFamily>).transpose().map_err(err)?,
        family_max,
        order_min,
        order_max,
        bound,
        samples,
        seed,
    };
    let v = workers.map_or_else(Verifier::default, Verifier::with_workers);
    let reports = py.detach(|| v.run(claim, &params)).map_err(err)?;
    let json: Vec<Value> = reports.iter().map(|r| r.to_json(timing)).collect();
    to_py(py, &Value::Array(json))
}

#[pymodule]
pub fn hss_stab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpace>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(nonvanishing, m)?)?;
    m.add_function(wrap_pyfunction!(serre_dual, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(koszul, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(small_dimension_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(langer_bound, m)?)?;
    m.add_function(wrap_pyfunction!(surface_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
