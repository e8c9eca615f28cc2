//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be ints, Fractions, or "p/q" strings.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};

use recurlab::difference::{
    build_difference_table, default_max_depth, infer_recurrence, LinearRecurrence, Sequence,
};
use recurlab::genfunc::{build_ogf, partial_fractions, solve_genfunc};
use recurlab::geometry::{self, CircleParam, Placement, DEFAULT_RETRY_BUDGET};
use recurlab::solver::{self, fit_homogeneous_recurrence, solve_charpoly, to_moser_variable};
use recurlab::{moser, Error, Polynomial, Rational};

create_exception!(
    recurlab,
    RecurlabError,
    PyValueError,
    "Bad input to a recurlab operation."
);
create_exception!(
    recurlab,
    UnsupportedError,
    RecurlabError,
    "Mathematics outside what the solvers handle."
);
create_exception!(
    recurlab,
    PlacementError,
    RecurlabError,
    "No general-position placement within the retry budget."
);

fn py_err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::NoConstantRow
        | Error::UnsupportedRoots { .. }
        | Error::NotPolynomial
        | Error::SingularMatrix { .. } => UnsupportedError::new_err(msg),
        Error::PlacementBudgetExceeded { .. } => PlacementError::new_err(msg),
        _ => RecurlabError::new_err(msg),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs
        .iter()
        .map(|r| fraction(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "floats are not exact; pass an int, Fraction or 'p/q' string",
        ));
    }
    obj.str()?.to_str()?.parse().map_err(py_err)
}

fn rationals_arg(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(rational_arg).collect()
}

fn param_arg(obj: &Bound<'_, PyAny>) -> PyResult<CircleParam> {
    if obj.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "floats are not exact; use 'inf' for the point (-1, 0)",
        ));
    }
    obj.str()?.to_str()?.parse().map_err(py_err)
}

/// `(root, power, coefficient)` of one partial fraction.
type FractionTerm<'py> = (Bound<'py, PyAny>, u32, Bound<'py, PyAny>);

/// A linear recurrence `c_d a(n+d) + ... + c_0 a(n) = rhs(n)`, stored monic.
#[pyclass(name = "Recurrence", module = "recurlab", skip_from_py_object)]
#[derive(Clone)]
pub struct PyRecurrence {
    inner: LinearRecurrence,
}

#[pymethods]
impl PyRecurrence {
    /// `coefficients` highest shift first; `rhs` ascending polynomial
    /// coefficients in n (default 0).
    #[new]
    #[pyo3(signature = (coefficients, initial_conditions, rhs = None))]
    fn new(
        coefficients: Vec<Bound<'_, PyAny>>,
        initial_conditions: Vec<Bound<'_, PyAny>>,
        rhs: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Self> {
        let rhs = match rhs {
            Some(r) => Polynomial::new(rationals_arg(&r)?),
            None => Polynomial::zero(),
        };
        let inner = LinearRecurrence::new(
            rationals_arg(&coefficients)?,
            rhs,
            rationals_arg(&initial_conditions)?,
        )
        .map_err(py_err)?;
        Ok(PyRecurrence { inner })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn coefficients<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.inner.coefficients())
    }

    #[getter]
    fn rhs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.inner.rhs().coeffs())
    }

    #[getter]
    fn initial_conditions<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.inner.initial_conditions())
    }

    /// The first `count` terms by forward iteration.
    fn iterate<'py>(&self, py: Python<'py>, count: usize) -> PyResult<Bound<'py, PyList>> {
        let seq = self.inner.iterate(count).map_err(py_err)?;
        fractions(py, &seq.terms)
    }

    /// Closed form by "charpoly" or "genfunc".
    #[pyo3(signature = (method = "charpoly"))]
    fn solve(&self, method: &str) -> PyResult<PyClosedForm> {
        let inner = match method {
            "charpoly" => solve_charpoly(&self.inner),
            "genfunc" => solve_genfunc(&self.inner),
            other => return Err(RecurlabError::new_err(format!("unknown method {other:?}"))),
        }
        .map_err(py_err)?;
        Ok(PyClosedForm { inner })
    }

    fn characteristic_polynomial<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, solver::characteristic_polynomial(&self.inner).coeffs())
    }

    fn generating_function(&self) -> PyResult<String> {
        Ok(build_ogf(&self.inner).map_err(py_err)?.to_string())
    }

    /// `[(root, power, coefficient), ...]` for `coefficient / (1 - root x)^power`.
    fn partial_fractions<'py>(&self, py: Python<'py>) -> PyResult<Vec<FractionTerm<'py>>> {
        let pf = partial_fractions(&build_ogf(&self.inner).map_err(py_err)?).map_err(py_err)?;
        pf.terms
            .iter()
            .map(|t| {
                Ok((
                    fraction(py, &t.root)?,
                    t.power,
                    fraction(py, &t.coefficient)?,
                ))
            })
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Recurrence('{}')", self.inner)
    }
}

/// A closed form `a(v)` in the index n, or in the point count m after
/// `in_moser_variable`.
#[pyclass(name = "ClosedForm", module = "recurlab", skip_from_py_object)]
#[derive(Clone)]
pub struct PyClosedForm {
    inner: solver::ClosedForm,
}

#[pymethods]
impl PyClosedForm {
    #[getter]
    fn method(&self) -> String {
        self.inner.method.to_string()
    }

    #[getter]
    fn text(&self) -> String {
        self.inner.render()
    }

    fn evaluate<'py>(&self, py: Python<'py>, v: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.evaluate(v).map_err(py_err)?)
    }

    fn __call__<'py>(&self, py: Python<'py>, v: i64) -> PyResult<Bound<'py, PyAny>> {
        self.evaluate(py, v)
    }

    /// Ascending coefficients when the form is a plain polynomial, else None.
    fn polynomial<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyList>>> {
        self.inner
            .polynomial()
            .map(|p| fractions(py, p.coeffs()))
            .transpose()
    }

    /// Substitutes n = m - 1.
    fn in_moser_variable(&self) -> PyResult<PyClosedForm> {
        Ok(PyClosedForm {
            inner: to_moser_variable(&self.inner).map_err(py_err)?,
        })
    }

    fn same_function(&self, other: &PyClosedForm) -> bool {
        self.inner.same_function(&other.inner)
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!(
            "ClosedForm({}, '{}')",
            self.inner.method,
            self.inner.render()
        )
    }
}

fn sequence_arg(seq: &[Bound<'_, PyAny>]) -> PyResult<Sequence> {
    Ok(Sequence::new(rationals_arg(seq)?))
}

/// Rows of successive differences, the constant row if any, and the
/// predicted next term (None without a constant row).
#[pyfunction]
#[pyo3(signature = (sequence, max_depth = None))]
fn difference_table<'py>(
    py: Python<'py>,
    sequence: Vec<Bound<'py, PyAny>>,
    max_depth: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let seq = sequence_arg(&sequence)?;
    let depth = max_depth.unwrap_or_else(|| default_max_depth(&seq));
    let table = build_difference_table(&seq, depth).map_err(py_err)?;
    let out = PyDict::new(py);
    let rows = table
        .rows
        .iter()
        .map(|r| fractions(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("rows", rows)?;
    out.set_item("constant_depth", table.constant_depth)?;
    let next = table
        .predict_next()
        .ok()
        .map(|n| fraction(py, &n))
        .transpose()?;
    out.set_item("next", next)?;
    Ok(out)
}

#[pyfunction]
fn predict_next<'py>(
    py: Python<'py>,
    sequence: Vec<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let seq = sequence_arg(&sequence)?;
    let table = build_difference_table(&seq, default_max_depth(&seq)).map_err(py_err)?;
    fraction(py, &table.predict_next().map_err(py_err)?)
}

/// Recurrence read off the difference table.
#[pyfunction(name = "infer_recurrence")]
fn py_infer_recurrence(sequence: Vec<Bound<'_, PyAny>>) -> PyResult<PyRecurrence> {
    let seq = sequence_arg(&sequence)?;
    let table = build_difference_table(&seq, default_max_depth(&seq)).map_err(py_err)?;
    Ok(PyRecurrence {
        inner: infer_recurrence(&table).map_err(py_err)?,
    })
}

/// Lowest-order homogeneous recurrence the whole sequence satisfies, if any.
#[pyfunction]
fn fit_homogeneous(sequence: Vec<Bound<'_, PyAny>>) -> PyResult<Option<PyRecurrence>> {
    let seq = sequence_arg(&sequence)?;
    Ok(fit_homogeneous_recurrence(&seq).map(|inner| PyRecurrence { inner }))
}

#[pyfunction]
fn moser_recurrence() -> PyRecurrence {
    PyRecurrence {
        inner: moser::moser_recurrence(),
    }
}

/// Region count by "binomial", "polynomial", "sum" or "euler".
#[pyfunction]
#[pyo3(signature = (m, method = "binomial"))]
fn regions(m: u64, method: &str) -> PyResult<BigInt> {
    match method {
        "binomial" => moser::regions_binomial(m),
        "polynomial" => moser::regions_polynomial(m),
        "sum" => moser::regions_binomial_sum(m),
        "euler" => moser::regions_euler(m),
        other => return Err(RecurlabError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(py_err)
}

#[pyfunction]
fn euler_counts<'py>(py: Python<'py>, m: u64) -> PyResult<Bound<'py, PyDict>> {
    let e = moser::euler_counts(m).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("vertices", e.vertices.clone())?;
    out.set_item("edges", e.edges.clone())?;
    out.set_item("faces", e.faces.clone())?;
    out.set_item("regions", e.regions())?;
    Ok(out)
}

#[pyfunction]
fn hexagon_params() -> Vec<String> {
    geometry::hexagon_params()
        .iter()
        .map(ToString::to_string)
        .collect()
}

/// Builds a chord arrangement and counts its regions exactly. With `params`
/// the points are placed as given (use "inf" for (-1, 0)); otherwise the
/// generic sequence, or a seeded random one, is used.
#[pyfunction]
#[pyo3(signature = (m, variant = 0, seed = None, params = None))]
fn count_regions<'py>(
    py: Python<'py>,
    m: usize,
    variant: u64,
    seed: Option<u64>,
    params: Option<Vec<Bound<'py, PyAny>>>,
) -> PyResult<Bound<'py, PyDict>> {
    let placement = match (params, seed) {
        (Some(p), _) => Placement::Explicit(p.iter().map(param_arg).collect::<PyResult<_>>()?),
        (None, Some(seed)) => Placement::Seeded { seed, variant },
        (None, None) => Placement::Generic { variant },
    };
    let arr =
        geometry::build_arrangement(m, &placement, DEFAULT_RETRY_BUDGET, true).map_err(py_err)?;
    let r = geometry::count_regions(&arr).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("m", r.m)?;
    out.set_item("vertices", r.vertices)?;
    out.set_item("edges", r.edges)?;
    out.set_item("regions", r.regions)?;
    out.set_item("general_position", r.general_position)?;
    out.set_item("interior_points", arr.interior_points.len())?;
    out.set_item(
        "params",
        arr.params()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
    )?;
    Ok(out)
}

/// Geometric counts on `trials` configurations against `1 + C(m,2) + C(m,4)`.
#[pyfunction]
#[pyo3(signature = (m, trials = 2, seed = None))]
fn verify_geometric<'py>(
    py: Python<'py>,
    m: usize,
    trials: usize,
    seed: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let v =
        geometry::verify_against_formula(m, trials, seed, DEFAULT_RETRY_BUDGET).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("pass", v.pass)?;
    out.set_item("expected", v.expected)?;
    out.set_item("counts", v.counts)?;
    Ok(out)
}

#[pymodule]
#[pyo3(name = "recurlab")]
fn recurlab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("RecurlabError", py.get_type::<RecurlabError>())?;
    m.add("UnsupportedError", py.get_type::<UnsupportedError>())?;
    m.add("PlacementError", py.get_type::<PlacementError>())?;
    m.add_class::<PyRecurrence>()?;
    m.add_class::<PyClosedForm>()?;
    m.add_function(wrap_pyfunction!(difference_table, m)?)?;
    m.add_function(wrap_pyfunction!(predict_next, m)?)?;
    m.add_function(wrap_pyfunction!(py_infer_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(fit_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(moser_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(regions, m)?)?;
    m.add_function(wrap_pyfunction!(euler_counts, m)?)?;
    m.add_function(wrap_pyfunction!(hexagon_params, m)?)?;
    m.add_function(wrap_pyfunction!(count_regions, m)?)?;
    m.add_function(wrap_pyfunction!(verify_geometric, m)?)?;
    Ok(())
}
