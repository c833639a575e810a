//! Python bindings: `import mocktheta`.

use mocktheta_core::characters::{self, Phase};
use mocktheta_core::relations::{self, RelationReport};
use mocktheta_core::{verify, Error, Status, TruncSeries, VerificationReport};
use pyo3::exceptions::{PyArithmeticError, PyIndexError, PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyComplex;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow { .. } => PyOverflowError::new_err(e.to_string()),
        Error::UnknownId(_) | Error::Precondition(_) | Error::InsufficientOrder { .. } | Error::OrderMismatch { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyArithmeticError::new_err(e.to_string()),
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::SignFlippedPass => "sign-flipped-pass",
    }
}

/// A truncated power series with exact integer coefficients.
#[pyclass(name = "Series", module = "mocktheta", frozen)]
struct PySeries(TruncSeries);

#[pymethods]
impl PySeries {
    #[new]
    fn new(coeffs: Vec<i128>) -> PyResult<Self> {
        if coeffs.is_empty() {
            return Err(PyValueError::new_err("a series needs at least one coefficient"));
        }
        Ok(Self(TruncSeries::from_coeffs(coeffs)))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn coeffs(&self) -> Vec<i128> {
        self.0.coeffs().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.coeffs().len()
    }

    fn __getitem__(&self, k: usize) -> PyResult<i128> {
        self.0.coeff(k).ok_or_else(|| PyIndexError::new_err(format!("q^{k} is past the order {}", self.0.order())))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(to_py)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(to_py)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(Self).map_err(to_py)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.neg().map(Self).map_err(to_py)
    }

    fn invert(&self) -> PyResult<Self> {
        self.0.invert().map(Self).map_err(to_py)
    }

    fn shift(&self, k: usize) -> Self {
        Self(self.0.shift(k))
    }

    fn resized(&self, order: usize) -> Self {
        Self(self.0.resized(order))
    }

    fn to_dump(&self) -> String {
        self.0.to_dump()
    }

    fn __repr__(&self) -> String {
        let head: Vec<String> = self.0.coeffs().iter().take(8).map(|c| c.to_string()).collect();
        let more = if self.0.coeffs().len() > 8 { ", ..." } else { "" };
        format!("Series(order={}, [{}{more}])", self.0.order(), head.join(", "))
    }
}

#[pyclass(name = "Report", module = "mocktheta", frozen)]
struct PyReport(VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn identity_id(&self) -> &str {
        &self.0.identity_id
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order
    }

    #[getter]
    fn status(&self) -> &'static str {
        status_str(self.0.status)
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    /// `(exponent, lhs, rhs)` of the first disagreement, if any.
    #[getter]
    fn first_mismatch(&self) -> Option<(usize, i128, i128)> {
        self.0.first_mismatch.map(|m| (m.exponent, m.lhs, m.rhs))
    }

    #[getter]
    fn elapsed_ms(&self) -> f64 {
        self.0.elapsed_ms
    }

    #[getter]
    fn notes(&self) -> &str {
        &self.0.notes
    }

    fn __repr__(&self) -> String {
        format!("Report({}, N={}, {})", self.0.identity_id, self.0.order, status_str(self.0.status))
    }
}

#[pyclass(name = "RelationReport", module = "mocktheta", frozen)]
struct PyRelationReport(RelationReport);

#[pymethods]
impl PyRelationReport {
    #[getter]
    fn relation_id(&self) -> &str {
        &self.0.relation_id
    }

    #[getter]
    fn prime(&self) -> Option<u64> {
        self.0.prime
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn checks(&self) -> usize {
        self.0.checks
    }

    #[getter]
    fn required_order(&self) -> usize {
        self.0.required_order
    }

    /// `(label, n, lhs, rhs)` for each failed equation.
    #[getter]
    fn counterexamples(&self) -> Vec<(String, i64, i128, i128)> {
        self.0.counterexamples.iter().map(|c| (c.label.clone(), c.n, c.lhs, c.rhs)).collect()
    }

    #[getter]
    fn notes(&self) -> &str {
        &self.0.notes
    }

    fn __repr__(&self) -> String {
        format!("RelationReport({}, p={:?}, {})", self.0.relation_id, self.0.prime, status_str(self.0.status))
    }
}

/// Series by id: chi0, chi1, F0, F1, F2, C0, C1, f0, f1, f2 or eta.
#[pyfunction]
#[pyo3(signature = (id, terms = 500))]
fn expand(py: Python<'_>, id: &str, terms: usize) -> PyResult<PySeries> {
    py.detach(|| verify::expand(id, terms)).map(PySeries).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (id, terms = 500))]
fn verify_identity(py: Python<'_>, id: &str, terms: usize) -> PyResult<PyReport> {
    py.detach(|| verify::verify_identity(id, terms)).map(PyReport).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (terms = 500))]
fn verify_all(py: Python<'_>, terms: usize) -> PyResult<Vec<PyReport>> {
    let reports = py.detach(|| verify::verify_all(terms)).map_err(to_py)?;
    Ok(reports.into_iter().map(PyReport).collect())
}

#[pyfunction]
fn identity_ids() -> Vec<String> {
    verify::identity_ids()
}

/// `kind` is `chirels`, `mock7` or `f25`; `prime` is ignored for `f25`.
#[pyfunction]
#[pyo3(name = "relations", signature = (kind, nmax, prime = None))]
fn check_relations(py: Python<'_>, kind: &str, nmax: i64, prime: Option<u64>) -> PyResult<PyRelationReport> {
    let need_prime = || prime.ok_or_else(|| PyValueError::new_err(format!("{kind} needs a prime")));
    let report = match kind {
        "chirels" => {
            let p = need_prime()?;
            py.detach(|| relations::check_chirels(p, nmax))
        }
        "mock7" => {
            let p = need_prime()?;
            py.detach(|| relations::check_mock7rels(p, nmax))
        }
        "f25" => py.detach(|| relations::check_f25(nmax)),
        _ => return Err(PyValueError::new_err(format!("unknown relation {kind:?}"))),
    };
    report.map(PyRelationReport).map_err(to_py)
}

#[pyfunction]
fn kronecker(a: i64, n: i64) -> PyResult<i8> {
    characters::kronecker(a, n).map_err(to_py)
}

/// The character mod 60 as a complex unit, or `None` off the coprime classes.
#[pyfunction]
fn chi60(py: Python<'_>, m: i64) -> Option<Bound<'_, PyComplex>> {
    characters::chi60(m).map(|p| {
        let (re, im) = match p {
            Phase::ONE => (1.0, 0.0),
            Phase::I => (0.0, 1.0),
            Phase::MINUS_ONE => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
        PyComplex::from_doubles(py, re, im)
    })
}

#[pymodule]
fn mocktheta(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyRelationReport>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(identity_ids, m)?)?;
    m.add_function(wrap_pyfunction!(check_relations, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(chi60, m)?)?;
    Ok(())
}
