//! Python bindings. Exact rationals come back as `fractions.Fraction` and
//! big integers as Python `int`s.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use symsig_core as core;

fn py_err(e: core::Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

trait OrPyErr<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPyErr<T> for core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// The singularity `1/n(1, a)`: `Z/n` acting on `k[[u, v]]` by
/// `(u, v) -> (z u, z^a v)`.
#[pyclass(name = "CyclicType", module = "symsig", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyCyclicType {
    inner: core::CyclicType,
}

#[pymethods]
impl PyCyclicType {
    #[new]
    fn new(n: u64, a: u64) -> PyResult<Self> {
        Ok(PyCyclicType {
            inner: core::CyclicType::validate(n, a).py()?,
        })
    }

    /// Every valid type with `lo <= n <= hi`.
    #[staticmethod]
    fn all_with_order(lo: u64, hi: u64) -> Vec<PyCyclicType> {
        core::CyclicType::all_with_order(lo..=hi)
            .map(|inner| PyCyclicType { inner })
            .collect()
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn a(&self) -> u64 {
        self.inner.a()
    }

    /// Minimal generators `(i, j)` of the invariant monomials, `i` decreasing.
    fn staircase(&self) -> Vec<(u64, u64)> {
        core::minimal_generators(self.inner).as_pairs()
    }

    fn syzygy_weights(&self) -> Vec<u64> {
        core::syzygy_weights(self.inner).weights().to_vec()
    }

    fn is_faithful(&self) -> bool {
        core::syzygy_weights(self.inner).is_faithful()
    }

    /// The syzygy representation as a general diagonal representation.
    fn representation(&self) -> PyDiagonalRepresentation {
        PyDiagonalRepresentation {
            inner: core::syzygy_weights(self.inner).to_diagonal(),
        }
    }

    fn multiplicity(&self, chi: u64, q: u64) -> PyResult<BigUint> {
        let chi = core::signature::cyclic_character(self.inner, chi).py()?;
        core::multiplicity(&core::syzygy_weights(self.inner).to_diagonal(), &chi, q).py()
    }

    #[pyo3(signature = (chi = 0))]
    fn signature(&self, chi: u64) -> PyResult<BigRational> {
        core::exact_signature(self.inner, chi).py()
    }

    #[pyo3(signature = (chi = 0, n_max = 100, grid = None))]
    fn ratio_series(&self, chi: u64, n_max: u64, grid: Option<Vec<u64>>) -> PyResult<PyRatioSeries> {
        let grid = grid.unwrap_or_else(|| core::default_grid(n_max));
        Ok(PyRatioSeries {
            inner: core::ratio_series(self.inner, chi, n_max, &grid).py()?,
        })
    }

    fn __repr__(&self) -> String {
        format!("CyclicType({}, {})", self.inner.n(), self.inner.a())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// A diagonal representation of `Z/n_1 x ... x Z/n_k`, one weight vector
/// per line.
#[pyclass(name = "DiagonalRepresentation", module = "symsig", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDiagonalRepresentation {
    inner: core::DiagonalRepresentation,
}

impl PyDiagonalRepresentation {
    fn character(&self, chi: Option<Vec<u64>>) -> core::Character {
        let k = self.inner.group().moduli().len();
        core::Character::new(chi.unwrap_or_else(|| vec![0; k]))
    }
}

#[pymethods]
impl PyDiagonalRepresentation {
    #[new]
    fn new(moduli: Vec<u64>, weights: Vec<Vec<u64>>) -> PyResult<Self> {
        let group = core::AbelianGroup::new(moduli).py()?;
        let weights = weights.into_iter().map(core::Character::new).collect();
        Ok(PyDiagonalRepresentation {
            inner: core::DiagonalRepresentation::new(group, weights).py()?,
        })
    }

    #[getter]
    fn moduli(&self) -> Vec<u64> {
        self.inner.group().moduli().to_vec()
    }

    #[getter]
    fn weights(&self) -> Vec<Vec<u64>> {
        self.inner.weights().iter().map(|w| w.components().to_vec()).collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// A nonzero group element acting trivially, or `None` if faithful.
    fn kernel_element(&self) -> Option<Vec<u64>> {
        self.inner.kernel_element().map(|g| g.components().to_vec())
    }

    fn is_faithful(&self) -> PyResult<bool> {
        core::is_faithful(&self.inner).py()
    }

    /// `[Z^nu : L]` for the kernel lattice `L` of the weight map.
    fn lattice_index(&self) -> PyResult<BigUint> {
        Ok(core::kernel_lattice(&self.inner).py()?.index().clone())
    }

    fn multiplicity(&self, chi: Vec<u64>, q: u64) -> PyResult<BigUint> {
        core::multiplicity(&self.inner, &core::Character::new(chi), q).py()
    }

    /// Lexicographically smallest exponent vector of weight `chi`.
    fn coset_representative(&self, chi: Vec<u64>) -> PyResult<Option<Vec<u64>>> {
        let point = core::coset_representative(&self.inner, &core::Character::new(chi)).py()?;
        Ok(point.map(|p| p.coords().to_vec()))
    }

    /// Exact signature `1/|G|` and the ratio series up to `n_max`.
    #[pyo3(signature = (chi = None, n_max = 100))]
    fn signature(&self, chi: Option<Vec<u64>>, n_max: u64) -> PyResult<(BigRational, PyRatioSeries)> {
        let (value, series) = core::general_signature(&self.inner, &self.character(chi), n_max).py()?;
        Ok((value, PyRatioSeries { inner: series }))
    }

    fn __repr__(&self) -> String {
        format!("DiagonalRepresentation({:?}, {:?})", self.moduli(), self.weights())
    }
}

/// Exact partial ratios `r_N` and their limit.
#[pyclass(name = "RatioSeries", module = "symsig", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRatioSeries {
    inner: core::RatioSeries,
}

#[pymethods]
impl PyRatioSeries {
    #[getter]
    fn target(&self) -> BigRational {
        self.inner.target.clone()
    }

    /// `(N, numerator, denominator, ratio)` tuples.
    #[getter]
    fn entries(&self) -> Vec<(u64, BigUint, BigUint, BigRational)> {
        self.inner
            .entries
            .iter()
            .map(|e| (e.degree_bound, e.numerator.clone(), e.denominator.clone(), e.ratio.clone()))
            .collect()
    }

    fn gap_at(&self, degree_bound: u64) -> Option<BigRational> {
        self.inner.gap_at(degree_bound)
    }

    fn convergence<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = core::convergence_report(&self.inner).py()?;
        let d = PyDict::new(py);
        d.set_item("final_gap", report.final_gap)?;
        d.set_item("scaled_gaps", report.scaled_gaps)?;
        d.set_item("monotone_tail", report.monotone_tail)?;
        Ok(d)
    }

    fn __len__(&self) -> usize {
        self.inner.entries.len()
    }

    fn __repr__(&self) -> String {
        format!("RatioSeries(target={}, entries={})", self.inner.target, self.inner.entries.len())
    }
}

#[pyfunction]
fn staircase(n: u64, a: u64) -> PyResult<Vec<(u64, u64)>> {
    Ok(PyCyclicType::new(n, a)?.staircase())
}

#[pyfunction]
fn syzygy_weights(n: u64, a: u64) -> PyResult<Vec<u64>> {
    Ok(PyCyclicType::new(n, a)?.syzygy_weights())
}

#[pyfunction]
fn multiplicity(n: u64, a: u64, chi: u64, q: u64) -> PyResult<BigUint> {
    PyCyclicType::new(n, a)?.multiplicity(chi, q)
}

#[pyfunction]
#[pyo3(signature = (n, a, chi = 0))]
fn exact_signature(n: u64, a: u64, chi: u64) -> PyResult<BigRational> {
    PyCyclicType::new(n, a)?.signature(chi)
}

#[pyfunction]
#[pyo3(signature = (n, a, chi = 0, n_max = 100, grid = None))]
fn ratio_series(n: u64, a: u64, chi: u64, n_max: u64, grid: Option<Vec<u64>>) -> PyResult<PyRatioSeries> {
    PyCyclicType::new(n, a)?.ratio_series(chi, n_max, grid)
}

#[pyfunction]
#[pyo3(signature = (moduli, weights, chi = None, n_max = 100))]
fn general_signature(
    moduli: Vec<u64>,
    weights: Vec<Vec<u64>>,
    chi: Option<Vec<u64>>,
    n_max: u64,
) -> PyResult<(BigRational, PyRatioSeries)> {
    PyDiagonalRepresentation::new(moduli, weights)?.signature(chi, n_max)
}

type Matrix = Vec<Vec<BigInt>>;

/// `(U, D, V)` with `U M V = D`, for `M` given as a list of rows.
#[pyfunction]
fn smith_normal_form(rows: Vec<Vec<BigInt>>) -> PyResult<(Matrix, Matrix, Matrix)> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(PyValueError::new_err("rows must all have the same length"));
    }
    let m = core::IntegerMatrix::new(rows.len(), cols, rows.concat()).py()?;
    let d = core::snf(&m).py()?;
    let nested = |x: &core::IntegerMatrix| (0..x.rows()).map(|i| x.row(i).to_vec()).collect();
    Ok((nested(&d.u), nested(&d.d), nested(&d.v)))
}

/// Oracle cross-check of every stage for all types with order up to `n_max`.
#[pyfunction]
#[pyo3(signature = (n_max = 12))]
fn verify<'py>(py: Python<'py>, n_max: u64) -> PyResult<Bound<'py, PyDict>> {
    let report = core::run_verification(n_max).py()?;
    let d = PyDict::new(py);
    d.set_item("n_max", report.n_max)?;
    d.set_item("passed", report.passed())?;
    let checks = PyDict::new(py);
    for c in &report.checks {
        checks.set_item(c.name, (c.cases, c.failure_count, c.failures.clone()))?;
    }
    d.set_item("checks", checks)?;
    Ok(d)
}

#[pymodule]
fn symsig(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyclicType>()?;
    m.add_class::<PyDiagonalRepresentation>()?;
    m.add_class::<PyRatioSeries>()?;
    m.add_function(wrap_pyfunction!(staircase, m)?)?;
    m.add_function(wrap_pyfunction!(syzygy_weights, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(exact_signature, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_series, m)?)?;
    m.add_function(wrap_pyfunction!(general_signature, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
