//! Python bindings for the `meshdist` crate.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use meshdist::bijection;
use meshdist::catalog;
use meshdist::equidist;
use meshdist::formulas::TheoremId;
use meshdist::oracle::{self, OracleConfig};
use meshdist::verify;

fn py_err(e: meshdist::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn theorem(tag: &str) -> PyResult<TheoremId> {
    tag.parse().map_err(py_err)
}

#[derive(FromPyObject)]
enum PermInput {
    Text(String),
    Word(Vec<u32>),
}

/// A permutation in one-line notation.
#[pyclass(frozen, eq, hash, name = "Permutation", module = "meshdist")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(meshdist::Permutation);

#[pymethods]
impl PyPermutation {
    /// Accepts a list of letters or a string such as `"132"`, `"1 3 2"` or `"(15)(17)9"`.
    #[new]
    fn new(input: PermInput) -> PyResult<Self> {
        let p = match input {
            PermInput::Text(s) => s.parse(),
            PermInput::Word(w) => meshdist::Permutation::new(w),
        };
        p.map(PyPermutation).map_err(py_err)
    }

    #[getter]
    fn word(&self) -> Vec<u32> {
        self.0.as_slice().to_vec()
    }

    /// Parenthesized notation, e.g. `(15)(17)9`.
    fn compact(&self) -> String {
        self.0.to_compact_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

/// A mesh pattern `(tau, R)`.
#[pyclass(frozen, eq, name = "MeshPattern", module = "meshdist")]
#[derive(Clone, PartialEq)]
struct PyMeshPattern(meshdist::MeshPattern);

#[pymethods]
impl PyMeshPattern {
    /// Accepts a literal `tau=12;R=(0,1)`, `nr=<int>` or `sfp`.
    #[new]
    fn new(selector: &str) -> PyResult<Self> {
        catalog::resolve(selector)
            .map(PyMeshPattern)
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_nr(nr: u32) -> PyResult<Self> {
        catalog::pattern(nr).map(PyMeshPattern).map_err(py_err)
    }

    fn count(&self, perm: PyRef<'_, PyPermutation>) -> usize {
        self.0.count_occurrences(&perm.0)
    }

    fn avoids(&self, perm: PyRef<'_, PyPermutation>) -> bool {
        self.0.avoids(&perm.0)
    }

    /// Occurrences as 0-based position tuples.
    fn occurrences(&self, perm: PyRef<'_, PyPermutation>) -> Vec<Vec<usize>> {
        self.0.find_occurrences(&perm.0)
    }

    /// `"reverse"`, `"complement"` or `"inverse"`.
    fn transform(&self, symmetry: &str) -> PyResult<Self> {
        let s = match symmetry {
            "reverse" => meshdist::Symmetry::Reverse,
            "complement" => meshdist::Symmetry::Complement,
            "inverse" => meshdist::Symmetry::Inverse,
            _ => {
                return Err(PyValueError::new_err(format!(
                    "unknown symmetry `{symmetry}`"
                )))
            }
        };
        Ok(PyMeshPattern(self.0.transform(s)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MeshPattern('{}')", self.0)
    }
}

/// `rows[n][k]`: permutations of length `n` with `k` occurrences.
#[pyclass(frozen, name = "DistributionTable", module = "meshdist")]
struct PyDistributionTable(meshdist::DistributionTable);

#[pymethods]
impl PyDistributionTable {
    #[getter]
    fn pattern(&self) -> String {
        self.0.pattern.clone()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.0.rows.clone()
    }

    #[getter]
    fn conjectural(&self) -> bool {
        self.0.conjectural
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        self.0.get(n, k)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        meshdist::DistributionTable::from_json(text)
            .map(PyDistributionTable)
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "DistributionTable('{}', n_max={})",
            self.0.pattern,
            self.0.n_max()
        )
    }
}

/// Exhaustive table for rows `0..=n_max` (ceiling 9, or 10 with `unsafe_n_max`).
#[pyfunction]
#[pyo3(signature = (pattern, n_max, shards = 1, unsafe_n_max = false))]
fn brute_distribution(
    py: Python<'_>,
    pattern: PyRef<'_, PyMeshPattern>,
    n_max: usize,
    shards: usize,
    unsafe_n_max: bool,
) -> PyResult<PyDistributionTable> {
    let mut cfg = OracleConfig::default().with_shards(shards);
    if unsafe_n_max {
        cfg = cfg.unsafe_n_max();
    }
    let p = pattern.0.clone();
    py.detach(|| oracle::brute_distribution_with(&p, n_max, &cfg))
        .map(PyDistributionTable)
        .map_err(py_err)
}

/// Formula table of a result tag such as `"T4.1"` or `"C6.1"`.
#[pyfunction]
fn formula_table(tag: &str, n_max: usize) -> PyResult<PyDistributionTable> {
    theorem(tag)?
        .table(n_max)
        .map(PyDistributionTable)
        .map_err(py_err)
}

/// `[n][k]` coefficients of a generating-function result at `t = 1`.
#[pyfunction]
fn formula_series(tag: &str, order: usize) -> PyResult<Vec<Vec<BigInt>>> {
    let t = theorem(tag)?;
    let s = t.series(order).map_err(py_err)?.ok_or_else(|| {
        PyValueError::new_err(format!("{t} is not stated as a generating function"))
    })?;
    Ok(s.eval_t_one().q_matrix())
}

/// The result tag covering catalog pattern `nr`, if any.
#[pyfunction]
fn theorem_for(nr: u32) -> Option<String> {
    TheoremId::for_nr(nr).map(|t| t.to_string())
}

#[pyfunction]
fn catalog_numbers() -> Vec<u32> {
    catalog::catalog_numbers()
}

#[pyfunction]
fn map_g(perm: PyRef<'_, PyPermutation>) -> PyResult<PyPermutation> {
    bijection::map_g(&perm.0).map(PyPermutation).map_err(py_err)
}

#[pyfunction]
fn map_g_inverse(perm: PyRef<'_, PyPermutation>) -> PyResult<PyPermutation> {
    bijection::map_g_inverse(&perm.0)
        .map(PyPermutation)
        .map_err(py_err)
}

#[pyfunction]
fn map_f(perm: PyRef<'_, PyPermutation>) -> PyResult<PyPermutation> {
    bijection::map_f(&perm.0).map(PyPermutation).map_err(py_err)
}

#[pyfunction]
fn map_f_inverse(perm: PyRef<'_, PyPermutation>) -> PyResult<PyPermutation> {
    bijection::map_f_inverse(&perm.0)
        .map(PyPermutation)
        .map_err(py_err)
}

/// Formula-versus-oracle report as JSON lines; every result when `tags` is `None`.
#[pyfunction]
#[pyo3(signature = (tags = None, n_max = 8, shards = 1))]
fn verify_results(
    py: Python<'_>,
    tags: Option<Vec<String>>,
    n_max: usize,
    shards: usize,
) -> PyResult<Vec<String>> {
    let selected = match tags {
        Some(tags) => tags
            .iter()
            .map(|t| theorem(t))
            .collect::<PyResult<Vec<_>>>()?,
        None => TheoremId::all(),
    };
    let cfg = OracleConfig::default().with_shards(shards);
    let report = py
        .detach(|| verify::verify(&selected, n_max, &cfg))
        .map_err(py_err)?;
    Ok(report.lines.iter().map(|l| l.to_json()).collect())
}

/// Equidistribution report of a group of catalog patterns, as JSON.
#[pyfunction]
#[pyo3(signature = (nrs, n_max = 8))]
fn check_group(py: Python<'_>, nrs: Vec<u32>, n_max: usize) -> PyResult<String> {
    py.detach(|| equidist::check_group(&nrs, n_max))
        .map(|r| r.to_json())
        .map_err(py_err)
}

#[pymodule]
#[pyo3(name = "meshdist")]
fn meshdist_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyMeshPattern>()?;
    m.add_class::<PyDistributionTable>()?;
    m.add_function(wrap_pyfunction!(brute_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(formula_table, m)?)?;
    m.add_function(wrap_pyfunction!(formula_series, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_for, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(map_g, m)?)?;
    m.add_function(wrap_pyfunction!(map_g_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(map_f, m)?)?;
    m.add_function(wrap_pyfunction!(map_f_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(verify_results, m)?)?;
    m.add_function(wrap_pyfunction!(check_group, m)?)?;
    Ok(())
}
