//! Python bindings. Structured results come back as plain dicts and lists.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

use minrank_core::bounds;
use minrank_core::harness::{self, HarnessOptions, BRUTEFORCE_LIMIT};
use minrank_core::instance_io;
use minrank_core::polymatrix::{self, validate_degree_matrix, DegreeMatrix, InstanceKind, InstanceParams};
use minrank_core::{Error, FieldPrime, MinRankInstance, Polynomial};

fn err(e: Error) -> PyErr {
    match e {
        Error::DegreeCapExceeded { .. } | Error::HomogenizationFailure { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn degrees(m: usize, n: usize, degree: Option<u32>, grid: Option<Vec<Vec<i64>>>) -> PyResult<DegreeMatrix> {
    match grid {
        Some(g) => validate_degree_matrix(&g).map_err(err),
        None => DegreeMatrix::constant(m, n, degree.unwrap_or(1)).map_err(err),
    }
}

/// A MinRank instance: classical (scalar matrices) or generalized
/// (polynomial entries).
#[pyclass(name = "Instance", frozen)]
struct PyInstance {
    inner: MinRankInstance,
}

#[pymethods]
impl PyInstance {
    /// Random instance from a seed.
    #[staticmethod]
    #[pyo3(signature = (m, n, r, k, p=101, seed=0, kind="classical", degree=None, degree_grid=None, homogeneous=true))]
    #[allow(clippy::too_many_arguments)]
    fn generate(
        m: usize,
        n: usize,
        r: usize,
        k: usize,
        p: u32,
        seed: u64,
        kind: &str,
        degree: Option<u32>,
        degree_grid: Option<Vec<Vec<i64>>>,
        homogeneous: bool,
    ) -> PyResult<Self> {
        let field = FieldPrime::new(p).map_err(err)?;
        let kind: InstanceKind = kind.parse().map_err(err)?;
        let params = match kind {
            InstanceKind::Classical => InstanceParams::classical(m, n, r, k, field).map_err(err)?,
            InstanceKind::Generalized => {
                InstanceParams::generalized(r, k, field, degrees(m, n, degree, degree_grid)?, homogeneous)
            }
        };
        params.validate().map_err(err)?;
        Ok(PyInstance {
            inner: params.generate(seed).map_err(err)?,
        })
    }

    /// Classical instance from `k` explicit `m x n` matrices.
    #[staticmethod]
    #[pyo3(signature = (matrices, r, p=101))]
    fn classical(matrices: Vec<Vec<Vec<u32>>>, r: usize, p: u32) -> PyResult<Self> {
        let field = FieldPrime::new(p).map_err(err)?;
        let inner = MinRankInstance::classical(matrices, r, field).map_err(err)?;
        Ok(PyInstance { inner })
    }

    /// Generalized instance from a grid of polynomial strings in `x1..xk`.
    #[staticmethod]
    #[pyo3(signature = (entries, r, k, p=101))]
    fn generalized(entries: Vec<Vec<String>>, r: usize, k: usize, p: u32) -> PyResult<Self> {
        let field = FieldPrime::new(p).map_err(err)?;
        let rows = entries
            .iter()
            .map(|row| row.iter().map(|s| Polynomial::parse(s, k, field)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let pm = polymatrix::PolyMatrix::new(rows).map_err(err)?;
        Ok(PyInstance {
            inner: MinRankInstance::generalized(pm, r).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyInstance {
            inner: instance_io::from_json(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        instance_io::to_json(&self.inner)
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.field.value()
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn degrees(&self) -> Vec<Vec<i64>> {
        self.inner.degrees.to_grid()
    }

    /// The matrix `M(x)` as a grid of polynomial strings.
    fn matrix(&self) -> PyResult<Vec<Vec<String>>> {
        let pm = self.inner.matrix().map_err(err)?;
        Ok(pm
            .rows()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect())
    }

    /// The `(r+1)`-minors in lexicographic order of (rows, columns).
    fn minors(&self) -> PyResult<Vec<String>> {
        let pm = self.inner.matrix().map_err(err)?;
        let sys = polymatrix::minors(&pm, self.inner.r + 1).map_err(err)?;
        Ok(sys.generators.iter().map(ToString::to_string).collect())
    }

    fn bound_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &bounds::bound_report(&self.inner).map_err(err)?)
    }

    /// Measures the solving degree; returns a dict with `bounds`, `report`,
    /// `homogenized`, `generators` and `basis`.
    #[pyo3(signature = (cap=None, allow_inapplicable=false))]
    fn solve<'py>(&self, py: Python<'py>, cap: Option<u32>, allow_inapplicable: bool) -> PyResult<Bound<'py, PyAny>> {
        let inst = &self.inner;
        let solved = py
            .detach(|| {
                harness::solve_instance(
                    inst,
                    HarnessOptions {
                        cap,
                        allow_inapplicable,
                    },
                )
            })
            .map_err(err)?;
        let basis: Vec<String> = solved.basis.generators.iter().map(ToString::to_string).collect();
        to_py(
            py,
            &serde_json::json!({
                "bounds": solved.bounds,
                "report": solved.report,
                "homogenized": solved.homogenized,
                "generators": solved.generators,
                "basis": basis,
            }),
        )
    }

    /// Enumerates `F_p^k`; returns `points_checked`, `solutions`,
    /// `mismatches` and `agrees`.
    #[pyo3(signature = (limit=BRUTEFORCE_LIMIT))]
    fn bruteforce<'py>(&self, py: Python<'py>, limit: u128) -> PyResult<Bound<'py, PyAny>> {
        let inst = &self.inner;
        let res = py.detach(|| harness::bruteforce(inst, limit)).map_err(err)?;
        to_py(
            py,
            &serde_json::json!({
                "points_checked": res.points_checked,
                "solutions": res.solutions,
                "mismatches": res.mismatches,
                "agrees": res.agrees(),
            }),
        )
    }

    fn __repr__(&self) -> String {
        let i = &self.inner;
        format!(
            "Instance(kind={}, m={}, n={}, r={}, k={}, p={})",
            i.kind,
            i.m,
            i.n,
            i.r,
            i.k,
            i.field.value()
        )
    }
}

/// "under-defined", "well-defined" or "over-determined".
#[pyfunction]
fn classify(m: usize, n: usize, r: usize, k: usize) -> PyResult<String> {
    Ok(bounds::classify(m, n, r, k).map_err(err)?.to_string())
}

#[pyfunction]
fn bound_square(n: usize, r: usize) -> i64 {
    bounds::bound_square(n, r)
}

#[pyfunction]
fn bound_linear(m: usize, r: usize) -> i64 {
    bounds::bound_linear(m, r)
}

#[pyfunction]
fn bound_degd(m: usize, n: usize, r: usize, d: u32) -> i64 {
    bounds::bound_degd(m, n, r, d)
}

/// Bound for a degree grid `d[i][j] = e_i + f_j`.
#[pyfunction]
fn bound_main(r: usize, degree_grid: Vec<Vec<i64>>) -> PyResult<i64> {
    let d = validate_degree_matrix(&degree_grid).map_err(err)?;
    Ok(bounds::bound_main(r, &d))
}

#[pyfunction]
fn regularity(r: usize, degree_grid: Vec<Vec<i64>>) -> PyResult<i64> {
    let d = validate_degree_matrix(&degree_grid).map_err(err)?;
    Ok(bounds::regularity(r, &d))
}

#[pyfunction]
#[pyo3(signature = (m, n, r, k, degree=None, degree_grid=None))]
fn bound_report<'py>(
    py: Python<'py>,
    m: usize,
    n: usize,
    r: usize,
    k: usize,
    degree: Option<u32>,
    degree_grid: Option<Vec<Vec<i64>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let d = degrees(m, n, degree, degree_grid)?;
    to_py(py, &bounds::bound_report_for(m, n, r, k, &d).map_err(err)?)
}

/// Runs an experiment from a config dict or JSON string; returns
/// `{"summary": [...], "rows": [...]}`. Output paths in the config are ignored.
#[pyfunction]
fn run_experiment<'py>(py: Python<'py>, config: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let text: String = match config.extract::<String>() {
        Ok(s) => s,
        Err(_) => py.import("json")?.call_method1("dumps", (config,))?.extract()?,
    };
    let mut cfg: harness::ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    cfg.csv_out = None;
    cfg.json_out = None;
    let out = py.detach(|| harness::run_experiment(&cfg)).map_err(err)?;
    to_py(py, &out)
}

#[pymodule]
fn minrank(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(bound_square, m)?)?;
    m.add_function(wrap_pyfunction!(bound_linear, m)?)?;
    m.add_function(wrap_pyfunction!(bound_degd, m)?)?;
    m.add_function(wrap_pyfunction!(bound_main, m)?)?;
    m.add_function(wrap_pyfunction!(regularity, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
