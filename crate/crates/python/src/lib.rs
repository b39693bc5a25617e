//! Python bindings. Exact scalars cross the boundary as
//! `fractions.Fraction`; partitions accept a `Partition`, a string such as
//! `"4,2,1"`, or a list of parts.

use immanant_lab::gadgets::{self, ProjectionPlan};
use immanant_lab::identities;
use immanant_lab::linalg::{self, Scalar};
use immanant_lab::symgroup;
use immanant_lab::{Error, Limits};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

type CoreMatrix = linalg::Matrix<Scalar>;
type CorePartition = immanant_lab::Partition;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, s: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((s.to_string(),))
}

fn scalar_from(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    let text: String = obj.str()?.extract()?;
    text.trim().parse().map_err(err)
}

#[pyclass(name = "Partition", module = "immanant_lab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: CorePartition,
}

fn partition_from(obj: &Bound<'_, PyAny>) -> PyResult<CorePartition> {
    if let Ok(p) = obj.cast::<PyPartition>() {
        return Ok(p.get().inner.clone());
    }
    if let Ok(text) = obj.extract::<String>() {
        return text.parse().map_err(err);
    }
    let parts: Vec<usize> = obj.extract()?;
    CorePartition::new(parts).map_err(err)
}

fn wrap(p: CorePartition) -> PyPartition {
    PyPartition { inner: p }
}

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = None))]
    fn new(parts: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        match parts {
            None => Ok(wrap(CorePartition::empty())),
            Some(obj) => partition_from(obj).map(wrap),
        }
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn width(&self) -> usize {
        self.inner.width()
    }

    fn conjugate(&self) -> Self {
        wrap(self.inner.conjugate())
    }

    /// `(k, indices)` with 1-based row indices attaining the separation.
    fn separation(&self) -> PyResult<(usize, Vec<usize>)> {
        let s = self.inner.separation().map_err(err)?;
        Ok((s.k, s.indices))
    }

    fn horizontal_strips(&self, q: usize) -> PyResult<Vec<Self>> {
        Ok(self
            .inner
            .horizontal_strip_removals(q)
            .map_err(err)?
            .into_iter()
            .map(wrap)
            .collect())
    }

    fn vertical_strips(&self, q: usize) -> PyResult<Vec<Self>> {
        Ok(self
            .inner
            .vertical_strip_removals(q)
            .map_err(err)?
            .into_iter()
            .map(wrap)
            .collect())
    }

    /// `(remainder, rows, sign)` for every removable rim hook of size `q`.
    fn skew_hooks(&self, q: usize) -> PyResult<Vec<(Self, usize, i32)>> {
        let hooks = self.inner.skew_hook_removals(q).map_err(err)?;
        Ok(hooks
            .into_iter()
            .map(|h| {
                let sign = h.sign();
                (wrap(h.remainder), h.row_span, sign)
            })
            .collect())
    }

    fn syt_count<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        py.import("builtins")?
            .getattr("int")?
            .call1((self.inner.syt_count().to_string(),))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.to_string())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        partition_from(other).is_ok_and(|p| p == self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __len__(&self) -> usize {
        self.inner.length()
    }
}

#[pyclass(name = "Matrix", module = "immanant_lab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMatrix {
    inner: CoreMatrix,
}

fn matrix_from(obj: &Bound<'_, PyAny>) -> PyResult<CoreMatrix> {
    if let Ok(m) = obj.cast::<PyMatrix>() {
        return Ok(m.get().inner.clone());
    }
    let rows: Vec<Vec<Bound<'_, PyAny>>> = obj.extract()?;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(scalar_from).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    CoreMatrix::from_rows(rows).map_err(err)
}

fn wrap_matrix(m: CoreMatrix) -> PyMatrix {
    PyMatrix { inner: m }
}

#[pymethods]
impl PyMatrix {
    /// Rows of ints, `Fraction`s or scalar strings like `"-3/4"`.
    #[new]
    fn new(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        matrix_from(rows).map(wrap_matrix)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        wrap_matrix(CoreMatrix::identity(n))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        linalg::matrix_from_json(text).map(wrap_matrix).map_err(err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        linalg::load_matrix(&path).map(wrap_matrix).map_err(err)
    }

    fn to_json(&self) -> String {
        linalg::matrix_to_json(&self.inner)
    }

    fn save(&self, path: std::path::PathBuf) -> PyResult<()> {
        linalg::save_matrix(&self.inner, &path).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.dim()
    }

    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let out = PyList::empty(py);
        for row in self.inner.rows() {
            let r = PyList::empty(py);
            for x in row {
                r.append(fraction(py, x)?)?;
            }
            out.append(r)?;
        }
        Ok(out)
    }

    fn transpose(&self) -> Self {
        wrap_matrix(self.inner.transpose())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        matrix_from(other).is_ok_and(|m| m == self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Matrix.from_json({:?})", self.to_json())
    }
}

fn limits(immanant_n: Option<usize>) -> PyResult<Limits> {
    let mut l = Limits::DEFAULT;
    if let Some(n) = immanant_n {
        l.immanant_n = n;
    }
    l.validate().map_err(err)?;
    Ok(l)
}

#[pyfunction]
fn partitions_of(n: usize) -> Vec<PyPartition> {
    immanant_lab::partitions::partitions_of(n)
        .into_iter()
        .map(wrap)
        .collect()
}

/// `chi_lambda` at the class of cycle type `gamma`.
#[pyfunction]
fn character(lambda: &Bound<'_, PyAny>, gamma: &Bound<'_, PyAny>) -> PyResult<i64> {
    let v = symgroup::character(&partition_from(lambda)?, &partition_from(gamma)?).map_err(err)?;
    i64::try_from(v).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Dict with `irreducibles`, `classes`, `class_sizes` and `values`.
#[pyfunction]
fn character_table<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let t = symgroup::character_table(n, &Limits::DEFAULT).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item(
        "irreducibles",
        t.irreducibles.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    )?;
    d.set_item("classes", t.classes.iter().map(|p| p.to_string()).collect::<Vec<_>>())?;
    let int = py.import("builtins")?.getattr("int")?;
    let sizes = t
        .class_sizes
        .iter()
        .map(|s| int.call1((s.to_string(),)))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("class_sizes", sizes)?;
    let values = t
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| int.call1((v.to_string(),)))
                .collect::<PyResult<Vec<_>>>()
        })
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("values", values)?;
    Ok(d)
}

#[pyfunction]
fn lr_coefficient(lambda: &Bound<'_, PyAny>, alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<u64> {
    let c = symgroup::lr_coefficient(
        &partition_from(lambda)?,
        &partition_from(alpha)?,
        &partition_from(beta)?,
    )
    .map_err(err)?;
    u64::try_from(c).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (lambda, matrix, immanant_n = None))]
fn immanant<'py>(
    py: Python<'py>,
    lambda: &Bound<'py, PyAny>,
    matrix: &Bound<'py, PyAny>,
    immanant_n: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let (l, m, lim) = (partition_from(lambda)?, matrix_from(matrix)?, limits(immanant_n)?);
    let v = py.detach(|| linalg::immanant(&l, &m, &lim)).map_err(err)?;
    fraction(py, &v)
}

/// `method` is `"auto"`, `"ryser"` or `"direct"`.
#[pyfunction]
#[pyo3(signature = (matrix, method = "auto"))]
fn permanent<'py>(py: Python<'py>, matrix: &Bound<'py, PyAny>, method: &str) -> PyResult<Bound<'py, PyAny>> {
    let m = matrix_from(matrix)?;
    let lim = Limits::DEFAULT;
    let v = py
        .detach(|| match method {
            "auto" => linalg::permanent(&m, &lim),
            "ryser" => linalg::permanent_ryser(&m, &lim),
            "direct" => linalg::permanent_direct(&m, &lim),
            other => Err(Error::InvalidArgument(format!("unknown permanent method {other:?}"))),
        })
        .map_err(err)?;
    fraction(py, &v)
}

#[pyfunction]
fn determinant<'py>(py: Python<'py>, matrix: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let m = matrix_from(matrix)?;
    fraction(py, &linalg::determinant(&m))
}

/// Gadget matrix by name: `"D"`, `"H"`, `"E"`, `"H'"` or `"P"`.
#[pyfunction]
fn gadget(kind: &str, q: usize) -> PyResult<PyMatrix> {
    let m = match kind {
        "D" => gadgets::matrix_d(q),
        "H" => gadgets::matrix_h(q),
        "E" => gadgets::matrix_e(q),
        "H'" => gadgets::matrix_h_alt(q),
        "P" => gadgets::matrix_p(q),
        other => return Err(PyValueError::new_err(format!("unknown gadget {other:?}"))),
    };
    Ok(wrap_matrix(m))
}

#[pyfunction]
#[pyo3(signature = (lambda, a, row_index = None))]
fn build_projection(lambda: &Bound<'_, PyAny>, a: &Bound<'_, PyAny>, row_index: Option<usize>) -> PyResult<PyMatrix> {
    let plan = ProjectionPlan::new(&partition_from(lambda)?, row_index).map_err(err)?;
    plan.build(&matrix_from(a)?).map(wrap_matrix).map_err(err)
}

/// Dict with `lambda`, `i`, `k`, `per`, `imm` and `equal`.
#[pyfunction]
#[pyo3(signature = (lambda, a, row_index = None))]
fn verify_projection<'py>(
    py: Python<'py>,
    lambda: &Bound<'py, PyAny>,
    a: &Bound<'py, PyAny>,
    row_index: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let (l, m) = (partition_from(lambda)?, matrix_from(a)?);
    let r = py
        .detach(|| gadgets::verify_projection(&l, row_index, &m, &Limits::DEFAULT))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("lambda", r.lambda.to_string())?;
    d.set_item("i", r.i)?;
    d.set_item("k", r.k)?;
    d.set_item("per", fraction(py, &r.per)?)?;
    d.set_item("imm", fraction(py, &r.imm)?)?;
    d.set_item("equal", r.equal)?;
    Ok(d)
}

/// One dict per check: `name`, `parameters`, `lhs`, `rhs`, `pass`.
#[pyfunction]
#[pyo3(signature = (name = "all", max_size = 6, seed = 0))]
fn run_identity_suite<'py>(py: Python<'py>, name: &str, max_size: usize, seed: u64) -> PyResult<Bound<'py, PyList>> {
    let reports = py
        .detach(|| identities::run_suite(name, max_size, seed, &Limits::DEFAULT))
        .map_err(err)?;
    let out = PyList::empty(py);
    for r in reports {
        let d = PyDict::new(py);
        d.set_item("name", r.name)?;
        d.set_item("parameters", r.parameters)?;
        d.set_item("lhs", r.lhs)?;
        d.set_item("rhs", r.rhs)?;
        d.set_item("pass", r.pass)?;
        out.append(d)?;
    }
    Ok(out)
}

#[pymodule]
#[pyo3(name = "immanant_lab")]
fn immanant_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(immanant, m)?)?;
    m.add_function(wrap_pyfunction!(permanent, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(build_projection, m)?)?;
    m.add_function(wrap_pyfunction!(verify_projection, m)?)?;
    m.add_function(wrap_pyfunction!(run_identity_suite, m)?)?;
    m.add("SUITES", identities::SUITES.to_vec())?;
    Ok(())
}
