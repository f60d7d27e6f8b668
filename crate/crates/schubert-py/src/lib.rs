//! Python bindings: partitions, skew shapes, cohomology classes and compatible pairs.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use schubert::cohomology::{self, LeviShape};
use schubert::lr;
use schubert::shimura::{self, Flavor};

fn domain(e: schubert::Error) -> PyErr {
    PyRuntimeError::new_err(format!("{}: {e}", e.code()))
}

fn parse(e: schubert::ParseError) -> PyErr {
    PyValueError::new_err(e.0)
}

fn rects(levi: &str) -> PyResult<Vec<schubert::Rectangle>> {
    schubert::skewshape::parse_rectangles(levi).map_err(parse)
}

#[pyclass(name = "Partition", eq, ord, hash, frozen, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPartition(schubert::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        schubert::Partition::new(parts)
            .map(PyPartition)
            .map_err(parse)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyPartition).map_err(parse)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn complement(&self, rows: usize, cols: usize) -> PyResult<Self> {
        let r = schubert::Rectangle::new(rows, cols).map_err(domain)?;
        self.0.complement(r).map(PyPartition).map_err(domain)
    }

    fn contains(&self, other: &PyPartition) -> bool {
        self.0.contains(&other.0)
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn plus_part(&self) -> PyResult<Self> {
        self.0.plus_part().map(PyPartition).map_err(domain)
    }

    fn minus_part(&self) -> PyResult<Self> {
        self.0.minus_part().map(PyPartition).map_err(domain)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyclass(name = "SkewShape", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PySkewShape(schubert::SkewShape);

#[pymethods]
impl PySkewShape {
    #[new]
    fn new(outer: &PyPartition, inner: &PyPartition) -> PyResult<Self> {
        schubert::SkewShape::new(outer.0.clone(), inner.0.clone())
            .map(PySkewShape)
            .map_err(domain)
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.0.cells()
    }

    /// Block sizes `(rows, cols)` when the skew is a union of rectangles.
    fn rectangle_decomposition(&self) -> Option<Vec<(usize, usize)>> {
        self.0
            .rectangle_decomposition()
            .map(|c| c.blocks.iter().map(|b| (b.rows, b.cols)).collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SkewShape('{}')", self.0)
    }
}

#[pyclass(name = "CohomClass", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyCohomClass(cohomology::CohomClass);

#[pymethods]
impl PyCohomClass {
    #[staticmethod]
    fn schubert(nu: &PyPartition, rows: usize, cols: usize) -> PyResult<Self> {
        let r = schubert::Rectangle::new(rows, cols).map_err(domain)?;
        cohomology::CohomClass::schubert(nu.0.clone(), r)
            .map(PyCohomClass)
            .map_err(domain)
    }

    fn cup(&self, other: &PyCohomClass) -> PyResult<Self> {
        self.0.cup(&other.0).map(PyCohomClass).map_err(domain)
    }

    fn __mul__(&self, other: &PyCohomClass) -> PyResult<Self> {
        self.cup(other)
    }

    fn __add__(&self, other: &PyCohomClass) -> PyResult<Self> {
        self.0.add(&other.0).map(PyCohomClass).map_err(domain)
    }

    fn pair(&self, other: &PyCohomClass) -> PyResult<BigInt> {
        self.0.poincare_pair(&other.0).map_err(domain)
    }

    fn coefficient(&self, nu: &PyPartition) -> BigInt {
        self.0.coefficient(&nu.0)
    }

    /// `(partition, coefficient)` in the basis order.
    fn terms(&self) -> Vec<(PyPartition, BigInt)> {
        self.0
            .terms()
            .iter()
            .map(|(p, k)| (PyPartition(p.clone()), k.clone()))
            .collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "CompatiblePair", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCompatiblePair(shimura::CompatiblePair);

#[pymethods]
impl PyCompatiblePair {
    #[new]
    #[pyo3(signature = (lam, mu, p, q, flavor = "unitary"))]
    fn new(
        lam: &PyPartition,
        mu: &PyPartition,
        p: usize,
        q: usize,
        flavor: &str,
    ) -> PyResult<Self> {
        let flavor: Flavor = flavor.parse().map_err(parse)?;
        let amb = schubert::Rectangle::new(p, q).map_err(domain)?;
        shimura::CompatiblePair::new(lam.0.clone(), mu.0.clone(), amb, flavor)
            .map(PyCompatiblePair)
            .map_err(domain)
    }

    #[getter]
    fn lam(&self) -> PyPartition {
        PyPartition(self.0.lambda().clone())
    }

    #[getter]
    fn mu(&self) -> PyPartition {
        PyPartition(self.0.mu().clone())
    }

    fn bidegree(&self) -> (usize, usize) {
        shimura::vz_bidegree(&self.0)
    }

    fn blocks(&self) -> Vec<(usize, usize)> {
        self.0
            .chain()
            .blocks
            .iter()
            .map(|b| (b.rows, b.cols))
            .collect()
    }

    fn chern_action_nonzero(&self, nu: &PyPartition) -> PyResult<bool> {
        shimura::chern_action_nonzero(&nu.0, &self.0).map_err(domain)
    }

    /// A witness `ν` for injectivity of the restriction to the levi, e.g. `"2x1"`.
    fn injectivity_unitary(&self, levi: &str) -> PyResult<Option<PyPartition>> {
        let l = LeviShape::unitary(rects(levi)?);
        shimura::injectivity_unitary(&self.0, &l)
            .map(|w| w.map(PyPartition))
            .map_err(domain)
    }

    fn structure(&self) -> String {
        shimura::low_degree_structure(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn lr_coefficient(outer: &PyPartition, inner: &PyPartition, nu: &PyPartition) -> u64 {
    lr::lr(&outer.0, &inner.0, &nu.0)
}

#[pyfunction]
fn multi_lr(target: &PyPartition, factors: Vec<PyPartition>) -> BigUint {
    let fs: Vec<schubert::Partition> = factors.into_iter().map(|f| f.0).collect();
    lr::multi_lr(&target.0, &fs)
}

#[pyfunction]
fn inscribes(nu: &PyPartition, skew: &PySkewShape) -> bool {
    lr::inscribes(&nu.0, &skew.0)
}

#[pyfunction]
#[pyo3(signature = (p, q, flavor = "unitary"))]
fn enumerate_pairs(p: usize, q: usize, flavor: &str) -> PyResult<Vec<PyCompatiblePair>> {
    let flavor: Flavor = flavor.parse().map_err(parse)?;
    let amb = schubert::Rectangle::new(p, q).map_err(domain)?;
    Ok(shimura::enumerate_pairs(amb, flavor, None)
        .into_iter()
        .map(PyCompatiblePair)
        .collect())
}

#[pyfunction]
fn partha_decomposition(p: usize, q: usize, l: usize) -> PyResult<Vec<(usize, usize)>> {
    let amb = schubert::Rectangle::new(p, q).map_err(domain)?;
    Ok(shimura::partha_decomposition(amb, l))
}

/// `(family, param, degree)` for each holomorphic orthogonal component.
#[pyfunction]
fn ostar_holomorphic_components(p: usize) -> PyResult<Vec<(String, usize, usize)>> {
    let comps = shimura::ostar_holomorphic_components(p).map_err(domain)?;
    Ok(comps
        .into_iter()
        .map(|c| (c.family.to_string(), c.param, c.degree))
        .collect())
}

/// Runs the command-line front end; returns `(exit code, stdout)`.
#[pyfunction]
fn cli(args: Vec<String>) -> (i32, String) {
    let (code, out, _) = schubert::cli::run(std::iter::once("schubert".to_string()).chain(args));
    (code, out)
}

#[pymodule]
fn schubert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PySkewShape>()?;
    m.add_class::<PyCohomClass>()?;
    m.add_class::<PyCompatiblePair>()?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(multi_lr, m)?)?;
    m.add_function(wrap_pyfunction!(inscribes, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(partha_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(ostar_holomorphic_components, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}
