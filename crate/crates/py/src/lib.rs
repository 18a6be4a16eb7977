//! Python bindings: a `Lab` class bound to one (field, generator, l)
//! instance plus module-level helpers for orbit reduction and counting.
//! Verification reports cross the boundary as JSON strings.

use cyclolab::char_sums::{dickson_hurwitz, full_table, jacobi_sum, CyclotomyContext};
use cyclolab::coefficients::{dh_half_frozen, SubscriptRule};
use cyclolab::cyclotomic::phi;
use cyclolab::field::{find_generator, make_field, FieldElement};
use cyclolab::formula::{distinct_count, NResolution, TraceForm};
use cyclolab::matrix::{build_orbit_table, canonical_pair, roots_of_charpoly, IntMatrix, Parity};
use cyclolab::verify::{run_suite, FieldParams, Lab, SuiteId};
use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::str::FromStr;
use std::sync::Arc;

fn to_py_err(e: cyclolab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_parity(s: &str) -> PyResult<Parity> {
    match s {
        "odd" | "k_odd" => Ok(Parity::KOdd),
        "even" | "k_even" => Ok(Parity::KEven),
        _ => Err(PyValueError::new_err("parity must be 'odd' or 'even'")),
    }
}

/// One field instance with its generator, dlog table, sum tables and
/// Jacobi-sum machinery at orders l, 2l, l^2 and 2l^2.
#[pyclass(name = "Lab")]
struct PyLab {
    inner: Lab,
}

#[pymethods]
impl PyLab {
    #[new]
    #[pyo3(signature = (p, r, ell, generator=None, poly=None))]
    fn new(
        p: u64,
        r: u32,
        ell: u32,
        generator: Option<Vec<u64>>,
        poly: Option<Vec<u64>>,
    ) -> PyResult<Self> {
        let params = FieldParams {
            p,
            r,
            ell,
            generator,
            poly,
        };
        Ok(PyLab {
            inner: Lab::build(&params).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.engine.q
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.engine.k
    }

    #[getter]
    fn e(&self) -> u32 {
        self.inner.engine.e
    }

    #[getter]
    fn generator(&self) -> Vec<u64> {
        self.inner.gamma.0.clone()
    }

    /// "odd" or "even": which symmetry (and which printed table) applies.
    #[getter]
    fn parity(&self) -> &'static str {
        match Parity::of(self.inner.engine.k) {
            Parity::KOdd => "odd",
            Parity::KEven => "even",
        }
    }

    #[getter]
    fn defining_poly(&self) -> Vec<u64> {
        self.inner.engine.ctx_e.field.defining_poly.clone()
    }

    /// (a,b) at order 2 l^2.
    fn cyclotomic_number(&self, a: i64, b: i64) -> i64 {
        self.inner.engine.table_e.get(a, b)
    }

    /// Full order-2l^2 table as a list of rows.
    fn cyclotomic_table(&self) -> Vec<Vec<i64>> {
        let e = self.inner.engine.e as i64;
        (0..e)
            .map(|a| {
                (0..e)
                    .map(|b| self.inner.engine.table_e.get(a, b))
                    .collect()
            })
            .collect()
    }

    /// Dickson-Hurwitz sum B(a, b) at order 2 l^2.
    fn dickson_hurwitz(&self, a: i64, b: i64) -> i64 {
        dickson_hurwitz(&self.inner.engine.table_e, a, b)
    }

    /// Frozen half-order sum B_{l^2}(i, n).
    fn dh_half(&self, i: i64, n: i64) -> i64 {
        dh_half_frozen(&self.inner.engine.table_e, self.inner.engine.ell, i, n)
    }

    /// J_order(i, j) in canonical form: (order, coefficient list).
    #[pyo3(signature = (i, j, order=None))]
    fn jacobi_sum(&self, i: i64, j: i64, order: Option<u32>) -> PyResult<(u32, Vec<BigInt>)> {
        let eng = &self.inner.engine;
        let e = order.unwrap_or(eng.e);
        if e == eng.e {
            let js = eng.jacobi_e.canonical(i, j);
            return Ok((e, js.coeffs().to_vec()));
        }
        let ctx = CyclotomyContext::new(eng.ctx_e.field.clone(), eng.ctx_e.dlog.clone(), e)
            .map_err(to_py_err)?;
        let js = jacobi_sum(&ctx, i, j);
        Ok((e, js.coeffs().to_vec()))
    }

    fn thm2_ground_truth(&self, a: i64, b: i64) -> i64 {
        self.inner.engine.ground_truth(a, b)
    }

    fn thm2_trace_form(&self, a: i64, b: i64) -> i64 {
        self.inner.engine.trace_form(a, b, TraceForm::Corrected)
    }

    fn thm2_trace_form_literal(&self, a: i64, b: i64) -> i64 {
        self.inner.engine.trace_form(a, b, TraceForm::Literal)
    }

    #[pyo3(signature = (a, b, n=None))]
    fn thm2_coeff_form(&self, a: i64, b: i64, n: Option<i64>) -> i64 {
        let strategy = match n {
            Some(n0) => NResolution::FixedGlobal(n0),
            None => NResolution::PerTerm,
        };
        self.inner
            .engine
            .coeff_form(a, b, strategy, SubscriptRule::ZeroExt)
    }

    fn matrix_det(&self) -> BigInt {
        IntMatrix::from_sum_table(&self.inner.engine.table_e).determinant()
    }

    /// Characteristic polynomial, descending coefficients, monic.
    fn matrix_char_poly(&self) -> Vec<BigInt> {
        IntMatrix::from_sum_table(&self.inner.engine.table_e).char_poly()
    }

    /// Eigenvalues from the exact characteristic polynomial, sorted by
    /// descending magnitude.
    fn matrix_eigenvalues(&self) -> PyResult<Vec<Complex64>> {
        let cp = IntMatrix::from_sum_table(&self.inner.engine.table_e).char_poly();
        roots_of_charpoly(&cp, 1e-8).map_err(to_py_err)
    }

    /// Run one identity suite; returns the verification report as a JSON
    /// string (schema 1).
    fn verify(&self, suite: &str) -> PyResult<String> {
        let s = SuiteId::from_str(suite).map_err(PyValueError::new_err)?;
        let rep = run_suite(&self.inner, s).map_err(to_py_err)?;
        serde_json::to_string(&rep).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Lab(q={}, ell={}, gamma={})",
            self.inner.engine.q,
            self.inner.engine.ell,
            self.inner.gamma.display()
        )
    }
}

/// Canonical representative of (a,b) under the order-e symmetry group.
#[pyfunction(name = "canonical_pair")]
fn py_canonical_pair(e: u32, parity: &str, a: i64, b: i64) -> PyResult<(i64, i64)> {
    Ok(canonical_pair(e, parse_parity(parity)?, a, b))
}

/// Number of distinct representatives at order e.
#[pyfunction]
fn orbit_class_count(e: u32, parity: &str) -> PyResult<usize> {
    Ok(build_orbit_table(e, parse_parity(parity)?).class_count)
}

/// The closed-form count of distinct cyclotomic numbers of order 2 l^2.
#[pyfunction(name = "distinct_count")]
fn py_distinct_count(ell: u32) -> u64 {
    distinct_count(ell)
}

/// Euler's totient (helper for sanity checks).
#[pyfunction(name = "phi")]
fn py_phi(e: u32) -> u32 {
    phi(e)
}

/// The least generator of F_{p^r}^x as a coefficient vector.
#[pyfunction(name = "find_generator")]
#[pyo3(signature = (p, r, poly=None))]
fn py_find_generator(p: u64, r: u32, poly: Option<Vec<u64>>) -> PyResult<Vec<u64>> {
    let field = make_field(p, r, poly).map_err(to_py_err)?;
    Ok(find_generator(&field).0)
}

/// Full cyclotomic table at an arbitrary order e | q - 1.
#[pyfunction]
#[pyo3(signature = (p, r, e, generator=None, poly=None))]
fn cyclotomic_table_at_order(
    p: u64,
    r: u32,
    e: u32,
    generator: Option<Vec<u64>>,
    poly: Option<Vec<u64>>,
) -> PyResult<Vec<Vec<i64>>> {
    let field = Arc::new(make_field(p, r, poly).map_err(to_py_err)?);
    let gamma = match generator {
        Some(c) => FieldElement(c),
        None => find_generator(&field),
    };
    let dlog = Arc::new(cyclolab::field::build_dlog_table(&field, &gamma).map_err(to_py_err)?);
    let ctx = CyclotomyContext::new(field, dlog, e).map_err(to_py_err)?;
    let table = full_table(&ctx);
    Ok((0..e as i64)
        .map(|a| (0..e as i64).map(|b| table.get(a, b)).collect())
        .collect())
}

#[pymodule]
fn cyclolab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLab>()?;
    m.add_function(wrap_pyfunction!(py_canonical_pair, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(py_distinct_count, m)?)?;
    m.add_function(wrap_pyfunction!(py_phi, m)?)?;
    m.add_function(wrap_pyfunction!(py_find_generator, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_table_at_order, m)?)?;
    m.add("SUITES", cyclolab::verify::ALL_SUITES.map(|s| s.id()))?;
    Ok(())
}
