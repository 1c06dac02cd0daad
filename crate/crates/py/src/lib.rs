//! Python bindings. Vertices and elements cross the boundary by name, and
//! orderings are lists of names.

use std::num::NonZeroU64;
use std::time::Duration;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use upbe::io;
use upbe::svg::{render_svg, RenderStyle};

create_exception!(
    upbe_py,
    BudgetExhausted,
    PyRuntimeError,
    "The search ran out of budget without a verdict."
);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn names(inst: &upbe::Instance, ord: &upbe::Ordering) -> Vec<String> {
    ord.names(inst).into_iter().map(String::from).collect()
}

/// A DAG with every edge on one of `pages` pages.
#[pyclass(name = "Instance", module = "upbe_py", frozen)]
struct PyInstance {
    inner: upbe::Instance,
}

impl PyInstance {
    fn ordering(&self, order: &[String]) -> PyResult<upbe::Ordering> {
        upbe::Ordering::from_names(&self.inner, order).map_err(value_error)
    }
}

#[pymethods]
impl PyInstance {
    /// `edges` holds `(src, dst, page)` triples with pages counted from 1.
    #[new]
    fn new(pages: u32, vertices: Vec<String>, edges: Vec<(String, String, u32)>) -> PyResult<Self> {
        let mut raw = upbe::RawInstance::new(pages);
        for v in vertices {
            raw.add_vertex(v);
        }
        for (s, d, p) in edges {
            raw.add_edge(s, d, p);
        }
        Ok(PyInstance {
            inner: raw.check().map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyInstance {
            inner: io::parse_instance(text).map_err(value_error)?,
        })
    }

    fn emit(&self) -> String {
        io::emit_instance(&self.inner)
    }

    #[getter]
    fn pages(&self) -> u32 {
        self.inner.pages()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, u32)> {
        let inst = &self.inner;
        inst.edges()
            .iter()
            .map(|e| (inst.name(e.src).to_string(), inst.name(e.dst).to_string(), e.page.get()))
            .collect()
    }

    fn is_matching_partition(&self) -> bool {
        upbe::is_matching_partition(&self.inner)
    }

    /// Descriptions of everything wrong with `order`; empty when it is valid.
    fn violations(&self, order: Vec<String>) -> PyResult<Vec<String>> {
        let ord = self.ordering(&order)?;
        let report = upbe::validate_ordering(&self.inner, &ord);
        Ok(report.violations.iter().map(|v| v.describe(&self.inner)).collect())
    }

    fn is_valid(&self, order: Vec<String>) -> PyResult<bool> {
        Ok(self.violations(order)?.is_empty())
    }

    /// The lexicographically smallest valid ordering, or `None`.
    #[pyo3(signature = (node_budget=None, time_budget=None))]
    fn solve_exact(
        &self,
        py: Python<'_>,
        node_budget: Option<u64>,
        time_budget: Option<f64>,
    ) -> PyResult<Option<Vec<String>>> {
        let mut cfg = upbe::SearchConfig::default();
        if let Some(n) = node_budget {
            cfg.node_budget = Some(NonZeroU64::new(n).ok_or_else(|| value_error("node_budget must be positive"))?);
        }
        if let Some(s) = time_budget {
            cfg.time_budget = Some(Duration::try_from_secs_f64(s).map_err(value_error)?);
        }
        let verdict = py.detach(|| upbe::solve_exact(&self.inner, &cfg).verdict);
        match verdict {
            upbe::Verdict::Feasible(ord) => Ok(Some(names(&self.inner, &ord))),
            upbe::Verdict::Infeasible => Ok(None),
            upbe::Verdict::BudgetExhausted => Err(BudgetExhausted::new_err("no verdict within the budget")),
        }
    }

    /// Linear-time solver for two-page matching instances.
    fn solve_umpbe2(&self) -> PyResult<Option<Vec<String>>> {
        let found = upbe::solve_umpbe2(&self.inner).map_err(value_error)?;
        Ok(found.map(|ord| names(&self.inner, &ord)))
    }

    #[pyo3(signature = (order=None))]
    fn render_svg(&self, order: Option<Vec<String>>) -> PyResult<String> {
        let ord = order.map(|o| self.ordering(&o)).transpose()?;
        render_svg(&self.inner, ord.as_ref(), &RenderStyle::default()).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(pages={}, vertices={}, edges={})",
            self.inner.pages(),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Elements plus ordered triples `(a, b, c)` asking for `b` between `a` and `c`.
#[pyclass(name = "Betweenness", module = "upbe_py", frozen)]
struct PyBetweenness {
    inner: upbe::BetweennessInstance,
}

impl PyBetweenness {
    fn phi(&self, order: &[String]) -> PyResult<upbe::ElementOrdering> {
        upbe::ElementOrdering::from_names(&self.inner, order)
            .ok_or_else(|| value_error("the order must list every element once"))
    }
}

#[pymethods]
impl PyBetweenness {
    #[new]
    fn new(elements: Vec<String>, triples: Vec<(String, String, String)>) -> PyResult<Self> {
        let triples: Vec<[String; 3]> = triples.into_iter().map(|(a, b, c)| [a, b, c]).collect();
        Ok(PyBetweenness {
            inner: upbe::BetweennessInstance::new(&elements, &triples).map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyBetweenness {
            inner: io::parse_betweenness(text).map_err(value_error)?,
        })
    }

    fn emit(&self) -> String {
        io::emit_betweenness(&self.inner)
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.elements().to_vec()
    }

    fn satisfies(&self, order: Vec<String>) -> PyResult<bool> {
        Ok(upbe::eval_betweenness(&self.inner, &self.phi(&order)?))
    }

    /// A satisfying order found by trying all of them, or `None`.
    fn solve_bruteforce(&self) -> Option<Vec<String>> {
        upbe::solve_betweenness_bruteforce(&self.inner)
            .map(|phi| phi.names(&self.inner).into_iter().map(String::from).collect())
    }

    /// The three-page instance and one role description per vertex.
    fn reduce_upbe3(&self) -> PyResult<(PyInstance, Vec<String>)> {
        let lab = upbe::assemble_upbe3(&self.inner).map_err(value_error)?;
        Ok(labeled(lab))
    }

    /// The four-page matching instance and one role description per vertex.
    fn reduce_umpbe4(&self) -> PyResult<(PyInstance, Vec<String>)> {
        let lab = upbe::assemble_umpbe4(&self.inner).map_err(value_error)?;
        Ok(labeled(lab))
    }

    /// A valid ordering of the three-page instance from a satisfying order.
    fn witness_upbe3(&self, order: Vec<String>) -> PyResult<Vec<String>> {
        let lab = upbe::assemble_upbe3(&self.inner).map_err(value_error)?;
        let ord = upbe::witness_upbe3(&self.inner, &self.phi(&order)?).map_err(value_error)?;
        Ok(names(&lab.instance, &ord))
    }

    /// A valid ordering of the four-page instance from a satisfying order.
    fn witness_umpbe4(&self, order: Vec<String>) -> PyResult<Vec<String>> {
        let lab = upbe::assemble_umpbe4(&self.inner).map_err(value_error)?;
        let ord = upbe::witness_umpbe4(&self.inner, &self.phi(&order)?).map_err(value_error)?;
        Ok(names(&lab.instance, &ord))
    }

    fn __repr__(&self) -> String {
        format!("Betweenness(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

fn labeled(lab: upbe::LabeledInstance) -> (PyInstance, Vec<String>) {
    let roles = lab.roles.iter().map(|r| r.to_string()).collect();
    (PyInstance { inner: lab.instance }, roles)
}

fn faces(order: &upbe::LayerOrder) -> Vec<String> {
    order.faces().iter().map(|f| format!("f{}", f + 1)).collect()
}

/// Layer order of a folded strip, bottom to top, e.g. `["f2", "f3", "f1"]`.
#[pyfunction]
fn fold_path(creases: &str) -> PyResult<Vec<String>> {
    let pattern = upbe::CreasePattern::parse(creases, false).map_err(value_error)?;
    Ok(faces(&upbe::fold_path(&pattern)))
}

/// Layer order of a folded single vertex, or `None` if it cannot fold flat.
#[pyfunction]
fn fold_cycle(creases: &str) -> PyResult<Option<Vec<String>>> {
    let pattern = upbe::CreasePattern::parse(creases, true).map_err(value_error)?;
    Ok(upbe::fold_cycle(&pattern).map(|o| faces(&o)))
}

#[pyfunction]
#[pyo3(signature = (n, k, seed=0))]
fn random_path(n: usize, k: u32, seed: u64) -> PyResult<PyInstance> {
    if k == 0 {
        return Err(value_error("k must be at least 1"));
    }
    Ok(PyInstance {
        inner: upbe::gen::random_path(n, k, seed),
    })
}

#[pyfunction]
#[pyo3(signature = (n, k, seed=0))]
fn random_cycle(n: usize, k: u32, seed: u64) -> PyResult<PyInstance> {
    if k == 0 || n < 3 {
        return Err(value_error("a cycle needs k >= 1 and n >= 3"));
    }
    Ok(PyInstance {
        inner: upbe::gen::random_cycle(n, k, seed),
    })
}

#[pymodule]
fn upbe_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PyBetweenness>()?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add_function(wrap_pyfunction!(fold_path, m)?)?;
    m.add_function(wrap_pyfunction!(fold_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(random_path, m)?)?;
    m.add_function(wrap_pyfunction!(random_cycle, m)?)?;
    Ok(())
}
