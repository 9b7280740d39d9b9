//! Python bindings. Rational numbers cross the boundary as strings such as
//! `"-3/2"`, which `fractions.Fraction` parses directly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use twofano::algebra::Label;
use twofano::catalog::{self, Catalog};
use twofano::classifier::{self as cl, Verdict};
use twofano::{chern, schubert, Partition, Rational};

fn err(e: twofano::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partitions(parts: Vec<Vec<u32>>) -> PyResult<Vec<Partition>> {
    parts.into_iter().map(|p| Partition::new(p).map_err(err)).collect()
}

fn rational(s: &str) -> PyResult<Rational> {
    twofano::algebra::parse_rational(s).map_err(err)
}

/// Product of Schubert classes on G(k, n) as a list of (partition, coefficient).
#[pyfunction]
fn schubert_multiply(k: u32, n: u32, factors: Vec<Vec<u32>>) -> PyResult<Vec<(Vec<u32>, String)>> {
    let x = schubert::multiply_many(k, n, &partitions(factors)?).map_err(err)?;
    Ok(x.terms()
        .map(|(l, c)| match l {
            Label::Schubert(p) => (p.parts().to_vec(), c.to_string()),
            other => (Vec::new(), format!("{other:?}: {c}")),
        })
        .collect())
}

/// Degree of a product of Schubert classes on G(k, n).
#[pyfunction]
fn schubert_degree(k: u32, n: u32, factors: Vec<Vec<u32>>) -> PyResult<String> {
    let x = schubert::multiply_many(k, n, &partitions(factors)?).map_err(err)?;
    Ok(schubert::degree(&x).map_err(err)?.to_string())
}

/// Chern character of the tangent bundle, one string per factor.
#[pyfunction]
fn chern_character(space: &str) -> PyResult<Vec<String>> {
    Ok(chern::ch_from_space_spec(space).map_err(err)?.iter().map(|c| c.to_string()).collect())
}

fn verdict_dict<'py>(py: Python<'py>, v: Verdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("status", format!("{:?}", v.status))?;
    let w: Vec<(String, String)> = v.witnesses.into_iter().map(|w| (w.description, w.value.to_string())).collect();
    d.set_item("witnesses", w)?;
    d.set_item("rule_chain", v.rule_chain)?;
    Ok(d)
}

/// Classifies a family. `kind` is one of ci_proj, ci_weighted, ci_grass,
/// linear_grass, ci_ogplus, ci_sg, ci_g2p2, ci_b4one; the keyword arguments
/// match the command line flags.
#[pyfunction]
#[pyo3(signature = (kind, *, degrees=Vec::new(), ambient_dim=None, weights=None, k=None, n=None, c=None, name="Y", dim=None, index=None, a=None))]
#[allow(clippy::too_many_arguments)]
fn classify<'py>(
    py: Python<'py>,
    kind: &str,
    degrees: Vec<u32>,
    ambient_dim: Option<u32>,
    weights: Option<Vec<u32>>,
    k: Option<u32>,
    n: Option<u32>,
    c: Option<u32>,
    name: &str,
    dim: Option<u32>,
    index: Option<u32>,
    a: Option<String>,
) -> PyResult<Bound<'py, PyDict>> {
    let need = |x: Option<u32>, what: &str| x.ok_or_else(|| PyValueError::new_err(format!("{kind} needs {what}")));
    let v = match kind {
        "ci_proj" => cl::classify_ci_proj(need(ambient_dim, "ambient_dim")?, &degrees),
        "ci_weighted" => cl::classify_ci_weighted(&weights.ok_or_else(|| PyValueError::new_err("ci_weighted needs weights"))?, &degrees),
        "ci_grass" => cl::classify_ci_grass(need(k, "k")?, need(n, "n")?, &degrees),
        "linear_grass" => cl::classify_linear_section_grass(need(k, "k")?, need(n, "n")?, need(c, "c")?),
        "ci_ogplus" => cl::classify_ci_og_plus(need(k, "k")?, &degrees),
        "ci_sg" => cl::classify_ci_sg(need(k, "k")?, &degrees),
        "ci_g2p2" => cl::classify_ci_g2p2(&degrees),
        "ci_b4one" => {
            let a = rational(a.as_deref().ok_or_else(|| PyValueError::new_err("ci_b4one needs a"))?)?;
            cl::classify_rank_one_b4(name, need(dim, "dim")?, need(index, "index")?, &a, &degrees)
        }
        other => return Err(PyValueError::new_err(format!("unknown kind {other}"))),
    }
    .map_err(err)?;
    verdict_dict(py, v)
}

/// Verifies a catalog (the shipped one by default). Returns (all_pass, report)
/// with the report in the requested format: text, tsv or json.
#[pyfunction]
#[pyo3(signature = (path=None, format="text"))]
fn verify(py: Python<'_>, path: Option<&str>, format: &str) -> PyResult<(bool, String)> {
    let cat = match path {
        Some(p) => Catalog::load(std::path::Path::new(p)).map_err(err)?,
        None => Catalog::shipped(),
    };
    let s = py.detach(|| catalog::verify_all(&cat));
    let out = match format {
        "text" => s.to_text(),
        "tsv" => s.to_tsv(),
        "json" => s.to_json(),
        other => return Err(PyValueError::new_err(format!("unknown format {other}"))),
    };
    Ok((s.all_pass(), out))
}

#[pymodule]
fn twofano_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(schubert_multiply, m)?)?;
    m.add_function(wrap_pyfunction!(schubert_degree, m)?)?;
    m.add_function(wrap_pyfunction!(chern_character, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
