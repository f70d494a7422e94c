//! Python bindings. Every function takes and returns JSON text in the same
//! document formats as the `skewcat` command line tool; malformed input
//! raises `ValueError` with the JSON path of the problem.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use skewcat_core::fixtures;
use skewcat_core::format::{
    self, BicatDoc, CategoryDoc, MonadDoc, MwMonadDoc, ProfDoc, SkewMonCatDoc, WarpingDoc,
};
use skewcat_core::mw::{enumerate_mw, kleisli_mw, mw_to_monad, DEFAULT_MORPHISM_BOUND};
use skewcat_core::normalize::{theorem2_instance, DEFAULT_MODULE_BOUND};
use skewcat_core::profhom::prof_compose;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load<T: DeserializeOwned>(text: &str) -> PyResult<T> {
    format::parse(text).map_err(value_error)
}

fn dump<T: Serialize>(doc: &T) -> String {
    format::print(doc)
}

fn load_cat(text: &str) -> PyResult<Arc<skewcat_core::fincore::FinCat>> {
    let doc: CategoryDoc = load(text)?;
    Ok(Arc::new(doc.to_cat("$").map_err(value_error)?))
}

/// Violated category laws as `{"ok": bool, "violations": [...]}`.
#[pyfunction]
fn check_category(doc: &str) -> PyResult<String> {
    let c = load_cat(doc)?;
    let r = c.validate();
    Ok(dump(&serde_json::json!({ "ok": r.is_ok(), "violations": r.violations })))
}

/// The skew monoidal category report.
#[pyfunction]
fn check_skew_moncat(doc: &str) -> PyResult<String> {
    let d: SkewMonCatDoc = load(doc)?;
    Ok(dump(&d.to_moncat().map_err(value_error)?.check()))
}

#[pyfunction]
fn check_skew_bicat(doc: &str) -> PyResult<String> {
    let d: BicatDoc = load(doc)?;
    Ok(dump(&d.to_bicat().map_err(value_error)?.check()))
}

#[pyfunction]
fn check_warping(doc: &str) -> PyResult<String> {
    let d: WarpingDoc = load(doc)?;
    Ok(dump(&d.to_warping().map_err(value_error)?.check()))
}

#[pyfunction]
fn check_mw(doc: &str) -> PyResult<String> {
    let d: MwMonadDoc = load(doc)?;
    Ok(dump(&d.to_mw().map_err(value_error)?.check()))
}

/// Every mw-monad on a category, one document each.
#[pyfunction]
#[pyo3(signature = (category, bound=None))]
fn mw_enumerate(category: &str, bound: Option<usize>) -> PyResult<Vec<String>> {
    let c = load_cat(category)?;
    let all = enumerate_mw(&c, bound.unwrap_or(DEFAULT_MORPHISM_BOUND)).map_err(value_error)?;
    Ok(all.iter().map(|t| dump(&MwMonadDoc::from_mw(t))).collect())
}

#[pyfunction]
fn mw_to_monad_doc(doc: &str) -> PyResult<String> {
    let d: MwMonadDoc = load(doc)?;
    let m = mw_to_monad(&d.to_mw().map_err(value_error)?).map_err(value_error)?;
    Ok(dump(&MonadDoc::from_monad(&m)))
}

#[pyfunction]
fn kleisli(doc: &str) -> PyResult<String> {
    let d: MwMonadDoc = load(doc)?;
    Ok(dump(&CategoryDoc::from_cat(&kleisli_mw(&d.to_mw().map_err(value_error)?))))
}

/// Right normalization of a skew monoidal category:
/// `{"category": ..., "right_normal": bool, "report": ...}`.
#[pyfunction]
#[pyo3(signature = (doc, bound=None))]
fn normalize(doc: &str, bound: Option<usize>) -> PyResult<String> {
    let d: SkewMonCatDoc = load(doc)?;
    let c = Arc::new(d.to_moncat().map_err(value_error)?);
    let n = skewcat_core::normalize::normalize(&c, bound.unwrap_or(DEFAULT_MODULE_BOUND)).map_err(value_error)?;
    Ok(dump(&serde_json::json!({
        "category": SkewMonCatDoc::from_moncat(&n.mod_cat),
        "right_normal": n.mod_cat.is_right_normal(),
        "report": n.check(),
    })))
}

#[pyfunction]
fn compose(g: &str, f: &str) -> PyResult<String> {
    let g: ProfDoc = load(g)?;
    let f: ProfDoc = load(f)?;
    let (g, f) = (g.to_prof().map_err(value_error)?, f.to_prof().map_err(value_error)?);
    let gf = prof_compose(&Arc::new(g), &Arc::new(f)).map_err(value_error)?;
    Ok(dump(&ProfDoc::from_prof(&gf)))
}

/// Compares K(B, B) with the normalization of K(A, B) on the given lists.
#[pyfunction]
fn theorem2(base: &str, endo: &str, hom: &str) -> PyResult<String> {
    let b = load_cat(base)?;
    let list = |text: &str| -> PyResult<Vec<_>> {
        let docs: Vec<ProfDoc> = load(text)?;
        docs.iter().map(|d| d.to_prof().map_err(value_error)).collect()
    };
    Ok(dump(&theorem2_instance(&b, list(endo)?, list(hom)?).map_err(value_error)?))
}

/// Names of the built-in skew monoidal categories.
#[pyfunction]
fn fixture_names() -> Vec<String> {
    fixtures::skew_moncat_fixtures().into_iter().map(|(n, _)| n.to_string()).collect()
}

#[pyfunction]
fn fixture(name: &str) -> PyResult<String> {
    fixtures::skew_moncat_fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| dump(&SkewMonCatDoc::from_moncat(&s)))
        .ok_or_else(|| PyValueError::new_err(format!("no fixture named {name}")))
}

#[pymodule]
fn skewcat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check_category, m)?)?;
    m.add_function(wrap_pyfunction!(check_skew_moncat, m)?)?;
    m.add_function(wrap_pyfunction!(check_skew_bicat, m)?)?;
    m.add_function(wrap_pyfunction!(check_warping, m)?)?;
    m.add_function(wrap_pyfunction!(check_mw, m)?)?;
    m.add_function(wrap_pyfunction!(mw_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(mw_to_monad_doc, m)?)?;
    m.add_function(wrap_pyfunction!(kleisli, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
