//! Python bindings: decode diagrams, run the invariant pipeline, and read
//! the reports as JSON strings.

use knot11::diagram::{beta_cycle, decode, from_matchings, validate, RasmussenParams, Side};
use knot11::pipeline::{analyze, analyze_params, PipelineError, DEFAULT_WINDOW};
use knot11::render::render_diagram;
use knot11::report::report_payload;
use knot11::verify::run_checks;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn pipeline_err(e: PipelineError) -> PyErr {
    match e.exit_code() {
        1 => PyValueError::new_err(format!("{e}")),
        _ => PyRuntimeError::new_err(format!("{e}")),
    }
}

/// Parameters of the twist-family member `K(64n+31, 24n+12, 16n+6, 32n+18)`.
#[pyfunction]
fn family_params(n: u32) -> (i64, i64, i64, i64) {
    let p = knot11::diagram::family_params(n);
    (p.p, p.q, p.r, p.s)
}

/// Decode parameters and return the diagram's matchings.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn decode_params(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
) -> PyResult<(Vec<(usize, usize)>, Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let d = decode(RasmussenParams::new(p, q, r, s))
        .map_err(|e| PyValueError::new_err(format!("{e}")))?;
    Ok((d.bottom_pairs().to_vec(), d.top_pairs().to_vec(), d.through_pairs().to_vec()))
}

/// The order of generators along the curve, with entry sides.
#[pyfunction]
fn beta_cycle_params(p: i64, q: i64, r: i64, s: i64) -> PyResult<Vec<(usize, String)>> {
    let d = decode(RasmussenParams::new(p, q, r, s))
        .map_err(|e| PyValueError::new_err(format!("{e}")))?;
    let cycle = beta_cycle(&d).map_err(|e| PyValueError::new_err(format!("{e}")))?;
    Ok(cycle
        .into_iter()
        .map(|(slot, side)| {
            (slot, match side { Side::Bottom => "bottom", Side::Top => "top" }.to_string())
        })
        .collect())
}

/// Full invariant report for `K(p, q, r, s)` as a JSON string.
#[pyfunction]
#[pyo3(signature = (p, q, r, s, window = DEFAULT_WINDOW))]
fn compute_params(p: i64, q: i64, r: i64, s: i64, window: u32) -> PyResult<String> {
    let a = analyze_params(RasmussenParams::new(p, q, r, s), window).map_err(pipeline_err)?;
    Ok(serde_json::to_string_pretty(&report_payload(&a)).expect("serializable"))
}

/// Full invariant report for the twist-family member `K_n`.
#[pyfunction]
#[pyo3(signature = (n, window = DEFAULT_WINDOW))]
fn compute_family(n: u32, window: u32) -> PyResult<String> {
    let a = knot11::pipeline::analyze_family(n, window).map_err(pipeline_err)?;
    Ok(serde_json::to_string_pretty(&report_payload(&a)).expect("serializable"))
}

/// Full invariant report for explicit matchings.
#[pyfunction]
fn compute_matchings(
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    through: Vec<(usize, usize)>,
) -> PyResult<String> {
    let d = from_matchings(bottom, top, through, None)
        .map_err(|e| PyValueError::new_err(format!("{e}")))?;
    if !validate(&d).ok {
        return Err(PyValueError::new_err("matchings fail validation"));
    }
    let a = analyze(d, None, DEFAULT_WINDOW, 0).map_err(pipeline_err)?;
    Ok(serde_json::to_string_pretty(&report_payload(&a)).expect("serializable"))
}

/// Render the diagram of `K(p, q, r, s)` as an SVG string.
#[pyfunction]
fn render_params(p: i64, q: i64, r: i64, s: i64) -> PyResult<String> {
    let a = analyze_params(RasmussenParams::new(p, q, r, s), DEFAULT_WINDOW)
        .map_err(pipeline_err)?;
    Ok(render_diagram(&a, None))
}

/// Run the reference checks; returns (name, passed, detail) triples.
#[pyfunction]
#[pyo3(signature = (max_n = 1))]
fn verify_reference(max_n: u32) -> Vec<(String, bool, String)> {
    run_checks(max_n).into_iter().map(|c| (c.name, c.pass, c.detail)).collect()
}

#[pymodule]
fn knot11_py(m: &Bound<PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(family_params, m)?)?;
    m.add_function(wrap_pyfunction!(decode_params, m)?)?;
    m.add_function(wrap_pyfunction!(beta_cycle_params, m)?)?;
    m.add_function(wrap_pyfunction!(compute_params, m)?)?;
    m.add_function(wrap_pyfunction!(compute_family, m)?)?;
    m.add_function(wrap_pyfunction!(compute_matchings, m)?)?;
    m.add_function(wrap_pyfunction!(render_params, m)?)?;
    m.add_function(wrap_pyfunction!(verify_reference, m)?)?;
    Ok(())
}
