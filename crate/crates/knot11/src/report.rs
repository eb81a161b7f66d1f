//! Canonical report document.
//!
//! The payload under `"report"` is deterministic: maps are emitted with
//! sorted keys and coefficient maps encode Laurent monomials as
//! `"m,a" -> c` entries.  Timing lives in a sidecar field outside the
//! deterministic payload.

use crate::diagram::Side;
use crate::pipeline::Analysis;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: i64 = 1;

/// Deterministic payload of an analysis.
pub fn report_payload(a: &Analysis) -> Value {
    let params = match &a.params {
        Some(p) => {
            let mut m = Map::new();
            m.insert("p".into(), json!(p.p));
            m.insert("q".into(), json!(p.q));
            m.insert("r".into(), json!(p.r));
            m.insert("s".into(), json!(p.s));
            if let Some(n) = p.n {
                m.insert("family".into(), json!(n));
            }
            Value::Object(m)
        }
        None => json!({ "matchings": true, "p": a.diagram.p() }),
    };
    let generators: Vec<Value> =
        a.gradings.iter().map(|g| json!([g.index, g.alexander, g.maslov])).collect();
    let beta: Vec<Value> = a
        .beta_cycle
        .iter()
        .map(|&(slot, side)| {
            json!([slot, match side { Side::Bottom => "bottom", Side::Top => "top" }])
        })
        .collect();
    let hat_knot: Vec<Value> =
        a.hat_knot.entries.iter().map(|&(f, t, _, _)| json!([f, t])).collect();
    let hat_s3: Vec<Value> =
        a.hat_s3.entries.iter().map(|&(f, t, _, n_z)| json!([f, t, n_z])).collect();
    let full: Vec<Value> =
        a.full.entries.iter().map(|&(f, t, n_w, n_z)| json!([f, t, n_w, n_z])).collect();
    let mut poincare = Map::new();
    for (&(m, al), &c) in &a.poincare.coeffs {
        poincare.insert(format!("{m},{al}"), json!(c));
    }
    let mut alexander = Map::new();
    for (&al, &c) in &a.alexander {
        alexander.insert(format!("{al}"), json!(c));
    }
    let mut hfk = Map::new();
    for (&(al, m), &dim) in &a.hfk {
        hfk.insert(format!("{al},{m}"), json!(dim));
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "parameters": params,
        "generator_count": a.diagram.p(),
        "generators": generators,
        "beta_cycle": beta,
        "differentials": {
            "hat_knot": hat_knot,
            "hat_s3": hat_s3,
            "full": full,
        },
        "hfk_dimensions": hfk,
        "poincare": Value::Object(poincare),
        "alexander": Value::Object(alexander),
        "cfk_rows": a.cfk_rows,
        "seifert_genus": a.genus,
        "tau": a.tau,
        "verdicts": {
            "conway_trivial": a.slice.conway_trivial,
            "topologically_slice_certified": a.slice.topologically_slice_certified,
            "smoothly_slice_obstructed": a.slice.smoothly_slice_obstructed,
            "g4_lower_bound": a.slice.g4_lower_bound,
            "g4_family_note": a.slice.g4_family_note,
        },
        "window": a.window,
    })
}

/// Full document: payload plus the timing sidecar.
pub fn report_document(a: &Analysis, timing_ms: u128) -> Value {
    json!({
        "report": report_payload(a),
        "timing_ms": timing_ms as u64,
    })
}

/// One line of the scan stream.
pub fn scan_row(a: &Analysis) -> Value {
    let p = a.params.expect("scan rows come from decoded parameters");
    json!({
        "p": p.p,
        "q": p.q,
        "r": p.r,
        "s": p.s,
        "generator_count": a.diagram.p(),
        "seifert_genus": a.genus,
        "tau": a.tau,
        "conway_trivial": a.slice.conway_trivial,
        "flagged": a.slice.conway_trivial && a.tau != 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::RasmussenParams;
    use crate::pipeline::analyze_params;

    #[test]
    fn payload_roundtrips_byte_identically() {
        let a = analyze_params(RasmussenParams::new(5, 2, 0, 4), 4).unwrap();
        let payload = report_payload(&a);
        let text = serde_json::to_string_pretty(&payload).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let text2 = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn payload_deterministic() {
        let a1 = analyze_params(RasmussenParams::new(5, 2, 0, 4), 4).unwrap();
        let a2 = analyze_params(RasmussenParams::new(5, 2, 0, 4), 4).unwrap();
        assert_eq!(
            serde_json::to_string(&report_payload(&a1)).unwrap(),
            serde_json::to_string(&report_payload(&a2)).unwrap()
        );
    }
}
