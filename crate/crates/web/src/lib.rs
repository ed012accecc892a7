//! Browser bindings. Each export returns a JSON string.

use lgmirror::homology::{build_periodic_resolution, check_complex, ext_groups};
use lgmirror::mirror::{MirrorModel, TParam};
use lgmirror::Field;
use serde_json::json;
use wasm_bindgen::prelude::*;

const FIELD: Field = Field::Prime(101);

fn js<E: std::fmt::Display>(e: E) -> JsValue {
    JsValue::from_str(&e.to_string())
}

pub fn mirror_report_json(n: usize) -> Result<String, String> {
    let m = MirrorModel::new(n, TParam::Symbolic, TParam::Symbolic).map_err(|e| e.to_string())?;
    let r = m.report().map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

pub fn resolution_json(n: usize, i: usize, len: usize) -> Result<String, String> {
    let c = build_periodic_resolution(n, i, len, FIELD).map_err(|e| e.to_string())?;
    let ok = check_complex(&c).map_err(|e| e.to_string())?;
    Ok(json!({ "transcript": c.transcript(), "is_complex": ok }).to_string())
}

pub fn ext_json(n: usize, i: usize, j: usize) -> Result<String, String> {
    let ext = ext_groups(n, i, j, 4, n as u32 + 3, FIELD).map_err(|e| e.to_string())?;
    let rows: Vec<_> = ext
        .iter()
        .map(|d| {
            json!({
                "k": d.k,
                "closed_form": d.closed_form.to_string(),
                "hilbert": d.hilbert,
                "matches": d.matches,
            })
        })
        .collect();
    Ok(serde_json::Value::Array(rows).to_string())
}

#[wasm_bindgen]
pub fn mirror_report(n: usize) -> Result<String, JsValue> {
    mirror_report_json(n).map_err(js)
}

#[wasm_bindgen]
pub fn resolution_transcript(n: usize, i: usize, len: usize) -> Result<String, JsValue> {
    resolution_json(n, i, len).map_err(js)
}

#[wasm_bindgen]
pub fn ext_table(n: usize, i: usize, j: usize) -> Result<String, JsValue> {
    ext_json(n, i, j).map_err(js)
}
