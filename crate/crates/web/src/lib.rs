//! wasm-bindgen entry points for the static demo in `www/`.
//!
//! Every call returns a JSON string. Scans run on the calling thread with no
//! time limit, so the page keeps `cap` small.

use nichols_core::json::{braiding_to_json, family_from_json, rack_to_json, report_to_json, solution_to_json};
use nichols_core::nichols::{finiteness_scan, Budget};
use nichols_core::suzuki::{classify, i_family, l_family, v_abe, Family};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest cap the page may ask for.
pub const MAX_CAP: usize = 9;

fn text(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialise")
}

/// Graded dimensions of `V_abe` up to `cap`, with its verdict.
pub fn vabe_report(a: &str, b: &str, e: &str, cap: usize) -> Result<String, String> {
    if !(2..=MAX_CAP).contains(&cap) {
        return Err(format!("cap must be between 2 and {MAX_CAP}"));
    }
    let desc = json!({ "family": "Vabe", "params": { "a": a, "b": b, "e": e } });
    let family = family_from_json(&desc).map_err(|e| e.to_string())?;
    let Family::Vabe(p) = &family else { unreachable!() };
    let c = v_abe(p).map_err(|e| e.to_string())?;
    let report = finiteness_scan(&c, cap, Budget::unlimited()).map_err(|e| e.to_string())?;
    let mut v = report_to_json(&report);
    let verdict = classify(&family).map_err(|e| e.to_string())?;
    v["classification"] = serde_json::to_value(verdict).expect("verdict serialises");
    v["braiding"] = braiding_to_json(&c);
    Ok(text(&v))
}

/// `L` (size `2n+1`) or `I` (size `2n`) next to its dihedral relabelling.
pub fn dihedral_report(family: &str, n: usize) -> Result<String, String> {
    let fam = match family {
        "L" => l_family(n),
        "I" => i_family(n),
        other => return Err(format!("unknown dihedral family `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    let conj = fam.conjugated().map_err(|e| e.to_string())?;
    let rack = conj.derived_rack().map_err(|e| e.to_string())?;
    Ok(text(&json!({
        "family": family,
        "n": n,
        "size": fam.size(),
        "f": fam.f.iter().map(|x| x + 1).collect::<Vec<_>>(),
        "matches": conj == fam.dihedral_target(),
        "congruence": fam.congruence_holds().map_err(|e| e.to_string())?,
        "solution": solution_to_json(&fam.solution),
        "rack": rack_to_json(&rack),
    })))
}

/// Verdict for a family descriptor such as `{"family":"K","params":{...}}`.
pub fn classify_report(descriptor: &str) -> Result<String, String> {
    let v: Value = serde_json::from_str(descriptor).map_err(|e| e.to_string())?;
    let family = family_from_json(&v).map_err(|e| e.to_string())?;
    let verdict = classify(&family).map_err(|e| e.to_string())?;
    Ok(text(&serde_json::to_value(verdict).expect("verdict serialises")))
}

#[wasm_bindgen]
pub fn vabe_dims(a: &str, b: &str, e: &str, cap: usize) -> Result<String, JsError> {
    vabe_report(a, b, e, cap).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn dihedral(family: &str, n: usize) -> Result<String, JsError> {
    dihedral_report(family, n).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn classify_family(descriptor: &str) -> Result<String, JsError> {
    classify_report(descriptor).map_err(|m| JsError::new(&m))
}
