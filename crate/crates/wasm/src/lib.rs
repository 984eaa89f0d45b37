//! Browser bindings for the Sylvester wave expansion.
//!
//! Each export takes plain strings or integers and returns JSON. Errors come
//! back as a message string, which JavaScript sees as a thrown value. The
//! `*_json` functions are ordinary Rust and can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sylvester_core::report::{EvalRecord, QuasipolyRecord, WeightsRecord};
use sylvester_core::waves::weights_recursive;
use sylvester_core::{quasipolynomial, weights_bruteforce, GeneratorSet, SylvesterExpansion};

/// Largest generator the page accepts.
pub const MAX_PART: u64 = 60;
/// Largest number of generators the page accepts.
pub const MAX_PARTS: usize = 8;
/// Largest `s` the plot will request.
pub const MAX_S: u64 = 2000;

/// Parses `"1, 2, 3"` into a generator set within the demo limits.
pub fn parse_parts(text: &str) -> Result<GeneratorSet, String> {
    let parts = text
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| format!("not a positive integer: {t:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parts.len() > MAX_PARTS {
        return Err(format!("at most {MAX_PARTS} parts"));
    }
    if let Some(p) = parts.iter().find(|&&p| p > MAX_PART) {
        return Err(format!("part {p} exceeds {MAX_PART}"));
    }
    GeneratorSet::new(parts).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ClosedForm {
    #[serde(flatten)]
    record: QuasipolyRecord,
    /// Human-readable polynomial in `s` for each residue.
    display: Vec<String>,
}

pub fn quasipolynomial_json(parts: &str) -> Result<String, String> {
    let q = quasipolynomial(&parse_parts(parts)?);
    let out = ClosedForm {
        display: q.residue_polys.iter().map(ToString::to_string).collect(),
        record: QuasipolyRecord::new(&q),
    };
    Ok(serde_json::to_string(&out).expect("serializes"))
}

/// Exact totals and per-wave values with decimal approximations for
/// `s = 0..=s_max`.
pub fn waves_json(parts: &str, s_max: u64) -> Result<String, String> {
    if s_max > MAX_S {
        return Err(format!("s_max must be at most {MAX_S}"));
    }
    let expansion = SylvesterExpansion::new(&parse_parts(parts)?);
    let records = (0..=s_max)
        .map(|s| {
            expansion
                .decompose(s)
                .map(|dec| EvalRecord::new(&dec, true))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&records).expect("serializes"))
}

/// Weights of wave `j` by both methods, with an agreement flag.
pub fn weights_json(parts: &str, j: u64) -> Result<String, String> {
    let d = parse_parts(parts)?;
    if j < 2 || !d.has_multiple_of(j) {
        return Err(format!("j = {j} is not a wave index of {d}"));
    }
    let rec = weights_recursive(j, &d).map_err(|e| e.to_string())?;
    let brute = weights_bruteforce(j, &d).map_err(|e| e.to_string())?;
    let agree = rec == brute;
    let record = WeightsRecord::new(d.parts(), "both", &rec, Some(agree));
    Ok(serde_json::to_string(&record).expect("serializes"))
}

#[wasm_bindgen]
pub fn closed_form(parts: &str) -> Result<String, String> {
    quasipolynomial_json(parts)
}

#[wasm_bindgen]
pub fn wave_series(parts: &str, s_max: u32) -> Result<String, String> {
    waves_json(parts, u64::from(s_max))
}

#[wasm_bindgen]
pub fn wave_weights(parts: &str, j: u32) -> Result<String, String> {
    weights_json(parts, u64::from(j))
}
