//! Browser bindings: the same JSON braid specs as the CLI go in, JSON
//! results with plain and LaTeX renderings come out.

use wasm_bindgen::prelude::*;

use homfly::input::BraidSpec;
use homfly::invariant::{
    check_transposition_symmetry_with_limit, homflypt_with_limit, specialize_invariant,
    unknot_value,
};
use homfly::perm::Partition;
use homfly::ring::RatFun;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Brace exponents for display: `q^-1` -> `q^{-1}`.
fn latexify(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '^' {
            out.push(c);
            continue;
        }
        out.push('^');
        out.push('{');
        if chars.peek() == Some(&'-') {
            out.push(chars.next().unwrap());
        }
        while chars.peek().map(|d| d.is_ascii_digit()).unwrap_or(false) {
            out.push(chars.next().unwrap());
        }
        out.push('}');
    }
    out
}

fn render(value: &RatFun) -> serde_json::Value {
    let plain = value.to_string();
    serde_json::json!({ "plain": plain, "latex": latexify(&plain) })
}

/// Colored HOMFLY-PT polynomial of a braid-closure spec. `specialize_n` and
/// `specialize_m` are optional; `normalize` divides by the unknot values of
/// the component colors.
#[wasm_bindgen]
pub fn invariant(
    spec_json: &str,
    specialize_n: Option<i32>,
    specialize_m: Option<i32>,
    normalize: bool,
    max_cable: usize,
) -> Result<String, JsValue> {
    let braid = BraidSpec::from_json(spec_json)
        .and_then(|s| s.to_braid())
        .map_err(err)?;
    let mut value = homflypt_with_limit(&braid, max_cable).map_err(err)?;
    if normalize {
        for cycle in braid.components() {
            let color = &braid.colors()[cycle[0] - 1];
            value = value
                .div_exact(&unknot_value(color, max_cable).map_err(err)?)
                .map_err(err)?;
        }
    }
    let mut result = serde_json::json!({
        "components": braid.components().len(),
        "cable": braid.cable_size(),
        "value": render(&value),
    });
    if let Some(n) = specialize_n {
        let m = specialize_m.unwrap_or(0);
        let sp = specialize_invariant(&value, n as i64, m as i64);
        result["specialized"] = render(&sp);
        result["n"] = serde_json::json!(n);
        result["m"] = serde_json::json!(m);
    }
    Ok(result.to_string())
}

/// Gyoja-Aiston idempotent data for a partition string such as "3,1".
#[wasm_bindgen]
pub fn idempotent(partition: &str) -> Result<String, JsValue> {
    let lambda: Partition = partition.parse().map_err(err)?;
    let (e, a) = homfly::clasp::young_idempotent(&lambda).map_err(err)?;
    let result = serde_json::json!({
        "partition": lambda.to_string(),
        "transpose": lambda.transpose().to_string(),
        "size": lambda.size(),
        "scalar": render(&a),
        "element": e.to_string(),
        "terms": e.num_terms(),
    });
    Ok(result.to_string())
}

/// Transposition-symmetry check for a braid spec.
#[wasm_bindgen]
pub fn check_symmetry(spec_json: &str, max_cable: usize) -> Result<String, JsValue> {
    let braid = BraidSpec::from_json(spec_json)
        .and_then(|s| s.to_braid())
        .map_err(err)?;
    let report = check_transposition_symmetry_with_limit(&braid, max_cable).map_err(err)?;
    let result = serde_json::json!({
        "holds": report.holds,
        "observed_sign": report.observed_sign,
        "predicted_sign": report.predicted_sign,
    });
    Ok(result.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_roundtrips() {
        let out = invariant(
            r#"{"strands": 1, "word": [], "colors": [[1]]}"#,
            Some(2),
            Some(0),
            false,
            7,
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let circle: RatFun = v["value"]["plain"].as_str().unwrap().parse().unwrap();
        assert_eq!(circle, "(a - a^-1)/(q - q^-1)".parse().unwrap());
        assert_eq!(v["specialized"]["plain"], "q + q^-1");
    }

    #[test]
    fn idempotent_scalar() {
        let out = idempotent("3,1").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["scalar"]["plain"], "(q^4 + 1)/(q^4 + q^2 + 1)");
    }

    #[test]
    fn symmetry_report() {
        let out = check_symmetry(r#"{"strands": 2, "word": [1, 1, 1], "colors": [[2], [2]]}"#, 7)
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["holds"], true);
        assert_eq!(v["observed_sign"], 1);
    }
}
