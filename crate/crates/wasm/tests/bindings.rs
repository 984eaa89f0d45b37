use serde_json::Value;
use sylvester_wasm::{parse_parts, quasipolynomial_json, waves_json, weights_json, MAX_S};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn parts_parsing() {
    assert_eq!(parse_parts("1, 2,3").unwrap().parts(), &[1, 2, 3]);
    assert_eq!(parse_parts("4 6").unwrap().parts(), &[4, 6]);
    assert!(parse_parts("").is_err());
    assert!(parse_parts("1,0").is_err());
    assert!(parse_parts("1,x").is_err());
    assert!(parse_parts("1,-2").is_err());
    assert!(parse_parts("61").is_err());
    assert!(parse_parts("1,1,1,1,1,1,1,1,1").is_err());
}

#[test]
fn closed_form_of_one_two() {
    let v = parse(&quasipolynomial_json("1,2").unwrap());
    assert_eq!(v["period"], 2);
    assert_eq!(
        v["residues"][0]["coefficients"],
        serde_json::json!(["1", "1/2"])
    );
    assert_eq!(
        v["residues"][1]["coefficients"],
        serde_json::json!(["1/2", "1/2"])
    );
    assert_eq!(v["display"][0], "(1/2)*s + 1");
}

#[test]
fn wave_series_sums_to_totals() {
    let v = parse(&waves_json("2,3,5", 60).unwrap());
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 61);
    assert_eq!(rows[1]["total"], "0");
    assert_eq!(rows[10]["total"], "4");
    for row in rows {
        let total: f64 = row["total"].as_str().unwrap().parse().unwrap();
        let sum: f64 = row["waves"]
            .as_array()
            .unwrap()
            .iter()
            .map(|w| w["approx"].as_f64().unwrap())
            .sum();
        assert!((total - sum).abs() < 1e-9, "{row}");
    }
    assert!(waves_json("1,2", MAX_S + 1).is_err());
}

#[test]
fn weights_agree() {
    let v = parse(&weights_json("1,2,3", 3).unwrap());
    assert_eq!(v["l_max"], 6);
    assert_eq!(v["agree"], true);
    assert_eq!(
        v["weights"],
        serde_json::json!(["1", "1", "2", "1", "2", "1", "1"])
    );
    assert!(weights_json("1,2", 3).is_err());
    assert!(weights_json("1,2", 1).is_err());
}
