//! Serializable output records shared by the command line and the browser
//! demo. Every number that can grow is written as an exact decimal or
//! `num/den` string.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::numeric::{Rational, RationalPolynomial};
use crate::partition::{Quasipolynomial, WaveDecomposition};
use crate::waves::WeightVector;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WaveRecord {
    pub j: u64,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub parts: Vec<u64>,
    pub s: u64,
    pub total: String,
    pub waves: Vec<WaveRecord>,
}

impl EvalRecord {
    pub fn new(dec: &WaveDecomposition, with_float: bool) -> Self {
        Self {
            parts: dec.d.parts().to_vec(),
            s: dec.s,
            total: dec.total.to_string(),
            waves: dec
                .terms
                .iter()
                .map(|(j, v)| WaveRecord {
                    j: *j,
                    value: v.to_string(),
                    approx: with_float.then(|| to_f64(v)),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightsRecord {
    pub parts: Vec<u64>,
    pub j: u64,
    pub method: String,
    pub l_max: u64,
    pub weights: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl WeightsRecord {
    pub fn new(parts: &[u64], method: &str, w: &WeightVector, agree: Option<bool>) -> Self {
        Self {
            parts: parts.to_vec(),
            j: w.j,
            method: method.to_owned(),
            l_max: w.l_max,
            weights: w.weights.iter().map(ToString::to_string).collect(),
            agree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueRecord {
    pub c: u64,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasipolyRecord {
    pub parts: Vec<u64>,
    pub period: u64,
    pub residues: Vec<ResidueRecord>,
}

impl QuasipolyRecord {
    pub fn new(q: &Quasipolynomial) -> Self {
        Self {
            parts: q.d.parts().to_vec(),
            period: q.period,
            residues: q
                .residue_polys
                .iter()
                .enumerate()
                .map(|(c, p)| ResidueRecord {
                    c: c as u64,
                    coefficients: coefficient_strings(p),
                })
                .collect(),
        }
    }
}

/// Coefficients lowest degree first; the zero polynomial is `["0"]`.
pub fn coefficient_strings(p: &RationalPolynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_owned()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

/// Nearest `f64`, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `L=2; c=0: [1, 1/2]; c=1: [1/2, 1/2]`
pub fn quasipoly_text(q: &Quasipolynomial) -> String {
    let mut out = format!("L={}", q.period);
    for (c, p) in q.residue_polys.iter().enumerate() {
        out.push_str(&format!("; c={c}: [{}]", coefficient_strings(p).join(", ")));
    }
    out
}

/// `[1,1,2,1]`
pub fn weights_text(w: &WeightVector) -> String {
    let items: Vec<String> = w.weights.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorSet;
    use crate::partition::{partition_count, quasipolynomial};
    use crate::waves::weights_bruteforce;

    #[test]
    fn quasipoly_text_examples() {
        let q = quasipolynomial(&GeneratorSet::new(vec![1, 2]).unwrap());
        assert_eq!(quasipoly_text(&q), "L=2; c=0: [1, 1/2]; c=1: [1/2, 1/2]");
        let q = quasipolynomial(&GeneratorSet::new(vec![1]).unwrap());
        assert_eq!(quasipoly_text(&q), "L=1; c=0: [1]");
        let q = quasipolynomial(&GeneratorSet::new(vec![2]).unwrap());
        assert_eq!(quasipoly_text(&q), "L=2; c=0: [1]; c=1: [0]");
    }

    #[test]
    fn eval_record_json_keys() {
        let dec = partition_count(&GeneratorSet::new(vec![1, 2]).unwrap(), 4).unwrap();
        let json = serde_json::to_string(&EvalRecord::new(&dec, false)).unwrap();
        assert_eq!(
            json,
            r#"{"parts":[1,2],"s":4,"total":"3","waves":[{"j":1,"value":"11/4"},{"j":2,"value":"1/4"}]}"#
        );
        let back: EvalRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, EvalRecord::new(&dec, false));
    }

    #[test]
    fn weights_text_example() {
        let w = weights_bruteforce(3, &GeneratorSet::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(weights_text(&w), "[1,1,2,1,2,1,1]");
    }
}
