//! JSON serialization helpers shared by the command line front end.
//!
//! Integers with magnitude below 2^53 are emitted as JSON numbers; larger
//! ones as decimal strings. Parsers accept both forms everywhere.
//! Rational values are emitted as `{"num","den"}` string pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;

fn safe_limit() -> BigInt {
    BigInt::from(1u64 << 53)
}

pub fn bigint_to_json(v: &BigInt) -> Value {
    if v.abs() < safe_limit() {
        // fits in i64 exactly
        let as_i64 = i64::try_from(v).expect("|v| < 2^53 fits in i64");
        json!(as_i64)
    } else {
        json!(v.to_string())
    }
}

pub fn json_to_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Invalid(format!("non-integer number {}", n)))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Invalid(format!("not a decimal integer: {:?}", s))),
        other => Err(Error::Invalid(format!("expected integer, got {}", other))),
    }
}

pub fn vector_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(bigint_to_json).collect())
}

pub fn json_to_vector(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid("expected an array of integers".into()))?
        .iter()
        .map(json_to_bigint)
        .collect()
}

pub fn rows_to_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|r| vector_to_json(r)).collect())
}

pub fn json_to_rows(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid("expected an array of integer arrays".into()))?
        .iter()
        .map(json_to_vector)
        .collect()
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    rows_to_json(&m.row_vectors())
}

pub fn json_to_matrix(v: &Value) -> Result<IntMatrix> {
    IntMatrix::from_rows(json_to_rows(v)?)
}

pub fn rational_to_json(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn rational_vector_to_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

/// A parsed top-level input document; exactly one field is populated.
#[derive(Debug, Clone)]
pub enum InputDoc {
    Weights(Vec<BigInt>),
    Generators(Vec<Vec<BigInt>>),
    Vertices(Vec<Vec<BigInt>>),
    Matrix(IntMatrix),
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("malformed JSON: {}", e)))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj: &Map<String, Value> = value
            .as_object()
            .ok_or_else(|| Error::Invalid("input must be a JSON object".into()))?;
        let keys = ["weights", "generators", "vertices", "matrix"];
        let present: Vec<&str> = keys.iter().copied().filter(|k| obj.contains_key(*k)).collect();
        if present.len() != 1 {
            return Err(Error::Invalid(format!(
                "input must contain exactly one of {:?}, found {:?}",
                keys, present
            )));
        }
        match present[0] {
            "weights" => Ok(Self::Weights(json_to_vector(&obj["weights"])?)),
            "generators" => Ok(Self::Generators(json_to_rows(&obj["generators"])?)),
            "vertices" => Ok(Self::Vertices(json_to_rows(&obj["vertices"])?)),
            _ => Ok(Self::Matrix(json_to_matrix(&obj["matrix"])?)),
        }
    }
}
