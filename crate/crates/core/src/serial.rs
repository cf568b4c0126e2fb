//! Serde helpers: every integer in an emitted document is a decimal string.

use std::fmt::Display;

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};

use crate::linalg::{IntMatrix, RatMatrix, RatVector};

pub fn dec<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn opt_dec<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub fn dec_vec<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

pub fn matrix<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
    let rows = matrix_rows(m);
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in &rows {
        seq.serialize_element(r)?;
    }
    seq.end()
}

#[derive(serde::Serialize)]
struct RatVectorDoc {
    numerators: Vec<String>,
    denominator: String,
}

pub fn rat_vector<S: Serializer>(v: &RatVector, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(
        &RatVectorDoc {
            numerators: strings(v.numerators()),
            denominator: v.denominator().to_string(),
        },
        s,
    )
}

#[derive(serde::Serialize)]
struct RatMatrixDoc {
    numerators: Vec<Vec<String>>,
    denominator: String,
}

pub fn rat_matrix<S: Serializer>(m: &RatMatrix, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(
        &RatMatrixDoc {
            numerators: matrix_rows(m.numerators()),
            denominator: m.denominator().to_string(),
        },
        s,
    )
}
