use std::collections::BTreeMap;

use qeuler::exactq::{QPoly, QRatFn, XPoly};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    Number,
    Polynomial,
    Report,
    Convergence,
}

/// One line of JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub payload: serde_json::Value,
    pub metadata: BTreeMap<String, String>,
}

impl OutputRecord {
    pub fn new<T: Serialize>(
        kind: RecordKind,
        payload: &T,
        metadata: BTreeMap<String, String>,
    ) -> Self {
        OutputRecord {
            kind,
            payload: serde_json::to_value(payload).expect("payload types serialize infallibly"),
            metadata,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize infallibly")
    }

    pub fn payload_as<T: for<'de> Deserialize<'de>>(&self) -> serde_json::Result<T> {
        T::deserialize(&self.payload)
    }
}

/// A table row for a number: `{"n": 2, "num": [...], "den": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberRow {
    pub n: usize,
    pub num: QPoly,
    pub den: QPoly,
}

impl NumberRow {
    pub fn new(n: usize, value: &QRatFn) -> Self {
        NumberRow {
            n,
            num: value.num().clone(),
            den: value.den().clone(),
        }
    }

    pub fn value(&self) -> Result<QRatFn, qeuler::ExactError> {
        QRatFn::new(self.num.clone(), self.den.clone())
    }
}

/// A table row for a polynomial in `x`; coefficients ascend in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRow {
    pub n: usize,
    pub coefficients: XPoly<QRatFn>,
}
