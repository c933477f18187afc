//! JSON wire formats for jets and series.
//!
//! Exact values always travel as strings (or string pairs), never as
//! JSON numbers, so no consumer can silently round them.
//!
//! ```text
//! jet:    {"ring":"rational","values":["1","1","2","6"]}
//!         {"ring":"gaussian","values":[["1","0"],["0","1"]]}
//! series: {"ring":"rational","order":2,"coeffs":["1","0","-1/2"]}
//! ```
//!
//! The declared `order` must equal `coeffs.len() - 1`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::ring::{GaussianRational, Rational, Ring};
use crate::series::{DerivativeJet, HurwitzSeries};

pub const RING_RATIONAL: &str = "rational";
pub const RING_GAUSSIAN: &str = "gaussian";

/// Errors from parsing the wire formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown ring {0:?} (expected \"rational\" or \"gaussian\")")]
    UnknownRing(String),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("declared order {declared} does not match {got} coefficients")]
    OrderMismatch { declared: usize, got: usize },
    #[error("at least one value is required")]
    Empty,
}

/// Scalars with a tagged JSON representation.
pub trait WireScalar: Ring {
    const RING_NAME: &'static str;
    fn to_wire(&self) -> Value;
    fn from_wire(value: &Value) -> Result<Self, WireError>;
}

impl WireScalar for Rational {
    const RING_NAME: &'static str = RING_RATIONAL;

    fn to_wire(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_wire(value: &Value) -> Result<Self, WireError> {
        let text = value.as_str().ok_or(WireError::Malformed {
            what: "rational value",
            detail: format!("expected a string, got {value}"),
        })?;
        text.parse().map_err(|e| WireError::Malformed {
            what: "rational value",
            detail: format!("{e}"),
        })
    }
}

impl WireScalar for GaussianRational {
    const RING_NAME: &'static str = RING_GAUSSIAN;

    fn to_wire(&self) -> Value {
        json!([self.re().to_string(), self.im().to_string()])
    }

    fn from_wire(value: &Value) -> Result<Self, WireError> {
        let malformed = |detail: String| WireError::Malformed {
            what: "gaussian value",
            detail,
        };
        let parts = value
            .as_array()
            .ok_or_else(|| malformed(format!("expected [re, im], got {value}")))?;
        if parts.len() != 2 {
            return Err(malformed(format!("expected 2 entries, got {}", parts.len())));
        }
        let part = |v: &Value| -> Result<Rational, WireError> {
            let text = v
                .as_str()
                .ok_or_else(|| malformed(format!("expected a string, got {v}")))?;
            text.parse().map_err(|e| malformed(format!("{e}")))
        };
        Ok(GaussianRational::new(part(&parts[0])?, part(&parts[1])?))
    }
}

pub fn jet_to_value<E: WireScalar>(jet: &DerivativeJet<E>) -> Value {
    json!({
        "ring": E::RING_NAME,
        "values": jet.values().iter().map(WireScalar::to_wire).collect::<Vec<_>>(),
    })
}

pub fn jet_from_value<E: WireScalar>(value: &Value) -> Result<DerivativeJet<E>, WireError> {
    let ring = ring_field(value)?;
    if ring != E::RING_NAME {
        return Err(WireError::UnknownRing(ring.to_owned()));
    }
    let raw = value
        .get("values")
        .and_then(Value::as_array)
        .ok_or(WireError::Malformed {
            what: "jet",
            detail: "missing \"values\" array".to_owned(),
        })?;
    let values: Vec<E> = raw.iter().map(E::from_wire).collect::<Result<_, _>>()?;
    DerivativeJet::new(values).map_err(|_| WireError::Empty)
}

pub fn series_to_value<E: WireScalar>(series: &HurwitzSeries<E>) -> Value {
    json!({
        "ring": E::RING_NAME,
        "order": series.order(),
        "coeffs": series.coeffs().iter().map(WireScalar::to_wire).collect::<Vec<_>>(),
    })
}

pub fn series_from_value<E: WireScalar>(value: &Value) -> Result<HurwitzSeries<E>, WireError> {
    let ring = ring_field(value)?;
    if ring != E::RING_NAME {
        return Err(WireError::UnknownRing(ring.to_owned()));
    }
    let declared = value
        .get("order")
        .and_then(Value::as_u64)
        .ok_or(WireError::Malformed {
            what: "series",
            detail: "missing nonnegative \"order\"".to_owned(),
        })? as usize;
    let raw = value
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or(WireError::Malformed {
            what: "series",
            detail: "missing \"coeffs\" array".to_owned(),
        })?;
    let coeffs: Vec<E> = raw.iter().map(E::from_wire).collect::<Result<_, _>>()?;
    if coeffs.is_empty() {
        return Err(WireError::Empty);
    }
    if declared != coeffs.len() - 1 {
        return Err(WireError::OrderMismatch {
            declared,
            got: coeffs.len(),
        });
    }
    HurwitzSeries::new(coeffs).map_err(|_| WireError::Empty)
}

fn ring_field(value: &Value) -> Result<&str, WireError> {
    value
        .get("ring")
        .and_then(Value::as_str)
        .ok_or(WireError::Malformed {
            what: "wire object",
            detail: "missing string field \"ring\"".to_owned(),
        })
}

/// A jet over whichever ring the file declares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyJet {
    Rational(DerivativeJet<Rational>),
    Gaussian(DerivativeJet<GaussianRational>),
}

impl AnyJet {
    pub fn from_value(value: &Value) -> Result<Self, WireError> {
        match ring_field(value)? {
            RING_RATIONAL => Ok(AnyJet::Rational(jet_from_value(value)?)),
            RING_GAUSSIAN => Ok(AnyJet::Gaussian(jet_from_value(value)?)),
            other => Err(WireError::UnknownRing(other.to_owned())),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, WireError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| WireError::Json(e.to_string()))?;
        AnyJet::from_value(&value)
    }

    pub fn to_value(&self) -> Value {
        match self {
            AnyJet::Rational(jet) => jet_to_value(jet),
            AnyJet::Gaussian(jet) => jet_to_value(jet),
        }
    }

    pub fn ring_name(&self) -> &'static str {
        match self {
            AnyJet::Rational(_) => RING_RATIONAL,
            AnyJet::Gaussian(_) => RING_GAUSSIAN,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyJet::Rational(jet) => jet.len(),
            AnyJet::Gaussian(jet) => jet.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A series over whichever ring the file declares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnySeries {
    Rational(HurwitzSeries<Rational>),
    Gaussian(HurwitzSeries<GaussianRational>),
}

impl AnySeries {
    pub fn from_value(value: &Value) -> Result<Self, WireError> {
        match ring_field(value)? {
            RING_RATIONAL => Ok(AnySeries::Rational(series_from_value(value)?)),
            RING_GAUSSIAN => Ok(AnySeries::Gaussian(series_from_value(value)?)),
            other => Err(WireError::UnknownRing(other.to_owned())),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, WireError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| WireError::Json(e.to_string()))?;
        AnySeries::from_value(&value)
    }

    pub fn to_value(&self) -> Value {
        match self {
            AnySeries::Rational(series) => series_to_value(series),
            AnySeries::Gaussian(series) => series_to_value(series),
        }
    }
}
