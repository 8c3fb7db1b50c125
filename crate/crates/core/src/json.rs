//! Wire formats. Series travel as `{"a": [[re, im], ...], "b": ...}`
//! with 1-based coefficient arrays (`a[0]` is the coefficient of z and
//! must be exactly [1, 0]); an absent `"b"` means a vanishing
//! co-analytic part, and an optional `"b_sign"` of -1 carries the
//! co-analytic sign metadata. Weights travel with explicit 1-based
//! index annotations: `[n, re, im]` entries for the complex extremal
//! weights and `[n, w]` entries for the convex hull weights.

use crate::classes::{ConvexWeights, ExtremalWeights};
use crate::error::{Error, Result};
use crate::series::{AnalyticSeries, CoSign, HarmonicSeries};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub a: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_sign: Option<i8>,
}

impl SeriesJson {
    pub fn from_harmonic(f: &HarmonicSeries<f64>) -> Self {
        let order = f.order();
        let a = (1..=order)
            .map(|n| {
                let c = f.h().coeff(n);
                [c.re, c.im]
            })
            .collect();
        let b = if f.g().is_zero() {
            None
        } else {
            Some(
                (1..=order)
                    .map(|n| {
                        let c = f.g().coeff(n);
                        [c.re, c.im]
                    })
                    .collect(),
            )
        };
        let b_sign = match f.co_sign() {
            CoSign::Plus => None,
            CoSign::Minus => Some(-1),
        };
        Self { a, b, b_sign }
    }

    pub fn to_harmonic(&self) -> Result<HarmonicSeries<f64>> {
        if self.a.is_empty() {
            return Err(Error::EmptySeries);
        }
        if self.a[0] != [1.0, 0.0] {
            return Err(Error::UnnormalizedLeadingCoeff {
                re: self.a[0][0],
                im: self.a[0][1],
            });
        }
        let order = self.a.len().max(self.b.as_ref().map_or(0, Vec::len));
        let mut h_tail = vec![Complex::new(0.0, 0.0); order];
        for (i, &[re, im]) in self.a.iter().enumerate() {
            h_tail[i] = Complex::new(re, im);
        }
        let mut g_tail = vec![Complex::new(0.0, 0.0); order];
        if let Some(b) = &self.b {
            for (i, &[re, im]) in b.iter().enumerate() {
                g_tail[i] = Complex::new(re, im);
            }
        }
        let co_sign = match self.b_sign {
            None | Some(1) => CoSign::Plus,
            Some(-1) => CoSign::Minus,
            Some(other) => {
                return Err(Error::MalformedSeries(format!(
                    "b_sign must be 1 or -1, got {other}"
                )))
            }
        };
        HarmonicSeries::with_co_sign(
            AnalyticSeries::from_tail(h_tail)?,
            AnalyticSeries::from_tail(g_tail)?,
            co_sign,
        )
    }
}

pub fn parse_series(text: &str) -> Result<HarmonicSeries<f64>> {
    let json: SeriesJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedSeries(e.to_string()))?;
    json.to_harmonic()
}

pub fn series_to_string(f: &HarmonicSeries<f64>) -> String {
    serde_json::to_string_pretty(&SeriesJson::from_harmonic(f)).expect("series serializes")
}

/// `{"x": [[n, re, im], ...], "y": [[n, re, im], ...]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalWeightsJson {
    #[serde(default)]
    pub x: Vec<(u32, f64, f64)>,
    #[serde(default)]
    pub y: Vec<(u32, f64, f64)>,
}

impl ExtremalWeightsJson {
    pub fn to_weights(&self) -> Result<ExtremalWeights<f64>> {
        let x = self
            .x
            .iter()
            .map(|&(n, re, im)| (n, Complex::new(re, im)))
            .collect();
        let y = self
            .y
            .iter()
            .map(|&(n, re, im)| (n, Complex::new(re, im)))
            .collect();
        ExtremalWeights::new(x, y)
    }
}

pub fn parse_extremal_weights(text: &str) -> Result<ExtremalWeights<f64>> {
    let json: ExtremalWeightsJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedSeries(e.to_string()))?;
    json.to_weights()
}

/// `{"X": [[n, w], ...], "Y": [[n, w], ...]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexWeightsJson {
    #[serde(default, rename = "X")]
    pub x: Vec<(u32, f64)>,
    #[serde(default, rename = "Y")]
    pub y: Vec<(u32, f64)>,
}

impl ConvexWeightsJson {
    pub fn to_weights(&self) -> Result<ConvexWeights<f64>> {
        ConvexWeights::new(self.x.clone(), self.y.clone())
    }
}

pub fn parse_convex_weights(text: &str) -> Result<ConvexWeights<f64>> {
    let json: ConvexWeightsJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedSeries(e.to_string()))?;
    json.to_weights()
}
