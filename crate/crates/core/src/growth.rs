//! Growth series of closed balls and the intermediate-growth diagnostics.
//!
//! Ball sizes are exact integers; logarithms and exponents are derived at
//! report time only. The diagnostics are signature-based: the asymptotic
//! bounds themselves are not checkable at desk scale, but the
//! superpolynomial and subexponential signatures separate the orbit graph
//! from linear and exponential controls.

use crate::error::{Error, Result};
use crate::intline::IntegerGraph;
use crate::schreier::{ActionModel, EncodedVertex};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Sizes of closed balls `γ(0..=R)` around a basepoint of some model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSeries {
    pub model: String,
    pub basepoint: String,
    /// `values[r]` is the closed-ball size at radius `r`.
    pub values: Vec<u64>,
}

impl GrowthSeries {
    pub fn radius(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn gamma(&self, r: u32) -> u64 {
        self.values[r as usize]
    }

    fn from_distances<I: IntoIterator<Item = u32>>(
        model: &str,
        basepoint: &str,
        distances: I,
        radius: u32,
    ) -> Self {
        let mut counts = vec![0u64; radius as usize + 1];
        for d in distances {
            counts[d as usize] += 1;
        }
        let mut acc = 0;
        let values = counts
            .into_iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect();
        GrowthSeries { model: model.to_string(), basepoint: basepoint.to_string(), values }
    }

    /// `γ(0)=1`, nondecreasing, and `γ(r+1) ≤ 5·γ(r)` (degree at most 4
    /// plus the center).
    pub fn check_invariants(&self) -> Result<()> {
        if self.values.first() != Some(&1) {
            return Err(Error::Malformed("growth series must start at 1".into()));
        }
        for w in self.values.windows(2) {
            if w[1] < w[0] || w[1] > 5 * w[0] {
                return Err(Error::Malformed(format!(
                    "implausible growth step {} -> {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

/// BFS growth of the transducer action model.
pub fn action_series(
    model: &ActionModel,
    center: &EncodedVertex,
    radius: u32,
) -> Result<GrowthSeries> {
    let ball = model.ball(center, radius)?;
    Ok(GrowthSeries::from_distances(
        "action",
        &center.to_string(),
        ball.into_values(),
        radius,
    ))
}

/// BFS growth of the integer-line model.
pub fn integer_series(graph: &IntegerGraph, center: i64, radius: u32) -> Result<GrowthSeries> {
    let ball = graph.ball(center, radius)?;
    Ok(GrowthSeries::from_distances(
        "integer",
        &center.to_string(),
        ball.into_values(),
        radius,
    ))
}

/// Linear-growth control: the integer line with span-2 chords, a 4-regular
/// graph with `γ(r) = 4r + 1`.
pub fn line_control_series(radius: u32) -> GrowthSeries {
    let mut dist: HashMap<i64, u32> = HashMap::new();
    dist.insert(0, 0);
    let mut frontier = vec![0i64];
    for d in 1..=radius {
        let mut next = Vec::new();
        for &m in &frontier {
            for w in [m - 1, m + 1, m - 2, m + 2] {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    GrowthSeries::from_distances("line-control", "0", dist.into_values(), radius)
}

/// Exponential-growth control: the rooted tree whose root has two children
/// and every other vertex three, so the closed ball is exactly `3^r`.
pub fn tree_control_series(radius: u32) -> GrowthSeries {
    assert!(radius <= 40, "3^r overflows u64 past 40");
    let values = (0..=radius).map(|r| 3u64.pow(r)).collect();
    GrowthSeries { model: "tree-control".into(), basepoint: "root".into(), values }
}

/// The signature report: sampled exponents and root values with the two
/// strict monotonicity verdicts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthDiagnostics {
    pub schema_version: u32,
    pub model: String,
    pub radius: u32,
    pub samples: Vec<u32>,
    /// `e(n) = log₂γ(n) / log₂n` at each sample.
    pub exponents: Vec<f64>,
    /// `γ(n)^{1/n}` at each sample.
    pub roots: Vec<f64>,
    /// `e(n)` strictly increasing over the samples.
    pub superpolynomial: bool,
    /// `γ(n)^{1/n}` strictly decreasing over the samples.
    pub subexponential: bool,
}

/// Samples the series at `n ∈ {8, 16, 32, 64}` (clipped to the radius) and
/// evaluates both signatures. Radii below 16 leave fewer than two samples
/// and are rejected.
pub fn diagnostics(series: &GrowthSeries) -> Result<GrowthDiagnostics> {
    let radius = series.radius();
    if radius < 16 {
        return Err(Error::InsufficientRadius(radius));
    }
    let samples: Vec<u32> = [8u32, 16, 32, 64].into_iter().filter(|&n| n <= radius).collect();
    let exponents: Vec<f64> = samples
        .iter()
        .map(|&n| (series.gamma(n) as f64).log2() / (n as f64).log2())
        .collect();
    let roots: Vec<f64> = samples
        .iter()
        .map(|&n| (series.gamma(n) as f64).powf(1.0 / n as f64))
        .collect();
    let superpolynomial = exponents.windows(2).all(|w| w[1] > w[0]);
    let subexponential = roots.windows(2).all(|w| w[1] < w[0]);
    Ok(GrowthDiagnostics {
        schema_version: crate::report::SCHEMA_VERSION,
        model: series.model.clone(),
        radius,
        samples,
        exponents,
        roots,
        superpolynomial,
        subexponential,
    })
}

/// CSV with the fixed header `r,gamma,log2gamma,exponent`; the exponent
/// column is empty for `r ≤ 1` where it is undefined.
pub fn to_csv(series: &GrowthSeries) -> String {
    let mut s = String::from("r,gamma,log2gamma,exponent\n");
    for (r, &g) in series.values.iter().enumerate() {
        let log2g = (g as f64).log2();
        let exponent = if r >= 2 {
            format!("{}", log2g / (r as f64).log2())
        } else {
            String::new()
        };
        s.push_str(&format!("{r},{g},{log2g},{exponent}\n"));
    }
    s
}

/// Reads back a CSV produced by [`to_csv`], recovering the exact integer
/// values; derived columns are ignored.
pub fn from_csv(text: &str) -> Result<GrowthSeries> {
    let mut lines = text.lines();
    match lines.next() {
        Some("r,gamma,log2gamma,exponent") => {}
        other => {
            return Err(Error::Malformed(format!("unexpected CSV header {other:?}")))
        }
    }
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut cols = line.split(',');
        let r: usize = cols
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad radius on row {i}")))?;
        if r != i {
            return Err(Error::Malformed(format!("row {i} labelled {r}")));
        }
        let g: u64 = cols
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad gamma on row {i}")))?;
        values.push(g);
    }
    if values.is_empty() {
        return Err(Error::Malformed("empty growth CSV".into()));
    }
    Ok(GrowthSeries { model: "csv".into(), basepoint: String::new(), values })
}
