//! Descriptive statistics and table aggregation.
//!
//! Conventions are fixed so that stored tables are reproducible:
//! sample (n−1) variance, midpoint median, exclusive (n+1)-position
//! linear-interpolation quantiles (Hyndman–Fan type 6), compensated
//! summation for means, and decimal display rounding via
//! [`round_display`].

mod rounding;

pub use rounding::{format_display, round_display};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("empty input: at least one value is required")]
    EmptyInput,
    #[error("empty domain group: {0}")]
    EmptyGroup(String),
    #[error("too few values: got {got}, need at least {need}")]
    TooFewValues { got: usize, need: usize },
}

/// Compensated (Neumaier) summation. Keeps running sums accurate enough
/// that the shortest decimal representation of a mean of 2-decimal scores
/// is the exact decimal result.
pub fn sum_compensated(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Arithmetic mean with compensated summation.
pub fn mean(values: &[f64]) -> f64 {
    sum_compensated(values) / values.len() as f64
}

/// Type-6 quantile (exclusive method): position (n+1)·p with linear
/// interpolation, clamped to the first/last order statistic.
///
/// `sorted` must be in ascending order and non-empty.
pub fn quantile_type6(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let h = (n as f64 + 1.0) * p;
    if h <= 1.0 {
        return sorted[0];
    }
    if h >= n as f64 {
        return sorted[n - 1];
    }
    let k = h.floor() as usize; // 1-based lower position
    let g = h - k as f64;
    sorted[k - 1] + g * (sorted[k] - sorted[k - 1])
}

/// Descriptive statistics over one sample.
///
/// `sample_std` and `sample_variance` are absent when n < 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub mean: f64,
    pub median: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_std: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_variance: Option<f64>,
    pub min: f64,
    pub max: f64,
    pub range: f64,
    pub q1: f64,
    pub q3: f64,
}

/// Compute descriptive statistics for `values` (n ≥ 1).
pub fn describe(values: &[f64]) -> Result<DescriptiveStats, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let n = values.len();
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-NaN values"));

    let mean = mean(values);
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    let (sample_variance, sample_std) = if n >= 2 {
        let sq: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
        let var = sum_compensated(&sq) / (n - 1) as f64;
        (Some(var), Some(var.sqrt()))
    } else {
        (None, None)
    };
    let min = sorted[0];
    let max = sorted[n - 1];

    Ok(DescriptiveStats {
        n,
        mean,
        median,
        sample_std,
        sample_variance,
        min,
        max,
        range: max - min,
        q1: quantile_type6(&sorted, 0.25),
        q3: quantile_type6(&sorted, 0.75),
    })
}

/// One row of a per-domain metric table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricRow {
    pub label: String,
    pub stats: DescriptiveStats,
    pub total: f64,
}

/// Per-domain rows plus an overall row computed from the pooled raw
/// values (not from the row aggregates).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricTable {
    pub rows: Vec<MetricRow>,
    pub overall: MetricRow,
}

/// Aggregate grouped values into a metric table. Every group must be
/// non-empty; group order is preserved.
pub fn aggregate_metric_table(groups: &[(String, Vec<f64>)]) -> Result<MetricTable, StatsError> {
    let mut rows = Vec::with_capacity(groups.len());
    let mut pooled = Vec::new();
    for (label, values) in groups {
        if values.is_empty() {
            return Err(StatsError::EmptyGroup(label.clone()));
        }
        rows.push(MetricRow {
            label: label.clone(),
            stats: describe(values)?,
            total: sum_compensated(values),
        });
        pooled.extend_from_slice(values);
    }
    if pooled.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let overall = MetricRow {
        label: "Overall".to_string(),
        stats: describe(&pooled)?,
        total: sum_compensated(&pooled),
    };
    Ok(MetricTable { rows, overall })
}

/// One realism score attributed to a (domain, model setting) cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreSample {
    pub domain: String,
    pub setting: String,
    pub score: f64,
}

/// Domain × setting matrix of mean realism scores with row and column
/// means. Cells with no samples are `None` and listed in `empty_cells`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DorMatrix {
    pub domains: Vec<String>,
    pub settings: Vec<String>,
    /// `cells[d][s]` = mean score for (domains[d], settings[s]).
    pub cells: Vec<Vec<Option<f64>>>,
    pub counts: Vec<Vec<usize>>,
    /// Mean per domain across settings (over present cells).
    pub row_means: Vec<Option<f64>>,
    /// Mean per setting across domains (over present cells).
    pub col_means: Vec<Option<f64>>,
    pub empty_cells: Vec<(String, String)>,
}

/// Build the domain × setting mean-score matrix.
///
/// Row and column means are means of the cell means, matching the table
/// convention used in stored reports. Empty cells are flagged, not fatal.
pub fn dor_mean_matrix(
    samples: &[ScoreSample],
    domains: &[String],
    settings: &[String],
) -> DorMatrix {
    let mut per_cell: Vec<Vec<Vec<f64>>> =
        vec![vec![Vec::new(); settings.len()]; domains.len()];
    for s in samples {
        let (Some(d), Some(c)) = (
            domains.iter().position(|x| *x == s.domain),
            settings.iter().position(|x| *x == s.setting),
        ) else {
            continue;
        };
        per_cell[d][c].push(s.score);
    }

    let mut cells = vec![vec![None; settings.len()]; domains.len()];
    let mut counts = vec![vec![0usize; settings.len()]; domains.len()];
    let mut empty_cells = Vec::new();
    for (d, domain) in domains.iter().enumerate() {
        for (c, setting) in settings.iter().enumerate() {
            let vals = &per_cell[d][c];
            counts[d][c] = vals.len();
            if vals.is_empty() {
                empty_cells.push((domain.clone(), setting.clone()));
            } else {
                cells[d][c] = Some(mean(vals));
            }
        }
    }

    let row_means = cells
        .iter()
        .map(|row| {
            let present: Vec<f64> = row.iter().flatten().copied().collect();
            (!present.is_empty()).then(|| mean(&present))
        })
        .collect();
    let col_means = (0..settings.len())
        .map(|c| {
            let present: Vec<f64> = cells.iter().filter_map(|row| row[c]).collect();
            (!present.is_empty()).then(|| mean(&present))
        })
        .collect();

    DorMatrix {
        domains: domains.to_vec(),
        settings: settings.to_vec(),
        cells,
        counts,
        row_means,
        col_means,
        empty_cells,
    }
}

/// Outlier flagging policy over a sample's quartiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutlierPolicy {
    /// Flag values strictly below Q1.
    BelowQ1,
    /// Flag values outside [Q1 − 1.5·IQR, Q3 + 1.5·IQR].
    Tukey,
}

impl std::fmt::Display for OutlierPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OutlierPolicy::BelowQ1 => write!(f, "below_q1"),
            OutlierPolicy::Tukey => write!(f, "tukey"),
        }
    }
}

impl std::str::FromStr for OutlierPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "below_q1" => Ok(OutlierPolicy::BelowQ1),
            "tukey" => Ok(OutlierPolicy::Tukey),
            other => Err(format!("unknown outlier policy: {other}")),
        }
    }
}

/// Flag outliers under the given policy. Requires n ≥ 4.
/// Returns the flagged values in input order.
pub fn flag_outliers(values: &[f64], policy: OutlierPolicy) -> Result<Vec<f64>, StatsError> {
    if values.len() < 4 {
        return Err(StatsError::TooFewValues {
            got: values.len(),
            need: 4,
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-NaN values"));
    let q1 = quantile_type6(&sorted, 0.25);
    let q3 = quantile_type6(&sorted, 0.75);
    let flagged = match policy {
        OutlierPolicy::BelowQ1 => values.iter().copied().filter(|v| *v < q1).collect(),
        OutlierPolicy::Tukey => {
            let iqr = q3 - q1;
            let (lo, hi) = (q1 - 1.5 * iqr, q3 + 1.5 * iqr);
            values
                .iter()
                .copied()
                .filter(|v| *v < lo || *v > hi)
                .collect()
        }
    };
    Ok(flagged)
}
