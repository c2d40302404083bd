//! Ranked tables, group summaries, plot series and their serializations.

mod fixed;
mod svg;

use std::collections::{BTreeMap, BTreeSet};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::ahp::{AhpResult, CriteriaWeights, Method};
use crate::dataset::{group_partition, Group, Grouped, ProductRecord};
use crate::template::Quality;

pub use svg::{render_svg_bars, SvgStyle};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Attached to every report.
pub const CAVEAT: &str = "Scores are relative priorities among the products compared; \
they should not be considered as absolute ranks.";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReportError {
    #[error("product {0:?} is in the grades but not in the records")]
    MissingRecord(String),
    #[error("product {0:?} is in the records but not in the grades")]
    MissingGrades(String),
    #[error("product {name:?} is {grades} in the grades but {records} in the records")]
    GroupMismatch {
        name: String,
        grades: Group,
        records: Group,
    },
    #[error("cannot plot an empty series")]
    EmptySeries,
    #[error("quality {0} is not in the report")]
    MissingQuality(Quality),
    #[error("unsupported report schema version {0}")]
    SchemaVersion(u32),
    #[error("malformed report: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub rank: usize,
    pub name: String,
    pub group: Group,
    #[serde(serialize_with = "fixed::value")]
    pub score: f64,
    #[serde(serialize_with = "fixed::map")]
    pub per_quality: BTreeMap<Quality, f64>,
}

impl Grouped for ReportRow {
    fn name(&self) -> &str {
        &self.name
    }

    fn group(&self) -> Group {
        self.group
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingReport {
    pub schema_version: u32,
    pub reference_date: NaiveDate,
    pub method: Method,
    pub caveat: String,
    #[serde(serialize_with = "fixed::weights")]
    pub weights: CriteriaWeights,
    #[serde(serialize_with = "fixed::opt_map")]
    pub per_quality_cr: BTreeMap<Quality, Option<f64>>,
    /// `None` for groups with no products.
    #[serde(serialize_with = "fixed::opt_map")]
    pub group_means: BTreeMap<Group, Option<f64>>,
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bar {
    pub product: String,
    pub group: Group,
    pub score: f64,
}

/// One chart: bars in descending score order, ties by name.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSeries {
    /// Quality id, or `final`.
    pub label: String,
    pub title: String,
    pub bars: Vec<Bar>,
}

fn by_score_then_name(a: (f64, &str), b: (f64, &str)) -> std::cmp::Ordering {
    b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1))
}

/// Orders products by final score and attaches ranks and group means.
///
/// Equal scores share a rank; ranks are dense. When records are given they must
/// name exactly the graded products, with the same groups.
pub fn build_report(
    result: &AhpResult,
    records: Option<&[ProductRecord]>,
    reference_date: NaiveDate,
) -> Result<RankingReport, ReportError> {
    if let Some(records) = records {
        check_products(result, records)?;
    }

    let mut rows: Vec<ReportRow> = result
        .products
        .iter()
        .enumerate()
        .map(|(i, p)| ReportRow {
            rank: 0,
            name: p.name.clone(),
            group: p.group,
            score: result.final_scores.get(i),
            per_quality: result
                .per_quality
                .iter()
                .map(|(q, v)| (*q, v.get(i)))
                .collect(),
        })
        .collect();
    rows.sort_by(|a, b| by_score_then_name((a.score, &a.name), (b.score, &b.name)));
    let mut rank = 0;
    let mut previous = None;
    for row in &mut rows {
        if previous != Some(row.score) {
            rank += 1;
            previous = Some(row.score);
        }
        row.rank = rank;
    }

    let score: BTreeMap<&str, f64> = rows.iter().map(|r| (r.name.as_str(), r.score)).collect();
    let group_means = group_partition(&rows)
        .into_iter()
        .map(|(g, names)| {
            let mean = (!names.is_empty())
                .then(|| names.iter().map(|n| score[n.as_str()]).sum::<f64>() / names.len() as f64);
            (g, mean)
        })
        .collect();

    Ok(RankingReport {
        schema_version: REPORT_SCHEMA_VERSION,
        reference_date,
        method: result.method,
        caveat: CAVEAT.to_string(),
        weights: result.weights.clone(),
        per_quality_cr: result.per_quality_cr.clone(),
        group_means,
        rows,
    })
}

fn check_products(result: &AhpResult, records: &[ProductRecord]) -> Result<(), ReportError> {
    let by_name: BTreeMap<&str, Group> =
        records.iter().map(|r| (r.name.as_str(), r.group)).collect();
    for p in &result.products {
        match by_name.get(p.name.as_str()) {
            None => return Err(ReportError::MissingRecord(p.name.clone())),
            Some(&g) if g != p.group => {
                return Err(ReportError::GroupMismatch {
                    name: p.name.clone(),
                    grades: p.group,
                    records: g,
                })
            }
            Some(_) => {}
        }
    }
    let graded: BTreeSet<&str> = result.products.iter().map(|p| p.name.as_str()).collect();
    match records.iter().find(|r| !graded.contains(r.name.as_str())) {
        Some(r) => Err(ReportError::MissingGrades(r.name.clone())),
        None => Ok(()),
    }
}

impl RankingReport {
    pub fn qualities(&self) -> Vec<Quality> {
        self.per_quality_cr.keys().copied().collect()
    }

    /// Chart data for one quality, or the final scores when `quality` is `None`.
    pub fn series(&self, quality: Option<Quality>) -> Result<PlotSeries, ReportError> {
        let mut bars = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let score = match quality {
                None => r.score,
                Some(q) => *r
                    .per_quality
                    .get(&q)
                    .ok_or(ReportError::MissingQuality(q))?,
            };
            bars.push(Bar {
                product: r.name.clone(),
                group: r.group,
                score,
            });
        }
        bars.sort_by(|a, b| by_score_then_name((a.score, &a.product), (b.score, &b.product)));
        let (label, title) = match quality {
            None => ("final".to_string(), "Final AHP results".to_string()),
            Some(q) => (
                q.id().to_string(),
                format!("AHP results for {}", q.display_name().to_lowercase()),
            ),
        };
        Ok(PlotSeries { label, title, bars })
    }

    /// Aligned ranking table for terminal output.
    pub fn to_table(&self) -> String {
        let name_w = self
            .rows
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(0)
            .max("product".len());
        let group_w = Group::ALL.iter().map(|g| g.id().len()).max().unwrap_or(0);
        let mut out = format!(
            "{:>4}  {:<name_w$}  {:<group_w$}  {:>8}\n",
            "rank", "product", "group", "score"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>4}  {:<name_w$}  {:<group_w$}  {:>8.6}\n",
                r.rank,
                r.name,
                r.group.id(),
                r.score
            ));
        }
        out
    }
}

/// Deterministic JSON with every score written to 6 decimals.
pub fn emit_json(report: &RankingReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn parse_report(text: &str) -> Result<RankingReport, ReportError> {
    let report: RankingReport =
        serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))?;
    if report.schema_version != REPORT_SCHEMA_VERSION {
        return Err(ReportError::SchemaVersion(report.schema_version));
    }
    Ok(report)
}

/// `product,group,score` rows in series order.
pub fn emit_csv(series: &PlotSeries) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["product", "group", "score"])
        .expect("in-memory write");
    for b in &series.bars {
        w.write_record([b.product.as_str(), b.group.id(), &format!("{:.6}", b.score)])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
