//! Pairwise comparison matrices, priority vectors, consistency and aggregation.

mod matrix;
mod priority;
mod scale;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dataset::{GradeMatrix, GradedProduct};
use crate::template::Quality;

pub use matrix::{
    build_comparison_matrix, build_comparison_matrix_with, normalize_columns, ComparisonMatrix,
    NormalizedMatrix,
};
pub use priority::{
    consistency_ratio, principal_eigen, priority_eigenvector, priority_from_normalized,
    PriorityVector, EIGEN_MAX_ITER, EIGEN_TOLERANCE, RANDOM_INDEX,
};
pub use scale::{grade_pair_to_saaty, DifferenceScale, GradeScale, SAATY_MAX};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AhpError {
    #[error("grade {0} is outside 1..=10")]
    GradeOutOfRange(i64),
    #[error("judgment a[{row}][{col}] = {value} is outside [1/9, 9]")]
    JudgmentOutOfRange { row: usize, col: usize, value: f64 },
    #[error("a comparison needs at least 2 options, got {0}")]
    TooFewOptions(usize),
    #[error("not a priority vector: {0:?}")]
    NotAPriorityVector(Vec<f64>),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("power iteration did not converge within {max_iter} iterations")]
    NoConvergence { max_iter: usize },
    #[error("random index undefined for n = {0}")]
    RandomIndexUndefined(usize),
    #[error("quality {0} is not in the grade matrix")]
    MissingQuality(Quality),
    #[error("priority vectors cover different product lists ({expected} vs {found} products)")]
    ProductMismatch { expected: usize, found: usize },
    #[error("nothing to aggregate")]
    EmptyAggregate,
    #[error("weight for {quality} must be a non-negative number, got {value}")]
    BadWeight { quality: Quality, value: f64 },
    #[error("weights sum to zero")]
    ZeroWeights,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[default]
    ColumnNormalization,
    Eigenvector,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::ColumnNormalization => "column_normalization",
            Method::Eigenvector => "eigenvector",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "column" | "column_normalization" => Ok(Method::ColumnNormalization),
            "eigen" | "eigenvector" => Ok(Method::Eigenvector),
            _ => Err(format!("unknown method {s:?} (expected column or eigen)")),
        }
    }
}

/// Non-negative criteria weights summing to 1, keyed by quality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CriteriaWeights(BTreeMap<Quality, f64>);

impl CriteriaWeights {
    pub fn equal(qualities: &[Quality]) -> Self {
        let w = 1.0 / qualities.len() as f64;
        CriteriaWeights(qualities.iter().map(|q| (*q, w)).collect())
    }

    /// Renormalizes raw weights to sum 1. Also returns the raw sum.
    pub fn from_raw(raw: BTreeMap<Quality, f64>) -> Result<(Self, f64), AhpError> {
        if let Some((q, v)) = raw.iter().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(AhpError::BadWeight {
                quality: *q,
                value: *v,
            });
        }
        let sum: f64 = raw.values().sum();
        if sum.is_nan() || sum <= 0.0 {
            return Err(AhpError::ZeroWeights);
        }
        Ok((
            CriteriaWeights(raw.into_iter().map(|(q, v)| (q, v / sum)).collect()),
            sum,
        ))
    }

    /// Weight of `q`; qualities without an entry weigh 0.
    pub fn get(&self, q: Quality) -> f64 {
        self.0.get(&q).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Quality, f64)> + '_ {
        self.0.iter().map(|(q, w)| (*q, *w))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Priorities of every product under one quality.
pub fn rank_quality(
    gm: &GradeMatrix,
    q: Quality,
    method: Method,
) -> Result<PriorityVector, AhpError> {
    let grades = gm.column(q).ok_or(AhpError::MissingQuality(q))?;
    let a = build_comparison_matrix(&grades)?;
    match method {
        Method::ColumnNormalization => Ok(priority_from_normalized(&normalize_columns(&a))),
        Method::Eigenvector => priority_eigenvector(&a, EIGEN_TOLERANCE, EIGEN_MAX_ITER),
    }
}

/// Criteria-weighted sum of the per-quality priorities.
pub fn aggregate(
    per_quality: &BTreeMap<Quality, PriorityVector>,
    w: &CriteriaWeights,
) -> Result<PriorityVector, AhpError> {
    let n = per_quality
        .values()
        .next()
        .ok_or(AhpError::EmptyAggregate)?
        .len();
    if let Some(v) = per_quality.values().find(|v| v.len() != n) {
        return Err(AhpError::ProductMismatch {
            expected: n,
            found: v.len(),
        });
    }
    if let Some((q, _)) = w
        .iter()
        .find(|(q, x)| *x > 0.0 && !per_quality.contains_key(q))
    {
        return Err(AhpError::MissingQuality(q));
    }
    let mut total = vec![0.0; n];
    for (q, v) in per_quality {
        let wq = w.get(*q);
        for (t, x) in total.iter_mut().zip(v.weights()) {
            *t += wq * x;
        }
    }
    Ok(PriorityVector::new_unchecked(total))
}

#[derive(Debug, Clone, PartialEq)]
pub struct AhpResult {
    pub products: Vec<GradedProduct>,
    pub weights: CriteriaWeights,
    pub per_quality: BTreeMap<Quality, PriorityVector>,
    /// `None` where the random index is undefined (more than 10 products).
    pub per_quality_cr: BTreeMap<Quality, Option<f64>>,
    pub final_scores: PriorityVector,
    pub method: Method,
}

pub fn run_ahp(
    gm: &GradeMatrix,
    w: &CriteriaWeights,
    method: Method,
) -> Result<AhpResult, AhpError> {
    let mut per_quality = BTreeMap::new();
    let mut per_quality_cr = BTreeMap::new();
    for &q in gm.qualities() {
        per_quality.insert(q, rank_quality(gm, q, method)?);
        let grades = gm.column(q).ok_or(AhpError::MissingQuality(q))?;
        let cr = consistency_ratio(&build_comparison_matrix(&grades)?).ok();
        per_quality_cr.insert(q, cr);
    }
    let final_scores = aggregate(&per_quality, w)?;
    Ok(AhpResult {
        products: gm.products().to_vec(),
        weights: w.clone(),
        per_quality,
        per_quality_cr,
        final_scores,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{Grade, Group};

    fn matrix(rows: &[(&str, Group, &[i64])], qualities: &[Quality]) -> GradeMatrix {
        let products = rows
            .iter()
            .map(|(n, g, _)| GradedProduct {
                name: n.to_string(),
                group: *g,
            })
            .collect();
        let grades = rows
            .iter()
            .map(|(_, _, gs)| gs.iter().map(|&g| Grade::new(g).unwrap()).collect())
            .collect();
        GradeMatrix::new(products, qualities.to_vec(), grades).unwrap()
    }

    fn pv(w: &[f64]) -> PriorityVector {
        PriorityVector::new(w.to_vec()).unwrap()
    }

    #[test]
    fn equal_weights() {
        let w = CriteriaWeights::equal(&Quality::ALL);
        assert_eq!(w.len(), 13);
        assert!((w.iter().map(|(_, x)| x).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn raw_weights_renormalize() {
        let raw = BTreeMap::from([(Quality::Usability, 3.0), (Quality::Reliability, 1.0)]);
        let (w, sum) = CriteriaWeights::from_raw(raw).unwrap();
        assert_eq!(sum, 4.0);
        assert_eq!(w.get(Quality::Usability), 0.75);
        assert_eq!(w.get(Quality::Portability), 0.0);
        assert!(CriteriaWeights::from_raw(BTreeMap::from([(Quality::Usability, -1.0)])).is_err());
        assert!(matches!(
            CriteriaWeights::from_raw(BTreeMap::from([(Quality::Usability, 0.0)])),
            Err(AhpError::ZeroWeights)
        ));
    }

    #[test]
    fn aggregate_examples() {
        let one = BTreeMap::from([(Quality::Usability, pv(&[0.7, 0.3]))]);
        let w = CriteriaWeights::equal(&[Quality::Usability]);
        assert_eq!(aggregate(&one, &w).unwrap(), pv(&[0.7, 0.3]));

        let two = BTreeMap::from([
            (Quality::Usability, pv(&[0.7, 0.3])),
            (Quality::Robustness, pv(&[0.3, 0.7])),
        ]);
        let w = CriteriaWeights::equal(&[Quality::Usability, Quality::Robustness]);
        let f = aggregate(&two, &w).unwrap();
        assert!((f.get(0) - 0.5).abs() < 1e-15 && (f.get(1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn aggregate_errors() {
        let bad = BTreeMap::from([
            (Quality::Usability, pv(&[0.5, 0.5])),
            (Quality::Robustness, pv(&[0.2, 0.3, 0.5])),
        ]);
        let w = CriteriaWeights::equal(&[Quality::Usability, Quality::Robustness]);
        assert!(matches!(
            aggregate(&bad, &w),
            Err(AhpError::ProductMismatch { .. })
        ));
        let one = BTreeMap::from([(Quality::Usability, pv(&[0.5, 0.5]))]);
        assert!(matches!(
            aggregate(&one, &w),
            Err(AhpError::MissingQuality(Quality::Robustness))
        ));
        assert!(matches!(
            aggregate(&BTreeMap::new(), &w),
            Err(AhpError::EmptyAggregate)
        ));
    }

    #[test]
    fn identical_products_split_evenly() {
        let q = [Quality::Usability, Quality::Performance];
        let gm = matrix(
            &[
                ("a", Group::DesktopGis, &[4, 7]),
                ("b", Group::DesktopGis, &[4, 7]),
            ],
            &q,
        );
        for method in [Method::ColumnNormalization, Method::Eigenvector] {
            let r = run_ahp(&gm, &CriteriaWeights::equal(&q), method).unwrap();
            assert!(r
                .final_scores
                .weights()
                .iter()
                .all(|x| (x - 0.5).abs() < 1e-12));
            assert_eq!(r.per_quality_cr[&Quality::Usability], Some(0.0));
        }
    }

    #[test]
    fn dominant_product_wins() {
        let q = [
            Quality::Usability,
            Quality::Performance,
            Quality::Portability,
        ];
        let gm = matrix(
            &[
                ("a", Group::DesktopGis, &[3, 5, 2]),
                ("b", Group::StandaloneTool, &[9, 8, 6]),
                ("c", Group::ProgrammingLibrary, &[5, 5, 5]),
            ],
            &q,
        );
        let r = run_ahp(
            &gm,
            &CriteriaWeights::equal(&q),
            Method::ColumnNormalization,
        )
        .unwrap();
        let f = r.final_scores.weights();
        assert!(f[1] > f[0] && f[1] > f[2]);
        assert!((f.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_and_increasing() {
        let q = [Quality::Usability];
        let gm = matrix(
            &[
                ("a", Group::DesktopGis, &[5]),
                ("b", Group::DesktopGis, &[5]),
                ("c", Group::DesktopGis, &[5]),
            ],
            &q,
        );
        let v = rank_quality(&gm, Quality::Usability, Method::ColumnNormalization).unwrap();
        assert!(v.weights().iter().all(|x| (x - 1.0 / 3.0).abs() < 1e-15));
        let gm = matrix(
            &[
                ("a", Group::DesktopGis, &[2]),
                ("b", Group::DesktopGis, &[4]),
                ("c", Group::DesktopGis, &[7]),
            ],
            &q,
        );
        let v = rank_quality(&gm, Quality::Usability, Method::Eigenvector).unwrap();
        assert!(v.get(0) < v.get(1) && v.get(1) < v.get(2));
        assert!(rank_quality(&gm, Quality::Reliability, Method::Eigenvector).is_err());
    }

    #[test]
    fn method_parsing() {
        assert_eq!(
            "column".parse::<Method>().unwrap(),
            Method::ColumnNormalization
        );
        assert_eq!("eigen".parse::<Method>().unwrap(), Method::Eigenvector);
        assert!("power".parse::<Method>().is_err());
    }
}
