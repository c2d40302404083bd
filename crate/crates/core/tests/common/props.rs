//! Property checks shared by the property suite and the acceptance target.

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use softqual::ahp::{
    build_comparison_matrix, consistency_ratio, normalize_columns, priority_eigenvector,
    priority_from_normalized, rank_quality, run_ahp, ComparisonMatrix, CriteriaWeights, Method,
    PriorityVector,
};
use softqual::report::build_report;
use softqual::template::Quality;

use super::{grade_matrix, grades, max_diff, oracle_column_priorities};

pub const METHODS: [Method; 2] = [Method::ColumnNormalization, Method::Eigenvector];

pub fn column(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=10, n)
}

/// A grade matrix as columns of equal length.
pub fn columns(
    n: std::ops::RangeInclusive<usize>,
    m: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (n, m).prop_flat_map(|(n, m)| prop::collection::vec(prop::collection::vec(1i64..=10, n), m))
}

fn priorities(g: &[i64], method: Method) -> PriorityVector {
    let a = build_comparison_matrix(&grades(g)).unwrap();
    match method {
        Method::ColumnNormalization => priority_from_normalized(&normalize_columns(&a)),
        Method::Eigenvector => priority_eigenvector(&a, 1e-12, 10_000).unwrap(),
    }
}

pub fn oracle_equivalence(g: &[i64]) -> Result<(), TestCaseError> {
    let ours = priorities(g, Method::ColumnNormalization);
    let theirs = oracle_column_priorities(g);
    let d = max_diff(ours.weights(), &theirs);
    prop_assert!(d <= 1e-12, "grades {:?}: differ by {}", g, d);
    Ok(())
}

pub fn consistent_exactness(raw: &[f64]) -> Result<(), TestCaseError> {
    let s: f64 = raw.iter().sum();
    let w: Vec<f64> = raw.iter().map(|x| x / s).collect();
    let a = ComparisonMatrix::from_upper(w.len(), |j, k| w[j] / w[k]).unwrap();
    let col = priority_from_normalized(&normalize_columns(&a));
    let d = max_diff(col.weights(), &w);
    prop_assert!(d <= 1e-12, "column method off by {}", d);
    let eig = priority_eigenvector(&a, 1e-12, 10_000).unwrap();
    let d = max_diff(eig.weights(), &w);
    prop_assert!(d <= 1e-6, "eigenvector off by {}", d);
    if w.len() <= 10 {
        let cr = consistency_ratio(&a).unwrap();
        prop_assert!(cr <= 1e-6, "CR {}", cr);
    }
    Ok(())
}

pub fn reciprocity(g: &[i64]) -> Result<(), TestCaseError> {
    let a = build_comparison_matrix(&grades(g)).unwrap();
    for j in 0..a.n() {
        prop_assert_eq!(a.get(j, j), 1.0);
        for k in 0..a.n() {
            prop_assert_eq!(a.get(j, k) * a.get(k, j), 1.0);
            prop_assert!((1.0 / 9.0..=9.0).contains(&a.get(j, k)));
        }
    }
    Ok(())
}

pub fn normalization(g: &[i64]) -> Result<(), TestCaseError> {
    let a = build_comparison_matrix(&grades(g)).unwrap();
    let b = normalize_columns(&a);
    for k in 0..b.n() {
        let s: f64 = (0..b.n()).map(|j| b.get(j, k)).sum();
        prop_assert!((s - 1.0).abs() <= 1e-12);
    }
    for method in METHODS {
        let p = priorities(g, method);
        let s: f64 = p.weights().iter().sum();
        prop_assert!((s - 1.0).abs() <= 1e-9, "{:?} sums to {}", method, s);
        prop_assert!(p.weights().iter().all(|x| *x > 0.0));
    }
    Ok(())
}

/// Strict dominance when no pairwise difference reaches the clamp, weak otherwise.
pub fn monotone_dominance(g: &[i64]) -> Result<(), TestCaseError> {
    let spread = g.iter().max().unwrap() - g.iter().min().unwrap();
    for method in METHODS {
        let p = priorities(g, method);
        for j in 0..g.len() {
            for k in 0..g.len() {
                if g[j] > g[k] {
                    if spread <= 8 {
                        prop_assert!(p.get(j) > p.get(k), "{:?} {:?}", method, g);
                    } else {
                        prop_assert!(p.get(j) >= p.get(k), "{:?} {:?}", method, g);
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn shift_invariance(g: &[i64], c: i64) -> Result<(), TestCaseError> {
    let max = *g.iter().max().unwrap();
    let min = *g.iter().min().unwrap();
    let c = c.clamp(1 - min, 10 - max);
    let shifted: Vec<i64> = g.iter().map(|x| x + c).collect();
    let a = build_comparison_matrix(&grades(g)).unwrap();
    let b = build_comparison_matrix(&grades(&shifted)).unwrap();
    for j in 0..a.n() {
        for k in 0..a.n() {
            prop_assert_eq!(a.get(j, k).to_bits(), b.get(j, k).to_bits());
        }
    }
    Ok(())
}

pub fn permutation_equivariance(cols: &[Vec<i64>], perm: &[usize]) -> Result<(), TestCaseError> {
    let permuted: Vec<Vec<i64>> = cols
        .iter()
        .map(|c| perm.iter().map(|&i| c[i]).collect())
        .collect();
    let gm = grade_matrix(cols);
    let gp = grade_matrix(&permuted);
    let m = cols.len();
    for method in METHODS {
        for q in &Quality::ALL[..m] {
            let a = rank_quality(&gm, *q, method).unwrap();
            let b = rank_quality(&gp, *q, method).unwrap();
            for (new, &old) in perm.iter().enumerate() {
                prop_assert!((b.get(new) - a.get(old)).abs() <= 1e-12);
            }
        }
        let w = CriteriaWeights::equal(&Quality::ALL[..m]);
        let a = run_ahp(&gm, &w, method).unwrap().final_scores;
        let b = run_ahp(&gp, &w, method).unwrap().final_scores;
        for (new, &old) in perm.iter().enumerate() {
            prop_assert!((b.get(new) - a.get(old)).abs() <= 1e-12);
        }
    }
    Ok(())
}

pub fn argmax_invariance(cols: &[Vec<i64>], raw: &[f64], scale: f64) -> Result<(), TestCaseError> {
    let gm = grade_matrix(cols);
    let qualities = &Quality::ALL[..cols.len()];
    let weights = |f: f64| {
        let map: BTreeMap<Quality, f64> = qualities
            .iter()
            .zip(raw)
            .map(|(q, w)| (*q, w * f))
            .collect();
        CriteriaWeights::from_raw(map).unwrap().0
    };
    let date = chrono::NaiveDate::from_ymd_opt(2020, 1, 1).unwrap();
    let order = |w: &CriteriaWeights| {
        let r = run_ahp(&gm, w, Method::ColumnNormalization).unwrap();
        let rep = build_report(&r, None, date).unwrap();
        rep.rows.into_iter().map(|r| r.name).collect::<Vec<_>>()
    };
    prop_assert_eq!(order(&weights(1.0)), order(&weights(scale)));
    Ok(())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
