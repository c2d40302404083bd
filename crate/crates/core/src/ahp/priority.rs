use serde::{Deserialize, Serialize};

use super::matrix::{ComparisonMatrix, NormalizedMatrix};
use super::AhpError;

/// Default stopping tolerance for power iteration (max-norm of the update).
pub const EIGEN_TOLERANCE: f64 = 1e-12;
/// Default iteration cap for power iteration.
pub const EIGEN_MAX_ITER: usize = 10_000;

/// Saaty's random consistency indices for n = 1..=10, from
/// T. L. Saaty, "The Analytic Hierarchy Process", McGraw-Hill, 1980.
pub const RANDOM_INDEX: [f64; 10] = [0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49];

/// Positive weights over options, summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PriorityVector(Vec<f64>);

impl PriorityVector {
    /// Wraps weights that are already positive and sum to 1 (within 1e-9).
    pub fn new(weights: Vec<f64>) -> Result<Self, AhpError> {
        let sum: f64 = weights.iter().sum();
        if weights.is_empty()
            || weights.iter().any(|w| !(w.is_finite() && *w > 0.0))
            || (sum - 1.0).abs() > 1e-9
        {
            return Err(AhpError::NotAPriorityVector(weights));
        }
        Ok(PriorityVector(weights))
    }

    pub(crate) fn new_unchecked(weights: Vec<f64>) -> Self {
        PriorityVector(weights)
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }
}

/// Row means of the normalized matrix.
pub fn priority_from_normalized(b: &NormalizedMatrix) -> PriorityVector {
    let n = b.n() as f64;
    PriorityVector(
        (0..b.n())
            .map(|j| b.row(j).iter().sum::<f64>() / n)
            .collect(),
    )
}

/// Principal right eigenvector by power iteration, normalized to sum 1.
pub fn priority_eigenvector(
    a: &ComparisonMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<PriorityVector, AhpError> {
    principal_eigen(a, tol, max_iter).map(|(w, _)| w)
}

/// Principal eigenvector and eigenvalue.
pub fn principal_eigen(
    a: &ComparisonMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<(PriorityVector, f64), AhpError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(AhpError::BadTolerance(tol));
    }
    let n = a.n();
    let mut w = vec![1.0 / n as f64; n];
    for _ in 0..max_iter {
        let aw = a.mul_vec(&w);
        let lambda: f64 = aw.iter().sum();
        let next: Vec<f64> = aw.iter().map(|x| x / lambda).collect();
        let delta = next
            .iter()
            .zip(&w)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        w = next;
        if delta < tol {
            // w sums to 1, so the sum of A w is the eigenvalue.
            let lambda = a.mul_vec(&w).iter().sum();
            return Ok((PriorityVector(w), lambda));
        }
    }
    Err(AhpError::NoConvergence { max_iter })
}

/// `((lambda_max - n) / (n - 1)) / RI(n)`; 0 for n < 3.
pub fn consistency_ratio(a: &ComparisonMatrix) -> Result<f64, AhpError> {
    let n = a.n();
    if n < 3 {
        return Ok(0.0);
    }
    if n > RANDOM_INDEX.len() {
        return Err(AhpError::RandomIndexUndefined(n));
    }
    let (_, lambda) = principal_eigen(a, EIGEN_TOLERANCE, EIGEN_MAX_ITER)?;
    let ci = (lambda - n as f64) / (n as f64 - 1.0);
    Ok((ci / RANDOM_INDEX[n - 1]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::super::matrix::{build_comparison_matrix, normalize_columns};
    use super::*;
    use crate::dataset::Grade;

    fn grades(v: &[i64]) -> Vec<Grade> {
        v.iter().map(|&g| Grade::new(g).unwrap()).collect()
    }

    fn consistent(w: &[f64]) -> ComparisonMatrix {
        ComparisonMatrix::from_upper(w.len(), |j, k| w[j] / w[k]).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn uniform_from_all_ones() {
        let a = build_comparison_matrix(&grades(&[4, 4, 4])).unwrap();
        let third = [1.0 / 3.0; 3];
        assert!(close(
            priority_from_normalized(&normalize_columns(&a)).weights(),
            &third,
            1e-15
        ));
        assert!(close(
            priority_eigenvector(&a, 1e-12, 100).unwrap().weights(),
            &third,
            1e-12
        ));
        assert_eq!(consistency_ratio(&a).unwrap(), 0.0);
    }

    #[test]
    fn nine_five_one() {
        let a = build_comparison_matrix(&grades(&[9, 5, 1])).unwrap();
        let col = priority_from_normalized(&normalize_columns(&a));
        assert!(close(
            col.weights(),
            &[0.723_054_49, 0.215_722_01, 0.061_223_5],
            1e-8
        ));
        let (eig, lambda) = principal_eigen(&a, EIGEN_TOLERANCE, EIGEN_MAX_ITER).unwrap();
        assert!(close(
            eig.weights(),
            &[0.735_193_41, 0.206_695_38, 0.058_111_21],
            1e-8
        ));
        assert!((lambda - 3.117_099_77).abs() < 1e-8);
        assert!(close(col.weights(), eig.weights(), 0.02));
        assert!((consistency_ratio(&a).unwrap() - 0.100_948).abs() < 1e-5);
    }

    #[test]
    fn consistent_fixed_point() {
        let w = [0.5, 0.3, 0.2];
        let a = consistent(&w);
        assert!(close(
            priority_from_normalized(&normalize_columns(&a)).weights(),
            &w,
            1e-12
        ));
        assert!(close(
            priority_eigenvector(&a, 1e-12, 1000).unwrap().weights(),
            &w,
            1e-9
        ));
        assert!(consistency_ratio(&a).unwrap() <= 1e-6);
    }

    #[test]
    fn small_and_large_n() {
        let a = build_comparison_matrix(&grades(&[2, 9])).unwrap();
        assert_eq!(consistency_ratio(&a).unwrap(), 0.0);
        let big = build_comparison_matrix(&grades(&[1; 11])).unwrap();
        assert!(matches!(
            consistency_ratio(&big),
            Err(AhpError::RandomIndexUndefined(11))
        ));
    }

    #[test]
    fn iteration_errors() {
        let a = build_comparison_matrix(&grades(&[9, 5, 1])).unwrap();
        assert!(matches!(
            priority_eigenvector(&a, 1e-15, 1),
            Err(AhpError::NoConvergence { .. })
        ));
        assert!(matches!(
            priority_eigenvector(&a, 0.0, 10),
            Err(AhpError::BadTolerance(_))
        ));
    }

    #[test]
    fn priority_vector_checks() {
        assert!(PriorityVector::new(vec![0.5, 0.5]).is_ok());
        assert!(PriorityVector::new(vec![1.0, 0.0]).is_err());
        assert!(PriorityVector::new(vec![0.4, 0.4]).is_err());
        assert!(PriorityVector::new(vec![]).is_err());
    }
}
