use super::scale::{oriented, GradeScale};
use super::AhpError;
use crate::dataset::Grade;

/// Bounds of the Saaty scale, with slack for ratios computed in floating point.
const LOWER: f64 = 1.0 / 9.0 * (1.0 - 1e-12);
const UPPER: f64 = 9.0 * (1.0 + 1e-12);

/// Positive reciprocal n x n matrix of pairwise judgments.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl ComparisonMatrix {
    /// Builds from the strict upper triangle; `upper(j, k)` is called for every `j < k`
    /// and the lower triangle is filled with reciprocals.
    pub fn from_upper(
        n: usize,
        mut upper: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self, AhpError> {
        let mut entries = vec![1.0; n * n];
        for j in 0..n {
            for k in j + 1..n {
                let v = upper(j, k);
                if !(LOWER..=UPPER).contains(&v) {
                    return Err(AhpError::JudgmentOutOfRange {
                        row: j,
                        col: k,
                        value: v,
                    });
                }
                entries[j * n + k] = v;
                entries[k * n + j] = 1.0 / v;
            }
        }
        Ok(ComparisonMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    /// Column sums, accumulated in row order.
    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n];
        for j in 0..self.n {
            for (k, s) in sums.iter_mut().enumerate() {
                *s += self.get(j, k);
            }
        }
        sums
    }

    pub(crate) fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|j| self.row(j).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Column-stochastic matrix obtained by dividing each entry by its column sum.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl NormalizedMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }
}

/// Pairwise comparison of one quality's grades with the default scale.
pub fn build_comparison_matrix(grades: &[Grade]) -> Result<ComparisonMatrix, AhpError> {
    build_comparison_matrix_with(grades, &super::DifferenceScale)
}

pub fn build_comparison_matrix_with(
    grades: &[Grade],
    scale: &dyn GradeScale,
) -> Result<ComparisonMatrix, AhpError> {
    if grades.len() < 2 {
        return Err(AhpError::TooFewOptions(grades.len()));
    }
    // Store the integer judgment on the dominant side and its reciprocal on the other,
    // so a[j][k] * a[k][j] == 1 holds exactly.
    let n = grades.len();
    let mut entries = vec![1.0; n * n];
    for j in 0..n {
        for k in j + 1..n {
            let (v, forward) = oriented(scale, grades[j], grades[k]);
            if !(1.0..=9.0).contains(&v) {
                return Err(AhpError::JudgmentOutOfRange {
                    row: j,
                    col: k,
                    value: v,
                });
            }
            let (hi, lo) = if forward { (j, k) } else { (k, j) };
            entries[hi * n + lo] = v;
            entries[lo * n + hi] = 1.0 / v;
        }
    }
    Ok(ComparisonMatrix { n, entries })
}

pub fn normalize_columns(a: &ComparisonMatrix) -> NormalizedMatrix {
    let n = a.n();
    let sums = a.column_sums();
    let entries = (0..n)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .map(|(j, k)| a.get(j, k) / sums[k])
        .collect();
    NormalizedMatrix { n, entries }
}
