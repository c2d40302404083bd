#![allow(dead_code)]

pub mod props;

use softqual::dataset::{Grade, GradeMatrix, GradedProduct, Group};
use softqual::template::Quality;

/// Straight transcription of the textbook formulas, sharing no code with the crate.
pub fn oracle_matrix(grades: &[i64]) -> Vec<Vec<f64>> {
    let n = grades.len();
    let mut a = vec![vec![0.0; n]; n];
    for j in 0..n {
        for k in 0..n {
            let d = (grades[j] - grades[k]).abs();
            let v = ((d + 1).min(9)) as f64;
            a[j][k] = if grades[j] >= grades[k] { v } else { 1.0 / v };
        }
    }
    a
}

pub fn oracle_column_priorities(grades: &[i64]) -> Vec<f64> {
    let a = oracle_matrix(grades);
    let n = a.len();
    let col_sums: Vec<f64> = (0..n).map(|k| (0..n).map(|j| a[j][k]).sum()).collect();
    (0..n)
        .map(|j| (0..n).map(|k| a[j][k] / col_sums[k]).sum::<f64>() / n as f64)
        .collect()
}

fn matmul(x: &[Vec<f64>], y: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Principal eigenvector by repeated squaring: columns of A^(2^k) converge to it.
pub fn oracle_eigen(a: &[Vec<f64>]) -> (Vec<f64>, f64) {
    let n = a.len();
    let mut p = a.to_vec();
    for _ in 0..60 {
        p = matmul(&p, &p);
        let total: f64 = p.iter().flatten().sum();
        for row in &mut p {
            for x in row.iter_mut() {
                *x /= total;
            }
        }
    }
    let row_sums: Vec<f64> = p.iter().map(|r| r.iter().sum()).collect();
    let s: f64 = row_sums.iter().sum();
    let w: Vec<f64> = row_sums.iter().map(|x| x / s).collect();
    let aw: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|k| a[i][k] * w[k]).sum())
        .collect();
    let lambda = (0..n).map(|i| aw[i] / w[i]).sum::<f64>() / n as f64;
    (w, lambda)
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn grades(v: &[i64]) -> Vec<Grade> {
    v.iter().map(|&g| Grade::new(g).unwrap()).collect()
}

/// Products `p0, p1, ...` all in one group, columns over the first `m` qualities.
pub fn grade_matrix(columns: &[Vec<i64>]) -> GradeMatrix {
    let n = columns[0].len();
    let qualities: Vec<Quality> = Quality::ALL[..columns.len()].to_vec();
    let products = (0..n)
        .map(|i| GradedProduct {
            name: format!("p{i:02}"),
            group: Group::ALL[i % 3],
        })
        .collect();
    let rows = (0..n)
        .map(|i| grades(&columns.iter().map(|c| c[i]).collect::<Vec<_>>()))
        .collect();
    GradeMatrix::new(products, qualities, rows).unwrap()
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}
