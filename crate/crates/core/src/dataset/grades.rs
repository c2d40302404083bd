use std::collections::BTreeSet;
use std::fmt;

use super::records::{Group, Grouped};
use crate::template::Quality;

/// An overall-impression grade, 1..=10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(u8);

impl Grade {
    pub const MIN: u8 = 1;
    pub const MAX: u8 = 10;

    pub fn new(value: i64) -> Option<Grade> {
        (i64::from(Self::MIN)..=i64::from(Self::MAX))
            .contains(&value)
            .then_some(Grade(value as u8))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A product row of a grade matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedProduct {
    pub name: String,
    pub group: Group,
}

impl Grouped for GradedProduct {
    fn name(&self) -> &str {
        &self.name
    }

    fn group(&self) -> Group {
        self.group
    }
}

/// n products by m qualities of grades, qualities in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeMatrix {
    products: Vec<GradedProduct>,
    qualities: Vec<Quality>,
    // row-major, n * m
    grades: Vec<Grade>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradeError {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("line {line}: unknown group `{value}`")]
    UnknownGroup { line: u64, value: String },
    #[error("line {line}: empty product name")]
    EmptyName { line: u64 },
    #[error("line {line}: duplicate product `{name}`")]
    DuplicateProduct { line: u64, name: String },
    #[error("grade not an integer at ({line},{column}): `{value}`")]
    NotAnInteger {
        line: u64,
        column: String,
        value: String,
    },
    #[error("grade out of range at ({line},{column}): {value}")]
    OutOfRange {
        line: u64,
        column: String,
        value: i64,
    },
    #[error("missing cell at ({line},{column})")]
    MissingCell { line: u64, column: String },
    #[error("line {line}: {extra} cell(s) beyond the header")]
    ExtraCells { line: u64, extra: usize },
    #[error("need at least 2 products, found {0}")]
    TooFewProducts(usize),
    #[error("csv: {0}")]
    Csv(String),
}

/// Every problem found in a grade matrix file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct GradeMatrixError(pub Vec<GradeError>);

impl GradeMatrix {
    pub fn new(
        products: Vec<GradedProduct>,
        qualities: Vec<Quality>,
        rows: Vec<Vec<Grade>>,
    ) -> Result<GradeMatrix, GradeMatrixError> {
        let mut errors = Vec::new();
        if products.len() < 2 {
            errors.push(GradeError::TooFewProducts(products.len()));
        }
        let mut seen = BTreeSet::new();
        for p in &products {
            if !seen.insert(p.name.as_str()) {
                errors.push(GradeError::DuplicateProduct {
                    line: 0,
                    name: p.name.clone(),
                });
            }
        }
        let mut qs = qualities.clone();
        qs.sort();
        qs.dedup();
        if qs.len() != qualities.len() {
            errors.push(GradeError::Header("duplicate quality".into()));
        }
        if rows.len() != products.len() || rows.iter().any(|r| r.len() != qualities.len()) {
            errors.push(GradeError::Header(
                "grade rows do not match products and qualities".into(),
            ));
        }
        if !errors.is_empty() {
            return Err(GradeMatrixError(errors));
        }
        // canonicalize column order
        let order: Vec<usize> = qs
            .iter()
            .map(|q| qualities.iter().position(|x| x == q).expect("present"))
            .collect();
        let grades = rows
            .iter()
            .flat_map(|row| order.iter().map(move |&c| row[c]))
            .collect();
        Ok(GradeMatrix {
            products,
            qualities: qs,
            grades,
        })
    }

    pub fn products(&self) -> &[GradedProduct] {
        &self.products
    }

    pub fn product_names(&self) -> Vec<String> {
        self.products.iter().map(|p| p.name.clone()).collect()
    }

    pub fn qualities(&self) -> &[Quality] {
        &self.qualities
    }

    pub fn n_products(&self) -> usize {
        self.products.len()
    }

    pub fn grade(&self, product: usize, quality: Quality) -> Option<Grade> {
        let col = self.qualities.iter().position(|q| *q == quality)?;
        self.grades
            .get(product * self.qualities.len() + col)
            .copied()
    }

    /// Grades of every product on one quality, in product order.
    pub fn column(&self, quality: Quality) -> Option<Vec<Grade>> {
        let col = self.qualities.iter().position(|q| *q == quality)?;
        let m = self.qualities.len();
        Some(
            (0..self.products.len())
                .map(|i| self.grades[i * m + col])
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["name".to_string(), "group".to_string()];
        header.extend(self.qualities.iter().map(|q| q.id().to_string()));
        w.write_record(&header).expect("in-memory write");
        let m = self.qualities.len();
        for (i, p) in self.products.iter().enumerate() {
            let mut row = vec![p.name.clone(), p.group.id().to_string()];
            row.extend(
                self.grades[i * m..(i + 1) * m]
                    .iter()
                    .map(|g| g.to_string()),
            );
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn parse_line(line: &str) -> Result<csv::StringRecord, GradeError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(line.as_bytes());
    match reader.records().next() {
        Some(r) => r.map_err(|e| GradeError::Csv(e.to_string())),
        None => Ok(csv::StringRecord::new()),
    }
}

/// Parses the grade matrix CSV format, reporting every malformed cell.
pub fn parse_grade_matrix(text: &str) -> Result<GradeMatrix, GradeMatrixError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i as u64 + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(no, l)| parse_line(l).map(|r| (no, r)));

    let header = match lines.next() {
        Some(h) => h.map_err(|e| GradeMatrixError(vec![e]))?.1,
        None => {
            return Err(GradeMatrixError(vec![GradeError::Header(
                "empty file".into(),
            )]))
        }
    };
    let cols: Vec<&str> = header.iter().collect();
    if cols.len() < 3 || cols[0] != "name" || cols[1] != "group" {
        return Err(GradeMatrixError(vec![GradeError::Header(
            "expected `name,group,<quality>...`".into(),
        )]));
    }
    let mut qualities = Vec::new();
    for c in &cols[2..] {
        let q: Quality = c.parse().map_err(|e: crate::template::UnknownQuality| {
            GradeMatrixError(vec![GradeError::Header(e.to_string())])
        })?;
        if qualities.contains(&q) {
            return Err(GradeMatrixError(vec![GradeError::Header(format!(
                "quality `{q}` listed twice"
            ))]));
        }
        qualities.push(q);
    }

    let mut errors = Vec::new();
    let mut products = Vec::new();
    let mut rows = Vec::new();
    let mut names = BTreeSet::new();
    for result in lines {
        let (line, record) = match result {
            Ok(r) => r,
            Err(e) => {
                errors.push(e);
                continue;
            }
        };
        let name = record.get(0).unwrap_or_default().to_string();
        if name.is_empty() {
            errors.push(GradeError::EmptyName { line });
        } else if !names.insert(name.clone()) {
            errors.push(GradeError::DuplicateProduct {
                line,
                name: name.clone(),
            });
        }
        let group = match record.get(1) {
            Some(g) => Group::parse(g).or_else(|| {
                errors.push(GradeError::UnknownGroup {
                    line,
                    value: g.to_string(),
                });
                None
            }),
            None => {
                errors.push(GradeError::MissingCell {
                    line,
                    column: "group".into(),
                });
                None
            }
        };
        if record.len() > cols.len() {
            errors.push(GradeError::ExtraCells {
                line,
                extra: record.len() - cols.len(),
            });
        }
        let mut row = Vec::with_capacity(qualities.len());
        for (j, q) in qualities.iter().enumerate() {
            let column = q.id().to_string();
            match record.get(j + 2) {
                None | Some("") => errors.push(GradeError::MissingCell { line, column }),
                Some(cell) => match cell.parse::<i64>() {
                    Err(_) => errors.push(GradeError::NotAnInteger {
                        line,
                        column,
                        value: cell.to_string(),
                    }),
                    Ok(v) => match Grade::new(v) {
                        Some(g) => row.push(g),
                        None => errors.push(GradeError::OutOfRange {
                            line,
                            column,
                            value: v,
                        }),
                    },
                },
            }
        }
        if let Some(group) = group {
            if row.len() == qualities.len() {
                products.push(GradedProduct { name, group });
                rows.push(row);
            }
        }
    }
    if !errors.is_empty() {
        return Err(GradeMatrixError(errors));
    }
    GradeMatrix::new(products, qualities, rows)
}
