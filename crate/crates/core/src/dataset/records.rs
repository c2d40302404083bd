use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::template::{validate_answer, AnswerValue, GradingTemplate, Violation};

/// The three product sets used to present results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    DesktopGis,
    StandaloneTool,
    ProgrammingLibrary,
}

impl Group {
    pub const ALL: [Group; 3] = [
        Group::DesktopGis,
        Group::StandaloneTool,
        Group::ProgrammingLibrary,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Group::DesktopGis => "desktop_gis",
            Group::StandaloneTool => "standalone_tool",
            Group::ProgrammingLibrary => "programming_library",
        }
    }

    pub fn parse(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.id() == s)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Alive,
    Dead,
    Unclear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Concept,
    Public,
    Private,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DevelopmentModel {
    OpenSource,
    Freeware,
    Commercial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum License {
    GnuGpl,
    Bsd,
    Mit,
    TermsOfUse,
    Trial,
    None,
    Unclear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Platform {
    Windows,
    Linux,
    Osx,
    Android,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Language {
    Fortran,
    Matlab,
    C,
    Cpp,
    Java,
    R,
    Ruby,
    Python,
    Cython,
    Basic,
    Pascal,
    Idl,
    Unclear,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub last_updated: Option<NaiveDate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<Category>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub development_model: Option<DevelopmentModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub license: Option<License>,
    #[serde(default)]
    pub platforms: BTreeSet<Platform>,
    #[serde(default)]
    pub languages: BTreeSet<Language>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_developers: Option<u32>,
}

/// One graded product: metadata plus answers keyed by question id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductRecord {
    pub name: String,
    pub group: Group,
    pub metadata: Metadata,
    #[serde(default)]
    pub answers: BTreeMap<String, AnswerValue>,
}

impl ProductRecord {
    pub fn answer(&self, question_id: &str) -> Option<&AnswerValue> {
        self.answers.get(question_id)
    }

    /// Selected label of a single-choice answer, if answered.
    pub fn choice(&self, question_id: &str) -> Option<&str> {
        self.answer(question_id).and_then(AnswerValue::choice_label)
    }
}

/// Anything that belongs to one of the product sets.
pub trait Grouped {
    fn name(&self) -> &str;
    fn group(&self) -> Group;
}

impl Grouped for ProductRecord {
    fn name(&self) -> &str {
        &self.name
    }

    fn group(&self) -> Group {
        self.group
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    Answer(Violation),
    /// Open source products must answer "yes" to source availability.
    SourceNotAvailable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordViolation {
    pub product: String,
    pub issue: Issue,
}

impl fmt::Display for RecordViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.issue {
            Issue::Answer(v) => write!(f, "{}: {v}", self.product),
            Issue::SourceNotAvailable => write!(
                f,
                "{}: {SOURCE_AVAILABLE}: open source products must answer \"yes\"",
                self.product
            ),
        }
    }
}

pub const SOURCE_AVAILABLE: &str = "summary.source_available";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedRecords {
    pub records: Vec<ProductRecord>,
    pub violations: Vec<RecordViolation>,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordsError {
    #[error("records file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{product}: unknown question id `{id}`")]
    UnknownQuestion { product: String, id: String },
    #[error("duplicate product `{0}`")]
    DuplicateProduct(String),
    #[error("{} answer violation(s)", .0.len())]
    Invalid(Vec<RecordViolation>),
}

/// Parses a records file and validates every answer against `template`.
///
/// In lenient mode violations are returned next to the records; in strict mode
/// any violation fails the whole parse.
pub fn parse_records(
    text: &str,
    template: &GradingTemplate,
    strictness: Strictness,
) -> Result<ParsedRecords, RecordsError> {
    let records: Vec<ProductRecord> = serde_json::from_str(text)?;
    let mut names = BTreeSet::new();
    let mut violations = Vec::new();
    for record in &records {
        if !names.insert(record.name.as_str()) {
            return Err(RecordsError::DuplicateProduct(record.name.clone()));
        }
        for (id, answer) in &record.answers {
            let question = template
                .question(id)
                .ok_or_else(|| RecordsError::UnknownQuestion {
                    product: record.name.clone(),
                    id: id.clone(),
                })?;
            if let Err(v) = validate_answer(question, answer) {
                violations.push(RecordViolation {
                    product: record.name.clone(),
                    issue: Issue::Answer(v),
                });
            }
        }
        if record.metadata.development_model == Some(DevelopmentModel::OpenSource)
            && record.choice(SOURCE_AVAILABLE) != Some("yes")
        {
            violations.push(RecordViolation {
                product: record.name.clone(),
                issue: Issue::SourceNotAvailable,
            });
        }
    }
    if strictness == Strictness::Strict && !violations.is_empty() {
        return Err(RecordsError::Invalid(violations));
    }
    Ok(ParsedRecords {
        records,
        violations,
    })
}

pub fn serialize_records(records: &[ProductRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records serialize");
    out.push('\n');
    out
}

/// Product names per group, in input order. Every group is present.
pub fn group_partition<T: Grouped>(items: &[T]) -> BTreeMap<Group, Vec<String>> {
    let mut out: BTreeMap<Group, Vec<String>> =
        Group::ALL.iter().map(|g| (*g, Vec::new())).collect();
    for item in items {
        out.entry(item.group())
            .or_default()
            .push(item.name().to_string());
    }
    out
}
