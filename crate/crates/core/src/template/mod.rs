//! The grading template: qualities, their questions, and answer metrics.

mod builtin;
mod metric;
mod quality;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use builtin::{ISSUE_TRACKERS, LANGUAGES, LICENSES, PLATFORMS};
pub use metric::{AnswerValue, Choice, Metric, Violation, ViolationKind};
pub use quality::{Quality, UnknownQuality};

/// Questions in the built-in template: 18 summary items, 57 quality measures
/// and 13 overall-impression grades.
pub const BUILTIN_QUESTION_COUNT: usize = 88;

/// Quality measures in the built-in template, excluding summary items and impressions.
pub const BUILTIN_MEASURE_COUNT: usize = 57;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Summary,
    Quality(Quality),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Question {
    pub id: String,
    pub section: Section,
    pub prompt: String,
    pub metric: Metric,
    /// Measurement requires a successful installation.
    pub requires_install: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QualitySection {
    pub quality: Quality,
    pub questions: Vec<Question>,
    pub impression: Question,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingTemplate {
    pub summary: Vec<Question>,
    pub qualities: Vec<QualitySection>,
}

#[derive(Debug, thiserror::Error)]
pub enum TemplateError {
    #[error("template schema is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("question `{id}`: {message}")]
    Metric { id: String, message: String },
    #[error("duplicate question id `{0}`")]
    DuplicateId(String),
    #[error("quality `{0}` appears more than once")]
    DuplicateQuality(Quality),
    #[error("quality `{0}` is missing")]
    MissingQuality(Quality),
    #[error("impression question `{0}` must use metric grade_1_10")]
    ImpressionMetric(String),
    #[error("declared question_count {declared} does not match the {actual} questions present")]
    CountMismatch { declared: usize, actual: usize },
}

/// Returns the full built-in template.
pub fn builtin_template() -> GradingTemplate {
    let t = builtin::build();
    debug_assert!(t.check().is_ok());
    t
}

/// Checks `answer` against the question's metric.
pub fn validate_answer(question: &Question, answer: &AnswerValue) -> Result<(), Violation> {
    metric::check(&question.metric, answer).map_err(|kind| Violation {
        question_id: question.id.clone(),
        expected: question.metric.to_string(),
        value: answer.to_string(),
        kind,
    })
}

impl GradingTemplate {
    /// All questions: summary first, then each quality's measures followed by its impression.
    pub fn questions(&self) -> impl Iterator<Item = &Question> {
        self.summary.iter().chain(
            self.qualities
                .iter()
                .flat_map(|s| s.questions.iter().chain(std::iter::once(&s.impression))),
        )
    }

    pub fn question(&self, id: &str) -> Option<&Question> {
        self.questions().find(|q| q.id == id)
    }

    pub fn question_count(&self) -> usize {
        self.questions().count()
    }

    pub fn section(&self, quality: Quality) -> Option<&QualitySection> {
        self.qualities.iter().find(|s| s.quality == quality)
    }

    fn check(&self) -> Result<(), TemplateError> {
        let mut ids = BTreeSet::new();
        for q in self.questions() {
            if !ids.insert(q.id.as_str()) {
                return Err(TemplateError::DuplicateId(q.id.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for s in &self.qualities {
            if !seen.insert(s.quality) {
                return Err(TemplateError::DuplicateQuality(s.quality));
            }
            if s.impression.metric != Metric::Grade {
                return Err(TemplateError::ImpressionMetric(s.impression.id.clone()));
            }
        }
        if let Some(missing) = Quality::ALL.iter().find(|q| !seen.contains(q)) {
            return Err(TemplateError::MissingQuality(*missing));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let doc = TemplateDoc {
            summary: self.summary.iter().map(QuestionDoc::from).collect(),
            qualities: self
                .qualities
                .iter()
                .map(|s| SectionDoc {
                    quality: s.quality,
                    questions: s.questions.iter().map(QuestionDoc::from).collect(),
                    impression: QuestionDoc::from(&s.impression),
                })
                .collect(),
            question_count: Some(self.question_count()),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("template serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, TemplateError> {
        let doc: TemplateDoc = serde_json::from_str(text)?;
        let summary = doc
            .summary
            .into_iter()
            .map(|d| d.into_question(Section::Summary))
            .collect::<Result<Vec<_>, _>>()?;
        let qualities = doc
            .qualities
            .into_iter()
            .map(|s| {
                let section = Section::Quality(s.quality);
                Ok(QualitySection {
                    quality: s.quality,
                    questions: s
                        .questions
                        .into_iter()
                        .map(|d| d.into_question(section))
                        .collect::<Result<Vec<_>, _>>()?,
                    impression: s.impression.into_question(section)?,
                })
            })
            .collect::<Result<Vec<_>, TemplateError>>()?;
        let template = GradingTemplate { summary, qualities };
        template.check()?;
        if let Some(declared) = doc.question_count {
            let actual = template.question_count();
            if declared != actual {
                return Err(TemplateError::CountMismatch { declared, actual });
            }
        }
        Ok(template)
    }
}

#[derive(Serialize, Deserialize)]
struct TemplateDoc {
    summary: Vec<QuestionDoc>,
    qualities: Vec<SectionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    question_count: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct SectionDoc {
    quality: Quality,
    questions: Vec<QuestionDoc>,
    impression: QuestionDoc,
}

#[derive(Serialize, Deserialize)]
struct QuestionDoc {
    id: String,
    prompt: String,
    metric: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric_members: Option<Vec<String>>,
    requires_install: bool,
}

impl From<&Question> for QuestionDoc {
    fn from(q: &Question) -> Self {
        QuestionDoc {
            id: q.id.clone(),
            prompt: q.prompt.clone(),
            metric: q.metric.kind().to_string(),
            metric_members: q
                .metric
                .declared_members()
                .map(|m| m.iter().map(Choice::token).collect()),
            requires_install: q.requires_install,
        }
    }
}

impl QuestionDoc {
    fn into_question(self, section: Section) -> Result<Question, TemplateError> {
        let metric = Metric::from_schema(&self.metric, self.metric_members.as_deref()).map_err(
            |message| TemplateError::Metric {
                id: self.id.clone(),
                message,
            },
        )?;
        Ok(Question {
            id: self.id,
            section,
            prompt: self.prompt,
            metric,
            requires_install: self.requires_install,
        })
    }
}
