use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fmt;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

/// One admissible response in an enumerated metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choice {
    pub label: String,
    /// The response must come with explanatory text (written `label*`).
    pub needs_note: bool,
}

impl Choice {
    pub fn plain(label: &str) -> Self {
        Choice {
            label: label.to_string(),
            needs_note: false,
        }
    }

    pub fn starred(label: &str) -> Self {
        Choice {
            label: label.to_string(),
            needs_note: true,
        }
    }

    /// Parses the `label` / `label*` notation used in schema files.
    pub fn parse(token: &str) -> Self {
        match token.strip_suffix('*') {
            Some(label) => Choice::starred(label),
            None => Choice::plain(token),
        }
    }

    pub fn token(&self) -> String {
        if self.needs_note {
            format!("{}*", self.label)
        } else {
            self.label.clone()
        }
    }
}

/// The type of a valid response to a template question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Metric {
    YesNo,
    /// yes (with explanation) or no.
    YesStarNo,
    YesNoNa,
    YesNoUnclear,
    /// Non-negative integer.
    Number,
    Date,
    Text,
    Url,
    UrlSet,
    Grade,
    /// Exactly one of the declared members.
    Choice(Vec<Choice>),
    /// Any subset of the declared members.
    EnumSet(Vec<Choice>),
}

impl Metric {
    pub fn choice(tokens: &[&str]) -> Self {
        Metric::Choice(tokens.iter().map(|t| Choice::parse(t)).collect())
    }

    pub fn enum_set(tokens: &[&str]) -> Self {
        Metric::EnumSet(tokens.iter().map(|t| Choice::parse(t)).collect())
    }

    /// Schema keyword for this metric.
    pub fn kind(&self) -> &'static str {
        match self {
            Metric::YesNo => "yes_no",
            Metric::YesStarNo => "yes_star_no",
            Metric::YesNoNa => "yes_no_na",
            Metric::YesNoUnclear => "yes_no_unclear",
            Metric::Number => "number",
            Metric::Date => "date",
            Metric::Text => "text",
            Metric::Url => "url",
            Metric::UrlSet => "url_set",
            Metric::Grade => "grade_1_10",
            Metric::Choice(_) => "choice",
            Metric::EnumSet(_) => "enum_set",
        }
    }

    /// Declared members for the enumerated kinds, `None` otherwise.
    pub fn members(&self) -> Option<Cow<'_, [Choice]>> {
        let fixed = |tokens: &[&str]| Cow::Owned(tokens.iter().map(|t| Choice::parse(t)).collect());
        match self {
            Metric::YesNo => Some(fixed(&["yes", "no"])),
            Metric::YesStarNo => Some(fixed(&["yes*", "no"])),
            Metric::YesNoNa => Some(fixed(&["yes", "no", "n/a"])),
            Metric::YesNoUnclear => Some(fixed(&["yes", "no", "unclear"])),
            Metric::Choice(m) | Metric::EnumSet(m) => Some(Cow::Borrowed(m.as_slice())),
            _ => None,
        }
    }

    /// Only `choice` and `enum_set` carry their member list in schema files.
    pub fn declared_members(&self) -> Option<&[Choice]> {
        match self {
            Metric::Choice(m) | Metric::EnumSet(m) => Some(m),
            _ => None,
        }
    }

    pub fn from_schema(kind: &str, members: Option<&[String]>) -> Result<Self, String> {
        let members = || -> Result<Vec<Choice>, String> {
            let list = members.ok_or_else(|| format!("metric `{kind}` requires metric_members"))?;
            if list.is_empty() {
                return Err(format!("metric `{kind}` requires a non-empty member list"));
            }
            Ok(list.iter().map(|t| Choice::parse(t)).collect())
        };
        Ok(match kind {
            "yes_no" => Metric::YesNo,
            "yes_star_no" => Metric::YesStarNo,
            "yes_no_na" => Metric::YesNoNa,
            "yes_no_unclear" => Metric::YesNoUnclear,
            "number" => Metric::Number,
            "date" => Metric::Date,
            "text" => Metric::Text,
            "url" => Metric::Url,
            "url_set" => Metric::UrlSet,
            "grade_1_10" => Metric::Grade,
            "choice" => Metric::Choice(members()?),
            "enum_set" => Metric::EnumSet(members()?),
            other => return Err(format!("unknown metric `{other}`")),
        })
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.members() {
            Some(members) => {
                let tokens: Vec<String> = members.iter().map(Choice::token).collect();
                if matches!(self, Metric::EnumSet(_)) {
                    write!(f, "set of {{{}}}", tokens.join(", "))
                } else {
                    write!(f, "{{{}}}", tokens.join(", "))
                }
            }
            None => match self {
                Metric::Grade => f.write_str("{1 .. 10}"),
                other => f.write_str(other.kind()),
            },
        }
    }
}

/// A response as it appears in a records file.
///
/// JSON forms: an integer, a string, `{"value": .., "note": ..}`, or an array of strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnswerValue {
    Integer(i64),
    Text(String),
    Noted {
        value: String,
        #[serde(default)]
        note: String,
    },
    List(Vec<String>),
}

impl AnswerValue {
    pub fn text(s: &str) -> Self {
        AnswerValue::Text(s.to_string())
    }

    pub fn noted(value: &str, note: &str) -> Self {
        AnswerValue::Noted {
            value: value.to_string(),
            note: note.to_string(),
        }
    }

    /// The selected label for single-choice answers.
    pub fn choice_label(&self) -> Option<&str> {
        match self {
            AnswerValue::Text(v) | AnswerValue::Noted { value: v, .. } => Some(v),
            _ => None,
        }
    }

    pub fn list(&self) -> Option<&[String]> {
        match self {
            AnswerValue::List(items) => Some(items),
            _ => None,
        }
    }
}

impl fmt::Display for AnswerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnswerValue::Integer(n) => write!(f, "{n}"),
            AnswerValue::Text(s) => write!(f, "{s:?}"),
            AnswerValue::Noted { value, note } => write!(f, "{value:?} (note {note:?})"),
            AnswerValue::List(items) => write!(f, "{items:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    WrongType,
    OutOfRange,
    NotAMember(String),
    DuplicateMember(String),
    ExplanationRequired,
    Malformed,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::WrongType => f.write_str("wrong answer type"),
            ViolationKind::OutOfRange => f.write_str("out of range"),
            ViolationKind::NotAMember(m) => write!(f, "`{m}` is not a declared member"),
            ViolationKind::DuplicateMember(m) => write!(f, "`{m}` listed more than once"),
            ViolationKind::ExplanationRequired => f.write_str("explanation required"),
            ViolationKind::Malformed => f.write_str("malformed value"),
        }
    }
}

/// An answer that does not conform to its question's metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub question_id: String,
    pub expected: String,
    pub value: String,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (expected {}, got {})",
            self.question_id, self.kind, self.expected, self.value
        )
    }
}

impl std::error::Error for Violation {}

fn is_url(s: &str) -> bool {
    let rest = s
        .strip_prefix("https://")
        .or_else(|| s.strip_prefix("http://"));
    matches!(rest, Some(r) if !r.is_empty() && !r.starts_with('/') && !r.chars().any(char::is_whitespace))
}

/// Checks `answer` against `metric`; `Err` carries the kind of violation.
pub(crate) fn check(metric: &Metric, answer: &AnswerValue) -> Result<(), ViolationKind> {
    match metric {
        Metric::Number => match answer {
            AnswerValue::Integer(n) if *n >= 0 => Ok(()),
            AnswerValue::Integer(_) => Err(ViolationKind::OutOfRange),
            _ => Err(ViolationKind::WrongType),
        },
        Metric::Grade => match answer {
            AnswerValue::Integer(n) if (1..=10).contains(n) => Ok(()),
            AnswerValue::Integer(_) => Err(ViolationKind::OutOfRange),
            _ => Err(ViolationKind::WrongType),
        },
        Metric::Date => match answer {
            AnswerValue::Text(s) => NaiveDate::parse_from_str(s, "%Y-%m-%d")
                .map(|_| ())
                .map_err(|_| ViolationKind::Malformed),
            _ => Err(ViolationKind::WrongType),
        },
        Metric::Text => match answer {
            AnswerValue::Text(_) => Ok(()),
            _ => Err(ViolationKind::WrongType),
        },
        Metric::Url => match answer {
            AnswerValue::Text(s) if is_url(s) => Ok(()),
            AnswerValue::Text(_) => Err(ViolationKind::Malformed),
            _ => Err(ViolationKind::WrongType),
        },
        Metric::UrlSet => match answer {
            AnswerValue::List(items) => {
                let mut seen = BTreeSet::new();
                for item in items {
                    if !is_url(item) {
                        return Err(ViolationKind::Malformed);
                    }
                    if !seen.insert(item) {
                        return Err(ViolationKind::DuplicateMember(item.clone()));
                    }
                }
                Ok(())
            }
            _ => Err(ViolationKind::WrongType),
        },
        Metric::EnumSet(members) => match answer {
            AnswerValue::List(items) => {
                let mut seen = BTreeSet::new();
                for item in items {
                    if !members.iter().any(|m| &m.label == item) {
                        return Err(ViolationKind::NotAMember(item.clone()));
                    }
                    if !seen.insert(item) {
                        return Err(ViolationKind::DuplicateMember(item.clone()));
                    }
                }
                Ok(())
            }
            _ => Err(ViolationKind::WrongType),
        },
        Metric::YesNo
        | Metric::YesStarNo
        | Metric::YesNoNa
        | Metric::YesNoUnclear
        | Metric::Choice(_) => {
            let members = metric.members().expect("enumerated metric");
            let (value, note) = match answer {
                AnswerValue::Text(v) => (v.as_str(), ""),
                AnswerValue::Noted { value, note } => (value.as_str(), note.as_str()),
                _ => return Err(ViolationKind::WrongType),
            };
            let member = members
                .iter()
                .find(|m| m.label == value)
                .ok_or_else(|| ViolationKind::NotAMember(value.to_string()))?;
            if member.needs_note && note.trim().is_empty() {
                return Err(ViolationKind::ExplanationRequired);
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grade_range() {
        assert_eq!(check(&Metric::Grade, &AnswerValue::Integer(7)), Ok(()));
        assert_eq!(check(&Metric::Grade, &AnswerValue::Integer(1)), Ok(()));
        assert_eq!(check(&Metric::Grade, &AnswerValue::Integer(10)), Ok(()));
        assert_eq!(
            check(&Metric::Grade, &AnswerValue::Integer(0)),
            Err(ViolationKind::OutOfRange)
        );
        assert_eq!(
            check(&Metric::Grade, &AnswerValue::Integer(11)),
            Err(ViolationKind::OutOfRange)
        );
        assert_eq!(
            check(&Metric::Grade, &AnswerValue::text("7")),
            Err(ViolationKind::WrongType)
        );
    }

    #[test]
    fn number_admits_zero() {
        assert_eq!(check(&Metric::Number, &AnswerValue::Integer(0)), Ok(()));
        assert_eq!(
            check(&Metric::Number, &AnswerValue::Integer(-1)),
            Err(ViolationKind::OutOfRange)
        );
    }

    #[test]
    fn starred_yes_needs_note() {
        let m = Metric::YesStarNo;
        assert_eq!(
            check(&m, &AnswerValue::text("yes")),
            Err(ViolationKind::ExplanationRequired)
        );
        assert_eq!(
            check(&m, &AnswerValue::noted("yes", "  ")),
            Err(ViolationKind::ExplanationRequired)
        );
        assert_eq!(check(&m, &AnswerValue::noted("yes", "installer")), Ok(()));
        assert_eq!(check(&m, &AnswerValue::text("no")), Ok(()));
        assert_eq!(
            check(&m, &AnswerValue::text("n/a")),
            Err(ViolationKind::NotAMember("n/a".into()))
        );
    }

    #[test]
    fn starred_no_in_choice() {
        let m = Metric::choice(&["yes", "no*", "n/a"]);
        assert_eq!(check(&m, &AnswerValue::text("yes")), Ok(()));
        assert_eq!(
            check(&m, &AnswerValue::text("no")),
            Err(ViolationKind::ExplanationRequired)
        );
    }

    #[test]
    fn enum_set_subsets() {
        let m = Metric::enum_set(&["Windows", "Linux", "OS X"]);
        assert_eq!(check(&m, &AnswerValue::List(vec![])), Ok(()));
        assert_eq!(
            check(
                &m,
                &AnswerValue::List(vec!["Linux".into(), "Windows".into()])
            ),
            Ok(())
        );
        assert_eq!(
            check(&m, &AnswerValue::List(vec!["BeOS".into()])),
            Err(ViolationKind::NotAMember("BeOS".into()))
        );
        assert_eq!(
            check(&m, &AnswerValue::List(vec!["Linux".into(), "Linux".into()])),
            Err(ViolationKind::DuplicateMember("Linux".into()))
        );
    }

    #[test]
    fn dates_and_urls() {
        assert_eq!(
            check(&Metric::Date, &AnswerValue::text("2015-02-28")),
            Ok(())
        );
        assert_eq!(
            check(&Metric::Date, &AnswerValue::text("2015-02-30")),
            Err(ViolationKind::Malformed)
        );
        assert_eq!(
            check(&Metric::Url, &AnswerValue::text("https://grass.osgeo.org")),
            Ok(())
        );
        assert_eq!(
            check(&Metric::Url, &AnswerValue::text("grass.osgeo.org")),
            Err(ViolationKind::Malformed)
        );
    }

    #[test]
    fn answer_json_forms() {
        let v: AnswerValue = serde_json::from_str("3").unwrap();
        assert_eq!(v, AnswerValue::Integer(3));
        let v: AnswerValue = serde_json::from_str("\"yes\"").unwrap();
        assert_eq!(v, AnswerValue::text("yes"));
        let v: AnswerValue =
            serde_json::from_str(r#"{"value":"yes","note":"make install"}"#).unwrap();
        assert_eq!(v, AnswerValue::noted("yes", "make install"));
        let v: AnswerValue = serde_json::from_str(r#"["git"]"#).unwrap();
        assert_eq!(v, AnswerValue::List(vec!["git".into()]));
        assert!(serde_json::from_str::<AnswerValue>("2.5").is_err());
    }

    #[test]
    fn schema_tokens() {
        let m = Metric::from_schema(
            "choice",
            Some(&["unavail".into(), "yes*".into(), "no".into()]),
        )
        .unwrap();
        assert_eq!(m, Metric::choice(&["unavail", "yes*", "no"]));
        assert_eq!(m.to_string(), "{unavail, yes*, no}");
        assert!(Metric::from_schema("enum_set", Some(&[])).is_err());
        assert!(Metric::from_schema("enum_set", None).is_err());
        assert!(Metric::from_schema("likert", None).is_err());
    }
}
