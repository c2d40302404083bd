use std::collections::BTreeMap;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use super::liveness::{classify_liveness, Liveness};
use super::records::{DevelopmentModel, Language, Platform, ProductRecord, Status};

/// Products with at most this many developers count as small teams.
pub const FEW_DEVELOPERS: u32 = 5;

/// A count together with the number of products for which the field was known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Stat {
    pub count: usize,
    pub known: usize,
}

impl Stat {
    fn tally<'a, T: 'a>(
        items: impl IntoIterator<Item = Option<T>>,
        pred: impl Fn(&T) -> bool,
    ) -> Stat {
        let mut s = Stat::default();
        for item in items.into_iter().flatten() {
            s.known += 1;
            if pred(&item) {
                s.count += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Histogram {
    pub counts: BTreeMap<String, usize>,
    pub known: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub products: usize,
    pub open_source: Stat,
    pub alive: Stat,
    pub dead: Stat,
    pub unclear: Stat,
    pub windows: Stat,
    pub cpp: Stat,
    pub few_developers: Stat,
    pub install_instructions: Stat,
    /// Linear instructions among products that have instructions.
    pub linear_instructions: Stat,
    pub automated_install: Stat,
    pub install_validation: Stat,
    pub uses_issue_tracker: Stat,
    pub uses_version_control: Stat,
    pub licenses: Histogram,
    pub issue_trackers: Histogram,
    pub version_control: Histogram,
}

const ISSUE_TRACKER: &str = "maintainability.issue_tracker";
const VERSION_CONTROL: &str = "maintainability.version_control";

/// Tracker answers that do not indicate an issue tracking tool.
const NOT_A_TRACKER: [&str; 3] = ["e-mail", "none", "unclear"];

/// Liveness from the last-update date when known, the recorded status otherwise.
pub fn effective_status(record: &ProductRecord, reference: Option<NaiveDate>) -> Status {
    match (record.metadata.last_updated, reference) {
        (Some(updated), Some(reference)) => match classify_liveness(updated, reference) {
            Ok(Liveness::Alive) => Status::Alive,
            Ok(Liveness::Dead) => Status::Dead,
            Err(_) => record.metadata.status,
        },
        _ => record.metadata.status,
    }
}

fn yes_no(record: &ProductRecord, id: &str) -> Option<bool> {
    match record.choice(id)? {
        "yes" => Some(true),
        "no" => Some(false),
        _ => None,
    }
}

/// Computes the summary statistics. Unknown or unclear fields are excluded
/// from both the count and its `known` denominator.
pub fn summary_stats(records: &[ProductRecord], reference: Option<NaiveDate>) -> SummaryStats {
    let n = records.len();
    let status: Vec<Status> = records
        .iter()
        .map(|r| effective_status(r, reference))
        .collect();
    let status_stat = |s: Status| Stat::tally(status.iter().map(Some), |x| **x == s);

    let trackers: Vec<Option<&[String]>> = records
        .iter()
        .map(|r| r.answer(ISSUE_TRACKER).and_then(|a| a.list()))
        .map(|l| l.filter(|items| !items.is_empty() && items.iter().all(|i| i != "unclear")))
        .collect();

    let mut issue_trackers = Histogram::default();
    for items in trackers.iter().flatten() {
        issue_trackers.known += 1;
        for i in items.iter() {
            *issue_trackers.counts.entry(i.clone()).or_default() += 1;
        }
    }

    let mut version_control = Histogram::default();
    for r in records {
        if let Some(v) = r.choice(VERSION_CONTROL).filter(|v| *v != "unclear") {
            version_control.known += 1;
            *version_control.counts.entry(v.to_string()).or_default() += 1;
        }
    }

    let mut licenses = Histogram::default();
    for license in records.iter().filter_map(|r| r.metadata.license) {
        licenses.known += 1;
        let key = serde_json::to_value(license)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        *licenses.counts.entry(key).or_default() += 1;
    }

    SummaryStats {
        products: n,
        open_source: Stat::tally(records.iter().map(|r| r.metadata.development_model), |m| {
            *m == DevelopmentModel::OpenSource
        }),
        alive: status_stat(Status::Alive),
        dead: status_stat(Status::Dead),
        unclear: status_stat(Status::Unclear),
        windows: Stat::tally(
            records
                .iter()
                .map(|r| (!r.metadata.platforms.is_empty()).then_some(&r.metadata.platforms)),
            |p| p.contains(&Platform::Windows),
        ),
        cpp: Stat::tally(
            records.iter().map(|r| {
                let langs = &r.metadata.languages;
                langs
                    .iter()
                    .any(|l| *l != Language::Unclear)
                    .then_some(langs)
            }),
            |l| l.contains(&Language::Cpp),
        ),
        few_developers: Stat::tally(records.iter().map(|r| r.metadata.n_developers), |d| {
            *d <= FEW_DEVELOPERS
        }),
        install_instructions: Stat::tally(
            records.iter().map(|r| yes_no(r, "install.instructions")),
            |b| *b,
        ),
        linear_instructions: Stat::tally(
            records
                .iter()
                .filter(|r| yes_no(r, "install.instructions") == Some(true))
                .map(|r| yes_no(r, "install.instructions_linear")),
            |b| *b,
        ),
        automated_install: Stat::tally(
            records.iter().map(|r| yes_no(r, "install.automated")),
            |b| *b,
        ),
        install_validation: Stat::tally(
            records.iter().map(|r| yes_no(r, "install.validation")),
            |b| *b,
        ),
        uses_issue_tracker: Stat::tally(trackers.iter().copied(), |items| {
            items.iter().any(|i| !NOT_A_TRACKER.contains(&i.as_str()))
        }),
        uses_version_control: Stat {
            count: version_control.known,
            known: version_control.known,
        },
        licenses,
        issue_trackers,
        version_control,
    }
}

impl SummaryStats {
    /// `(label, stat)` pairs in display order.
    pub fn rows(&self) -> Vec<(&'static str, Stat)> {
        vec![
            ("open_source", self.open_source),
            ("alive", self.alive),
            ("dead", self.dead),
            ("unclear", self.unclear),
            ("windows", self.windows),
            ("cpp", self.cpp),
            ("few_developers", self.few_developers),
            ("install_instructions", self.install_instructions),
            ("linear_instructions", self.linear_instructions),
            ("automated_install", self.automated_install),
            ("install_validation", self.install_validation),
            ("uses_issue_tracker", self.uses_issue_tracker),
            ("uses_version_control", self.uses_version_control),
        ]
    }

    /// Right-aligned `label: count/known` lines, then the histograms.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<(String, String)> = self
            .rows()
            .into_iter()
            .map(|(label, s)| (label.to_string(), format!("{}/{}", s.count, s.known)))
            .collect();
        for (prefix, h) in [
            ("license", &self.licenses),
            ("issue_tracker", &self.issue_trackers),
            ("version_control", &self.version_control),
        ] {
            for (key, count) in &h.counts {
                lines.push((format!("{prefix}[{key}]"), format!("{count}/{}", h.known)));
            }
        }
        let width = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (label, value) in lines {
            out.push_str(&format!("{label:>width$}: {value}\n"));
        }
        out
    }
}
