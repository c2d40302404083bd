use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The software qualities a product is graded on, in canonical order.
///
/// Correctness and verifiability are measured together and form one quality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quality {
    Installability,
    CorrectnessVerifiability,
    Reliability,
    Robustness,
    Performance,
    Usability,
    Maintainability,
    Reusability,
    Portability,
    Understandability,
    Interoperability,
    Transparency,
    Reproducibility,
}

impl Quality {
    pub const COUNT: usize = 13;

    pub const ALL: [Quality; Quality::COUNT] = [
        Quality::Installability,
        Quality::CorrectnessVerifiability,
        Quality::Reliability,
        Quality::Robustness,
        Quality::Performance,
        Quality::Usability,
        Quality::Maintainability,
        Quality::Reusability,
        Quality::Portability,
        Quality::Understandability,
        Quality::Interoperability,
        Quality::Transparency,
        Quality::Reproducibility,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Quality::Installability => "installability",
            Quality::CorrectnessVerifiability => "correctness_verifiability",
            Quality::Reliability => "reliability",
            Quality::Robustness => "robustness",
            Quality::Performance => "performance",
            Quality::Usability => "usability",
            Quality::Maintainability => "maintainability",
            Quality::Reusability => "reusability",
            Quality::Portability => "portability",
            Quality::Understandability => "understandability",
            Quality::Interoperability => "interoperability",
            Quality::Transparency => "transparency",
            Quality::Reproducibility => "reproducibility",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Quality::Installability => "Installability",
            Quality::CorrectnessVerifiability => "Correctness and Verifiability",
            Quality::Reliability => "Surface Reliability",
            Quality::Robustness => "Surface Robustness",
            Quality::Performance => "Surface Performance",
            Quality::Usability => "Surface Usability",
            Quality::Maintainability => "Maintainability",
            Quality::Reusability => "Reusability",
            Quality::Portability => "Portability",
            Quality::Understandability => "Surface Understandability",
            Quality::Interoperability => "Interoperability",
            Quality::Transparency => "Visibility/Transparency",
            Quality::Reproducibility => "Reproducibility",
        }
    }

    /// Position in the canonical enumeration order.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown quality `{0}`")]
pub struct UnknownQuality(pub String);

impl FromStr for Quality {
    type Err = UnknownQuality;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Quality::ALL
            .iter()
            .copied()
            .find(|q| q.id() == s)
            .ok_or_else(|| UnknownQuality(s.to_string()))
    }
}
