//! The built-in grading template: summary information plus one section per quality.

use super::metric::Metric;
use super::{GradingTemplate, Quality, QualitySection, Question, Section};

fn q(section: Section, id: &str, prompt: &str, metric: Metric) -> Question {
    Question {
        id: id.to_string(),
        section,
        prompt: prompt.to_string(),
        metric,
        requires_install: false,
    }
}

/// A question whose measurement requires a successful installation.
fn qi(section: Section, id: &str, prompt: &str, metric: Metric) -> Question {
    Question {
        requires_install: true,
        ..q(section, id, prompt, metric)
    }
}

pub const PLATFORMS: [&str; 5] = ["Windows", "Linux", "OS X", "Android", "Other OS"];

pub const LICENSES: [&str; 7] = [
    "GNU GPL",
    "BSD",
    "MIT",
    "terms of use",
    "trial",
    "none",
    "unclear",
];

pub const LANGUAGES: [&str; 13] = [
    "FORTRAN", "Matlab", "C", "C++", "Java", "R", "Ruby", "Python", "Cython", "BASIC", "Pascal",
    "IDL", "unclear",
];

pub const ISSUE_TRACKERS: [&str; 10] = [
    "Trac",
    "JIRA",
    "Redmine",
    "e-mail",
    "discussion board",
    "sourceforge",
    "google code",
    "git",
    "none",
    "unclear",
];

fn summary() -> Vec<Question> {
    use Metric::*;
    let s = Section::Summary;
    vec![
        q(s, "summary.name", "Software name?", Text),
        q(s, "summary.url", "URL?", Url),
        q(
            s,
            "summary.educational_institution",
            "Educational institution",
            Text,
        ),
        q(s, "summary.purpose", "Software purpose", Text),
        q(s, "summary.developers", "Number of developers", Number),
        q(s, "summary.funding", "How is the project funded", Text),
        q(
            s,
            "summary.downloads",
            "Number of downloads for current version",
            Number,
        ),
        q(s, "summary.release_date", "Release date", Date),
        q(s, "summary.last_updated", "Last updated", Date),
        q(
            s,
            "summary.status",
            "Status",
            Metric::choice(&["alive", "dead", "unclear"]),
        ),
        q(s, "summary.license", "License", Metric::choice(&LICENSES)),
        q(
            s,
            "summary.platforms",
            "Platforms",
            Metric::enum_set(&PLATFORMS),
        ),
        q(
            s,
            "summary.category",
            "Category",
            Metric::choice(&["concept", "public", "private"]),
        ),
        q(
            s,
            "summary.development_model",
            "Development model",
            Metric::choice(&["open source", "freeware", "commercial"]),
        ),
        q(
            s,
            "summary.publications_using",
            "Publications using the software",
            UrlSet,
        ),
        q(
            s,
            "summary.publications_about",
            "Publications about the software",
            UrlSet,
        ),
        q(
            s,
            "summary.source_available",
            "Is source code available?",
            YesNo,
        ),
        q(
            s,
            "summary.languages",
            "Programming language(s)",
            Metric::enum_set(&LANGUAGES),
        ),
    ]
}

fn section(quality: Quality) -> Vec<Question> {
    use Metric::*;
    let s = Section::Quality(quality);
    match quality {
        Quality::Installability => vec![
            q(s, "install.instructions", "Are there installation instructions?", YesNo),
            q(s, "install.instructions_linear", "Are the installation instructions linear?", YesNoNa),
            q(
                s,
                "install.automated",
                "Is there something in place to automate the installation?",
                YesStarNo,
            ),
            q(
                s,
                "install.validation",
                "Is there a specified way to validate the installation, such as a test suite?",
                YesStarNo,
            ),
            q(s, "install.steps", "How many steps were involved in the installation?", Number),
            q(
                s,
                "install.packages",
                "How many software packages need to be installed before or during installation?",
                Number,
            ),
            qi(
                s,
                "install.uninstall",
                "Run uninstall, if available. Were any obvious problems caused?",
                Metric::choice(&["unavail", "yes*", "no"]),
            ),
        ],
        Quality::CorrectnessVerifiability => vec![
            q(
                s,
                "correctness.external_libraries",
                "Are external libraries used?",
                Metric::choice(&["yes*", "no", "unclear"]),
            ),
            q(
                s,
                "correctness.community_confidence",
                "Does the community have confidence in this library?",
                YesNoUnclear,
            ),
            q(
                s,
                "correctness.requirements_spec",
                "Any reference to the requirements specifications of the program?",
                Metric::choice(&["yes*", "no", "unclear"]),
            ),
            q(
                s,
                "correctness.confidence_techniques",
                "What tools or techniques are used to build confidence of correctness?",
                Text,
            ),
            qi(
                s,
                "correctness.tutorial_output",
                "If there is a getting started tutorial, is the output as expected?",
                Metric::choice(&["yes", "no*", "n/a"]),
            ),
        ],
        Quality::Reliability => vec![
            q(
                s,
                "reliability.break_install",
                "Did the software \"break\" during installation?",
                YesStarNo,
            ),
            qi(
                s,
                "reliability.break_tutorial",
                "Did the software \"break\" during the initial tutorial testing?",
                Metric::choice(&["yes*", "no", "n/a"]),
            ),
        ],
        Quality::Robustness => vec![
            qi(
                s,
                "robustness.garbage_input",
                "Does the software handle garbage input reasonably?",
                Metric::choice(&["yes", "no*"]),
            ),
            qi(
                s,
                "robustness.line_endings",
                "For any plain text input files, if all new lines are replaced with new lines and carriage returns, will the software handle this gracefully?",
                Metric::choice(&["yes", "no*", "n/a"]),
            ),
        ],
        Quality::Performance => vec![q(
            s,
            "performance.evidence",
            "Is there evidence that performance was considered?",
            YesStarNo,
        )],
        Quality::Usability => vec![
            q(s, "usability.getting_started", "Is there a getting started tutorial?", YesNo),
            q(s, "usability.standard_example", "Is there a standard example that is explained?", YesNo),
            q(s, "usability.user_manual", "Is there a user manual?", YesNo),
            qi(
                s,
                "usability.look_and_feel",
                "Does the application have the usual \"look and feel\" for the platform it is on?",
                Metric::choice(&["yes", "no*"]),
            ),
            qi(
                s,
                "usability.visibility_problems",
                "Are there any features that show a lack of visibility?",
                Metric::choice(&["yes", "no*"]),
            ),
            q(
                s,
                "usability.user_characteristics",
                "Are expected user characteristics documented?",
                YesNo,
            ),
            q(s, "usability.support_model", "What is the user support model?", Text),
        ],
        Quality::Maintainability => vec![
            q(
                s,
                "maintainability.multiple_versions",
                "Is there a history of multiple versions of the software?",
                YesNoUnclear,
            ),
            q(
                s,
                "maintainability.contribution_info",
                "Is there any information on how code is reviewed, or how to contribute?",
                YesStarNo,
            ),
            q(s, "maintainability.changelog", "Is there a changelog?", YesNo),
            q(
                s,
                "maintainability.maintenance_type",
                "What is the maintenance type?",
                Metric::enum_set(&["corrective", "adaptive", "perfective", "unclear"]),
            ),
            q(
                s,
                "maintainability.issue_tracker",
                "What issue tracking tool is employed?",
                Metric::enum_set(&ISSUE_TRACKERS),
            ),
            q(
                s,
                "maintainability.bugs_fixed",
                "Are the majority of identified bugs fixed?",
                Metric::choice(&["yes", "no*", "unclear"]),
            ),
            q(
                s,
                "maintainability.version_control",
                "Which version control system is in use?",
                Metric::choice(&["svn", "cvs", "git", "github", "unclear"]),
            ),
            q(
                s,
                "maintainability.design_evidence",
                "Is there evidence that maintainability was considered in the design?",
                YesStarNo,
            ),
            q(
                s,
                "maintainability.code_clones",
                "Are there code clones?",
                Metric::choice(&["yes*", "no", "unclear"]),
            ),
        ],
        Quality::Reusability => vec![
            q(
                s,
                "reusability.portions_reused",
                "Are any portions of the software used by another package?",
                YesStarNo,
            ),
            q(
                s,
                "reusability.design_evidence",
                "Is there evidence that reusability was considered in the design? (API documented, web service, command line tools, ...)",
                Metric::choice(&["yes*", "no", "unclear"]),
            ),
        ],
        Quality::Portability => vec![
            q(
                s,
                "portability.platforms",
                "What platforms is the software advertised to work on?",
                Metric::enum_set(&PLATFORMS),
            ),
            q(
                s,
                "portability.special_steps",
                "Are special steps taken in the source code to handle portability?",
                Metric::choice(&["yes*", "no", "n/a"]),
            ),
            q(
                s,
                "portability.not_important",
                "Is portability explicitly identified as NOT being important?",
                YesNo,
            ),
            q(
                s,
                "portability.achieved",
                "Convincing evidence that portability has been achieved?",
                YesStarNo,
            ),
        ],
        Quality::Understandability => {
            let yes_nostar = || Metric::choice(&["yes", "no*", "n/a"]);
            let yesstar_no = || Metric::choice(&["yes*", "no", "n/a"]);
            vec![
                q(
                    s,
                    "understandability.formatting",
                    "Consistent indentation and formatting style?",
                    YesNoNa,
                ),
                q(
                    s,
                    "understandability.coding_standard",
                    "Explicit identification of a coding standard?",
                    yesstar_no(),
                ),
                q(
                    s,
                    "understandability.identifiers",
                    "Are the code identifiers consistent, distinctive, and meaningful?",
                    yes_nostar(),
                ),
                q(
                    s,
                    "understandability.hardcoded_constants",
                    "Are constants (other than 0 and 1) hard coded into the program?",
                    yesstar_no(),
                ),
                q(
                    s,
                    "understandability.comments",
                    "Comments are clear, indicate what is being done, not how?",
                    yes_nostar(),
                ),
                q(
                    s,
                    "understandability.algorithm_references",
                    "Is the name/URL of any algorithms used mentioned?",
                    yes_nostar(),
                ),
                q(
                    s,
                    "understandability.parameter_order",
                    "Parameters are in the same order for all functions?",
                    yes_nostar(),
                ),
                q(s, "understandability.modularized", "Is code modularized?", yes_nostar()),
                q(
                    s,
                    "understandability.file_names",
                    "Descriptive names of source code files?",
                    yes_nostar(),
                ),
                q(
                    s,
                    "understandability.design_document",
                    "Is a design document provided?",
                    yesstar_no(),
                ),
            ]
        }
        Quality::Interoperability => vec![
            q(
                s,
                "interoperability.external_systems",
                "Does the software interoperate with external systems?",
                YesStarNo,
            ),
            q(
                s,
                "interoperability.workflow",
                "Is there a workflow that uses other softwares?",
                YesStarNo,
            ),
            q(
                s,
                "interoperability.api_defined",
                "If there are external interactions, is the API clearly defined?",
                Metric::choice(&["yes*", "no", "n/a"]),
            ),
        ],
        Quality::Transparency => vec![
            q(
                s,
                "transparency.development_process",
                "Is the development process defined? If yes, what process is used.",
                Metric::choice(&["yes*", "no", "n/a"]),
            ),
            q(
                s,
                "transparency.external_examination",
                "Ease of external examination relative to other products considered?",
                Grade,
            ),
        ],
        Quality::Reproducibility => vec![
            q(
                s,
                "reproducibility.dev_environment",
                "Is there a record of the environment used for their development and testing?",
                YesStarNo,
            ),
            q(s, "reproducibility.test_data", "Is test data available for verification?", YesNo),
            q(
                s,
                "reproducibility.context_tools",
                "Are automated tools used to capture experimental context?",
                YesStarNo,
            ),
        ],
    }
}

fn impression_id(quality: Quality) -> String {
    let prefix = match quality {
        Quality::Installability => "install",
        Quality::CorrectnessVerifiability => "correctness",
        other => other.id(),
    };
    format!("{prefix}.impression")
}

pub(super) fn build() -> GradingTemplate {
    let qualities = Quality::ALL
        .iter()
        .map(|&quality| QualitySection {
            quality,
            questions: section(quality),
            impression: q(
                Section::Quality(quality),
                &impression_id(quality),
                "Overall impression?",
                Metric::Grade,
            ),
        })
        .collect();
    GradingTemplate {
        summary: summary(),
        qualities,
    }
}
