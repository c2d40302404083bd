//! Product records, grade matrices, liveness and summary statistics.

mod grades;
mod liveness;
mod records;
mod stats;

pub use grades::{
    parse_grade_matrix, Grade, GradeError, GradeMatrix, GradeMatrixError, GradedProduct,
};
pub use liveness::{classify_liveness, FutureUpdate, Liveness, LIVENESS_WINDOW_MONTHS};
pub use records::{
    group_partition, parse_records, serialize_records, Category, DevelopmentModel, Group, Grouped,
    Issue, Language, License, Metadata, ParsedRecords, Platform, ProductRecord, RecordViolation,
    RecordsError, Status, Strictness, SOURCE_AVAILABLE,
};
pub use stats::{effective_status, summary_stats, Histogram, Stat, SummaryStats, FEW_DEVELOPERS};
