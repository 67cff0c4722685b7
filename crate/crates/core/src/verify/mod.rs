//! Independent oracles and cross-checks.

pub mod checks;
pub mod report;
pub mod series;

pub use checks::{
    complex_check, gastinger_check, groebner_check, hilbert_truncation_check, ideal_identity_check, CheckEntry,
};
pub use report::{full_report, Analysis, ExtensionSummary, Flags, Report, ReportOptions};
pub use series::{enumerate_semigroup, EnumerationBox, TruncatedSeries};
