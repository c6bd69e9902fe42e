//! Library side of the `dehnscope` command: input documents, the analysis
//! pipeline and report rendering.

pub mod analyze;
pub mod document;
pub mod error;
pub mod report;
pub mod selftest;

pub use analyze::{analyze_algebra, analyze_document, AnalyzeOptions};
pub use document::InputDocument;
pub use error::CliError;
pub use report::{Report, TextStyle};
