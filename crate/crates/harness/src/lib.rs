//! Verification suites, the oracle result cache and report rendering behind
//! the `turan` command-line tool.

pub mod cache;
pub mod grid;
pub mod report;
pub mod suites;

pub use cache::{CacheError, CorruptLine, ResultCache};
pub use grid::{parse_param_list, GridOverrides};
pub use report::{emit_report, OracleCell, ReportFormat, Row, Status, SuiteReport};
pub use suites::{run_suite, HarnessError, Runner, Suite};
