//! Scenario runner for triangle-functor condition reports.

pub mod builtin;
pub mod emit;
pub mod error;
pub mod report;
pub mod scenario;

pub use emit::{emit, Format};
pub use error::{CliError, CliResult};
pub use report::{run, verify_report, ReportDocument, WitnessCheck};
pub use scenario::{load_scenario, validate, ScenarioDocument};
