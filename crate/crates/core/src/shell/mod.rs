//! Command line, group constructors, catalog identification and reports.

pub mod cli;
pub mod fingerprint;
pub mod make;
pub mod report;

pub use cli::{exit_code, run};
pub use fingerprint::{candidates, identify, Fingerprint};
pub use make::make;
