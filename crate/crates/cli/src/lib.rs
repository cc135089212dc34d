pub mod cache;
pub mod report;
pub mod suites;
