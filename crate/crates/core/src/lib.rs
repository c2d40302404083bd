pub mod ahp;
pub mod cli;
pub mod dataset;
pub mod report;
pub mod template;
