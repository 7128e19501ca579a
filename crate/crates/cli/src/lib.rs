//! Command implementations and report rendering for the `origami` binary.

pub mod commands;
pub mod report;

pub use report::{Output, Report};
