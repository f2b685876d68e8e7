//! JSON and table formats for `arcperm-core`, and the `arcperm` command-line driver.

pub mod cli;
pub mod json;
