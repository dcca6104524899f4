//! Command-line front end for the `kabur` ambiguity linter: file formats,
//! configuration, corpus IO and report rendering over `kabur-core`.

pub mod config;
pub mod error;
pub mod fsutil;
pub mod lexfile;
pub mod lists;
pub mod pipeline;
pub mod queue;
pub mod report;
pub mod seed;

pub use config::{Config, Settings};
pub use error::{Error, Result};
pub use report::ReportFormat;
