//! Command-line front end: fan files, JSON reports and SVG figures.

mod commands;
mod fanfile;
pub mod json;
pub mod svg;

pub use commands::{
    cmd_deform, cmd_plot, cmd_rigidity, cmd_t1, cmd_validate, exit_code, CliFailure, CmdResult,
    DeformMode, PlotMode, Report, T1Query,
};
pub use fanfile::FanFile;
