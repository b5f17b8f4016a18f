//! File formats, threaded drivers and the command line for `ribbonkb-core`.

pub mod app;
pub mod format;
pub mod par;

pub use app::{run_command, Outcome};
