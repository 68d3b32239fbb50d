//! Command-line harness for the isospin-coupled Dirac oscillator.
//!
//! Run configuration, CSV/JSON tables, the spectrum/evolve/sweep runs and
//! the verification checks behind `dirac-osc verify`.

pub mod config;
pub mod output;
pub mod run;
pub mod verify;

pub use config::{ConfigError, Format, Mode, RunConfig};
pub use output::{Cell, Table};
pub use run::{run_evolve, run_spectrum, run_sweep, SweepResult};
pub use verify::{run_check, run_verify, timed_check, Check};
