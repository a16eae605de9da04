//! Benchmark harness around the mirror-prox solvers: replayable experiment
//! configs, preset experiment families, and trace export.

pub mod config;
pub mod error;
pub mod experiment;
pub mod presets;
pub mod trace_file;

pub use config::{ExperimentConfig, MintyOperator, ProblemSpec, SolverId};
pub use error::{BenchError, Result};
pub use experiment::run_experiment;
pub use presets::{preset_configs, reproduce_preset, Preset, Scale};
pub use trace_file::{export_trace, ExportFormat, TraceFile, CSV_HEADER};

/// Environment variable overriding the output directory of `run` and
/// `reproduce`.
pub const OUTPUT_DIR_ENV: &str = "VIBENCH_OUT";
