use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vibench::{
    export_trace, reproduce_preset, run_experiment, ExperimentConfig, ExportFormat, Preset, Scale,
    TraceFile, OUTPUT_DIR_ENV,
};

/// Benchmark runner for adaptive variational-inequality solvers.
#[derive(Parser)]
#[command(name = "vibench", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment described by a JSON config file.
    Run {
        /// Path to the ExperimentConfig JSON document.
        config: PathBuf,
    },
    /// Re-run a canned experiment family.
    Reproduce {
        /// One of: fig1_case1, fig2_case2, fig_vi_identity, fig_vi_diag.
        preset: String,
        /// desk (seconds) or full (the original dimensions).
        #[arg(long, default_value = "desk")]
        scale: String,
        /// Output directory (defaults to ./traces/<preset>).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a stored trace file to another format.
    Export {
        /// Path to a .trace.json file.
        trace: PathBuf,
        /// csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn output_override() -> Option<PathBuf> {
    std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from)
}

fn print_summaries(files: &[TraceFile]) {
    for f in files {
        let s = &f.summary;
        let err = s
            .norm_err
            .map(|e| format!("{e:.3e}"))
            .unwrap_or_else(|| "-".into());
        let obj = s
            .objective
            .map(|o| format!("{o:.6}"))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<55} iters {:>7}  err {:>10}  obj {:>10}  [{}]",
            f.file_stem(),
            s.iters,
            err,
            obj,
            s.stop_reason
        );
    }
}

fn run(cli: Cli) -> vibench::Result<()> {
    match cli.command {
        Command::Run { config } => {
            let json = std::fs::read_to_string(&config)?;
            let mut cfg = ExperimentConfig::from_json(&json)?;
            if let Some(dir) = output_override() {
                cfg.output_dir = dir;
            }
            let files = run_experiment(&cfg)?;
            print_summaries(&files);
            println!(
                "{} trace file(s) written to {}",
                files.len(),
                cfg.output_dir.display()
            );
        }
        Command::Reproduce { preset, scale, out } => {
            let preset = Preset::parse(&preset)?;
            let scale = Scale::parse(&scale)?;
            let dir = output_override()
                .or(out)
                .unwrap_or_else(|| PathBuf::from("traces").join(preset.name()));
            let files = reproduce_preset(preset, scale, dir.clone())?;
            print_summaries(&files);
            println!("{} trace file(s) written to {}", files.len(), dir.display());
        }
        Command::Export { trace, format, out } => {
            let json = std::fs::read_to_string(&trace)?;
            let file = TraceFile::from_json(&json)?;
            let format = match format.as_str() {
                "csv" => ExportFormat::Csv,
                "json" => ExportFormat::Json,
                other => {
                    return Err(vibench::BenchError::Config(format!(
                        "unknown export format `{other}`"
                    )))
                }
            };
            export_trace(&file, format, &out)?;
            println!("exported {} to {}", trace.display(), out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
